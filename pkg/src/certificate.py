# src/certificate.py

"""
Certificates: one JSON document per (j, n) cell holding the claimed value,
the lower-bound witness and the upper-bound evidence.

A certificate validates from its own contents: the embedded coloring is
re-checked with the detectors and every invariant field is recomputed.
"""

import logging
from dataclasses import asdict
from datetime import datetime, timezone

from config import CERT_SCHEMA, CertifyConfig, __version__
from constructions import DEFAULT_CYCLE, lower_bound_coloring, verify_good
from errors import BoundRefutedError, DomainError, RamseyError
from formula import AMBIGUOUS_CELLS, RamseyValue, ramsey_value
from host_model import Coloring, PartiteShape, check_caps, decode_graph6, encode_graph6
from search import ExhaustionCertificate, certify_upper_bound

logger = logging.getLogger(__name__)

CITATION = "formula value for m_j(nK_2, C_7) (published piecewise characterisation)"


def _now():
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def build_certificate(j, n, config=None, limits=None):
    """
    Assemble the certificate for one cell.

    Returns:
        (certificate dict, UpperBoundResult)
    """
    config = config or CertifyConfig()
    started = _now()
    result = ramsey_value(j, n)
    if result.value.is_infinite:
        raise DomainError(f"m_{j}({n}K_2, C_7) is infinite; nothing to certify")
    m = result.value.t

    lower = None
    coloring = lower_bound_coloring(j, n, limits=limits)
    if coloring is not None:
        report = verify_good(coloring, n)
        lower = {
            "shape": coloring.shape.to_json(),
            "graph6": encode_graph6(coloring.red),
            "report": report.to_json(),
        }

    upper_result = certify_upper_bound(j, n, config, limits)
    if upper_result.status == "refuted":
        raise BoundRefutedError(
            f"upper bound m_{j}({n}K_2, C_7) <= {m} is refuted: K_{{{j}x{m}}} has the good coloring "
            f"{encode_graph6(upper_result.counterexample.red)} (graph6 of red)",
            upper_result.counterexample)
    if upper_result.verified:
        upper = {"method": "exhausted", "exhaustion": upper_result.certificate.to_json()}
    else:
        upper = {"method": "formula_trusted", "citation": CITATION, "reason": upper_result.reason}

    certificate = {
        "schema": CERT_SCHEMA,
        "tool_version": __version__,
        "j": j,
        "n": n,
        "L": DEFAULT_CYCLE,
        "claimed_value": result.value.to_json(),
        "regime": str(result.regime),
        "paper_ambiguous": result.ambiguous,
        "lower_bound": lower,
        "upper_bound": upper,
        "options": asdict(config.search),
        "timestamps": {"started": started, "finished": _now()},
    }
    if result.ambiguous:
        certificate["ambiguity_note"] = AMBIGUOUS_CELLS[(n, j)]
    return certificate, upper_result


def validate_certificate(data, limits=None):
    """
    Re-check a certificate from its own contents.

    Returns:
        List of problems; empty when the certificate is valid
    """
    problems = []
    if not isinstance(data, dict):
        return ["certificate must be a JSON object"]
    try:
        if data.get("schema") != CERT_SCHEMA:
            problems.append(f"schema is {data.get('schema')!r}, expected {CERT_SCHEMA!r}")
        j, n = int(data["j"]), int(data["n"])
        length = int(data.get("L", DEFAULT_CYCLE))
        claimed = RamseyValue.from_json(data["claimed_value"])
        expected = ramsey_value(j, n)
        if claimed != expected.value:
            problems.append(f"claimed value {claimed} differs from formula value {expected.value}")
        if data.get("regime") != str(expected.regime):
            problems.append(f"regime {data.get('regime')!r} differs from {expected.regime}")
        if claimed.is_infinite:
            problems.append("infinite values carry no certificate")
            return problems

        m = claimed.t
        lower = data.get("lower_bound")
        if m >= 2:
            if not lower:
                problems.append(f"value {m} needs a lower-bound coloring")
            else:
                shape = PartiteShape.from_json(lower["shape"])
                check_caps(shape, limits)
                if shape != PartiteShape.uniform(j, m - 1):
                    problems.append(f"lower-bound host {list(shape.part_sizes)} is not K_{{{j}x{m - 1}}}")
                coloring = Coloring(shape, decode_graph6(lower["graph6"], shape))
                report = verify_good(coloring, n, length)
                if not report.is_good:
                    problems.append(f"embedded coloring is not good: nu(red)={report.nu_red}, "
                                    f"blue cycle={report.cycle_witness}")
                if lower.get("report", {}).get("nu_red") != report.nu_red:
                    problems.append("recorded nu(red) does not match the embedded coloring")
        elif lower:
            problems.append("value 1 has an empty host and no lower-bound coloring")

        upper = data.get("upper_bound") or {}
        method = upper.get("method")
        if method == "exhausted":
            exhaustion = ExhaustionCertificate.from_json(upper["exhaustion"])
            if exhaustion.shape != PartiteShape.uniform(j, m):
                problems.append(f"exhaustion ran on {list(exhaustion.shape.part_sizes)}, not K_{{{j}x{m}}}")
            if exhaustion.n != n or exhaustion.length != length:
                problems.append("exhaustion was run for a different (n, L)")
        elif method == "formula_trusted":
            if not upper.get("citation"):
                problems.append("formula_trusted upper bound needs a citation")
        else:
            problems.append(f"unknown upper-bound method {method!r}")
    except (KeyError, TypeError, ValueError, RamseyError) as e:
        problems.append(f"malformed certificate: {e}")
    return problems
