# src/coloring_io.py

"""
Reading and writing colorings and certificates.

Colorings are stored as JSON {"shape": {"parts": [...]}, "red_edges": [[u, v], ...]}
or as graph6 of the red graph with a "<stem>.shape.json" sidecar.
"""

import json
import logging
import os

from errors import CertificateError, HostCapExceeded, RamseyError
from host_model import Coloring, PartiteShape, check_caps, decode_graph6, encode_graph6

logger = logging.getLogger(__name__)


def load_json(path):
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise CertificateError(f"{path} is not valid JSON: {e}") from e
    except OSError as e:
        raise CertificateError(f"cannot read {path}: {e}") from e


def save_to_json(data, path):
    with open(path, 'w') as f:
        json.dump(data, f, indent=2)
    print(f"✅ Saved to: {path}")


def shape_sidecar_path(graph6_path):
    stem, _ = os.path.splitext(graph6_path)
    return f"{stem}.shape.json"


def load_coloring(path, limits=None):
    """Load a coloring from JSON, or from graph6 plus its shape sidecar; the host must fit `limits`."""
    if path.endswith(".g6"):
        shape = PartiteShape.from_json(load_json(shape_sidecar_path(path)))
        check_caps(shape, limits)
        try:
            with open(path, 'r') as f:
                text = f.read()
        except OSError as e:
            raise CertificateError(f"cannot read {path}: {e}") from e
        return Coloring(shape, decode_graph6(text, shape))
    data = load_json(path)
    try:
        check_caps(PartiteShape.from_json(data["shape"]), limits)
        return Coloring.from_json(data)
    except (KeyError, TypeError) as e:
        raise CertificateError(f"{path}: not a coloring file") from e
    except HostCapExceeded:
        raise
    except RamseyError as e:
        raise CertificateError(f"{path}: {e}") from e


def save_coloring(coloring, directory, stem):
    """
    Write <stem>.json, <stem>.g6 and <stem>.shape.json under `directory`.

    Returns:
        List of written paths
    """
    os.makedirs(directory, exist_ok=True)
    json_path = os.path.join(directory, f"{stem}.json")
    g6_path = os.path.join(directory, f"{stem}.g6")
    save_to_json(coloring.to_json(), json_path)
    with open(g6_path, 'w') as f:
        f.write(encode_graph6(coloring.red) + "\n")
    save_to_json(coloring.shape.to_json(), shape_sidecar_path(g6_path))
    logger.debug("wrote coloring %s", stem)
    return [json_path, g6_path, shape_sidecar_path(g6_path)]
