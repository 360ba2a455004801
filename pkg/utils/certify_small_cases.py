# utils/certify_small_cases.py

import os
import sys
from dataclasses import replace

from tqdm import tqdm

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(PROJECT_ROOT, "src"))

from certificate import build_certificate  # noqa: E402
from coloring_io import save_to_json  # noqa: E402
from config import AppConfig  # noqa: E402
from errors import BoundRefutedError, RamseyError  # noqa: E402


def certify_cells(cells, config, out_dir):
    """
    Certify each (j, n) cell and save its certificate.

    Returns:
        Dict status -> list of (j, n)
    """
    outcome = {"exhausted": [], "formula_trusted": [], "refuted": [], "error": []}
    for j, n in tqdm(cells, desc="certify", unit="cell"):
        try:
            certificate, _ = build_certificate(j, n, config.certify)
        except BoundRefutedError as e:
            tqdm.write(f"❌ j={j}, n={n}: {e}")
            outcome["refuted"].append((j, n))
            continue
        except RamseyError as e:
            tqdm.write(f"❌ j={j}, n={n}: {e}")
            outcome["error"].append((j, n))
            continue
        save_to_json(certificate, os.path.join(out_dir, f"cert_j{j}_n{n}.json"))
        outcome[certificate["upper_bound"]["method"]].append((j, n))
    return outcome


if __name__ == "__main__":
    # ---- CONFIG ----
    cells = [(5, 2), (6, 2), (7, 2), (8, 2), (9, 3), (5, 4), (5, 5), (5, 10), (5, 20)]
    time_budget = 300.0  # seconds per upper-bound search

    config = AppConfig.load()
    config.certify = replace(config.certify, search=replace(config.certify.search, time_budget=time_budget))
    out_dir = config.output.get_output_dir()

    outcome = certify_cells(cells, config, out_dir)
    for status, done in outcome.items():
        print(f"  {status:<16} {done}")
