# utils/reproduce_table.py

import os
import sys
from collections import Counter

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(PROJECT_ROOT, "src"))

from formula import regime_table  # noqa: E402


def write_table(table, out_dir, stem):
    os.makedirs(out_dir, exist_ok=True)
    tsv_path = os.path.join(out_dir, f"{stem}.tsv")
    json_path = os.path.join(out_dir, f"{stem}.json")
    with open(tsv_path, 'w') as f:
        f.write(table.to_tsv())
    with open(json_path, 'w') as f:
        f.write(table.to_json() + "\n")
    print(f"✅ Table saved to: {tsv_path} and {json_path}")
    return tsv_path, json_path


def summarize(table):
    counts = Counter(str(cell.regime) for cell in table.cells.values())
    for regime, count in sorted(counts.items()):
        print(f"  {regime:<18} {count:>5} cells")
    print(f"  boundary cells: {len(table.boundary_cells())}")


if __name__ == "__main__":
    # ---- CONFIG ----
    j_max, n_max = 30, 30
    strict = False  # True marks the self-contradictory published cells instead of resolving them

    table = regime_table(j_max, n_max, strict=strict)
    out_dir = os.path.join(PROJECT_ROOT, "assets", "tables")
    write_table(table, out_dir, f"m_j_nK2_C7_{j_max}x{n_max}{'_strict' if strict else ''}")
    summarize(table)
