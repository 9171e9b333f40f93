"""Regenerate the genus-1 Betti table from F_p point counts.

    python scripts/make_genus1_table.py [--max-n 5] [--out PATH]
"""

import argparse
import json
from pathlib import Path

from crgenus2.genus1 import PRIMES, TABLE_NAME, betti_by_point_count


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--out", type=Path,
                    default=Path(__file__).resolve().parents[1] / "src" / "crgenus2" / "data" / TABLE_NAME)
    args = ap.parse_args()
    table = {str(n): list(betti_by_point_count(n)) for n in range(1, args.max_n + 1)}
    doc = {
        "description": "Even Betti numbers of the compactified n-pointed genus-1 moduli space",
        "method": "stacky F_p point counts over genus-1 stable graphs, fitted over primes " + ", ".join(map(str, PRIMES)),
        "betti": table,
    }
    args.out.write_text(json.dumps(doc, indent=1) + "\n")
    for n, row in table.items():
        print(n, row, sum(row))


if __name__ == "__main__":
    main()
