"""Write every exportable table for n = 0..MAX into a directory.

    python scripts/export_tables.py OUT_DIR [--max-n 2]
"""

import argparse
from pathlib import Path

from crgenus2.cli import EXPORT_KINDS, FORMATS, render_export
from crgenus2.config import RunConfig


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out", type=Path)
    ap.add_argument("--max-n", type=int, default=2)
    args = ap.parse_args()
    cfg = RunConfig.from_env()
    args.out.mkdir(parents=True, exist_ok=True)
    for kind in EXPORT_KINDS:
        for n in range(args.max_n + 1):
            if kind == "traces" and n < 3:
                continue
            for fmt in FORMATS:
                path = args.out / f"{kind}_n{n}.{fmt}"
                path.write_text(render_export(kind, fmt, 2, n, cfg), encoding="utf-8")
                print(path)


if __name__ == "__main__":
    main()
