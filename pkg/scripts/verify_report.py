"""Run the verification suite and write a JSON report.

    python scripts/verify_report.py [--scope all] [--out report.json]
"""

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from crgenus2.verify import SCOPES, exit_code, run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--scope", choices=SCOPES, default="all")
    ap.add_argument("--out", type=Path, default=Path("verify_report.json"))
    args = ap.parse_args()
    items = run(args.scope)
    args.out.write_text(json.dumps([i.record() for i in items], indent=2, ensure_ascii=False) + "\n")
    tally = Counter(i.status for i in items)
    print(f"{args.out}: {tally['pass']} pass, {tally['fail']} fail, {tally['flagged']} flagged")
    return exit_code(items)


if __name__ == "__main__":
    sys.exit(main())
