#!/usr/bin/env python3
"""Write the type-D shape census for a given rank to stdout or a file.

    python scripts/export_census.py --rank 5 -o d5.txt
"""

import argparse
import sys

from coxbrick.census import census, census_lines
from coxbrick.coxeter import DynkinType, Family


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rank", type=int, default=5)
    parser.add_argument("--cap", type=int, default=50_000)
    parser.add_argument("-o", "--output", help="output file (default: stdout)")
    args = parser.parse_args()
    lines = census_lines(census(DynkinType(Family.D, args.rank), cap=args.cap))
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(f"wrote {len(lines)} records to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
