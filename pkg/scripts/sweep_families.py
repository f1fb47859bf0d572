"""T(G) against chi(K(G)) over the generated families.

    python scripts/sweep_families.py [--json out.json] [--timeout SEC]
"""

import argparse
import json

from tesscover.verify import format_rows, parse_family_range, sweep

DEFAULT_RANGES = [
    "wheel:3-12",
    "windmill:2-8",
    "windmill:2-5:s=4",
    "extended_wheel:2-5",
    "star:1-8",
    "complete:1-7",
    "cycle:3-10",
    "path:2-8",
    "petersen",
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("ranges", nargs="*", default=DEFAULT_RANGES)
    ap.add_argument("--json", help="also write the rows here")
    ap.add_argument("--timeout", type=float, default=60.0)
    args = ap.parse_args()

    specs = [s for r in args.ranges for s in parse_family_range(r)]
    rows = sweep(specs, timeout=args.timeout)
    print(format_rows(rows))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
