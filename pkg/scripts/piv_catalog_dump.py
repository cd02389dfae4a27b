#!/usr/bin/env python3
"""Generate and verify the rational solution catalog up to a parameter
bound, then dump it as JSON (one object per solution).

Usage: python scripts/piv_catalog_dump.py [max_param] > catalog.json
"""

import json
import sys

from hermitepw.painleve import piv_catalog


def main():
    bound = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    entries = []
    for sol, rep in piv_catalog(bound):
        item = sol.to_json()
        item["verified"] = rep.ok
        item["degree"] = sol.y.num.degree - sol.y.den.degree
        entries.append(item)
    json.dump(entries, sys.stdout, sort_keys=True, indent=1)
    sys.stdout.write("\n")
    ok = sum(1 for e in entries if e["verified"])
    print(f"{ok}/{len(entries)} solutions verified", file=sys.stderr)


if __name__ == "__main__":
    main()
