"""Search for positions X separating the nonzero sums listed in the intro from 0.

Prints one JSON line per (G, bound).  A miss only means nothing was found
inside the bound.

    python scripts/inequation_search.py --max-mass 8 --max-components 3
"""

import argparse
import json
import time

from cricket_pitch.algebra import EnumerationBound, distinguish

CLAIMS = ["1|1", "2|2", "1|1 + 1|1", "2|2 + 2|2", "2,1| + |1,2"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-mass", type=int, default=8)
    ap.add_argument("--max-components", type=int, default=2)
    ap.add_argument("--claim", action="append", help="G to compare with 0 (repeatable)")
    args = ap.parse_args()

    for g in args.claim or CLAIMS:
        for mass in range(args.max_mass + 1):
            bound = EnumerationBound(max_components=args.max_components, max_total_mass=mass)
            t0 = time.perf_counter()
            rep = distinguish(g, "0", bound)
            rec = {"G": g, "max_mass": mass, "max_components": args.max_components,
                   "searched": rep.searched, "witness": str(rep.witness) if rep.found else None,
                   "oGX": rep.g_outcome.name if rep.found else None,
                   "oX": rep.h_outcome.name if rep.found else None,
                   "seconds": round(time.perf_counter() - t0, 2)}
            print(json.dumps(rec), flush=True)
            if rep.found:
                break


if __name__ == "__main__":
    main()
