"""Classifier time vs. board length on seeded random boards (heights 1..9).

    python scripts/classifier_scaling.py --seed 0
"""

import argparse
import json
import time

from cricket_pitch.classifier import classify
from cricket_pitch.cli import random_board


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    for exp in range(1, 8):
        n = 10**exp
        board = random_board(n, args.seed)
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            result, _ = classify(board)
            best = min(best, time.perf_counter() - t0)
        print(json.dumps({"bumps": n, "seed": args.seed, "outcome": result.name,
                          "millis": round(best * 1000, 3), "bumps_per_sec": round(n / best)}))


if __name__ == "__main__":
    main()
