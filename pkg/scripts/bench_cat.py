"""Actions per path and time per path across n, as a table and optional plot.

    python scripts/bench_cat.py --lo 4 --hi 18 --plot bench.png
"""
import argparse

from dyckcat.cli import bench_record
from dyckcat import kernel


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=4)
    ap.add_argument("--hi", type=int, default=16)
    ap.add_argument("--plot")
    args = ap.parse_args()

    kernel.warmup()
    rows = [bench_record(n) for n in range(args.lo, args.hi + 1)]
    print(f"{'n':>3} {'paths':>12} {'actions/path':>13} {'ns/path':>9}")
    for r in rows:
        print(f"{r['n']:>3} {r['paths']:>12} {r['actions_per_path']:>13.4f} "
              f"{r['wall_time'] / r['paths'] * 1e9:>9.2f}")

    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        ns = [r["n"] for r in rows]
        fig, (a, b) = plt.subplots(1, 2, figsize=(9, 3.5))
        a.plot(ns, [r["actions_per_path"] for r in rows], "o-")
        a.set_xlabel("n")
        a.set_ylabel("elementary actions / path")
        a.set_ylim(bottom=0)
        b.plot(ns, [r["wall_time"] / r["paths"] * 1e9 for r in rows], "o-")
        b.set_xlabel("n")
        b.set_ylabel("ns / path")
        b.set_ylim(bottom=0)
        fig.tight_layout()
        fig.savefig(args.plot, dpi=120)
        print(f"wrote {args.plot}")


if __name__ == "__main__":
    main()
