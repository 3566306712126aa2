"""Plot f_value against lmo_calls for every trace in a bench output directory."""
import argparse
import csv
import pathlib
from collections import defaultdict

import matplotlib.pyplot as plt


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("results", type=pathlib.Path)
    ap.add_argument("--out", type=pathlib.Path, default=None)
    args = ap.parse_args()

    by_instance = defaultdict(list)
    for path in sorted(args.results.glob("*__*.csv")):
        instance, method = path.stem.rsplit("__", 1)
        by_instance[instance].append((method, path))

    out = args.out or args.results
    for instance, runs in by_instance.items():
        fig, ax = plt.subplots(figsize=(6, 4))
        for method, path in runs:
            with path.open() as fh:
                rows = list(csv.DictReader(fh))
            calls = [int(r["lmo_calls"]) for r in rows]
            best, vals = float("inf"), []
            for r in rows:
                best = min(best, float(r["f_value"]))
                vals.append(best)
            ax.plot(calls, vals, label=method)
        ax.set_xlabel("LMO calls")
        ax.set_ylabel("best f(x)")
        ax.set_title(instance)
        ax.legend()
        fig.tight_layout()
        fig.savefig(out / f"{instance}.png", dpi=120)
        plt.close(fig)


if __name__ == "__main__":
    main()
