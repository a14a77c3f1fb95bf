"""Plot one or more `covertcap bound` CSV files: rate vs n on a log axis.

    covertcap bound --config sweep.toml -o a.csv
    python docs/plot_sweep.py a.csv b.csv
"""
import csv
import sys

import matplotlib.pyplot as plt


def read(path):
    with open(path) as f:
        rows = [r for r in csv.DictReader(line for line in f if not line.startswith("#"))]
    n = [float(r["n"]) for r in rows]
    rate = [float(r["rate"]) for r in rows]
    asym = [float(r["asymptotic_rate"]) if r["asymptotic_rate"] != "capacity-mode" else None for r in rows]
    n_min = float(rows[0]["n_min"]) if "n_min" in rows[0] else None
    return n, rate, asym, n_min


for path in sys.argv[1:]:
    n, rate, asym, n_min = read(path)
    (line,) = plt.semilogx(n, rate, label=path)
    if all(a is not None for a in asym):
        plt.semilogx(n, asym, "--", color=line.get_color())
    if n_min is not None:
        plt.axvline(n_min, linestyle="-.", color=line.get_color())

plt.xlabel("blocklength n")
plt.ylabel("rate (bits/channel use)")
plt.ylim(bottom=0)
plt.legend()
plt.show()
