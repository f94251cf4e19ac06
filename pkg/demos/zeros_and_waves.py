"""Summing waves over critical-line zeros to recover prime-count errors.

Finds zero ordinates for the zeta function and the mod-4 L-series, builds
truncated wave sums 1 + 2 sum sin(g ln x)/g, and measures how the fit to
sieve truth improves with more zeros.  Writes a CSV and an SVG next to
this script.
"""

import os

import numpy as np

from primeraces import lfunctions as lf
from primeraces import sieve, waves

HERE = os.path.dirname(os.path.abspath(__file__))

ztab = lf.find_zeros(lf.ZETA, 120)
print("first zeta ordinates:", np.round(ztab.ordinates[:5], 4))

btab = lf.find_zeros(lf.BETA4, 60)
print("first mod-4 ordinates:", np.round(btab.ordinates[:5], 4))

grid = waves.log_grid(10**4, 10**6, 400)
primes = sieve.primes_up_to(10**6)
pi_at = np.searchsorted(primes, np.floor(grid), side="right")

li_vals = np.array([lf.li(float(x)) for x in grid])
truth = waves.WaveSeries(0, grid,
                         (li_vals - pi_at) * np.log(grid) / np.sqrt(grid))
print("\nnormalized li - pi target, fit by zero count:")
for n in (5, 10, 25, 50):
    stats = waves.compare_series(truth, waves.wave_series(ztab, grid, n))
    print("  %3d zeros: rms %.4f  correlation %.3f"
          % (n, stats.rms, stats.correlation))

res = primes % 4
c3, c1 = np.cumsum(res == 3), np.cumsum(res == 1)
truth4 = waves.WaveSeries(0, grid, (c3[pi_at - 1] - c1[pi_at - 1])
                          * np.log(grid) / np.sqrt(grid))
cols = [("truth", truth4.values)]
print("\nmod-4 target, fit by zero count:")
for n in (5, 15, 40):
    approx = waves.wave_series(btab, grid, n)
    cols.append(("approx_%d" % n, approx.values))
    stats = waves.compare_series(truth4, approx)
    print("  %3d zeros: rms %.4f  correlation %.3f"
          % (n, stats.rms, stats.correlation))

csv_path = os.path.join(HERE, "mod4_waves.csv")
svg_path = os.path.join(HERE, "mod4_waves.svg")
waves.write_series_csv(csv_path, grid, cols)
with open(svg_path, "w", encoding="utf-8") as fh:
    fh.write(waves.render_series_svg(grid, cols, title="mod-4 wave sums"))
print("\nwrote", csv_path)
print("wrote", svg_path)
