"""Warm-up: building the line x - 1/2 out of sine waves.

The same superposition idea later rebuilds prime-count errors from
L-function zeros; here the frequencies are just 2 pi n.
"""

from primeraces import waves

print("partial sums at x = 0.25 (target -0.25):")
for n in (1, 2, 10, 100, 1000):
    v = waves.sawtooth_partial_sum(0.25, n)
    print("  %4d waves: %+.6f  (error %.2e)" % (n, v, abs(v + 0.25)))

print("\nacross the interval with 100 waves:")
for x in (0.05, 0.25, 0.5, 0.75, 0.95):
    v = waves.sawtooth_partial_sum(x, 100)
    print("  x=%.2f  sum=%+.5f  target=%+.5f" % (x, v, x - 0.5))
