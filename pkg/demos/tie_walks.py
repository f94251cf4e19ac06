"""Why three-way races keep tying and four-way races stop.

The vector of count differences between k teams moves on a (k-1)-dim
lattice, one unit step per prime.  Walks in one or two dimensions return
to the origin with probability one; in three or more they escape.  The
model predicts infinitely many all-way ties for two and three teams only.
"""

from primeraces import races

for teams in (2, 3, 4, 5):
    cfg = races.WalkConfig(teams=teams, steps=10**5, trials=200, seed=7)
    trials = races.simulate_tie_walk(cfg)
    frac = races.return_fraction(trials)
    returned = [t.first_return_step for t in trials if t.returned_to_origin]
    mean_step = sum(returned) / len(returned) if returned else float("nan")
    print("%d teams (walk dim %d): returned %5.1f%%  "
          "mean first return step %.0f"
          % (teams, teams - 1, 100 * frac, mean_step))

print("\nsame seed, same walk, bit for bit:")
cfg = races.WalkConfig(teams=3, steps=1000, trials=3, seed=42)
print(" ", races.simulate_tie_walk(cfg) == races.simulate_tie_walk(cfg))
