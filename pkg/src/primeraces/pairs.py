"""Prime-pair races: pair counting, the twin-prime constant and singular
factors, the pair-count prediction 2*C2*Li2(x), and the renormalized race
across gaps.

Renormalized counts pi'_2k = pi_2k * prod_{p|k, p>2} (p-2)/(p-1) are exact
rationals; leadership comparisons scale every team to a common denominator
and compare integers, so ties are decided exactly, never through floats.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import sieve
from .errors import DomainError
from .lfunctions import QuadratureConfig, li2
from .races import RaceLedger, TeamSpec, detect_lead_changes


@dataclass(frozen=True)
class GapSpec:
    gap: int

    def __post_init__(self):
        if self.gap < 2 or self.gap % 2 != 0:
            raise DomainError("gap must be a positive even integer")

    @property
    def k(self):
        return self.gap // 2


@dataclass
class PairCounts:
    gap: GapSpec
    xs: np.ndarray
    counts: np.ndarray


@dataclass(frozen=True)
class HLConstants:
    c2: float
    c2_error_bound: float

    def __post_init__(self):
        if not (0 < self.c2 < 1 and self.c2_error_bound > 0):
            raise DomainError("constants out of range")


def compute_c2(prime_limit=10**7):
    """Partial product of (1 - 1/(p-1)^2) over odd primes <= prime_limit.

    The dropped tail lies in [1 - sum_{n>limit} 1/(n-1)^2, 1], so the true
    constant sits within c2 * 1/(limit-1) below the returned value.
    """
    if prime_limit < 3:
        raise DomainError("need at least one odd prime")
    primes = sieve.primes_up_to(prime_limit, allow_long=True)[1:]
    p = primes.astype(float)
    c2 = float(np.exp(np.sum(np.log1p(-1.0 / ((p - 1.0) ** 2)))))
    return HLConstants(c2, c2 / (prime_limit - 1))


def singular_factor(k):
    """prod over odd primes p dividing k of (p-1)/(p-2), as (num, den)."""
    k = int(k)
    if k < 1:
        raise DomainError("k must be >= 1")
    num = den = 1
    n = k
    while n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            num *= p - 1
            den *= p - 2
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        num *= n - 1
        den *= n - 2
    g = math.gcd(num, den)
    return num // g, den // g


def singular_factor_value(k):
    num, den = singular_factor(k)
    return num / den


def normalized_count(counts):
    """pi'_2k series: raw counts times the reciprocal singular factor."""
    num, den = singular_factor(counts.gap.k)
    return counts.counts * (den / num)


def hl_prediction(x, constants=None, cfg=None):
    """The common pair-count prediction 2 * C2 * Li2(x)."""
    constants = constants or compute_c2()
    cfg = cfg or QuadratureConfig()
    if x < 2:
        raise DomainError("prediction needs x >= 2")
    return 2.0 * constants.c2 * li2(x, cfg)


def count_pairs(limit, gap, checkpoints=None, plan=None, allow_long=False):
    """pi_2k at the given checkpoints (default: just the limit)."""
    gs = gap if isinstance(gap, GapSpec) else GapSpec(int(gap))
    checkpoints = [int(limit)] if checkpoints is None else list(checkpoints)
    rows = sieve.count_pairs_at(limit, gs.gap, checkpoints, plan, allow_long)
    xs = np.array([x for x, _ in rows], dtype=np.int64)
    cs = np.array([c for _, c in rows], dtype=np.int64)
    return PairCounts(gs, xs, cs)


def _scaled_teams(gaps):
    """Common-denominator integer scale factors for exact normalized
    comparisons: scale_g = den_lcm * num_rec / den_rec with the reciprocal
    singular factor num_rec/den_rec = (p-2)/(p-1) products."""
    recs = []
    for g in gaps:
        num, den = singular_factor(g.k)
        recs.append((den, num))  # reciprocal: multiply counts by den/num
    lcm = 1
    for _, num in recs:
        lcm = lcm * num // math.gcd(lcm, num)
    return [den * (lcm // num) for den, num in recs]


def pair_race(gaps, limit, checkpoints=None, dense=False, plan=None,
              allow_long=False, place="first"):
    """Race the renormalized pair counts across gaps.

    Returns (ledger, events).  Dense mode samples at every x where any
    gap's count changes, so place changes are exact; events follow the
    same strict-leader/tie convention as the progression races, tracking
    first place by default (pass place="last", or run detect_lead_changes
    on the returned ledger, for the trailing position).
    """
    gaps = [g if isinstance(g, GapSpec) else GapSpec(int(g)) for g in gaps]
    if len({g.gap for g in gaps}) != len(gaps):
        raise DomainError("gaps must be distinct")
    scales = _scaled_teams(gaps)
    teams = [TeamSpec(str(g.gap), {1}) for g in gaps]  # labels only

    if dense:
        starts = [sieve.pair_starts(limit, g.gap, plan, allow_long)
                  for g in gaps]
        xs = np.unique(np.concatenate(starts)) if starts else np.empty(0)
        mat = np.zeros((len(gaps), len(xs)), dtype=np.int64)
        for i, st in enumerate(starts):
            mat[i] = np.searchsorted(st, xs, side="right") * scales[i]
        ledger = RaceLedger(0, teams, xs, mat, dense=True, limit=int(limit))
        return ledger, detect_lead_changes(ledger, place)

    checkpoints = [int(limit)] if checkpoints is None else list(checkpoints)
    mat = np.zeros((len(gaps), len(checkpoints)), dtype=np.int64)
    for i, g in enumerate(gaps):
        pc = count_pairs(limit, g, checkpoints, plan, allow_long)
        mat[i] = pc.counts * scales[i]
    ledger = RaceLedger(0, teams, np.array(checkpoints, dtype=np.int64),
                        mat, dense=False, limit=int(limit))
    return ledger, []


def round_half_away(v):
    return math.floor(v + 0.5) if v >= 0 else math.ceil(v - 0.5)


def twin_table(gaps, checkpoints, limit=None, constants=None, cfg=None,
               allow_long=False):
    """Rows of the renormalized race table: one dict per (x, gap) with the
    raw count, normalized count, prediction, and the difference under both
    rounding conventions (exact-then-round, and subtract-the-floored-
    prediction as the published tables do)."""
    gaps = [g if isinstance(g, GapSpec) else GapSpec(int(g)) for g in gaps]
    checkpoints = sorted(int(x) for x in checkpoints)
    limit = limit or checkpoints[-1]
    constants = constants or compute_c2()
    rows = []
    preds = {x: hl_prediction(x, constants, cfg) for x in checkpoints}
    for g in gaps:
        pc = count_pairs(limit, g, checkpoints, allow_long=allow_long)
        norm = normalized_count(pc)
        for x, raw, nv in zip(pc.xs, pc.counts, norm):
            x = int(x)
            rows.append({
                "x": x,
                "gap": g.gap,
                "raw": int(raw),
                "normalized": float(nv),
                "hl_prediction": preds[x],
                "difference": float(nv - preds[x]),
                "difference_rounded": round_half_away(nv - preds[x]),
                "difference_vs_floored": round_half_away(
                    nv - math.floor(preds[x])),
            })
    return rows
