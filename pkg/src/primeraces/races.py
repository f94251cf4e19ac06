"""Race bookkeeping over progression counts.

A race pits disjoint teams of residue classes mod q against each other.
Ledgers are immutable snapshots of per-team cumulative counts, either at
sparse checkpoints or densely at every prime up to a limit.  A "leader"
requires strict inequality; ties are a distinct state and generate their
own lead-change events.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import digamma

from . import sieve
from .errors import DomainError

TIE = "tie"


@dataclass(frozen=True)
class TeamSpec:
    label: str
    residues: frozenset

    def __init__(self, label, residues):
        object.__setattr__(self, "label", str(label))
        object.__setattr__(self, "residues", frozenset(int(r) for r in residues))
        if not self.residues:
            raise DomainError("team %r has no residues" % label)


@dataclass(frozen=True)
class LeadChangeEvent:
    x: int
    previous_leader: str
    new_leader: str


@dataclass(frozen=True)
class ErrorSample:
    x: int
    q: int
    a: int
    value: float


@dataclass(frozen=True)
class Histogram:
    bin_edges: np.ndarray
    counts: np.ndarray
    total: int
    underflow: int
    overflow: int


@dataclass(frozen=True)
class DensityEstimate:
    X: int
    kind: str
    value: float


@dataclass(frozen=True)
class WalkConfig:
    teams: int
    steps: int
    trials: int
    seed: int

    def __post_init__(self):
        if self.teams < 2:
            raise DomainError("need at least two teams (walk dimension >= 1)")
        if self.steps < 0 or self.trials < 1:
            raise DomainError("steps must be >= 0 and trials >= 1")


@dataclass(frozen=True)
class WalkTrial:
    returned_to_origin: bool
    first_return_step: int | None


@dataclass
class RaceLedger:
    """Per-team cumulative counts sampled at ascending x values.

    ``dense`` means the samples cover every prime up to ``limit``, which is
    what lead-change detection and density measures require.
    """

    modulus: int
    teams: list
    xs: np.ndarray
    counts: np.ndarray  # shape (len(teams), len(xs))
    dense: bool = False
    limit: int = 0
    labels: list = field(init=False)

    def __post_init__(self):
        self.labels = [t.label for t in self.teams]


def _validate_teams(q, teams):
    seen = set()
    for t in teams:
        for r in t.residues:
            if not (0 <= r < q):
                raise DomainError("residue %d outside 0..%d" % (r, q - 1))
            if math.gcd(r, q) != 1:
                raise DomainError("residue %d not coprime to %d" % (r, q))
            if r in seen:
                raise DomainError("residue %d claimed by two teams" % r)
            seen.add(r)


def run_race(counts, teams):
    """Aggregate ResidueCounts checkpoints into a sparse team ledger."""
    counts = list(counts)
    if not counts:
        raise DomainError("no checkpoints to race over")
    q = counts[0].modulus
    _validate_teams(q, teams)
    xs = np.array([rc.x for rc in counts], dtype=np.int64)
    mat = np.zeros((len(teams), len(counts)), dtype=np.int64)
    for j, rc in enumerate(counts):
        for i, t in enumerate(teams):
            mat[i, j] = sum(rc.counts[r] for r in t.residues)
    return RaceLedger(q, list(teams), xs, mat, dense=False, limit=int(xs[-1]))


def run_dense_race(limit, q, teams, plan=None, allow_long=False, workers=1):
    """Ledger sampled at every prime <= limit (the dense mode)."""
    _validate_teams(q, teams)
    primes = sieve.primes_up_to(limit, plan, allow_long, workers)
    res = primes % q
    mat = np.zeros((len(teams), len(primes)), dtype=np.int64)
    for i, t in enumerate(teams):
        hit = np.isin(res, list(t.residues))
        np.cumsum(hit, out=mat[i], dtype=np.int64)
    return RaceLedger(q, list(teams), primes, mat, dense=True, limit=int(limit))


def _states(ledger, place="first"):
    """Index of the strict holder of a place per sample (-1 = tie), with a
    virtual all-zero start.  place "first" tracks the leader, "last" the
    trailing team."""
    mat = ledger.counts
    k = mat.shape[0]
    if k == 1:
        return np.zeros(mat.shape[1] + 1, dtype=np.int64)
    if place == "first":
        edge = mat.max(axis=0)
        holder = mat.argmax(axis=0)
    elif place == "last":
        edge = mat.min(axis=0)
        holder = mat.argmin(axis=0)
    else:
        raise DomainError("place must be 'first' or 'last'")
    tied = (mat == edge).sum(axis=0) > 1
    state = np.where(tied, -1, holder).astype(np.int64)
    return np.concatenate(([-1], state))


def _label(ledger, idx):
    return TIE if idx < 0 else ledger.labels[idx]


def detect_lead_changes(ledger, place="first"):
    """Every transition of strict leadership or into/out of ties, in order.

    With place="last" the events track the trailing position instead (the
    other statistic worth watching in a many-team race)."""
    if not ledger.dense:
        raise DomainError("lead-change detection needs a dense ledger")
    state = _states(ledger, place)
    flips = np.flatnonzero(state[1:] != state[:-1])
    return [LeadChangeEvent(int(ledger.xs[i]),
                            _label(ledger, state[i]),
                            _label(ledger, state[i + 1]))
            for i in flips]


def lead_windows(ledger, label):
    """Maximal integer intervals [start, end] on which `label` leads strictly.

    Counts are step functions: a state reached at prime p holds on the
    integers p .. p'-1 where p' is the next sampled prime (or through
    ``ledger.limit`` for the final state).
    """
    if not ledger.dense:
        raise DomainError("lead windows need a dense ledger")
    idx = ledger.labels.index(label)
    state = _states(ledger)[1:]
    xs = ledger.xs
    windows = []
    on = state == idx
    if not on.any():
        return windows
    d = np.diff(on.astype(np.int8))
    starts = np.flatnonzero(d == 1) + 1
    ends = np.flatnonzero(d == -1) + 1
    if on[0]:
        starts = np.concatenate(([0], starts))
    for s_i, e_i in zip(starts, list(ends) + [len(xs)]):
        end_x = int(xs[e_i]) - 1 if e_i < len(xs) else int(ledger.limit)
        windows.append((int(xs[s_i]), end_x))
    return windows


def littlewood_bound(x):
    """Classical comparison curve sqrt(x) ln ln ln x / (2 ln x): the
    challenger's lead provably exceeds this envelope infinitely often."""
    if x <= math.e ** math.e:
        raise DomainError("the triple log needs x > e^e")
    return 0.5 * math.sqrt(x) * math.log(math.log(math.log(x))) / math.log(x)


def euler_phi(q):
    """Euler's totient by trial-division factorization."""
    q = int(q)
    if q < 1:
        raise DomainError("totient needs q >= 1")
    n, phi, p = q, q, 2
    while p * p <= n:
        if n % p == 0:
            phi -= phi // p
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        phi -= phi // n
    return phi


def error_term(x, q, a, pi_x, pi_x_q_a):
    """Deviation of pi(x;q,a) from the equidistributed share pi(x)/phi(q),
    normalized by sqrt(x)/ln(x)."""
    if x < 3:
        raise DomainError("error term needs x >= 3")
    if math.gcd(a, q) != 1:
        raise DomainError("residue %d not coprime to %d" % (a, q))
    value = (pi_x_q_a - pi_x / euler_phi(q)) * math.log(x) / math.sqrt(x)
    return ErrorSample(int(x), int(q), int(a), value)


def shanks_ratio(x, count_a, count_b):
    """(count_a - count_b) * ln(x) / sqrt(x), the histogram statistic."""
    if x < 3:
        raise DomainError("ratio needs x >= 3")
    return (count_a - count_b) * math.log(x) / math.sqrt(x)


def build_histogram(samples, bins, lo, hi):
    """Uniform histogram, bins closed on the left, last bin closed on both
    sides; samples outside [lo, hi] land in underflow/overflow tallies."""
    if bins < 1:
        raise DomainError("need at least one bin")
    if not lo < hi:
        raise DomainError("histogram range must satisfy lo < hi")
    s = np.asarray(list(samples), dtype=float)
    under = int(np.count_nonzero(s < lo))
    over = int(np.count_nonzero(s > hi))
    inside = s[(s >= lo) & (s <= hi)]
    counts, edges = np.histogram(inside, bins=bins, range=(lo, hi))
    return Histogram(edges, counts.astype(np.int64), int(s.size), under, over)


def _intervals(ledger, X):
    """Constancy intervals of the dense count step functions, clipped to
    [2, X]: arrays (starts, ends, sample_index) where index -1 is the
    all-zero state before the first prime."""
    xs = ledger.xs
    n = int(np.searchsorted(xs, X, side="right"))
    starts = np.concatenate(([2], xs[:n]))
    ends = np.concatenate((xs[:n] - 1, [X]))
    idx = np.arange(-1, n)
    ok = starts <= ends
    return starts[ok], ends[ok], idx[ok]


def leader_density(ledger, condition, X, kind):
    """Density of {2 <= x <= X : condition} under the chosen measure.

    ``condition`` maps the (teams x samples) count matrix to a boolean
    per-sample array; between primes the counts (hence the predicate) are
    constant.  kind "logarithmic" is (1/ln X) * sum 1/x over qualifying
    integers (the exact sum, evaluated via digamma differences); kind
    "natural" is the plain proportion of qualifying integers.
    """
    if X < 2:
        raise DomainError("density needs X >= 2")
    if not ledger.dense:
        raise DomainError("density needs a dense ledger")
    if X > ledger.limit:
        raise DomainError("X beyond the ledger limit")
    flags = np.asarray(condition(ledger.counts), dtype=bool)
    if flags.shape != ledger.xs.shape:
        raise DomainError("condition must yield one flag per sample")
    starts, ends, idx = _intervals(ledger, X)
    zero_state = np.zeros((ledger.counts.shape[0], 1), dtype=np.int64)
    flag0 = bool(np.asarray(condition(zero_state), dtype=bool)[0])
    on = np.where(idx >= 0, flags[np.maximum(idx, 0)], flag0)
    if kind == "logarithmic":
        mass = np.sum((digamma(ends[on] + 1.0) - digamma(starts[on] * 1.0)))
        value = float(mass / math.log(X))
    elif kind == "natural":
        value = float(np.sum(ends[on] - starts[on] + 1) / X)
    else:
        raise DomainError("kind must be 'logarithmic' or 'natural'")
    return DensityEstimate(int(X), kind, value)


def strictly_ahead(team_index, others=None):
    """Condition factory: team `team_index` strictly above all `others`."""
    def cond(mat):
        rest = [i for i in range(mat.shape[0]) if i != team_index] \
            if others is None else list(others)
        out = np.ones(mat.shape[1], dtype=bool)
        for j in rest:
            out &= mat[team_index] > mat[j]
        return out
    return cond


def is_prime(q):
    if q < 2:
        return False
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            return False
    return True


def squares_mod(q):
    """Nonzero quadratic residues and nonresidues of an odd prime modulus."""
    if q % 2 == 0 or not is_prime(q):
        raise DomainError("squares/nonsquares split needs an odd prime modulus")
    s = sorted({pow(b, 2, q) for b in range(1, q)})
    n = sorted(set(range(1, q)) - set(s))
    return set(s), set(n)


# ---------------------------------------------------------------------------
# tie model: random walk on the (k-1)-dimensional difference lattice

_SM_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_SM_M1 = np.uint64(0xBF58476D1CE4E5B9)
_SM_M2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed, start, count):
    """Streamed SplitMix64 outputs seed+start .. seed+start+count-1.

    Counter-based, so any subsequence is reproducible independent of how
    the stream is chunked; this is the PRNG fixed for all walk trials.
    """
    with np.errstate(over="ignore"):
        n = np.arange(start, start + count, dtype=np.uint64)
        z = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + (n + np.uint64(1)) * _SM_GAMMA
        z = (z ^ (z >> np.uint64(30))) * _SM_M1
        z = (z ^ (z >> np.uint64(27))) * _SM_M2
        return z ^ (z >> np.uint64(31))


def _trial_seed(seed, trial):
    return int(splitmix64(seed, trial, 1)[0])


def simulate_tie_walk(config):
    """Run the tie-model walk: per step one of k vectors, chosen uniformly,
    is added to the (k-1)-dimensional count-difference vector; record
    whether and when each trial first returns to the origin."""
    k = config.teams
    dim = k - 1
    out = []
    for trial in range(config.trials):
        if config.steps == 0:
            out.append(WalkTrial(False, None))
            continue
        choices = (splitmix64(_trial_seed(config.seed, trial), 0,
                              config.steps) % np.uint64(k)).astype(np.int8)
        at_origin = np.ones(config.steps, dtype=bool)
        for d in range(dim):
            delta = (choices == d).astype(np.int32) - (choices == d + 1)
            at_origin &= np.cumsum(delta) == 0
        hits = np.flatnonzero(at_origin)
        if len(hits):
            out.append(WalkTrial(True, int(hits[0]) + 1))
        else:
            out.append(WalkTrial(False, None))
    return out


def return_fraction(trials):
    trials = list(trials)
    return sum(t.returned_to_origin for t in trials) / len(trials)
