"""Segmented prime sieve with residue-class counters and pair counting.

Everything here works on odd numbers only: a segment is a numpy boolean
array where entry ``i`` stands for the odd number ``lo + 2*i``.  The prime
2 is handled out of band.  Segments are independent work units; per-segment
tallies merge by simple addition in ascending ``x`` order, which is what
the optional thread pool relies on.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, DomainError, ParseError

HARD_CAP = 10**10
LONG_RUN_THRESHOLD = 10**9

#: default pass size: 2**18 sieve entries (32 KiB as a bitmap), i.e. a span
#: of 2**19 integers per segment.
DEFAULT_SEGMENT_BYTES = 1 << 15


@dataclass(frozen=True)
class SegmentPlan:
    """Shape of one sieve pass.

    ``segment_size`` is the bytes-equivalent span: one pass covers
    ``8 * segment_size`` odd numbers.  ``base_primes_limit`` is
    ``floor(sqrt(limit))`` for the run the plan was made for.
    """

    segment_size: int = DEFAULT_SEGMENT_BYTES
    base_primes_limit: int = 0

    def __post_init__(self):
        if self.segment_size < 2:
            raise DomainError("segment_size must be >= 2")

    @property
    def entries(self):
        return 8 * self.segment_size

    @classmethod
    def for_limit(cls, limit, segment_size=DEFAULT_SEGMENT_BYTES):
        return cls(segment_size=segment_size,
                   base_primes_limit=math.isqrt(limit))


@dataclass
class ResidueCounts:
    """Exact prime tallies pi(x; q, a) for all residues a coprime to q."""

    modulus: int
    x: int
    counts: dict = field(default_factory=dict)

    def total(self):
        return sum(self.counts.values())


def check_limit(limit, allow_long=False, extra=0):
    """Validate a sieve limit against the desk-scale policy."""
    limit = int(limit)
    if limit < 2:
        raise DomainError("sieve limit must be >= 2, got %d" % limit)
    if limit + extra > HARD_CAP:
        raise CapacityError("limit %d exceeds hard cap %d" % (limit, HARD_CAP))
    if limit > LONG_RUN_THRESHOLD and not allow_long:
        raise CapacityError(
            "limit %d is a long-running request; pass allow_long=True" % limit)
    return limit


def small_primes(n):
    """All primes <= n as an int64 array (plain Eratosthenes, n modest)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if mask[p]:
            mask[p * p:: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def _mark_segment(lo, n, odd_base):
    """Boolean mask over the n odd numbers lo, lo+2, ...; True = prime."""
    seg = np.ones(n, dtype=bool)
    hi = lo + 2 * (n - 1)
    for p in odd_base:
        p = int(p)
        if p * p > hi:
            break
        start = p * p
        if start < lo:
            start = ((lo + p - 1) // p) * p
            if start % 2 == 0:
                start += p
        seg[(start - lo) // 2:: p] = False
    return seg


def _segment_starts(limit, plan):
    span = 2 * plan.entries
    return range(3, limit + 1, span)


def _segments(limit, plan=None, workers=1):
    """Yield (lo, n, mask) for odd numbers lo..lo+2(n-1), ascending."""
    if plan is None:
        plan = SegmentPlan.for_limit(limit)
    base = small_primes(math.isqrt(limit))
    odd_base = base[1:] if len(base) and base[0] == 2 else base
    span = 2 * plan.entries

    def job(lo):
        hi = min(lo + span - 2, limit)
        if hi % 2 == 0:
            hi -= 1
        n = (hi - lo) // 2 + 1
        return lo, n, _mark_segment(lo, n, odd_base)

    starts = _segment_starts(limit, plan)
    if workers <= 1:
        for lo in starts:
            yield job(lo)
        return
    # bounded look-ahead so huge runs do not buffer every segment
    with ThreadPoolExecutor(max_workers=workers) as pool:
        pending = []
        it = iter(starts)
        for lo in it:
            pending.append(pool.submit(job, lo))
            if len(pending) > 2 * workers:
                yield pending.pop(0).result()
        for fut in pending:
            yield fut.result()


def iter_prime_blocks(limit, plan=None, allow_long=False, workers=1):
    """Yield ascending numpy arrays of primes covering 2..limit."""
    limit = check_limit(limit, allow_long)
    first = True
    for lo, n, seg in _segments(limit, plan, workers):
        vals = lo + 2 * np.flatnonzero(seg).astype(np.int64)
        if first:
            vals = np.concatenate(([2], vals)) if limit >= 2 else vals
            first = False
        if len(vals):
            yield vals
    if first and limit >= 2:
        yield np.array([2], dtype=np.int64)


def primes_up_to(limit, plan=None, allow_long=False, workers=1):
    """All primes <= limit as one array (materialized; desk scale only)."""
    blocks = list(iter_prime_blocks(limit, plan, allow_long, workers))
    if not blocks:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(blocks)


def count_primes(limit, plan=None, allow_long=False, workers=1):
    """pi(limit) without materializing the primes."""
    limit = check_limit(limit, allow_long)
    total = 1  # the prime 2
    for _, _, seg in _segments(limit, plan, workers):
        total += int(np.count_nonzero(seg))
    return total


def enumerate_primes(limit, plan=None, visitor=None, allow_long=False,
                     workers=1):
    """Invoke ``visitor`` once per prime <= limit, ascending; return pi(limit).

    With ``visitor=None`` this is just ``count_primes``.
    """
    if visitor is None:
        return count_primes(limit, plan, allow_long, workers)
    total = 0
    for block in iter_prime_blocks(limit, plan, allow_long, workers):
        for p in block:
            visitor(int(p))
        total += len(block)
    return total


def _residue_offset(lo, q, a):
    """First index i >= 0 with lo + 2i == a (mod q), and the index stride."""
    if q % 2 == 1:
        inv2 = (q + 1) // 2
        return ((a - lo) * inv2) % q, q
    # q even: only odd residues are reachable, index period is q/2
    if a % 2 == 0:
        raise DomainError("even residue %d unreachable for even modulus" % a)
    return (((a - lo) // 2) % (q // 2)), q // 2


def coprime_residues(q):
    return [a for a in range(q) if math.gcd(a, q) == 1] or [0]


def count_in_progressions(limit, q, checkpoints, plan=None, allow_long=False,
                          workers=1):
    """Exact pi(x; q, a) at every checkpoint, one sieve pass.

    Checkpoints must be ascending with max <= limit; counts cover every
    residue a coprime to q (for q = 1 the single class 0 holds pi(x)).
    """
    limit = check_limit(limit, allow_long)
    q = int(q)
    if q < 1:
        raise DomainError("modulus must be >= 1")
    checkpoints = [int(x) for x in checkpoints]
    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise DomainError("checkpoints must be strictly ascending")
    if checkpoints and checkpoints[-1] > limit:
        raise DomainError("checkpoint %d above limit %d"
                          % (checkpoints[-1], limit))

    residues = coprime_residues(q)
    running = dict.fromkeys(residues, 0)
    out = []
    pending = list(checkpoints)

    def snapshot(x, lo, n_upto, seg):
        counts = {}
        for a in residues:
            c = running[a]
            if n_upto > 0:
                i0, stride = _residue_offset(lo, q, a)
                c += int(np.count_nonzero(seg[i0:n_upto:stride]))
            if x >= 2 and math.gcd(2, q) == 1 and a == 2 % q:
                c += 1
            counts[a] = c
        out.append(ResidueCounts(q, x, counts))

    for lo, n, seg in _segments(limit, plan, workers):
        hi = lo + 2 * (n - 1)
        while pending and pending[0] <= hi + 1:
            x = pending.pop(0)
            n_upto = max(0, (min(x, hi) - lo) // 2 + 1) if x >= lo else 0
            snapshot(x, lo, n_upto, seg)
        for a in residues:
            i0, stride = _residue_offset(lo, q, a)
            running[a] += int(np.count_nonzero(seg[i0::stride]))
    for x in pending:  # checkpoints past the last odd segment value
        snapshot(x, 3, 0, None)
    return out


def _pair_segments(limit, gap, plan=None):
    """Yield (lo, n, pair_mask) where mask[i] marks p = lo+2i <= limit with
    p and p+gap both prime.  Every window is sieved ``gap`` past its own end
    so the partner lookup never crosses an unsieved boundary."""
    k = gap // 2
    if plan is None:
        plan = SegmentPlan.for_limit(limit + gap)
    base = small_primes(math.isqrt(limit + gap))
    odd_base = base[1:] if len(base) and base[0] == 2 else base
    span = 2 * plan.entries
    for lo in range(3, limit + 1, span):
        hi = min(lo + span - 2, limit)
        if hi % 2 == 0:
            hi -= 1
        n_in = (hi - lo) // 2 + 1
        seg = _mark_segment(lo, n_in + k, odd_base)
        yield lo, n_in, seg[:n_in] & seg[k:k + n_in]


def enumerate_prime_pairs(limit, gap, visitor=None, plan=None,
                          allow_long=False):
    """Count (and optionally visit) primes p <= limit with p+gap also prime."""
    gap = int(gap)
    if gap < 2 or gap % 2 != 0:
        raise DomainError("pair gap must be a positive even integer")
    limit = check_limit(limit, allow_long, extra=gap)
    total = 0
    for lo, n_in, mask in _pair_segments(limit, gap, plan):
        if visitor is not None:
            for i in np.flatnonzero(mask):
                visitor(int(lo + 2 * i))
        total += int(np.count_nonzero(mask))
    return total


def count_pairs_at(limit, gap, checkpoints, plan=None, allow_long=False):
    """pi_2k at each ascending checkpoint <= limit, single pass."""
    gap = int(gap)
    if gap < 2 or gap % 2 != 0:
        raise DomainError("pair gap must be a positive even integer")
    limit = check_limit(limit, allow_long, extra=gap)
    checkpoints = [int(x) for x in checkpoints]
    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise DomainError("checkpoints must be strictly ascending")
    if checkpoints and checkpoints[-1] > limit:
        raise DomainError("checkpoint above limit")
    running = 0
    out = []
    pending = list(checkpoints)
    for lo, n_in, mask in _pair_segments(limit, gap, plan):
        hi = lo + 2 * (n_in - 1)
        while pending and pending[0] <= hi + 1:
            x = pending.pop(0)
            n_upto = max(0, (min(x, hi) - lo) // 2 + 1) if x >= lo else 0
            out.append((x, running + int(np.count_nonzero(mask[:n_upto]))))
        running += int(np.count_nonzero(mask))
    for x in pending:
        out.append((x, running))
    return out


def pair_starts(limit, gap, plan=None, allow_long=False):
    """All p <= limit with p, p+gap prime, as one ascending array."""
    blocks = []
    gap = int(gap)
    if gap < 2 or gap % 2 != 0:
        raise DomainError("pair gap must be a positive even integer")
    limit = check_limit(limit, allow_long, extra=gap)
    for lo, n_in, mask in _pair_segments(limit, gap, plan):
        blocks.append(lo + 2 * np.flatnonzero(mask).astype(np.int64))
    if not blocks:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(blocks)


# ---------------------------------------------------------------------------
# checkpoint files: `# modulus=<q>` header, rows `x,<residue>:<count>,...`

def checkpoint_save(counts, path):
    """Write a list of ResidueCounts (one modulus) to a checkpoint file."""
    counts = list(counts)
    if counts:
        q = counts[0].modulus
        if any(rc.modulus != q for rc in counts):
            raise DomainError("checkpoint file holds a single modulus")
        if any(b.x <= a.x for a, b in zip(counts, counts[1:])):
            raise DomainError("checkpoint x values must be strictly ascending")
    with open(path, "w", encoding="utf-8") as fh:
        if not counts:
            return
        fh.write("# modulus=%d\n" % counts[0].modulus)
        for rc in counts:
            cols = ",".join("%d:%d" % (a, rc.counts[a])
                            for a in sorted(rc.counts))
            fh.write("%d,%s\n" % (rc.x, cols))


def checkpoint_load(path):
    """Parse a checkpoint file back into a list of ResidueCounts."""
    out = []
    modulus = None
    last_x = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("modulus="):
                    try:
                        modulus = int(body.split("=", 1)[1])
                    except ValueError:
                        raise ParseError("bad modulus header", lineno)
                continue
            if modulus is None:
                raise ParseError("data before `# modulus=` header", lineno)
            fields = line.split(",")
            try:
                x = int(fields[0])
            except ValueError:
                raise ParseError("bad x value %r" % fields[0], lineno)
            if last_x is not None and x <= last_x:
                raise ParseError("x values not strictly ascending", lineno)
            last_x = x
            counts = {}
            prev_res = -1
            for f in fields[1:]:
                try:
                    a_s, c_s = f.split(":")
                    a, c = int(a_s), int(c_s)
                except ValueError:
                    raise ParseError("bad residue field %r" % f, lineno)
                if a <= prev_res:
                    raise ParseError("residues not ascending", lineno)
                if c < 0:
                    raise ParseError("negative count", lineno)
                prev_res = a
                counts[a] = c
            out.append(ResidueCounts(modulus, x, counts))
    return out
