"""Analytic layer: logarithmic integrals, Chebyshev psi, zeta and Dirichlet
L evaluation on the half-plane sigma > 0, critical-line zero finding, and
zero-table file I/O.

Zeta is evaluated through the alternating (eta) series continuation
zeta(s) = (1 - 2^(1-s))^-1 * [1/1^s - 1/2^s + 1/3^s - ...], accelerated by
the Chebyshev-coefficient scheme of Cohen, Rodriguez Villegas and Zagier:
with n terms the truncation error decays like (3+sqrt(8))^-n times a factor
growing like e^(pi*|t|/2), so the term count is chosen from |Im s|.  The
mod-4 beta function uses the same weights on its own alternating series.
Real quadratic characters are summed in complete periods (blocks of q whose
character sum vanishes) with an Euler-Maclaurin tail on the smooth block
function.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import loggamma

from . import sieve
from .errors import CapacityError, ConvergenceError, DomainError, ParseError

T_MAX_CAP = 500.0
_LOG_CVZ = math.log(3.0 + math.sqrt(8.0))


@dataclass(frozen=True)
class LFunctionId:
    """Which L-function: riemann zeta, the mod-4 beta, or a real quadratic
    character modulo an odd prime q."""

    kind: str
    q: int | None = None

    def __post_init__(self):
        if self.kind not in ("zeta", "beta4", "quadratic"):
            raise DomainError("unknown L-function kind %r" % self.kind)
        if self.kind == "quadratic":
            if self.q is None or self.q % 2 == 0 or not _is_prime(self.q):
                raise DomainError("quadratic character needs an odd prime q")
        elif self.q is not None:
            raise DomainError("%s takes no modulus" % self.kind)

    def __str__(self):
        return self.kind if self.q is None else "quadratic:%d" % self.q


ZETA = LFunctionId("zeta")
BETA4 = LFunctionId("beta4")


def quadratic(q):
    return LFunctionId("quadratic", q)


def _is_prime(q):
    if q < 2:
        return False
    return all(q % p for p in range(2, math.isqrt(q) + 1))


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-6
    max_depth: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError("abs_tol must be positive")


@dataclass(frozen=True)
class ZeroSearchConfig:
    precision: float = 1e-9
    scan_step: float = 0.05
    max_halvings: int = 6


@dataclass(frozen=True)
class ZeroTable:
    id: LFunctionId
    ordinates: np.ndarray
    precision: float

    def __post_init__(self):
        ords = np.asarray(self.ordinates, dtype=float)
        object.__setattr__(self, "ordinates", ords)
        if len(ords) and (ords[0] <= 0 or np.any(np.diff(ords) <= 0)):
            raise DomainError("ordinates must be positive, strictly ascending")
        if not self.precision > 0:
            raise DomainError("precision must be positive")

    def __len__(self):
        return len(self.ordinates)


# ---------------------------------------------------------------------------
# logarithmic integrals

def _quad_ln(f, x, cfg, what):
    """Adaptive quadrature of f(u) over u = ln t in [ln 2, ln x].

    The requested absolute tolerance is honored down to the double-precision
    floor (a few hundred ulps of the result); the error estimate must clear
    whichever is larger or the call refuses to pretend.
    """
    val, err = quad(f, math.log(2.0), math.log(x),
                    epsabs=cfg.abs_tol / 2, epsrel=1e-13, limit=cfg.max_depth)
    floor = 512 * np.finfo(float).eps * abs(val)
    if err > max(cfg.abs_tol, floor):
        raise ConvergenceError("%s quadrature error %g above %g at x=%g"
                               % (what, err, cfg.abs_tol, x))
    return val


def li(x, cfg=None):
    """Li(x) = integral 2..x of dt/ln t, by adaptive quadrature in u = ln t."""
    cfg = cfg or QuadratureConfig()
    if x < 2:
        raise DomainError("Li is defined here for x >= 2")
    if x == 2:
        return 0.0
    return _quad_ln(lambda u: math.exp(u) / u, x, cfg, "Li")


def li2(x, cfg=None):
    """Li2(x) = integral 2..x of dt/(ln t)^2, the pair-count analogue."""
    cfg = cfg or QuadratureConfig()
    if x < 2:
        raise DomainError("Li2 is defined here for x >= 2")
    if x == 2:
        return 0.0
    return _quad_ln(lambda u: math.exp(u) / (u * u), x, cfg, "Li2")


#: integral of dt/ln t from 0 to 2 (principal value through t = 1); the
#: classical li tables measure from this origin rather than from 2.
LI_AT_2 = 1.0451637801174927848


def li_from_origin(x, cfg=None):
    """The classical li(x) measured from 0; equals li(x) + LI_AT_2 here."""
    return li(x, cfg) + LI_AT_2


def riemann_prediction(x, cfg=None):
    """Two-term refinement Li(x) - Li(sqrt(x))/2 of the prime count guess."""
    if x < 4:
        raise DomainError("refined prediction needs x >= 4")
    return li(x, cfg) - 0.5 * li(math.sqrt(x), cfg)


def gauss_overcount(x, pi_x, cfg=None, from_origin=True):
    """Overcount column of the published prime-count tables: li - pi,
    rounded down.  The published columns track the origin-based li; pass
    from_origin=False for the 2-based integral instead."""
    base = li_from_origin(x, cfg) if from_origin else li(x, cfg)
    return math.floor(base - pi_x)


def riemann_overcount(x, pi_x, cfg=None, from_origin=True):
    """li(x) - li(sqrt x)/2 - pi(x), rounded down like the other column."""
    if from_origin:
        base = li_from_origin(x, cfg) - 0.5 * li_from_origin(math.sqrt(x),
                                                             cfg)
    else:
        base = riemann_prediction(x, cfg)
    return math.floor(base - pi_x)


# ---------------------------------------------------------------------------
# Chebyshev psi

def chebyshev_psi(x, primes=None):
    """Sum of ln p over all prime powers p^k <= x (the log of lcm[1..x])."""
    x = int(x)
    if x < 2:
        raise DomainError("psi needs x >= 2")
    if primes is None:
        primes = sieve.primes_up_to(x)
    else:
        primes = np.asarray(primes, dtype=np.int64)
        primes = primes[primes <= x]
    total = float(np.sum(np.log(primes)))
    for p in primes[primes <= math.isqrt(x)]:
        p = int(p)
        v = p * p
        lp = math.log(p)
        while v <= x:
            total += lp
            v *= p
    return total


def psi_rh_inequality_check(x, psi_value=None):
    """|psi(x) - x| <= 2 sqrt(x) ln^2 x, the inequality equivalent to the
    critical-line hypothesis, checked at a single x >= 100."""
    if x < 100:
        raise DomainError("the inequality is asserted for x >= 100")
    if psi_value is None:
        psi_value = chebyshev_psi(x)
    lg = math.log(x)
    return abs(psi_value - x) <= 2.0 * math.sqrt(x) * lg * lg


# ---------------------------------------------------------------------------
# alternating-series acceleration (Chebyshev weights)

def _cvz_weights(n):
    """Weights w_k = (d_n - d_k)/d_n, k = 0..n-1, for the accelerated
    alternating sum  S ~= sum (-1)^k w_k a_k.  Built in extended precision
    because d_n grows like (3+sqrt 8)^n."""
    t = np.empty(n + 1, dtype=np.longdouble)
    t[0] = 1.0 / n
    for i in range(n):
        t[i + 1] = t[i] * 4.0 * (n + i) * (n - i) / ((2 * i + 1) * (2 * i + 2))
    d = np.cumsum(t) * n
    return ((d[n] - d[:n]) / d[n]).astype(np.float64)


def default_terms(im_s, tol=1e-12):
    """Acceleration order needed for |Im s| at the given tolerance."""
    t = abs(float(im_s))
    return max(24, int(math.ceil(
        (0.5 * math.pi * t + math.log(1.0 / tol) + 6.0) / _LOG_CVZ)) + 8)


def _alt_sum(bases, s, n_terms):
    """sum_k (-1)^k w_k bases[k]^(-s) with CVZ weights (single point s)."""
    w = _cvz_weights(n_terms)
    signs = np.where(np.arange(n_terms) % 2 == 0, 1.0, -1.0)
    powers = np.exp(-s * np.log(bases))
    return complex(np.sum(w * signs * powers))


def _alt_sum_grid(bases, sigma, ts, n_terms):
    """Vectorized _alt_sum along a grid of imaginary parts."""
    w = _cvz_weights(n_terms)
    signs = np.where(np.arange(n_terms) % 2 == 0, 1.0, -1.0)
    lb = np.log(bases)
    coef = w * signs * np.exp(-sigma * lb)
    out = np.empty(len(ts), dtype=complex)
    chunk = max(1, (1 << 22) // n_terms)
    for i in range(0, len(ts), chunk):
        phase = np.exp(-1j * np.outer(ts[i:i + chunk], lb))
        out[i:i + chunk] = phase @ coef
    return out


def _check_s(s):
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError("s must be finite")
    if s.real <= 0:
        raise DomainError("evaluation requires Re(s) > 0")
    return s


_BERNOULLI = [1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66,
              -691.0 / 2730, 7.0 / 6]


def legendre_symbol(n, q):
    """(n/q) for odd prime q: 1 on nonzero squares, -1 on nonsquares."""
    r = pow(n % q, (q - 1) // 2, q)
    return r - q if r > 1 else r


def _quadratic_l(q, s, blocks):
    """L(s, chi_q) for the real character mod an odd prime q: sum complete
    periods (each sums to zero, so the block function decays one power
    faster), then close with an Euler-Maclaurin tail."""
    chi = np.array([legendre_symbol(r, q) for r in range(q)], dtype=float)
    r = np.arange(q, dtype=float)
    J = max(int(blocks), int(math.ceil(4.0 * (abs(s.imag) + 8.0) / q)) + 2)
    j = np.arange(J, dtype=float)
    grid = np.add.outer(j * q, r)
    grid[0, 0] = 1.0  # n = 0 never contributes (chi[0] = 0)
    head = np.sum(chi * np.exp(-s * np.log(grid)))
    u = J * q + r
    lnu = np.log(u)
    # integral term: sum_r chi(r) (Jq+r)^(1-s) / ((s-1) q)
    tail = np.sum(chi * np.exp((1.0 - s) * lnu)) / ((s - 1.0) * q)
    f0 = chi * np.exp(-s * lnu)
    tail += 0.5 * np.sum(f0)
    rising = 1.0 + 0j
    qpow = 1.0
    fact = 1.0
    for m, b2m in enumerate(_BERNOULLI, start=1):
        # f^(2m-1)(J) = -(s)_(2m-1) q^(2m-1) (Jq+r)^(-s-2m+1)
        rising *= s + (2 * m - 2)
        if m > 1:
            rising *= s + (2 * m - 3)
        qpow *= q * q
        fact *= (2 * m) * (2 * m - 1)
        deriv = np.sum(chi * np.exp((-s - (2 * m - 1)) * lnu))
        tail += (b2m / fact) * rising * (qpow / q) * deriv
    return complex(head + tail)


def evaluate_l(lid, s, terms=None):
    """Evaluate the identified L-function at s with Re(s) > 0.

    ``terms`` is the acceleration order (zeta/beta4) or the number of
    complete character periods summed before the tail (quadratic); the
    error decreases geometrically in it.  Defaults come from Im(s).
    """
    s = _check_s(s)
    if lid.kind == "zeta":
        if s == 1:
            raise DomainError("zeta has its pole at s = 1")
        n = terms or default_terms(s.imag)
        bases = np.arange(1, n + 1, dtype=float)
        eta = _alt_sum(bases, s, n)
        return eta / (1.0 - np.exp((1.0 - s) * math.log(2.0)))
    if lid.kind == "beta4":
        n = terms or default_terms(s.imag)
        bases = np.arange(1, 2 * n + 1, 2, dtype=float)
        return _alt_sum(bases, s, n)
    return _quadratic_l(lid.q, s, terms or 48)


# ---------------------------------------------------------------------------
# critical-line zero finding

def _theta_zeta(ts):
    """Rotation angle for zeta: Im log Gamma(1/4 + it/2) - (t/2) ln pi."""
    ts = np.asarray(ts, dtype=float)
    return loggamma(0.25 + 0.5j * ts).imag - 0.5 * ts * math.log(math.pi)


def _theta_beta4(ts):
    """Rotation angle from the completed mod-4 function
    (4/pi)^((s+1)/2) Gamma((s+1)/2) L(s)."""
    ts = np.asarray(ts, dtype=float)
    return loggamma(0.75 + 0.5j * ts).imag + 0.5 * ts * math.log(4.0 / math.pi)


def _hardy_z_grid(lid, ts, n_terms):
    """Real rotated function along the critical line at the grid ts."""
    ts = np.asarray(ts, dtype=float)
    if lid.kind == "zeta":
        vals = _alt_sum_grid(np.arange(1, n_terms + 1, dtype=float),
                             0.5, ts, n_terms)
        vals = vals / (1.0 - np.exp((0.5 - 1j * ts) * math.log(2.0)))
        return (np.exp(1j * _theta_zeta(ts)) * vals).real
    if lid.kind == "beta4":
        vals = _alt_sum_grid(np.arange(1, 2 * n_terms + 1, 2, dtype=float),
                             0.5, ts, n_terms)
        return (np.exp(1j * _theta_beta4(ts)) * vals).real
    raise DomainError("zero finding supports zeta and beta4 only; "
                      "ingest published ordinates via parse_zero_table")


def _bisect_zero(fn, a, b, fa, fb, precision):
    while b - a > precision:
        m = 0.5 * (a + b)
        fm = fn(m)
        if fa * fm <= 0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    return 0.5 * (a + b)


def find_zeros(lid, t_max, cfg=None):
    """All ordinates gamma in (0, t_max] with L(1/2 + i*gamma) = 0, each
    certified by a sign change of the rotated real function and refined
    by bisection to cfg.precision."""
    cfg = cfg or ZeroSearchConfig()
    if t_max > T_MAX_CAP:
        raise CapacityError("t_max %g above the desk-scale cap %g"
                            % (t_max, T_MAX_CAP))
    if t_max <= 0:
        return ZeroTable(lid, np.empty(0), cfg.precision)
    n_terms = default_terms(t_max)
    point = lambda t: float(_hardy_z_grid(lid, np.array([t]), n_terms)[0])

    def scan(a, b, step, depth):
        ts = np.arange(a, b + step / 2, step)
        zs = _hardy_z_grid(lid, ts, n_terms)
        found = []
        sign_change = zs[:-1] * zs[1:] < 0
        # a dip toward zero without a sign change can hide a close pair
        interior = np.zeros(len(ts), dtype=bool)
        interior[1:-1] = (np.abs(zs[1:-1]) < np.abs(zs[:-2])) & \
                         (np.abs(zs[1:-1]) < np.abs(zs[2:])) & \
                         (np.abs(zs[1:-1]) < 0.1)
        for i in range(len(ts) - 1):
            if sign_change[i]:
                found.append(_bisect_zero(point, ts[i], ts[i + 1],
                                          zs[i], zs[i + 1], cfg.precision))
            elif interior[i] and depth < cfg.max_halvings:
                found.extend(scan(ts[i - 1], ts[i + 1], step / 2, depth + 1))
        return found

    lo = min(cfg.scan_step, t_max / 8)
    zeros = sorted(set(round(z, 12) for z in scan(lo, float(t_max),
                                                  cfg.scan_step, 0)))
    zeros = [z for z in zeros if 0 < z <= t_max]
    # collapse duplicates rediscovered by overlapping refined scans
    dedup = []
    for z in zeros:
        if not dedup or z - dedup[-1] > 2 * cfg.precision:
            dedup.append(z)
    return ZeroTable(lid, np.array(dedup), cfg.precision)


# ---------------------------------------------------------------------------
# zero-table files: `# lfunction=<id>` header, one ascending ordinate per line

def write_zero_table(table, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# lfunction=%s\n" % table.id)
        for g in table.ordinates:
            fh.write("%.9f\n" % g)


def _parse_lid(text):
    text = text.strip()
    if text == "zeta":
        return ZETA
    if text == "beta4":
        return BETA4
    if text.startswith("quadratic:"):
        return quadratic(int(text.split(":", 1)[1]))
    raise ValueError(text)


def parse_zero_table(path, lid=None, precision=1e-9):
    """Read a zero-table file; a header `# lfunction=` must agree with the
    expected id when both are present."""
    ordinates = []
    file_id = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("lfunction="):
                    try:
                        file_id = _parse_lid(body.split("=", 1)[1])
                    except (ValueError, DomainError):
                        raise ParseError("bad lfunction header", lineno)
                continue
            try:
                g = float(line)
            except ValueError:
                raise ParseError("bad ordinate %r" % line, lineno)
            if g <= 0:
                raise ParseError("ordinate must be positive", lineno)
            if ordinates and g <= ordinates[-1]:
                raise ParseError("ordinates not strictly ascending", lineno)
            ordinates.append(g)
    if lid is not None and file_id is not None and file_id != lid:
        raise ParseError("file holds %s, expected %s" % (file_id, lid))
    return ZeroTable(file_id or lid or ZETA, np.array(ordinates), precision)
