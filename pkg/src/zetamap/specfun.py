"""Complex special functions in binary64.

Gamma and log-Gamma use the Lanczos approximation (g = 7, nine
coefficients), digamma uses upward recurrence plus the asymptotic series,
polygamma goes through an Euler-Maclaurin Hurwitz zeta, and the Riemann
zeta function uses Borwein's accelerated alternating (eta) series in the
right half-plane and the functional equation elsewhere.

``complex_gamma``, ``log_gamma`` and ``digamma`` accept scalars or numpy
arrays; scalars in give Python ``complex`` out.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, PoleError, TruncationError

EULER_GAMMA = 0.5772156649015329
LOG_PI = math.log(math.pi)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Points closer than this to a non-positive integer count as poles.
POLE_TOL = 1e-12


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation policy for the slowly convergent series.

    A series stops once the magnitude of the last term has stayed below
    ``rel_tol`` times the partial sum for three consecutive terms.
    """

    rel_tol: float = 1e-10
    max_terms: int = 1_000_000
    euler_gamma: float = EULER_GAMMA

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-9):
            raise ValueError(f"rel_tol must lie in (0, 1e-9], got {self.rel_tol!r}")
        if self.max_terms < 1000:
            raise ValueError(f"max_terms must be >= 1000, got {self.max_terms!r}")
        if abs(self.euler_gamma - EULER_GAMMA) > 1e-15:
            raise ValueError("euler_gamma disagrees with the Euler-Mascheroni constant")


DEFAULT_CONFIG = SeriesConfig()


def _as_array(z):
    arr = np.asarray(z, dtype=complex)
    return np.atleast_1d(arr), arr.ndim == 0


def _out(arr, scalar):
    if scalar:
        return complex(arr[0])
    return arr


def _pole_mask(z):
    re = z.real
    return (np.abs(z.imag) <= POLE_TOL) & (re <= POLE_TOL) & (np.abs(re - np.round(re)) <= POLE_TOL)


def _check_poles(z, name):
    mask = _pole_mask(z)
    if mask.any():
        bad = complex(z[mask].flat[0])
        raise PoleError(f"{name} has a pole at z = {bad.real:g}", point=bad)


def _lanczos_log_gamma(z):
    """Principal log Gamma for Re(z) >= 1/2."""
    z = z - 1.0
    x = np.full(z.shape, _LANCZOS[0], dtype=complex)
    for i in range(1, len(_LANCZOS)):
        x = x + _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(x)


def log_gamma(z):
    """Principal branch of log Gamma(z).

    The imaginary part is continuous off the negative real axis. For
    Re(z) < 1/2 the argument is shifted up and the principal logs of the
    shifted factors are subtracted, which keeps the branch.
    """
    z, scalar = _as_array(z)
    _check_poles(z, "log_gamma")
    out = np.empty(z.shape, dtype=complex)
    right = z.real >= 0.5
    if right.any():
        out[right] = _lanczos_log_gamma(z[right])
    left = ~right
    if left.any():
        w = z[left]
        m = np.ceil(0.5 - w.real).astype(int)
        acc = np.zeros(w.shape, dtype=complex)
        for k in range(int(m.max())):
            active = k < m
            acc[active] += np.log(w[active] + k)
        out[left] = _lanczos_log_gamma(w + m) - acc
    return _out(out, scalar)


def complex_gamma(z):
    """Gamma(z), with the reflection formula for Re(z) < 1/2.

    Real arguments beyond about 171.6 overflow binary64 and give inf.
    """
    z, scalar = _as_array(z)
    _check_poles(z, "complex_gamma")
    out = np.empty(z.shape, dtype=complex)
    right = z.real >= 0.5
    with np.errstate(over="ignore", invalid="ignore"):
        if right.any():
            out[right] = np.exp(_lanczos_log_gamma(z[right]))
        left = ~right
        if left.any():
            w = z[left]
            out[left] = np.pi / (np.sin(np.pi * w) * np.exp(_lanczos_log_gamma(1.0 - w)))
    return _out(out, scalar)


@lru_cache(maxsize=None)
def bernoulli_even(count: int) -> tuple:
    """B_2, B_4, ..., B_{2*count} as floats (exact rational recurrence)."""
    n_max = 2 * count
    a = [Fraction(0)] * (n_max + 1)
    numbers = []
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        numbers.append(a[0])
    return tuple(float(numbers[2 * k]) for k in range(1, count + 1))


def _digamma_asymptotic(w):
    b = bernoulli_even(8)
    inv2 = 1.0 / (w * w)
    acc = np.zeros(w.shape, dtype=complex)
    p = np.ones(w.shape, dtype=complex)
    for k in range(1, 9):
        p = p * inv2
        acc = acc + b[k - 1] / (2 * k) * p
    return np.log(w) - 0.5 / w - acc


def digamma(z):
    """Psi(z) = d/dz log Gamma(z)."""
    z, scalar = _as_array(z)
    _check_poles(z, "digamma")
    left = z.real < 0.5
    # reflection: psi(z) = psi(1 - z) - pi cot(pi z)
    w = np.where(left, 1.0 - z, z)
    m = np.maximum(np.ceil(10.0 - w.real), 0).astype(int)
    shift = np.zeros(z.shape, dtype=complex)
    for k in range(int(m.max()) if m.size else 0):
        active = k < m
        shift[active] += 1.0 / (w[active] + k)
    out = _digamma_asymptotic(w + m) - shift
    if left.any():
        out[left] -= np.pi / np.tan(np.pi * z[left])
    return _out(out, scalar)


def sum_series(
    term: Callable[[np.ndarray], np.ndarray],
    config: SeriesConfig = DEFAULT_CONFIG,
    tail: Optional[Callable[[int], complex]] = None,
    start: int = 1,
):
    """Sum ``term(n)`` for n = start, start+1, ... under the stopping rule.

    ``term`` is evaluated on integer blocks. ``tail(N)``, when given,
    estimates the remainder after the last summed index N and is added.
    """
    total = 0.0
    n0 = start
    block = 1024
    run = 0
    while n0 - start < config.max_terms:
        size = min(block, config.max_terms - (n0 - start))
        n = np.arange(n0, n0 + size, dtype=float)
        terms = term(n)
        partial = total + np.cumsum(terms)
        small = np.abs(terms) < config.rel_tol * np.abs(partial)
        for i, ok in enumerate(small):
            run = run + 1 if ok else 0
            if run == 3:
                last = n0 + i
                result = partial[i]
                if tail is not None:
                    result = result + tail(last)
                return result
        total = partial[-1]
        n0 += size
        block = min(2 * block, 1 << 17)
    raise TruncationError(
        f"series did not converge to rel_tol={config.rel_tol:g} within {config.max_terms} terms"
    )


def digamma_series(z, config: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Psi(z) from -gamma + sum (z-1)/(n(n+z-1)); slow, kept as a cross-check."""
    z = complex(z)
    if abs(z.imag) <= POLE_TOL and z.real <= POLE_TOL and abs(z.real - round(z.real)) <= POLE_TOL:
        raise PoleError(f"digamma has a pole at z = {z.real:g}", point=z)
    zm1 = z - 1.0

    def term(n):
        return zm1 / (n * (n + zm1))

    def tail(last):
        # sum_{n>N} (1/n - 1/(n+z-1)) ~ integral from N+1/2
        return cmath.log(1.0 + zm1 / (last + 0.5))

    return -config.euler_gamma + complex(sum_series(term, config, tail))


def hurwitz_zeta(s, a) -> complex:
    """zeta(s, a) = sum_{k>=0} (a+k)^(-s) by Euler-Maclaurin.

    The argument is shifted internally until Re(a+N) >= max(10, |s|), which
    keeps the Bernoulli correction series rapidly convergent.
    """
    s = complex(s)
    a = complex(a)
    if s == 1:
        raise PoleError("hurwitz_zeta has a pole at s = 1", point=s)
    if a.real <= 0:
        raise DomainError(f"hurwitz_zeta needs Re(a) > 0, got a = {a}")
    n_shift = max(0, math.ceil(max(10.0, abs(s)) - a.real))
    total = 0j
    if n_shift:
        k = np.arange(n_shift)
        total = complex(np.sum(np.exp(-s * np.log(a + k))))
    x = a + n_shift
    log_x = cmath.log(x)
    x_pow = cmath.exp(-s * log_x)
    total += x * x_pow / (s - 1.0) + 0.5 * x_pow
    b = bernoulli_even(30)
    rising = s  # s (s+1) ... (s+2j-2)
    fact = 2.0  # (2j)!
    inv_x2 = 1.0 / (x * x)
    p = x_pow / x  # x^(-s-1)
    for j in range(1, 31):
        corr = b[j - 1] / fact * rising * p
        total += corr
        if abs(corr) <= 1e-17 * abs(total):
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
        p *= inv_x2
    return total


def polygamma(n: int, z) -> complex:
    """n-th derivative of digamma, (-1)^(n+1) n! zeta(n+1, z), for n >= 1."""
    if int(n) != n or n < 1:
        raise ValueError(f"polygamma order must be an integer >= 1, got {n!r}")
    n = int(n)
    z = complex(z)
    if abs(z.imag) <= POLE_TOL and z.real <= POLE_TOL and abs(z.real - round(z.real)) <= POLE_TOL:
        raise PoleError(f"polygamma has a pole at z = {z.real:g}", point=z)
    sign = 1.0 if n % 2 else -1.0
    fact = math.factorial(n)
    # psi^(n)(z) = psi^(n)(z+1) - (-1)^n n! / z^(n+1)
    shift = 0j
    while z.real <= 0.5:
        shift += z ** (-(n + 1))
        z += 1.0
    return sign * fact * (hurwitz_zeta(n + 1, z) + shift)


@lru_cache(maxsize=64)
def _borwein_weights(n: int) -> np.ndarray:
    """Cumulative Borwein weights d_0..d_n, scaled by 1/d_n."""
    term = 1.0
    d = [1.0]
    for i in range(n):
        term *= 4.0 * (n + i) * (n - i) / ((2 * i + 1) * (2 * i + 2))
        d.append(d[-1] + term)
    d = np.array(d)
    return d / d[-1]


def _eta_terms_count(t: float) -> int:
    # error ~ (3+sqrt 8)^-n * exp(pi|t|/2); n covers 1e-16 with margin
    return int(math.ceil(0.9 * abs(t))) + 30


def dirichlet_eta(s) -> complex:
    """Alternating zeta sum_{k>=1} (-1)^(k-1) k^(-s) by Borwein's algorithm 2."""
    s = complex(s)
    n = _eta_terms_count(s.imag)
    d = _borwein_weights(n)
    k = np.arange(n)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    terms = signs * (d[:-1] - 1.0) * np.exp(-s * np.log(k + 1.0))
    return complex(-np.sum(terms))


def zeta_eta(s) -> complex:
    """zeta(s) = eta(s) / (1 - 2^(1-s)); intended for Re(s) > 0."""
    s = complex(s)
    if s == 1:
        raise PoleError("riemann_zeta has a pole at s = 1", point=s)
    x = (1.0 - s) * math.log(2.0)
    if abs(x) < 1e-3:
        # 1 - e^x = -x (e^x - 1)/x; expand x/(e^x - 1) to avoid cancellation
        bern = 1.0 - x / 2.0 + x * x / 12.0 - x**4 / 720.0
        return -dirichlet_eta(s) * bern / x
    denom = 1.0 - cmath.exp(x)
    if abs(denom) < 1e-2:
        # near the zeros of 1 - 2^(1-s) on Re(s) = 1
        return hurwitz_zeta(s, 1.0)
    return dirichlet_eta(s) / denom


def zeta_functional(s) -> complex:
    """zeta(s) = W(s) zeta(1 - s), with W from the Gamma-ratio form."""
    from .wmap import Kind, classify, w_complex

    s = complex(s)
    kind = classify(s)
    if kind is Kind.ZERO:
        if s == 0:
            return _zeta_near_zero(s)
        return 0j
    if kind is Kind.POLE:
        # W pole meets a trivial zero of zeta(1-s); only s = 1 is a real pole
        if s == 1:
            raise PoleError("riemann_zeta has a pole at s = 1", point=s)
        return zeta_eta(s)
    if abs(s) < 1e-3:
        return _zeta_near_zero(s)
    return w_complex(s) * zeta_eta(1.0 - s)


def _zeta_near_zero(s: complex) -> complex:
    # zeta(s) = -pi^(s-1/2) Gamma((1-s)/2) [(u-1) zeta(u)] / (2 Gamma(1+s/2)), u = 1-s
    u = 1.0 - s
    x = (1.0 - u) * math.log(2.0)  # = s ln 2
    if abs(x) < 1e-3:
        # (u-1)/(1-2^(1-u)) = -x/(ln2 (1-e^x)) with x/(e^x-1) expanded
        bern = 1.0 - x / 2.0 + x * x / 12.0 - x**4 / 720.0
        reg = dirichlet_eta(u) * bern / math.log(2.0)
    else:
        reg = (u - 1.0) * zeta_eta(u)
    lg = log_gamma((1.0 - s) / 2.0) - log_gamma(1.0 + s / 2.0)
    return -cmath.exp((s - 0.5) * LOG_PI + lg) * reg / 2.0


def riemann_zeta(s) -> complex:
    """Riemann zeta on the whole plane minus s = 1."""
    s = complex(s)
    if s == 1:
        raise PoleError("riemann_zeta has a pole at s = 1", point=s)
    if s.real > 0:
        return zeta_eta(s)
    return zeta_functional(s)
