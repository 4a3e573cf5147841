"""The meromorphic factor W(s) in zeta(s) = W(s) zeta(1 - s).

Two closed forms are provided,

    W(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s)
    W(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2),

together with |W|, its derivatives in t and sigma, the digamma combination
G(sigma, t) = 4 |W|^-1 d|W|/dsigma, and the t-derivatives of |Gamma(s/2)|
and |Gamma((1-s)/2)|. Moduli are computed in log space.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateError, PoleError
from .specfun import (
    DEFAULT_CONFIG,
    LOG_PI,
    SeriesConfig,
    complex_gamma,
    digamma,
    log_gamma,
    polygamma,
    sum_series,
)

LATTICE_TOL = 1e-12
IMAG_RESIDUE_TOL = 1e-10


class Kind(enum.Enum):
    REGULAR = "regular"
    ZERO = "zero"
    POLE = "pole"


@dataclass(frozen=True)
class StripPoint:
    """s = sigma + i t."""

    sigma: float
    t: float

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)

    def __complex__(self):
        return self.s

    def conjugate(self) -> "StripPoint":
        return StripPoint(self.sigma, -self.t)

    def reflected(self) -> "StripPoint":
        """1 - s*, the mirror image in the critical line."""
        return StripPoint(1.0 - self.sigma, self.t)


@dataclass(frozen=True)
class WValue:
    u: float
    v: float
    modulus: float
    kind: Kind

    @property
    def value(self) -> complex:
        return complex(self.u, self.v)


def classify(s) -> Kind:
    """Zero at s = -2n and pole at s = 2n + 1 (n >= 0), within LATTICE_TOL."""
    s = complex(s)
    if abs(s.imag) > LATTICE_TOL:
        return Kind.REGULAR
    n = round(s.real)
    if abs(s.real - n) > LATTICE_TOL:
        return Kind.REGULAR
    if n <= 0 and n % 2 == 0:
        return Kind.ZERO
    if n >= 1 and n % 2 == 1:
        return Kind.POLE
    return Kind.REGULAR


def _special_value(kind: Kind) -> WValue:
    if kind is Kind.ZERO:
        return WValue(0.0, 0.0, 0.0, Kind.ZERO)
    return WValue(math.inf, math.inf, math.inf, Kind.POLE)


def _wvalue(w: complex) -> WValue:
    return WValue(w.real, w.imag, abs(w), Kind.REGULAR)


def log_w(s):
    """log W(s) = (s - 1/2) log pi + log Gamma((1-s)/2) - log Gamma(s/2).

    The imaginary part is continuous wherever both log-Gamma branches are,
    which holds along any vertical line that avoids the zeros and poles.
    """
    s = np.asarray(s, dtype=complex)
    out = (s - 0.5) * LOG_PI + log_gamma((1.0 - s) / 2.0) - log_gamma(s / 2.0)
    return complex(out) if out.ndim == 0 else out


def w_complex(s) -> complex:
    """W(s) as a complex number via the Gamma-ratio form (regular points only)."""
    return cmath.exp(log_w(complex(s)))


def w_product(s) -> WValue:
    """W from 2^s pi^(s-1) sin(pi s/2) Gamma(1-s)."""
    s = complex(s)
    kind = classify(s)
    if kind is not Kind.REGULAR:
        return _special_value(kind)
    if s.real > 0.5:
        # reflect Gamma(1-s) and cancel sin(pi s/2) against sin(pi s): the 0 * inf at s = 2n disappears
        w = cmath.exp(s * math.log(2.0 * math.pi)) / (2.0 * cmath.cos(math.pi * s / 2.0) * complex_gamma(s))
    else:
        w = (
            cmath.exp(s * math.log(2.0) + (s - 1.0) * LOG_PI)
            * cmath.sin(math.pi * s / 2.0)
            * complex_gamma(1.0 - s)
        )
    return _wvalue(w)


def w_gamma_ratio(s) -> WValue:
    """W from pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2), through log-Gamma differences."""
    s = complex(s)
    kind = classify(s)
    if kind is not Kind.REGULAR:
        return _special_value(kind)
    return _wvalue(w_complex(s))


def log_w_abs(sigma, t):
    """log |W(sigma + i t)|; vectorised, regular points only."""
    sigma = np.asarray(sigma, dtype=float)
    t = np.asarray(t, dtype=float)
    s = sigma + 1j * t
    out = (sigma - 0.5) * LOG_PI + np.real(log_gamma((1.0 - s) / 2.0)) - np.real(log_gamma(s / 2.0))
    return float(out) if np.ndim(out) == 0 else out


def w_abs(s) -> float:
    """|W(s)|: 0 at the trivial zeros, inf at the poles."""
    s = complex(s)
    kind = classify(s)
    if kind is Kind.ZERO:
        return 0.0
    if kind is Kind.POLE:
        return math.inf
    return math.exp(log_w_abs(s.real, s.imag))


def _imag_checked(value: complex, what: str) -> float:
    if abs(value.imag) > IMAG_RESIDUE_TOL * (1.0 + abs(value.real)):
        raise ArithmeticError(f"{what} should be real, imaginary residue {value.imag:.3e}")
    return value.real


def _require_regular(s: complex, what: str):
    kind = classify(s)
    if kind is Kind.POLE:
        raise PoleError(f"{what}: W has a pole at s = {s.real:g}", point=s)
    if kind is Kind.ZERO:
        raise PoleError(f"{what}: W has a zero at s = {s.real:g}", point=s)


def _atan_over(y: float, d: float) -> float:
    """atan(y/d)/y with the y -> 0 limit 1/d."""
    if y == 0.0:
        return 1.0 / d
    return math.atan(y / d) / y


def dw_abs_dt_series(sigma: float, t: float, config: SeriesConfig = DEFAULT_CONFIG) -> float:
    """sum_{n>=1} 8(n - 3/4) / (|it + 2n + sigma - 2|^2 |it + 2n - sigma - 1|^2)."""
    c1 = sigma - 2.0
    c2 = -sigma - 1.0
    t2 = t * t

    def term(n):
        return 8.0 * (n - 0.75) / (((2 * n + c1) ** 2 + t2) * ((2 * n + c2) ** 2 + t2))

    def tail(last):
        # midpoint integral of the partial-fraction form from N + 1/2
        x = last + 0.5
        a, b = 2 * x + c1, 2 * x + c2
        if t == 0.0:
            return 1.0 / (a * b)
        y = (2.0 * sigma - 1.0) * t
        return _atan_over(y, t2 + a * b)

    return float(sum_series(term, config, tail))


def dw_abs_dt(s, config: SeriesConfig = DEFAULT_CONFIG) -> float:
    """d|W|/dt = (1/2 - sigma) t |W| * (positive series)."""
    s = complex(s)
    _require_regular(s, "dw_abs_dt")
    sigma, t = s.real, s.imag
    pref = (0.5 - sigma) * t
    if pref == 0.0:
        return 0.0
    return pref * w_abs(s) * dw_abs_dt_series(sigma, t, config)


def _psi_quad(s: complex, func) -> tuple:
    sc = s.conjugate()
    return func(s / 2.0), func(sc / 2.0), func((1.0 - s) / 2.0), func((1.0 - sc) / 2.0)


def g_function(s) -> float:
    """G = 4 ln pi - Psi(s/2) - Psi(s*/2) - Psi((1-s)/2) - Psi((1-s*)/2)."""
    s = complex(s)
    args = np.array([s / 2.0, s.conjugate() / 2.0, (1.0 - s) / 2.0, (1.0 - s.conjugate()) / 2.0])
    psi = digamma(args)
    return _imag_checked(4.0 * LOG_PI - complex(np.sum(psi)), "G")


def g_function_grid(sigma, t):
    """Vectorised G over broadcast arrays of sigma and t."""
    s = np.asarray(sigma, dtype=float) + 1j * np.asarray(t, dtype=float)
    sc = np.conj(s)
    total = digamma(s / 2) + digamma(sc / 2) + digamma((1 - s) / 2) + digamma((1 - sc) / 2)
    return 4.0 * LOG_PI - np.real(total)


def dg_dsigma(s) -> float:
    """dG/dsigma = [-Psi1(s/2) - Psi1(s*/2) + Psi1((1-s)/2) + Psi1((1-s*)/2)] / 2."""
    s = complex(s)
    a, b, c, d = _psi_quad(s, lambda z: polygamma(1, z))
    return _imag_checked((-a - b + c + d) / 2.0, "dG/dsigma")


def d2g_dsigma2(s) -> float:
    """d^2G/dsigma^2 = -[Psi2(s/2) + Psi2(s*/2) + Psi2((1-s)/2) + Psi2((1-s*)/2)] / 4."""
    s = complex(s)
    a, b, c, d = _psi_quad(s, lambda z: polygamma(2, z))
    return _imag_checked(-(a + b + c + d) / 4.0, "d2G/dsigma2")


def dw_abs_dsigma(s) -> float:
    """d|W|/dsigma = |W| G / 4."""
    s = complex(s)
    _require_regular(s, "dw_abs_dsigma")
    return w_abs(s) * g_function(s) / 4.0


def dw_abs_dsigma_real_axis(sigma: float, config: SeriesConfig = DEFAULT_CONFIG) -> float:
    """d|W|/dsigma at t = 0 for 0 < sigma < 1 from the termwise-positive series

        |W(sigma)|/4 {4 ln pi + 4 gamma + sum [2(2-sigma)/(n(2n+sigma-2))
                                               + 2(1+sigma)/(n(2n-sigma-1))]}.
    """
    if not 0.0 < sigma < 1.0:
        raise ValueError("the real-axis series needs 0 < sigma < 1")
    c1 = sigma - 2.0
    c2 = -sigma - 1.0

    def term(n):
        return 2 * (2 - sigma) / (n * (2 * n + c1)) + 2 * (1 + sigma) / (n * (2 * n + c2))

    def tail(last):
        x = last + 0.5
        return -2.0 * (math.log1p(c1 / (2 * x)) + math.log1p(c2 / (2 * x)))

    bracket = 4.0 * LOG_PI + 4.0 * config.euler_gamma + float(sum_series(term, config, tail))
    return w_abs(complex(sigma, 0.0)) * bracket / 4.0


def _gamma_abs_series(c: float, t: float, config: SeriesConfig) -> float:
    """sum_{n>=1} 1/((2n + c)^2 + t^2)."""
    t2 = t * t

    def term(n):
        return 1.0 / ((2 * n + c) ** 2 + t2)

    def tail(last):
        x = 2 * (last + 0.5) + c
        if t == 0.0:
            return 1.0 / (2.0 * x)
        return math.atan2(abs(t), x) / (2.0 * abs(t))

    return float(sum_series(term, config, tail))


def d_abs_gamma_half_s_dt(s, config: SeriesConfig = DEFAULT_CONFIG) -> float:
    """d|Gamma(s/2)|/dt = -t |Gamma(s/2)| sum 1/|it + 2n + sigma - 2|^2."""
    s = complex(s)
    sigma, t = s.real, s.imag
    mod = math.exp(log_gamma(s / 2.0).real)
    if t == 0.0:
        return 0.0
    return -t * mod * _gamma_abs_series(sigma - 2.0, t, config)


def d_abs_gamma_half_1ms_dt(s, config: SeriesConfig = DEFAULT_CONFIG) -> float:
    """d|Gamma((1-s)/2)|/dt = -t |Gamma((1-s)/2)| sum 1/|it + 2n - sigma - 1|^2."""
    s = complex(s)
    sigma, t = s.real, s.imag
    mod = math.exp(log_gamma((1.0 - s) / 2.0).real)
    if t == 0.0:
        return 0.0
    return -t * mod * _gamma_abs_series(-sigma - 1.0, t, config)


def w_even_integer(n: int) -> float:
    """W(2n) = (2 pi)^(2n) / (2 (-1)^n (2n-1)!)."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    return (2.0 * math.pi) ** (2 * n) / (2.0 * (-1) ** n * math.factorial(2 * n - 1))


def reflection_product(eps: float, t: float) -> complex:
    """W(s+) W(s-*) with s+- = 1/2 +- eps + i t; equals 1 away from zeros and poles."""
    s_plus = complex(0.5 + eps, t)
    s_minus_conj = complex(0.5 - eps, -t)
    for point in (s_plus, s_minus_conj):
        kind = classify(point)
        if kind is not Kind.REGULAR:
            raise DegenerateError(
                f"W({point.real:g}{point.imag:+g}i) is a {kind.value}; the reciprocal pair "
                "is a classification, not a product"
            )
    return cmath.exp(log_w(s_plus) + log_w(s_minus_conj))
