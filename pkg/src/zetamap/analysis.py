"""Taylor machinery for G, the |W| = 1 locus, and figure data.

The locus tools rest on the sign law for d|W|/dt: for fixed sigma != 1/2,
|W(sigma + it)| is strictly monotone in t > 0, so every sign change of
|W| - 1 on a fine grid brackets exactly one crossing and bisection is safe.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from .errors import DegenerateError, NoBracketError, NoRootError
from .specfun import DEFAULT_CONFIG, LOG_PI, SeriesConfig, digamma, log_gamma, polygamma, riemann_zeta
from .wmap import dw_abs_dt, log_w, log_w_abs, w_abs

T1 = 2.0 * math.pi
KAPPA = 2.01 * math.pi
LOCUS_BAND = (T1, KAPPA)


def _psi_pair_sum(order: int, t: float) -> float:
    """Psi(order, 1/4 + it/2) + Psi(order, 1/4 - it/2) = 2 Re Psi(order, 1/4 + it/2)."""
    a = complex(0.25, t / 2.0)
    value = digamma(a) if order == 0 else polygamma(order, a)
    return 2.0 * value.real


def odd_coefficient(t: float, k: int) -> float:
    """Coefficient of delta^(2k-1) in dG/dsigma about sigma = 1/2."""
    return -_psi_pair_sum(2 * k, t) / (math.factorial(2 * k - 1) * 2.0 ** (2 * k - 1))


def even_coefficient(t: float, k: int) -> float:
    """Coefficient of delta^(2k) in G - 4 ln pi about sigma = 1/2."""
    return -_psi_pair_sum(2 * k, t) / (math.factorial(2 * k) * 2.0 ** (2 * k - 1))


@dataclass(frozen=True)
class GExpansion:
    """Taylor data of G(1/2 + delta, t) in delta.

    ``coeffs`` holds (order, value) for dG/dsigma (odd orders 1, 3, ...),
    ``even_coeffs`` holds (order, value) for G - 4 ln pi (orders 0, 2, ...).
    ``tail_bound`` sums |coefficient| of the derivative expansion from
    order 7 on.
    """

    t: float
    coeffs: tuple
    even_coeffs: tuple
    tail_bound: float
    k_max: int

    def coefficient(self, order: int) -> float:
        table = dict(self.coeffs) if order % 2 else dict(self.even_coeffs)
        return table[order]

    def g(self, delta):
        delta = np.asarray(delta, dtype=float)
        return 4.0 * LOG_PI + sum(c * delta**p for p, c in self.even_coeffs)

    def dg(self, delta):
        delta = np.asarray(delta, dtype=float)
        return sum(c * delta**p for p, c in self.coeffs)


def tail_sum(t: float, from_k: int, to_k: int) -> float:
    """sum_{k=from_k}^{to_k} |c_{2k-1}(t)|."""
    if not 4 <= from_k <= to_k <= 40:
        raise ValueError(f"need 4 <= from_k <= to_k <= 40, got {from_k}, {to_k}")
    return float(sum(abs(odd_coefficient(t, k)) for k in range(from_k, to_k + 1)))


def _tail_cutoff(t: float) -> int:
    """Smallest N >= 4 whose remainder (through k = 40) is below 1% of |c_{2N-1}|."""
    mags = [abs(odd_coefficient(t, k)) for k in range(4, 41)]
    for i in range(len(mags)):
        if sum(mags[i + 1:]) < 0.01 * mags[i]:
            return 4 + i
    return 40


def taylor_coeffs(t: float, k_max: int = 8) -> GExpansion:
    if t == 0:
        raise ValueError("the expansion about sigma = 1/2 is taken at t != 0")
    if not 3 <= k_max <= 12:
        raise ValueError(f"k_max must lie in [3, 12], got {k_max}")
    coeffs = tuple((2 * k - 1, odd_coefficient(t, k)) for k in range(1, k_max + 1))
    evens = tuple((2 * k, even_coefficient(t, k)) for k in range(0, k_max))
    n_tail = _tail_cutoff(t)
    return GExpansion(t, coeffs, evens, tail_sum(t, 4, n_tail), k_max)


def g_quartic_roots(t: float) -> tuple:
    """Roots of 4 ln pi + g0 + g2 d^2 + g4 d^4 = 0 in [-1/2, 1/2].

    Solved as a quadratic in d^2, so the pair is exactly symmetric.
    """
    c = 4.0 * LOG_PI + even_coefficient(t, 0)
    b = even_coefficient(t, 1)
    a = even_coefficient(t, 2)
    disc = b * b - 4.0 * a * c
    if disc < 0:
        raise NoRootError(f"truncated quartic has no real roots at t = {t}")
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    candidates = [x for x in (q / a if a else math.inf, c / q if q else math.inf) if 0.0 <= x <= 0.25]
    if not candidates:
        raise NoRootError(f"no root of the truncated quartic with |delta| <= 1/2 at t = {t}")
    delta = math.sqrt(min(candidates))
    return -delta, delta


@dataclass(frozen=True)
class LocusPoint:
    sigma: float
    t_star: float
    bracket_lo: float
    bracket_hi: float
    residual: float

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t_star)


def _bisect(f, lo: float, hi: float, f_lo: float, xtol: float = 1e-12, max_iter: int = 200):
    for _ in range(max_iter):
        if hi - lo < xtol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid, mid, mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi), lo, hi


def unit_modulus_crossing(
    sigma: float,
    t_lo: float,
    t_hi: float,
    check_points: int = 100,
    config: SeriesConfig = DEFAULT_CONFIG,
) -> LocusPoint:
    """Solve |W(sigma + it)| = 1 for t in a sign-changing bracket."""
    if sigma == 0.5:
        raise DegenerateError("|W| is identically 1 on the critical line; no isolated crossing")
    if not 0.0 <= sigma <= 1.0:
        raise ValueError(f"sigma must lie in [0, 1], got {sigma}")

    def f(t):
        return log_w_abs(sigma, t)

    f_lo, f_hi = f(t_lo), f(t_hi)
    if f_lo == 0.0 or f_hi == 0.0:
        t0 = t_lo if f_lo == 0.0 else t_hi
        return LocusPoint(sigma, t0, t0, t0, abs(w_abs(complex(sigma, t0)) - 1.0))
    if (f_lo < 0) == (f_hi < 0):
        raise NoBracketError(f"|W| - 1 has the same sign at t = {t_lo} and t = {t_hi} (sigma = {sigma})")
    t_star, lo, hi = _bisect(f, t_lo, t_hi, f_lo)

    expected = math.copysign(1.0, (0.5 - sigma) * t_star)
    for t in np.linspace(t_lo, t_hi, check_points + 2)[1:-1]:
        d = dw_abs_dt(complex(sigma, t), config)
        if d == 0.0 or math.copysign(1.0, d) != expected:
            raise ArithmeticError(f"sign law violated at sigma={sigma}, t={t}: d|W|/dt = {d}")

    residual = abs(w_abs(complex(sigma, t_star)) - 1.0)
    return LocusPoint(sigma, t_star, lo, hi, residual)


@dataclass(frozen=True)
class ScanViolation:
    """A scan result that contradicts the claimed locus band; data, not an error."""

    sigma: float
    kind: str  # "no_crossing" | "multiple_crossings" | "outside_band"
    detail: str
    t: Optional[float] = None


@dataclass
class ScanEntry:
    sigma: float
    crossings: List[LocusPoint] = field(default_factory=list)


@dataclass
class ScanReport:
    t_max: float
    band: tuple
    entries: List[ScanEntry]
    findings: List[ScanViolation]
    skipped: List[dict]

    @property
    def ok(self) -> bool:
        return not self.findings

    def to_dict(self) -> dict:
        return {
            "t_max": self.t_max,
            "band": list(self.band),
            "ok": self.ok,
            "entries": [
                {
                    "sigma": e.sigma,
                    "crossings": [
                        {
                            "t_star": p.t_star,
                            "bracket_lo": p.bracket_lo,
                            "bracket_hi": p.bracket_hi,
                            "residual": p.residual,
                        }
                        for p in e.crossings
                    ],
                }
                for e in self.entries
            ],
            "findings": [
                {"sigma": v.sigma, "kind": v.kind, "detail": v.detail, "t": v.t} for v in self.findings
            ],
            "skipped": list(self.skipped),
        }


def find_crossings(sigma: float, t_min: float, t_max: float, step: float = 1e-3) -> List[LocusPoint]:
    """Every crossing of |W| = 1 on [t_min, t_max], pre-scanned at ``step``."""
    n = int(round((t_max - t_min) / step)) + 1
    ts = np.linspace(t_min, t_max, n)
    f = log_w_abs(np.full(n, sigma), ts)
    sign = np.sign(f)
    idx = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    out = []
    for i in idx:
        out.append(unit_modulus_crossing(sigma, float(ts[i]), float(ts[i + 1]), check_points=10))
    for i in np.nonzero(sign == 0)[0]:
        t = float(ts[i])
        out.append(LocusPoint(sigma, t, t, t, abs(w_abs(complex(sigma, t)) - 1.0)))
    out.sort(key=lambda p: p.t_star)
    return out


def boundedness_scan(
    sigma_grid: Sequence[float],
    t_max: float = 50.0,
    t_min: float = 0.01,
    step: float = 1e-3,
    band: tuple = LOCUS_BAND,
    workers: Optional[int] = None,
) -> ScanReport:
    """Locate the |W| = 1 crossings for each sigma and audit them against ``band``.

    Expects exactly one crossing per sigma, strictly inside ``band``. Anything
    else becomes a ScanViolation in ``findings``. sigma = 1/2 is skipped.
    """
    grid = sorted(float(s) for s in sigma_grid)
    skipped = [{"sigma": s, "note": "critical line: |W| = 1 for every t"} for s in grid if abs(s - 0.5) < 1e-12]
    active = [s for s in grid if abs(s - 0.5) >= 1e-12]
    workers = workers or os.cpu_count() or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda s: find_crossings(s, t_min, t_max, step), active))

    entries, findings = [], []
    lo, hi = band
    for sigma, crossings in zip(active, results):
        entries.append(ScanEntry(sigma, crossings))
        if not crossings:
            findings.append(ScanViolation(sigma, "no_crossing", f"no sign change of |W| - 1 on [{t_min}, {t_max}]"))
            continue
        if len(crossings) > 1:
            ts = ", ".join(f"{p.t_star:.12g}" for p in crossings)
            findings.append(ScanViolation(sigma, "multiple_crossings", f"{len(crossings)} crossings at t = {ts}"))
        for p in crossings:
            if not lo < p.t_star < hi:
                findings.append(
                    ScanViolation(sigma, "outside_band", f"crossing at t = {p.t_star:.15g} outside ({lo:.15g}, {hi:.15g})", p.t_star)
                )
    return ScanReport(t_max, band, entries, findings, skipped)


def default_sigma_grid(step: float = 0.05) -> List[float]:
    """sigma = 0, step, 2 step, ... up to 1 inclusive (1/2 is kept; scans skip it)."""
    if not 0 < step <= 1:
        raise ValueError(f"sigma step must lie in (0, 1], got {step}")
    n = int(math.floor(1.0 / step + 1e-9))
    return [round(i * step, 12) for i in range(n + 1)]


def critical_line_map(t_lo: float, t_hi: float, n_points: int, endpoint: bool = True) -> np.ndarray:
    """Rows (t, u, v) of W(1/2 + it) on a uniform t grid."""
    if n_points < 2:
        raise ValueError("n_points must be >= 2")
    ts = np.linspace(t_lo, t_hi, n_points, endpoint=endpoint)
    w = np.exp(log_w(0.5 + 1j * ts))
    return np.column_stack([ts, w.real, w.imag])


class LocusZeta(NamedTuple):
    sigma: float
    abs_zeta_s: float
    abs_zeta_1ms: float


def zeta_along_locus(locus: Sequence[LocusPoint]) -> List[LocusZeta]:
    out = []
    for p in locus:
        s = p.s
        out.append(LocusZeta(p.sigma, abs(riemann_zeta(s)), abs(riemann_zeta(1.0 - s))))
    return out


def hardy_z(t: float) -> float:
    """zeta(1/2 + it) W(1/2 + it)^(-1/2) on the branch continuous in t (real-valued)."""
    phase = log_w(complex(0.5, t)).imag
    value = riemann_zeta(complex(0.5, t)) * complex(math.cos(phase / 2), -math.sin(phase / 2))
    return value.real


def find_zeta_zero(t_lo: float, t_hi: float, step: float = 1e-3) -> float:
    """Zero of zeta(1/2 + it) in a bracket holding exactly one sign change of hardy_z."""
    n = max(2, int(round((t_hi - t_lo) / step)) + 1)
    ts = np.linspace(t_lo, t_hi, n)
    z = np.array([hardy_z(t) for t in ts])
    changes = np.nonzero(np.sign(z[:-1]) * np.sign(z[1:]) <= 0)[0]
    if len(changes) != 1:
        raise NoBracketError(f"expected one sign change of Z(t) on [{t_lo}, {t_hi}], found {len(changes)}")
    i = changes[0]
    t_star, _, _ = _bisect(hardy_z, float(ts[i]), float(ts[i + 1]), float(z[i]))
    return t_star


def fig2_data(step: float = 0.005) -> np.ndarray:
    """Columns (sigma, |W(sigma + 2 pi i)|, |W(sigma + 2.01 pi i)|)."""
    n = int(round(1.0 / step)) + 1
    sigma = np.linspace(0.0, 1.0, n)
    return np.column_stack(
        [sigma, np.exp(log_w_abs(sigma, np.full(n, T1))), np.exp(log_w_abs(sigma, np.full(n, KAPPA)))]
    )


def fig3_data(n_points: int = 8000, t_range: float = 100.0) -> np.ndarray:
    """Columns (t, u, v); the grid is half-open so that t = 0 is a sample."""
    return critical_line_map(-t_range, t_range, n_points, endpoint=False)


def fig4_data(sigma_step: float = 0.05, t_max: float = 50.0, workers: Optional[int] = None) -> np.ndarray:
    """Columns (sigma, t_star, |zeta(s)|, |zeta(1-s)|) along the off-line locus."""
    report = boundedness_scan(default_sigma_grid(sigma_step), t_max, workers=workers)
    locus = [p for e in report.entries for p in e.crossings]
    rows = [(p.sigma, p.t_star, z.abs_zeta_s, z.abs_zeta_1ms) for p, z in zip(locus, zeta_along_locus(locus))]
    return np.array(rows, dtype=float).reshape(-1, 4)
