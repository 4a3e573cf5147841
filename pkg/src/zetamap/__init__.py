"""The factor W(s) in zeta(s) = W(s) zeta(1 - s), its derivatives, and a claim auditor."""
from .analysis import (
    GExpansion,
    LocusPoint,
    ScanReport,
    ScanViolation,
    boundedness_scan,
    critical_line_map,
    find_zeta_zero,
    g_quartic_roots,
    tail_sum,
    taylor_coeffs,
    unit_modulus_crossing,
    zeta_along_locus,
)
from .claims import ClaimRecord, Status, builtin_registry, run_claims
from .errors import (
    DegenerateError,
    DomainError,
    NoBracketError,
    NoRootError,
    PoleError,
    RegistryError,
    TruncationError,
    ZetaMapError,
)
from .specfun import (
    DEFAULT_CONFIG,
    SeriesConfig,
    complex_gamma,
    digamma,
    hurwitz_zeta,
    log_gamma,
    polygamma,
    riemann_zeta,
)
from .wmap import (
    Kind,
    StripPoint,
    WValue,
    classify,
    d2g_dsigma2,
    dg_dsigma,
    dw_abs_dsigma,
    dw_abs_dt,
    g_function,
    reflection_product,
    w_abs,
    w_gamma_ratio,
    w_product,
)

__version__ = "0.1.0"
