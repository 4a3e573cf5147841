"""Registry of published numerical values and a verifier that recomputes them.

Each claim names a quantity in a tiny call syntax, e.g. ``absW(0, 2*pi)`` or
``dG_coeff(2.01*pi, 3)``. Arguments are plain numbers, ``pi`` or ``k*pi``.
"""
from __future__ import annotations

import enum
import json
import math
import re
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import Callable, Dict, List, Optional, Sequence

from . import analysis, wmap
from .errors import RegistryError, ZetaMapError
from .specfun import DEFAULT_CONFIG, SeriesConfig, riemann_zeta


class Status(str, enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    PAPER_INCONSISTENT = "PaperInconsistent"


@dataclass
class ClaimRecord:
    id: str
    paper_loc: str
    quote: str
    expected: float
    tolerance: float
    tolerance_kind: str = "abs"
    quantity: str = ""
    suspect: bool = False
    computed: Optional[float] = None
    status: Optional[Status] = None
    message: str = ""

    def __post_init__(self):
        if not (isinstance(self.tolerance, (int, float)) and self.tolerance > 0 and math.isfinite(self.tolerance)):
            raise RegistryError(f"claim {self.id!r}: tolerance must be a positive finite number, got {self.tolerance!r}")
        if self.tolerance_kind not in ("abs", "rel"):
            raise RegistryError(f"claim {self.id!r}: tolerance_kind must be 'abs' or 'rel'")
        if not self.quantity:
            raise RegistryError(f"claim {self.id!r}: no quantity to compute")
        parse_quantity(self.quantity)

    @property
    def delta(self) -> Optional[float]:
        if self.computed is None or not math.isfinite(self.computed):
            return None
        return self.computed - self.expected

    def within_tolerance(self, value: float) -> bool:
        if not math.isfinite(value):
            return False
        err = abs(value - self.expected)
        if self.tolerance_kind == "rel":
            return err <= self.tolerance * abs(self.expected)
        return err <= self.tolerance


QUANTITIES: Dict[str, Callable[..., float]] = {
    "zeta_re": lambda sigma, t, cfg: riemann_zeta(complex(sigma, t)).real,
    "zeta_im": lambda sigma, t, cfg: riemann_zeta(complex(sigma, t)).imag,
    "zeta_abs": lambda sigma, t, cfg: abs(riemann_zeta(complex(sigma, t))),
    "W_re": lambda sigma, t, cfg: wmap.w_product(complex(sigma, t)).u,
    "W_im": lambda sigma, t, cfg: wmap.w_product(complex(sigma, t)).v,
    "absW": lambda sigma, t, cfg: wmap.w_abs(complex(sigma, t)),
    "dWdt": lambda sigma, t, cfg: wmap.dw_abs_dt(complex(sigma, t), cfg),
    "dWdsigma": lambda sigma, t, cfg: wmap.dw_abs_dsigma(complex(sigma, t)),
    "G": lambda sigma, t, cfg: wmap.g_function(complex(sigma, t)),
    "dG": lambda sigma, t, cfg: wmap.dg_dsigma(complex(sigma, t)),
    "d2G": lambda sigma, t, cfg: wmap.d2g_dsigma2(complex(sigma, t)),
    "dG_coeff": lambda t, order, cfg: analysis.odd_coefficient(t, (int(order) + 1) // 2),
    "G_coeff": lambda t, order, cfg: analysis.even_coefficient(t, int(order) // 2),
    "tail": lambda t, lo, hi, cfg: analysis.tail_sum(t, int(lo), int(hi)),
    "delta_plus": lambda t, cfg: analysis.g_quartic_roots(t)[1],
    "delta_minus": lambda t, cfg: analysis.g_quartic_roots(t)[0],
    "reflection_re": lambda eps, t, cfg: wmap.reflection_product(eps, t).real,
    "reflection_im": lambda eps, t, cfg: wmap.reflection_product(eps, t).imag,
    "W_even": lambda n, cfg: wmap.w_even_integer(int(n)),
}

_CALL = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*\((.*)\)\s*$")
_ARG = re.compile(r"^\s*(?:([-+]?[0-9.eE+-]+)\s*\*\s*)?(pi)\s*$|^\s*([-+]?[0-9.eE+-]+)\s*$")


def _parse_arg(text: str) -> float:
    m = _ARG.match(text)
    if not m:
        raise RegistryError(f"cannot parse argument {text!r}")
    if m.group(2):
        return float(m.group(1) or 1.0) * math.pi
    return float(m.group(3))


def parse_quantity(text: str) -> tuple:
    m = _CALL.match(text)
    if not m:
        raise RegistryError(f"cannot parse quantity {text!r}")
    name, body = m.group(1), m.group(2)
    if name not in QUANTITIES:
        raise RegistryError(f"unknown quantity {name!r}")
    args = tuple(_parse_arg(a) for a in body.split(",")) if body.strip() else ()
    return name, args


def evaluate_quantity(text: str, config: SeriesConfig = DEFAULT_CONFIG) -> float:
    name, args = parse_quantity(text)
    return float(QUANTITIES[name](*args, config))


def _record_from_dict(d: dict, fallback: Optional[Dict[str, ClaimRecord]] = None) -> ClaimRecord:
    try:
        cid = str(d["id"])
        quantity = d.get("quantity")
        suspect = d.get("suspect")
        if fallback and cid in fallback:
            quantity = quantity or fallback[cid].quantity
            suspect = fallback[cid].suspect if suspect is None else suspect
        return ClaimRecord(
            id=cid,
            paper_loc=str(d.get("paper_loc", "")),
            quote=str(d.get("quote", "")),
            expected=float(d["expected"]),
            tolerance=float(d["tolerance"]),
            tolerance_kind=str(d.get("tolerance_kind", "abs")),
            quantity=str(quantity or ""),
            suspect=bool(suspect),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, RegistryError):
            raise
        raise RegistryError(f"malformed registry entry {d!r}: {exc}") from exc


def records_from_json(text: str) -> List[ClaimRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RegistryError(f"registry is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise RegistryError("registry must be a JSON array")
    fallback = {r.id: r for r in builtin_registry()}
    records = [_record_from_dict(d, fallback) for d in data]
    ids = [r.id for r in records]
    if len(set(ids)) != len(ids):
        raise RegistryError("duplicate claim ids in registry")
    return records


def load_registry(path) -> List[ClaimRecord]:
    with open(path, encoding="utf-8") as fh:
        return records_from_json(fh.read())


def registry_to_json(records: Sequence[ClaimRecord]) -> str:
    keys = ("id", "paper_loc", "quote", "expected", "tolerance", "tolerance_kind", "quantity", "suspect")
    rows = [{k: getattr(r, k) for k in keys} for r in records]
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"


def builtin_registry() -> List[ClaimRecord]:
    text = resources.files("zetamap").joinpath("data/claims.json").read_text(encoding="utf-8")
    return [_record_from_dict(d) for d in json.loads(text)]


@dataclass
class ClaimReport:
    claims: List[ClaimRecord]
    summary: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        rows = []
        for r in self.claims:
            rows.append(
                {
                    "id": r.id,
                    "paper_loc": r.paper_loc,
                    "quote": r.quote,
                    "quantity": r.quantity,
                    "expected": r.expected,
                    "tolerance": r.tolerance,
                    "tolerance_kind": r.tolerance_kind,
                    "suspect": r.suspect,
                    "computed": r.computed if r.computed is not None and math.isfinite(r.computed) else None,
                    "delta": r.delta,
                    "status": r.status.value if r.status else None,
                    "message": r.message,
                }
            )
        return {"summary": dict(self.summary), "claims": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self, precision: int = 12) -> str:
        header = ("id", "expected", "computed", "delta", "tol", "status")
        rows = [header]
        for r in self.claims:
            comp = "-" if r.computed is None else f"{r.computed:.{precision}g}"
            delta = "-" if r.delta is None else f"{r.delta:.3e}"
            tol = f"{r.tolerance:.0e} {r.tolerance_kind}"
            rows.append((r.id, f"{r.expected:.{precision}g}", comp, delta, tol, r.status.value if r.status else "-"))
        widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
        s = self.summary
        lines.append("")
        lines.append(f"{s['pass']} pass / {s['fail']} fail / {s['inconsistent']} paper-inconsistent")
        return "\n".join(lines) + "\n"

    @property
    def failed(self) -> bool:
        return self.summary.get("fail", 0) > 0


def evaluate_claim(record: ClaimRecord, config: SeriesConfig = DEFAULT_CONFIG) -> ClaimRecord:
    try:
        value = evaluate_quantity(record.quantity, config)
    except (ZetaMapError, ArithmeticError, ValueError) as exc:
        return replace(record, computed=None, status=Status.FAIL, message=f"{type(exc).__name__}: {exc}")
    if record.within_tolerance(value):
        status, message = Status.PASS, ""
    elif record.suspect:
        status = Status.PAPER_INCONSISTENT
        message = "published value disagrees with the recomputed one; flagged as inconsistent in the source"
    else:
        status, message = Status.FAIL, "outside tolerance"
    return replace(record, computed=value, status=status, message=message)


def run_claims(registry: Sequence[ClaimRecord], config: SeriesConfig = DEFAULT_CONFIG) -> ClaimReport:
    if not registry:
        raise RegistryError("registry is empty")
    results = sorted((evaluate_claim(r, config) for r in registry), key=lambda r: r.id)
    summary = {
        "pass": sum(r.status is Status.PASS for r in results),
        "fail": sum(r.status is Status.FAIL for r in results),
        "inconsistent": sum(r.status is Status.PAPER_INCONSISTENT for r in results),
    }
    return ClaimReport(results, summary)
