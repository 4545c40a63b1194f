"""Declarative identity corpus and its verification engine.

Each record pairs a closed form (``lhs``) with either a lattice sum or a
named builtin combination (``rhs``), evaluated at a modulus given either as a
singular value index r or as a decimal k.  Record ids carry a ``-k1``,
``-k4`` or ``-k<decimal>`` suffix when the same identity is checked at
several moduli.

File format: blocks separated by blank lines, one ``key: value`` per line,
keys ``id lhs rhs modulus tol anchor``; lines starting with ``#`` are
comments.
"""
from __future__ import annotations

import functools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Callable, Optional, Union

from ellipsum import closedform, hypersum, qspecial
from ellipsum.closedform import Expr
from ellipsum.elliptic_core import EllipticContext, Modulus, build_context
from ellipsum.errors import CorpusFormatError, EllipsumError
from ellipsum.hypersum import SumSpec
from ellipsum.singular import singular_modulus

SHIPPED_CORPUS = Path(__file__).with_name("data") / "identities.txt"
KEYS = ("id", "lhs", "rhs", "modulus", "tol", "anchor")

PASS, FAIL, ERROR = "pass", "fail", "error"


# -- modulus selectors --------------------------------------------------------

@dataclass(frozen=True)
class ModulusSelector:
    """Exactly one of ``r`` (singular value index) or ``k`` (decimal text)."""

    r: Optional[int] = None
    k: Optional[str] = None

    def __post_init__(self):
        if (self.r is None) == (self.k is None):
            raise ValueError("modulus selector needs exactly one of r or k")
        if self.r is not None and (int(self.r) != self.r or self.r < 1):
            raise ValueError(f"r must be a positive integer, got {self.r!r}")
        if self.k is not None:
            Modulus(float(self.k))

    def render(self) -> str:
        return f"r={self.r}" if self.r is not None else f"k={self.k}"

    @classmethod
    def parse(cls, text: str) -> "ModulusSelector":
        key, sep, value = text.strip().partition("=")
        if not sep or key.strip() not in ("r", "k"):
            raise ValueError(f"modulus must be r=<int> or k=<decimal>, got {text!r}")
        value = value.strip()
        if key.strip() == "r":
            return cls(r=int(value))
        try:
            Decimal(value)
        except InvalidOperation:
            raise ValueError(f"k must be a decimal literal, got {value!r}") from None
        return cls(k=value)

    def context(self) -> EllipticContext:
        return _context(self)


@functools.lru_cache(maxsize=None)
def _context(sel: ModulusSelector) -> EllipticContext:
    if sel.r is not None:
        return singular_modulus(sel.r).context()
    return build_context(Modulus(float(sel.k)))


# -- builtin right-hand sides ---------------------------------------------------

Builtin = Callable[[EllipticContext, float], "tuple[float, int]"]


def _series_builtin(fn):
    def run(ctx, tol):
        res = fn(ctx, tol)
        return res.value, res.terms_used
    return run


def _bridge(spec_text: str) -> Builtin:
    spec = SumSpec.parse(spec_text)

    def run(ctx, tol):
        return qspecial.qdigamma_sum_bridge(spec, ctx).real, 0
    return run


BUILTINS: dict[str, Builtin] = {
    "berndt_combination": _series_builtin(hypersum.berndt_combination),
    "qdigamma_dc_quarter": lambda ctx, tol: (qspecial.qdigamma_dc_quarter(ctx), 0),
    "qdigamma_nc_quarter": lambda ctx, tol: (qspecial.qdigamma_nc_quarter(ctx), 0),
    "qdigamma_sech_corollary": lambda ctx, tol: (qspecial.qdigamma_sech_corollary(ctx), 0),
    "bridge_dc_alt": _bridge("sum index=odd s=0 sign=alt kernel=inv_expm1 scale=1/1"),
    "bridge_dc_alt2": _bridge("sum index=odd s=0 sign=alt2 kernel=inv_expm1 scale=1/1"),
    "bridge_nc_alt": _bridge("sum index=odd s=0 sign=alt kernel=inv_expp1 scale=1/1"),
    "bridge_nc_alt2": _bridge("sum index=odd s=0 sign=alt2 kernel=inv_expp1 scale=1/1"),
}


# -- records and reports --------------------------------------------------------

Rhs = Union[SumSpec, str]


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    lhs: Expr
    rhs: Rhs
    modulus: ModulusSelector
    tol: float
    anchor: str

    def __post_init__(self):
        if not self.id or any(c.isspace() for c in self.id):
            raise ValueError(f"record id must be a nonempty token, got {self.id!r}")
        if isinstance(self.lhs, str):
            object.__setattr__(self, "lhs", closedform.parse(self.lhs))
        if isinstance(self.rhs, str):
            if self.rhs.startswith("sum "):
                object.__setattr__(self, "rhs", SumSpec.parse(self.rhs))
            elif self.rhs.startswith("builtin:"):
                object.__setattr__(self, "rhs", self.rhs[len("builtin:"):])
            if isinstance(self.rhs, str) and self.rhs not in BUILTINS:
                raise ValueError(f"unknown builtin {self.rhs!r}")
        if not (self.tol > 0):
            raise ValueError(f"tol must be positive, got {self.tol!r}")
        if not self.anchor.strip():
            raise ValueError(f"record {self.id!r} has an empty anchor")

    def rhs_text(self) -> str:
        return self.rhs.render() if isinstance(self.rhs, SumSpec) else f"builtin:{self.rhs}"

    def lhs_text(self) -> str:
        return closedform.render(self.lhs)


@dataclass(frozen=True)
class VerificationReport:
    id: str
    lhs_value: float
    rhs_value: float
    abs_err: float
    rel_err: float
    terms_used: int
    status: str
    tol: float = 0.0
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS


def series_tol(tol: float, scale: float) -> float:
    """Tolerance handed to the series: far below the record's own."""
    return min(1e-15, tol * 1e-3) * max(1.0, abs(scale))


def verify(record: IdentityRecord, tol_override: Optional[float] = None) -> VerificationReport:
    tol = record.tol if tol_override is None else float(tol_override)
    try:
        ctx = record.modulus.context()
        lhs = closedform.evaluate(record.lhs, ctx)
        stol = series_tol(tol, lhs)
        if isinstance(record.rhs, SumSpec):
            res = hypersum.evaluate(record.rhs, ctx, stol)
            rhs, terms = res.value, res.terms_used
        else:
            rhs, terms = BUILTINS[record.rhs](ctx, stol)
    except (EllipsumError, ArithmeticError, ValueError) as exc:
        nan = float("nan")
        return VerificationReport(record.id, nan, nan, nan, nan, 0, ERROR, tol,
                                  f"{type(exc).__name__}: {exc}")
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(lhs) if lhs != 0 else (0.0 if abs_err == 0 else math.inf)
    status = PASS if (abs_err <= tol or rel_err <= tol) else FAIL
    return VerificationReport(record.id, lhs, rhs, abs_err, rel_err, terms, status, tol)


def verify_all(records, tol: Optional[float] = None, jobs: int = 1) -> list[VerificationReport]:
    """Reports in input order; ``jobs > 1`` verifies records concurrently."""
    records = list(records)
    if jobs <= 1:
        return [verify(r, tol) for r in records]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda r: verify(r, tol), records))


# -- file format -----------------------------------------------------------------

def _format_tol(tol: float) -> str:
    return repr(float(tol))


def dump_record(record: IdentityRecord) -> str:
    return "\n".join([
        f"id: {record.id}",
        f"lhs: {record.lhs_text()}",
        f"rhs: {record.rhs_text()}",
        f"modulus: {record.modulus.render()}",
        f"tol: {_format_tol(record.tol)}",
        f"anchor: {record.anchor}",
    ])


def dumps_corpus(records) -> str:
    return "\n\n".join(dump_record(r) for r in records) + "\n"


def dump_corpus(records, path) -> None:
    Path(path).write_text(dumps_corpus(records), encoding="utf-8")


def _record_from_block(fields: dict, start: int) -> IdentityRecord:
    missing = [k for k in KEYS if k not in fields]
    if missing:
        raise CorpusFormatError(f"record is missing {', '.join(missing)}", start)
    values = {k: v for k, (v, _) in fields.items()}
    try:
        tol = float(values["tol"])
    except ValueError:
        raise CorpusFormatError(f"bad tol {values['tol']!r}", fields["tol"][1]) from None
    for key in ("lhs", "rhs", "modulus"):
        try:
            if key == "lhs":
                lhs = closedform.parse(values["lhs"])
            elif key == "rhs":
                rhs = values["rhs"]
                if rhs.startswith("sum"):
                    rhs = SumSpec.parse(rhs)
                elif rhs.startswith("builtin:"):
                    rhs = rhs[len("builtin:"):]
                    if rhs not in BUILTINS:
                        raise ValueError(f"unknown builtin {rhs!r}")
                else:
                    raise ValueError("rhs must be 'sum ...' or 'builtin:<name>'")
            else:
                modulus = ModulusSelector.parse(values["modulus"])
        except (ValueError, EllipsumError) as exc:
            raise CorpusFormatError(f"bad {key}: {exc}", fields[key][1]) from None
    try:
        return IdentityRecord(values["id"], lhs, rhs, modulus, tol, values["anchor"])
    except ValueError as exc:
        raise CorpusFormatError(str(exc), start) from None


def loads_corpus(text: str) -> list[IdentityRecord]:
    records = []
    seen = set()
    fields: dict = {}
    start = 0

    def flush():
        if fields:
            rec = _record_from_block(fields, start)
            if rec.id in seen:
                raise CorpusFormatError(f"duplicate id {rec.id!r}", start)
            seen.add(rec.id)
            records.append(rec)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush()
            fields = {}
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise CorpusFormatError(f"expected 'key: value', got {line!r}", lineno)
        if key not in KEYS:
            raise CorpusFormatError(f"unknown key {key!r}", lineno)
        if key in fields:
            raise CorpusFormatError(f"repeated key {key!r}", lineno)
        if not fields:
            start = lineno
        fields[key] = (value.strip(), lineno)
    flush()
    return records


def load_corpus(path) -> list[IdentityRecord]:
    return loads_corpus(Path(path).read_text(encoding="utf-8"))


# -- the builtin corpus -----------------------------------------------------------

GAMMA_TOL = 1e-9
ZERO_TOL = 1e-12
DEFAULT_TOL = 1e-11

# general-k closed forms; L is the Legendre-type denominator K'(E-K) + E'K
_L = "(Kp*(E-K) + Ep*K)"
_P = "(sqrt(1-k) + sqrt(1+k))"

_GENERAL = {
    "ramanujan-odd-sech": "2*k*kp*K^2/pi^2",
    "zucker-J0": "(2*K/pi)*k/2",
    "zucker-J2": "(2*K/pi)^3*k*(1-k^2)/2",
    "bagis": "K/(2*pi) - 1/4",
    "bagis-deriv": f"2*K^2*(E + (k^2-1)*K)/(pi^2*{_L})",
    "zucker-em1-s2": "1/4 + 2*(k^2-1)*K^3/pi^3",
    "zucker-csch2-s3": f"8*(k^2-1)*K^4*(3*E + (k^2-3)*K)/(pi^4*{_L})",
    "half-dc": f"{_P}*K/(2*pi) - 1/2",
    "half-dc-deriv": (f"2*k*(k^2-1)*K^2*({_P}*(E + (k^2-1)*K)/(k*(k^2-1))"
                      f" - (1/sqrt(1+k) - 1/sqrt(1-k))*K/2)/(pi^2*{_L})"),
    "half-dc-s2": f"3/2 + 4*(k^2*(3+kp) - 3*(1+kp))*K^3/({_P}*pi^3)",
    "half-dc-csch2-s3": (
        "4*kp*K^4*(6*(k*(k*(sqrt(1-k)+sqrt(1+k)) - 3*sqrt(1-k) + 3*sqrt(1+k))"
        " - 6*(sqrt(1-k)+sqrt(1+k)))*E + (36*(sqrt(1-k)+sqrt(1+k))"
        " + k*(18*(sqrt(1-k)-sqrt(1+k)) + k*(k*(k*(sqrt(1-k)+sqrt(1+k))"
        " - 8*sqrt(1-k) + 8*sqrt(1+k)) - 23*(sqrt(1-k)+sqrt(1+k)))))*K)"
        f"/(pi^4*(kp+1)*{_L})"),
    "nc-alt": "1/4 - kp*K/(2*pi)",
    "nc-alt-deriv": f"2*kp*K^2*(K - E)/(pi^2*{_L})",
    "half-nc": f"1/2 - sqrt(kp)*{_P}*K/(2*pi)",
    "half-nc-deriv": (f"K^2*sqrt(kp)*((k*(sqrt(1-k) - sqrt(1+k)) + 2*{_P})*K - 2*{_P}*E)"
                      f"/(pi^2*{_L})"),
    "ns2-square": f"-K^2*(2*E*K*kp + E^2 + K^2*(k^2*(kp+1) - 2*kp - 1))/(4*pi^3*{_L})",
    "qdigamma-dc": f"4*pi*Kp/K + 4*Kp*{_P}",
}

_SPECS = {
    "ramanujan-odd-sech": "sum index=odd s=1 sign=alt kernel=sech scale=1/2",
    "zucker-J0": "sum index=odd s=0 sign=alt kernel=csch scale=1/2",
    "zucker-J2": "sum index=odd s=2 sign=alt kernel=csch scale=1/2",
    "bagis": "sum index=odd s=0 sign=alt kernel=inv_expm1 scale=1/1",
    "bagis-deriv": "sum index=odd s=1 sign=alt kernel=csch2 scale=1/2",
    "zucker-em1-s2": "sum index=odd s=2 sign=alt kernel=inv_expm1 scale=1/1",
    "zucker-csch2-s3": "sum index=odd s=3 sign=alt kernel=csch2 scale=1/2",
    "half-dc": "sum index=odd s=0 sign=alt2 kernel=inv_expm1 scale=1/1",
    "half-dc-deriv": "sum index=odd s=1 sign=alt2 kernel=csch2 scale=1/2",
    "half-dc-s2": "sum index=odd s=2 sign=alt2 kernel=inv_expm1 scale=1/1",
    "half-dc-csch2-s3": "sum index=odd s=3 sign=alt2 kernel=csch2 scale=1/2",
    "nc-alt": "sum index=odd s=0 sign=alt kernel=inv_expp1 scale=1/1",
    "nc-alt-deriv": "sum index=odd s=1 sign=alt kernel=sech2 scale=1/2",
    "half-nc": "sum index=odd s=0 sign=alt2 kernel=inv_expp1 scale=1/1",
    "half-nc-deriv": "sum index=odd s=1 sign=alt2 kernel=sech2 scale=1/2",
    "ns2-square": "sum index=all s=2 sign=alt kernel=csch2 scale=2/1",
    "qdigamma-dc": "builtin:qdigamma_dc_quarter",
}

_ANCHORS = {
    "ramanujan-odd-sech": "alternating (2n+1) sech sum equal to 2 k k' K^2 / pi^2",
    "zucker-J0": "alternating csch sum, 2 J_0 with 4 J_0 = (2K/pi) k",
    "zucker-J2": "alternating (2n+1)^2 csch sum, 2 J_2 with 4 J_2 = (2K/pi)^3 k (1-k^2)",
    "bagis": "dc expansion at w = 0",
    "bagis-deriv": "k-derivative of the dc expansion at w = 0",
    "zucker-em1-s2": "second u-derivative of dc at w = 0",
    "zucker-csch2-s3": "k-derivative of the (2n+1)^2 / (e^x - 1) identity",
    "half-dc": "dc expansion at w = 1/4 with half-K values",
    "half-dc-deriv": "k-derivative of the quarter-period dc identity",
    "half-dc-s2": "second u-derivative of dc at w = 1/4 with half-K values",
    "half-dc-csch2-s3": "k-derivative of the quarter-period (2n+1)^2 identity",
    "nc-alt": "nc expansion at w = 0",
    "nc-alt-deriv": "k-derivative of the nc expansion at w = 0",
    "half-nc": "nc expansion at w = 1/4 with half-K values",
    "half-nc-deriv": "k-derivative of the quarter-period nc identity",
    "ns2-square": "ns^2 expansion combined with a k-derivative",
    "qdigamma-dc": "quarter-period dc identity as a q-digamma combination, base e^{8 pi K'/K}",
}

# closed forms at the singular values k_1 (r=1) and k_4 (r=4)
_SINGULAR = {
    ("bagis", 1): "gamma4^2/(8*pi^(3/2)) - 1/4",
    ("zucker-em1-s2", 1): "1/4 - gamma4^6/(64*pi^(9/2))",
    ("zucker-em1-s2", 4): "1/4 - (1+sqrt(2))*gamma4^6/(128*pi^(9/2))",
    ("zucker-csch2-s3", 1): "gamma4^10/(128*pi^(15/2)) - 3*gamma4^6/(32*pi^(11/2))",
    ("zucker-csch2-s3", 4): ("(2+sqrt(2))*gamma4^10/(1024*pi^(15/2))"
                             " - 3*(1+sqrt(2))*gamma4^6/(128*pi^(11/2))"),
    ("half-dc", 1): "sqrt(2+sqrt(2))*gamma4^2/(8*pi^(3/2)) - 1/2",
    ("half-dc", 4): "sqrt(3 + 2*sqrt(2) + 2*sqrt(4+3*sqrt(2)))*gamma4^2/(16*pi^(3/2)) - 1/2",
    ("half-dc-deriv", 1): ("sqrt(2+sqrt(2))*gamma4^2/(4*pi^(5/2))"
                           " - sqrt(2-sqrt(2))*gamma4^6/(64*pi^(9/2))"),
    ("half-dc-deriv", 4): ("(sqrt(1+sqrt(2)) + sqrt(2+sqrt(2)))*gamma4^2/(16*pi^(5/2))"
                           " - sqrt(4 + sqrt(2) + 2^(7/4))*gamma4^6/(256*pi^(9/2))"),
    ("half-dc-s2", 1): "3/2 - sqrt(26+17*sqrt(2))*gamma4^6/(64*pi^(9/2))",
    ("half-dc-s2", 4): ("3/2 - sqrt(54 + 37*sqrt(2) + 4*sqrt(352+249*sqrt(2)))"
                        "*gamma4^6/(128*pi^(9/2))"),
    ("half-dc-csch2-s3", 1): ("sqrt(218+151*sqrt(2))*gamma4^10/(512*pi^(15/2))"
                              " - 3*sqrt(26+17*sqrt(2))*gamma4^6/(32*pi^(11/2))"),
    ("half-dc-csch2-s3", 4): (
        "sqrt(402 + 287*sqrt(2) + 4*sqrt(20296+14358*sqrt(2)))*gamma4^10/(2048*pi^(15/2))"
        " - 3*sqrt(54 + 37*sqrt(2) + 4*sqrt(352+249*sqrt(2)))*gamma4^6/(128*pi^(11/2))"),
    ("nc-alt", 1): "1/4 - gamma4^2/(8*sqrt(2)*pi^(3/2))",
    ("half-nc", 1): "1/2 - sqrt(1+sqrt(2))*gamma4^2/(8*pi^(3/2))",
    ("half-nc", 4): "1/2 - sqrt((2*sqrt(2) + sqrt(4+3*sqrt(2)))/2)*gamma4^2/(8*pi^(3/2))",
    ("qdigamma-dc", 1): "4*pi + sqrt((2+sqrt(2))/pi)*gamma4^2",
    ("qdigamma-dc", 4): "8*pi + sqrt((3 + 2*sqrt(2) + 2*sqrt(4+3*sqrt(2)))/pi)*gamma4^2",
}

# (family, moduli) at which the general closed form is checked directly
_GENERAL_AT = {
    "ramanujan-odd-sech": ("0.3", "0.77", 1),
    "zucker-J0": (1, "0.3", "0.77"),
    "zucker-J2": (1, "0.3", "0.77"),
    "bagis": ("0.3", "0.77", 4),
    "bagis-deriv": ("0.3", "0.6", "0.77", 1),
    "zucker-em1-s2": ("0.3", "0.77"),
    "zucker-csch2-s3": ("0.3", "0.77"),
    "half-dc": ("0.3", "0.77"),
    "half-dc-deriv": ("0.3", "0.77"),
    "half-dc-s2": ("0.3", "0.77"),
    "half-dc-csch2-s3": ("0.3", "0.77"),
    "nc-alt": ("0.3", "0.77"),
    "nc-alt-deriv": ("0.3", "0.6", "0.77", 1),
    "half-nc": ("0.3", "0.77"),
    "half-nc-deriv": ("0.3", "0.77", 1),
    "ns2-square": ("0.3", "0.77"),
    "qdigamma-dc": ("0.3",),
}

_SINGLETONS = [
    # (id, lhs, rhs, r, tol, anchor)
    ("stronger", "gamma4^2/(4*sqrt(2)*pi^(3/2))",
     "sum index=odd s=0 sign=none kernel=sech scale=1/2", 1, GAMMA_TOL,
     "odd sech sum at the lemniscatic modulus, from the nc identity and the combination below"),
    ("berndt-combination", "1/2", "builtin:berndt_combination", 1, ZERO_TOL,
     "2 sum (-1)^n/(e^{(2n+1) pi}+1) + sum sech((2n+1) pi/2) = 1/2"),
    ("berndt-sech2", "1/(2*pi)",
     "sum index=odd s=0 sign=none kernel=sech2 scale=1/2", 1, DEFAULT_TOL,
     "sum_{n>=0} sech^2((2n+1) pi/2); the two-sided sum over all odd integers is 1/pi"),
    ("xu-sech-s2", "gamma4^6/(16*sqrt(2)*pi^(9/2))",
     "sum index=odd s=2 sign=none kernel=sech scale=1/2", 1, GAMMA_TOL,
     "(2n+1)^2 sech((2n+1) pi/2) evaluation"),
    ("xu-sech2-s2", "gamma4^8/(192*pi^6)",
     "sum index=odd s=2 sign=none kernel=sech2 scale=1/2", 1, GAMMA_TOL,
     "(2n+1)^2 sech^2((2n+1) pi/2) evaluation"),
    ("ramanujan-sech-all", "gamma4^2/(4*pi^(3/2)) - 1/2",
     "sum index=all s=0 sign=none kernel=sech scale=1/1", 1, GAMMA_TOL,
     "sum_{n>=1} sech(pi n)"),
    ("ramanujan-zero-m1", "0", "sum index=odd s=3 sign=alt kernel=sech scale=1/2", 1, ZERO_TOL,
     "alternating (2n+1)^{4m-1} sech((2n+1) pi/2) vanishes, m = 1"),
    ("ramanujan-zero-m2", "0", "sum index=odd s=7 sign=alt kernel=sech scale=1/2", 1, ZERO_TOL,
     "alternating (2n+1)^{4m-1} sech((2n+1) pi/2) vanishes, m = 2"),
    ("nanjundiah", "1/6 - 1/(2*pi)", "sum index=all s=0 sign=none kernel=csch2 scale=1/1", 1,
     ZERO_TOL, "sum_{n>=1} csch^2(n pi)"),
    ("ramanujan-n-24", "1/24 - 1/(8*pi)", "sum index=all s=1 sign=none kernel=inv_expm1 scale=2/1",
     1, ZERO_TOL, "sum_{n>=1} n/(e^{2 pi n} - 1)"),
    ("ramanujan-n13-24", "1/24", "sum index=all s=13 sign=none kernel=inv_expm1 scale=2/1",
     1, ZERO_TOL, "sum_{n>=1} n^13/(e^{2 pi n} - 1)"),
    ("berndt-alt-csch", "-1/(4*pi)", "sum index=all s=1 sign=alt kernel=csch scale=1/1", 1,
     DEFAULT_TOL, "sum_{n>=1} (-1)^{n+1} n csch(pi n) = 1/(4 pi)"),
    ("ns2-square-example",
     "-1/(32*pi^2) - (1+sqrt(2))*gamma4^4/(128*pi^4) + (1+sqrt(2))*gamma4^8/(2048*pi^6)",
     "sum index=all s=2 sign=alt kernel=csch2 scale=2/1", 1, GAMMA_TOL,
     "sum_{n>=1} (-1)^n n^2 csch^2(2 n pi) from the ns^2 identity"),
    ("qdigamma-nc-k1", "-4*pi - sqrt((1+sqrt(2))/pi)*gamma4^2", "builtin:qdigamma_nc_quarter", 1,
     GAMMA_TOL, "quarter-period nc identity as a q-digamma combination, base e^{8 pi}"),
    ("qdigamma-sech-k1", "-pi - gamma4^2/(4*sqrt(2*pi))", "builtin:qdigamma_sech_corollary", 1,
     GAMMA_TOL, "Im[psi((1-i)/2) - psi((1+i)/2)], base e^{pi}, from the odd sech sum"),
    ("bagis-bridge-k1", "K/(2*pi) - 1/4", "builtin:bridge_dc_alt", 1, DEFAULT_TOL,
     "dc identity at w = 0 through q-digamma residue classes"),
    ("half-dc-bridge-k1", "sqrt(2+sqrt(2))*gamma4^2/(8*pi^(3/2)) - 1/2", "builtin:bridge_dc_alt2",
     1, GAMMA_TOL, "quarter-period dc identity through q-digamma residue classes"),
    ("half-dc-bridge-k4",
     "sqrt(3 + 2*sqrt(2) + 2*sqrt(4+3*sqrt(2)))*gamma4^2/(16*pi^(3/2)) - 1/2",
     "builtin:bridge_dc_alt2", 4, GAMMA_TOL,
     "quarter-period dc identity at k_4 through q-digamma residue classes"),
    ("nc-bridge-k1", "1/4 - gamma4^2/(8*sqrt(2)*pi^(3/2))", "builtin:bridge_nc_alt", 1, GAMMA_TOL,
     "nc identity at w = 0 through shifted q-digamma residue classes"),
    ("half-nc-bridge-k4",
     "1/2 - sqrt((2*sqrt(2) + sqrt(4+3*sqrt(2)))/2)*gamma4^2/(8*pi^(3/2))",
     "builtin:bridge_nc_alt2", 4, GAMMA_TOL,
     "quarter-period nc identity at k_4 through shifted q-digamma residue classes"),
]


def _suffix(mod) -> str:
    return f"-k{mod}"


def _selector(mod) -> ModulusSelector:
    return ModulusSelector(k=mod) if isinstance(mod, str) else ModulusSelector(r=mod)


@functools.lru_cache(maxsize=1)
def _builtin_records() -> tuple:
    records = []
    for family, moduli in _GENERAL_AT.items():
        for mod in moduli:
            rid = family if (family.startswith("zucker-J") and mod == 1) else family + _suffix(mod)
            records.append(IdentityRecord(
                rid, _GENERAL[family], _SPECS[family], _selector(mod), DEFAULT_TOL,
                _ANCHORS[family] + ", general modulus form"))
    for (family, r), lhs in _SINGULAR.items():
        records.append(IdentityRecord(
            family + _suffix(r), lhs, _SPECS[family], ModulusSelector(r=r), GAMMA_TOL,
            _ANCHORS[family] + f", closed form at k_{r}"))
    for rid, lhs, rhs, r, tol, anchor in _SINGLETONS:
        records.append(IdentityRecord(rid, lhs, rhs, ModulusSelector(r=r), tol, anchor))
    return tuple(records)


def builtin_corpus() -> list[IdentityRecord]:
    return list(_builtin_records())


def shipped_corpus() -> list[IdentityRecord]:
    return load_corpus(SHIPPED_CORPUS)


def find(records, rid: str) -> IdentityRecord:
    for r in records:
        if r.id == rid:
            return r
    raise KeyError(rid)
