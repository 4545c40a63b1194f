"""Hyperbolic and exponential lattice sums with rigorous truncation.

A sum is described by a :class:`SumSpec`; its value at an elliptic context
with ratio rho = K'/K is

    sum_n sign(n) m^s kernel(a m pi rho)

where m = 2n+1 (n >= 0) for the odd index and m = n (n >= 1) for the full
index.  The sign is applied to the summation index n, not to m.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ellipsum import _kernels
from ellipsum.elliptic_core import EllipticContext, dratio_dk
from ellipsum.errors import DomainError
from ellipsum.series import SeriesEval, run_hyper_series

DEFAULT_TOL = 1e-12

SumResult = SeriesEval


class Index(str, enum.Enum):
    odd = "odd"
    all = "all"


class SignPattern(str, enum.Enum):
    none = "none"
    alt = "alt"
    alt2 = "alt2"

    @property
    def code(self) -> int:
        return {"none": _kernels.SIGN_NONE, "alt": _kernels.SIGN_ALT,
                "alt2": _kernels.SIGN_ALT2}[self.value]

    @property
    def period(self) -> int:
        return {"none": 1, "alt": 2, "alt2": 4}[self.value]

    def __call__(self, n: int) -> int:
        return int(_kernels.sign_of(self.code, int(n)))


class Kernel(str, enum.Enum):
    sech = "sech"
    csch = "csch"
    sech2 = "sech2"
    csch2 = "csch2"
    inv_expm1 = "inv_expm1"
    inv_expp1 = "inv_expp1"

    @property
    def code(self) -> int:
        return _KERNEL_CODES[self.value]

    def __call__(self, x: float) -> float:
        return kernel_at(self.code, x)


_KERNEL_CODES = {
    "sech": _kernels.SECH, "csch": _kernels.CSCH, "sech2": _kernels.SECH2,
    "csch2": _kernels.CSCH2, "inv_expm1": _kernels.INV_EXPM1,
    "inv_expp1": _kernels.INV_EXPP1,
}

# term-by-term k-derivative: kernel'(x) = factor * other(x * arg_scale)
_DERIVATIVE_KERNELS = {
    Kernel.inv_expm1: (-0.25, _kernels.CSCH2, 0.5),
    Kernel.inv_expp1: (-0.25, _kernels.SECH2, 0.5),
    Kernel.sech: (-1.0, _kernels.SECH_TANH, 1.0),
    Kernel.csch: (-1.0, _kernels.CSCH_COTH, 1.0),
}


def kernel_at(code: int, x: float) -> float:
    if not x > 0:
        raise DomainError(f"kernels are evaluated for x > 0, got {x!r}")
    return _kernels.kernel_value(int(code), float(x))


def tail_envelope(code: int, x: float) -> tuple[float, float]:
    """(C, p) such that kernel(y) <= C exp(-p y) for all y >= x."""
    return _kernels.tail_envelope(int(code), float(x))


_SPEC_RE = re.compile(
    r"^sum\s+index=(\S+)\s+s=(\S+)\s+sign=(\S+)\s+kernel=(\S+)\s+scale=(\S+)$")


@dataclass(frozen=True)
class SumSpec:
    index: Index
    s: int
    sign: SignPattern
    kernel: Kernel
    scale: Fraction

    def __post_init__(self):
        object.__setattr__(self, "index", Index(self.index))
        object.__setattr__(self, "sign", SignPattern(self.sign))
        object.__setattr__(self, "kernel", Kernel(self.kernel))
        if isinstance(self.s, bool) or int(self.s) != self.s or self.s < 0:
            raise DomainError(f"power s must be a nonnegative integer, got {self.s!r}")
        object.__setattr__(self, "s", int(self.s))
        scale = Fraction(self.scale)
        if scale <= 0:
            raise DomainError(f"scale must be positive, got {scale}")
        object.__setattr__(self, "scale", scale)

    @property
    def odd(self) -> bool:
        return self.index is Index.odd

    def render(self) -> str:
        return (f"sum index={self.index.value} s={self.s} sign={self.sign.value} "
                f"kernel={self.kernel.value} scale={self.scale.numerator}/{self.scale.denominator}")

    @classmethod
    def parse(cls, text: str) -> "SumSpec":
        m = _SPEC_RE.match(text.strip())
        if m is None:
            raise DomainError(f"not a sum specification: {text!r}")
        index, s, sign, kernel, scale = m.groups()
        try:
            return cls(Index(index), int(s), SignPattern(sign), Kernel(kernel), Fraction(scale))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad sum specification {text!r}: {exc}") from None

    def __str__(self) -> str:
        return self.render()


def beta(spec: SumSpec, ctx: EllipticContext) -> float:
    """Kernel argument per unit of m: a pi K'/K."""
    return float(spec.scale) * math.pi * ctx.ratio


def evaluate(spec: SumSpec, ctx: EllipticContext, tol: float = DEFAULT_TOL) -> SumResult:
    return run_hyper_series(spec.odd, spec.s, spec.sign.code, spec.kernel.code,
                            beta(spec, ctx), 0.0, tol)


def d_dk_sum(spec: SumSpec, ctx: EllipticContext, tol: float = DEFAULT_TOL) -> SumResult:
    """Term-by-term derivative in k of ``evaluate(spec, ctx)``.

    Each term depends on k only through rho = K'/K, so
    d/dk kernel(a pi rho m) = a pi rho'(k) m kernel'(a pi rho m).
    """
    if spec.kernel not in _DERIVATIVE_KERNELS:
        raise DomainError(f"no term-by-term derivative for kernel {spec.kernel.value}")
    factor, code, arg_scale = _DERIVATIVE_KERNELS[spec.kernel]
    b = beta(spec, ctx)
    outer = factor * float(spec.scale) * math.pi * dratio_dk(ctx)
    return run_hyper_series(spec.odd, spec.s + 1, spec.sign.code, code,
                            arg_scale * b, 0.0, tol, outer)


def partial_sum(spec: SumSpec, ctx: EllipticContext, terms: int) -> float:
    """First ``terms`` terms summed in NumPy (vectorised, no tail control)."""
    n = np.arange(terms) if spec.odd else np.arange(1, terms + 1)
    m = (2 * n + 1 if spec.odd else n).astype(np.float64)
    if spec.sign is SignPattern.alt:
        sg = np.where(n % 2 == 0, 1.0, -1.0)
    elif spec.sign is SignPattern.alt2:
        sg = np.where((n // 2) % 2 == 0, 1.0, -1.0)
    else:
        sg = np.ones_like(m)
    x = beta(spec, ctx) * m
    e = np.exp(-x)
    kind = spec.kernel
    if kind in (Kernel.sech, Kernel.sech2):
        kv = 2.0 * e / (1.0 + e * e)
    elif kind in (Kernel.csch, Kernel.csch2):
        kv = 2.0 * e / -np.expm1(-2.0 * x)
    elif kind is Kernel.inv_expm1:
        kv = e / -np.expm1(-x)
    else:
        kv = e / (1.0 + e)
    if kind in (Kernel.sech2, Kernel.csch2):
        kv = kv * kv
    return float(math.fsum(sg * m ** spec.s * kv))


def berndt_combination(ctx: EllipticContext, tol: float = DEFAULT_TOL) -> SumResult:
    """2 sum (-1)^n / (e^{(2n+1) pi rho} + 1) + sum sech((2n+1) pi rho / 2).

    Equals 1/2 at the lemniscatic modulus; in general 1/2 + (k - k') K / pi.
    """
    first = evaluate(SumSpec(Index.odd, 0, SignPattern.alt, Kernel.inv_expp1, Fraction(1)),
                     ctx, tol / 4)
    second = evaluate(SumSpec(Index.odd, 0, SignPattern.none, Kernel.sech, Fraction(1, 2)),
                      ctx, tol / 2)
    return SumResult(2.0 * first.value + second.value,
                     first.terms_used + second.terms_used,
                     2.0 * first.tail_bound + second.tail_bound)
