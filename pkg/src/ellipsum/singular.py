"""Singular moduli k_r (K'/K = sqrt(r)), the elliptic alpha function, Gamma(1/4)."""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Optional

from ellipsum import _kernels
from ellipsum.closedform import Expr, parse
from ellipsum.elliptic_core import EllipticContext, Modulus, build_context, complete_K
from ellipsum.errors import ConsistencyError, DomainError

BRACKET = (1e-12, 1.0 - 1e-12)

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SingularValue:
    r: int
    k_r: float
    k_prime: float
    alpha_r: Optional[float] = None
    K_closed: Optional[Expr] = None

    @property
    def modulus(self) -> Modulus:
        return Modulus(self.k_r, self.k_prime)

    def context(self) -> EllipticContext:
        return build_context(self.modulus)


def _k4() -> SingularValue:
    # 3 - 2 sqrt(2) = 1/(3 + 2 sqrt(2)) without the cancellation
    k = 1.0 / (3.0 + 2.0 * _SQRT2)
    return SingularValue(
        4, k, math.sqrt((1.0 - k) * (1.0 + k)),
        alpha_r=2.0 * (_SQRT2 - 1.0) ** 2,
        K_closed=parse("(1+sqrt(2))*gamma4^2/(8*sqrt(2*pi))"),
    )


_TABLE = {
    1: SingularValue(1, _SQRT2 / 2, _SQRT2 / 2, alpha_r=0.5,
                     K_closed=parse("gamma4^2/(4*sqrt(pi))")),
    4: _k4(),
}


def ratio_at(k: float) -> float:
    """K'(k)/K(k) = agm(1, k') / agm(1, k)."""
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return _kernels.agm(1.0, kp) / _kernels.agm(1.0, k)


def solve_singular_modulus(r: float) -> float:
    """Bisection for K'/K = sqrt(r) down to adjacent floats; the ratio decreases in k."""
    target = math.sqrt(r)
    lo, hi = BRACKET
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        if ratio_at(mid) > target:
            lo = mid
        else:
            hi = mid


@functools.lru_cache(maxsize=64)
def singular_modulus(r: int) -> SingularValue:
    if int(r) != r or r < 1:
        raise DomainError(f"singular values are indexed by positive integers, got {r!r}")
    r = int(r)
    if r in _TABLE:
        return _TABLE[r]
    k = solve_singular_modulus(r)
    return SingularValue(r, k, math.sqrt((1.0 - k) * (1.0 + k)))


@functools.lru_cache(maxsize=1)
def gamma_quarter() -> float:
    """Gamma(1/4) from K(k_1) = Gamma(1/4)^2 / (4 sqrt(pi))."""
    return math.sqrt(4.0 * math.sqrt(math.pi) * complete_K(_TABLE[1].modulus))


def gamma_quarter_from_k4() -> float:
    """Gamma(1/4) from K(k_4) = (1 + sqrt 2) Gamma(1/4)^2 / (8 sqrt(2 pi))."""
    big_k = complete_K(_TABLE[4].modulus)
    return math.sqrt(8.0 * math.sqrt(2.0 * math.pi) * big_k / (1.0 + _SQRT2))


def elliptic_alpha(r: int, ctx: Optional[EllipticContext] = None) -> float:
    """alpha(r) = pi / (4 K^2) + sqrt(r) - sqrt(r) E / K, all at k_r."""
    if ctx is None:
        ctx = singular_modulus(r).context()
    root = math.sqrt(r)
    return math.pi / (4.0 * ctx.K ** 2) + root - root * ctx.E / ctx.K


def e_prime_from_alpha(ctx: EllipticContext, r: int, alpha_r: float) -> float:
    """E' = pi / (4K) + alpha(r) K, checked against the context's own E'."""
    value = math.pi / (4.0 * ctx.K) + alpha_r * ctx.K
    if abs(value - ctx.E_prime) > 1e-9:
        raise ConsistencyError(
            f"E' from alpha({r}) = {value!r} disagrees with E' = {ctx.E_prime!r}; "
            "is the context built at k_r?")
    return value
