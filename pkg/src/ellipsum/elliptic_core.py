"""Complete and incomplete elliptic integrals, the nome, and k-derivatives.

All quantities use the modulus convention of the first-kind integral

    F(phi, k) = int_0^phi dt / sqrt(1 - k^2 sin^2 t),

i.e. k enters squared under the root (not the parameter m = k^2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ellipsum import _kernels
from ellipsum.errors import DomainError

_ULP_SLACK = 4 * _kernels.EPS


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus k in (0, 1) and its complement k' = sqrt(1 - k^2).

    ``k_prime`` may be supplied when a closed form is known (e.g. k = k' at
    the lemniscatic point); it must agree with k to a few ulps.
    """

    k: float
    k_prime: float = field(default=None)

    def __post_init__(self):
        k = float(self.k)
        if not (0.0 < k < 1.0):
            raise DomainError(f"modulus must lie in (0, 1), got {k!r}")
        object.__setattr__(self, "k", k)
        if self.k_prime is None:
            object.__setattr__(self, "k_prime", math.sqrt((1.0 - k) * (1.0 + k)))
        else:
            kp = float(self.k_prime)
            if not (0.0 < kp < 1.0) or abs(k * k + kp * kp - 1.0) > _ULP_SLACK:
                raise DomainError(f"k_prime={kp!r} is not the complement of k={k!r}")
            object.__setattr__(self, "k_prime", kp)

    def complement(self) -> Modulus:
        return Modulus(self.k_prime, self.k)


def as_modulus(k) -> Modulus:
    return k if isinstance(k, Modulus) else Modulus(k)


@dataclass(frozen=True)
class EllipticContext:
    """Every modulus-indexed quantity the series and closed forms need."""

    modulus: Modulus
    K: float
    E: float
    K_prime: float
    E_prime: float
    q: float
    ratio: float

    @property
    def k(self) -> float:
        return self.modulus.k

    @property
    def k_prime(self) -> float:
        return self.modulus.k_prime

    @property
    def legendre_defect(self) -> float:
        """|E K' + E' K - K K' - pi/2|."""
        return abs(self.E * self.K_prime + self.E_prime * self.K
                   - self.K * self.K_prime - math.pi / 2)

    def complement(self) -> EllipticContext:
        """Context at k' (K and K' swapped); no recomputation."""
        ratio = self.K / self.K_prime
        return EllipticContext(self.modulus.complement(), self.K_prime, self.E_prime,
                               self.K, self.E, math.exp(-math.pi * ratio), ratio)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    if not (a > 0 and b > 0):
        raise DomainError(f"agm needs positive arguments, got ({a!r}, {b!r})")
    return _kernels.agm(float(a), float(b))


def complete_K(k) -> float:
    m = as_modulus(k)
    return math.pi / (2.0 * _kernels.agm(1.0, m.k_prime))


def complete_E(k) -> float:
    m = as_modulus(k)
    return _kernels.agm_ke(m.k, m.k_prime)[1]


def complete_KE_many(ks) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised (K, E) over an array of moduli in (0, 1)."""
    ks = np.ascontiguousarray(ks, dtype=np.float64)
    if ks.ndim != 1 or np.any((ks <= 0) | (ks >= 1)):
        raise DomainError("moduli must be a 1-D array inside (0, 1)")
    kps = np.sqrt((1.0 - ks) * (1.0 + ks))
    return _kernels.agm_ke_array(ks, kps)


def incomplete_F(phi: float, k) -> float:
    """Incomplete integral of the first kind for |phi| <= pi/2 (Carlson R_F)."""
    m = as_modulus(k)
    if not abs(phi) <= math.pi / 2 * (1 + _kernels.EPS):
        raise DomainError(f"amplitude must satisfy |phi| <= pi/2, got {phi!r}")
    if phi == 0.0:
        return 0.0
    s = math.sin(phi)
    c = math.cos(phi)
    ks = m.k * s
    return s * _kernels.carlson_rf(c * c, (1.0 - ks) * (1.0 + ks), 1.0)


def build_context(k) -> EllipticContext:
    m = as_modulus(k)
    big_k, big_e = _kernels.agm_ke(m.k, m.k_prime)
    big_kp, big_ep = _kernels.agm_ke(m.k_prime, m.k)
    ratio = big_kp / big_k
    return EllipticContext(m, big_k, big_e, big_kp, big_ep, math.exp(-math.pi * ratio), ratio)


def dK_dk(ctx: EllipticContext) -> float:
    """dK/dk = (E - k'^2 K) / (k k'^2)."""
    kp2 = ctx.k_prime * ctx.k_prime
    return (ctx.E - kp2 * ctx.K) / (ctx.k * kp2)


def dE_dk(ctx: EllipticContext) -> float:
    """dE/dk = (E - K) / k."""
    return (ctx.E - ctx.K) / ctx.k


def dKp_dk(ctx: EllipticContext) -> float:
    """dK'/dk via the chain rule through k' (dk'/dk = -k/k')."""
    return -dK_dk(ctx.complement()) * ctx.k / ctx.k_prime


def dratio_dk(ctx: EllipticContext) -> float:
    """d(K'/K)/dk; equals -pi / (2 k k'^2 K^2) by the Legendre relation."""
    return (ctx.K * dKp_dk(ctx) - ctx.K_prime * dK_dk(ctx)) / (ctx.K * ctx.K)
