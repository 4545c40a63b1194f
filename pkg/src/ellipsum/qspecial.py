"""The q-digamma function and its link to exponential lattice sums.

For 0 < q < 1,

    psi_q(z) = -ln(1 - q) + ln q * sum_{n>=0} q^(n+z) / (1 - q^(n+z)).

Bases q > 1 use the reflection that follows from
Gamma_q(x) = q^((x-1)(x-2)/2) Gamma_{1/q}(x):

    psi_q(z) = (z - 3/2) ln q + psi_{1/q}(z).

With this convention the combinations over base e^{8 pi rho} (dc and nc at
quarter period) and e^{pi rho} (the sech sum) reproduce their closed forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ellipsum import _kernels
from ellipsum.elliptic_core import EllipticContext
from ellipsum.errors import ConsistencyError, ConvergenceError, DomainError, MappingError, PoleError
from ellipsum.hypersum import Index, Kernel, SumSpec
from ellipsum.series import MAX_TERMS

DEFAULT_TOL = 1e-15


@dataclass(frozen=True)
class QDigammaArg:
    """Base q > 0, q != 1, and argument z off the pole set."""

    q: float
    z: complex

    def __post_init__(self):
        q = float(self.q)
        if not (q > 0.0 and q != 1.0 and math.isfinite(q)):
            raise DomainError(f"q-digamma base must be positive and != 1, got {q!r}")
        z = complex(self.z)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "z", z)
        # q^(n+z) = 1 iff n + Re z = 0 and Im z ln q in 2 pi Z
        if z.real <= 0 and abs(z.real - round(z.real)) < 1e-15:
            turns = z.imag * math.log(q) / (2.0 * math.pi)
            if abs(turns - round(turns)) < 1e-15:
                raise PoleError(f"z={z!r} is a pole of psi_q", 0.0)

    @property
    def log_q(self) -> float:
        return math.log(self.q)


def _series(log_p: float, z: complex, tol: float):
    """(ln(1-p) free part) sum_{n>=0} p^(n+z)/(1-p^(n+z)) with log_p < 0."""
    value, terms, tail, status = _kernels.qdigamma_sum(log_p, z, tol, MAX_TERMS)
    if status == _kernels.POLE:
        raise PoleError(f"q^(n+z) = 1 at n={terms} for z={z!r}", 0.0)
    if status != _kernels.OK:
        raise ConvergenceError(f"q-digamma series did not reach tol={tol:g}", terms, tail)
    return value


def q_digamma(arg: QDigammaArg, tol: float = DEFAULT_TOL) -> complex:
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    log_q = arg.log_q
    z = arg.z
    log_p = -abs(log_q)
    p = math.exp(log_p)
    s = _series(log_p, z, tol / abs(log_p))
    value = -math.log1p(-p) + log_p * s
    if log_q > 0:
        value += (z - 1.5) * log_q
    if z.imag == 0.0:
        return complex(value.real, 0.0)
    return value


def psi(q: float, z: complex, tol: float = DEFAULT_TOL) -> complex:
    return q_digamma(QDigammaArg(q, z), tol)


# -- sums as q-digamma combinations -------------------------------------------

@dataclass(frozen=True)
class BridgeTerm:
    """coeff * (psi_p(z) + ln(1 - p)) / ln p, base p < 1 given by log_p."""

    coeff: float
    log_p: float
    z: complex


def bridge_terms(spec: SumSpec, ctx: EllipticContext) -> list[BridgeTerm]:
    """Split the series by residue class of n modulo the sign period.

    For n = L t + i every class is a geometric family in t, and
    sum_t w/(1 - w) with w = p^(t + z) is (psi_p(z) + ln(1 - p)) / ln p.
    1/(e^x + 1) = -(-w)/(1 - (-w)) shifts z by i pi / ln p.
    """
    if spec.s != 0 or spec.kernel not in (Kernel.inv_expm1, Kernel.inv_expp1):
        raise MappingError(f"no q-digamma form for {spec.render()}")
    period = spec.sign.period
    b = float(spec.scale) * math.pi * ctx.ratio
    terms = []
    if spec.index is Index.odd:
        log_p = -2.0 * period * b
        classes = [(i, Fraction(2 * i + 1, 2 * period)) for i in range(period)]
    else:
        log_p = -period * b
        classes = [(i, Fraction(i, period)) for i in range(1, period + 1)]
    for i, z in classes:
        coeff = float(spec.sign(i))
        zc = complex(float(z), 0.0)
        if spec.kernel is Kernel.inv_expp1:
            coeff = -coeff
            zc += complex(0.0, math.pi / log_p)
        terms.append(BridgeTerm(coeff, log_p, zc))
    return terms


def qdigamma_sum_bridge(spec: SumSpec, ctx: EllipticContext,
                        tol: float = DEFAULT_TOL) -> complex:
    """The series of ``spec`` assembled from q-digamma values."""
    total = 0j
    for t in bridge_terms(spec, ctx):
        p = math.exp(t.log_p)
        value = q_digamma(QDigammaArg(p, t.z), tol)
        total += t.coeff * (value + math.log1p(-p)) / t.log_p
    return total


_QUARTER = (Fraction(1, 8), Fraction(3, 8), Fraction(5, 8), Fraction(7, 8))
_QUARTER_SIGNS = (-1.0, -1.0, 1.0, 1.0)


def qdigamma_dc_quarter(ctx: EllipticContext, tol: float = DEFAULT_TOL) -> float:
    """-psi(1/8) - psi(3/8) + psi(5/8) + psi(7/8), base e^{8 pi rho}.

    Equals 4 pi rho + 4 K' (sqrt(1-k) + sqrt(1+k)).
    """
    q = math.exp(8.0 * math.pi * ctx.ratio)
    total = sum(c * psi(q, float(z), tol) for c, z in zip(_QUARTER_SIGNS, _QUARTER))
    return total.real


def qdigamma_nc_quarter(ctx: EllipticContext, tol: float = DEFAULT_TOL) -> float:
    """psi((1-i')/8) + psi((3-i')/8) - psi((5-i')/8) - psi((7-i')/8), i' = i/rho.

    Base e^{8 pi rho}; equals -4 pi rho - 4 K' sqrt(k') (sqrt(1-k) + sqrt(1+k)).
    The combination is real; an imaginary part above 1e-9 raises
    :class:`ConsistencyError`.
    """
    q = math.exp(8.0 * math.pi * ctx.ratio)
    shift = complex(0.0, -1.0 / (8.0 * ctx.ratio))
    value = sum(-c * psi(q, float(z) + shift, tol) for c, z in zip(_QUARTER_SIGNS, _QUARTER))
    if abs(value.imag) > 1e-9:
        raise ConsistencyError(f"nc q-digamma combination has imaginary part {value.imag!r}")
    return value.real


def qdigamma_sech_corollary(ctx: EllipticContext, tol: float = DEFAULT_TOL) -> float:
    """Imaginary part of psi(1/2 - i/(2 rho)) - psi(1/2 + i/(2 rho)), base e^{pi rho}.

    The difference is purely imaginary, -i (pi + k K'); a real part above
    1e-9 raises :class:`ConsistencyError`.
    """
    q = math.exp(math.pi * ctx.ratio)
    dz = complex(0.0, 0.5 / ctx.ratio)
    value = psi(q, 0.5 - dz, tol) - psi(q, 0.5 + dz, tol)
    if abs(value.real) > 1e-9:
        raise ConsistencyError(f"conjugate q-digamma difference has real part {value.real!r}")
    return value.imag
