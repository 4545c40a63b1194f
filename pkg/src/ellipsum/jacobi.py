"""The twelve Jacobi elliptic functions, their u-derivatives, half-K values.

sn, cn and dn come from the descending Landen (AGM) recursion for the
amplitude; the nine remaining functions are quotients of these three.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ellipsum import _kernels
from ellipsum.elliptic_core import EllipticContext
from ellipsum.errors import PoleError

POLE_GUARD = 1e-12


class JacobiCode(str, enum.Enum):
    sn = "sn"
    cn = "cn"
    dn = "dn"
    cd = "cd"
    cs = "cs"
    dc = "dc"
    ds = "ds"
    nc = "nc"
    nd = "nd"
    ns = "ns"
    sc = "sc"
    sd = "sd"


# (numerator, denominator) letters; 'n' stands for the constant 1
QUOTIENTS = {code: (code.value[0], code.value[1]) for code in JacobiCode
             if code.value not in ("sn", "cn", "dn")}


@dataclass(frozen=True)
class JacobiPoint:
    u: float
    ctx: EllipticContext
    sn: float
    cn: float
    dn: float

    def part(self, letter: str) -> float:
        if letter == "n":
            return 1.0
        return {"s": self.sn, "c": self.cn, "d": self.dn}[letter]


def amplitude(u: float, ctx: EllipticContext) -> float:
    return _kernels.landen_amplitude(float(u), ctx.k, ctx.k_prime)


def jacobi_point(u: float, ctx: EllipticContext) -> JacobiPoint:
    sn, cn, dn = _kernels.sncndn(float(u), ctx.k, ctx.k_prime)
    return JacobiPoint(float(u), ctx, sn, cn, dn)


def sncndn_many(us, ctx: EllipticContext) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised (sn, cn, dn) over an array of real arguments."""
    us = np.ascontiguousarray(us, dtype=np.float64).ravel()
    return _kernels.sncndn_array(us, ctx.k, ctx.k_prime)


def _denominator(code: JacobiCode, p: JacobiPoint) -> float:
    if code.value in ("sn", "cn", "dn"):
        return 1.0
    return p.part(QUOTIENTS[code][1])


def _check_pole(code: JacobiCode, p: JacobiPoint) -> float:
    den = _denominator(code, p)
    if abs(den) <= POLE_GUARD:
        raise PoleError(f"{code.value}({p.u!r}) is at a pole", abs(den))
    return den


def jacobi_fn(code, u: float, ctx: EllipticContext) -> float:
    code = JacobiCode(code)
    p = jacobi_point(u, ctx)
    return value_at(code, p)


def value_at(code, p: JacobiPoint) -> float:
    code = JacobiCode(code)
    if code.value in ("sn", "cn", "dn"):
        return p.part(code.value[0])
    den = _check_pole(code, p)
    return p.part(QUOTIENTS[code][0]) / den


def derivative_at(code, p: JacobiPoint) -> float:
    """u-derivative from sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn."""
    code = JacobiCode(code)
    _check_pole(code, p)
    sn, cn, dn = p.sn, p.cn, p.dn
    k2 = p.ctx.k * p.ctx.k
    kp2 = p.ctx.k_prime * p.ctx.k_prime
    if code is JacobiCode.sn:
        return cn * dn
    if code is JacobiCode.cn:
        return -sn * dn
    if code is JacobiCode.dn:
        return -k2 * sn * cn
    if code is JacobiCode.cd:
        return -kp2 * sn / (dn * dn)
    if code is JacobiCode.cs:
        return -dn / (sn * sn)
    if code is JacobiCode.dc:
        return kp2 * sn / (cn * cn)
    if code is JacobiCode.ds:
        return -cn / (sn * sn)
    if code is JacobiCode.nc:
        return sn * dn / (cn * cn)
    if code is JacobiCode.nd:
        return k2 * sn * cn / (dn * dn)
    if code is JacobiCode.ns:
        return -cn * dn / (sn * sn)
    if code is JacobiCode.sc:
        return dn / (cn * cn)
    return cn / (dn * dn)  # sd


def jacobi_du(code, u: float, ctx: EllipticContext) -> float:
    return derivative_at(code, jacobi_point(u, ctx))


def dc_second_derivative(p: JacobiPoint) -> float:
    """d^2 dc / du^2 = dn (dn^2 - k^2 cn^2)(cn^2 + 2 sn^2) / cn^3."""
    _check_pole(JacobiCode.dc, p)
    k2 = p.ctx.k * p.ctx.k
    sn, cn, dn = p.sn, p.cn, p.dn
    return dn * (dn * dn - k2 * cn * cn) * (cn * cn + 2.0 * sn * sn) / cn ** 3


def half_K_values(ctx: EllipticContext) -> tuple[float, float, float]:
    """Closed forms for (sn, cn, dn) at u = K/2."""
    k = ctx.k
    root4 = math.sqrt(ctx.k_prime)  # (1 - k^2)^(1/4)
    denom = math.sqrt(1.0 + k) + math.sqrt(1.0 - k)
    return math.sqrt(2.0) / denom, math.sqrt(2.0) * root4 / denom, root4
