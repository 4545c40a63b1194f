"""Fourier expansions of dc, nc, ns^2 and of the second u-derivative of dc.

Every expansion is written with the argument u = 2wK and with the nome only
in exponential denominators, 1/(exp(x) -+ 1) where x = m pi K'/K, so that no
q-power is ever formed explicitly.
"""
from __future__ import annotations

import math

from ellipsum import _kernels
from ellipsum.elliptic_core import EllipticContext
from ellipsum.errors import DomainError, PoleError
from ellipsum.jacobi import dc_second_derivative, jacobi_point
from ellipsum.series import SeriesEval, near_half_integer, near_integer, run_hyper_series

POLE_GAP = 1e-6
DEFAULT_TOL = 1e-14


def _check_sec_pole(w: float):
    if near_half_integer(w, POLE_GAP):
        raise PoleError(f"w={w!r} is within {POLE_GAP} of a sec(pi w) pole",
                        abs(math.cos(math.pi * w)))


def _check_tol(tol: float):
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")


def dc_series(w: float, ctx: EllipticContext, tol: float = DEFAULT_TOL) -> SeriesEval:
    """dc(2wK, k) = pi/(2K) [sec(pi w) + 4 sum (-1)^n cos((2n+1) pi w) / (e^x - 1)]."""
    _check_sec_pole(w)
    _check_tol(tol)
    pre = math.pi / (2.0 * ctx.K)
    body = run_hyper_series(True, 0, _kernels.SIGN_ALT, _kernels.INV_EXPM1,
                            math.pi * ctx.ratio, math.pi * w, tol, 4.0 * pre)
    head = pre / math.cos(math.pi * w)
    return SeriesEval(head + body.value, body.terms_used, body.tail_bound)


def nc_series(w: float, ctx: EllipticContext, tol: float = DEFAULT_TOL) -> SeriesEval:
    """nc(2wK, k) = pi/(2k'K) sec(pi w) - 2pi/(k'K) sum (-1)^n cos((2n+1) pi w) / (e^x + 1)."""
    _check_sec_pole(w)
    _check_tol(tol)
    pre = math.pi / (ctx.k_prime * ctx.K)
    body = run_hyper_series(True, 0, _kernels.SIGN_ALT, _kernels.INV_EXPP1,
                            math.pi * ctx.ratio, math.pi * w, tol, -2.0 * pre)
    head = 0.5 * pre / math.cos(math.pi * w)
    return SeriesEval(head + body.value, body.terms_used, body.tail_bound)


def ns2_series(w: float, ctx: EllipticContext, tol: float = DEFAULT_TOL) -> SeriesEval:
    """ns^2(2wK, k) from

    (2K/pi)^2 ns^2 = 4K(K - E)/pi^2 + csc^2(pi w) - 8 sum n cos(2n pi w) / (e^{2n pi K'/K} - 1).
    """
    if near_integer(w, POLE_GAP):
        raise PoleError(f"w={w!r} is within {POLE_GAP} of a csc(pi w) pole",
                        abs(math.sin(math.pi * w)))
    _check_tol(tol)
    norm = (math.pi / (2.0 * ctx.K)) ** 2
    body = run_hyper_series(False, 1, _kernels.SIGN_NONE, _kernels.INV_EXPM1,
                            2.0 * math.pi * ctx.ratio, 2.0 * math.pi * w, tol, -8.0 * norm)
    head = 4.0 * ctx.K * (ctx.K - ctx.E) / math.pi ** 2 + 1.0 / math.sin(math.pi * w) ** 2
    return SeriesEval(norm * head + body.value, body.terms_used, body.tail_bound)


def dc_d2u_pair(w: float, ctx: EllipticContext,
                tol: float = DEFAULT_TOL) -> tuple[float, SeriesEval]:
    """Both sides of the second-derivative expansion of dc at u = 2wK.

    lhs is the closed form dn (dn^2 - k^2 cn^2)(cn^2 + 2 sn^2) / cn^3 from
    the Jacobi evaluation; rhs is

        pi^3 (3 - cos(2 pi w)) sec^3(pi w) / (16 K^3)
          - pi^3/(2K^3) sum (-1)^n (2n+1)^2 cos((2n+1) pi w) / (e^x - 1).
    """
    _check_sec_pole(w)
    _check_tol(tol)
    lhs = dc_second_derivative(jacobi_point(2.0 * w * ctx.K, ctx))
    k3 = ctx.K ** 3
    body = run_hyper_series(True, 2, _kernels.SIGN_ALT, _kernels.INV_EXPM1,
                            math.pi * ctx.ratio, math.pi * w, tol,
                            -math.pi ** 3 / (2.0 * k3))
    sec = 1.0 / math.cos(math.pi * w)
    head = math.pi ** 3 * (3.0 - math.cos(2.0 * math.pi * w)) * sec ** 3 / (16.0 * k3)
    return lhs, SeriesEval(head + body.value, body.terms_used, body.tail_bound)
