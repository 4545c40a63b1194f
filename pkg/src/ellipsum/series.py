"""Series results carrying truncation evidence, and the kernel-call wrapper."""
from __future__ import annotations

import math
from dataclasses import dataclass

from ellipsum import _kernels
from ellipsum.errors import ConvergenceError, DomainError

MAX_TERMS = 10**6


@dataclass(frozen=True)
class SeriesEval:
    """A truncated series value.

    ``tail_bound`` is a rigorous bound on the discarded tail, in the same
    units as ``value``.
    """

    value: float
    terms_used: int
    tail_bound: float


def run_hyper_series(odd: bool, s: int, sign: int, kind: int, beta: float,
                     theta: float = 0.0, tol: float = 1e-15,
                     scale: float = 1.0) -> SeriesEval:
    """Evaluate ``scale * sum sign(n) m^s kernel(beta m) cos(theta m)``.

    ``tol`` applies to the scaled result.
    """
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    if not beta > 0:
        raise DomainError(f"kernel argument scale must be positive, got {beta!r}")
    inner_tol = tol / abs(scale)
    value, terms, tail, status = _kernels.hyper_series(
        bool(odd), int(s), int(sign), int(kind), float(beta), float(theta),
        inner_tol, MAX_TERMS)
    if status != _kernels.OK:
        raise ConvergenceError(
            f"series did not reach tol={tol:g} within {MAX_TERMS} terms",
            terms, abs(scale) * tail)
    return SeriesEval(scale * value, terms, abs(scale) * tail)


def near_half_integer(w: float, gap: float) -> bool:
    return abs(w - 0.5 - math.floor(w)) < gap or abs(w + 0.5 - math.ceil(w)) < gap


def near_integer(w: float, gap: float) -> bool:
    return abs(w - round(w)) < gap
