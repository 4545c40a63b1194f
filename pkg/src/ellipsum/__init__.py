"""Elliptic integrals, Jacobi elliptic functions and hyperbolic lattice sums.

The hot loops live in :mod:`ellipsum._kernels` and are compiled with numba
when it is available; set ``ELLIPSUM_DISABLE_NUMBA=1`` to run them as plain
Python/NumPy instead.
"""
from ellipsum._accel import BACKEND
from ellipsum.elliptic_core import (EllipticContext, Modulus, build_context, complete_E,
                                    complete_K, incomplete_F)
from ellipsum.hypersum import Index, Kernel, SignPattern, SumSpec
from ellipsum.jacobi import JacobiCode, jacobi_fn
from ellipsum.singular import gamma_quarter, singular_modulus

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "EllipticContext", "Index", "JacobiCode", "Kernel", "Modulus", "SignPattern",
    "SumSpec", "build_context", "complete_E", "complete_K", "gamma_quarter", "incomplete_F",
    "jacobi_fn", "singular_modulus",
]
