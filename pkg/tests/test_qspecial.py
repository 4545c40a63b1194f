import cmath
import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from ellipsum import hypersum
from ellipsum.elliptic_core import build_context
from ellipsum.errors import DomainError, MappingError, PoleError
from ellipsum.hypersum import Index, Kernel, SignPattern, SumSpec
from ellipsum.qspecial import (QDigammaArg, bridge_terms, psi, q_digamma, qdigamma_dc_quarter,
                               qdigamma_nc_quarter, qdigamma_sech_corollary,
                               qdigamma_sum_bridge)

bases = st.one_of(st.floats(0.05, 0.95), st.floats(1.05, 20.0))
args = st.builds(complex, st.floats(0.1, 3.0), st.floats(-2.0, 2.0))


@given(bases, args)
def test_recurrence(q, z):
    # psi_q(z+1) - psi_q(z) = -ln q * q^z / (1 - q^z) for every admissible base
    qz = cmath.exp(z * math.log(q))
    step = -math.log(q) * qz / (1 - qz)
    assert psi(q, z + 1) - psi(q, z) == pytest.approx(step, abs=1e-11 * max(1, abs(step)))


@given(bases, args)
def test_conjugate_symmetry(q, z):
    assert psi(q, z.conjugate()) == pytest.approx(psi(q, z).conjugate(), abs=1e-12)


@given(bases, st.floats(0.1, 5.0))
def test_real_argument_is_real(q, x):
    assert psi(q, x).imag == 0.0


def _mp_psi(q, z):
    mpmath.mp.dps = 30
    return complex(mpmath.diff(lambda x: mpmath.log(mpmath.qgamma(x, q)), z))


@pytest.mark.parametrize("q, z", [(0.3, 0.7), (0.8, 1.3), (3.0, 0.7), (0.5, 0.4 + 0.3j),
                                  (7.0, 0.25), (0.95, 2.5)])
def test_against_mpmath(q, z):
    assert psi(q, z) == pytest.approx(_mp_psi(q, z), abs=1e-12)


def test_classical_limit():
    # psi_q -> digamma as q -> 1; psi(1) = -euler gamma
    assert psi(0.999, 1.0).real == pytest.approx(-0.5772156649, abs=2e-3)


@pytest.mark.parametrize("q", [0.0, -1.0, 1.0, float("nan"), float("inf")])
def test_bad_base(q):
    with pytest.raises(DomainError):
        QDigammaArg(q, 0.5)


@pytest.mark.parametrize("z", [0.0, -1.0, -3.0])
def test_real_poles(z):
    with pytest.raises(PoleError):
        QDigammaArg(0.5, z)


def test_complex_pole():
    q = 0.5
    with pytest.raises(PoleError):
        QDigammaArg(q, complex(-2.0, 2 * math.pi / math.log(q)))


def test_bad_tol():
    with pytest.raises(DomainError):
        q_digamma(QDigammaArg(0.5, 0.5), tol=0.0)


BRIDGE_SPECS = [SumSpec(i, 0, s, kern, a) for i in Index for s in SignPattern
                for kern in (Kernel.inv_expm1, Kernel.inv_expp1) for a in ("1", "1/2", "2")]


@pytest.mark.parametrize("spec", BRIDGE_SPECS, ids=str)
@pytest.mark.parametrize("k", [0.3, 1 / math.sqrt(2), 0.9])
def test_bridge_matches_series(spec, k):
    ctx = build_context(k)
    direct = hypersum.evaluate(spec, ctx, 1e-15).value
    bridged = qdigamma_sum_bridge(spec, ctx)
    assert bridged.real == pytest.approx(direct, abs=1e-12)
    assert abs(bridged.imag) < 1e-12


def test_bridge_term_count():
    ctx = build_context(0.5)
    spec = SumSpec("odd", 0, "alt2", "inv_expm1", 1)
    terms = bridge_terms(spec, ctx)
    assert len(terms) == 4
    assert [t.coeff for t in terms] == [1.0, 1.0, -1.0, -1.0]


@pytest.mark.parametrize("spec", [SumSpec("odd", 1, "none", "inv_expm1", 1),
                                  SumSpec("all", 0, "none", "sech", 1)], ids=str)
def test_unmappable(spec):
    with pytest.raises(MappingError):
        bridge_terms(spec, build_context(0.5))


@pytest.mark.parametrize("k", [0.2, 0.5, 1 / math.sqrt(2), 0.9])
def test_dc_quarter(k):
    ctx = build_context(k)
    rho = ctx.ratio
    closed = 4 * math.pi * rho + 4 * ctx.K_prime * (math.sqrt(1 - k) + math.sqrt(1 + k))
    assert qdigamma_dc_quarter(ctx) == pytest.approx(closed, rel=1e-12)


@pytest.mark.parametrize("k", [0.2, 0.5, 1 / math.sqrt(2), 0.9])
def test_nc_quarter(k):
    ctx = build_context(k)
    closed = -4 * math.pi * ctx.ratio - 4 * ctx.K_prime * math.sqrt(ctx.k_prime) * (
        math.sqrt(1 - k) + math.sqrt(1 + k))
    assert qdigamma_nc_quarter(ctx) == pytest.approx(closed, rel=1e-12)


@pytest.mark.parametrize("k", [0.2, 0.5, 1 / math.sqrt(2), 0.9])
def test_sech_corollary(k):
    ctx = build_context(k)
    assert qdigamma_sech_corollary(ctx) == pytest.approx(-math.pi - k * ctx.K_prime, rel=1e-12)
