import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from ellipsum.corpus import builtin_corpus
from ellipsum.elliptic_core import build_context, dratio_dk
from ellipsum.errors import DomainError
from ellipsum.hypersum import (Index, Kernel, SignPattern, SumSpec, berndt_combination, beta,
                               d_dk_sum, evaluate, kernel_at, partial_sum, tail_envelope)


class TestKernels:
    @given(st.floats(0.5, 20.0))
    def test_exponential_kernels_vs_hyperbolic(self, x):
        assert Kernel.inv_expm1(x) == pytest.approx((1 / math.tanh(x / 2) - 1) / 2, abs=1e-14)
        assert Kernel.inv_expp1(x) == pytest.approx((1 - math.tanh(x / 2)) / 2, abs=1e-14)

    @given(st.floats(0.05, 30.0))
    def test_cross_identities(self, x):
        assert Kernel.inv_expm1(x) + Kernel.inv_expp1(x) == pytest.approx(Kernel.csch(x), rel=1e-14)
        assert Kernel.inv_expm1(x) - Kernel.inv_expp1(x) == pytest.approx(
            2 * Kernel.inv_expm1(2 * x), rel=1e-13)
        assert Kernel.sech2(x) == pytest.approx(Kernel.sech(x) ** 2, rel=1e-14)
        assert Kernel.csch2(x) == pytest.approx(Kernel.csch(x) ** 2, rel=1e-14)
        assert Kernel.sech(x) == pytest.approx(1 / math.cosh(x), rel=1e-14)

    def test_no_overflow(self):
        assert Kernel.sech(800.0) == 0.0 and Kernel.csch2(1000.0) == 0.0

    @pytest.mark.parametrize("kern", list(Kernel))
    def test_positive_decreasing(self, kern):
        xs = [0.1 * 1.3 ** i for i in range(40)]
        vals = [kern(x) for x in xs]
        assert all(v > 0 for v in vals[:25])
        assert all(a > b for a, b in zip(vals, vals[1:]) if b > 0)

    def test_domain(self):
        with pytest.raises(DomainError):
            kernel_at(Kernel.sech.code, 0.0)

    @pytest.mark.parametrize("kern", list(Kernel))
    @pytest.mark.parametrize("x0", [0.05, 0.5, 1.0, 3.0])
    def test_tail_envelope_bounds_kernel(self, kern, x0):
        c, p = tail_envelope(kern.code, x0)
        for i in range(200):
            y = x0 + 0.05 * i
            assert kern(y) <= c * math.exp(-p * y) * (1 + 1e-14)


class TestSumSpec:
    def test_render_parse(self):
        spec = SumSpec("odd", 0, "alt", "csch", Fraction(1, 2))
        assert spec.render() == "sum index=odd s=0 sign=alt kernel=csch scale=1/2"
        assert SumSpec.parse(spec.render()) == spec

    @pytest.mark.parametrize("text", ["sum index=odd s=-1 sign=alt kernel=csch scale=1/2",
                                      "sum index=even s=0 sign=alt kernel=csch scale=1",
                                      "sum index=odd s=0 sign=alt kernel=tanh scale=1",
                                      "sum index=odd s=0 sign=alt kernel=csch scale=0",
                                      "sum index=odd s=0 sign=alt kernel=csch scale=1/0",
                                      "total index=odd"])
    def test_bad_specs(self, text):
        with pytest.raises(DomainError):
            SumSpec.parse(text)

    def test_sign_patterns(self):
        assert [SignPattern.alt2(n) for n in range(8)] == [1, 1, -1, -1, 1, 1, -1, -1]
        assert [SignPattern.alt(n) for n in range(4)] == [1, -1, 1, -1]
        assert SignPattern.none(7) == 1


CORPUS_SPECS = sorted({r.rhs for r in builtin_corpus() if isinstance(r.rhs, SumSpec)}, key=str)


@pytest.mark.parametrize("spec", CORPUS_SPECS, ids=str)
@pytest.mark.parametrize("k", [0.3, 1 / math.sqrt(2)])
def test_truncation_tail_is_honest(spec, k):
    ctx = build_context(k)
    coarse = evaluate(spec, ctx, 1e-6)
    n = coarse.terms_used
    doubled = partial_sum(spec, ctx, 2 * n)
    assert abs(coarse.value - doubled) <= coarse.tail_bound + 1e-14 * max(1, abs(doubled))


@pytest.mark.parametrize("spec", CORPUS_SPECS, ids=str)
def test_numpy_partial_sum_agrees(spec):
    ctx = build_context(0.6)
    res = evaluate(spec, ctx, 1e-15)
    assert partial_sum(spec, ctx, res.terms_used + 20) == pytest.approx(res.value, rel=1e-13,
                                                                         abs=1e-15)


@pytest.mark.parametrize("index", list(Index))
@pytest.mark.parametrize("kern", list(Kernel))
@pytest.mark.parametrize("s", [0, 1, 3])
def test_alt2_decomposition(index, kern, s):
    ctx = build_context(0.45)
    spec = SumSpec(index, s, "alt2", kern, Fraction(1, 2))
    b = beta(spec, ctx)
    start = 0 if index is Index.odd else 1
    classes = {r: [] for r in range(4)}
    for n in range(start, start + 400):
        m = 2 * n + 1 if index is Index.odd else n
        classes[n % 4].append(m ** s * kern(b * m))
    total = (math.fsum(classes[0]) + math.fsum(classes[1])
             - math.fsum(classes[2]) - math.fsum(classes[3]))
    assert evaluate(spec, ctx, 1e-15).value == pytest.approx(total, abs=1e-12)


def _mp_sum(spec, k):
    mpmath.mp.dps = 30
    m_k = mpmath.mpf(k) ** 2
    rho = mpmath.ellipk(1 - m_k) / mpmath.ellipk(m_k)
    b = mpmath.mpf(spec.scale.numerator) / spec.scale.denominator * mpmath.pi * rho
    f = {"sech": mpmath.sech, "csch": mpmath.csch, "sech2": lambda x: mpmath.sech(x) ** 2,
         "csch2": lambda x: mpmath.csch(x) ** 2, "inv_expm1": lambda x: 1 / mpmath.expm1(x),
         "inv_expp1": lambda x: 1 / (mpmath.exp(x) + 1)}[spec.kernel.value]
    start = 0 if spec.odd else 1
    total = mpmath.mpf(0)
    for n in range(start, start + 300):
        m = 2 * n + 1 if spec.odd else n
        total += spec.sign(n) * mpmath.mpf(m) ** spec.s * f(b * m)
    return float(total)


@pytest.mark.parametrize("spec", CORPUS_SPECS, ids=str)
def test_against_mpmath_brute_force(spec):
    got = evaluate(spec, build_context(0.5), 1e-15).value
    assert got == pytest.approx(_mp_sum(spec, 0.5), rel=1e-13, abs=1e-15)


class TestExamples:
    def test_exponential_alt(self, ctx_k1):
        spec = SumSpec("odd", 0, "alt", "inv_expm1", 1)
        assert evaluate(spec, ctx_k1).value == pytest.approx(ctx_k1.K / (2 * math.pi) - 0.25,
                                                             abs=1e-14)

    def test_sech_half(self, ctx_k1):
        spec = SumSpec("odd", 0, "none", "sech", Fraction(1, 2))
        closed = math.gamma(0.25) ** 2 / (4 * math.sqrt(2) * math.pi ** 1.5)
        assert evaluate(spec, ctx_k1).value == pytest.approx(closed, rel=1e-13)
        assert closed == pytest.approx(0.4173134, abs=5e-8)

    def test_vanishing_sum(self, ctx_k1):
        spec = SumSpec("odd", 3, "alt", "sech", Fraction(1, 2))
        assert abs(evaluate(spec, ctx_k1).value) <= 1e-12

    def test_sech_squared_one_sided(self, ctx_k1):
        # the sum over n >= 0 is 1/(2 pi); 1/pi is the sum over all integers n
        spec = SumSpec("odd", 0, "none", "sech2", Fraction(1, 2))
        assert evaluate(spec, ctx_k1).value == pytest.approx(1 / (2 * math.pi), abs=1e-14)

    def test_cap(self):
        with pytest.raises(DomainError):
            evaluate(SumSpec("odd", 0, "none", "sech", 1), build_context(0.5), 0.0)


DERIV_SPECS = [SumSpec("odd", 0, "alt", "inv_expm1", 1), SumSpec("odd", 0, "alt", "inv_expp1", 1),
               SumSpec("odd", 0, "none", "sech", Fraction(1, 2)),
               SumSpec("odd", 0, "alt", "csch", 1), SumSpec("all", 1, "alt2", "sech", 1)]


@pytest.mark.parametrize("spec", DERIV_SPECS, ids=str)
@pytest.mark.parametrize("k", [0.3, 0.5, 0.77])
def test_d_dk_vs_finite_difference(spec, k):
    h = 1e-5
    fd = (evaluate(spec, build_context(k + h), 1e-16).value
          - evaluate(spec, build_context(k - h), 1e-16).value) / (2 * h)
    got = d_dk_sum(spec, build_context(k), 1e-15).value
    assert got == pytest.approx(fd, rel=1e-6)


@pytest.mark.parametrize("kern", [Kernel.sech2, Kernel.csch2])
def test_d_dk_unsupported(kern):
    with pytest.raises(DomainError):
        d_dk_sum(SumSpec("odd", 0, "none", kern, 1), build_context(0.5))


@pytest.mark.parametrize("k", [0.3, 0.6, 0.77])
def test_d_dk_reproduces_csch2_closed_form(k):
    # d/dk sum (-1)^n/(e^{m pi rho} - 1) = -(pi rho'/4) sum (-1)^n m csch^2(m pi rho/2)
    ctx = build_context(k)
    K, E, Kp, Ep = ctx.K, ctx.E, ctx.K_prime, ctx.E_prime
    closed = 2 * K ** 2 * (E + (k ** 2 - 1) * K) / (math.pi ** 2 * (Kp * (E - K) + Ep * K))
    got = d_dk_sum(SumSpec("odd", 0, "alt", "inv_expm1", 1), ctx, 1e-15).value
    assert got / (-math.pi * dratio_dk(ctx) / 4) == pytest.approx(closed, rel=1e-9)
    # and the derivative of the closed form K/(2 pi) - 1/4 itself
    assert got == pytest.approx((E / (k * ctx.k_prime ** 2) - K / k) / (2 * math.pi), rel=1e-10)


class TestBerndtCombination:
    def test_half_at_lemniscatic(self, ctx_k1):
        assert berndt_combination(ctx_k1).value == pytest.approx(0.5, abs=1e-12)

    def test_few_terms(self, ctx_k1):
        assert berndt_combination(ctx_k1, 1e-10).terms_used < 30

    def test_subtracting_sech_sum(self, ctx_k1):
        g = math.gamma(0.25) ** 2 / (8 * math.sqrt(2) * math.pi ** 1.5)
        sech = evaluate(SumSpec("odd", 0, "none", "sech", Fraction(1, 2)), ctx_k1).value
        assert berndt_combination(ctx_k1).value - sech == pytest.approx(2 * (0.25 - g), abs=1e-13)

    @pytest.mark.parametrize("k", [0.2, 0.5, 0.9])
    def test_general_modulus(self, k):
        ctx = build_context(k)
        expected = 0.5 + (k - ctx.k_prime) * ctx.K / math.pi
        assert berndt_combination(ctx).value == pytest.approx(expected, abs=1e-12)
