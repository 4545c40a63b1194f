"""Acceptance gate: one test and one PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py -s`` (or plain ``pytest``; the
lines are repeated in the terminal summary).
"""
import dataclasses
import math
import time

import numpy as np
from scipy.integrate import quad

from ellipsum import closedform, hypersum
from ellipsum.corpus import SHIPPED_CORPUS, find, load_corpus, verify, verify_all
from ellipsum.elliptic_core import build_context, complete_KE_many, dratio_dk
from ellipsum.fourier import dc_d2u_pair, dc_series, nc_series, ns2_series
from ellipsum.hypersum import SumSpec
from ellipsum.jacobi import (JacobiCode, derivative_at, half_K_values, jacobi_fn, jacobi_point,
                             value_at)
from ellipsum.singular import gamma_quarter, gamma_quarter_from_k4

W_GRID = (0.05, 0.1, 0.2, 0.3, 0.45)
K_GRID = (0.1, 0.3, 1 / math.sqrt(2), 0.8, 0.95)


def _best_time(fn, repeats=3):
    best = math.inf
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def test_c1_legendre_relation(criterion):
    ks = np.linspace(0.01, 0.99, 102)[1:-1]

    def run():
        K, E = complete_KE_many(ks)
        Kp, Ep = complete_KE_many(np.sqrt((1 - ks) * (1 + ks)))
        return np.max(np.abs(E * Kp + Ep * K - K * Kp - math.pi / 2))

    run()
    worst, secs = _best_time(run)
    criterion("C1 Legendre relation", worst <= 1e-13 and secs < 0.1,
              f"100 moduli, max residual {worst:.2e} (<= 1e-13), {secs * 1e3:.2f} ms (< 100 ms)")


def _fourier_residuals():
    worst = 0.0
    for k in K_GRID:
        ctx = build_context(k)
        for w in W_GRID:
            u = 2 * w * ctx.K
            pairs = [(dc_series(w, ctx).value, jacobi_fn("dc", u, ctx)),
                     (nc_series(w, ctx).value, jacobi_fn("nc", u, ctx)),
                     (ns2_series(w, ctx).value, jacobi_fn("ns", u, ctx) ** 2)]
            direct, series = dc_d2u_pair(w, ctx)
            pairs.append((series.value, direct))
            for a, b in pairs:
                worst = max(worst, abs(a - b) / max(1.0, abs(b)))
    return worst


def test_c2_fourier_residuals(criterion):
    _fourier_residuals()
    worst, secs = _best_time(_fourier_residuals)
    criterion("C2 Fourier expansions", worst <= 1e-10 and secs < 1.0,
              f"dc, nc, ns^2, d2 dc on 5x5 grid, max residual {worst:.2e} (<= 1e-10), "
              f"{secs:.3f} s (< 1 s)")


def test_c3_full_corpus(criterion):
    t0 = time.perf_counter()
    records = load_corpus(SHIPPED_CORPUS)
    reports = verify_all(records)
    secs = time.perf_counter() - t0
    passed = sum(r.passed for r in reports)
    failing = [r.id for r in reports if not r.passed]
    ok = len(records) >= 30 and passed == len(records) and secs < 10
    criterion("C3 full corpus", ok,
              f"{passed}/{len(records)} passed, {secs:.2f} s (< 10 s)"
              + (f", failing {failing}" if failing else ""))


def test_c4_zero_identities(criterion, ctx_k1):
    vals = [hypersum.evaluate(SumSpec("odd", s, "alt", "sech", "1/2"), ctx_k1, 1e-16).value
            for s in (3, 7)]
    worst = max(abs(v) for v in vals)
    criterion("C4 vanishing sech sums", worst <= 1e-12,
              f"m=1: {vals[0]:.2e}, m=2: {vals[1]:.2e} (|sum| <= 1e-12)")


def test_c5_ramanujan_pair(criterion, ctx_k1):
    s1 = hypersum.evaluate(SumSpec("all", 1, "none", "inv_expm1", 2), ctx_k1, 1e-17).value
    s13 = hypersum.evaluate(SumSpec("all", 13, "none", "inv_expm1", 2), ctx_k1, 1e-17).value
    e1 = abs(s1 - (1 / 24 - 1 / (8 * math.pi)))
    e13 = abs(s13 - 1 / 24)
    criterion("C5 Ramanujan 1/24 pair", max(e1, e13) <= 1e-12,
              f"n: err {e1:.2e}, n^13: err {e13:.2e} (<= 1e-12)")


def _closed_deriv_forms(ctx):
    k, K, E, Kp, Ep = ctx.k, ctx.K, ctx.E, ctx.K_prime, ctx.E_prime
    L = Kp * (E - K) + Ep * K
    csch2 = 2 * K ** 2 * (E + (k ** 2 - 1) * K) / (math.pi ** 2 * L)
    sech2 = 2 * ctx.k_prime * K ** 2 * (K - E) / (math.pi ** 2 * L)
    return csch2, sech2


def test_c6_term_by_term_derivative(criterion):
    specs = {"exp-minus": SumSpec("odd", 0, "alt", "inv_expm1", 1),
             "exp-plus": SumSpec("odd", 0, "alt", "inv_expp1", 1)}
    h = 1e-5
    fd_err = 0.0
    for spec in specs.values():
        fd = (hypersum.evaluate(spec, build_context(0.5 + h), 1e-16).value
              - hypersum.evaluate(spec, build_context(0.5 - h), 1e-16).value) / (2 * h)
        got = hypersum.d_dk_sum(spec, build_context(0.5), 1e-15).value
        fd_err = max(fd_err, abs(got - fd) / abs(fd))
    closed_err = 0.0
    for k in (0.3, 0.6, 0.77):
        ctx = build_context(k)
        scale = -math.pi * dratio_dk(ctx) / 4
        csch2, sech2 = _closed_deriv_forms(ctx)
        for spec, closed in zip(specs.values(), (csch2, sech2)):
            got = hypersum.d_dk_sum(spec, ctx, 1e-15).value / scale
            closed_err = max(closed_err, abs(got - closed) / abs(closed))
        for rid in (f"bagis-deriv-k{k}", f"nc-alt-deriv-k{k}"):
            rep = verify(find(load_corpus(SHIPPED_CORPUS), rid), 1e-9)
            closed_err = max(closed_err, rep.rel_err)
    criterion("C6 term-by-term derivative", fd_err <= 1e-6 and closed_err <= 1e-9,
              f"d/dk vs FD at k=0.5 rel {fd_err:.2e} (<= 1e-6); derivative identities at "
              f"k=0.3,0.6,0.77 rel {closed_err:.2e} (<= 1e-9)")


def test_c7_qdigamma_bridge(criterion):
    records = load_corpus(SHIPPED_CORPUS)
    ids = ("qdigamma-dc-k1", "qdigamma-dc-k4", "qdigamma-nc-k1", "qdigamma-sech-k1")
    reps = [verify(find(records, rid), 1e-9) for rid in ids]
    worst = max(r.rel_err for r in reps)
    criterion("C7 q-digamma combinations", all(r.passed for r in reps),
              f"{', '.join(ids)}: max rel err {worst:.2e} (<= 1e-9)")


def _jacobi_suite():
    rng = np.random.default_rng(20240611)
    worst = {"pythagorean": 0.0, "period": 0.0, "quotient": 0.0, "fd": 0.0, "halfK": 0.0}
    for u, k in zip(rng.uniform(-10, 10, 1000), rng.uniform(0.01, 0.99, 1000)):
        ctx = build_context(k)
        p = jacobi_point(u, ctx)
        worst["pythagorean"] = max(worst["pythagorean"], abs(p.sn ** 2 + p.cn ** 2 - 1),
                                   abs(p.dn ** 2 + k * k * p.sn ** 2 - 1))
    for k in K_GRID:
        ctx = build_context(k)
        for u in np.linspace(-2 * ctx.K, 2 * ctx.K, 21):
            worst["period"] = max(worst["period"], abs(jacobi_fn("sn", u + 4 * ctx.K, ctx)
                                                       - jacobi_fn("sn", u, ctx)))
            p = jacobi_point(u, ctx)
            if abs(p.cn) > 1e-3:
                worst["quotient"] = max(worst["quotient"],
                                        abs(value_at("cd", p) * value_at("dc", p) - 1))
        hk = half_K_values(ctx)
        p = jacobi_point(ctx.K / 2, ctx)
        worst["halfK"] = max(worst["halfK"], *(abs(a - b) for a, b in zip(hk, (p.sn, p.cn, p.dn))))
        h = 1e-6
        for u in rng.uniform(-2 * ctx.K, 2 * ctx.K, 10):
            p = jacobi_point(u, ctx)
            if min(abs(p.sn), abs(p.cn)) < 0.05:
                continue
            for code in JacobiCode:
                fd = (jacobi_fn(code, u + h, ctx) - jacobi_fn(code, u - h, ctx)) / (2 * h)
                d = derivative_at(code, p)
                worst["fd"] = max(worst["fd"], abs(d - fd) / max(1.0, abs(d)))
    return worst


def test_c8_jacobi_and_negative_control(criterion):
    w = _jacobi_suite()
    suite_ok = (w["pythagorean"] <= 1e-11 and w["period"] <= 1e-9 and w["quotient"] <= 1e-10
                and w["fd"] <= 1e-6 and w["halfK"] <= 1e-11)
    records = load_corpus(SHIPPED_CORPUS)
    bump = closedform.parse("1/1000")
    flipped = [verify(dataclasses.replace(r, lhs=closedform.BinOp("+", r.lhs, bump))).status
               == "fail" for r in records]
    criterion("C8 Jacobi suite and mutation control", suite_ok and all(flipped),
              f"pythagorean {w['pythagorean']:.1e}, period {w['period']:.1e}, "
              f"quotient {w['quotient']:.1e}, FD {w['fd']:.1e}, half-K {w['halfK']:.1e}; "
              f"{sum(flipped)}/{len(records)} mutated records fail")


def test_c9_gamma_quarter(criterion):
    g1, g4 = gamma_quarter(), gamma_quarter_from_k4()
    # K(1/sqrt 2) by adaptive quadrature, then Gamma(1/4)^2 = 4 sqrt(pi) K
    K_quad, _ = quad(lambda t: 1 / math.sqrt(1 - 0.5 * math.sin(t) ** 2), 0, math.pi / 2,
                     epsabs=1e-15, epsrel=1e-15)
    g_quad = math.sqrt(4 * math.sqrt(math.pi) * K_quad)
    routes = abs(g1 - g4) / g1
    oracle = abs(g1 - g_quad) / g_quad
    criterion("C9 Gamma(1/4)", routes <= 1e-12 and oracle <= 1e-10,
              f"r=1 vs r=4 rel {routes:.1e} (<= 1e-12), vs quadrature rel {oracle:.1e} "
              f"(<= 1e-10), math.gamma rel {abs(g1 - math.gamma(0.25)) / g1:.1e}")
