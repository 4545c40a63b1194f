"""Hot inner loops: AGM, Carlson R_F, Landen amplitude, series summation.

Everything here is restricted to scalars, tuples and 1-D float arrays so that
each function compiles under ``numba.njit`` and also runs unchanged as plain
Python (see :mod:`ellipsum._accel`).  Public modules wrap these and turn the
integer status codes into exceptions.
"""
import cmath
import math

import numpy as np

from ellipsum._accel import njit

EPS = 2.220446049250313e-16
AGM_MAX_ITER = 64

# kernel codes; the last two only arise from term-by-term k-derivatives
SECH = 0
CSCH = 1
SECH2 = 2
CSCH2 = 3
INV_EXPM1 = 4
INV_EXPP1 = 5
SECH_TANH = 6
CSCH_COTH = 7

SIGN_NONE = 0
SIGN_ALT = 1
SIGN_ALT2 = 2

OK = 0
NOT_CONVERGED = 1
POLE = 2


@njit
def agm(a, b):
    for _ in range(AGM_MAX_ITER):
        if abs(a - b) <= 4.0 * EPS * max(a, b):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


@njit
def agm_ke(k, kp):
    """(K, E) for modulus k with complement kp.

    E/K = 1 - sum 2^(n-1) c_n^2 with c_0 = k and c_{n+1} = c_n^2 / (4 a_{n+1}),
    the latter form avoiding the cancellation in (a_n - b_n) / 2.
    """
    a = 1.0
    b = kp
    c = k
    power = 0.5
    s = power * c * c
    comp = 0.0
    for _ in range(AGM_MAX_ITER):
        if abs(a - b) <= 4.0 * EPS * a and c * c * power < EPS * EPS:
            break
        a_next = 0.5 * (a + b)
        b = math.sqrt(a * b)
        c = c * c / (4.0 * a_next)
        a = a_next
        power *= 2.0
        t = power * c * c
        y = s + t
        comp += (s - y) + t
        s = y
    big_k = math.pi / (2.0 * a)
    return big_k, big_k * (1.0 - (s + comp))


@njit
def agm_ke_array(ks, kps):
    n = ks.shape[0]
    out_k = np.empty(n)
    out_e = np.empty(n)
    for i in range(n):
        out_k[i], out_e[i] = agm_ke(ks[i], kps[i])
    return out_k, out_e


@njit
def carlson_rf(x, y, z):
    """Carlson's symmetric integral R_F by duplication (all args >= 0)."""
    a0 = (x + y + z) / 3.0
    q = max(abs(a0 - x), max(abs(a0 - y), abs(a0 - z))) / (3.0 * EPS) ** (1.0 / 6.0)
    a = a0
    for _ in range(100):
        if q < abs(a):
            break
        sx = math.sqrt(x)
        sy = math.sqrt(y)
        sz = math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        q *= 0.25
    a = (x + y + z) / 3.0
    fx = (a - x) / a
    fy = (a - y) / a
    fz = -(fx + fy)
    e2 = fx * fy - fz * fz
    e3 = fx * fy * fz
    poly = (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
            - 5.0 * e2 * e2 * e2 / 208.0 + 3.0 * e3 * e3 / 104.0 + e2 * e2 * e3 / 16.0)
    return poly / math.sqrt(a)


@njit
def landen_amplitude(u, k, kp):
    """Jacobi amplitude am(u, k) by the descending AGM/Landen scheme.

    u is first reduced modulo 2K (am(u + 2K) = am(u) + pi) so the backward
    recursion always starts from |u| <= K.
    """
    a_seq = np.empty(AGM_MAX_ITER + 1)
    c_seq = np.empty(AGM_MAX_ITER + 1)
    a = 1.0
    b = kp
    c = k
    a_seq[0] = a
    c_seq[0] = c
    n = 0
    while n < AGM_MAX_ITER and abs(c) > EPS * a:
        a_next = 0.5 * (a + b)
        b = math.sqrt(a * b)
        c = c * c / (4.0 * a_next)
        a = a_next
        n += 1
        a_seq[n] = a
        c_seq[n] = c
    big_k = math.pi / (2.0 * a)
    shift = math.floor(u / (2.0 * big_k) + 0.5)
    r = u - shift * 2.0 * big_k
    phi = 2.0 ** n * a * r
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(c_seq[j] / a_seq[j] * math.sin(phi)))
    return phi + shift * math.pi


@njit
def sncndn(u, k, kp):
    phi = landen_amplitude(u, k, kp)
    sn = math.sin(phi)
    cn = math.cos(phi)
    # dn^2 = k'^2 + k^2 cn^2 keeps full accuracy as k -> 1
    dn = math.sqrt(kp * kp + (k * cn) * (k * cn))
    return sn, cn, dn


@njit
def sncndn_array(us, k, kp):
    n = us.shape[0]
    sn = np.empty(n)
    cn = np.empty(n)
    dn = np.empty(n)
    for i in range(n):
        sn[i], cn[i], dn[i] = sncndn(us[i], k, kp)
    return sn, cn, dn


@njit
def kernel_value(kind, x):
    """Kernel at x > 0, written in exp(-x) form so large x cannot overflow."""
    e = math.exp(-x)
    if kind == SECH:
        return 2.0 * e / (1.0 + e * e)
    if kind == CSCH:
        return 2.0 * e / -math.expm1(-2.0 * x)
    if kind == SECH2:
        v = 2.0 * e / (1.0 + e * e)
        return v * v
    if kind == CSCH2:
        v = 2.0 * e / -math.expm1(-2.0 * x)
        return v * v
    if kind == INV_EXPM1:
        return e / -math.expm1(-x)
    if kind == INV_EXPP1:
        return e / (1.0 + e)
    if kind == SECH_TANH:
        d = 1.0 + e * e
        return 2.0 * e * -math.expm1(-2.0 * x) / (d * d)
    # CSCH_COTH
    d = -math.expm1(-2.0 * x)
    return 2.0 * e * (1.0 + e * e) / (d * d)


@njit
def tail_envelope(kind, x):
    """(C, p) with kernel(y) <= C exp(-p y) for every y >= x > 0."""
    if kind == SECH or kind == SECH_TANH:
        return 2.0, 1.0
    if kind == SECH2:
        return 4.0, 2.0
    if kind == INV_EXPP1:
        return 1.0, 1.0
    if kind == INV_EXPM1:
        return 1.0 / -math.expm1(-x), 1.0
    if kind == CSCH:
        return 2.0 / -math.expm1(-2.0 * x), 1.0
    if kind == CSCH2:
        d = -math.expm1(-2.0 * x)
        return 4.0 / (d * d), 2.0
    d = -math.expm1(-2.0 * x)
    return 2.0 * (1.0 + math.exp(-2.0 * x)) / (d * d), 1.0


@njit
def sign_of(pattern, n):
    if pattern == SIGN_ALT:
        return -1.0 if n % 2 else 1.0
    if pattern == SIGN_ALT2:
        return -1.0 if (n // 2) % 2 else 1.0
    return 1.0


@njit
def hyper_series(odd, s, sign, kind, beta, theta, tol, cap):
    """sum_n sign(n) m^s kernel(beta m) cos(theta m).

    odd: m = 2n+1 for n >= 0, otherwise m = n for n >= 1.  Stops once the
    last term is below tol/4 and the geometric majorant of the remaining
    tail is below tol/2.  Returns (value, terms, tail_bound, status).
    """
    step = 2 if odd else 1
    n = 0 if odd else 1
    total = 0.0
    comp = 0.0
    tail = math.inf
    terms = 0
    while terms < cap:
        m = 2 * n + 1 if odd else n
        t = sign_of(sign, n) * float(m) ** s * kernel_value(kind, beta * m)
        if theta != 0.0:
            t *= math.cos(theta * m)
        y = total + t
        if abs(total) >= abs(t):
            comp += (total - y) + t
        else:
            comp += (t - y) + total
        total = y
        terms += 1
        m_next = float(m + step)
        x_next = beta * m_next
        c, p = tail_envelope(kind, x_next)
        ratio = ((m_next + step) / m_next) ** s * math.exp(-p * beta * step)
        if ratio < 1.0:
            tail = c * m_next ** s * math.exp(-p * x_next) / (1.0 - ratio)
        else:
            tail = math.inf
        if abs(t) < 0.25 * tol and tail <= 0.5 * tol:
            return total + comp, terms, tail, OK
        n += 1
    return total + comp, terms, tail, NOT_CONVERGED


@njit
def hyper_series_array(odd, s, sign, kind, betas, theta, tol, cap):
    n = betas.shape[0]
    out = np.empty(n)
    status = OK
    for i in range(n):
        v, _, _, st = hyper_series(odd, s, sign, kind, betas[i], theta, tol, cap)
        out[i] = v
        if st != OK:
            status = st
    return out, status


@njit
def qdigamma_sum(log_q, z, tol, cap):
    """sum_{n>=0} w/(1-w), w = q^(n+z), for 0 < q < 1 (log_q < 0).

    Real and imaginary parts are accumulated with separate Neumaier
    compensation.  The tail after index n is bounded by
    |w_{n+1}| / ((1 - |w_{n+1}|)(1 - q)).
    """
    q = math.exp(log_q)
    re = 0.0
    re_c = 0.0
    im = 0.0
    im_c = 0.0
    tail = math.inf
    n = 0
    while n < cap:
        w = cmath.exp((n + z) * log_q)
        den = 1.0 - w
        if abs(den) < 1e-15:
            return complex(re + re_c, im + im_c), n, tail, POLE
        t = w / den
        y = re + t.real
        if abs(re) >= abs(t.real):
            re_c += (re - y) + t.real
        else:
            re_c += (t.real - y) + re
        re = y
        y = im + t.imag
        if abs(im) >= abs(t.imag):
            im_c += (im - y) + t.imag
        else:
            im_c += (t.imag - y) + im
        im = y
        n += 1
        nxt = math.exp((n + z.real) * log_q)
        if nxt < 0.5:
            tail = nxt / ((1.0 - nxt) * (1.0 - q))
            if abs(t) < 0.25 * tol and tail <= 0.5 * tol:
                return complex(re + re_c, im + im_c), n, tail, OK
    return complex(re + re_c, im + im_c), n, tail, NOT_CONVERGED
