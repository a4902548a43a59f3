"""Representation matrix elements mixing a rotation and a boost angle.

Two independent scalar routes are kept deliberately separate: a direct
double sum over the internal index, and a product of the rotation/boost
factor functions.  On top of those sit the phase-dressed matrix
elements, the 2x2 closed form with its six-factor product twin, and a
vectorized grid tabulator for bulk evaluation.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .core import BasisIndex, CMatrix, GroupPoint, enumerate_basis
from .halfint import HalfInt, mrange
from .kernels import fact, hyp2f1_term, ipow, ln_factorial
from .su2 import jac_p, sph_p


def _ln_pref(l, a, b):
    """log of sqrt((l+a)!(l-b)!/((l-a)!(l+b)!)) / (a-b)! for a >= b."""
    return 0.5 * (
        ln_factorial(l + a)
        + ln_factorial(l - b)
        - ln_factorial(l - a)
        - ln_factorial(l + b)
    ) - ln_factorial((a - b).as_int())


def z_series(l, m, n, theta, tau):
    """Direct double-sum evaluation of Z^l_mn(theta, tau).

    Sums over the internal label k with one rotation and one boost
    factor per term, each a prefactor times a terminating Gauss series.
    Most accurate for theta in [0, pi/2]; the factorized route reflects
    automatically and is preferred near theta = pi.
    """
    l = HalfInt(l)
    m, n = HalfInt(m), HalfInt(n)
    ct, st = math.cos(0.5 * theta), math.sin(0.5 * theta)
    ch, sh = math.cosh(0.5 * tau), math.sinh(0.5 * tau)
    tt = st / ct
    th = sh / ch
    total = 0.0 + 0.0j
    for k in mrange(l):
        a, b = (m, k) if m >= k else (k, m)
        d1 = (a - b).as_int()
        rot = (
            ipow(d1)
            * math.exp(_ln_pref(l, a, b))
            * ct ** (2 * l).as_int()
            * tt**d1
            * hyp2f1_term(a - l, -l - b, HalfInt(d1 + 1), -tt * tt)
        )
        c, e = (k, n) if k >= n else (n, k)
        d2 = (c - e).as_int()
        boost = (
            math.exp(_ln_pref(l, c, e))
            * ch ** (2 * l).as_int()
            * th**d2
            * hyp2f1_term(c - l, -l - e, HalfInt(d2 + 1), th * th)
        )
        total += rot * boost
    return total


def z_factorized(l, m, n, theta, tau):
    """Z^l_mn as sum over k of sph_p(l,m,k) * jac_p(l,k,n)."""
    l = HalfInt(l)
    m, n = HalfInt(m), HalfInt(n)
    return sum(
        sph_p(l, m, k, theta) * jac_p(l, k, n, tau) for k in mrange(l)
    )


def z_matrix(l, theta, tau):
    """The full [Z^l_mn] matrix, rows/columns labeled m descending."""
    l = HalfInt(l)
    ms = mrange(l)
    data = [[z_factorized(l, m, n, theta, tau) for n in ms] for m in ms]
    return CMatrix(data, ms, ms)


def m_function(l, m, n, g: GroupPoint):
    """Phase-dressed matrix element of the six-parameter group element."""
    l, m, n = HalfInt(l), HalfInt(m), HalfInt(n)
    left = cmath.exp(-float(m) * (g.eps + 1j * g.phi))
    right = cmath.exp(-float(n) * (g.veps + 1j * g.psi))
    return left * z_factorized(l, m, n, g.theta, g.tau) * right


def m_matrix(l, g: GroupPoint):
    """Full representation matrix at spin l, rows labeled m descending."""
    l = HalfInt(l)
    ms = mrange(l)
    zc = z_matrix(l, g.theta, g.tau)
    left = np.array([cmath.exp(-float(m) * (g.eps + 1j * g.phi)) for m in ms])
    right = np.array([cmath.exp(-float(n) * (g.veps + 1j * g.psi)) for n in ms])
    return CMatrix(left[:, None] * zc.data * right[None, :], ms, ms)


_HALF_UP = HalfInt.from_twice(1)
_HALF_DOWN = HalfInt.from_twice(-1)
_ASCENDING = (_HALF_DOWN, _HALF_UP)


def fundamental_matrix(g: GroupPoint):
    """The 2x2 group element in closed form.

    Rows and columns are labeled by projection ascending (-1/2 first),
    the convention in which the closed form is usually displayed; all
    comparisons against descending-labeled matrices go through label
    alignment.
    """
    theta_c = complex(g.theta, -g.tau)
    c, s = cmath.cos(0.5 * theta_c), cmath.sin(0.5 * theta_c)
    core = np.array([[c, 1j * s], [1j * s, c]])
    phi_c = complex(g.phi, -g.eps)
    psi_c = complex(g.psi, -g.veps)
    left = np.array(
        [cmath.exp(-1j * float(m) * phi_c) for m in _ASCENDING]
    )
    right = np.array(
        [cmath.exp(-1j * float(n) * psi_c) for n in _ASCENDING]
    )
    return CMatrix(left[:, None] * core * right[None, :], _ASCENDING, _ASCENDING)


def euler_product(g: GroupPoint):
    """Same 2x2 element as a product of six one-parameter factors."""

    def diag(a, b):
        return np.array([[a, 0], [0, b]], dtype=complex)

    rot = np.array(
        [
            [math.cos(0.5 * g.theta), 1j * math.sin(0.5 * g.theta)],
            [1j * math.sin(0.5 * g.theta), math.cos(0.5 * g.theta)],
        ]
    )
    boost = np.array(
        [
            [math.cosh(0.5 * g.tau), math.sinh(0.5 * g.tau)],
            [math.sinh(0.5 * g.tau), math.cosh(0.5 * g.tau)],
        ]
    )
    out = (
        diag(cmath.exp(0.5j * g.phi), cmath.exp(-0.5j * g.phi))
        @ diag(math.exp(0.5 * g.eps), math.exp(-0.5 * g.eps))
        @ rot
        @ boost
        @ diag(cmath.exp(0.5j * g.psi), cmath.exp(-0.5j * g.psi))
        @ diag(math.exp(0.5 * g.veps), math.exp(-0.5 * g.veps))
    )
    return CMatrix(out, _ASCENDING, _ASCENDING)


def rep_matrix(l, ldot, g: GroupPoint):
    """Representation matrix on the (l, ldot) carrier.

    Kronecker product of the spin-l matrix with the entrywise conjugate
    of the spin-ldot matrix, labeled by the standard weight basis.
    """
    l, ldot = HalfInt(l), HalfInt(ldot)
    left = m_matrix(l, g)
    right = m_matrix(ldot, g)
    right = CMatrix(right.data.conj(), right.row_labels, right.col_labels)
    combined = left.kron(
        right, combine=lambda a, b: BasisIndex(l, a, ldot, b)
    )
    want = enumerate_basis(l, ldot)
    return combined.reindexed(want, want)


# ---------------------------------------------------------------------------
# Vectorized grid evaluation


def _series_coeffs(l, a, b):
    """Ascending coefficients of the terminating Gauss series for (a, b)."""
    d = (a - b).as_int()
    tmax = (l - a).as_int()
    out = [Fraction(1)]
    for t in range(tmax):
        num = (a - l + t).as_fraction() * (-l - b + t).as_fraction()
        out.append(out[-1] * num / ((d + 1 + t) * (t + 1)))
    return out


def _pair_norm_float(l, a, b):
    d = (a - b).as_int()
    ratio = Fraction(fact(l + a) * fact(l - b), fact(l - a) * fact(l + b))
    return math.sqrt(ratio) / fact(d)


def _horner(coeffs, y):
    acc = np.zeros_like(y) + float(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * y + float(c)
    return acc


def _sph_direct_vec(l, m, n, thetas):
    a, b = (m, n) if m >= n else (n, m)
    d = (a - b).as_int()
    c = np.cos(0.5 * thetas)
    t = np.tan(0.5 * thetas)
    poly = _horner(_series_coeffs(l, a, b), -t * t)
    return (
        ipow(d)
        * _pair_norm_float(l, a, b)
        * c ** (2 * l).as_int()
        * t**d
        * poly
    )


def _sph_vec(l, m, n, thetas):
    thetas = np.asarray(thetas, dtype=float)
    out = np.empty(thetas.shape, dtype=complex)
    direct = np.cos(thetas) >= 0.0
    if direct.any():
        out[direct] = _sph_direct_vec(l, m, n, thetas[direct])
    rest = ~direct
    if rest.any():
        refl = ipow(2 * (l - m).as_int() - (2 * n).as_int())
        out[rest] = refl * _sph_vec(l, m, -n, math.pi - thetas[rest])
    return out


def _jac_vec(l, m, n, taus):
    taus = np.asarray(taus, dtype=float)
    a, b = (m, n) if m >= n else (n, m)
    d = (a - b).as_int()
    ch = np.cosh(0.5 * taus)
    th = np.tanh(0.5 * taus)
    poly = _horner(_series_coeffs(l, a, b), th * th)
    return _pair_norm_float(l, a, b) * ch ** (2 * l).as_int() * th**d * poly


def z_grid(l, m, n, thetas, taus):
    """Z^l_mn tabulated on a theta x tau grid.

    Returns an array of shape (len(thetas), len(taus)); each internal
    label contributes an outer product of one rotation-axis and one
    boost-axis tabulation, so the cost is linear in the grid edges.
    """
    l, m, n = HalfInt(l), HalfInt(m), HalfInt(n)
    thetas = np.asarray(thetas, dtype=float)
    taus = np.asarray(taus, dtype=float)
    out = np.zeros((thetas.size, taus.size), dtype=complex)
    for k in mrange(l):
        out += np.outer(_sph_vec(l, m, k, thetas), _jac_vec(l, k, n, taus))
    return out


def _gauss_float_coeffs(a, b, l, d):
    """Ascending float coefficients of 2F1(a-l, -l-b; d+1; .)."""
    fa, fb = float(a - l), float(-l - b)
    out = [1.0]
    for t in range((l - a).as_int()):
        out.append(out[-1] * (fa + t) * (fb + t) / ((d + 1 + t) * (t + 1)))
    return out


def z_series_grid(l, m, n, thetas, taus):
    """Direct-sum-route twin of ``z_grid``.

    Follows the ``z_series`` recipe (log-factorial prefactors, float
    coefficient recurrence) with each internal label contributing an
    outer product, so grid cost stays linear in the edges while the
    arithmetic stays independent of the factor-function tabulators.
    """
    l, m, n = HalfInt(l), HalfInt(m), HalfInt(n)
    thetas = np.asarray(thetas, dtype=float)
    taus = np.asarray(taus, dtype=float)
    ct, st = np.cos(0.5 * thetas), np.sin(0.5 * thetas)
    tt = st / ct
    ch = np.cosh(0.5 * taus)
    th = np.tanh(0.5 * taus)
    two_l = (2 * l).as_int()
    out = np.zeros((thetas.size, taus.size), dtype=complex)
    for k in mrange(l):
        a, b = (m, k) if m >= k else (k, m)
        d1 = (a - b).as_int()
        rot = (
            ipow(d1)
            * math.exp(_ln_pref(l, a, b))
            * ct**two_l
            * tt**d1
            * _horner(_gauss_float_coeffs(a, b, l, d1), -tt * tt)
        )
        c, e = (k, n) if k >= n else (n, k)
        d2 = (c - e).as_int()
        boost = (
            math.exp(_ln_pref(l, c, e))
            * ch ** ((2 * l).as_int())
            * th**d2
            * _horner(_gauss_float_coeffs(c, e, l, d2), th * th)
        )
        out += np.outer(rot, boost)
    return out
