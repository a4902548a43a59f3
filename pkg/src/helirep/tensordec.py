"""Tensor-product decomposition machinery.

Product representations labeled by a spin pair decompose into a
rectangle of coupled pairs; this module enumerates that series, builds
the coupled basis vectors with factorized coupling coefficients, and
provides the symmetric-space helpers: the antidiagonal bilinear form,
dimension counts, and the one-row symmetrizer on m two-dimensional
factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CMatrix, enumerate_basis
from .generators import waerden_op
from .halfint import HalfInt, half, lrange, mrange
from .su2 import cg_su2


@dataclass(frozen=True)
class RepLabel:
    """An irreducible carrier labeled by the spin pair (l1, l2)."""

    l1: HalfInt
    l2: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "l1", HalfInt(self.l1))
        object.__setattr__(self, "l2", HalfInt(self.l2))
        if self.l1 < 0 or self.l2 < 0:
            raise ValueError("spin labels must be non-negative")

    @property
    def dim(self):
        return (self.l1.twice + 1) * (self.l2.twice + 1)

    def basis(self):
        return enumerate_basis(self.l1, self.l2)


def cg_series(a: RepLabel, b: RepLabel):
    """Coupled labels appearing in the product of two carriers.

    Each first-slot spin k between |a.l1 - b.l1| and a.l1 + b.l1 pairs
    with each second-slot spin k' in the analogous range, every
    combination exactly once.
    """
    return [
        RepLabel(k, kp)
        for k in lrange(abs(a.l1 - b.l1), a.l1 + b.l1)
        for kp in lrange(abs(a.l2 - b.l2), a.l2 + b.l2)
    ]


def cg_sl2c(l1, l2, l, j, k, m, l1p, l2p, lp, jp, kp, mp):
    """Product-group coupling coefficient in factorized form.

    The coefficient is the product of the two independent spin
    couplings; every selection rule (projection sums, triangle
    conditions) is inherited from the factors and yields an exact 0.
    """
    return cg_su2(l1, l2, l, j, k, m) * cg_su2(l1p, l2p, lp, jp, kp, mp)


@dataclass(frozen=True)
class CoupledVector:
    """One coupled basis vector inside a product carrier.

    ``amplitudes`` maps product-basis label pairs (u, v) to real
    coefficients; only pairs whose slot projections add up to (m, mp)
    appear.
    """

    l: HalfInt
    lp: HalfInt
    m: HalfInt
    mp: HalfInt
    amplitudes: dict

    def vector(self, pair_order):
        """Dense coefficient vector in the given product-basis order."""
        return np.array(
            [self.amplitudes.get(p, 0.0) for p in pair_order], dtype=complex
        )

    def norm(self):
        return math.sqrt(sum(v * v for v in self.amplitudes.values()))


def product_basis(a: RepLabel, b: RepLabel):
    """Pairs (u, v) of the two carriers' weight vectors, in kron order."""
    return [(u, v) for u in a.basis() for v in b.basis()]


def coupled_vector(a: RepLabel, b: RepLabel, l, lp, m, mp):
    """Coupled vector with total labels (l, lp) and projections (m, mp).

    Amplitudes factorize into a first-slot coupling of (u.m, v.m) to m
    and a second-slot coupling of (u.mdot, v.mdot) to mp.
    """
    l, lp, m, mp = HalfInt(l), HalfInt(lp), HalfInt(m), HalfInt(mp)
    if RepLabel(l, lp) not in cg_series(a, b):
        raise ValueError(
            f"target ({l},{lp}) does not appear in the product series"
        )
    if abs(m) > l or not (l - m).is_integer:
        raise ValueError(f"invalid projection {m} for spin {l}")
    if abs(mp) > lp or not (lp - mp).is_integer:
        raise ValueError(f"invalid projection {mp} for spin {lp}")
    amps = {}
    for u, v in product_basis(a, b):
        if u.m + v.m != m or u.mdot + v.mdot != mp:
            continue
        c = cg_su2(a.l1, b.l1, l, u.m, v.m, m) * cg_su2(
            a.l2, b.l2, lp, u.mdot, v.mdot, mp
        )
        if c != 0.0:
            amps[(u, v)] = c
    return CoupledVector(l, lp, m, mp, amps)


def total_operator(kind, a: RepLabel, b: RepLabel):
    """Ladder operator acting simultaneously on both product factors."""
    op_a = waerden_op(kind, a.l1, a.l2)
    op_b = waerden_op(kind, b.l1, b.l2)
    ident_a = CMatrix.identity(a.basis())
    ident_b = CMatrix.identity(b.basis())
    return op_a.kron(ident_b) + ident_a.kron(op_b)


def bilinear_form(k, r, lam):
    """Antidiagonal bilinear-form matrix of the equivalence map.

    Entry (i, n-1-i) is lam * (-1)^(i+1) with n = (r+k)/2 + 1; the
    alternation makes the matrix symmetric when (r+k)/2 is even and
    skew-symmetric when it is odd.
    """
    k, r = int(k), int(r)
    if k < 0 or r < 0:
        raise ValueError("tensor ranks must be non-negative")
    if (k + r) % 2:
        raise ValueError(f"k + r must be even, got {k} + {r}")
    n = (k + r) // 2 + 1
    data = np.zeros((n, n), dtype=complex)
    for i in range(n):
        data[i, n - 1 - i] = lam * (-1.0) ** (i + 1)
    labels = list(range(n))
    return CMatrix(data, labels, labels)


def sym_dimension(k, r):
    """Dimension (k+1)(r+1) of the symmetric carrier of rank (k, r)."""
    k, r = int(k), int(r)
    if k < 0 or r < 0:
        raise ValueError("tensor ranks must be non-negative")
    return (k + 1) * (r + 1)


_SYMMETRIZER_CAP = 10


def _binary_basis(m):
    """Labels of (C^2)^tensor-m in kron order: tuples of ±1/2."""
    out = [()]
    for _ in range(m):
        out = [lab + (s,) for lab in out for s in (half(1), half(-1))]
    return out


def _transposition_matrix(m, i, j):
    """Permutation matrix swapping tensor factors i and j (0-based)."""
    dim = 2 ** m
    data = np.zeros((dim, dim))
    for idx in range(dim):
        bits = [(idx >> (m - 1 - t)) & 1 for t in range(m)]
        bits[i], bits[j] = bits[j], bits[i]
        jdx = 0
        for bval in bits:
            jdx = (jdx << 1) | bval
        data[jdx, idx] = 1.0
    return data


def symmetrizer_one_row(m):
    """Projector onto the fully symmetric part of (C^2)^tensor-m.

    Equals the average of all m! factor permutations; built by the
    partial-average recursion S_j = (S_{j-1} x 1) (1 + sum_k T_{k,j})/j
    so the cost stays polynomial.  Idempotent with rank m + 1.
    """
    m = int(m)
    if m < 1:
        raise ValueError("need at least one tensor factor")
    if m > _SYMMETRIZER_CAP:
        raise ValueError(
            f"symmetrizer capped at {_SYMMETRIZER_CAP} factors, got {m}"
        )
    proj = np.eye(2)
    for j in range(2, m + 1):
        proj = np.kron(proj, np.eye(2))
        step = np.eye(2 ** j)
        for kfac in range(j - 1):
            step = step + _transposition_matrix(j, kfac, j - 1)
        proj = proj @ (step / j)
    labels = _binary_basis(m)
    return CMatrix(proj, labels, labels)
