"""Labeled matrices, weight bases, and group parameter tuples."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .halfint import HalfInt, mrange

_TWO_PI = 2.0 * math.pi


class BasisIndex(NamedTuple):
    """One weight vector (l, m; ldot, mdot) of a finite-dimensional carrier."""

    l: HalfInt
    m: HalfInt
    ldot: HalfInt
    mdot: HalfInt

    def __str__(self):
        return f"({self.l},{self.m};{self.ldot},{self.mdot})"


def basis_index(l, m, ldot=0, mdot=0):
    return BasisIndex(HalfInt(l), HalfInt(m), HalfInt(ldot), HalfInt(mdot))


def enumerate_basis(l, ldot=0):
    """Weight basis of the (l, ldot) carrier.

    Ordered with m descending, then mdot descending, matching the row
    convention used by every operator builder in this package.
    """
    l, ldot = HalfInt(l), HalfInt(ldot)
    return [
        BasisIndex(l, m, ldot, md) for m in mrange(l) for md in mrange(ldot)
    ]


class CMatrix:
    """A complex matrix with hashable row/column labels.

    Products and comparisons are label-aware: matmul requires the inner
    label tuples to agree, and ``residual_vs`` aligns label order before
    subtracting, so differing storage conventions cannot silently
    misalign entries.
    """

    __slots__ = ("data", "row_labels", "col_labels", "_rindex", "_cindex")

    def __init__(self, data, row_labels, col_labels=None):
        if col_labels is None:
            col_labels = row_labels
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        self.data = np.asarray(data, dtype=complex)
        if self.data.shape != (len(self.row_labels), len(self.col_labels)):
            raise ValueError(
                f"data shape {self.data.shape} does not match labels "
                f"({len(self.row_labels)}, {len(self.col_labels)})"
            )
        self._rindex = {lab: i for i, lab in enumerate(self.row_labels)}
        self._cindex = {lab: i for i, lab in enumerate(self.col_labels)}
        if len(self._rindex) != len(self.row_labels):
            raise ValueError("duplicate row labels")
        if len(self._cindex) != len(self.col_labels):
            raise ValueError("duplicate column labels")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, row_labels, col_labels=None):
        row_labels = tuple(row_labels)
        col_labels = row_labels if col_labels is None else tuple(col_labels)
        return cls(
            np.zeros((len(row_labels), len(col_labels)), dtype=complex),
            row_labels,
            col_labels,
        )

    @classmethod
    def identity(cls, labels):
        labels = tuple(labels)
        return cls(np.eye(len(labels), dtype=complex), labels, labels)

    @classmethod
    def from_entries(cls, row_labels, col_labels, entries):
        """Build from a {(row_label, col_label): value} mapping."""
        out = cls.zeros(row_labels, col_labels)
        for (r, c), v in entries.items():
            out.data[out._rindex[r], out._cindex[c]] = v
        return out

    # -- lookups ----------------------------------------------------------
    @property
    def shape(self):
        return self.data.shape

    def at(self, row_label, col_label):
        """Entry addressed by labels."""
        return complex(self.data[self._rindex[row_label], self._cindex[col_label]])

    def reindexed(self, row_labels, col_labels=None):
        """Same matrix with rows/columns permuted to the given label order."""
        row_labels = tuple(row_labels)
        col_labels = row_labels if col_labels is None else tuple(col_labels)
        if set(row_labels) != set(self.row_labels) or set(col_labels) != set(
            self.col_labels
        ):
            raise ValueError("reindex labels must be a permutation of the current ones")
        rperm = [self._rindex[lab] for lab in row_labels]
        cperm = [self._cindex[lab] for lab in col_labels]
        return CMatrix(self.data[np.ix_(rperm, cperm)], row_labels, col_labels)

    def relabeled(self, row_labels, col_labels=None):
        """Same data under new labels (no permutation is performed)."""
        row_labels = tuple(row_labels)
        col_labels = row_labels if col_labels is None else tuple(col_labels)
        return CMatrix(self.data.copy(), row_labels, col_labels)

    # -- algebra ----------------------------------------------------------
    def __add__(self, other):
        other = self._aligned(other)
        return CMatrix(self.data + other.data, self.row_labels, self.col_labels)

    def __sub__(self, other):
        other = self._aligned(other)
        return CMatrix(self.data - other.data, self.row_labels, self.col_labels)

    def __neg__(self):
        return CMatrix(-self.data, self.row_labels, self.col_labels)

    def __mul__(self, scalar):
        return CMatrix(self.data * scalar, self.row_labels, self.col_labels)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, CMatrix):
            raise TypeError("matmul requires another CMatrix")
        if self.col_labels != other.row_labels:
            if set(self.col_labels) != set(other.row_labels):
                raise ValueError("matmul label mismatch")
            other = other.reindexed(self.col_labels, other.col_labels)
        return CMatrix(self.data @ other.data, self.row_labels, other.col_labels)

    def dagger(self):
        return CMatrix(self.data.conj().T, self.col_labels, self.row_labels)

    def commutator(self, other):
        return self @ other - other @ self

    def kron(self, other, combine=None):
        """Kronecker product; labels are combined pairwise (outer, inner)."""
        if combine is None:
            combine = lambda a, b: (a, b)
        rows = [combine(a, b) for a in self.row_labels for b in other.row_labels]
        cols = [combine(a, b) for a in self.col_labels for b in other.col_labels]
        return CMatrix(np.kron(self.data, other.data), rows, cols)

    # -- metrics ----------------------------------------------------------
    def norm_inf(self):
        """Largest entry magnitude."""
        return float(np.max(np.abs(self.data))) if self.data.size else 0.0

    def residual_vs(self, other):
        """Max entry difference after aligning label order."""
        other = self._aligned(other)
        return float(np.max(np.abs(self.data - other.data))) if self.data.size else 0.0

    def _aligned(self, other):
        if not isinstance(other, CMatrix):
            raise TypeError("expected a CMatrix")
        if (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
        ):
            return other
        return other.reindexed(self.row_labels, self.col_labels)

    def __repr__(self):
        return f"CMatrix({len(self.row_labels)}x{len(self.col_labels)})"


@dataclass(frozen=True)
class GroupPoint:
    """Six real coordinates of a group element.

    ``phi`` and ``eps`` are the phase/rapidity pair acting on the row
    side, ``psi`` and ``veps`` the pair acting on the column side, with
    ``theta`` (rotation) and ``tau`` (boost) in between.  The complex
    combinations phi - i*eps, theta - i*tau, psi - i*veps play the role
    of complexified angles.
    """

    phi: float = 0.0
    eps: float = 0.0
    theta: float = 0.0
    tau: float = 0.0
    psi: float = 0.0
    veps: float = 0.0

    def as_tuple(self):
        return (self.phi, self.eps, self.theta, self.tau, self.psi, self.veps)

    def normalized(self):
        """Equivalent parameters with angles in canonical ranges.

        Returns a point with 0 <= theta <= pi, 0 <= phi < 2*pi and
        -2*pi <= psi < 2*pi that maps to the same fundamental matrix.
        Rapidities are untouched except for the sign flip of ``tau``
        that accompanies a theta reflection.
        """
        phi, eps, theta, tau, psi, veps = self.as_tuple()
        theta = theta % (2 * _TWO_PI)
        if theta >= _TWO_PI:
            # theta -> theta - 2*pi flips the overall sign; a 2*pi shift
            # of psi flips it back.
            theta -= _TWO_PI
            psi += _TWO_PI
        if theta > math.pi:
            # Reflect theta about pi by conjugating with a half-turn of
            # phi/psi; the conjugation also reverses tau, and the
            # leftover sign is absorbed into psi.
            theta = _TWO_PI - theta
            tau = -tau
            phi += math.pi
            psi += math.pi
        wraps = math.floor(phi / _TWO_PI)
        phi -= wraps * _TWO_PI
        if wraps % 2:
            psi += _TWO_PI
        psi = (psi + _TWO_PI) % (2 * _TWO_PI) - _TWO_PI
        return replace(
            self, phi=phi, eps=eps, theta=theta, tau=tau, psi=psi, veps=veps
        )
