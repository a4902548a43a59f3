"""Infinitesimal-operator realizations and the maps between them.

Three operator families share one labeled-matrix container: ladder
operators on a two-spin carrier, tridiagonal rotation/boost operators
on a single spin, and the block-tridiagonal pair coupling adjacent
spins on a multi-spin carrier.  A relation checker measures how well a
given operator set satisfies the algebra it claims to realize.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import CMatrix, enumerate_basis
from .halfint import HalfInt, lrange, mrange


def _alpha(l, m):
    """Ladder weight sqrt((l+m)(l-m+1))."""
    return math.sqrt((l + m).as_int() * (l - m + 1).as_int())


# ---------------------------------------------------------------------------
# Ladder operators on the (l, ldot) carrier


def waerden_op(kind, l, ldot):
    """Ladder operator on the two-spin weight basis.

    ``kind`` is one of X+, X-, X3 (acting on the dotted projection) or
    Y+, Y-, Y3 (acting on the undotted one).  Raising/lowering entries
    carry the usual sqrt((j±m)(j∓m+1)) weights; the 3-components are
    diagonal in the respective projection.
    """
    l, ldot = HalfInt(l), HalfInt(ldot)
    basis = enumerate_basis(l, ldot)
    entries = {}
    for b in basis:
        if kind == "X3":
            entries[(b, b)] = float(b.mdot)
        elif kind == "Y3":
            entries[(b, b)] = float(b.m)
        elif kind == "X-":
            if b.mdot > -ldot:
                tgt = b._replace(mdot=b.mdot - 1)
                entries[(tgt, b)] = _alpha(ldot, b.mdot)
        elif kind == "X+":
            if b.mdot < ldot:
                tgt = b._replace(mdot=b.mdot + 1)
                entries[(tgt, b)] = math.sqrt(
                    (ldot - b.mdot).as_int() * (ldot + b.mdot + 1).as_int()
                )
        elif kind == "Y-":
            if b.m > -l:
                tgt = b._replace(m=b.m - 1)
                entries[(tgt, b)] = _alpha(l, b.m)
        elif kind == "Y+":
            if b.m < l:
                tgt = b._replace(m=b.m + 1)
                entries[(tgt, b)] = math.sqrt(
                    (l - b.m).as_int() * (l + b.m + 1).as_int()
                )
        else:
            raise ValueError(f"unknown ladder operator kind {kind!r}")
    return CMatrix.from_entries(basis, basis, entries)


# ---------------------------------------------------------------------------
# Tridiagonal operators on a single spin


def helicity_ab_op(kind, l):
    """Rotation/boost generator on the spin-l carrier, anti-Hermitian
    convention (the 3-component of the rotation family is diag(-i m)).

    ``kind``: A1, A2, A3 (rotations), B1, B2, B3 (boosts), with an
    optional trailing ``t`` selecting the conjugate-representation
    variant, which is the overall sign flip of the plain one.
    """
    base = kind
    flip = 1.0
    if kind.endswith("t"):
        base = kind[:-1]
        flip = -1.0
    l = HalfInt(l)
    ms = mrange(l)
    entries = {}
    for m in ms:
        down = _alpha(l, m) if m > -l else 0.0
        up = _alpha(l, m + 1) if m < l else 0.0
        if base == "A1":
            if m > -l:
                entries[(m - 1, m)] = -0.5j * down
            if m < l:
                entries[(m + 1, m)] = -0.5j * up
        elif base == "A2":
            if m > -l:
                entries[(m - 1, m)] = 0.5 * down
            if m < l:
                entries[(m + 1, m)] = -0.5 * up
        elif base == "A3":
            entries[(m, m)] = -1j * float(m)
        elif base == "B1":
            if m > -l:
                entries[(m - 1, m)] = 0.5 * down
            if m < l:
                entries[(m + 1, m)] = 0.5 * up
        elif base == "B2":
            if m > -l:
                entries[(m - 1, m)] = 0.5j * down
            if m < l:
                entries[(m + 1, m)] = -0.5j * up
        elif base == "B3":
            entries[(m, m)] = float(m)
        else:
            raise ValueError(f"unknown operator kind {kind!r}")
    out = CMatrix.from_entries(ms, ms, entries)
    return flip * out


# ---------------------------------------------------------------------------
# Block-tridiagonal operators on a spin tower


@dataclass(frozen=True)
class GNRepLabel:
    """Finite-dimensional carrier spanning spins l0, l0+1, ..., l0+p-1."""

    l0: HalfInt
    p: int

    def __post_init__(self):
        object.__setattr__(self, "l0", HalfInt(self.l0))
        if self.l0 < 0:
            raise ValueError("l0 must be non-negative")
        if int(self.p) < 1:
            raise ValueError("p must be a positive integer")
        object.__setattr__(self, "p", int(self.p))

    @property
    def l1(self):
        return self.l0 + self.p

    @property
    def lmax(self):
        return self.l1 - 1

    def basis(self):
        return [
            (l, m) for l in lrange(self.l0, self.lmax) for m in mrange(l)
        ]


def _gn_diag_coef(rep, l):
    """i * l0 * l1 / (l (l+1)); only called for l > 0."""
    lf = float(l)
    return 1j * float(rep.l0) * float(rep.l1) / (lf * (lf + 1.0))


def _gn_link_coef(rep, l):
    """(i/l) sqrt((l^2-l0^2)(l^2-l1^2)/(4l^2-1)); real for l0 < l < l1."""
    lf, l0f, l1f = float(l), float(rep.l0), float(rep.l1)
    rad = (lf * lf - l0f * l0f) * (lf * lf - l1f * l1f) / (4 * lf * lf - 1.0)
    return (1j / lf) * cmath.sqrt(rad)


def gn_op(kind, rep: GNRepLabel):
    """Compact (H) or boost (F) generator on the spin-tower carrier.

    H3/H± act within each spin block; F3/F± couple l-1, l, l+1 blocks
    with the diagonal and link coefficients of the tower.  Terms whose
    target leaves the carrier vanish identically and are skipped, which
    also avoids the undefined diagonal coefficient at l = 0 (it would
    only ever multiply m = 0).
    """
    basis = rep.basis()
    entries = {}
    lmax = rep.lmax
    for (l, m) in basis:
        if kind == "H3":
            entries[((l, m), (l, m))] = float(m)
        elif kind == "H+":
            if m < l:
                entries[((l, m + 1), (l, m))] = math.sqrt(
                    (l + m + 1).as_int() * (l - m).as_int()
                )
        elif kind == "H-":
            if m > -l:
                entries[((l, m - 1), (l, m))] = _alpha(l, m)
        elif kind == "F3":
            if l - 1 >= rep.l0 and abs(m) <= l - 1:
                entries[((l - 1, m), (l, m))] = _gn_link_coef(
                    rep, l
                ) * math.sqrt((l - m).as_int() * (l + m).as_int())
            if l > 0:
                entries[((l, m), (l, m))] = -_gn_diag_coef(rep, l) * float(m)
            if l + 1 <= lmax:
                entries[((l + 1, m), (l, m))] = -_gn_link_coef(
                    rep, l + 1
                ) * math.sqrt((l + 1 - m).as_int() * (l + 1 + m).as_int())
        elif kind == "F+":
            if l - 1 >= rep.l0 and m + 1 <= l - 1:
                entries[((l - 1, m + 1), (l, m))] = _gn_link_coef(
                    rep, l
                ) * math.sqrt((l - m).as_int() * (l - m - 1).as_int())
            if l > 0 and m < l:
                entries[((l, m + 1), (l, m))] = -_gn_diag_coef(
                    rep, l
                ) * math.sqrt((l - m).as_int() * (l + m + 1).as_int())
            if l + 1 <= lmax:
                entries[((l + 1, m + 1), (l, m))] = _gn_link_coef(
                    rep, l + 1
                ) * math.sqrt((l + m + 1).as_int() * (l + m + 2).as_int())
        elif kind == "F-":
            if l - 1 >= rep.l0 and m - 1 >= -(l - 1):
                entries[((l - 1, m - 1), (l, m))] = -_gn_link_coef(
                    rep, l
                ) * math.sqrt((l + m).as_int() * (l + m - 1).as_int())
            if l > 0 and m > -l:
                entries[((l, m - 1), (l, m))] = -_gn_diag_coef(
                    rep, l
                ) * _alpha(l, m)
            if l + 1 <= lmax:
                entries[((l + 1, m - 1), (l, m))] = -_gn_link_coef(
                    rep, l + 1
                ) * math.sqrt((l - m + 1).as_int() * (l - m + 2).as_int())
        else:
            raise ValueError(f"unknown operator kind {kind!r}")
    return CMatrix.from_entries(basis, basis, entries)


def gn_ops(rep: GNRepLabel):
    """All six tower operators as a dict."""
    return {k: gn_op(k, rep) for k in ("H+", "H-", "H3", "F+", "F-", "F3")}


# ---------------------------------------------------------------------------
# Basis change between the tower pair and the two commuting families


def _require(ops, *tags):
    for t in tags:
        if t not in ops:
            raise KeyError(f"missing operator {t!r}")
    return [ops[t] for t in tags]


def basis_change(gn):
    """Map the (H, F) tower pair to the two commuting families.

    Applies the linear combinations Y_a = -(F_a + iH_a)/2 and
    X_a = (F_a - iH_a)/2 for a in {+, -, 3}, then forms the Cartesian
    components and the rotation/boost set A_k = X_k + Y_k,
    B_k = -i(X_k - Y_k).
    """
    hp, hm, h3, fp, fm, f3 = _require(gn, "H+", "H-", "H3", "F+", "F-", "F3")
    out = {
        "Y+": -0.5 * (fp + 1j * hp),
        "Y-": -0.5 * (fm + 1j * hm),
        "Y3": -0.5 * (f3 + 1j * h3),
        "X+": 0.5 * (fp - 1j * hp),
        "X-": 0.5 * (fm - 1j * hm),
        "X3": 0.5 * (f3 - 1j * h3),
    }
    for fam in ("X", "Y"):
        plus, minus = out[f"{fam}+"], out[f"{fam}-"]
        out[f"{fam}1"] = 0.5 * (plus + minus)
        out[f"{fam}2"] = -0.5j * (plus - minus)
    for k in ("1", "2", "3"):
        out[f"A{k}"] = out[f"X{k}"] + out[f"Y{k}"]
        out[f"B{k}"] = -1j * (out[f"X{k}"] - out[f"Y{k}"])
    return out


def basis_change_inverse(xy):
    """Recover the (H, F) tower pair from the two families exactly."""
    out = {}
    for a in ("+", "-", "3"):
        x, y = _require(xy, f"X{a}", f"Y{a}")
        out[f"F{a}"] = x - y
        out[f"H{a}"] = 1j * (x + y)
    return out


# ---------------------------------------------------------------------------
# Relation checking

_LORENTZ_RELATIONS = (
    ("A1", "A2", "A3", 1),
    ("A2", "A3", "A1", 1),
    ("A3", "A1", "A2", 1),
    ("B1", "B2", "A3", -1),
    ("B2", "B3", "A1", -1),
    ("B3", "B1", "A2", -1),
    ("A1", "B1", None, 0),
    ("A2", "B2", None, 0),
    ("A3", "B3", None, 0),
    ("B1", "A1", None, 0),
    ("B2", "A2", None, 0),
    ("B3", "A3", None, 0),
    ("A1", "B2", "B3", 1),
    ("A1", "B3", "B2", -1),
    ("A2", "B3", "B1", 1),
    ("A2", "B1", "B3", -1),
    ("A3", "B1", "B2", 1),
    ("A3", "B2", "B1", -1),
)


def _zero_like(mat):
    return CMatrix.zeros(mat.row_labels, mat.col_labels)


def _relation_residual(ops, a, b, rhs, coef):
    A, B = _require(ops, a, b)
    want = _zero_like(A) if rhs is None else coef * _require(ops, rhs)[0]
    return A.commutator(B).residual_vs(want)


def _ladder_flavor(x3, xp):
    """Classify [X3, X+] as +X+ (hermitian) or -iX+ (antihermitian)."""
    scale = max(xp.norm_inf(), 1e-30)
    comm = x3.commutator(xp)
    r_h = comm.residual_vs(xp) / scale
    r_a = comm.residual_vs(-1j * xp) / scale
    if xp.norm_inf() < 1e-14 and x3.norm_inf() < 1e-14:
        return "degenerate"
    return "hermitian" if r_h <= r_a else "antihermitian"


def _cartesianize(ops, fam):
    """Cartesian components of one ladder family, anti-Hermitian flavor."""
    if f"{fam}1" in ops and f"{fam}2" in ops and f"{fam}3" in ops:
        return {k: ops[f"{fam}{k}"] for k in "123"}, "cartesian"
    plus, minus, three = _require(ops, f"{fam}+", f"{fam}-", f"{fam}3")
    flavor = _ladder_flavor(three, plus)
    if flavor == "hermitian":
        return {
            "1": -0.5j * (plus + minus),
            "2": -0.5 * (plus - minus),
            "3": -1j * three,
        }, flavor
    return {
        "1": 0.5 * (plus + minus),
        "2": -0.5j * (plus - minus),
        "3": three,
    }, flavor


def commutator_report(ops, relation_set):
    """Per-relation residuals for one relation set.

    relation_set:
      - "lorentz": the 18 rotation/boost commutators of the A/B family.
      - "su2_pair": closure of each of the two commuting families plus
        all cross-commutators; ladder inputs are converted to Cartesian
        components first (the conversion that makes a family close
        depends on whether its ladder is Hermitian- or anti-Hermitian-
        flavored, so the flavor is detected and reported).
      - "ladder": raw ladder relations of both families plus the cross
        commutators, with flavor detection.
    """
    report = {"relation_set": relation_set, "residuals": {}}
    res = report["residuals"]
    if relation_set == "lorentz":
        for a, b, rhs, coef in _LORENTZ_RELATIONS:
            label = f"[{a},{b}]" + (f"={'-' if coef < 0 else ''}{rhs}" if rhs else "=0")
            res[label] = _relation_residual(ops, a, b, rhs, coef)
    elif relation_set == "su2_pair":
        x, xf = _cartesianize(ops, "X")
        y, yf = _cartesianize(ops, "Y")
        report["flavor"] = {"X": xf, "Y": yf}
        for fam, c in (("X", x), ("Y", y)):
            trip = {f"{fam}{k}": v for k, v in c.items()}
            for a, b, r in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
                res[f"[{fam}{a},{fam}{b}]={fam}{r}"] = _relation_residual(
                    trip, f"{fam}{a}", f"{fam}{b}", f"{fam}{r}", 1
                )
        for i in "123":
            for j in "123":
                res[f"[X{i},Y{j}]=0"] = (
                    x[i].commutator(y[j]).residual_vs(_zero_like(x[i]))
                )
        # The doubtful printed variant of the third closure relation,
        # evaluated alongside the cyclic one it is suspected to be.
        printed = x["2"].commutator(x["1"]).residual_vs(x["2"])
        cyclic = res["[X3,X1]=X2"]
        report["third_relation"] = {
            "printed [X2,X1]=X2": printed,
            "cyclic [X3,X1]=X2": cyclic,
            "holds": "cyclic" if cyclic <= printed else "printed",
        }
    elif relation_set == "ladder":
        x3, xp, xm = _require(ops, "X3", "X+", "X-")
        y3, yp, ym = _require(ops, "Y3", "Y+", "Y-")
        xf = _ladder_flavor(x3, xp)
        yf = _ladder_flavor(y3, yp)
        report["flavor"] = {"X": xf, "Y": yf}
        for fam, (three, plus, minus, fl) in (
            ("X", (x3, xp, xm, xf)),
            ("Y", (y3, yp, ym, yf)),
        ):
            if fl == "hermitian":
                pairs = (
                    (f"[{fam}3,{fam}+]=+{fam}+", three.commutator(plus), plus),
                    (f"[{fam}3,{fam}-]=-{fam}-", three.commutator(minus), -1 * minus),
                    (f"[{fam}+,{fam}-]=2{fam}3", plus.commutator(minus), 2 * three),
                )
            else:
                pairs = (
                    (f"[{fam}3,{fam}+]=-i{fam}+", three.commutator(plus), -1j * plus),
                    (f"[{fam}3,{fam}-]=+i{fam}-", three.commutator(minus), 1j * minus),
                    (f"[{fam}+,{fam}-]=-2i{fam}3", plus.commutator(minus), -2j * three),
                )
            for label, got, want in pairs:
                res[label] = got.residual_vs(want)
        for a, am in (("X3", x3), ("X+", xp), ("X-", xm)):
            for b, bm in (("Y3", y3), ("Y+", yp), ("Y-", ym)):
                res[f"[{a},{b}]=0"] = am.commutator(bm).residual_vs(_zero_like(am))
    else:
        raise ValueError(f"unknown relation set {relation_set!r}")
    report["max_residual"] = max(res.values()) if res else 0.0
    return report


def commutator_residual(ops, relation_set):
    """Max residual over every relation in the chosen set."""
    return commutator_report(ops, relation_set)["max_residual"]


def ab_from_families(ops):
    """Assemble the rotation/boost sextet A_k = X_k + Y_k,
    B_k = -i(X_k - Y_k) from a two-family operator set.

    Accepts Cartesian components directly or ladder components, which
    are converted first (Hermitian-flavored ladders are rotated to the
    anti-Hermitian convention so the assembled set satisfies the
    rotation/boost relations).
    """
    x, _ = _cartesianize(ops, "X")
    y, _ = _cartesianize(ops, "Y")
    out = {}
    for k in "123":
        out[f"A{k}"] = x[k] + y[k]
        out[f"B{k}"] = -1j * (x[k] - y[k])
    return out


def split_families(ab_ops):
    """Project a rotation/boost sextet onto its two commuting families.

    X_k = (A_k + iB_k)/2 and Y_k = (A_k - iB_k)/2.  For the plain
    tridiagonal sextet the X family vanishes identically and Y_k = A_k;
    for the conjugate-variant sextet the roles swap, with the (A+iB)/2
    combination again the vanishing one.
    """
    a = _require(ab_ops, "A1", "A2", "A3")
    b = _require(ab_ops, "B1", "B2", "B3")
    out = {}
    for k, (ak, bk) in enumerate(zip(a, b), start=1):
        out[f"X{k}"] = 0.5 * (ak + 1j * bk)
        out[f"Y{k}"] = 0.5 * (ak - 1j * bk)
    return out


def helicity_ops(l, dotted=False):
    """The six rotation/boost operators at spin l as a dict keyed A1..B3."""
    suffix = "t" if dotted else ""
    return {
        f"{fam}{k}": helicity_ab_op(f"{fam}{k}{suffix}", l)
        for fam in "AB"
        for k in "123"
    }


def waerden_ops(l, ldot):
    """The six ladder operators on the (l, ldot) carrier as a dict."""
    return {
        k: waerden_op(k, l, ldot)
        for k in ("X+", "X-", "X3", "Y+", "Y-", "Y3")
    }
