"""Wave-equation matrices on chains of interlocking spinor representations.

A chain is an ordered list of (l1, l2) representation labels; two links
interlock when both weights differ by exactly one half step.  The
longitudinal matrix is assembled from a reduced coefficient table — one
complex number per (rep pair, spin-tower pair) — stretched over the
projection quantum number by the fixed sqrt weights; the transverse
pair is recovered by commutators with the rotation generators.  The
module verifies the full rotation/boost invariance tables in both the
plain and conjugate sectors, the ladder-form identities they imply,
the projection-block structure, and decomposability of the chain.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import expm

from .core import CMatrix
from .generators import helicity_ab_op
from .halfint import HalfInt, half, lrange, mrange
from .tensordec import RepLabel


class ChainIndex(NamedTuple):
    """Basis label (rep position k; spin tower l, projection m)."""

    k: int
    l: HalfInt
    m: HalfInt

    def __str__(self):
        return f"[{self.k}]({self.l},{self.m})"


def is_interlocking(a: RepLabel, b: RepLabel):
    """True when both representation weights shift by exactly 1/2."""
    return (
        abs(a.l1.twice - b.l1.twice) == 1 and abs(a.l2.twice - b.l2.twice) == 1
    )


@dataclass(frozen=True)
class RepChain:
    """Ordered representations with their interlocking link set."""

    reps: tuple

    def __init__(self, reps):
        reps = tuple(
            r if isinstance(r, RepLabel) else RepLabel(*r) for r in reps
        )
        if not reps:
            raise ValueError("chain needs at least one representation")
        object.__setattr__(self, "reps", reps)

    @property
    def links(self):
        """Unordered interlocking pairs (i, j), i < j."""
        return tuple(
            (i, j)
            for i in range(len(self.reps))
            for j in range(i + 1, len(self.reps))
            if is_interlocking(self.reps[i], self.reps[j])
        )

    def tower_spins(self, k):
        """Spin towers |l1-l2| .. l1+l2 carried by rep k."""
        rep = self.reps[k]
        low = HalfInt.from_twice(abs(rep.l1.twice - rep.l2.twice))
        return lrange(low, rep.l1 + rep.l2)

    def basis(self):
        """Chain carrier: rep-major, towers ascending, m descending."""
        out = []
        for k in range(len(self.reps)):
            for l in self.tower_spins(k):
                out.extend(ChainIndex(k, l, m) for m in mrange(l))
        return out

    @property
    def dim(self):
        return sum(r.dim for r in self.reps)


def classify(chain: RepChain):
    """Connected components of the interlocking graph with verdicts.

    A component holding two or more linked representations is
    indecomposable; an isolated representation is decomposable.
    """
    parent = list(range(len(chain.reps)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in chain.links:
        parent[find(i)] = find(j)
    groups = {}
    for k in range(len(chain.reps)):
        groups.setdefault(find(k), []).append(k)
    out = []
    for members in sorted(groups.values()):
        verdict = "indecomposable" if len(members) > 1 else "decomposable"
        out.append({"members": tuple(members), "verdict": verdict})
    return tuple(out)


def spin_block_members(chain: RepChain, s):
    """Interlocking links whose both reps admit spin s.

    Admission is the double inequality |l1 - l2| <= s <= l1 + l2.
    """
    s = HalfInt(s)
    if s.twice < 0:
        raise ValueError("spin must be nonnegative")

    def admits(rep):
        return (
            abs(rep.l1.twice - rep.l2.twice) <= s.twice
            <= rep.l1.twice + rep.l2.twice
        )

    return tuple(
        (i, j)
        for i, j in chain.links
        if admits(chain.reps[i]) and admits(chain.reps[j])
    )


class CoeffTable:
    """Reduced coefficients keyed by (target rep, source rep, l', l).

    Holds one table for the plain sector and one for the conjugate
    sector.  Only tower pairs with |l' - l| <= 1 are representable.
    """

    def __init__(self, undotted=None, dotted=None):
        self.undotted = self._normalize(undotted or {})
        self.dotted = self._normalize(dotted or {})

    @staticmethod
    def _normalize(table):
        out = {}
        for (kp, k, lp, l), value in table.items():
            lp, l = HalfInt(lp), HalfInt(l)
            if abs(lp.twice - l.twice) > 2:
                raise ValueError(
                    f"coefficient links towers {lp} and {l}, "
                    "more than one step apart"
                )
            out[(int(kp), int(k), lp, l)] = complex(value)
        return out


def _tower_weight(lp, l, m):
    """Projection stretch factor for a coefficient between towers."""
    lt, mt = l.twice, m.twice
    if lp.twice == lt - 2:
        return math.sqrt(lt * lt - mt * mt) / 2.0
    if lp.twice == lt:
        return mt / 2.0
    return math.sqrt((lt + 2) ** 2 - mt * mt) / 2.0


def _assemble_one(chain, table, sector):
    basis = chain.basis()
    entries = {}
    nreps = len(chain.reps)
    for (kp, k, lp, l), value in table.items():
        if not (0 <= kp < nreps and 0 <= k < nreps):
            raise ValueError(f"{sector} coefficient names rep {max(kp, k)}, "
                             f"chain has {nreps}")
        if kp != k and not is_interlocking(chain.reps[kp], chain.reps[k]):
            raise ValueError(
                f"{sector} coefficient on non-interlocking pair ({kp}, {k})"
            )
        if lp not in chain.tower_spins(kp) or l not in chain.tower_spins(k):
            raise ValueError(
                f"{sector} coefficient targets tower ({lp}, {l}) "
                f"absent from reps ({kp}, {k})"
            )
        ms = mrange(lp) if lp.twice < l.twice else mrange(l)
        for m in ms:
            entries[(ChainIndex(kp, lp, m), ChainIndex(k, l, m))] = (
                value * _tower_weight(lp, l, m)
            )
    return CMatrix.from_entries(basis, basis, entries)


def assemble_lambda3(chain: RepChain, coeffs: CoeffTable):
    """Longitudinal matrices for both sectors from the coefficient table.

    Each reduced coefficient is stretched over matching projections:
    sqrt(l^2 - m^2) one tower down, m on the tower, and
    sqrt((l+1)^2 - m^2) one tower up.  Everything else is zero.
    """
    return (
        _assemble_one(chain, coeffs.undotted, "plain"),
        _assemble_one(chain, coeffs.dotted, "conjugate"),
    )


def chain_generators(chain: RepChain):
    """Rotation/boost generator set acting on the chain carrier.

    The rotation triple acts tower-by-tower in its helicity form; the
    boost triple is i times it.  The conjugate-sector pair is the
    negated rotation triple together with -i times itself — the sign
    that closes the conjugate invariance tables.
    """
    basis = chain.basis()
    out = {}
    for i in (1, 2, 3):
        entries = {}
        for k in range(len(chain.reps)):
            for l in chain.tower_spins(k):
                op = helicity_ab_op(f"A{i}", l)
                for ri, rl in enumerate(op.row_labels):
                    for ci, cl in enumerate(op.col_labels):
                        value = op.data[ri, ci]
                        if value != 0:
                            entries[
                                (ChainIndex(k, l, rl), ChainIndex(k, l, cl))
                            ] = value
        rot = CMatrix.from_entries(basis, basis, entries)
        out[f"A{i}"] = rot
        out[f"B{i}"] = rot * 1j
        out[f"A{i}t"] = -rot
        out[f"B{i}t"] = out[f"A{i}t"] * (-1j)
    return out


def chain_ladders(gens):
    """Raising/lowering split of both sectors of a chain generator set."""
    out = {}
    for suffix in ("", "t"):
        x = {}
        y = {}
        for i in (1, 2, 3):
            a = gens[f"A{i}{suffix}"]
            b = gens[f"B{i}{suffix}"]
            x[i] = (a + b * 1j) * 0.5
            y[i] = (a - b * 1j) * 0.5
        out[f"X3{suffix}"] = x[3]
        out[f"Y3{suffix}"] = y[3]
        out[f"X+{suffix}"] = x[1] + x[2] * 1j
        out[f"X-{suffix}"] = x[1] - x[2] * 1j
        out[f"Y+{suffix}"] = y[1] + y[2] * 1j
        out[f"Y-{suffix}"] = y[1] - y[2] * 1j
    return out


# Commutator of generator i with matrix j: None means zero, otherwise
# (target matrix, sign).  Both sectors and both generator families are
# scalar multiples of this one vector-operator pattern.
_VECTOR_PATTERN = {
    (1, 1): None, (2, 1): (3, -1), (3, 1): (2, +1),
    (1, 2): (3, +1), (2, 2): None, (3, 2): (1, -1),
    (1, 3): (2, -1), (2, 3): (1, +1), (3, 3): None,
}

_TABLE_FACTORS = {"A": 1.0, "B": 1j, "At": -1.0, "Bt": 1j}


def _table_rows(family, lambdas, gens, sector):
    """Residuals of one 9-row invariance table."""
    suffix = "t" if family.endswith("t") else ""
    letter = family[0]
    factor = _TABLE_FACTORS[family]
    tag = "c" if sector == "conjugate" else ""
    rows = {}
    for (i, j), rhs in _VECTOR_PATTERN.items():
        gen = gens[f"{letter}{i}{suffix}"]
        comm = gen.commutator(lambdas[j])
        if rhs is None:
            label = f"[{letter}{i}{suffix},lambda{j}{tag}]=0"
            rows[label] = comm.norm_inf()
        else:
            target, sign = rhs
            coef = factor * sign
            label = f"[{letter}{i}{suffix},lambda{j}{tag}]={_coef_str(coef)}lambda{target}{tag}"
            rows[label] = (comm - lambdas[target] * coef).norm_inf()
    return rows


def _coef_str(c):
    if c == 1:
        return ""
    if c == -1:
        return "-"
    if c == 1j:
        return "i*"
    if c == -1j:
        return "-i*"
    return f"({c})*"


def lambda12_from_commutators(lambda3: CMatrix, gens, tol=1e-10):
    """Transverse pair recovered from the longitudinal matrix.

    The first is the commutator with the second rotation generator,
    the second the commutator of the third with the first.  The whole
    nine-relation rotation table is then verified as a postcondition.

    Raises
    ------
    ValueError
        If any rotation-table relation exceeds ``tol`` — the matrix is
        then not assembled consistently with this generator set.
    """
    lambda1 = gens["A2"].commutator(lambda3)
    lambda2 = gens["A3"].commutator(lambda1)
    lambdas = {1: lambda1, 2: lambda2, 3: lambda3}
    rows = _table_rows("A", lambdas, gens, "plain")
    worst = max(rows, key=rows.get)
    if rows[worst] > tol:
        raise ValueError(
            f"rotation table inconsistency: {worst} has residual "
            f"{rows[worst]:.3e}"
        )
    return lambda1, lambda2


@dataclass(frozen=True)
class GYSystem:
    """A chain, its coefficient table, all six matrices, and the masses."""

    chain: RepChain
    coeffs: CoeffTable
    lambda1: CMatrix
    lambda2: CMatrix
    lambda3: CMatrix
    lambda1c: CMatrix
    lambda2c: CMatrix
    lambda3c: CMatrix
    kappa: complex
    kappa_dot: complex

    def lambda_triple(self, sector="plain"):
        if sector == "plain":
            return (self.lambda1, self.lambda2, self.lambda3)
        return (self.lambda1c, self.lambda2c, self.lambda3c)


def build_system(chain, coeffs, kappa=1.0, kappa_dot=None):
    """Assemble both longitudinal matrices and recover both triples."""
    if kappa_dot is None:
        kappa_dot = kappa
    lambda3, lambda3c = assemble_lambda3(chain, coeffs)
    gens = chain_generators(chain)
    lambda1, lambda2 = lambda12_from_commutators(lambda3, gens)
    lambda1c, lambda2c = lambda12_from_commutators(lambda3c, gens)
    return GYSystem(
        chain,
        coeffs,
        lambda1,
        lambda2,
        lambda3,
        lambda1c,
        lambda2c,
        lambda3c,
        complex(kappa),
        complex(kappa_dot),
    )


def verify_invariance(system: GYSystem, gens=None, tol=1e-10):
    """Residuals of all 36 table relations plus the ladder identities.

    Covers the rotation and boost tables in the plain sector, their
    conjugate-sector counterparts, the five ladder-form relations the
    longitudinal matrix satisfies in each sector (commutation with the
    whole opposite family and the double-commutator reproduction), and
    returns every residual alongside the list of violations.
    """
    if gens is None:
        gens = chain_generators(system.chain)
    plain = {1: system.lambda1, 2: system.lambda2, 3: system.lambda3}
    conj = {1: system.lambda1c, 2: system.lambda2c, 3: system.lambda3c}
    residuals = {}
    residuals.update(_table_rows("A", plain, gens, "plain"))
    residuals.update(_table_rows("B", plain, gens, "plain"))
    residuals.update(_table_rows("At", conj, gens, "conjugate"))
    residuals.update(_table_rows("Bt", conj, gens, "conjugate"))

    lad = chain_ladders(gens)
    l3, l3c = system.lambda3, system.lambda3c
    double = lad["Y+"].commutator(l3.commutator(lad["Y-"]))
    residuals["[Y+,[lambda3,Y-]]=2*lambda3"] = (double - l3 * 2.0).norm_inf()
    residuals["[lambda3,Y3]=0"] = l3.commutator(lad["Y3"]).norm_inf()
    residuals["[lambda3,X-]=0"] = l3.commutator(lad["X-"]).norm_inf()
    residuals["[lambda3,X+]=0"] = l3.commutator(lad["X+"]).norm_inf()
    residuals["[lambda3,X3]=0"] = l3.commutator(lad["X3"]).norm_inf()
    double_c = lad["X+t"].commutator(l3c.commutator(lad["X-t"]))
    residuals["[X+t,[lambda3c,X-t]]=2*lambda3c"] = (
        double_c - l3c * 2.0
    ).norm_inf()
    residuals["[lambda3c,X3t]=0"] = l3c.commutator(lad["X3t"]).norm_inf()
    residuals["[lambda3c,Y-t]=0"] = l3c.commutator(lad["Y-t"]).norm_inf()
    residuals["[lambda3c,Y+t]=0"] = l3c.commutator(lad["Y+t"]).norm_inf()
    residuals["[lambda3c,Y3t]=0"] = l3c.commutator(lad["Y3t"]).norm_inf()

    max_residual = max(residuals.values())
    return {
        "residuals": residuals,
        "max_residual": max_residual,
        "violations": sorted(k for k, v in residuals.items() if v > tol),
        "tolerance": tol,
    }


def finite_invariance_check(system: GYSystem, gens=None, xi=1e-4):
    """First-order spot check with finite group elements.

    Conjugates each matrix by exp(xi * generator) and compares against
    the matrix plus xi times the table right-hand side; the deviation
    must shrink like xi^2.
    """
    if gens is None:
        gens = chain_generators(system.chain)
    plain = {1: system.lambda1, 2: system.lambda2, 3: system.lambda3}
    conj = {1: system.lambda1c, 2: system.lambda2c, 3: system.lambda3c}
    worst = 0.0
    for family, lambdas in (("A", plain), ("B", plain), ("At", conj), ("Bt", conj)):
        suffix = "t" if family.endswith("t") else ""
        letter = family[0]
        factor = _TABLE_FACTORS[family]
        for (i, j), rhs in _VECTOR_PATTERN.items():
            gen = gens[f"{letter}{i}{suffix}"].data
            transform = expm(xi * gen)
            inverse = expm(-xi * gen)
            moved = transform @ lambdas[j].data @ inverse
            first_order = lambdas[j].data.copy()
            if rhs is not None:
                target, sign = rhs
                first_order = first_order + xi * factor * sign * lambdas[target].data
            worst = max(worst, float(np.max(np.abs(moved - first_order))))
    return {"xi": xi, "max_deviation": worst, "second_order": worst <= 100.0 * xi * xi}


def extract_spin_blocks(mat: CMatrix, chain: RepChain):
    """Projection blocks of an m-preserving chain matrix.

    Returns one sub-matrix per projection value, each on the labels
    that carry that projection (in carrier order).
    """
    basis = chain.basis()
    groups = {}
    for label in basis:
        groups.setdefault(label.m, []).append(label)
    blocks = {}
    for m, labels in groups.items():
        idx = [mat._rindex[lab] for lab in labels]
        blocks[m] = CMatrix(mat.data[np.ix_(idx, idx)], tuple(labels))
    return blocks


def reassemble_spin_blocks(blocks, chain: RepChain):
    """Inverse of block extraction: place every block back on the carrier."""
    basis = chain.basis()
    out = CMatrix.zeros(basis)
    for block in blocks.values():
        for ri, rl in enumerate(block.row_labels):
            for ci, cl in enumerate(block.col_labels):
                out.data[out._rindex[rl], out._cindex[cl]] = block.data[ri, ci]
    return out


def spin_content(lambda3: CMatrix, chain: RepChain, tol=1e-9):
    """Which spins the system carries: nonzero roots per spin block.

    The block at projection value s decides spin s; a block with a
    nonzero eigenvalue marks the spin as present.
    """
    blocks = extract_spin_blocks(lambda3, chain)
    out = {}
    for m, block in blocks.items():
        if m.twice < 0:
            continue
        eigs = np.linalg.eigvals(block.data)
        out[m] = bool(np.max(np.abs(eigs)) > tol)
    return out


def gamma_similarity(triple_a, triple_b):
    """Best scale and basis change mapping one matrix triple onto another.

    Finds scalar c and invertible S with A_i = c S B_i S^{-1} jointly
    for all three matrices.  The scale candidates come from the
    similarity-invariant trace of squares; S is the null vector of the
    stacked Sylvester system, taken from an SVD.

    Returns a report with the winning scale, the transform, the joint
    relative residual, and the transform's condition number.
    """
    mats_a = [np.asarray(getattr(a, "data", a), dtype=complex) for a in triple_a]
    mats_b = [np.asarray(getattr(b, "data", b), dtype=complex) for b in triple_b]
    n = mats_a[0].shape[0]
    if any(m.shape != (n, n) for m in mats_a + mats_b):
        raise ValueError("triples must consist of equally sized square matrices")
    trace_a = sum(np.trace(a @ a) for a in mats_a)
    trace_b = sum(np.trace(b @ b) for b in mats_b)
    if abs(trace_b) < 1e-300:
        raise ValueError("reference triple has vanishing trace invariant")
    base = cmath.sqrt(trace_a / trace_b)
    ident = np.eye(n)
    best = None
    for scale in (base, -base):
        rows = [
            np.kron(a, ident) - scale * np.kron(ident, b.T)
            for a, b in zip(mats_a, mats_b)
        ]
        stacked = np.vstack(rows)
        _, svals, vh = np.linalg.svd(stacked)
        transform = vh[-1].conj().reshape(n, n)
        residual = max(
            float(np.linalg.norm(a @ transform - scale * transform @ b))
            for a, b in zip(mats_a, mats_b)
        ) / float(np.linalg.norm(transform))
        if best is None or residual < best["residual"]:
            best = {
                "scale": complex(scale),
                "transform": transform,
                "residual": residual,
                "condition": float(np.linalg.cond(transform)),
                "min_singular_value": float(svals[-1]),
            }
    return best


def weyl_gamma_triple():
    """The three spatial gamma matrices in the chiral 2x2-block form."""
    zero = np.zeros((2, 2), dtype=complex)
    out = []
    for sigma in (
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    ):
        out.append(np.block([[zero, sigma], [-sigma, zero]]))
    return tuple(out)


def dirac_chain():
    """The two-rep chain (1/2, 0) + (0, 1/2)."""
    return RepChain((RepLabel(half(1), 0), RepLabel(0, half(1))))


def dirac_coeffs():
    """Coefficient table reproducing the chiral-basis gamma structure."""
    table = {
        (0, 1, half(1), half(1)): 1.0,
        (1, 0, half(1), half(1)): -1.0,
    }
    return CoeffTable(undotted=dict(table), dotted=dict(table))


def dirac_system(kappa=1.0, kappa_dot=None):
    """Built-in preset: the four-component first-order system."""
    return build_system(dirac_chain(), dirac_coeffs(), kappa, kappa_dot)


# ---------------------------------------------------------------------------
# Config-file round trip (reps/coeffs schema; "from"/"to" are 1-based).


def _parse_coeff_rows(rows):
    table = {}
    for row in rows:
        key = (
            int(row["to"]) - 1,
            int(row["from"]) - 1,
            HalfInt(row["lp"]),
            HalfInt(row["l"]),
        )
        table[key] = complex(float(row.get("re", 0.0)), float(row.get("im", 0.0)))
    return table


def system_from_config(cfg: dict):
    """Build a system from the documented chain-config dictionary.

    Schema: ``reps`` (list of {"l1", "l2"} as half-integer strings),
    ``coeffs`` (rows {"from", "to", "lp", "l", "re", "im"} with 1-based
    rep numbers), optional ``dotted`` rows (default: same as coeffs),
    optional ``kappa``/``kappa_dot`` as [re, im] pairs.
    """
    if not cfg.get("reps"):
        raise ValueError("chain config needs a nonempty 'reps' list")
    chain = RepChain(
        tuple(RepLabel(HalfInt(r["l1"]), HalfInt(r["l2"])) for r in cfg["reps"])
    )
    undotted = _parse_coeff_rows(cfg.get("coeffs", []))
    dotted_rows = cfg.get("dotted")
    dotted = _parse_coeff_rows(dotted_rows) if dotted_rows is not None else dict(undotted)
    kappa = complex(*cfg.get("kappa", [1.0, 0.0]))
    kappa_dot = complex(*cfg["kappa_dot"]) if "kappa_dot" in cfg else kappa
    return build_system(chain, CoeffTable(undotted, dotted), kappa, kappa_dot)


def _coeff_rows(table):
    rows = []
    for (kp, k, lp, l), value in sorted(
        table.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2].twice, kv[0][3].twice)
    ):
        rows.append(
            {
                "from": k + 1,
                "to": kp + 1,
                "lp": str(lp),
                "l": str(l),
                "re": value.real,
                "im": value.imag,
            }
        )
    return rows


def system_to_config(system: GYSystem):
    """Inverse of `system_from_config` (modulo row ordering)."""
    return {
        "reps": [
            {"l1": str(r.l1), "l2": str(r.l2)} for r in system.chain.reps
        ],
        "coeffs": _coeff_rows(system.coeffs.undotted),
        "dotted": _coeff_rows(system.coeffs.dotted),
        "kappa": [system.kappa.real, system.kappa.imag],
        "kappa_dot": [system.kappa_dot.real, system.kappa_dot.imag],
    }
