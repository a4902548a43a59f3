"""Anticommuting generator bases on spinor spaces and the transposition
matrices built from them.

Even rank n = 2m gives the classic tensor-product basis of sigma
matrices on a 2^m-dimensional space; odd rank appends the sigma_3 chain
and doubles into two inequivalent summands.  All generator entries are
Gaussian integers, so every algebra check here is exact — no tolerance.
The transposition matrices mix two adjacent generators with sqrt
weights and get verified against their expected scalar relations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

_SIGMA = {
    1: np.array([[0, 1], [1, 0]], dtype=complex),
    2: np.array([[0, -1j], [1j, 0]], dtype=complex),
    3: np.array([[1, 0], [0, -1]], dtype=complex),
}

_MAX_RANK = 20
_SPAN_CAP = 10  # exhaustive subset-product span check, 2^n products


def _chain(kind, position, factors):
    """sigma_3 x ... x sigma_kind x 1 x ... with the kind at `position`."""
    out = np.eye(1, dtype=complex)
    for t in range(factors):
        if t < position:
            out = np.kron(out, _SIGMA[3])
        elif t == position:
            out = np.kron(out, _SIGMA[kind])
        else:
            out = np.kron(out, np.eye(2, dtype=complex))
    return out


@dataclass(frozen=True)
class CliffordBasis:
    """Generators E_1..E_n of the rank-n anticommuting basis.

    For odd n each generator is a block-diagonal pair of summands and
    the final generator carries opposite signs in the two blocks.
    """

    n: int
    generators: tuple = field(repr=False)

    @property
    def dim(self):
        return self.generators[0].shape[0]

    @property
    def is_odd(self):
        return self.n % 2 == 1


def brauer_weyl(n):
    """The rank-n generator basis on 2^ceil(n/2) dimensions.

    Even n = 2m: E_i puts sigma_1 at factor i behind a sigma_3 chain,
    E_{m+j} the same with sigma_2.  Odd n = 2m+1: the even generators
    doubled as X + X and the sigma_3 chain with opposite block signs,
    which makes the two summands inequivalent.
    """
    n = int(n)
    if not 1 <= n <= _MAX_RANK:
        raise ValueError(f"rank must be between 1 and {_MAX_RANK}, got {n}")
    m, odd = divmod(n, 2)
    if not odd:
        gens = [_chain(1, i, m) for i in range(m)]
        gens += [_chain(2, j, m) for j in range(m)]
        return CliffordBasis(n, tuple(gens))
    even = [_chain(1, i, m) for i in range(m)] + [
        _chain(2, j, m) for j in range(m)
    ]
    zero = np.zeros((2 ** m, 2 ** m), dtype=complex)
    gens = [np.block([[e, zero], [zero, e]]) for e in even]
    chain = np.eye(1, dtype=complex)
    for _ in range(m):
        chain = np.kron(chain, _SIGMA[3])
    gens.append(np.block([[chain, zero], [zero, -chain]]))
    return CliffordBasis(n, tuple(gens))


def _anticommutation_failures(gens):
    failures = []
    dim = gens[0].shape[0]
    ident = np.eye(dim, dtype=complex)
    for i, a in enumerate(gens):
        for j in range(i, len(gens)):
            b = gens[j]
            want = 2.0 * ident if i == j else np.zeros_like(ident)
            if not np.array_equal(a @ b + b @ a, want):
                failures.append((i + 1, j + 1))
    return failures


def _subset_products(gens):
    """All 2^n ordered subset products E_{i1}..E_{ik} with i1 < .. < ik.

    Built by stripping the highest generator index, so each product
    costs a single matrix multiply.
    """
    dim = gens[0].shape[0]
    products = [np.eye(dim, dtype=complex)]
    for mask in range(1, 2 ** len(gens)):
        high = mask.bit_length() - 1
        products.append(products[mask ^ (1 << high)] @ gens[high])
    return products


def _subset_span_dim(gens):
    """Rank of the span of all subset products (exhaustive)."""
    vecs = [p.reshape(-1) for p in _subset_products(gens)]
    return int(np.linalg.matrix_rank(np.array(vecs), tol=1e-9))


def verify_clifford(basis: CliffordBasis):
    """Exact anticommutation check, plus span bookkeeping.

    Even rank up to the enumeration cap: subset products must span the
    full matrix algebra (dimension 4^m).  Odd rank: both summands are
    checked separately and the combined span must be twice a summand's.
    """
    report = {"n": basis.n, "failures": _anticommutation_failures(basis.generators)}
    report["anticommutation_ok"] = not report["failures"]
    report["span_dim"] = None
    if basis.n <= _SPAN_CAP:
        report["span_dim"] = _subset_span_dim(basis.generators)
        m = basis.n // 2
        if basis.is_odd:
            half_dim = basis.dim // 2
            blocks_a = [g[:half_dim, :half_dim] for g in basis.generators]
            blocks_b = [g[half_dim:, half_dim:] for g in basis.generators]
            report["summand_failures"] = (
                _anticommutation_failures(blocks_a),
                _anticommutation_failures(blocks_b),
            )
            report["span_ok"] = report["span_dim"] == 2 * 4 ** m
        else:
            report["span_ok"] = report["span_dim"] == 4 ** m
    report["ok"] = report["anticommutation_ok"] and report.get("span_ok", True)
    return report


def odd_direct_sum(m):
    """Structure report for the doubled odd-rank algebra.

    Verifies that the 2m+1 doubled generators produce two exact
    anticommuting summands whose joint span is the full two-block
    algebra, that the volume element (product of all generators) is
    central with opposite scalars in the two blocks, and that selecting
    one summand is multiplicative on random algebra elements.
    """
    m = int(m)
    if not 1 <= m <= 5:
        raise ValueError(f"direct-sum report capped at m = 5, got {m}")
    basis = brauer_weyl(2 * m + 1)
    half_dim = basis.dim // 2
    blocks_a = [g[:half_dim, :half_dim] for g in basis.generators]
    blocks_b = [g[half_dim:, half_dim:] for g in basis.generators]
    report = {
        "m": m,
        "summand_failures": (
            _anticommutation_failures(blocks_a),
            _anticommutation_failures(blocks_b),
        ),
        "span_dim": _subset_span_dim(basis.generators),
        "span_full": None,
    }
    report["span_full"] = report["span_dim"] == 2 * 4 ** m

    volume = np.eye(basis.dim, dtype=complex)
    for g in basis.generators:
        volume = volume @ g
    report["volume_central"] = all(
        np.array_equal(volume @ g, g @ volume) for g in basis.generators
    )
    scal_a = volume[0, 0]
    scal_b = volume[half_dim, half_dim]
    ident = np.eye(half_dim, dtype=complex)
    scalar_ok = np.array_equal(
        volume,
        np.block(
            [
                [scal_a * ident, np.zeros_like(ident)],
                [np.zeros_like(ident), scal_b * ident],
            ]
        ),
    )
    report["volume_scalars"] = (complex(scal_a), complex(scal_b)) if scalar_ok else None

    rng = np.random.default_rng(2 * m + 1)
    products = _subset_products(basis.generators)
    worst = 0.0
    for _ in range(100):
        x = _random_element(products, rng)
        y = _random_element(products, rng)
        lhs = (x @ y)[:half_dim, :half_dim]
        rhs = x[:half_dim, :half_dim] @ y[:half_dim, :half_dim]
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    report["projection_homomorphism_residual"] = worst
    report["ok"] = (
        report["summand_failures"] == ([], [])
        and report["span_full"]
        and report["volume_central"]
        and report["volume_scalars"] is not None
        and worst <= 1e-10
    )
    return report


def _random_element(products, rng, terms=48):
    """Random algebra element: a combination of sampled subset products."""
    picks = rng.choice(len(products), size=min(terms, len(products)), replace=False)
    out = np.zeros_like(products[0])
    for idx in picks:
        out += (rng.normal() + 1j * rng.normal()) * products[idx]
    return out


@dataclass(frozen=True)
class SchurCoverGens:
    """Transposition matrices t_1..t_m with their realized relation signs."""

    m: int
    t: tuple = field(repr=False)
    realized_signs: dict = field(default_factory=dict)


def schur_transpositions(m):
    """Transposition matrices on 2^m dimensions.

    t_k = sqrt((k-1)/2k) E_{k-1} - sqrt((k+1)/2k) E_k for k = 1..m,
    using the sigma_1 family of the rank-2m generator basis; the first
    coefficient vanishes at k = 1, so t_1 = -E_1.  The realized scalar
    signs of the square/braid/far-commutation relations are attached.
    """
    m = int(m)
    if not 2 <= m <= 10:
        raise ValueError(f"transposition set needs 2 <= m <= 10, got {m}")
    family = brauer_weyl(2 * m).generators[:m]
    ts = []
    for k in range(1, m + 1):
        lead = math.sqrt((k - 1) / (2 * k))
        trail = math.sqrt((k + 1) / (2 * k))
        t_k = -trail * family[k - 1]
        if k > 1:
            t_k = lead * family[k - 2] + t_k
        ts.append(t_k)
    gens = SchurCoverGens(m, tuple(ts))
    report = verify_tn_relations(gens)
    signs = {
        "square": report["s1"],
        "braid": report["s2"],
        "far_commute": report["s3"],
    }
    return SchurCoverGens(m, tuple(ts), signs)


def _scalar_of(mat, tol=1e-12):
    """The scalar s with mat = s*Id, or None."""
    dim = mat.shape[0]
    s = complex(np.trace(mat)) / dim
    if np.max(np.abs(mat - s * np.eye(dim))) > tol * max(1.0, abs(s)):
        return None
    return s


def verify_tn_relations(gens: SchurCoverGens):
    """Realized scalars of the three transposition relation classes.

    Checks that t_k^2, the braid cubes (t_j t_{j+1})^3, and the ratios
    t_k t_l (t_l t_k)^{-1} for far pairs are each scalar and constant
    across indices, and reports the three scalars.  The report never
    reconciles them against any presentation — it only states what the
    matrices do.
    """
    ts = gens.t
    report = {"m": gens.m, "failures": []}

    def collect(label, values):
        clean = [v for v in values if v is not None]
        if len(clean) != len(values):
            report["failures"].append(f"{label} not scalar")
            return None
        if any(abs(v - clean[0]) > 1e-12 for v in clean):
            report["failures"].append(f"{label} not constant across indices")
            return None
        return complex(np.round(clean[0].real) + 1j * np.round(clean[0].imag))

    report["s1"] = collect("square", [_scalar_of(t @ t) for t in ts])
    braids = []
    for j in range(len(ts) - 1):
        prod = ts[j] @ ts[j + 1]
        braids.append(_scalar_of(prod @ prod @ prod))
    report["s2"] = collect("braid", braids)
    fars = []
    for k in range(len(ts)):
        for l in range(k + 2, len(ts)):
            ab = ts[k] @ ts[l]
            ba = ts[l] @ ts[k]
            s = complex(np.vdot(ba, ab) / np.vdot(ba, ba))
            if np.max(np.abs(ab - s * ba)) > 1e-12:
                fars.append(None)
            else:
                fars.append(s)
    report["s3"] = collect("far_commute", fars) if fars else None
    report["ok"] = not report["failures"]
    return report


def transposition_homomorphism_report(m, max_word_len=4):
    """Sign-projective homomorphism check onto plain permutations.

    Words in t_1..t_m of bounded length are mapped to products of the
    underlying transpositions (k, k+1) on m+1 points; all matrix words
    landing on the same permutation must agree up to an overall sign.
    """
    gens = schur_transpositions(m)
    points = m + 1
    by_perm = {}
    worst = 0.0
    alphabet = list(range(m))
    for length in range(1, max_word_len + 1):
        for word in itertools.product(alphabet, repeat=length):
            perm = list(range(points))
            mat = np.eye(gens.t[0].shape[0], dtype=complex)
            for k in word:
                perm[k], perm[k + 1] = perm[k + 1], perm[k]
                mat = mat @ gens.t[k]
            key = tuple(perm)
            if key not in by_perm:
                by_perm[key] = mat
                continue
            ref = by_perm[key]
            res = min(
                float(np.max(np.abs(mat - ref))),
                float(np.max(np.abs(mat + ref))),
            )
            worst = max(worst, res)
    return {
        "m": m,
        "max_word_len": max_word_len,
        "distinct_permutations": len(by_perm),
        "max_sign_mismatch": worst,
        "ok": worst <= 1e-12,
    }
