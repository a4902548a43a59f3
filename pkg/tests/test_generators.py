"""Tests for the infinitesimal-operator realizations and their maps."""

import numpy as np
import pytest

from helirep.core import CMatrix
from helirep.generators import (
    GNRepLabel,
    ab_from_families,
    basis_change,
    basis_change_inverse,
    commutator_report,
    commutator_residual,
    gn_op,
    gn_ops,
    helicity_ab_op,
    helicity_ops,
    split_families,
    waerden_op,
    waerden_ops,
)
from helirep.halfint import half

SPINS = [half(k) for k in range(1, 7)]  # 1/2 .. 3


def zeros_like(mat):
    return CMatrix.zeros(mat.row_labels, mat.col_labels)


class TestHelicityOps:
    def test_a3_half(self):
        a3 = helicity_ab_op("A3", half(1))
        np.testing.assert_allclose(np.diag(a3.data), [-0.5j, 0.5j])

    def test_b3_half(self):
        b3 = helicity_ab_op("B3", half(1))
        np.testing.assert_allclose(np.diag(b3.data), [0.5, -0.5])

    def test_a1_half_is_sigma1_flavored(self):
        a1 = helicity_ab_op("A1", half(1))
        np.testing.assert_allclose(a1.data, [[0, -0.5j], [-0.5j, 0]])

    def test_boost_is_i_times_rotation(self):
        for l in SPINS:
            for k in "123":
                a = helicity_ab_op(f"A{k}", l)
                b = helicity_ab_op(f"B{k}", l)
                assert b.residual_vs(1j * a) == 0.0

    def test_conjugate_variants_are_negations(self):
        for l in SPINS:
            for k in "123":
                for fam in "AB":
                    plain = helicity_ab_op(f"{fam}{k}", l)
                    tilde = helicity_ab_op(f"{fam}{k}t", l)
                    assert tilde.residual_vs(-1 * plain) == 0.0

    def test_rotation_boost_relations(self):
        for l in SPINS:
            assert commutator_residual(helicity_ops(l), "lorentz") <= 1e-12

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            helicity_ab_op("C1", half(1))

    def test_family_split_collapses_one_side(self):
        # The plain sextet carries only the Y family; its conjugate
        # variant carries only the other one.
        for l in SPINS:
            ops = helicity_ops(l)
            fams = split_families(ops)
            tilde_fams = split_families(helicity_ops(l, dotted=True))
            for k in "123":
                assert fams[f"X{k}"].norm_inf() == 0.0
                assert fams[f"Y{k}"].residual_vs(ops[f"A{k}"]) == 0.0
                assert tilde_fams[f"X{k}"].norm_inf() == 0.0

    def test_split_families_satisfy_pair_relations(self):
        for l in SPINS:
            fams = split_families(helicity_ops(l))
            assert commutator_residual(fams, "su2_pair") <= 1e-12


class TestWaerdenOps:
    def test_x3_diagonal_pattern(self):
        x3 = waerden_op("X3", half(1), half(1))
        np.testing.assert_allclose(np.diag(x3.data), [0.5, -0.5, 0.5, -0.5])

    def test_y_ladders_vanish_on_scalar_first_factor(self):
        for kind in ("Y+", "Y-"):
            assert waerden_op(kind, half(0), half(1)).norm_inf() == 0.0

    def test_x_plus_scalar_half(self):
        xp = waerden_op("X+", half(0), half(1))
        np.testing.assert_allclose(xp.data, [[0, 1], [0, 0]])

    def test_pair_relations_all_small_carriers(self):
        for a in range(6):
            for b in range(6):
                ops = waerden_ops(half(a), half(b))
                assert commutator_residual(ops, "su2_pair") <= 1e-13

    def test_ladder_relations_hermitian_flavor(self):
        report = commutator_report(waerden_ops(half(1), half(1)), "ladder")
        assert report["max_residual"] <= 1e-14
        assert report["flavor"] == {"X": "hermitian", "Y": "hermitian"}

    def test_rotation_boost_set_assembled_from_families(self):
        for a in range(6):
            for b in range(6):
                ab = ab_from_families(waerden_ops(half(a), half(b)))
                assert commutator_residual(ab, "lorentz") <= 1e-12

    def test_all_zero_operators_give_zero_residual(self):
        z = CMatrix.zeros([half(1), half(-1)], [half(1), half(-1)])
        ops = {k: z for k in ("X+", "X-", "X3", "Y+", "Y-", "Y3")}
        assert commutator_residual(ops, "su2_pair") == 0.0


class TestGNRepLabel:
    def test_derived_quantities(self):
        rep = GNRepLabel(half(1), 2)
        assert rep.l1 == half(5)
        assert rep.lmax == half(3)
        assert len(rep.basis()) == 6  # (2*1/2+1) + (2*3/2+1)

    def test_validation(self):
        with pytest.raises(ValueError):
            GNRepLabel(half(-1), 1)
        with pytest.raises(ValueError):
            GNRepLabel(half(1), 0)


class TestGNOps:
    def test_h3_smallest_tower(self):
        h3 = gn_op("H3", GNRepLabel(half(1), 1))
        np.testing.assert_allclose(np.diag(h3.data), [0.5, -0.5])

    def test_f3_smallest_tower_diagonal_coefficient(self):
        # Single-block tower: only the diagonal term survives, and the
        # diagonal coefficient evaluates to i there, so F3 = diag(-i m).
        f3 = gn_op("F3", GNRepLabel(half(1), 1))
        np.testing.assert_allclose(f3.data, [[-0.5j, 0], [0, 0.5j]])

    def test_compact_family_closes(self):
        for twice_l0 in range(0, 5):
            for p in (1, 2, 3):
                g = gn_ops(GNRepLabel(half(twice_l0), p))
                r1 = g["H+"].commutator(g["H-"]).residual_vs(2 * g["H3"])
                r2 = g["H3"].commutator(g["H+"]).residual_vs(g["H+"])
                r3 = g["H3"].commutator(g["H-"]).residual_vs(-1 * g["H-"])
                assert max(r1, r2, r3) <= 1e-12

    def test_scalar_tower_has_no_ladder_or_diagonal_action(self):
        # l = 0 block: every H entry and the F diagonal term vanish by
        # the explicit skip; only block-coupling entries may appear.
        g = gn_ops(GNRepLabel(half(0), 1))
        for k, op in g.items():
            assert op.norm_inf() == 0.0, k

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            gn_op("G3", GNRepLabel(half(0), 1))


class TestBasisChange:
    def test_x3_plus_y3_is_minus_i_h3(self):
        g = gn_ops(GNRepLabel(half(0), 2))
        xy = basis_change(g)
        assert (xy["X3"] + xy["Y3"]).residual_vs(-1j * g["H3"]) == 0.0
        assert xy["A3"].residual_vs(-1j * g["H3"]) == 0.0

    def test_zero_input_gives_zero_output(self):
        basis = GNRepLabel(half(1), 1).basis()
        z = CMatrix.zeros(basis, basis)
        xy = basis_change({k: z for k in ("H+", "H-", "H3", "F+", "F-", "F3")})
        assert all(m.norm_inf() == 0.0 for m in xy.values())

    def test_round_trip_is_exact(self):
        # The map is exactly invertible; numerically each entry where
        # the two input families overlap picks up one float-add
        # rounding per direction, so "exact" means one ulp here.
        for twice_l0 in range(0, 5):
            for p in (1, 2, 3):
                g = gn_ops(GNRepLabel(half(twice_l0), p))
                back = basis_change_inverse(basis_change(g))
                for k, op in g.items():
                    assert back[k].residual_vs(op) <= 1e-15, k

    def test_missing_operator_named(self):
        with pytest.raises(KeyError, match="H3"):
            basis_change({"H+": None, "H-": None})

    def test_mapped_towers_satisfy_both_relation_sets(self):
        for twice_l0 in range(0, 5):
            for p in (1, 2, 3):
                xy = basis_change(gn_ops(GNRepLabel(half(twice_l0), p)))
                assert commutator_residual(xy, "lorentz") <= 1e-12
                assert commutator_residual(xy, "su2_pair") <= 1e-12

    def test_smallest_nontrivial_tower_example(self):
        xy = basis_change(gn_ops(GNRepLabel(half(0), 1)))
        assert commutator_residual(xy, "lorentz") <= 1e-12

    def test_two_dim_tower_families_commute(self):
        xy = basis_change(gn_ops(GNRepLabel(half(1), 1)))
        for k in "123":
            for j in "123":
                assert xy[f"X{k}"].commutator(xy[f"Y{j}"]).norm_inf() == 0.0

    def test_mapped_ladders_are_antihermitian_flavored(self):
        xy = basis_change(gn_ops(GNRepLabel(half(1), 1)))
        ladders = {k: xy[k] for k in ("X+", "X-", "X3", "Y+", "Y-", "Y3")}
        report = commutator_report(ladders, "ladder")
        assert report["flavor"]["X"] == "antihermitian"
        assert report["max_residual"] <= 1e-13


class TestCommutatorReport:
    def test_third_relation_cyclic_not_printed(self):
        # The cyclic closure relation holds exactly; the doubtful
        # non-cyclic variant misses by an O(1) margin.
        report = commutator_report(waerden_ops(half(1), half(1)), "su2_pair")
        third = report["third_relation"]
        assert third["holds"] == "cyclic"
        assert third["cyclic [X3,X1]=X2"] <= 1e-13
        assert third["printed [X2,X1]=X2"] > 0.4

    def test_relation_count(self):
        report = commutator_report(helicity_ops(half(2)), "lorentz")
        assert len(report["residuals"]) == 18
        report = commutator_report(waerden_ops(half(1), half(2)), "su2_pair")
        assert len(report["residuals"]) == 15

    def test_missing_operator_is_named(self):
        with pytest.raises(KeyError, match="A2"):
            commutator_residual(
                {"A1": helicity_ab_op("A1", half(1))}, "lorentz"
            )

    def test_unknown_relation_set_rejected(self):
        with pytest.raises(ValueError):
            commutator_residual({}, "poincare")
