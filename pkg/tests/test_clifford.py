import numpy as np
import pytest

from helirep.clifford import (
    CliffordBasis,
    SchurCoverGens,
    brauer_weyl,
    odd_direct_sum,
    schur_transpositions,
    transposition_homomorphism_report,
    verify_clifford,
    verify_tn_relations,
)

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)


class TestBrauerWeyl:
    def test_rank_two_is_the_pauli_pair(self):
        basis = brauer_weyl(2)
        assert np.array_equal(basis.generators[0], SIGMA1)
        assert np.array_equal(basis.generators[1], SIGMA2)

    def test_rank_four_tensor_patterns(self):
        basis = brauer_weyl(4)
        eye = np.eye(2)
        assert np.array_equal(basis.generators[0], np.kron(SIGMA1, eye))
        assert np.array_equal(basis.generators[1], np.kron(SIGMA3, SIGMA1))
        assert np.array_equal(basis.generators[2], np.kron(SIGMA2, eye))
        assert np.array_equal(basis.generators[3], np.kron(SIGMA3, SIGMA2))

    def test_odd_rank_doubles_with_sign_flipped_chain(self):
        basis = brauer_weyl(3)
        assert basis.is_odd
        assert basis.dim == 4
        for even_gen, doubled in zip(brauer_weyl(2).generators, basis.generators):
            assert np.array_equal(doubled[:2, :2], even_gen)
            assert np.array_equal(doubled[2:, 2:], even_gen)
        last = basis.generators[2]
        assert np.array_equal(last[:2, :2], SIGMA3)
        assert np.array_equal(last[2:, 2:], -SIGMA3)

    def test_generator_count_and_dimension(self):
        for n in range(1, 21):
            basis = brauer_weyl(n)
            assert len(basis.generators) == n
            assert basis.dim == 2 ** ((n + 1) // 2)

    def test_rank_out_of_range(self):
        with pytest.raises(ValueError):
            brauer_weyl(0)
        with pytest.raises(ValueError):
            brauer_weyl(21)


class TestVerifyClifford:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_exact_anticommutation_and_full_span(self, n):
        report = verify_clifford(brauer_weyl(n))
        assert report["ok"]
        assert report["failures"] == []
        # Subset products span the whole algebra: 4^m even, twice that odd.
        assert report["span_dim"] == 2 ** n

    @pytest.mark.parametrize("n", [11, 12, 14])
    def test_larger_ranks_skip_span_but_check_anticommutation(self, n):
        report = verify_clifford(brauer_weyl(n))
        assert report["anticommutation_ok"]
        assert report["span_dim"] is None
        assert report["ok"]

    def test_rank_three_summands_both_pass(self):
        report = verify_clifford(brauer_weyl(3))
        assert report["ok"]
        assert report["summand_failures"] == ([], [])

    def test_corrupted_generator_names_offending_pairs(self):
        gens = list(brauer_weyl(4).generators)
        gens[2] = gens[2].copy()
        gens[2][0, 0] += 0.5
        report = verify_clifford(CliffordBasis(4, tuple(gens)))
        assert not report["ok"]
        assert report["failures"] == [(1, 3), (2, 3), (3, 3), (3, 4)]


class TestOddDirectSum:
    @pytest.mark.parametrize("m", range(1, 6))
    def test_full_structure_report(self, m):
        report = odd_direct_sum(m)
        assert report["ok"]
        assert report["summand_failures"] == ([], [])
        assert report["span_dim"] == 2 * 4 ** m
        assert report["volume_central"]

    @pytest.mark.parametrize("m", range(1, 6))
    def test_volume_scalars_are_opposite_fourth_roots(self, m):
        scal_a, scal_b = odd_direct_sum(m)["volume_scalars"]
        expected = 1j if m % 2 else 1.0 + 0j
        assert scal_a == expected
        assert scal_b == -expected

    def test_summand_projection_multiplicative(self):
        report = odd_direct_sum(3)
        assert report["projection_homomorphism_residual"] <= 1e-12

    def test_cap(self):
        with pytest.raises(ValueError):
            odd_direct_sum(6)
        with pytest.raises(ValueError):
            odd_direct_sum(0)


class TestSchurTranspositions:
    def test_first_matrix_is_negated_first_generator(self):
        gens = schur_transpositions(3)
        family = brauer_weyl(6).generators
        assert np.array_equal(gens.t[0], -family[0])

    def test_second_matrix_mixes_first_two_generators(self):
        gens = schur_transpositions(3)
        family = brauer_weyl(6).generators
        expected = 0.5 * family[0] - (np.sqrt(3) / 2) * family[1]
        assert np.max(np.abs(gens.t[1] - expected)) == 0.0

    @pytest.mark.parametrize("m", range(4, 9))
    def test_realized_signs_stable(self, m):
        signs = schur_transpositions(m).realized_signs
        assert signs["square"] == 1
        assert signs["braid"] == 1
        assert signs["far_commute"] == -1

    @pytest.mark.parametrize("m", [2, 5, 8])
    def test_unitary_and_traceless(self, m):
        for t in schur_transpositions(m).t:
            dim = t.shape[0]
            assert np.max(np.abs(t @ t.conj().T - np.eye(dim))) <= 1e-15
            assert np.trace(t) == 0.0

    def test_no_far_pairs_below_three(self):
        assert schur_transpositions(2).realized_signs["far_commute"] is None

    def test_size_bounds(self):
        with pytest.raises(ValueError):
            schur_transpositions(1)
        with pytest.raises(ValueError):
            schur_transpositions(11)


class TestTnRelations:
    def test_report_fields(self):
        report = verify_tn_relations(schur_transpositions(4))
        assert report["ok"]
        assert report["failures"] == []
        assert (report["s1"], report["s2"], report["s3"]) == (1, 1, -1)

    def test_perturbed_matrix_fails_scalar_checks(self):
        gens = schur_transpositions(4)
        ts = list(gens.t)
        ts[1] = ts[1] + 0.001 * np.eye(ts[1].shape[0])
        report = verify_tn_relations(SchurCoverGens(4, tuple(ts)))
        assert not report["ok"]
        assert "square not scalar" in report["failures"]


class TestPermutationShadow:
    @pytest.mark.parametrize(
        "m,perms", [(2, 6), (3, 20), (4, 49), (5, 98)]
    )
    def test_words_agree_up_to_sign(self, m, perms):
        report = transposition_homomorphism_report(m, max_word_len=4)
        assert report["ok"]
        assert report["distinct_permutations"] == perms
        assert report["max_sign_mismatch"] <= 1e-12
