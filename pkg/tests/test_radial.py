"""Tests for the separated radial systems and their diagnostics."""

import numpy as np
import pytest
from scipy.special import j0

from helirep.gelfand_yaglom import (
    CoeffTable,
    RepChain,
    build_system,
    dirac_system,
)
from helirep.halfint import half
from helirep.radial import (
    RadialSolution,
    assemble_rfs,
    bessel_probe,
    convergence_order,
    integrate,
    residual,
)

DIRAC_INIT = np.array([1.0, 0.0, 1j, 0.0])


def dirac_radial(variant="alt", kappa=1.0):
    return assemble_rfs(dirac_system(kappa=kappa), "1/2", "1/2", variant=variant)


class TestAssembly:
    def test_derivative_matrix_is_twice_longitudinal(self):
        system = dirac_system()
        for variant in ("printed", "alt"):
            rs = assemble_rfs(system, "1/2", "1/2", variant=variant)
            assert np.array_equal(rs.plain.deriv, 2 * system.lambda3.data)
            assert np.array_equal(rs.conjugate.deriv, 2 * system.lambda3c.data)

    def test_dirac_inverse_radius_matrix_printed(self):
        rs = dirac_radial("printed")
        expected = np.array(
            [
                [0.0, 0.0, -0.5, -1j],
                [0.0, 0.0, 0.0, 0.5],
                [0.5, 1j, 0.0, 0.0],
                [0.0, -0.5, 0.0, 0.0],
            ]
        )
        assert np.array_equal(rs.plain.inv_r, expected)

    def test_alt_variant_flips_only_the_diagonal_signs(self):
        printed = dirac_radial("printed").plain.inv_r
        alt = dirac_radial("alt").plain.inv_r
        cross = np.abs(printed.imag) > 0
        assert np.array_equal(alt[cross], printed[cross])
        diag = ~cross
        assert np.array_equal(alt[diag], -printed[diag])

    def test_basis_order(self):
        rs = dirac_radial()
        assert [str(x) for x in rs.plain.labels] == [
            "[0](1/2,1/2)",
            "[0](1/2,-1/2)",
            "[1](1/2,1/2)",
            "[1](1/2,-1/2)",
        ]

    def test_extreme_spectator_kills_raising_cross_terms(self):
        # default projection sits at the top of the spectator ladder, so
        # every (m+1)-neighbor coupling carries a vanishing factor
        rs = dirac_radial("printed")
        c = rs.plain.inv_r
        assert c[1, 2] == 0.0 and c[3, 0] == 0.0

    def test_bottom_spectator_kills_lowering_cross_terms(self):
        rs = assemble_rfs(dirac_system(), "1/2", "1/2", mdot="-1/2")
        c = rs.plain.inv_r
        assert c[0, 3] == 0.0 and c[2, 1] == 0.0
        assert c[1, 2] != 0.0 and c[3, 0] != 0.0

    def test_trivial_single_irrep_zero_coefficients(self):
        system = build_system(RepChain([("1/2", "1/2")]), CoeffTable({}, {}), kappa=2.0)
        rs = assemble_rfs(system, 1, 1)
        assert np.all(rs.plain.deriv == 0)
        assert np.all(rs.plain.inv_r == 0)
        assert rs.plain.kappa == 2.0 + 0j

    def test_assembly_linear_in_coefficients(self):
        chain = RepChain([("1/2", "0"), ("0", "1/2")])
        one = CoeffTable({(0, 1, "1/2", "1/2"): 0.3 + 0.1j}, {})
        two = CoeffTable({(0, 1, "1/2", "1/2"): 0.6 + 0.2j}, {})
        sys_one = build_system(chain, one)
        sys_two = build_system(chain, two)
        a = assemble_rfs(sys_one, "1/2", "1/2")
        b = assemble_rfs(sys_two, "1/2", "1/2")
        np.testing.assert_allclose(b.plain.deriv, 2 * a.plain.deriv, atol=1e-15)
        np.testing.assert_allclose(b.plain.inv_r, 2 * a.plain.inv_r, atol=1e-15)

    def test_neighbor_structure(self):
        rng = np.random.default_rng(7)
        chain = RepChain([("1/2", "1"), ("1", "1/2")])
        keys = {}
        for kp in range(2):
            for k in range(2):
                for lp in chain.tower_spins(kp):
                    for l in chain.tower_spins(k):
                        if abs(lp.twice - l.twice) <= 2:
                            keys[(kp, k, lp, l)] = complex(*rng.normal(size=2))
        system = build_system(chain, CoeffTable(keys, keys))
        rs = assemble_rfs(system, "3/2", "3/2", mdot="1/2", m="1/2")
        basis = rs.plain.labels
        coupled = np.abs(rs.plain.deriv) + np.abs(rs.plain.inv_r)
        for i, row in enumerate(basis):
            for j, col in enumerate(basis):
                if coupled[i, j] != 0:
                    assert abs(row.l.twice - col.l.twice) <= 2
                    assert abs(row.m.twice - col.m.twice) <= 2

    def test_ansatz_weight_must_dominate_chain(self):
        system = dirac_system()
        with pytest.raises(ValueError, match="dominate"):
            assemble_rfs(system, 0, "1/2")

    def test_spectator_projection_range(self):
        with pytest.raises(ValueError, match="projection"):
            assemble_rfs(dirac_system(), "1/2", "1/2", mdot="3/2")

    def test_unknown_variant(self):
        with pytest.raises(ValueError, match="variant"):
            assemble_rfs(dirac_system(), "1/2", "1/2", variant="mixed")

    def test_coefficient_outside_chain(self):
        chain = RepChain([("1/2", "0"), ("0", "1/2")])
        bad = CoeffTable({(0, 1, "3/2", "1/2"): 1.0}, {})
        with pytest.raises(ValueError, match="absent"):
            assemble_rfs(build_system(chain, bad), "3/2", "3/2")


class TestIntegrate:
    def test_zero_initial_data_stays_zero(self):
        rs = dirac_radial()
        sol = integrate(rs, 0.5, 60.0, np.zeros(4), 200)
        assert np.max(np.abs(sol.values)) == 0.0
        assert residual(rs, sol) == 0.0

    def test_grid_shape(self):
        rs = dirac_radial()
        sol = integrate(rs, 0.5, 10.0, DIRAC_INIT, 250)
        assert sol.grid.shape == (251,)
        assert sol.values.shape == (251, 4)
        assert sol.grid[0] == 0.5 and sol.grid[-1] == 10.0
        assert sol.sector == "plain" and sol.variant == "alt"

    def test_bounded_oscillation_for_real_kappa(self):
        rs = dirac_radial("alt")
        sol = integrate(rs, 0.5, 60.0, DIRAC_INIT, 4000)
        mags = np.abs(sol.values[:, 0])
        assert mags[-1] < mags[0]
        assert np.all(np.isfinite(sol.values))

    def test_deterministic(self):
        rs = dirac_radial()
        a = integrate(rs, 0.5, 30.0, DIRAC_INIT, 500)
        b = integrate(rs, 0.5, 30.0, DIRAC_INIT, 500)
        assert np.array_equal(a.values, b.values)

    def test_halving_tolerance_barely_moves_endpoint(self):
        rs = dirac_radial()
        a = integrate(rs, 0.5, 60.0, DIRAC_INIT, 1000).values[-1]
        b = integrate(rs, 0.5, 60.0, DIRAC_INIT, 1000, rtol=5e-11).values[-1]
        assert np.max(np.abs(a - b)) / np.max(np.abs(a)) < 1e-7

    def test_singular_derivative_matrix_rejected(self):
        system = build_system(RepChain([("1/2", "1/2")]), CoeffTable({}, {}), kappa=2.0)
        rs = assemble_rfs(system, 1, 1)
        with pytest.raises(ValueError, match="normal form"):
            integrate(rs, 0.5, 2.0, np.zeros(rs.plain.dim), 100)

    def test_step_underflow_reports_last_radius(self):
        # a mass scale beyond floating-point resolution forces the
        # required step below the grid spacing of the radius itself
        rs = dirac_radial(kappa=1e20)
        with pytest.raises(RuntimeError, match="stalled at r ="):
            integrate(rs, 0.5, 60.0, DIRAC_INIT, 100)

    def test_input_validation(self):
        rs = dirac_radial()
        with pytest.raises(ValueError, match="r0 > 0"):
            integrate(rs, 0.0, 1.0, DIRAC_INIT, 100)
        with pytest.raises(ValueError, match="r1 > r0"):
            integrate(rs, 2.0, 1.0, DIRAC_INIT, 100)
        with pytest.raises(ValueError, match="100 steps"):
            integrate(rs, 0.5, 1.0, DIRAC_INIT, 50)
        with pytest.raises(ValueError, match="components"):
            integrate(rs, 0.5, 1.0, np.ones(3), 100)


class TestResidual:
    def test_dirac_residual_small_both_variants(self):
        for variant, bound in (("printed", 5e-8), ("alt", 1e-7)):
            rs = dirac_radial(variant)
            sol = integrate(rs, 0.5, 60.0, DIRAC_INIT, 10000)
            assert residual(rs, sol) < bound

    def test_corrupted_sample_spikes(self):
        rs = dirac_radial()
        sol = integrate(rs, 0.5, 60.0, DIRAC_INIT, 2000)
        clean = residual(rs, sol)
        values = sol.values.copy()
        values[1000, 0] += 1e-3
        dirty = RadialSolution(sol.grid, values, sol.labels, sol.sector, sol.variant)
        assert residual(rs, dirty) > 1e3 * clean

    def test_nonuniform_grid_rejected(self):
        rs = dirac_radial()
        sol = integrate(rs, 0.5, 10.0, DIRAC_INIT, 200)
        warped = RadialSolution(
            sol.grid**1.01, sol.values, sol.labels, sol.sector, sol.variant
        )
        with pytest.raises(ValueError, match="uniform"):
            residual(rs, warped)


class TestConvergenceOrder:
    def test_dirac_order_at_least_four(self):
        rs = dirac_radial()
        report = convergence_order(rs, 0.5, 10.0, DIRAC_INIT, base_steps=200)
        assert report["order"] >= 4.0
        assert report["order"] < 7.0
        assert report["fine_diff"] < report["coarse_diff"]


class TestBesselProbe:
    def test_dirac_alt_variant_passes(self):
        rs = dirac_radial("alt")
        sol = integrate(rs, 0.5, 60.0, DIRAC_INIT, 10000)
        report = bessel_probe(sol)
        assert report["verdict"] == "pass"
        assert abs(report["envelope_exponent"] + 0.5) < 1e-6
        assert abs(report["wavelength_mean"] - 2 * np.pi) < 1e-6
        assert report["wavelength_drift"] < 1e-8
        assert report["periods"] == 9.0

    def test_dirac_printed_variant_grows(self):
        rs = dirac_radial("printed")
        sol = integrate(rs, 0.5, 60.0, DIRAC_INIT, 10000)
        report = bessel_probe(sol)
        assert report["verdict"] == "fail"
        assert abs(report["envelope_exponent"] - 0.5) < 1e-6

    def test_bessel_j0_oracle_passes(self):
        r = np.linspace(0.5, 60.0, 4000)
        sol = RadialSolution(r, j0(r).astype(complex)[:, None], ("j0",), "plain", "printed")
        report = bessel_probe(sol)
        assert report["verdict"] == "pass"
        assert abs(report["envelope_exponent"] + 0.5) < 0.01

    def test_pure_exponential_decay_fails(self):
        r = np.linspace(0.5, 60.0, 4000)
        sol = RadialSolution(
            r, np.exp(-0.3 * r).astype(complex)[:, None], ("e",), "plain", "printed"
        )
        report = bessel_probe(sol)
        assert report["verdict"] == "fail"
        assert report["detail"] == "no oscillation detected"

    def test_wrong_envelope_power_fails(self):
        r = np.linspace(0.5, 60.0, 4000)
        sol = RadialSolution(
            r, (np.cos(r) / r).astype(complex)[:, None], ("c",), "plain", "printed"
        )
        report = bessel_probe(sol)
        assert report["verdict"] == "fail"
        assert report["envelope_exponent"] < -0.9

    def test_short_range_inconclusive(self):
        r = np.linspace(0.5, 6.0, 300)
        sol = RadialSolution(
            r,
            (np.cos(r) / np.sqrt(r)).astype(complex)[:, None],
            ("s",),
            "plain",
            "printed",
        )
        report = bessel_probe(sol)
        assert report["verdict"] == "inconclusive"
        assert report["periods"] < 3


class TestConjugateSector:
    def test_dirac_conjugate_mirrors_plain(self):
        rs = dirac_radial("alt")
        sol = integrate(rs, 0.5, 60.0, DIRAC_INIT, 10000, sector="conjugate")
        assert residual(rs, sol) < 1e-7
        report = bessel_probe(sol)
        assert report["sector"] == "conjugate"
        assert report["verdict"] == "pass"

    def test_independent_mass_parameters(self):
        system = dirac_system(kappa=1.0, kappa_dot=2.0)
        rs = assemble_rfs(system, "1/2", "1/2", variant="alt")
        assert rs.plain.kappa == 1.0 + 0j
        assert rs.conjugate.kappa == 2.0 + 0j
        sol = integrate(rs, 0.5, 60.0, DIRAC_INIT, 4000, sector="conjugate")
        report = bessel_probe(sol)
        # twice the mass, half the wavelength
        assert abs(report["wavelength_mean"] - np.pi) < 1e-6
