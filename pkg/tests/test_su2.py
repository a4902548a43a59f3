"""Tests for single-spin rotation/boost functions and coupling coefficients."""

import math

import numpy as np
import pytest
from scipy.linalg import expm

from helirep.halfint import half, lrange, mrange
from helirep.kernels import PoleError
from helirep.su2 import cg_su2, cg_su2_hyp, jac_p, sph_p, wigner_d


def standard_spin_matrices(l):
    """Hermitian J1, J2, J3 on the m-descending basis (oracle helper)."""
    ms = [float(m) for m in mrange(l)]
    dim = len(ms)
    jp = np.zeros((dim, dim), dtype=complex)
    for i in range(1, dim):
        m = ms[i]
        jp[i - 1, i] = math.sqrt((float(l) - m) * (float(l) + m + 1.0))
    j1 = 0.5 * (jp + jp.conj().T)
    j2 = -0.5j * (jp - jp.conj().T)
    j3 = np.diag(ms).astype(complex)
    return j1, j2, j3


class TestRotationFunction:
    def test_half_spin_closed_forms(self):
        th = 0.7
        assert sph_p(half(1), half(1), half(1), th) == pytest.approx(
            math.cos(th / 2), abs=1e-15
        )
        assert sph_p(half(1), half(1), half(-1), th) == pytest.approx(
            1j * math.sin(th / 2), abs=1e-15
        )

    def test_wigner_closed_forms_spin_one(self):
        th = 0.7
        assert wigner_d(half(2), half(2), half(2), th) == pytest.approx(
            (1 + math.cos(th)) / 2, abs=1e-14
        )
        assert wigner_d(half(2), half(2), half(0), th) == pytest.approx(
            -math.sin(th) / math.sqrt(2), abs=1e-14
        )
        assert wigner_d(half(2), half(0), half(0), th) == pytest.approx(
            math.cos(th), abs=1e-14
        )

    def test_against_exponential_oracle(self):
        rng = np.random.default_rng(11)
        for twice_l in range(1, 7):
            l = half(twice_l)
            _, j2, _ = standard_spin_matrices(l)
            for th in rng.uniform(0.0, math.pi, size=4):
                d = expm(-1j * th * j2)
                phase = np.diag(
                    [np.exp(1j * math.pi * float(m) / 2) for m in mrange(l)]
                )
                # The rotation function differs from the real d-matrix
                # by the i^(n-m) phase dressing.
                z = phase.conj() @ d @ phase
                for i, m in enumerate(mrange(l)):
                    for j, n in enumerate(mrange(l)):
                        assert sph_p(l, m, n, th) == pytest.approx(
                            z[i, j], abs=2e-13
                        )

    def test_symmetric_in_projections(self):
        for twice_l in (2, 3, 5):
            l = half(twice_l)
            for m in mrange(l):
                for n in mrange(l):
                    a = sph_p(l, m, n, 1.1)
                    b = sph_p(l, n, m, 1.1)
                    assert a == pytest.approx(b, abs=1e-14)

    def test_obtuse_angles_via_reflection(self):
        # Values past pi/2 route through the reflection identity; the
        # exponential oracle doesn't care, so compare directly.
        l = half(3)
        _, j2, _ = standard_spin_matrices(l)
        for th in (2.0, 2.9, math.pi):
            d = expm(-1j * th * j2)
            phase = np.diag(
                [np.exp(1j * math.pi * float(m) / 2) for m in mrange(l)]
            )
            z = phase.conj() @ d @ phase
            for i, m in enumerate(mrange(l)):
                for j, n in enumerate(mrange(l)):
                    assert sph_p(l, m, n, th) == pytest.approx(z[i, j], abs=2e-13)

    def test_projection_validation(self):
        with pytest.raises(ValueError):
            sph_p(half(1), half(3), half(1), 0.5)
        with pytest.raises(ValueError):
            sph_p(half(2), half(1), half(0), 0.5)  # l - m not an integer


class TestBoostFunction:
    def test_half_spin_closed_forms(self):
        ta = 0.4
        assert jac_p(half(1), half(1), half(1), ta) == pytest.approx(
            math.cosh(ta / 2), abs=1e-15
        )
        assert jac_p(half(1), half(1), half(-1), ta) == pytest.approx(
            math.sinh(ta / 2), abs=1e-15
        )

    def test_against_exponential_oracle(self):
        rng = np.random.default_rng(12)
        for twice_l in range(1, 7):
            l = half(twice_l)
            j1, _, _ = standard_spin_matrices(l)
            for ta in rng.uniform(-2.0, 2.0, size=4):
                w = expm(ta * j1)
                for i, m in enumerate(mrange(l)):
                    for j, n in enumerate(mrange(l)):
                        assert jac_p(l, m, n, ta) == pytest.approx(
                            w[i, j], abs=1e-12, rel=1e-12
                        )

    def test_symmetric_and_real(self):
        for m in mrange(half(4)):
            for n in mrange(half(4)):
                v = jac_p(half(4), m, n, 0.9)
                assert isinstance(v, float)
                assert v == pytest.approx(jac_p(half(4), n, m, 0.9), abs=1e-14)


class TestCouplingCoefficients:
    def test_textbook_values(self):
        assert cg_su2(half(1), half(1), half(2), half(1), half(1), half(2)) == 1.0
        assert cg_su2(
            half(1), half(1), half(0), half(1), half(-1), half(0)
        ) == pytest.approx(1 / math.sqrt(2), abs=1e-15)
        assert cg_su2(
            half(2), half(1), half(1), half(0), half(1), half(1)
        ) == pytest.approx(-1 / math.sqrt(3), abs=1e-15)

    def test_selection_rules_exact_zero(self):
        # m1 + m2 != m.
        assert cg_su2(half(1), half(1), half(2), half(1), half(-1), half(2)) == 0.0
        # l outside the triangle.
        assert cg_su2(half(1), half(1), half(6), half(1), half(1), half(2)) == 0.0

    def test_orthogonality_small_sweep(self):
        for tl1 in range(0, 5):
            for tl2 in range(0, 5):
                l1, l2 = half(tl1), half(tl2)
                for l in lrange(abs(l1 - l2), l1 + l2):
                    for lp in lrange(abs(l1 - l2), l1 + l2):
                        for m in mrange(min(l, lp)):
                            s = sum(
                                cg_su2(l1, l2, l, m1, m - m1, m)
                                * cg_su2(l1, l2, lp, m1, m - m1, m)
                                for m1 in mrange(l1)
                                if abs(m - m1) <= l2
                                and (l2 - (m - m1)).is_integer
                            )
                            want = 1.0 if l == lp else 0.0
                            assert s == pytest.approx(want, abs=1e-13)

    def test_series_form_constant_ratio_per_triple(self):
        # The alternative series-form coefficient differs from the
        # standard one by the l-dependent factor sqrt(l1 + l2 + l + 1),
        # constant across all projections of a triple.  Poles of the
        # series denominators make some projections unevaluable; those
        # raise and are skipped.
        for tl1 in range(0, 4):
            for tl2 in range(0, 4):
                l1, l2 = half(tl1), half(tl2)
                for l in lrange(abs(l1 - l2), l1 + l2):
                    expected = math.sqrt(float(l1 + l2 + l) + 1.0)
                    for m in mrange(l):
                        for m1 in mrange(l1):
                            m2 = m - m1
                            if abs(m2) > l2 or not (l2 - m2).is_integer:
                                continue
                            base = cg_su2(l1, l2, l, m1, m2, m)
                            if abs(base) < 1e-14:
                                continue
                            try:
                                alt = cg_su2_hyp(l1, l2, l, m1, m2, m)
                            except PoleError:
                                continue
                            assert alt / base == pytest.approx(
                                expected, abs=1e-11
                            )

    def test_series_form_some_projections_pole_out(self):
        hit = 0
        for m in mrange(half(2)):
            for m1 in mrange(half(2)):
                m2 = m - m1
                if abs(m2) > 1:
                    continue
                try:
                    cg_su2_hyp(half(2), half(2), half(2), m1, m2, m)
                except PoleError:
                    hit += 1
        assert hit > 0
