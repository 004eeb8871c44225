"""Linear analysis: Jacobian, eigenvalues, root location, classification."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pzdyn import (
    Classification,
    DegenerateInput,
    FixedPoint,
    FixedPointLabel,
    Mat2,
    Params,
    RootLocation,
    StabilityKind,
    State,
    classify_fixed_point,
    e2_char_coeffs,
    eigen2,
    fixed_points,
    jacobian_map,
    jury_classify,
    quad_roots,
)

from _oracles import coarse_location, quad_root_moduli


class TestJacobian:
    def test_origin(self):
        m = jacobian_map(State(0.0, 0.0), Params(0.3, 0.7))
        assert m == Mat2(2.0, 0.0, 0.0, 0.7)

    def test_prey_only(self):
        m = jacobian_map(State(1.0, 0.0), Params(0.4, 0.9))
        assert m == Mat2(0.0, -1.0, 0.0, 0.9 + 1.0 - 0.4)

    def test_coexistence(self):
        m = jacobian_map(State(1 / 3, 2 / 3), Params(0.5, 1.5))
        assert m.a11 == pytest.approx(2 / 3, abs=1e-15)
        assert m.a12 == pytest.approx(-1 / 3, abs=1e-15)
        assert m.a21 == pytest.approx(1.0, abs=1e-15)
        assert m.a22 == pytest.approx(1.0, abs=1e-15)


class TestEigen2:
    def test_diagonal(self):
        pair = eigen2(Mat2(2.0, 0.0, 0.0, 0.7))
        assert pair.lambda1 == pytest.approx(0.7, abs=1e-15)
        assert pair.lambda2 == pytest.approx(2.0, abs=1e-15)
        assert pair.lambda1.imag == 0.0 and pair.lambda2.imag == 0.0

    def test_critical_multipliers(self):
        pair = eigen2(Mat2(2 / 3, -1 / 3, 1.0, 1.0))
        expected = complex(5.0, -math.sqrt(11.0)) / 6.0
        assert abs(pair.lambda1 - expected) < 1e-15
        assert abs(pair.lambda2 - expected.conjugate()) < 1e-15

    def test_quarter_turn(self):
        pair = eigen2(Mat2(0.0, -1.0, 1.0, 0.0))
        assert pair.lambda1 == -1j and pair.lambda2 == 1j

    @given(
        a=st.floats(-4, 4), b=st.floats(-4, 4), c=st.floats(-4, 4), d=st.floats(-4, 4)
    )
    def test_ordering_and_det(self, a, b, c, d):
        m = Mat2(a, b, c, d)
        pair = eigen2(m)
        if pair.lambda1.imag != 0.0:
            assert pair.lambda1.imag < 0
            assert pair.lambda2 == pair.lambda1.conjugate()
        else:
            assert pair.lambda1.real <= pair.lambda2.real
        det = a * d - b * c
        assert abs(pair.lambda1 * pair.lambda2 - det) < 1e-9 * (1 + abs(det))


# quadratic polynomials placed to land in each location case
JURY_CASES = [
    (0.0, 0.0, RootLocation.BOTH_INSIDE),
    (0.5, -0.5, RootLocation.SINGLE_MINUS_ONE),  # roots -1, 0.5
    (1.5, -1.0, RootLocation.INSIDE_OUTSIDE),  # roots 0.5, -2
    (0.0, 2.0, RootLocation.BOTH_OUTSIDE),
    (-5.0 / 3.0, 1.0, RootLocation.CONJUGATE_ON_CIRCLE),
    (2.0, 1.0, RootLocation.DOUBLE_MINUS_ONE),
    (-1.5, 0.5, RootLocation.ROOT_AT_ONE_OTHER_INSIDE),  # roots 1, 0.5
    (0.0, -1.0, RootLocation.ROOT_AT_ONE_OTHER_ON_CIRCLE),  # roots 1, -1
    (-2.0, 1.0, RootLocation.ROOT_AT_ONE_OTHER_ON_CIRCLE),  # double root 1
    (-4.0, 3.0, RootLocation.ROOT_AT_ONE_OTHER_OUTSIDE),  # roots 1, 3
    (0.0, -4.0, RootLocation.RIGHT_OUTSIDE_LEFT_OUTSIDE),  # roots 2, -2
    (-1.0, -2.0, RootLocation.RIGHT_OUTSIDE_AT_MINUS_ONE),  # roots 2, -1
    (-2.5, 1.0, RootLocation.RIGHT_OUTSIDE_OTHER_INSIDE),  # roots 2, 0.5
]


class TestJuryClassify:
    @pytest.mark.parametrize("B,C,expected", JURY_CASES)
    def test_case_table(self, B, C, expected):
        assert jury_classify(B, C) is expected

    def test_agrees_with_root_oracle(self):
        # random coefficients, boundary band excluded, against direct roots
        rng = np.random.default_rng(20240817)
        B = rng.uniform(-4.0, 4.0, 100_000)
        C = rng.uniform(-4.0, 4.0, 100_000)
        m1, m2 = quad_root_moduli(B, C)
        keep = (np.abs(m1 - 1.0) >= 1e-9) & (np.abs(m2 - 1.0) >= 1e-9)
        coarse_by_case = {
            RootLocation.BOTH_INSIDE: "inside",
            RootLocation.BOTH_OUTSIDE: "outside",
            RootLocation.RIGHT_OUTSIDE_LEFT_OUTSIDE: "outside",
            RootLocation.INSIDE_OUTSIDE: "mixed",
            RootLocation.RIGHT_OUTSIDE_OTHER_INSIDE: "mixed",
        }
        checked = 0
        for b, c, u1, u2 in zip(B[keep], C[keep], m1[keep], m2[keep]):
            case = jury_classify(b, c)
            assert coarse_by_case[case] == coarse_location(u1, u2), (b, c)
            checked += 1
        assert checked > 90_000


class TestCoexistenceCharPoly:
    def test_critical_coefficients(self):
        B, C = e2_char_coeffs(Params(0.5, 1.5))
        assert B == pytest.approx(-5.0 / 3.0, abs=1e-15)
        assert C == 1.0

    def test_endpoint_values_positive_on_grid(self):
        # F(1) > 0 and F(-1) > 0 whenever the coexistence point exists
        rs = np.linspace(0.005, 1.0, 200)
        for r in rs:
            gs = np.linspace(r, r + 2.0, 201)[1:]
            B = -(2.0 - r / gs)
            C = (gs - r) * (1.0 + r) / gs
            assert np.all(1.0 + B + C > 0.0)
            assert np.all(1.0 - B + C > 0.0)

    def test_modulus_product_matches_det(self):
        for r, g in [(0.3, 0.9), (0.5, 1.2), (0.9, 2.3), (0.1, 0.15)]:
            p = Params(r, g)
            B, C = e2_char_coeffs(p)
            pair = quad_roots(B, C)
            assert abs(abs(pair.lambda1) * abs(pair.lambda2) - C) < 1e-10


class TestClassifyFixedPoint:
    def classify(self, label, p):
        fps = {fp.label: fp for fp in fixed_points(p)}
        return classify_fixed_point(fps[label], p)

    def test_origin_saddle(self):
        cls = self.classify(FixedPointLabel.E0, Params(0.3, 1.0))
        assert cls.kind is StabilityKind.SADDLE

    def test_origin_boundaries(self):
        assert (
            self.classify(FixedPointLabel.E0, Params(2.0, 1.0)).kind
            is StabilityKind.NONHYPERBOLIC
        )
        assert (
            self.classify(FixedPointLabel.E0, Params(2.5, 1.0)).kind
            is StabilityKind.REPELLING
        )

    def test_prey_only_attractive(self):
        cls = self.classify(FixedPointLabel.E1, Params(0.3, 0.25))
        assert cls.kind is StabilityKind.ATTRACTIVE

    def test_prey_only_boundaries(self):
        assert (
            self.classify(FixedPointLabel.E1, Params(0.5, 0.5)).kind
            is StabilityKind.NONHYPERBOLIC
        )
        # gamma = r - 2 puts the second multiplier at -1
        p = Params(2.5, 0.5)
        assert self.classify(FixedPointLabel.E1, p).kind is StabilityKind.NONHYPERBOLIC
        assert self.classify(FixedPointLabel.E1, Params(0.3, 0.9)).kind is StabilityKind.SADDLE

    def test_coexistence_nonhyperbolic_at_critical(self):
        cls = self.classify(FixedPointLabel.E2, Params(0.5, 1.5))
        assert cls.kind is StabilityKind.NONHYPERBOLIC

    def test_coexistence_attractive(self):
        cls = self.classify(FixedPointLabel.E2, Params(0.3, 0.9))
        assert cls.kind is StabilityKind.ATTRACTIVE

    def test_coexistence_repelling(self):
        cls = self.classify(FixedPointLabel.E2, Params(0.3, 1.4))
        assert cls.kind is StabilityKind.REPELLING

    def test_degenerate_input(self):
        fp = FixedPoint(FixedPointLabel.E2, State(1.0, 0.0))
        with pytest.raises(DegenerateInput):
            classify_fixed_point(fp, Params(0.5, 0.4))

    def test_attractive_iff_constant_term_below_one(self):
        # coexistence verdict tracks the constant term of the
        # characteristic polynomial, away from a guard band around 1
        rs = np.linspace(0.005, 1.0, 200)
        for r in rs:
            p_grid = [Params(r, g) for g in np.linspace(r + 1e-3, r + 2.0, 200)]
            for p in p_grid:
                _, C = e2_char_coeffs(p)
                if abs(C - 1.0) <= 2e-9:
                    continue
                kind = self.classify(FixedPointLabel.E2, p).kind
                if C < 1.0:
                    assert kind is StabilityKind.ATTRACTIVE
                else:
                    assert kind is StabilityKind.REPELLING

    def test_verdict_consistent_with_moduli(self):
        for r, g in [(0.3, 0.9), (0.5, 1.5), (0.3, 1.4), (2.5, 0.5), (0.3, 0.25)]:
            p = Params(r, g)
            for fp in fixed_points(p):
                cls = classify_fixed_point(fp, p)
                m1, m2 = cls.moduli
                assert m1 == abs(cls.evidence.lambda1)
                assert m2 == abs(cls.evidence.lambda2)
