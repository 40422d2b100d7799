"""Metric, cross product, causal classification, and the rotation families."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from minkrev.errors import MixedCausalCharacter
from minkrev.lorentz import CausalClass
from minkrev.minkowski import (
    AxisType,
    MinkVec3,
    classify,
    cross,
    inner,
    rotation,
    tangent_character,
)

vec = st.tuples(
    st.floats(min_value=-10, max_value=10, allow_nan=False),
    st.floats(min_value=-10, max_value=10, allow_nan=False),
    st.floats(min_value=-10, max_value=10, allow_nan=False),
)
angle = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


class TestInner:
    def test_signature(self):
        assert inner([1, 0, 0], [1, 0, 0]) == 1
        assert inner([0, 0, 1], [0, 0, 1]) == -1
        assert inner([0, 1, 1], [0, 1, 1]) == 0

    def test_minkvec_wrapper(self):
        u = MinkVec3(1.0, 2.0, 3.0)
        assert u.inner(u) == 1 + 4 - 9


class TestCross:
    def test_basis_products(self):
        assert np.array_equal(cross([1, 0, 0], [0, 1, 0]), [0, 0, -1])
        assert np.array_equal(cross([0, 1, 0], [0, 0, 1]), [1, 0, 0])

    def test_antisymmetry(self):
        u = np.array([1.0, 2.0, 3.0])
        assert np.array_equal(cross(u, u), [0, 0, 0])

    @given(vec, vec)
    def test_orthogonal_to_both_arguments(self, u, v):
        u, v = np.array(u), np.array(v)
        w = cross(u, v)
        bound = 1e-12 * max(1.0, np.linalg.norm(u) * np.linalg.norm(v))
        assert abs(inner(w, u)) <= bound
        assert abs(inner(w, v)) <= bound


class TestClassify:
    @pytest.mark.parametrize(
        "v, expected",
        [
            ([1, 0, 0], CausalClass.SPACELIKE),
            ([0, 0, 1], CausalClass.TIMELIKE),
            ([0, 1, 1], CausalClass.LIGHTLIKE),
            ([0, 0, 0], CausalClass.SPACELIKE),
        ],
    )
    def test_examples(self, v, expected):
        assert classify(v) is expected
        assert MinkVec3(*map(float, v)).classify() is expected


class TestRotations:
    def test_quarter_turn(self):
        r = rotation(AxisType.TIMELIKE, np.pi / 2)
        assert np.allclose(r @ [1, 0, 0], [0, 1, 0], atol=1e-15)

    def test_matrices_as_printed(self):
        t = 0.7
        assert np.array_equal(
            rotation(AxisType.TIMELIKE, t),
            [[np.cos(t), -np.sin(t), 0], [np.sin(t), np.cos(t), 0], [0, 0, 1]],
        )
        assert np.array_equal(
            rotation(AxisType.SPACELIKE, t),
            [[1, 0, 0], [0, np.cosh(t), np.sinh(t)], [0, np.sinh(t), np.cosh(t)]],
        )
        assert np.array_equal(
            rotation(AxisType.LIGHTLIKE, t),
            [[1, t, -t], [-t, 1 - t * t / 2, t * t / 2], [-t, -t * t / 2, 1 + t * t / 2]],
        )

    @pytest.mark.parametrize("axis", list(AxisType))
    def test_axis_fixed_pointwise(self, axis):
        for t in np.linspace(-2.5, 2.5, 11):
            moved = rotation(axis, t) @ axis.direction
            tol = 1e-14 if axis is AxisType.LIGHTLIKE else 0.0
            assert np.abs(moved - axis.direction).max() <= tol

    @pytest.mark.parametrize("axis", list(AxisType))
    @given(u=vec, v=vec, t=angle)
    def test_isometry(self, axis, u, v, t):
        r = rotation(axis, t)
        ru, rv = r @ np.array(u), r @ np.array(v)
        before = inner(u, v)
        after = inner(ru, rv)
        # The roundoff scale is the magnitude of the rotated vectors (the
        # inner product itself may cancel to zero).
        scale = max(1.0, float(np.linalg.norm(ru) * np.linalg.norm(rv)))
        assert abs(after - before) <= 1e-12 * scale

    @pytest.mark.parametrize("axis", list(AxisType))
    @given(t1=angle, t2=angle)
    def test_one_parameter_group(self, axis, t1, t2):
        lhs = rotation(axis, t1) @ rotation(axis, t2)
        rhs = rotation(axis, t1 + t2)
        assert np.abs(lhs - rhs).max() <= 1e-12 * max(1.0, np.abs(rhs).max())


class TestTangentCharacter:
    def test_spacelike_line(self):
        s = np.linspace(0, 1, 51)
        pts = np.column_stack([s, 0 * s, 0 * s])
        assert tangent_character(pts, s[1] - s[0]) == 1

    def test_timelike_line(self):
        s = np.linspace(0, 1, 51)
        pts = np.column_stack([0 * s, 0 * s, s])
        assert tangent_character(pts, s[1] - s[0]) == -1

    def test_lightlike_rejected(self):
        s = np.linspace(0, 1, 51)
        pts = np.column_stack([s, 0 * s, s])
        with pytest.raises(MixedCausalCharacter):
            tangent_character(pts, s[1] - s[0])

    def test_sign_change_rejected(self):
        # Tangent turns from spacelike to timelike across s = 0.
        s = np.linspace(-1, 1, 201)
        pts = np.column_stack([s, 0 * s, s * s])
        with pytest.raises(MixedCausalCharacter):
            tangent_character(pts, s[1] - s[0])
