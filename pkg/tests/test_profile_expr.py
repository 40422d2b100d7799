"""Grammar, evaluation, error positions, and fuzz safety of the profile parser."""

import math

import pytest
from hypothesis import given, strategies as st

from minkrev.profile_expr import (
    BinOp,
    Call,
    DomainError,
    EmptyInput,
    ExpressionError,
    Neg,
    Num,
    TrailingTokens,
    UnbalancedParens,
    UnknownIdentifier,
    Var,
    parse_profile,
)


class TestParseAndEval:
    def test_basic_profile(self):
        p = parse_profile("0.3 + 0.1*sin(s)", "s")
        assert p(0.0) == pytest.approx(0.3)
        assert p(1.0) == pytest.approx(0.3 + 0.1 * math.sin(1.0))

    def test_power_right_associative(self):
        assert parse_profile("2^3^2", "s")(0.0) == 512.0

    def test_unary_minus_binds_looser_than_power(self):
        assert parse_profile("-2^2", "s")(0.0) == -4.0

    def test_negative_exponent(self):
        assert parse_profile("2^-3", "s")(0.0) == 0.125

    def test_square(self):
        assert parse_profile("s^2", "s")(3.0) == 9.0

    def test_composed(self):
        assert parse_profile("exp(-s)*cos(2*s)", "s")(0.0) == 1.0

    def test_constants(self):
        assert parse_profile("pi", "s")(0.0) == math.pi
        assert parse_profile("e", "s")(0.0) == math.e

    def test_other_variable_name(self):
        assert parse_profile("0.2 + 0.1*u", "u")(2.0) == pytest.approx(0.4)

    def test_no_implicit_multiplication(self):
        with pytest.raises(ExpressionError):
            parse_profile("2s", "s")

    def test_deterministic(self):
        p = parse_profile("sin(s)*exp(s) - s^3/7", "s")
        vals = {p(0.37) for _ in range(10)}
        assert len(vals) == 1


class TestErrors:
    def test_unbalanced_at_offset_six(self):
        with pytest.raises(UnbalancedParens) as exc:
            parse_profile("cosh(u", "u")
        assert exc.value.offset == 6

    def test_unknown_identifier_offset(self):
        with pytest.raises(UnknownIdentifier) as exc:
            parse_profile("2 + foo(s)", "s")
        assert exc.value.offset == 4

    def test_unknown_variable(self):
        with pytest.raises(UnknownIdentifier):
            parse_profile("t + 1", "s")

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            parse_profile("", "s")
        with pytest.raises(EmptyInput):
            parse_profile("   ", "s")

    def test_trailing_tokens(self):
        with pytest.raises(TrailingTokens) as exc:
            parse_profile("1 + 2 3", "s")
        assert exc.value.offset == 6

    def test_sqrt_of_negative(self):
        p = parse_profile("sqrt(s)", "s")
        assert p(4.0) == 2.0
        with pytest.raises(DomainError):
            p(-1.0)

    def test_log_of_nonpositive(self):
        p = parse_profile("log(s)", "s")
        with pytest.raises(DomainError):
            p(0.0)

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            parse_profile("1/s", "s")(0.0)


class TestRoundTrip:
    CASES = [
        "0.3 + 0.1*sin(s)",
        "2^3^2",
        "-2^2",
        "exp(-s)*cos(2*s)",
        "1 - 2 - 3",
        "s/2/4",
        "sqrt(abs(s - pi))",
        "(s + 1)*(s - 1)",
        "tanh(s)^2 + 1e-3",
    ]

    @pytest.mark.parametrize("src", CASES)
    def test_pretty_reparses_identically(self, src):
        p = parse_profile(src, "s")
        again = parse_profile(p.pretty(), "s")
        assert again.ast == p.ast

    def test_pretty_preserves_structure_nodes(self):
        p = parse_profile("-sin(s)^2", "s")
        assert isinstance(p.ast, Neg)
        assert isinstance(p.ast.operand, BinOp)
        assert p.ast.operand.op == "^"
        assert isinstance(p.ast.operand.left, Call)
        assert p.ast.operand.right == Num(2.0)
        assert p.ast.operand.left.arg == Var()


class TestFuzz:
    @given(st.text(max_size=40))
    def test_never_crashes(self, text):
        # Every input yields an AST or a positioned error.
        try:
            parse_profile(text, "s")
        except ExpressionError as exc:
            assert 0 <= exc.offset <= len(text)

    @given(st.text(alphabet="0123456789+-*/^()se. ", max_size=30))
    def test_never_crashes_arith_alphabet(self, text):
        try:
            parse_profile(text, "s")
        except ExpressionError as exc:
            assert 0 <= exc.offset <= len(text)
