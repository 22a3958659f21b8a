from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from metricdeform.exactfield import (ONE, ZERO, Matrix, ParameterError, ParseError, S, det, kernel_basis,
                                     parse_scalar, rank, rref, solve_linear, substitute)


def test_literals():
    assert parse_scalar("1/2") == S(Fraction(1, 2))
    mi = parse_scalar("-I")
    assert mi * mi == S(-1)


def test_rational_function_normalizes():
    f = parse_scalar("(2*lambda-1)/(lambda)")
    assert substitute(f, {"lambda": S("1/2")}) == ZERO
    assert substitute(f, {"lambda": S(1)}) == ONE
    # same function written differently
    assert f == parse_scalar("2 - 1/lambda")


def test_substitute():
    assert substitute(parse_scalar("lambda"), {"lambda": S("1/2")}) == S("1/2")
    assert substitute(parse_scalar("1/(1+a1*t)"), {"a1": ONE, "t": ONE}) == S("1/2")
    assert substitute(parse_scalar("t"), {"t": parse_scalar("s^2")}) == parse_scalar("s*s")


def test_substitute_errors():
    with pytest.raises(ParameterError):
        substitute(parse_scalar("t"), {"q": ONE})
    with pytest.raises(ZeroDivisionError):
        substitute(parse_scalar("1/(t-1)"), {"t": ONE})


@pytest.mark.parametrize("bad", ["1/", "e1", "2**", "(1+t", "x1"])
def test_parse_errors(bad):
    with pytest.raises((ParseError, ParameterError)):
        parse_scalar(bad)


def test_rref_examples():
    I3 = Matrix.identity(3)
    R, piv, r = rref(I3)
    assert R == I3 and r == 3
    R, piv, r = rref(Matrix([[1, 2], [2, 4]]))
    assert R == Matrix([[1, 2], [0, 0]]) and r == 1
    M = Matrix([[parse_scalar("lambda"), 1], [1, parse_scalar("lambda")]])
    assert rank(M) == 2
    assert rank(M.substitute({"lambda": ONE})) == 1
    assert det(M) == parse_scalar("lambda^2 - 1")


def test_kernel_examples():
    assert len(kernel_basis(Matrix.zeros(2, 2))) == 2
    assert kernel_basis(Matrix.identity(3)) == []
    (v,) = kernel_basis(Matrix([[1, 1, 0], [0, 0, 1]]))
    assert v[0] == -v[1] and v[0] and not v[2]


def test_solve_examples():
    x, _ = solve_linear(Matrix.identity(2), [S(3), S("I")])
    assert x == [S(3), S("I")]
    x, ker = solve_linear(Matrix([[1, 1]]), [S(2)])
    assert x == [S(2), ZERO]
    assert len(ker) == 1 and ker[0][0] == -ker[0][1]
    x, _ = solve_linear(Matrix([[0]]), [ONE])
    assert x is None


small = st.integers(-3, 3)


@st.composite
def matrices(draw, max_dim=4):
    n = draw(st.integers(1, max_dim))
    m = draw(st.integers(1, max_dim))
    rows = [[draw(small) + draw(small) * S("I") for _ in range(m)] for _ in range(n)]
    return Matrix(rows, m)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(matrices())
def test_rank_nullity(M):
    ker = kernel_basis(M)
    assert rank(M) + len(ker) == M.ncols
    for v in ker:
        assert all(sum((a * b for a, b in zip(r, v)), ZERO) == ZERO for r in M.rows)
    assert rank(M) <= min(M.shape)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.integers(1, 4))
def test_field_axioms(coeffs, k):
    t = S("t")
    a = S(coeffs[0]) + S(coeffs[1]) * t + S(coeffs[2]) * S("I") * t ** 2
    b = t + S(k)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * (b + ONE) == a * b + a
    assert parse_scalar(str(a / b)) == a / b
