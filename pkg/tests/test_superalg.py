import pytest

from metricdeform.exactfield import ONE, ZERO, S
from metricdeform.superalg import (AlgebraError, GradingError, JacobiError, LinearMap, SuperAlgebra, abelian,
                                   bracket, check_jacobi, derivations, direct_sum, is_abelian, is_derivation,
                                   is_homomorphism, is_isomorphism, killing_form)
from metricdeform.exactfield import rank

G1 = "[e4,e4]=e1, [e2,e4]=e3"


def unit(n, i):
    return [ONE if q == i else ZERO for q in range(n)]


@pytest.fixture
def g1():
    return SuperAlgebra.from_text(2, 2, G1)


def test_brackets(g1, osp):
    assert bracket(g1, unit(4, 3), unit(4, 3)) == unit(4, 0)
    assert bracket(g1, unit(4, 1), [ZERO] * 4) == [ZERO] * 4
    v = bracket(osp, unit(5, 3), unit(5, 4))
    assert v == [ZERO, ZERO, S("1/4"), ZERO, ZERO]


def test_super_skew(g1):
    # [e4,e2] = -[e2,e4] for even/odd; odd/odd is symmetric
    assert bracket(g1, unit(4, 3), unit(4, 1)) == [ZERO, ZERO, -ONE, ZERO]


def test_grading_rejected():
    with pytest.raises(GradingError):
        SuperAlgebra.from_text(2, 2, "[e2,e4]=e1")
    with pytest.raises(AlgebraError):
        SuperAlgebra.from_text(2, 2, "[e1,e1]=e2")


def test_jacobi_violation(g1):
    assert check_jacobi(abelian(2, 2)) == []
    assert check_jacobi(g1) == []
    # ad(e2) = e3 -> e3, e4 -> e3 is still a derivation: odd brackets land in the centre
    assert check_jacobi(SuperAlgebra.from_text(2, 2, G1 + ", [e2,e3]=e3")) == []
    # [e3,e3]=e1 breaks (e2,e3,e4): [[e2,e3],e4] + [e3,[e2,e4]] = [e3,e3] = e1, [e2,[e3,e4]] = 0
    bad = SuperAlgebra.from_text(2, 2, G1 + ", [e3,e3]=e1", check=False)
    (((i, j, k), res),) = check_jacobi(bad)
    assert (i, j, k) == (1, 2, 3) and res in ([ONE, ZERO, ZERO, ZERO], [-ONE, ZERO, ZERO, ZERO])
    with pytest.raises(JacobiError):
        SuperAlgebra.from_text(2, 2, G1 + ", [e3,e3]=e1")


def test_doc_roundtrip(osp):
    again = SuperAlgebra.from_doc(osp.to_doc())
    assert again == osp


def test_doc_rejects_lower_triangle():
    doc = {"dim_even": 2, "dim_odd": 0, "brackets": [{"i": 2, "j": 1, "terms": [{"k": 2, "c": "1"}]}]}
    with pytest.raises(AlgebraError):
        SuperAlgebra.from_doc(doc)


def test_direct_sum(osp):
    s = direct_sum(osp, abelian(1, 0))
    assert (s.dim_even, s.dim_odd) == (4, 2)
    assert s.bracket_basis(4, 5) == {2: S("1/4")}   # osp odd vectors shift past the new even one
    assert direct_sum(osp, abelian(0, 0)) == osp


def test_sum_is_g3_at_zero():
    g22 = SuperAlgebra.from_text(2, 2, "[e3,e4]=e1, [e2,e3]=e3, [e2,e4]=-e4")
    s = direct_sum(g22, abelian(0, 2))
    g3 = SuperAlgebra.from_text(2, 4, "[e2,e3]=e3, [e2,e5]=-e5, [e3,e5]=e1")
    P = LinearMap.from_images(s, g3, ["e1", "e2", "e3", "e5", "e4", "e6"])
    assert is_isomorphism(P)


def test_homomorphisms(g1):
    assert is_homomorphism(LinearMap.from_images(g1, g1, ["e1", "e2", "e3", "e4"]))
    swap = LinearMap.from_images(g1, g1, ["e2", "e1", "e3", "e4"])
    assert not is_homomorphism(swap)
    lam = "[e1,e2]=e2, [e1,e3]=-e3, [e2,e3]=e4, [e1,e5]=({l})*e5, [e1,e6]=-({l})*e6, [e5,e6]=({l})*e4"
    plus = SuperAlgebra.from_text(4, 2, lam.format(l="lambda"))
    minus = SuperAlgebra.from_text(4, 2, lam.format(l="-lambda"))
    P = LinearMap.from_images(minus, plus, ["-e1", "e3", "e2", "-e4", "e5", "e6"])
    assert is_isomorphism(P)


def test_derivations():
    C02 = abelian(0, 2)
    assert len(derivations(C02, "even")) == 4
    assert len(derivations(abelian(1, 0))) == 1
    sl2 = SuperAlgebra.from_text(3, 0, "[e1,e2]=e3, [e3,e1]=2*e1, [e3,e2]=-2*e2")
    ders = derivations(sl2)
    assert len(ders) == 3          # all inner
    assert all(is_derivation(sl2, D) for D in ders)


def test_killing():
    assert killing_form(abelian(2, 2)).matrix.is_zero()
    sl2 = SuperAlgebra.from_text(3, 0, "[e1,e2]=e3, [e3,e1]=2*e1, [e3,e2]=-2*e2")
    K = killing_form(sl2).matrix
    assert K[2, 2] == S(8) and K[0, 1] == S(4) and K[1, 0] == S(4)
    assert K[0, 2] == ZERO and K[0, 0] == ZERO


def test_osp_killing_nondegenerate(osp):
    assert rank(killing_form(osp).matrix) == 5


def test_is_abelian(g1):
    assert is_abelian(abelian(2, 2))
    assert not is_abelian(g1)


def test_substitute_family():
    fam = SuperAlgebra.from_text(2, 4, "[e2,e3]=e3, [e2,e4]=lambda*e4, [e2,e5]=-e5, [e2,e6]=-lambda*e6, "
                                       "[e3,e5]=e1, [e4,e6]=lambda*e1")
    assert fam.parameters() == ["lambda"] or set(fam.parameters()) == {"lambda"}
    assert check_jacobi(fam) == []
    one = fam.substitute({"lambda": ONE})
    assert one.bracket_basis(3, 5) == {0: ONE}
