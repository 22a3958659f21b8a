import random

import pytest

from metricdeform import catalog
from metricdeform.cohomology import (Cochain, CochainError, canonical, class_rank, classify_in_cohomology,
                                     coboundary, cochain_basis, cohomology, is_cocycle)
from metricdeform.exactfield import ONE, ZERO, S
from metricdeform.superalg import abelian


def vec(n, **coords):
    v = [ZERO] * n
    for k, c in coords.items():
        v[int(k[1:]) - 1] = S(c)
    return v


def test_basis_counts():
    C = abelian(2, 2)
    assert len(cochain_basis(C, 2, "both")) == 32
    assert len(cochain_basis(C, 2, "even")) == 16
    assert len(cochain_basis(C, 0)) == 4


def test_canonical_signs():
    par = [0, 0, 1, 1]
    assert canonical(par, (3, 2)) == (1, (2, 3))      # odd-odd swap is +
    assert canonical(par, (1, 0)) == (-1, (0, 1))
    assert canonical(par, (0, 0))[0] == 0             # repeated even index


def test_evaluate(g221):
    f = Cochain.from_text(g221, "e^{3,4}_1")
    assert f.evaluate((3, 2)) == vec(4, e1=1)
    h = Cochain.from_text(g221, "e^{1,2}_1")
    assert h.evaluate((1, 0)) == vec(4, e1=-1)
    f4 = catalog.get("g_2|2_1").cochains()[3]
    assert f4.evaluate((2, 2)) == vec(4, e1=-1)


def test_coboundary_degree_one(g221):
    # psi(e2) = e4 is odd; by the formula, d psi(e2,e4) = [e4, psi(e2)] - psi([e2,e4]) = [e4,e4] = e1
    psi = Cochain.from_text(g221, "e^{2}_4")
    assert coboundary(psi).evaluate((1, 3)) == vec(4, e1=1)


def test_coboundary_abelian_zero():
    C = abelian(2, 2)
    for k in range(4):
        assert coboundary(Cochain.monomial(C, (), k)).is_zero()


def test_small_dims(g221):
    assert cohomology(g221, 2).dim == 4
    assert cohomology(catalog.get("g_2|2_2").algebra, 2).dim == 1
    assert cohomology(abelian(2, 2), 2).dim == 16
    with pytest.raises(CochainError):
        cohomology(g221, 3)


def test_classify(g221):
    fs = catalog.get("g_2|2_1").cochains()
    reps = fs
    r = classify_in_cohomology(g221, fs[3], reps)
    assert r["is_cocycle"] and not r["is_coboundary"]
    assert r["coordinates"] == [ZERO, ZERO, ZERO, ONE]
    b = coboundary(Cochain.from_text(g221, "e^{2}_2 + e^{3}_4"))
    r = classify_in_cohomology(g221, b, reps)
    assert r["is_cocycle"] and r["is_coboundary"] and all(c == ZERO for c in r["coordinates"])
    r = classify_in_cohomology(g221, Cochain.from_text(g221, "e^{2,3}_3"))
    assert r["is_cocycle"] and not r["is_coboundary"]


def test_non_cocycle(g221):
    f = Cochain.from_text(g221, "e^{1,2}_1")
    assert not is_cocycle(f)
    assert classify_in_cohomology(g221, f)["coordinates"] is None


def test_text_doc_roundtrip(g221):
    f = Cochain.from_text(g221, "e^{2,3}_4 - 1/2*e^{3,3}_1")
    assert Cochain.from_text(g221, str(f)) == f
    assert Cochain.from_doc(g221, f.to_doc()) == f


@pytest.mark.parametrize("name", catalog.names())
def test_d_squared_on_full_bases(name):
    g = catalog.get(name).algebra
    for n in (0, 1, 2):
        for m in cochain_basis(g, n, "both"):
            f = Cochain(g, n, {m: ONE})
            assert coboundary(coboundary(f)).is_zero(), (name, n, m)


@pytest.mark.parametrize("name", ["g_2|2_1", "g_4|2_2(lambda)", "g_2|4_5"])
def test_d_squared_random_combinations(name):
    g = catalog.get(name).algebra
    rng = random.Random(7)
    basis = cochain_basis(g, 2, "both")
    for _ in range(5):
        f = Cochain(g, 2, {m: S(rng.randint(-3, 3)) for m in rng.sample(basis, 6)})
        assert coboundary(coboundary(f)).is_zero()


def test_class_rank_detects_dependence(g221):
    fs = catalog.get("g_2|2_1").cochains()
    assert class_rank(g221, fs) == 4
    b = coboundary(Cochain.from_text(g221, "e^{2}_2"))
    assert class_rank(g221, [fs[0], fs[0] + b]) == 1
