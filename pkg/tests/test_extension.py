import pytest

from metricdeform import catalog
from metricdeform.bilinear import BilinearForm, check_metric
from metricdeform.exactfield import ZERO, Matrix, S
from metricdeform.extension import (DoubleExtensionSpec, ExtensionError, double_extension, double_extension_1d,
                                    sp_derivation, symplectic_plane)
from metricdeform.superalg import LinearMap, SuperAlgebra, is_abelian, is_isomorphism, killing_form

SL2 = "[e1,e2]=e3, [e3,e1]=2*e1, [e3,e2]=-2*e2"


def test_formal_bracket_list():
    g, B = catalog.symplectic_extension()
    assert g.table == SuperAlgebra.from_text(2, 2, catalog.EXTENSION_BRACKETS).table
    assert check_metric(g, B).ok


def test_zero_derivation_is_abelian():
    C, B = symplectic_plane()
    g, form = double_extension_1d(C, B, sp_derivation(0, 0, 0))
    assert is_abelian(g) and check_metric(g, form).ok
    # split metric: D pairs with D*
    assert form.matrix[0, 1] == form.matrix[1, 0] == S(1) and form.matrix[0, 0] == ZERO


@pytest.mark.parametrize("k, target, images", [
    ((1, 0, 0), "g_2|2_2", ["e2", "e1", "e3", "e4"]),
    ((0, 0, 1), "g_2|2_1", ["-e2", "e1", "e4", "e3"]),
])
def test_normal_forms(k, target, images):
    C, B = symplectic_plane()
    g, form = double_extension_1d(C, B, sp_derivation(*k))
    P = LinearMap.from_images(catalog.get(target).algebra, g, images)
    assert is_isomorphism(P)


@pytest.mark.parametrize("case", catalog.EXTENSION_CASES, ids=[c[0] for c in catalog.EXTENSION_CASES])
def test_all_cases(case):
    name, ks, target, images = case
    g, form = catalog.symplectic_extension(*ks)
    assert check_metric(g, form).ok
    assert is_isomorphism(LinearMap.from_images(catalog.get(target).algebra, g, images))


def test_nonzero_b():
    C, B = symplectic_plane()
    g, form = double_extension_1d(C, B, sp_derivation(1, 0, 0), b=3)
    assert form.matrix[0, 0] == S(3) and check_metric(g, form).ok


def test_non_skew_rejected():
    C, B = symplectic_plane()
    D = LinearMap(C, C, Matrix([[1, 0], [0, 1]]), 0)
    with pytest.raises(ExtensionError):
        double_extension_1d(C, B, D)


def _sl2_on_plane(images):
    sl2 = SuperAlgebra.from_text(3, 0, SL2)
    C, B = symplectic_plane()
    action = [sp_derivation(*k, alg=C) for k in images]
    return DoubleExtensionSpec(C, B, sl2, action, killing_form(sl2))


def test_sl2_on_plane():
    # e1 -> D2, e2 -> D3, e3 -> D1 respects [D2,D3] = D1, [D1,D2] = 2 D2
    g, form = double_extension(_sl2_on_plane([(0, 1, 0), (0, 0, 1), (1, 0, 0)]))
    assert (g.dim_even, g.dim_odd) == (6, 2) and check_metric(g, form).ok


def test_action_must_be_homomorphism():
    with pytest.raises(ExtensionError):
        double_extension(_sl2_on_plane([(0, 1, 0), (0, 0, 1), (0, 0, 0)]))


def test_osp_adjoint_extension(osp):
    K = killing_form(osp)
    ads = [LinearMap(osp, osp, osp.ad(i), osp.parity(i)) for i in range(osp.dim)]
    g, form = double_extension(DoubleExtensionSpec(osp, K, osp, ads, K))
    assert (g.dim_even, g.dim_odd) == (9, 6) and check_metric(g, form).ok


def test_extender_form_checked():
    spec = _sl2_on_plane([(0, 1, 0), (0, 0, 1), (1, 0, 0)])
    sl2 = spec.extender
    spec.extender_form = BilinearForm(sl2, Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))
    with pytest.raises(ExtensionError):
        spec.validate()
