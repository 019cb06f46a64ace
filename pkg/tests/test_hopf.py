import pytest

from hopf_forge.catalog import (
    cyclic_dual_qt, cyclic_qt, find_cyclic_r_matrices, functions_on_group, group_algebra,
    klein_four, sweedler, taft,
)
from hopf_forge.groups import NotAGroup, FiniteGroup, cyclic_group, direct_product, symmetric_group
from hopf_forge.hopf import (
    BialgebraData, HopfData, NotHopf, check_bialgebra, check_dual_quasitriangular, check_hopf,
    check_quasitriangular, co_opposite, dual_hopf, find_antipode, QuasiTriangular,
)
from hopf_forge.scalars import primitive_root, rationals
from hopf_forge.tensor import MultiMap, Space, compose, tensor_map

Q = rationals()

HOPF = {
    "sweedler": sweedler,
    "taft3": lambda: taft(3),
    "taft4": lambda: taft(4),
    "kS3": lambda: group_algebra(symmetric_group(3)),
    "k[S3]": lambda: functions_on_group(symmetric_group(3)),
    "kV4": lambda: group_algebra(klein_four()),
}


@pytest.mark.parametrize("name", sorted(HOPF))
def test_catalog_hopf_algebras_pass(name):
    H = HOPF[name]()
    assert check_hopf(H).ok
    assert find_antipode(H) == H.antipode


@pytest.mark.parametrize("name", sorted(HOPF))
def test_dual_and_co_opposite_are_hopf(name):
    H = HOPF[name]()
    assert check_hopf(dual_hopf(H)).ok
    assert check_hopf(co_opposite(H)).ok


def vec(H, label):
    return MultiMap((), (H.carrier,), {((H.carrier.index(label),), ()): 1}, H.field)


def times(H, *labels):
    x = vec(H, labels[0])
    for lab in labels[1:]:
        x = compose(H.mult, tensor_map(x, vec(H, lab)))
    return x


def test_taft_relations():
    H = taft(3)
    z = primitive_root(H.field)
    assert times(H, "g", "x") == times(H, "x", "g").scale(z)
    assert times(H, "g", "g", "g") == vec(H, "1")
    assert times(H, "x", "x", "x").is_zero()
    want = tensor_map(vec(H, "x"), vec(H, "1")) + tensor_map(vec(H, "g"), vec(H, "x"))
    assert compose(H.comult, vec(H, "x")) == want


def test_sweedler_antipode_values():
    H = sweedler()
    S = H.antipode
    # S(x) = -g x = x g
    assert compose(S, vec(H, "x")) == times(H, "g", "x").scale(H.field(-1))
    assert compose(S, vec(H, "x")) == vec(H, "xg")
    assert compose(S, vec(H, "g")) == vec(H, "g")


def test_corrupted_multiplication_is_reported():
    H = taft(3)
    bad = dict(H.mult.entries)
    key = next(iter(sorted(bad)))
    bad[key] = bad[key] + 1
    B = BialgebraData(H.carrier, MultiMap(H.mult.domain, H.mult.codomain, bad, H.field),
                      H.unit, H.comult, H.counit)
    rep = check_bialgebra(B)
    assert not rep.ok
    assert any(r.witness is not None for r in rep.failures())


def test_monoid_bialgebra_has_no_antipode():
    # k{1, z} with z^2 = z, both grouplike
    V = Space("M", 2, ("1", "z"))
    mult = MultiMap((V, V), (V,), {((0,), (0, 0)): 1, ((1,), (0, 1)): 1, ((1,), (1, 0)): 1,
                                   ((1,), (1, 1)): 1}, Q)
    unit = MultiMap((), (V,), {((0,), ()): 1}, Q)
    comult = MultiMap((V,), (V, V), {((0, 0), (0,)): 1, ((1, 1), (1,)): 1}, Q)
    counit = MultiMap((V,), (), {((), (0,)): 1, ((), (1,)): 1}, Q)
    B = BialgebraData(V, mult, unit, comult, counit)
    assert check_bialgebra(B).ok
    with pytest.raises(NotHopf) as err:
        find_antipode(B)
    assert err.value.obstruction is not None
    assert not check_hopf(HopfData(V, mult, unit, comult, counit, None, None)).ok


def test_cyclic_r_matrix_search():
    assert find_cyclic_r_matrices(2) == [1]
    assert find_cyclic_r_matrices(3) == [1, 2]
    assert find_cyclic_r_matrices(4) == [1, 3]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cyclic_quasitriangular_structures(n):
    assert check_quasitriangular(cyclic_qt(n)).ok
    assert check_dual_quasitriangular(cyclic_dual_qt(n)).ok


def test_wrong_r_matrix_fails():
    H = group_algebra(cyclic_group(3), cyclic_qt(3).H.field)
    V = H.carrier
    # K⊗1 is invertible but fails the hexagon identities
    R = MultiMap((), (V, V), {((1, 0), ()): 1}, H.field)
    rep = check_quasitriangular(QuasiTriangular(H, R))
    assert not rep.ok and rep.failures()


def test_groups():
    S3 = symmetric_group(3)
    assert S3.order == 6 and not S3.is_abelian()
    V4 = klein_four()
    assert V4.order == 4 and V4.is_abelian()
    Z = direct_product(cyclic_group(2), cyclic_group(3))
    assert Z.order == 6 and Z.is_abelian()
    for g in range(6):
        for h in range(6):
            assert S3.mul(S3.conj(g, h), g) == S3.mul(g, h)
    with pytest.raises(NotAGroup):
        FiniteGroup([[0, 1], [1, 1]])
