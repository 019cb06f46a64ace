import pytest

from hopf_forge.braided import (
    check_module_algebra, check_yd, left_adjoint_yd, regular_comodule_algebra,
    trivial_comodule_algebra, trivial_yd,
)
from hopf_forge.catalog import (
    braided_line, braided_line_pairing, group_algebra, group_pairing, sweedler, taft,
)
from hopf_forge.double import (
    RewriteBudgetExceeded, bosonize, check_cross_product, check_double, check_drin_module_functor,
    check_pairing, check_plain_comodule_algebra, check_right_comodule_algebra,
    classical_double, comod_to_copC_module, commutator_relations, defining_relations,
    drin_comod_algebra_left, drin_comod_algebra_right, drinfeld_double, dual_pairing,
    heisenberg_double, heisenberg_relations, induced_module_algebra, pairing_rank,
    regular_right_comodule_algebra, trivial_right_comodule_algebra,
)
from hopf_forge.groups import cyclic_group, symmetric_group
from hopf_forge.hopf import check_hopf, check_quasitriangular


@pytest.fixture(scope="module", params=[2, 3])
def line(request):
    P = braided_line_pairing(request.param)
    return P, drinfeld_double(P)


def test_pairings():
    for P in (braided_line_pairing(2), braided_line_pairing(3), group_pairing(symmetric_group(3)),
              dual_pairing(sweedler())):
        assert check_pairing(P).ok
        assert pairing_rank(P) == P.B.carrier.dim


def test_line_double(line):
    P, D = line
    n = P.B.carrier.dim
    assert D.dim == n ** 3
    assert check_double(D).ok
    assert all(r.passed for r in defining_relations(D))
    assert all(r.passed for r in commutator_relations(D))


def test_line_heisenberg(line):
    P, _ = line
    X = heisenberg_double(P)
    assert check_cross_product(X).ok
    assert all(r.passed for r in heisenberg_relations(X, P))


def test_double_is_deterministic_across_workers():
    P = braided_line_pairing(3)
    assert drinfeld_double(P, jobs=1).mult == drinfeld_double(P, jobs=2).mult


def test_rewrite_budget():
    with pytest.raises(RewriteBudgetExceeded):
        drinfeld_double(braided_line_pairing(3), max_rewrite_steps=3)


def test_classical_double_of_sweedler_is_quasitriangular():
    D = classical_double(sweedler())
    assert D.dim == 16
    assert D.R is not None
    assert check_quasitriangular(D.quasitriangular()).ok


def test_classical_double_of_group_algebra_matches_pairing_double():
    G = cyclic_group(3)
    D = classical_double(group_algebra(G))
    assert D.dim == 9
    assert check_double(D).ok


def test_yd_modules_become_double_modules(line):
    P, D = line
    B = P.B
    for V in (left_adjoint_yd(B), trivial_yd(B)):
        assert check_yd(V).ok
        assert check_drin_module_functor(V, V, D).ok


def test_comodule_algebras_over_the_double(line):
    P, D = line
    B = P.B
    for A in (regular_comodule_algebra(B), trivial_comodule_algebra(B)):
        CA, _ = drin_comod_algebra_left(A, D)
        assert check_plain_comodule_algebra(CA).ok
    for A in (regular_right_comodule_algebra(P.C), trivial_right_comodule_algebra(P.C)):
        assert check_right_comodule_algebra(A).ok
        assert check_module_algebra(induced_module_algebra(A, P)).ok
        CA, _, _ = drin_comod_algebra_right(A, D)
        assert check_plain_comodule_algebra(CA).ok


def test_coaction_to_cop_module(line):
    P, _ = line
    B = P.B
    _, rep = comod_to_copC_module(P, B.module, B.comult)
    assert rep.ok


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bosonized_line_is_taft(n):
    Bz = bosonize(braided_line(n))
    T = taft(n)
    assert check_hopf(Bz).ok
    for role in ("mult", "unit", "comult", "counit", "antipode"):
        f = getattr(Bz, role)
        moved = f.with_spaces(tuple(T.carrier for _ in f.domain), tuple(T.carrier for _ in f.codomain))
        assert moved == getattr(T, role), role
