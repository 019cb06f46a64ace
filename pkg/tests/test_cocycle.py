import pytest
from hypothesis import given, settings, strategies as st

from hopf_forge.braided import as_braided
from hopf_forge.catalog import (
    braided_line, group_algebra, group_bicharacter_cocycle, group_cycle, group_pairing, lookup,
)
from hopf_forge.cocycle import (
    CocycleError, Cocycle2, Counital1, check_cocycle, check_cycle, check_twisted_algebra,
    cohomologous, cohomologous_iso, coboundary, compose_cocycles, copC, find_coboundary, ind_B,
    ind_C, ind_C_chb, require_cocycle, trivial_cocycle, twist_algebra, twist_cocycle,
    twist_is_associative, twisted_mult,
)
from hopf_forge.double import drinfeld_double
from hopf_forge.groups import cyclic_group, symmetric_group
from hopf_forge.scalars import cyclotomic
from hopf_forge.tensor import MultiMap, compose


def counital(X, values):
    """A functional with the given values, corrected to be 1 on the unit."""
    fld, V = X.field, X.carrier
    vals = {((), (i,)): fld(v) for i, v in enumerate(values)}
    at_one = compose(MultiMap((V,), (), vals, fld), X.unit).coeff((), ())
    (k,), _ = next(iter(X.unit.entries))
    vals[((), (k,))] = vals.get(((), (k,)), fld.zero()) + (fld.one() - at_one) / X.unit.coeff((k,), ())
    return Counital1(X, MultiMap((V,), (), vals, fld))


KZ4 = as_braided(group_algebra(cyclic_group(4)))
KS3 = as_braided(group_algebra(symmetric_group(3)))
KZ3_CYCLO = as_braided(group_algebra(cyclic_group(3), cyclotomic(3)))
nonzero = st.integers(-4, 4).filter(bool)


@settings(max_examples=25, deadline=None)
@given(st.lists(nonzero, min_size=4, max_size=4))
def test_coboundaries_are_cocycles_and_found(values):
    beta = counital(KZ4, values)
    d = coboundary(beta)
    assert check_cocycle(d).ok
    res = find_coboundary(trivial_cocycle(KZ4), d)
    assert res.status == "found"
    assert twist_cocycle(trivial_cocycle(KZ4), res.beta).sigma == d.sigma


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["Z3", "S3"]), st.lists(nonzero, min_size=6, max_size=6))
def test_coboundaries_found_over_other_groups(which, values):
    B = KZ3_CYCLO if which == "Z3" else KS3
    d = coboundary(counital(B, values[:B.carrier.dim]))
    res = find_coboundary(trivial_cocycle(B), d)
    assert res.status == "found"
    assert twist_cocycle(trivial_cocycle(B), res.beta).sigma == d.sigma


@settings(max_examples=15, deadline=None)
@given(st.lists(nonzero, min_size=6, max_size=6))
def test_twisting_a_cocycle_gives_an_isomorphic_algebra(values):
    s = lookup("bicharacter:orders=2x2,matrix=0.1/0.0").obj
    beta = counital(s.over, values[:4])
    t = twist_cocycle(s, beta)
    assert check_cocycle(t).ok
    phi, rep = cohomologous_iso(s, t, beta)
    assert rep.ok and phi is not None


def test_twisted_group_algebra_matches_direct_formula():
    # oracle: on kG the twisted product is g·h = σ(g, h) gh
    s = group_bicharacter_cocycle((2, 2), [[0, 1], [0, 0]])
    B = s.over
    G_mul = {(g, h): o for ((o,), (g, h)) in B.mult.entries}
    direct = MultiMap(B.mult.domain, B.mult.codomain,
                      {((G_mul[g, h],), (g, h)): s.sigma.coeff((), (g, h)) for (g, h) in G_mul}, B.field)
    assert twisted_mult(B, s.sigma) == direct
    T = twist_algebra(B, s)
    assert check_twisted_algebra(T).ok
    # σ = (-1)^(a d) makes the two generators anticommute
    m = T.mult
    a, b = 2, 1          # (1,0) and (0,1)
    assert m.coeff((3,), (a, b)) == -m.coeff((3,), (b, a))


def test_bicharacter_is_not_a_coboundary():
    s = group_bicharacter_cocycle((2, 2), [[0, 1], [0, 0]])
    t = group_bicharacter_cocycle((2, 2), [[0, 0], [1, 0]])
    assert find_coboundary(s, trivial_cocycle(s.over)).status == "none"
    verdict, beta = cohomologous(s, t)
    assert verdict is True and beta is not None


@pytest.mark.parametrize("n, params", [(2, {(1, 1): 5}), (3, {(1, 2): 2, (2, 1): 2})])
def test_line_cocycles_are_nontrivial(n, params):
    L = braided_line(n)
    s = lookup(f"braided-line-cocycle:n={n},t={list(params.values())[0]}").obj
    assert check_cocycle(s).ok
    assert find_coboundary(s, trivial_cocycle(s.over)).status == "none"
    assert L.carrier.dim == n


def test_bad_line_parameters_are_rejected():
    from hopf_forge.catalog import braided_line_cocycle
    with pytest.raises(CocycleError) as err:
        braided_line_cocycle(3, {(1, 2): 1, (2, 1): 2})
    assert not err.value.report.ok


def test_non_normalized_functional_fails():
    V = KZ4.carrier
    ent = {((), (x, y)): 2 for x in range(4) for y in range(4)}
    s = Cocycle2(KZ4, MultiMap((V, V), (), ent, KZ4.field))
    rep = check_cocycle(s)
    assert not rep.ok
    assert not rep.get("σ(1, x) = ε(x)").passed
    with pytest.raises(CocycleError):
        require_cocycle(s)


def test_non_invertible_functional_is_reported():
    V = KZ4.carrier
    ent = {((), (x, y)): 1 for x in range(4) for y in range(4) if x == 0 or y == 0}
    rep = check_cocycle(Cocycle2(KZ4, MultiMap((V, V), (), ent, KZ4.field)))
    assert not rep.get("convolution invertible").passed


def test_non_cocycle_has_associativity_witness():
    V = KS3.carrier
    ent = {((), (x, y)): 1 for x in range(6) for y in range(6)}
    ent[((), (1, 2))] = KS3.field(3)
    s = Cocycle2(KS3, MultiMap((V, V), (), ent, KS3.field))
    assert not check_cocycle(s).ok
    ok, witness = twist_is_associative(twist_algebra(KS3, s))
    assert not ok and witness is not None


def test_group_cycle_and_dual_cocycle():
    cyc = group_cycle((2, 2), [[0, 0], [1, 0]])
    assert check_cycle(cyc).ok


@pytest.fixture(scope="module")
def z2_double():
    P = group_pairing(cyclic_group(2))
    return P, drinfeld_double(P)


def test_induced_cocycles_on_the_double(z2_double):
    P, D = z2_double
    triv_B, triv_C = trivial_cocycle(P.B), trivial_cocycle(copC(P))
    assert check_cocycle(ind_B(triv_B, D)).ok
    assert compose_cocycles(triv_B, triv_C, D).sigma == ind_B(triv_B, D).sigma


def test_two_presentations_of_ind_C_are_cohomologous(z2_double):
    P, D = z2_double
    tau = coboundary(counital(copC(P), [3, 2]))
    a, b = ind_C(tau, D), ind_C_chb(tau, D)
    assert check_cocycle(a).ok and check_cocycle(b).ok
    assert a.sigma == compose_cocycles(trivial_cocycle(P.B), tau, D).sigma
    assert a.sigma != b.sigma
    assert find_coboundary(a, b).status == "found"
