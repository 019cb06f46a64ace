from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopf_forge.catalog import group_algebra, sweedler, taft
from hopf_forge.groups import cyclic_group
from hopf_forge.scalars import rationals
from hopf_forge.tensor import (
    MultiMap, NotInvertible, ShapeError, Space, compose, convolve, flip, from_matrix, identity,
    invert, rank, solve_convolution_inverse, solve_linear, tensor_map,
)

Q = rationals()
U = Space("U", 2)
V = Space("V", 3)
W = Space("W", 2)


@st.composite
def maps(draw, domain, codomain, lo=-3, hi=3):
    from itertools import product
    outs = list(product(*[range(s.dim) for s in codomain]))
    ins = list(product(*[range(s.dim) for s in domain]))
    ent = {}
    for o in outs:
        for i in ins:
            c = draw(st.integers(lo, hi))
            if c:
                ent[(o, i)] = c
    return MultiMap(domain, codomain, ent, Q)


def naive_rank(matrix):
    """Plain Fraction Gaussian elimination, independent of SparseEchelon."""
    m = [[Fraction(x.as_fraction()) for x in row] for row in matrix]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                t = m[k][c] / m[r][c]
                m[k] = [a - t * b for a, b in zip(m[k], m[r])]
        r += 1
    return r


@settings(max_examples=40, deadline=None)
@given(maps((U, V), (W,)))
def test_rank_matches_naive_elimination(f):
    assert rank(f) == naive_rank(f.to_matrix())


@settings(max_examples=40, deadline=None)
@given(maps((V,), (U,)), maps((U,), (W,)), maps((W,), (V,)))
def test_composition_is_associative(f, g, h):
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@settings(max_examples=30, deadline=None)
@given(maps((U,), (V,)), maps((W,), (U,)))
def test_then_and_after_agree_with_tensor_identity(f, g):
    # apply f to the first slot of U⊗W
    x = identity((U, W), Q)
    assert x.then(f, 0) == tensor_map(f, identity((W,), Q))
    # feed g into the second input of a map on U⊗U
    y = tensor_map(identity((U,), Q), identity((U,), Q))
    assert y.after(g, 1) == tensor_map(identity((U,), Q), g)


@settings(max_examples=30, deadline=None)
@given(maps((U, V), (W,)))
def test_permutations_and_flips(f):
    swapped = f.permute_inputs((1, 0))
    assert swapped.permute_inputs((1, 0)) == f
    assert swapped.after(flip(U, V, Q), 0) == f


def test_shape_errors():
    with pytest.raises(ShapeError):
        identity((U,), Q).then(identity((V,), Q))
    with pytest.raises(ShapeError):
        Space("X", 0)
    with pytest.raises(ShapeError):
        Space("X", 2, ("a", "a"))


def test_first_difference_names_a_witness():
    f = MultiMap((U,), (U,), {((0,), (0,)): 1}, Q)
    g = MultiMap((U,), (U,), {((0,), (0,)): 2}, Q)
    assert f.first_difference(g) is not None
    assert f.first_difference(f) is None


def test_invert_and_singular():
    f = from_matrix((U,), (U,), [[1, 2], [3, 4]], Q)
    assert compose(invert(f), f) == identity((U,), Q)
    with pytest.raises(NotInvertible):
        invert(from_matrix((U,), (U,), [[1, 2], [2, 4]], Q))


def test_solve_linear_reports_inconsistent_row():
    sol, bad = solve_linear([{0: Q(1)}, {0: Q(2)}], [Q(1), Q(3)], Q)
    assert sol is None and bad == 1
    sol, bad = solve_linear([{0: Q(1), 1: Q(1)}, {1: Q(2)}], [Q(3), Q(4)], Q)
    assert bad is None and sol == {0: Q(1), 1: Q(2)}


@pytest.mark.parametrize("make", [sweedler, lambda: taft(3), lambda: group_algebra(cyclic_group(4))])
def test_convolution_inverse_of_identity_is_antipode(make):
    H = make()
    S = solve_convolution_inverse(H.identity(), H.mult, H.comult, H.unit, H.counit)
    assert S == H.antipode
    target = compose(H.unit, H.counit)
    assert convolve(H.identity(), S, H.mult, H.comult) == target
    assert convolve(S, H.identity(), H.mult, H.comult) == target


def test_convolution_inverse_of_functional_is_two_sided():
    H = group_algebra(cyclic_group(3))
    f = MultiMap((H.carrier,), (), {((), (0,)): 1, ((), (1,)): 2, ((), (2,)): 5}, Q)
    g = solve_convolution_inverse(f, None, H.comult, MultiMap((), (), {((), ()): 1}, Q), H.counit)
    assert convolve(f, g, None, H.comult) == H.counit
    assert convolve(g, f, None, H.comult) == H.counit


def test_convolution_inverse_refuses_non_invertible():
    H = group_algebra(cyclic_group(3))
    f = MultiMap((H.carrier,), (), {((), (0,)): 1, ((), (1,)): 0}, Q)
    with pytest.raises(NotInvertible):
        solve_convolution_inverse(f, None, H.comult, MultiMap((), (), {((), ()): 1}, Q), H.counit)
