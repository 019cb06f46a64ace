"""
Twisting the Klein four group algebra.

A bicharacter σ(a, b) = (-1)^(a1 b2) makes the two generators anticommute.
Its transpose is cohomologous to it, but neither is a coboundary; the
decision procedure says so and hands back the functional β for the first.
"""
from hopf_forge.catalog import group_bicharacter_cocycle
from hopf_forge.cocycle import (
    check_cocycle, check_twisted_algebra, cohomologous, find_coboundary, trivial_cocycle,
    twist_algebra,
)

s = group_bicharacter_cocycle((2, 2), [[0, 1], [0, 0]])
t = group_bicharacter_cocycle((2, 2), [[0, 0], [1, 0]])
print("σ is a cocycle:", check_cocycle(s).ok)

T = twist_algebra(s.over, s)
print("twisted algebra passes:", check_twisted_algebra(T).ok)
a, b, ab = 2, 1, 3
print("x·y =", T.mult.coeff((ab,), (a, b)), " y·x =", T.mult.coeff((ab,), (b, a)))

print("σ a coboundary?", find_coboundary(s, trivial_cocycle(s.over)).status)
verdict, beta = cohomologous(s, t)
print("σ ~ σ^T:", verdict)
print("β values:", [str(beta.beta.coeff((), (i,))) for i in range(4)])
