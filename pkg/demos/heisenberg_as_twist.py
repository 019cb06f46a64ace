"""
The Heisenberg double is a cocycle twist of the Drinfeld double.

For the pairing of the braided lines k[f]/(f^3) and k[e]/(e^3) over kZ/3 we
build both algebras, twist the double by the cocycle induced from the
trivial one on B, and compare the products after matching bases.
"""
from hopf_forge.catalog import braided_line_pairing
from hopf_forge.cocycle import compare_with_cross_product, ind_B, trivial_cocycle, twist_algebra
from hopf_forge.double import drinfeld_double, heisenberg_double

P = braided_line_pairing(3)
D = drinfeld_double(P)
X = heisenberg_double(P)
print("Drinfeld double:", D.dim, "dims; Heisenberg double:", X.carrier.dim, "dims")

sigma = ind_B(trivial_cocycle(P.B), D)
twisted = twist_algebra(D.hopf, sigma)
rep, _ = compare_with_cross_product(twisted.mult, D, X)
print("twisted double == Heisenberg double:", rep.ok)
