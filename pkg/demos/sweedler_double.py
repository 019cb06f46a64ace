"""
Sweedler's four dimensional Hopf algebra and its quantum double.

We pair H4 with its dual, build the 16 dimensional double by straightening
words, and look at the axiom report.  The antipode is solved as a
convolution inverse and compared with the closed formula.
"""
from hopf_forge.catalog import sweedler
from hopf_forge.double import check_double, classical_double, dual_pairing, pairing_rank
from hopf_forge.hopf import check_hopf

H = sweedler()
print("H4 basis:", H.carrier.basis_labels)
print("H4 is a Hopf algebra:", check_hopf(H).ok)

P = dual_pairing(H)
print("rank of the dual pairing:", pairing_rank(P))

D = classical_double(H)
print("dim D(H4) =", D.dim)
rep = check_double(D)
for r in rep.results:
    print(("  ok  " if r.passed else "  FAIL"), r.name)
print("R-matrix present:", D.R is not None)
