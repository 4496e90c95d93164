"""Integer matrix tools: Smith normal form, cokernels, unimodular forms.

Run:  python3 demos/demo_forms.py
"""

from trisect import (
    classify_unimodular,
    cokernel_invariants,
    smith_normal_form,
    sym_form_invariants,
)

# Smith normal form with exact integer arithmetic: U M V = S with
# U, V unimodular and the diagonal entries forming a divisibility chain.
m = ((2, 4, 4), (-6, 6, 12), (10, 4, 16))
u, s, v = smith_normal_form(m)
print("S =", s)

# The cokernel of the matrix read off the diagonal: free rank plus torsion.
rep = cokernel_invariants(m)
print("coker: free rank %d, torsion %s" % (rep.free_rank, rep.torsion))

# Symmetric unimodular forms are classified by rank, signature and parity.
hyperbolic = ((0, 1), (1, 0))
print("H:", classify_unimodular(hyperbolic))

diag = ((1, 0, 0), (0, 1, 0), (0, 0, -1))
inv = sym_form_invariants(diag)
print("diag(1,1,-1): signature %+d parity %s" % (inv.signature, inv.parity))
print("classified:", classify_unimodular(diag))
