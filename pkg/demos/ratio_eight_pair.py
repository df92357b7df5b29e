"""Two ascending groups over Z^2 that are isomorphic without a GL_2(Z) conjugator.

A = [[0,1],[8,0]] and A' = [[0,2],[4,0]] are conjugate over Q but not by a
unimodular matrix; the isomorphism comes from the union condition instead.
"""

from lmg import RatMatrix, abelianization, decide_iso, validate_datum
from lmg.exactla import frobenius_form
from lmg.lattice import union_condition

Z2 = [[1, 0], [0, 1]]
G1 = validate_datum(2, [[0, 1], [8, 0]], Z2)
G2 = validate_datum(2, [[0, 2], [4, 0]], Z2)

print("Frobenius forms:", [str(f) for f in frobenius_form(G1.A)], [str(f) for f in frobenius_form(G2.A)])
print("abelianizations:", abelianization(G1), "|", abelianization(G2))

B = RatMatrix.diag(2, 1)
print("B A B^-1 == A':", B @ G1.A @ B.inverse() == G2.A)
print("union condition:", union_condition(G1.A, G2.A, B))

v = decide_iso(G1, G2)
print("\nverdict:", v.verdict)
print(v.dumps())

# The companion pair differs already in the abelianization
U = validate_datum(2, [[1, 0], [2, 1]], Z2)
H = validate_datum(2, [[1, 0], [1, 1]], Z2)
v = decide_iso(U, H)
print("\nunipotent pair:", v.verdict, v.certificate.kind, v.certificate.values)
