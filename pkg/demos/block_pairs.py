"""Isomorphic polycyclic groups from a finite-order block.

For C of finite order m and q coprime to m, the matrices
[[1,0],[u,C]] and [[1,0],[u,C^q]] give isomorphic groups over Z^3.
"""

from math import gcd

from lmg import RatMatrix, decide_iso, validate_datum
from lmg.exactla import companion, cyclotomic, frobenius_form, matrix_order
from lmg.iso import construct_pair_iii

I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
for name, C in [("rotation", RatMatrix([[0, -1], [1, 0]])), ("Phi_3", companion(cyclotomic(3))), ("Phi_6", companion(cyclotomic(6)))]:
    m = matrix_order(C)
    for q in (q for q in range(1, m) if gcd(q, m) == 1):
        A, Ab = construct_pair_iii(C, (1, 0), q)
        v = decide_iso(validate_datum(3, A, I3), validate_datum(3, Ab, I3))
        same = frobenius_form(A) == frobenius_form(Ab)
        print(f"{name:9s} m={m} q={q}  Q-conjugate={same}  verdict={v.verdict}  via {v.witness.to_json()['condition']}")

# Hide the block shape behind a change of basis and ask for condition (iii) only
A, Ab = construct_pair_iii(RatMatrix([[0, -1], [1, 0]]), (1, 0), 3)
P = RatMatrix([[1, 1, 0], [0, 1, 1], [1, 1, 1]])
G1 = validate_datum(3, P @ A @ P.inverse(), I3)
G2 = validate_datum(3, Ab, I3)
v = decide_iso(G1, G2, conditions=["III"])
print("\ndisguised pair:", v.verdict)
print(v.dumps())
