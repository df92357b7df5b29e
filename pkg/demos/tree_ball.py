"""A ball in the Bass-Serre tree of BS(2,3), and translation lengths.

Vertices are cosets gH named by canonical words. Degree is
[Z:L] + [Z:AL] = 2 + 3 = 5.
"""

from lmg import GroupDatum, cyclic_reduce, parse_word
from lmg.tree import BASE, act_vertex, ball, degree, distance, vertex_canonical

G = GroupDatum.bs(2, 3)
print("degree:", degree(G))

b = ball(G, BASE, 2)
print(f"radius 2: {len(b.vertices)} vertices, {len(b.edges)} edges")
for v, nbrs in list(b.adjacency().items())[:6]:
    print(f"  {v or '1':>12s} : {', '.join(n or '1' for n in nbrs)}")

# Elliptic and hyperbolic elements
for text in ["x[1]", "t x[1] t^-1", "t", "t x[1] t^-1 x[1]", "x[1] t^2 x[-1]"]:
    g = parse_word(text, G)
    core, conj, tau = cyclic_reduce(G, g)
    base = vertex_canonical(G, conj)
    moved = distance(G, base, act_vertex(G, g, base))
    kind = "elliptic" if tau == 0 else "hyperbolic"
    print(f"{text:20s} tau={tau}  {kind:10s} displacement at basepoint = {moved}")

print("\nDOT for the radius-1 ball:")
print(ball(G, BASE, 1).to_dot())
