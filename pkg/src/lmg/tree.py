"""Local geometry of the Bass-Serre tree of G(A, L).

Vertices are left cosets gH (H = Z^n) and are named by a canonical word
``x^r0 t^e1 x^r1 ... t^ek`` with no trailing generator: each ``r_i`` is the
canonical residue mod AL (before ``t``) or mod L (before ``t^-1``). The base
vertex H is the empty word. The edge gL joins gH to g t^-1 H, and the edge
g(AL) joins gH to g t H.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass

from .errors import BallTooLargeError, PreconditionError
from .lattice import index_in_standard
from .lmgroup import GroupDatum, britton_reduce
from .words import Gen, Letter, Word

DEFAULT_BALL_CAP = 10**5
BALL_CAP_ENV = "LMG_MAX_BALL"

BASE = Word()


def vertex_canonical(G: GroupDatum, w: Word) -> Word:
    """Canonical name of the coset ``wH``."""
    out: list[Letter] = []
    carry = (0,) * G.n
    for let in britton_reduce(G, w):
        if isinstance(let, Gen):
            carry = tuple(a + b for a, b in zip(carry, let.v))
            continue
        if let.e == 1:
            r, rest = G.AL.residue(carry)
            carry = tuple(int(x) for x in G.A_inv @ rest)
        else:
            r, rest = G.L.residue(carry)
            carry = tuple(int(x) for x in G.A @ rest)
        if any(r):
            out.append(Gen(r))
        out.append(let)
    return Word(out)


def act_vertex(G: GroupDatum, g: Word, v: Word) -> Word:
    return vertex_canonical(G, g * v)


def degree(G: GroupDatum) -> int:
    return index_in_standard(G.L) + index_in_standard(G.AL)


def neighbors(G: GroupDatum, v: Word) -> list[Word]:
    """Adjacent vertices: the ``t^-1`` side (mod L) first, then the ``t`` side (mod AL)."""
    out = [vertex_canonical(G, v * Word.gen(a) * Word.t(-1)) for a in G.L.transversal()]
    out += [vertex_canonical(G, v * Word.gen(b) * Word.t(1)) for b in G.AL.transversal()]
    return out


def distance(G: GroupDatum, v1: Word, v2: Word) -> int:
    """Number of stable letters in the reduced form of ``v1^-1 v2``."""
    return britton_reduce(G, v1.inverse() * v2).stable_count


def ball_size(G: GroupDatum, r: int) -> int:
    d = degree(G)
    size, shell = 1, d
    for _ in range(r):
        size += shell
        shell *= d - 1
    return size


def configured_cap() -> int:
    raw = os.environ.get(BALL_CAP_ENV)
    if raw is None:
        return DEFAULT_BALL_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise PreconditionError(f"{BALL_CAP_ENV} must be an integer, got {raw!r}") from exc


def vertex_label(v: Word) -> str:
    return str(v) if v else "1"


@dataclass(frozen=True)
class Ball:
    """Vertices in BFS order (canonical order within a shell) and induced edges."""

    center: Word
    radius: int
    vertices: tuple[Word, ...]
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {str(v): [] for v in self.vertices}
        for i, j in self.edges:
            adj[str(self.vertices[i])].append(str(self.vertices[j]))
            adj[str(self.vertices[j])].append(str(self.vertices[i]))
        return adj

    def to_json(self) -> str:
        return json.dumps(
            {
                "center": str(self.center),
                "radius": self.radius,
                "vertices": [str(v) for v in self.vertices],
                "edges": [[str(self.vertices[i]), str(self.vertices[j])] for i, j in self.edges],
                "adjacency": self.adjacency(),
            },
            indent=2,
        )

    def to_dot(self) -> str:
        lines = ["graph ball {"]
        for i, v in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{vertex_label(v)}"];')
        for i, j in self.edges:
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def ball(G: GroupDatum, center: Word, r: int, cap: int | None = None) -> Ball:
    if r < 0:
        raise PreconditionError("radius must be non-negative")
    cap = configured_cap() if cap is None else cap
    size = ball_size(G, r)
    if size > cap:
        raise BallTooLargeError(f"ball of radius {r} has {size} vertices, cap is {cap}")
    center = vertex_canonical(G, center)
    index = {center: 0}
    order = [center]
    edges: list[tuple[int, int]] = []
    frontier = deque([(center, 0)])
    while frontier:
        v, dist = frontier.popleft()
        if dist == r:
            continue
        for u in neighbors(G, v):
            if u not in index:
                index[u] = len(order)
                order.append(u)
                frontier.append((u, dist + 1))
                edges.append((index[v], index[u]))
    return Ball(center, r, tuple(order), tuple(edges))
