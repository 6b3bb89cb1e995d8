"""The relation complex of a Nakayama algebra.

Vertices are the relations of length <= n.  A relation of length l covers
its l-1 internal vertices {start+1, ..., start+length-1} (mod n): the
vertices i with x_{i-1} x_i a subword.  A set of relations spans a simplex
iff the union of their interiors does not cover all n quiver vertices.
Subsets of non-covering sets are non-covering, so the complex is downward
closed for free.

Homology is computed over the rationals from exact integer boundary
matrices; reduced Betti numbers use the augmented complex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .algebra import NakayamaAlgebra, Relation, mod1


def interior(rel: Relation, n: int) -> frozenset[int]:
    """Internal vertices of a relation of length <= n."""
    if rel.length > n:
        raise ValueError(f"relation of length {rel.length} has no interior on Q_{n}")
    return frozenset(mod1(rel.start + t, n) for t in range(1, rel.length))


def is_simplex(algebra: NakayamaAlgebra, rels) -> bool:
    """Do these relations fail to cover every vertex of the quiver?"""
    covered: set[int] = set()
    for rel in rels:
        covered |= interior(rel, algebra.n)
    return len(covered) < algebra.n


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    vertices: tuple[Relation, ...]
    # simplices[p] lists the p-simplices as sorted vertex-index tuples,
    # in lexicographic order; boundaries[p] is the matrix of the p-th
    # boundary map (rows: (p-1)-simplices, columns: p-simplices).
    simplices: tuple[tuple[tuple[int, ...], ...], ...]
    boundaries: tuple[linalg.Matrix, ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.simplices)


def complex_from_interiors(n: int, interiors: list[frozenset[int]]) -> SimplicialComplex:
    """Build the non-covering-subsets complex from bare interiors.

    Used directly when the vertex set is a raw (possibly redundant) relation
    list rather than a validated algebra's relations."""
    r = len(interiors)
    by_dim: list[list[tuple[int, ...]]] = []
    for size in range(1, r + 1):
        simplices = [
            subset
            for subset in combinations(range(r), size)
            if len(frozenset().union(*(interiors[i] for i in subset))) < n
        ]
        if not simplices:
            break
        by_dim.append(simplices)

    boundaries: list[linalg.Matrix] = []
    for p in range(1, len(by_dim)):
        index = {simplex: i for i, simplex in enumerate(by_dim[p - 1])}
        matrix = linalg.zero_matrix(len(by_dim[p - 1]), len(by_dim[p]))
        for col, simplex in enumerate(by_dim[p]):
            for j in range(len(simplex)):
                face = simplex[:j] + simplex[j + 1:]
                matrix[index[face]][col] = (-1) ** j
        boundaries.append(matrix)

    return SimplicialComplex(
        n=n,
        vertices=tuple(),  # filled in by callers that have Relation vertices
        simplices=tuple(tuple(s) for s in by_dim),
        boundaries=tuple(boundaries),
    )


def complex_vertices(algebra: NakayamaAlgebra) -> tuple[Relation, ...]:
    return tuple(rel for rel in algebra.relations if rel.length <= algebra.n)


def build_complex(algebra: NakayamaAlgebra) -> SimplicialComplex:
    """Enumerate all subsets of the length-<=n relations and keep the
    non-covering ones.  The number of relations is at most n, so the 2^r
    subset sweep is cheap at every size this package targets."""
    vertices = complex_vertices(algebra)
    cx = complex_from_interiors(algebra.n, [interior(rel, algebra.n) for rel in vertices])
    return SimplicialComplex(
        n=cx.n, vertices=vertices, simplices=cx.simplices, boundaries=cx.boundaries
    )


def euler_characteristic(cx: SimplicialComplex) -> int:
    return sum((-1) ** p * count for p, count in enumerate(cx.f_vector))


def reduced_betti(cx: SimplicialComplex) -> tuple[int, ...]:
    """Reduced rational Betti numbers, trailing zeros stripped.

    Contractible complexes therefore report ().  The empty complex (every
    relation longer than n) also reports (); its one unit of reduced
    homology sits in degree -1 and is exposed via is_empty instead.
    """
    if cx.is_empty:
        return ()
    f = cx.f_vector
    # rank of the augmentation C_0 -> K is 1 once there is a vertex
    ranks = [1] + [linalg.rank(b) for b in cx.boundaries] + [0]
    betti = [f[p] - ranks[p] - ranks[p + 1] for p in range(len(f))]
    while betti and betti[-1] == 0:
        betti.pop()
    return tuple(betti)


def rad_power_euler(n: int, power: int) -> int:
    """Euler characteristic of the relation complex of the rad^power algebra:
    `power` when it divides n, and 0 otherwise."""
    if n < 2 or power < 1:
        raise ValueError("need n >= 2 and power >= 1")
    return power if n % power == 0 else 0


def boundary_squares_to_zero(cx: SimplicialComplex) -> bool:
    for p in range(1, len(cx.boundaries)):
        if not linalg.is_zero(linalg.matmul(cx.boundaries[p - 1], cx.boundaries[p])):
            return False
    return True


def report(cx: SimplicialComplex) -> dict:
    return {
        "f_vector": list(cx.f_vector),
        "euler": euler_characteristic(cx),
        "reduced_betti": list(reduced_betti(cx)),
        "empty": cx.is_empty,
    }


def to_off(cx: SimplicialComplex) -> str:
    """OFF-style text dump: vertices on the unit circle, then one line per
    simplex of dimension >= 1 (count followed by vertex indices)."""
    nv = len(cx.vertices)
    faces = [s for p in range(1, len(cx.simplices)) for s in cx.simplices[p]]
    lines = ["OFF", f"{nv} {len(faces)} 0"]
    for i in range(nv):
        angle = 2 * math.pi * i / nv if nv else 0.0
        lines.append(f"{math.cos(angle):.6f} {math.sin(angle):.6f} 0.000000")
    for s in faces:
        lines.append(" ".join([str(len(s))] + [str(i) for i in s]))
    return "\n".join(lines) + "\n"
