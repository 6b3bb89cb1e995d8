"""Degree-n part of the cyclic chain complex of the radical.

A degree-n chain in homological degree p is a cycle of p+1 composable
radical morphisms between indecomposable projectives whose degrees add up
to n.  Such a cycle is determined by its stations: the p+1 distinct quiver
vertices where the morphisms start, travelling forward around the cycle
exactly once.  The gap g_t from station w_t to the next station is the
length of the connecting path, and the chain is nonzero iff every such
path survives in the algebra: g_t < c_{w_t}.

Because the stations are distinct, the rotation action of Z_{p+1} (with
sign (-1)^p on the generator) is free, so the quotient complex has the
station subsets as a basis.  Each face of the differential merges two
adjacent gaps; the merged morphism dies iff the merged path completes a
relation (g + g' >= c at the merge station).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .algebra import NakayamaAlgebra


@dataclass(frozen=True)
class MorphismCycle:
    """Canonical orbit representative: stations sorted, minimal one first."""

    stations: tuple[int, ...]
    gaps: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.stations) - 1


def station_gaps(stations: tuple[int, ...], n: int) -> tuple[int, ...]:
    p = len(stations) - 1
    return tuple(
        stations[t + 1] - stations[t] if t < p else n - stations[p] + stations[0]
        for t in range(p + 1)
    )


def _is_valid(stations: tuple[int, ...], gaps: tuple[int, ...], c: tuple[int, ...]) -> bool:
    return all(g < c[w - 1] for w, g in zip(stations, gaps))


def basis(algebra: NakayamaAlgebra, p: int) -> list[MorphismCycle]:
    """Orbit basis in degree p: one cycle per (p+1)-subset of vertices whose
    consecutive gaps all carry nonzero paths."""
    if not 0 <= p <= algebra.n - 1:
        raise ValueError(f"degree {p} outside 0..{algebra.n - 1}")
    n, c = algebra.n, algebra.kupisch
    out = []
    for subset in combinations(range(1, n + 1), p + 1):
        gaps = station_gaps(subset, n)
        if _is_valid(subset, gaps, c):
            out.append(MorphismCycle(stations=subset, gaps=gaps))
    return out


def canonicalize(stations: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Rotate a station tuple so its minimal entry comes first.

    Returns (canonical tuple, sign): the class of the input equals sign
    times the class of the canonical representative.  One left-rotation of
    a degree-q tuple costs a sign of (-1)^q, from the generator acting by
    t(f_0,...,f_q) = (-1)^q (f_1,...,f_q,f_0).
    """
    if len(set(stations)) != len(stations):
        raise AssertionError(f"stations must be distinct, got {stations}")
    q = len(stations) - 1
    k = stations.index(min(stations))
    canonical = stations[k:] + stations[:k]
    sign = -1 if (q * k) % 2 else 1
    return canonical, sign


def differential(algebra: NakayamaAlgebra, p: int) -> linalg.Matrix:
    """Matrix of the induced differential from degree p to degree p-1 on the
    orbit bases (rows: degree p-1, columns: degree p).

    Face i < p composes the morphisms at stations w_i, w_{i+1}, dropping
    w_{i+1}; the last face composes around the wrap, dropping w_0 and
    leaving a tuple that starts at w_p, so it picks up one rotation sign on
    top of its (-1)^p face sign.
    """
    source = basis(algebra, p)
    target = basis(algebra, p - 1) if p >= 1 else []
    index = {cycle.stations: i for i, cycle in enumerate(target)}
    matrix = linalg.zero_matrix(len(target), len(source))
    if p == 0:
        return matrix
    c = algebra.kupisch
    for col, cycle in enumerate(source):
        w, g = cycle.stations, cycle.gaps
        for i in range(p + 1):
            if i < p:
                merged_at, merged_gap = w[i], g[i] + g[i + 1]
                faced = w[: i + 1] + w[i + 2:]
            else:
                merged_at, merged_gap = w[p], g[p] + g[0]
                faced = (w[p],) + w[1:p]
            if merged_gap >= c[merged_at - 1]:
                continue  # the composed path completes a relation
            canonical, rot_sign = canonicalize(faced)
            face_sign = -1 if i % 2 else 1
            matrix[index[canonical]][col] += face_sign * rot_sign
    return matrix


@dataclass(frozen=True)
class CyclicComplex:
    n: int
    bases: tuple[tuple[MorphismCycle, ...], ...]
    # differentials[p] maps degree p to degree p-1; differentials[0] == 0
    differentials: tuple[linalg.Matrix, ...]

    @property
    def basis_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)


def build_cyclic_complex(algebra: NakayamaAlgebra) -> CyclicComplex:
    bases = tuple(tuple(basis(algebra, p)) for p in range(algebra.n))
    diffs = tuple(differential(algebra, p) for p in range(algebra.n))
    return CyclicComplex(n=algebra.n, bases=bases, differentials=diffs)


def differential_squares_to_zero(cc: CyclicComplex) -> bool:
    for p in range(2, cc.n):
        prod = linalg.matmul(cc.differentials[p - 1], cc.differentials[p])
        if not linalg.is_zero(prod):
            return False
    return True


def hc_dimensions(algebra: NakayamaAlgebra, cc: CyclicComplex | None = None) -> tuple[int, ...]:
    """dim HC_p of the degree-n slice for p = 0..n-1, over the rationals."""
    if cc is None:
        cc = build_cyclic_complex(algebra)
    sizes = cc.basis_sizes
    ranks = [linalg.rank(cc.differentials[p]) for p in range(cc.n)] + [0]
    return tuple(sizes[p] - ranks[p] - ranks[p + 1] for p in range(cc.n))


def hc_euler(algebra: NakayamaAlgebra, cc: CyclicComplex | None = None) -> int:
    dims = hc_dimensions(algebra, cc)
    return sum((-1) ** p * d for p, d in enumerate(dims))


def report(algebra: NakayamaAlgebra) -> dict:
    cc = build_cyclic_complex(algebra)
    return {
        "hc_dims": list(hc_dimensions(algebra, cc)),
        "hc_euler": hc_euler(algebra, cc),
        "basis_sizes": list(cc.basis_sizes),
    }
