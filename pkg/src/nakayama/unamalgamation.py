"""Unamalgamation: removing a leaf of the resolution quiver.

If vertex j is a leaf of the resolution quiver, the endomorphism algebra of
the sum of the other projectives is again a Nakayama algebra, on a cycle
with one vertex fewer.  Combinatorially (after rotating labels so the leaf
is n): delete every occurrence of the letter x_n from each relation word,
and prepend x_{n-1} to a relation that started at n.  The resulting list
can be redundant; dropping the redundant words gives the new algebra.

The construction preserves the resolution quiver (minus the leaf), the
common component weight, the reduced homology of the relation complex, and
changes the global dimension by at most two.  `check_properties` verifies
all four facts on one step; `reduce_fully` iterates to a leafless algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import relation_complex, resolution
from .algebra import (
    AlgebraError,
    NakayamaAlgebra,
    ProjDim,
    Relation,
    global_dimension,
    mod1,
    validate,
)


class NotALeafError(AlgebraError):
    code = "not-a-leaf"


class TooSmallError(AlgebraError):
    code = "too-small"


def relabel_map(n: int, leaf: int) -> tuple[int, ...]:
    """Rotation of 1..n sending the leaf to n (entry i-1 is the new name of i)."""
    return tuple(mod1(i - leaf + n, n) for i in range(1, n + 1))


def reindex_algebra(algebra: NakayamaAlgebra, leaf: int) -> NakayamaAlgebra:
    phi = relabel_map(algebra.n, leaf)
    return validate(
        algebra.n, [(phi[rel.start - 1], rel.length) for rel in algebra.relations]
    )


def delete_last_arrow(rel: Relation, n: int) -> Relation:
    """Image of one relation word under deleting all occurrences of x_n,
    prepending x_{n-1} when the word starts at n; lives on the (n-1)-cycle."""
    first = (n - rel.start) % n
    occurrences = 0 if first >= rel.length else (rel.length - 1 - first) // n + 1
    if rel.start == n:
        return Relation(n - 1, rel.length - occurrences + 1)
    return Relation(rel.start, rel.length - occurrences)


def eliminate_redundant(relations, n: int) -> tuple[tuple[Relation, ...], tuple[tuple[Relation, Relation], ...]]:
    """Drop every relation that contains another one as a cyclic subword.

    The survivors are exactly the minimal words, so the outcome does not
    depend on the order of deletion.  Returns (kept, eliminated) where each
    eliminated entry carries a surviving witness subword.
    """
    rels = [r if isinstance(r, Relation) else Relation(*r) for r in relations]
    unique: list[Relation] = []
    for r in rels:
        if r not in unique:
            unique.append(r)
    minimal = [
        r for r in unique if not any(o != r and r.contains(o, n) for o in unique)
    ]
    kept_first = set()
    eliminated = []
    for r in rels:
        if r in minimal and r not in kept_first:
            kept_first.add(r)
            continue
        if r in minimal:
            eliminated.append((r, r))  # literal duplicate of a kept word
        else:
            witness = min(
                (o for o in minimal if o != r and r.contains(o, n)),
                key=lambda o: (o.length, o.start),
            )
            eliminated.append((r, witness))
    return tuple(sorted(minimal)), tuple(eliminated)


@dataclass(frozen=True)
class UnamalgamationStep:
    input: NakayamaAlgebra
    leaf: int
    relabel: tuple[int, ...]
    raw_relations: tuple[Relation, ...]  # index-parallel to input.relations
    output: NakayamaAlgebra
    eliminated: tuple[tuple[Relation, Relation], ...]

    def to_dict(self) -> dict:
        return {
            "leaf": self.leaf,
            "relabel": list(self.relabel),
            "raw_relations": [[r.start, r.length] for r in self.raw_relations],
            "output": self.output.to_dict(),
            "eliminated": [
                {"relation": [z.start, z.length], "witness": [w.start, w.length]}
                for z, w in self.eliminated
            ],
        }


def unamalgamate(algebra: NakayamaAlgebra, leaf: int) -> UnamalgamationStep:
    rq = resolution.build(algebra)
    if leaf not in resolution.leaves(rq):
        raise NotALeafError(f"vertex {leaf} is a node of the resolution quiver, not a leaf")
    if algebra.n - 1 < 2:
        raise TooSmallError(f"cannot drop a vertex from a quiver of size {algebra.n}")
    n = algebra.n
    phi = relabel_map(n, leaf)
    reindexed = [Relation(phi[rel.start - 1], rel.length) for rel in algebra.relations]
    raw = tuple(delete_last_arrow(rel, n) for rel in reindexed)
    kept, eliminated = eliminate_redundant(raw, n - 1)
    return UnamalgamationStep(
        input=algebra,
        leaf=leaf,
        relabel=phi,
        raw_relations=raw,
        output=validate(n - 1, kept),
        eliminated=eliminated,
    )


@dataclass(frozen=True)
class AlgebraSummary:
    quiver: resolution.ResolutionQuiver
    betti: tuple[int, ...]
    complex_empty: bool
    gldim: ProjDim


def summarize(algebra: NakayamaAlgebra) -> AlgebraSummary:
    cx = relation_complex.build_complex(algebra)
    return AlgebraSummary(
        quiver=resolution.build(algebra),
        betti=relation_complex.reduced_betti(cx),
        complex_empty=cx.is_empty,
        gldim=global_dimension(algebra),
    )


@dataclass(frozen=True)
class PropertyReport:
    step: UnamalgamationStep
    quiver_match: bool
    weight_match: bool
    betti_match: bool
    gldim_sandwich: bool
    input_gldim: ProjDim
    output_gldim: ProjDim

    @property
    def all_ok(self) -> bool:
        return self.quiver_match and self.weight_match and self.betti_match and self.gldim_sandwich

    def to_dict(self) -> dict:
        return {
            **self.step.to_dict(),
            "checks": {
                "quiver": self.quiver_match,
                "weight": self.weight_match,
                "betti": self.betti_match,
                "gldim": self.gldim_sandwich,
            },
        }


def check_properties(
    algebra: NakayamaAlgebra,
    leaf: int,
    input_summary: AlgebraSummary | None = None,
) -> PropertyReport:
    """Verify, on one unamalgamation step, that the smaller algebra keeps the
    resolution quiver (minus the leaf), the weight, the reduced Betti numbers
    of the relation complex, and a global dimension within two."""
    step = unamalgamate(algebra, leaf)
    before = input_summary if input_summary is not None else summarize(algebra)
    after = summarize(step.output)

    phi = step.relabel
    quiver_match = all(
        after.quiver.target(phi[i - 1]) == phi[before.quiver.target(i) - 1]
        for i in range(1, algebra.n + 1)
        if i != leaf
    )
    weight_match = sorted(before.quiver.weights) == sorted(after.quiver.weights)
    betti_match = (before.betti, before.complex_empty) == (after.betti, after.complex_empty)

    g_in, g_out = before.gldim, after.gldim
    if g_in.is_finite != g_out.is_finite:
        gldim_sandwich = False
    elif g_in.is_finite:
        gldim_sandwich = g_out.value <= g_in.value <= g_out.value + 2
    else:
        gldim_sandwich = True
    return PropertyReport(
        step=step,
        quiver_match=quiver_match,
        weight_match=weight_match,
        betti_match=betti_match,
        gldim_sandwich=gldim_sandwich,
        input_gldim=g_in,
        output_gldim=g_out,
    )


@dataclass(frozen=True)
class ReductionResult:
    initial: NakayamaAlgebra
    steps: tuple[UnamalgamationStep, ...]
    terminal: NakayamaAlgebra | None
    terminal_kupisch: tuple[int, ...]

    @property
    def collapsed_to_point(self) -> bool:
        return self.terminal is None

    @property
    def semisimple(self) -> bool:
        return all(c == 1 for c in self.terminal_kupisch)

    def to_dict(self) -> dict:
        return {
            "initial": self.initial.to_dict(),
            "steps": [step.to_dict() for step in self.steps],
            "terminal": None if self.terminal is None else self.terminal.to_dict(),
            "terminal_kupisch": list(self.terminal_kupisch),
            "semisimple": self.semisimple,
        }


def reduce_fully(algebra: NakayamaAlgebra) -> ReductionResult:
    """Remove the minimal leaf until the resolution quiver is leafless.

    A two-vertex algebra with a leaf cannot stay inside the n >= 2 data
    model: dropping the leaf leaves a single projective P_v whose
    endomorphism algebra is K[x]/(x^ceil(c_v/2)) (the nonzero paths v -> v
    have the even lengths below c_v).  That last collapse is recorded via
    terminal_kupisch of length one, with terminal = None.
    """
    current = algebra
    steps: list[UnamalgamationStep] = []
    while True:
        rq = resolution.build(current)
        lvs = resolution.leaves(rq)
        if not lvs:
            return ReductionResult(
                initial=algebra,
                steps=tuple(steps),
                terminal=current,
                terminal_kupisch=current.kupisch,
            )
        if current.n == 2:
            (node,) = set(rq.f)
            c_node = current.kupisch[node - 1]
            return ReductionResult(
                initial=algebra,
                steps=tuple(steps),
                terminal=None,
                terminal_kupisch=((c_node + 1) // 2,),
            )
        step = unamalgamate(current, min(lvs))
        steps.append(step)
        current = step.output
