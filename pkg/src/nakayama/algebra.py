"""Core data model for Nakayama algebras.

A Nakayama algebra of order n is the path algebra of the oriented n-cycle
(vertices 1..n, arrow x_i going i -> i+1, indices mod n) modulo a nonempty
irredundant set of monomial relations.  A relation is stored as
(start, length): the path x_start x_{start+1} ... of `length` arrows.
Length-1 relations kill an arrow, which disconnects the cycle; depending on
how many arrows die the algebra is cyclic, linear, or a product of linear
pieces.

An equivalent encoding is the Kupisch series (c_1, ..., c_n) where c_i is
the composition length of the i-th indecomposable projective P_i; both
directions of the translation live here, as do syzygies and (global)
projective dimension of the uniserial modules.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property


class AlgebraError(ValueError):
    """Base class for invalid algebra data; `code` is machine-readable."""

    code = "invalid-algebra"


class RedundantRelationError(AlgebraError):
    code = "redundant-relation"


class DuplicateStartError(AlgebraError):
    code = "duplicate-start"


class EmptyRelationSetError(AlgebraError):
    code = "empty-relation-set"


class InvalidKupischError(AlgebraError):
    code = "invalid-kupisch"


class ModuleTooLongError(AlgebraError):
    code = "module-too-long"


class AlgebraClass(enum.Enum):
    CYCLIC = "cyclic"
    LINEAR = "linear"
    PRODUCT_OF_LINEAR = "product-of-linear"


def mod1(x: int, n: int) -> int:
    """Reduce x into 1..n."""
    return (x - 1) % n + 1


@dataclass(frozen=True, order=True)
class Relation:
    """Monomial relation: the path of `length` arrows starting at arrow `start`.

    Its arrow interval is {start, start+1, ..., start+length-1} taken mod n.
    Lengths greater than n are legal (the path wraps around the cycle more
    than once); they arise from valid Kupisch series and must round-trip.
    """

    start: int
    length: int

    def arrows(self, n: int) -> tuple[int, ...]:
        return tuple(mod1(self.start + t, n) for t in range(self.length))

    def contains(self, other: "Relation", n: int) -> bool:
        """Is `other` a subword of this relation, cyclically?

        The subwords of length l of a path of length L start at offsets
        0..L-l, so containment holds iff (other.start - start) mod n fits
        in that window.  For L - l >= n every start fits, which is right:
        such a path passes every arrow with room to spare.
        """
        if other.length > self.length:
            return False
        return (other.start - self.start) % n <= self.length - other.length


@dataclass(frozen=True)
class NakayamaAlgebra:
    n: int
    relations: tuple[Relation, ...]
    algebra_class: AlgebraClass

    @cached_property
    def kupisch(self) -> tuple[int, ...]:
        return kupisch_from_relations(self)

    @property
    def is_semisimple(self) -> bool:
        return all(c == 1 for c in self.kupisch)

    def to_dict(self) -> dict:
        return {"n": self.n, "relations": [[r.start, r.length] for r in self.relations]}

    def __str__(self) -> str:
        rels = ",".join(f"({r.start},{r.length})" for r in self.relations)
        return f"NakayamaAlgebra(n={self.n}, relations=[{rels}], {self.algebra_class.value})"


def classify(relations: tuple[Relation, ...]) -> AlgebraClass:
    killed_arrows = sum(1 for r in relations if r.length == 1)
    if killed_arrows == 0:
        return AlgebraClass.CYCLIC
    if killed_arrows == 1:
        return AlgebraClass.LINEAR
    return AlgebraClass.PRODUCT_OF_LINEAR


def validate(n: int, relations) -> NakayamaAlgebra:
    """Check and normalize raw relation data into a NakayamaAlgebra.

    Raises EmptyRelationSetError for an empty relation set (the path algebra
    of the full cycle is infinite dimensional), DuplicateStartError for two
    relations at one start vertex, and RedundantRelationError when one
    relation is a cyclic subword of another.
    """
    if n < 2:
        raise AlgebraError(f"quiver size must be at least 2, got {n}")
    rels = tuple(sorted(r if isinstance(r, Relation) else Relation(*r) for r in relations))
    if not rels:
        raise EmptyRelationSetError("a Nakayama algebra needs at least one relation")
    for rel in rels:
        if not 1 <= rel.start <= n:
            raise AlgebraError(f"relation start {rel.start} outside 1..{n}")
        if rel.length < 1:
            raise AlgebraError(f"relation length must be positive, got {rel.length}")
    starts = [r.start for r in rels]
    if len(set(starts)) != len(starts):
        dup = next(s for s in starts if starts.count(s) > 1)
        raise DuplicateStartError(f"two relations start at vertex {dup}")
    for a in rels:
        for b in rels:
            if a is not b and a.contains(b, n):
                raise RedundantRelationError(
                    f"relation ({a.start},{a.length}) contains ({b.start},{b.length})"
                )
    return NakayamaAlgebra(n=n, relations=rels, algebra_class=classify(rels))


def radical_power_algebra(n: int, power: int) -> NakayamaAlgebra:
    """The cycle algebra with rad^power = 0: one length-`power` relation per vertex."""
    return validate(n, [(i, power) for i in range(1, n + 1)])


def kupisch_from_relations(algebra: NakayamaAlgebra) -> tuple[int, ...]:
    """Projective lengths c_j = |P_j|.

    The composition series of P_j runs forward from j until it completes a
    relation; relation (k, l) is completed after ((k - j) mod n) + l arrows,
    so c_j is the minimum of that over all relations.
    """
    n = algebra.n
    return tuple(
        min((rel.start - j) % n + rel.length for rel in algebra.relations)
        for j in range(1, n + 1)
    )


def is_valid_kupisch(c) -> bool:
    n = len(c)
    if n < 2 or any(ci < 1 for ci in c):
        return False
    return all(c[(i + 1) % n] >= c[i] - 1 for i in range(n))


def relations_from_kupisch(c) -> tuple[Relation, ...]:
    """Minimal relations of the algebra with Kupisch series c.

    The composition series of each projective is a relation; P_i gives a
    minimal one exactly when |P_i| <= |P_{i+1}|.
    """
    c = tuple(c)
    if not is_valid_kupisch(c):
        raise InvalidKupischError(f"not a Kupisch series: {list(c)}")
    n = len(c)
    return tuple(
        Relation(i + 1, c[i]) for i in range(n) if c[i] <= c[(i + 1) % n]
    )


def algebra_from_kupisch(c) -> NakayamaAlgebra:
    return validate(len(c), relations_from_kupisch(c))


@dataclass(frozen=True)
class UniserialModule:
    """Uniserial module with composition series S_top, S_{top+1}, ..., mod n."""

    top: int
    length: int


@dataclass(frozen=True)
class ProjDim:
    """Projective dimension: a nonnegative integer or infinity (value None)."""

    value: int | None

    @classmethod
    def finite(cls, d: int) -> "ProjDim":
        return cls(d)

    @classmethod
    def infinite(cls) -> "ProjDim":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "infinite" if self.value is None else f"finite ({self.value})"


def _check_module(algebra: NakayamaAlgebra, m: UniserialModule) -> None:
    if not 1 <= m.top <= algebra.n:
        raise AlgebraError(f"module top {m.top} outside 1..{algebra.n}")
    if m.length < 1:
        raise AlgebraError(f"module length must be positive, got {m.length}")
    if m.length > algebra.kupisch[m.top - 1]:
        raise ModuleTooLongError(
            f"module ({m.top},{m.length}) longer than P_{m.top} "
            f"(length {algebra.kupisch[m.top - 1]})"
        )


def is_projective(algebra: NakayamaAlgebra, m: UniserialModule) -> bool:
    _check_module(algebra, m)
    return m.length == algebra.kupisch[m.top - 1]


def syzygy(algebra: NakayamaAlgebra, m: UniserialModule) -> UniserialModule | None:
    """Kernel of the projective cover P_top ->> M, or None if M is projective.

    P_top has radical series longer than M by c_top - length; the kernel is
    the uniserial module starting where M stops.
    """
    _check_module(algebra, m)
    c_top = algebra.kupisch[m.top - 1]
    if m.length == c_top:
        return None
    return UniserialModule(mod1(m.top + m.length, algebra.n), c_top - m.length)


def projective_dimension(algebra: NakayamaAlgebra, m: UniserialModule) -> ProjDim:
    """Iterate the syzygy map; the state space (top, length) is finite, so a
    revisited state means the resolution never terminates."""
    seen = set()
    current = m
    steps = 0
    while True:
        if is_projective(algebra, current):
            return ProjDim.finite(steps)
        state = (current.top, current.length)
        if state in seen:
            return ProjDim.infinite()
        seen.add(state)
        current = syzygy(algebra, current)
        steps += 1


def global_dimension(algebra: NakayamaAlgebra) -> ProjDim:
    """Max projective dimension over the simple modules S_1..S_n."""
    worst = 0
    for i in range(1, algebra.n + 1):
        pd = projective_dimension(algebra, UniserialModule(i, 1))
        if not pd.is_finite:
            return ProjDim.infinite()
        worst = max(worst, pd.value)
    return ProjDim.finite(worst)
