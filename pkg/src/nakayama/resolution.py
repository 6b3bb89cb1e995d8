"""Resolution quiver of a Nakayama algebra.

The resolution quiver R has the same vertices 1..n as the cycle and one
arrow i -> f(i), where f(i) = i + c_i mod n (Gustafson's function): P_i has
socle S_{f(i)-1}.  Every vertex has out-degree one, so each connected
component contains exactly one oriented cycle, and the sum of the c_i over
a cycle is divisible by n; the quotient is the weight of the component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import NakayamaAlgebra, mod1, radical_power_algebra


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    cycle: tuple[int, ...]
    weight: int


@dataclass(frozen=True)
class ResolutionQuiver:
    n: int
    f: tuple[int, ...]
    components: tuple[Component, ...]

    def target(self, i: int) -> int:
        return self.f[i - 1]

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(comp.weight for comp in self.components)

    @property
    def cycle_vertices(self) -> frozenset[int]:
        return frozenset(v for comp in self.components for v in comp.cycle)


def gustafson(algebra: NakayamaAlgebra, i: int) -> int:
    """Target of the unique arrow at i, congruent to i + c_i mod n."""
    if not 1 <= i <= algebra.n:
        raise ValueError(f"vertex {i} outside 1..{algebra.n}")
    return mod1(i + algebra.kupisch[i - 1], algebra.n)


def build(algebra: NakayamaAlgebra) -> ResolutionQuiver:
    n = algebra.n
    c = algebra.kupisch
    f = tuple(gustafson(algebra, i) for i in range(1, n + 1))

    # union-find over the edges {i, f(i)}
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, n + 1):
        a, b = find(i), find(f[i - 1])
        if a != b:
            parent[max(a, b)] = min(a, b)

    groups: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        groups.setdefault(find(i), []).append(i)

    components = []
    for root in sorted(groups):
        vertices = groups[root]
        # walk f from any vertex until a repeat; the tail of the walk is the cycle
        seen = {}
        v = vertices[0]
        order = []
        while v not in seen:
            seen[v] = len(order)
            order.append(v)
            v = f[v - 1]
        cycle = order[seen[v]:]
        start = cycle.index(min(cycle))
        cycle = tuple(cycle[start:] + cycle[:start])
        total = sum(c[v - 1] for v in cycle)
        if total % n != 0:
            raise AssertionError(
                f"cycle {cycle} has projective length sum {total}, not divisible by n={n}"
            )
        components.append(
            Component(vertices=frozenset(vertices), cycle=cycle, weight=total // n)
        )
    return ResolutionQuiver(n=n, f=f, components=tuple(components))


def leaves(rq: ResolutionQuiver) -> frozenset[int]:
    """Vertices that are not the target of any arrow."""
    return frozenset(range(1, rq.n + 1)) - frozenset(rq.f)


def rad_power_closed_form(n: int, power: int) -> tuple[int, int]:
    """(component count, weight) of the resolution quiver of the rad^power
    algebra on the n-cycle: (gcd(n, power), power / gcd(n, power))."""
    if n < 2 or power < 1:
        raise ValueError("need n >= 2 and power >= 1")
    g = math.gcd(n, power)
    return g, power // g


def rad_power_build(n: int, power: int) -> ResolutionQuiver:
    return build(radical_power_algebra(n, power))


def to_dot(rq: ResolutionQuiver) -> str:
    """DOT digraph; cycle edges bold, one weight comment line per component."""
    lines = ["digraph resolution_quiver {"]
    for comp in rq.components:
        lines.append(f"  // component {min(comp.vertices)}: weight {comp.weight}")
    for i in range(1, rq.n + 1):
        lines.append(f'  {i} [label="{i}"];')
    cycle_vertices = rq.cycle_vertices
    for i in range(1, rq.n + 1):
        style = " [style=bold]" if i in cycle_vertices else ""
        lines.append(f"  {i} -> {rq.target(i)}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
