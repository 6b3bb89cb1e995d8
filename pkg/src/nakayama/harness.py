"""Exhaustive verification over all Nakayama algebras up to a size bound.

Algebras are enumerated through their Kupisch series: the valid series are
exactly the tuples in [1, c_max]^n with c_{i+1} >= c_i - 1 cyclically.
For each algebra, `verify` computes every invariant in the package and
records named checks:

  A       finite global dimension iff the resolution quiver has exactly one
          component and that component has weight one
  B       finite global dimension iff the relation complex has Euler
          characteristic one
  Bprime  finite global dimension iff the relation complex is contractible,
          checked as: vanishing reduced Betti numbers plus full reduction
          ending in a semisimple algebra
  C       Euler characteristic equals the number of weight-one components
  HCvsBetti            dim HC_p equals the (p-1)-st reduced Betti number
  UnamalgamationProps  the four leaf-removal properties at every leaf
  SameWeight           all components carry the same weight

Structural self-checks (boundary squares vanish, Euler identities, the
Kupisch round-trip, leaf/relation counts) always run alongside.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from . import cyclic, relation_complex, resolution, unamalgamation
from .algebra import (
    AlgebraClass,
    NakayamaAlgebra,
    ProjDim,
    algebra_from_kupisch,
    global_dimension,
    relations_from_kupisch,
)

THEOREM_CHECKS = ("A", "B", "Bprime", "C", "HCvsBetti", "UnamalgamationProps", "SameWeight")
STRUCTURAL_CHECKS = (
    "RoundTrip",
    "EulerPoincare",
    "BoundarySquare",
    "CyclicSquare",
    "HCEulerIdentity",
    "NodesEqualRelations",
)
ALL_CLASSES = frozenset(AlgebraClass)


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 2
    n_max: int = 4
    c_max: int = 4
    classes: frozenset[AlgebraClass] = ALL_CLASSES
    checks: tuple[str, ...] = THEOREM_CHECKS
    # resume cursor: skip every series up to and including (n, kupisch)
    start_after: tuple[int, tuple[int, ...]] | None = None

    def __post_init__(self):
        if self.n_min < 2 or self.c_max < 1:
            raise ValueError("need n_min >= 2 and c_max >= 1")
        unknown = set(self.checks) - set(THEOREM_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")

    def to_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "c_max": self.c_max,
            "classes": sorted(c.value for c in self.classes),
            "checks": list(self.checks),
        }


def kupisch_series(n: int, c_max: int) -> Iterator[tuple[int, ...]]:
    """All valid Kupisch series of length n with entries <= c_max, in
    lexicographic order."""

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            if prefix[0] >= prefix[-1] - 1:
                yield prefix
            return
        lo = max(1, prefix[-1] - 1) if prefix else 1
        for v in range(lo, c_max + 1):
            yield from extend(prefix + (v,))

    yield from extend(())


def series_class(c: tuple[int, ...]) -> AlgebraClass:
    ones = sum(1 for ci in c if ci == 1)
    if ones == 0:
        return AlgebraClass.CYCLIC
    if ones == 1:
        return AlgebraClass.LINEAR
    return AlgebraClass.PRODUCT_OF_LINEAR


def enumerate_kupisch(config: SweepConfig) -> Iterator[NakayamaAlgebra]:
    for n in range(config.n_min, config.n_max + 1):
        if config.start_after is not None and n < config.start_after[0]:
            continue
        for c in kupisch_series(n, config.c_max):
            if config.start_after is not None and (n, c) <= config.start_after:
                continue
            if series_class(c) in config.classes:
                yield algebra_from_kupisch(c)


@dataclass
class AlgebraVerdict:
    algebra: NakayamaAlgebra
    kupisch: tuple[int, ...]
    gldim: ProjDim
    component_count: int
    weights: tuple[int, ...]
    leaves: tuple[int, ...]
    chi: int
    f_vector: tuple[int, ...]
    betti: tuple[int, ...]
    complex_empty: bool
    hc_dims: tuple[int, ...]
    hc_euler: int
    basis_sizes: tuple[int, ...]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def failed(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra.to_dict(),
            "kupisch": list(self.kupisch),
            "class": self.algebra.algebra_class.value,
            "gldim": self.gldim.value,
            "components": self.component_count,
            "weights": list(self.weights),
            "leaves": list(self.leaves),
            "chi": self.chi,
            "f_vector": list(self.f_vector),
            "reduced_betti": list(self.betti),
            "complex_empty": self.complex_empty,
            "hc_dims": list(self.hc_dims),
            "hc_euler": self.hc_euler,
            "basis_sizes": list(self.basis_sizes),
            "checks": dict(self.checks),
        }


def verify(algebra: NakayamaAlgebra, checks: tuple[str, ...] = THEOREM_CHECKS) -> AlgebraVerdict:
    """Compute every invariant of one algebra and test the requested named
    checks plus all structural self-checks.  Failures become entries in the
    verdict, never exceptions."""
    rq = resolution.build(algebra)
    cx = relation_complex.build_complex(algebra)
    cc = cyclic.build_cyclic_complex(algebra)
    gldim = global_dimension(algebra)

    chi = relation_complex.euler_characteristic(cx)
    betti = relation_complex.reduced_betti(cx)
    hc_dims = cyclic.hc_dimensions(algebra, cc)
    hc_eu = cyclic.hc_euler(algebra, cc)
    weights = rq.weights
    lvs = tuple(sorted(resolution.leaves(rq)))
    finite = gldim.is_finite

    verdict = AlgebraVerdict(
        algebra=algebra,
        kupisch=algebra.kupisch,
        gldim=gldim,
        component_count=len(rq.components),
        weights=weights,
        leaves=lvs,
        chi=chi,
        f_vector=cx.f_vector,
        betti=betti,
        complex_empty=cx.is_empty,
        hc_dims=hc_dims,
        hc_euler=hc_eu,
        basis_sizes=cc.basis_sizes,
    )
    results = verdict.checks

    weight_one = sum(1 for w in weights if w == 1)
    if "A" in checks:
        results["A"] = finite == (len(weights) == 1 and weights[0] == 1)
    if "B" in checks:
        results["B"] = finite == (chi == 1)
    if "C" in checks:
        results["C"] = chi == weight_one
    if "SameWeight" in checks:
        results["SameWeight"] = len(set(weights)) == 1
    if "HCvsBetti" in checks:
        expected = [1 if cx.is_empty else 0] + [
            betti[p - 1] if p - 1 < len(betti) else 0 for p in range(1, algebra.n)
        ]
        results["HCvsBetti"] = list(hc_dims) == expected
    if "Bprime" in checks:
        reduction = unamalgamation.reduce_fully(algebra)
        if finite:
            results["Bprime"] = (
                not any(betti) and not cx.is_empty and reduction.semisimple
            )
        else:
            results["Bprime"] = any(betti) or chi != 1
    if "UnamalgamationProps" in checks:
        ok = True
        if algebra.n >= 3:
            summary = unamalgamation.AlgebraSummary(
                quiver=rq, betti=betti, complex_empty=cx.is_empty, gldim=gldim
            )
            for leaf in lvs:
                report = unamalgamation.check_properties(algebra, leaf, summary)
                ok = ok and report.all_ok and raw_complex_matches(report.step)
        results["UnamalgamationProps"] = ok

    results["RoundTrip"] = relations_from_kupisch(algebra.kupisch) == algebra.relations
    if cx.is_empty:
        results["EulerPoincare"] = chi == 0
    else:
        results["EulerPoincare"] = chi == 1 + sum((-1) ** p * b for p, b in enumerate(betti))
    results["BoundarySquare"] = relation_complex.boundary_squares_to_zero(cx)
    results["CyclicSquare"] = cyclic.differential_squares_to_zero(cc)
    alt_sizes = sum((-1) ** p * s for p, s in enumerate(cc.basis_sizes))
    results["HCEulerIdentity"] = hc_eu == 1 - chi and hc_eu == alt_sizes
    results["NodesEqualRelations"] = algebra.n - len(lvs) == len(algebra.relations)
    return verdict


def raw_complex_matches(step: unamalgamation.UnamalgamationStep) -> bool:
    """The complex built from the raw (possibly redundant) image relations
    must be simplex-for-simplex the relation complex of the input, under the
    index bijection between old and new relations."""
    n = step.input.n
    old_idx = [i for i, r in enumerate(step.input.relations) if r.length <= n]
    new_idx = [i for i, r in enumerate(step.raw_relations) if r.length <= n - 1]
    if old_idx != new_idx:
        return False
    old = relation_complex.complex_from_interiors(
        n, [relation_complex.interior(step.input.relations[i], n) for i in old_idx]
    )
    new = relation_complex.complex_from_interiors(
        n - 1, [relation_complex.interior(step.raw_relations[i], n - 1) for i in new_idx]
    )
    return old.simplices == new.simplices


@dataclass
class TheoremReport:
    config: SweepConfig
    verdicts: list[AlgebraVerdict]

    @property
    def counterexamples(self) -> list[AlgebraVerdict]:
        return [v for v in self.verdicts if not v.ok]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def totals(self) -> dict[tuple[int, str], int]:
        out: dict[tuple[int, str], int] = {}
        for v in self.verdicts:
            key = (v.algebra.n, v.algebra.algebra_class.value)
            out[key] = out.get(key, 0) + 1
        return out

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "algebra_count": len(self.verdicts),
            "totals": [
                {"n": n, "class": cls, "count": count}
                for (n, cls), count in sorted(self.totals().items())
            ],
            "counterexamples": [
                {"algebra": v.algebra.to_dict(), "failed": v.failed}
                for v in self.counterexamples
            ],
            "ok": self.ok,
        }


def _verify_chunk(args: tuple[tuple[tuple[int, ...], ...], tuple[str, ...]]) -> list[AlgebraVerdict]:
    series_chunk, checks = args
    return [verify(algebra_from_kupisch(c), checks) for c in series_chunk]


def sweep(config: SweepConfig, workers: int = 1) -> TheoremReport:
    """Verify every enumerated algebra; the verdict order is the enumeration
    order regardless of worker count."""
    algebras = list(enumerate_kupisch(config))
    if workers <= 1 or len(algebras) < 2 * workers:
        verdicts = [verify(a, config.checks) for a in algebras]
    else:
        series = [a.kupisch for a in algebras]
        chunk = max(1, len(series) // (4 * workers))
        chunks = [tuple(series[i:i + chunk]) for i in range(0, len(series), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_verify_chunk, [(ch, config.checks) for ch in chunks])
        verdicts = [v for part in parts for v in part]
    return TheoremReport(config=config, verdicts=verdicts)


def default_workers() -> int:
    raw = os.environ.get("NAKAYAMA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


CSV_COLUMNS = (
    "n", "kupisch", "gldim", "components", "weight",
    "chi", "betti", "hc_dims", "verdicts",
)


def to_csv(report: TheoremReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for v in report.verdicts:
        weights = set(v.weights)
        writer.writerow(
            [
                v.algebra.n,
                " ".join(str(c) for c in v.kupisch),
                "inf" if not v.gldim.is_finite else str(v.gldim.value),
                v.component_count,
                str(v.weights[0]) if len(weights) == 1 else "|".join(str(w) for w in v.weights),
                v.chi,
                " ".join(str(b) for b in v.betti),
                " ".join(str(d) for d in v.hc_dims),
                "ok" if v.ok else ";".join(v.failed),
            ]
        )
    return buf.getvalue()


def to_json(report: TheoremReport) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
