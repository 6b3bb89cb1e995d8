import pytest

from nakayama import algebra_from_kupisch, radical_power_algebra, validate
from nakayama.harness import SweepConfig, enumerate_kupisch
from nakayama.resolution import (
    build,
    gustafson,
    leaves,
    rad_power_closed_form,
    to_dot,
)


def test_gustafson_examples(lambda1, lambda2):
    assert gustafson(lambda1, 1) == 4
    assert gustafson(lambda2, 5) == 3
    semisimple3 = algebra_from_kupisch((1, 1, 1))
    assert [gustafson(semisimple3, i) for i in (1, 2, 3)] == [2, 3, 1]


def test_gustafson_range_check(lambda1):
    with pytest.raises(ValueError):
        gustafson(lambda1, 6)


def test_build_lambda1(lambda1):
    rq = build(lambda1)
    assert rq.f == (4, 4, 5, 3, 3)
    assert len(rq.components) == 1
    assert rq.components[0].cycle == (3, 5)
    assert rq.components[0].weight == 1


def test_build_lambda2(lambda2):
    rq = build(lambda2)
    assert {i: rq.target(i) for i in range(1, 6)} == {1: 4, 2: 1, 3: 2, 4: 2, 5: 3}
    assert len(rq.components) == 1
    assert rq.components[0].cycle == (1, 4, 2)
    assert rq.components[0].weight == 2


def test_build_lambda3(lambda3):
    rq = build(lambda3)
    assert [sorted(c.vertices) for c in rq.components] == [[1, 3], [2, 4]]
    assert rq.weights == (1, 1)
    assert [c.cycle for c in rq.components] == [(1, 3), (2, 4)]


def test_leaves_examples(lambda1, lambda2, lambda3):
    assert leaves(build(lambda2)) == {5}
    assert leaves(build(lambda1)) == {1, 2}
    assert leaves(build(lambda3)) == frozenset()


def test_rad_power_closed_form_examples():
    assert rad_power_closed_form(4, 2) == (2, 1)
    assert rad_power_closed_form(5, 3) == (1, 3)
    assert rad_power_closed_form(6, 6) == (6, 1)


def test_rad_power_closed_form_matches_build():
    for n in range(2, 9):
        for power in range(1, 9):
            rq = build(radical_power_algebra(n, power))
            assert len(set(rq.weights)) == 1
            assert (len(rq.components), rq.weights[0]) == rad_power_closed_form(n, power)


def test_structure_over_small_sweep():
    for algebra in enumerate_kupisch(SweepConfig(n_min=2, n_max=5, c_max=5)):
        rq = build(algebra)
        n = algebra.n
        # one cycle per component, weight integrality, equal weights,
        # and nodes in bijection with relations
        assert sum(len(c.vertices) for c in rq.components) == n
        for comp in rq.components:
            assert set(comp.cycle) <= comp.vertices
            assert sum(algebra.kupisch[v - 1] for v in comp.cycle) == comp.weight * n
        assert len(set(rq.weights)) == 1
        assert n - len(leaves(rq)) == len(algebra.relations)


def test_cycle_detection_agrees_with_iteration():
    # a vertex lies on a cycle iff iterating f from it returns to it
    for algebra in enumerate_kupisch(SweepConfig(n_min=2, n_max=4, c_max=4)):
        rq = build(algebra)
        on_cycle = set()
        for start in range(1, algebra.n + 1):
            seen = set()
            v = start
            while v not in seen:
                seen.add(v)
                v = rq.target(v)
            if v == start:
                on_cycle.add(start)
        assert on_cycle == set(rq.cycle_vertices)


def test_dot_output(lambda1):
    dot = to_dot(build(lambda1))
    assert dot.startswith("digraph resolution_quiver {")
    assert "// component 1: weight 1" in dot
    assert "  1 -> 4;" in dot
    assert "  3 -> 5 [style=bold];" in dot
    assert "  5 -> 3 [style=bold];" in dot
    assert dot == to_dot(build(lambda1))


def test_dot_multiple_components(lambda3):
    dot = to_dot(build(lambda3))
    assert "// component 1: weight 1" in dot
    assert "// component 2: weight 1" in dot


def test_weight_failure_is_internal_error():
    rq = build(validate(4, [(1, 2), (2, 2), (3, 2), (4, 2)]))
    assert rq.weights == (1, 1)  # sanity: the assertion path stays silent on valid input
