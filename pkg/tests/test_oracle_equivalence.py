"""Interval-arithmetic projective dimensions against the representation-level
kernel oracle, for every module of every algebra with n <= 4, c_i <= 5."""

from nakayama import UniserialModule, projective_dimension, syzygy
from nakayama.harness import SweepConfig, enumerate_kupisch

import repr_oracle


def test_oracle_on_worked_examples(lambda1, lambda3):
    # kernel of P_4 ->> S_4 is P_5 = (5, 3): one copy of S_5, S_1, S_2
    assert repr_oracle.first_syzygy_dims(lambda1, 4, 1) == (1, 1, 0, 0, 1)
    assert repr_oracle.projective_dimension(lambda1, 4, 1) == 1
    # rad^2 = 0: syzygies shift simples forever
    assert repr_oracle.first_syzygy_dims(lambda3, 1, 1) == (0, 1, 0, 0)
    assert repr_oracle.projective_dimension(lambda3, 1, 1) is None


def test_first_syzygy_matches_interval_formula(lambda1, lambda2):
    for algebra in (lambda1, lambda2):
        c = algebra.kupisch
        for top in range(1, algebra.n + 1):
            for length in range(1, c[top - 1] + 1):
                expected = syzygy(algebra, UniserialModule(top, length))
                got = repr_oracle.first_syzygy_dims(algebra, top, length)
                if expected is None:
                    assert got == (0,) * algebra.n
                else:
                    dims = [0] * algebra.n
                    for j in range(expected.length):
                        dims[(expected.top - 1 + j) % algebra.n] += 1
                    assert got == tuple(dims)


def test_projective_dimensions_match_oracle():
    checked = 0
    for algebra in enumerate_kupisch(SweepConfig(n_min=2, n_max=4, c_max=5)):
        c = algebra.kupisch
        for top in range(1, algebra.n + 1):
            for length in range(1, c[top - 1] + 1):
                fast = projective_dimension(algebra, UniserialModule(top, length))
                slow = repr_oracle.projective_dimension(algebra, top, length)
                assert fast.value == slow, (algebra.kupisch, top, length)
                checked += 1
    assert checked > 1000
