"""Shared fixtures: the worked examples and the 20-space fixture set."""

from __future__ import annotations

from fractions import Fraction

import pytest

from malg import (
    ExtRational,
    make_map,
    make_metric_space,
    make_space,
    random_space,
    trial_rng,
)

FIXTURE_SEED = 404


@pytest.fixture
def s1():
    """Three atoms A={p1,p2}, B={p3}, C={p4} with weights 1/2, 1/3, 0."""
    return make_space(
        ["p1", "p2", "p3", "p4"],
        [["p1", "p2"], ["p3"], ["p4"]],
        [Fraction(1, 2), Fraction(1, 3), 0],
    )


@pytest.fixture
def s2():
    """Two singleton atoms D={q1}, E={q2} with weights 1, 2."""
    return make_space(["q1", "q2"], [["q1"], ["q2"]], [1, 2])


@pytest.fixture
def s3():
    """Two singleton atoms with weights 1 and 2 (constant-map source)."""
    return make_space(["r1", "r2"], [["r1"], ["r2"]], [1, 2])


@pytest.fixture
def phi(s1, s2):
    """p1,p2,p3 -> q1 and p4 -> q2; compression 5/6."""
    return make_map(s1, s2, {"p1": "q1", "p2": "q1", "p3": "q1", "p4": "q2"})


@pytest.fixture
def psi(s2, s1):
    """q1 -> p4 (null atom), q2 -> p1; not inverse-nil-preserving."""
    return make_map(s2, s1, {"q1": "p4", "q2": "p1"})


@pytest.fixture
def s2_metric():
    return make_metric_space(["q1", "q2"], [1, 2], [[0, 1], [1, 0]])


@pytest.fixture
def s3_metric():
    return make_metric_space(["r1", "r2"], [1, 2], [[0, 1], [1, 0]])


def build_fixture_spaces() -> list:
    """Twenty deterministic spaces, every algebra has <= 5 non-null atoms.

    Handcrafted corner cases (null atoms, infinite weights, the empty
    space, one algebra with exactly five non-null atoms) plus twelve
    seeded random spaces capped at four atoms.
    """
    inf = ExtRational.infinity()
    spaces = [
        make_space(
            ["p1", "p2", "p3", "p4"],
            [["p1", "p2"], ["p3"], ["p4"]],
            [Fraction(1, 2), Fraction(1, 3), 0],
        ),
        make_space(["q1", "q2"], [["q1"], ["q2"]], [1, 2]),
        make_space(["r1", "r2"], [["r1"], ["r2"]], [1, 2]),
        make_space(["z1", "z2"], [["z1"], ["z2"]], [0, 0]),
        make_space([], [], []),
        make_space(["w1"], [["w1"]], [inf]),
        make_space(["m1", "m2", "m3"], [["m1"], ["m2"], ["m3"]], [inf, 2, 0]),
        make_space(
            ["f1", "f2", "f3", "f4", "f5"],
            [["f1"], ["f2"], ["f3"], ["f4"], ["f5"]],
            [1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)],
        ),
    ]
    for i in range(12):
        spaces.append(
            random_space(trial_rng(FIXTURE_SEED, i), prefix="x", max_atoms=4)
        )
    assert len(spaces) == 20
    return spaces


@pytest.fixture(scope="session")
def fixture_spaces():
    return build_fixture_spaces()
