"""Seeded random instance generators shared across the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from circlepers import (
    CLOSED,
    OPEN,
    CircleInterval,
    CircleModule,
    Diagram,
    InvariantMatching,
    OrbitPair,
    PartialMatching,
    PlanePoint,
    QuotientDiagram,
    QuotientPoint,
    WindowPair,
    INF,
    NEG_INF,
)

KIND_PAIRS = [(CLOSED, CLOSED), (CLOSED, OPEN), (OPEN, CLOSED), (OPEN, OPEN)]


def random_plane_point(rng: random.Random, allow_infinite: bool = True) -> PlanePoint:
    if allow_infinite and rng.random() < 0.1:
        if rng.random() < 0.5:
            return PlanePoint(Fraction(rng.randint(-24, 24), 8), INF)
        return PlanePoint(NEG_INF, Fraction(rng.randint(-24, 24), 8))
    a = Fraction(rng.randint(-24, 24), 8)
    return PlanePoint(a, a + Fraction(rng.randint(0, 32), 8))


def random_plane_diagram(rng: random.Random, max_points: int = 4, allow_infinite: bool = True) -> Diagram:
    count = rng.randint(0, max_points)
    return Diagram(tuple(random_plane_point(rng, allow_infinite) for _ in range(count)))


def random_quotient_point(rng: random.Random) -> QuotientPoint:
    a = Fraction(rng.randint(0, 39), 40)
    return QuotientPoint(a, a + Fraction(rng.randint(0, 60), 40))


def random_quotient_diagram(rng: random.Random, max_points: int = 4) -> QuotientDiagram:
    count = rng.randint(0, max_points)
    return QuotientDiagram(tuple(random_quotient_point(rng) for _ in range(count)))


def random_on_grid_module(
    rng: random.Random, grid: int, max_intervals: int = 3, random_kinds: bool = False
) -> CircleModule:
    count = rng.randint(0, max_intervals)
    intervals = []
    for _ in range(count):
        start = Fraction(rng.randrange(grid), grid)
        length = Fraction(rng.randint(1, grid), grid)
        kinds = rng.choice(KIND_PAIRS) if random_kinds else (CLOSED, OPEN)
        intervals.append(CircleInterval(start, start + length, *kinds))
    return CircleModule(tuple(intervals))


def random_partial_matching(rng: random.Random, n_a: int, n_b: int) -> PartialMatching:
    a_indices = list(range(n_a))
    b_indices = list(range(n_b))
    rng.shuffle(a_indices)
    rng.shuffle(b_indices)
    k = rng.randint(0, min(n_a, n_b))
    pairs = set(zip(a_indices[:k], b_indices[:k]))
    return PartialMatching.from_pairs(pairs, n_a, n_b)


def random_invariant_matching(
    rng: random.Random,
    classes_a: tuple[QuotientPoint, ...] | None = None,
    classes_b: tuple[QuotientPoint, ...] | None = None,
    max_classes: int = 4,
    window: int = 3,
) -> InvariantMatching:
    """Random orbit matching: some full-orbit pairs, some window pairs on the
    remaining (hence partially matched) classes, the rest fully unmatched."""
    if classes_a is None:
        classes_a = tuple(random_quotient_point(rng) for _ in range(rng.randint(0, max_classes)))
    if classes_b is None:
        classes_b = tuple(random_quotient_point(rng) for _ in range(rng.randint(0, max_classes)))
    a_free = list(range(len(classes_a)))
    b_free = list(range(len(classes_b)))
    rng.shuffle(a_free)
    rng.shuffle(b_free)
    orbit_pairs = set()
    for _ in range(rng.randint(0, min(len(a_free), len(b_free)))):
        orbit_pairs.add(OrbitPair(a_free.pop(), b_free.pop(), rng.randint(-2, 2)))
    window_pairs = set()
    used_a: set[tuple[int, int]] = set()
    used_b: set[tuple[int, int]] = set()
    if a_free and b_free:
        for _ in range(rng.randint(0, 4)):
            candidate = WindowPair(
                rng.choice(a_free),
                rng.randint(-window, window),
                rng.choice(b_free),
                rng.randint(-window, window),
            )
            if (candidate.a, candidate.a_residue) in used_a:
                continue
            if (candidate.b, candidate.b_residue) in used_b:
                continue
            used_a.add((candidate.a, candidate.a_residue))
            used_b.add((candidate.b, candidate.b_residue))
            window_pairs.add(candidate)
    return InvariantMatching(
        classes_a, classes_b, frozenset(orbit_pairs), frozenset(window_pairs), window
    )
