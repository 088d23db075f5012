"""Seeded random draws: rational labels and small periodic graphs.

All randomness flows through `random.Random` instances created by
`rng_for`, which hashes a string of the base seed plus a path of trial
labels.  That keeps every subcommand reproducible and lets independent
draws (trial 3 of a sweep, say) be reconstructed in isolation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .graph import Labeling, PeriodicGraph, canonicalize_edge

NUMERATOR_BOUND = 10_000
DENOMINATOR_BOUND = 100


def rng_for(seed: int | str, *path: object) -> random.Random:
    """Deterministic child generator for a seed and a path of labels."""
    return random.Random("/".join([str(seed), *map(str, path)]))


def random_rational(rng: random.Random, allow_zero: bool = True) -> Fraction:
    """Uniform-ish rational with numerator in [-10^4, 10^4], denominator in [1, 100]."""
    while True:
        num = rng.randint(-NUMERATOR_BOUND, NUMERATOR_BOUND)
        if num or allow_zero:
            return Fraction(num, rng.randint(1, DENOMINATOR_BOUND))


def random_labeling(graph: PeriodicGraph, rng: random.Random) -> Labeling:
    """Random rational labeling; edge weights are kept away from zero."""
    potentials = [random_rational(rng) for _ in range(graph.num_orbits)]
    weights = {
        edge: random_rational(rng, allow_zero=False)
        for edge in graph.sorted_edges()
    }
    return Labeling(graph, potentials, weights)


def tame_real_labeling(graph: PeriodicGraph, rng: random.Random) -> Labeling:
    """Labeling sized for floating-point band sampling.

    Weight magnitudes stay in [1/2, 2] and potentials in [-2, 2] with
    small denominators, so bands that are not exactly flat stay visibly
    dispersive on a coarse momentum grid.
    """
    def weight():
        mag = Fraction(rng.randint(8, 32), 16)
        return mag if rng.random() < 0.5 else -mag

    potentials = [Fraction(rng.randint(-32, 32), 16) for _ in range(graph.num_orbits)]
    weights = {edge: weight() for edge in graph.sorted_edges()}
    return Labeling(graph, potentials, weights)


def random_periodic_graph(rng: random.Random, dims: tuple[int, ...] = (1, 2),
                          max_orbits: int = 4, max_edges: int = 6) -> PeriodicGraph:
    """Small random graph with offsets in {-1, 0, 1}^d.

    Draws the dimension from ``dims`` and the orbit count up to
    ``max_orbits``, then up to ``max_edges`` distinct edge classes.  Most
    draws are seeded with a random spanning tree so connected quotients
    are well represented; the rest sample classes independently, which
    also produces disconnected and edge-free graphs.
    """
    d = rng.choice(list(dims))
    n = rng.randint(1, max_orbits)
    offsets = [tuple(p) for p in product((-1, 0, 1), repeat=d)]
    classes: set = set()

    def try_add(i: int, j: int, offset: tuple[int, ...]) -> None:
        if i == j and all(e == 0 for e in offset):
            return
        classes.add(canonicalize_edge(i, j, offset))

    budget = rng.randint(0, max_edges)
    if n > 1 and budget >= n - 1 and rng.random() < 0.75:
        order = list(range(n))
        rng.shuffle(order)
        for k in range(1, n):
            try_add(order[rng.randint(0, k - 1)], order[k], rng.choice(offsets))
    attempts = 0
    while len(classes) < budget and attempts < 50:
        attempts += 1
        try_add(rng.randint(0, n - 1), rng.randint(0, n - 1), rng.choice(offsets))
    return PeriodicGraph(d, n, sorted(classes))
