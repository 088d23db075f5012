"""Newton polytopes of dispersion polynomials: supports, faces, witnesses.

Points live in Z^(d+1): the first d coordinates are momentum exponents
(the z-part) and the last is the lam exponent.  Hull computations are
exact; extreme points come from rational linear programming rather than
floating-point geometry, so no tolerance ever enters.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .floquet import FloquetMatrix, dispersion_polynomial
from .graph import Labeling, PeriodicGraph
from .laurent import LaurentPoly, WeightVector
from .sampling import random_labeling, random_rational, rng_for

Point = tuple[int, ...]


@dataclass(frozen=True)
class GenericSupportEstimate:
    """Union of dispersion supports over `trials` random labelings."""

    trials: int
    seed: int | str
    points: frozenset[Point]


@dataclass(frozen=True)
class FaceDescriptor:
    """Proper face of a support hull: w·p = min_value on members."""

    normal: WeightVector
    min_value: int
    members: frozenset[Point]

    def sorted_members(self) -> list[Point]:
        return sorted(self.members)


@dataclass(frozen=True)
class NewtonPolytopeData:
    """Support points with hull extremes and (d <= 2) vertical faces."""

    dimension: int
    support_points: frozenset[Point]
    hull_vertices: frozenset[Point]
    face_descriptors: tuple[FaceDescriptor, ...] | None


def generic_support(graph: PeriodicGraph, trials: int = 5, seed: int | str = 0
                    ) -> GenericSupportEstimate:
    """Estimate the labeling-independent support of the dispersion.

    Draws `trials` independent random rational labelings (weights kept
    nonzero) and unions the supports.  A monomial whose coefficient is a
    nonzero polynomial in the labels survives some draw with overwhelming
    probability, so the union stabilizes quickly; trial t is reproducible
    from (seed, t) alone.
    """
    if trials < 1:
        raise ValueError("at least one trial is required")
    points: set[Point] = set()
    for t in range(trials):
        labeling = random_labeling(graph, rng_for(seed, "generic", t))
        points |= dispersion_polynomial(graph, labeling).support()
    return GenericSupportEstimate(trials=trials, seed=seed, points=frozenset(points))


def is_vertical_segment(points: Iterable[Point]) -> bool:
    """True when every support point sits on the lam axis (zero z-part)."""
    pts = list(points)
    if not pts:
        raise ValueError("empty support has no polytope")
    return all(all(e == 0 for e in p[:-1]) for p in pts)


# ---------------------------------------------------------------------------
# exact convex-hull membership (phase-1 simplex with Bland's rule)


def in_convex_hull(point: Sequence[int], points: Iterable[Point]) -> bool:
    """Exact test for membership of `point` in conv(points)."""
    cols = [tuple(Fraction(e) for e in q) + (Fraction(1),) for q in points]
    rhs = tuple(Fraction(e) for e in point) + (Fraction(1),)
    if not cols:
        return False
    return _phase1_feasible(cols, rhs)


def _phase1_feasible(cols: list[tuple[Fraction, ...]], rhs: tuple[Fraction, ...]) -> bool:
    m = len(rhs)
    n = len(cols)
    table = [[cols[j][i] for j in range(n)] for i in range(m)]
    b = list(rhs)
    for i in range(m):
        if b[i] < 0:
            b[i] = -b[i]
            table[i] = [-a for a in table[i]]
    for i in range(m):
        table[i].extend(Fraction(1) if k == i else Fraction(0) for k in range(m))
    basis = list(range(n, n + m))

    while True:
        # reduced cost of column j under cost = 1 on artificials, 0 elsewhere
        entering = -1
        for j in range(n + m):
            if j in basis:
                continue
            cost = (Fraction(1) if j >= n else Fraction(0))
            for i in range(m):
                if basis[i] >= n:
                    cost -= table[i][j]
            if cost < 0:
                entering = j
                break  # Bland: first improving column
        if entering < 0:
            break
        leaving = -1
        best = None
        for i in range(m):
            if table[i][entering] > 0:
                ratio = b[i] / table[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving < 0:
            # unbounded phase-1 cannot happen; defensive
            raise ArithmeticError("phase-1 simplex became unbounded")
        pivot = table[leaving][entering]
        table[leaving] = [a / pivot for a in table[leaving]]
        b[leaving] /= pivot
        for i in range(m):
            if i != leaving and table[i][entering]:
                factor = table[i][entering]
                table[i] = [a - factor * c for a, c in zip(table[i], table[leaving])]
                b[i] -= factor * b[leaving]
        basis[leaving] = entering

    artificial_load = sum(b[i] for i in range(m) if basis[i] >= n)
    return artificial_load == 0


def extreme_points(points: Iterable[Point]) -> frozenset[Point]:
    """Points not expressible as convex combinations of the others."""
    pts = sorted(set(points))
    out = []
    for p in pts:
        others = [q for q in pts if q != p]
        if not others or not in_convex_hull(p, others):
            out.append(p)
    return frozenset(out)


def minkowski_sum(a: Iterable[Point], b: Iterable[Point]) -> frozenset[Point]:
    return frozenset(tuple(x + y for x, y in zip(p, q)) for p in a for q in b)


def hulls_equal(a: Iterable[Point], b: Iterable[Point]) -> bool:
    """Whether two point sets span the same convex hull."""
    return extreme_points(a) == extreme_points(b)


# ---------------------------------------------------------------------------
# face enumeration through the z-projection (d <= 2)


def _primitive(vector: tuple[int, ...]) -> tuple[int, ...]:
    g = math.gcd(*(abs(e) for e in vector))
    return tuple(e // g for e in vector) if g else vector


def _hull_cycle_2d(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Counterclockwise hull cycle (monotone chain, collinear points dropped)."""
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts

    def cross(o, p, q):
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def projected_face_normals(z_parts: set[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Inward normals identifying every proper face of conv(z_parts).

    For an interval these are the two axis directions; for a polygon the
    edge normals plus, for each vertex, the sum of its two edge normals
    (a vector in the open normal cone of that vertex).
    """
    dim = len(next(iter(z_parts)))
    if dim == 1:
        values = {z[0] for z in z_parts}
        if len(values) == 1:
            return []
        return [(1,), (-1,)]
    cycle = _hull_cycle_2d([(z[0], z[1]) for z in z_parts])
    if len(cycle) == 1:
        return []
    if len(cycle) == 2:
        (ax, ay), (bx, by) = cycle
        direction = _primitive((bx - ax, by - ay))
        return [direction, tuple(-e for e in direction)]
    normals: list[tuple[int, ...]] = []
    edge_normals = []
    for k in range(len(cycle)):
        ax, ay = cycle[k]
        bx, by = cycle[(k + 1) % len(cycle)]
        edge_normals.append(_primitive((-(by - ay), bx - ax)))
    normals.extend(edge_normals)
    for k in range(len(cycle)):
        prev = edge_normals[k - 1]
        nxt = edge_normals[k]
        normals.append(_primitive((prev[0] + nxt[0], prev[1] + nxt[1])))
    return normals


def face_of(points: Iterable[Point], weights: Sequence[int]) -> FaceDescriptor:
    """The (possibly improper) face of conv(points) minimizing the weight."""
    pts = list(points)
    w = tuple(weights)
    values = [sum(c * e for c, e in zip(w, p)) for p in pts]
    m = min(values)
    members = frozenset(p for p, v in zip(pts, values) if v == m)
    return FaceDescriptor(normal=WeightVector(w), min_value=m, members=members)


def _has_vertical_pair(members: Iterable[Point]) -> bool:
    seen: set[tuple[int, ...]] = set()
    for p in members:
        if p[:-1] in seen:
            return True
        seen.add(p[:-1])
    return False


def vertical_faces(points: Iterable[Point]) -> list[FaceDescriptor]:
    """Proper hull faces with momentum-only normals and a vertical pair.

    Faces are found by projecting out the lam coordinate, enumerating the
    proper faces of the projected hull, and lifting each normal w' to
    (w', 0).  A face qualifies when two of its support points share the
    z-part but differ in lam.  Qualifying faces must satisfy m < 0; a
    violation means the input was not a dispersion support.
    """
    pts = list(set(points))
    if not pts:
        raise ValueError("empty support has no faces")
    d = len(pts[0]) - 1
    if d > 2:
        raise ValueError(f"face enumeration supports d <= 2, got d = {d}")
    if is_vertical_segment(pts):
        raise ValueError("vertical-segment support has no proper vertical faces")
    z_parts = {p[:-1] for p in pts}
    faces = []
    for w_proj in projected_face_normals(z_parts):
        descriptor = face_of(pts, w_proj + (0,))
        if not _has_vertical_pair(descriptor.members):
            continue
        if descriptor.min_value >= 0:
            raise ValueError(
                f"vertical face at {descriptor.normal.components} has minimum "
                f"{descriptor.min_value} >= 0; not a dispersion support"
            )
        faces.append(descriptor)
    faces.sort(key=lambda f: f.normal.components)
    return faces


def newton_polytope_data(points: Iterable[Point]) -> NewtonPolytopeData:
    """Bundle support, hull vertices, and (d <= 2) vertical faces."""
    pts = frozenset(tuple(p) for p in points)
    if not pts:
        raise ValueError("empty support")
    dimension = len(next(iter(pts)))
    descriptors: tuple[FaceDescriptor, ...] | None
    if dimension - 1 > 2:
        descriptors = None
    elif is_vertical_segment(pts):
        descriptors = ()
    else:
        descriptors = tuple(vertical_faces(pts))
    return NewtonPolytopeData(
        dimension=dimension,
        support_points=pts,
        hull_vertices=extreme_points(pts),
        face_descriptors=descriptors,
    )


# ---------------------------------------------------------------------------
# facial independence in the potentials


def facial_independence_witness(graph: PeriodicGraph, w: WeightVector | Sequence[int],
                                rng: random.Random,
                                support_points: Iterable[Point] | None = None
                                ) -> int | None:
    """Orbit whose potential the facial polynomial provably ignores.

    The dispersion is affine in each potential, so comparing the facial
    polynomial at two distinct values of one potential (all other labels
    frozen at random draws) decides independence exactly.  Returns the
    first independent orbit index (0-based), or None when every potential
    showed up in the face coefficients.

    `support_points` should be a generic support estimate; it is computed
    with default settings when omitted.  `w` must pick out a proper
    vertical face of it.
    """
    w = tuple(w)
    if len(w) != graph.dimension + 1 or w[-1] != 0:
        raise ValueError("weight vector must have a zero lam component")
    if support_points is None:
        support_points = generic_support(graph).points
    pts = set(support_points)
    descriptor = face_of(pts, w)
    if len(descriptor.members) == len(pts):
        raise ValueError("weight vector identifies the whole polytope, not a proper face")
    if not _has_vertical_pair(descriptor.members):
        raise ValueError("face has no vertical pair; not a vertical face")

    base = random_labeling(graph, rng)
    members = descriptor.members

    def facial_at(labeling: Labeling) -> dict[Point, Fraction]:
        poly = dispersion_polynomial(graph, labeling)
        return {k: v for k, v in poly.items() if k in members}

    for orbit in range(graph.num_orbits):
        first = random_rational(rng)
        second = random_rational(rng)
        while second == first:
            second = random_rational(rng)
        samples = []
        for value in (first, second):
            pots = list(base.potentials)
            pots[orbit] = value
            samples.append(facial_at(Labeling(graph, pots, base.weights)))
        if samples[0] == samples[1]:
            return orbit
    return None


# ---------------------------------------------------------------------------
# permutation products


def permutation_product(matrix: FloquetMatrix, sigma: Sequence[int]) -> LaurentPoly:
    """Product of pencil entries (i, sigma(i)): one determinant summand."""
    n = matrix.size
    perm = list(sigma)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
    pencil = matrix.char_matrix()
    acc = LaurentPoly.constant(matrix.graph.dimension, 1)
    for i in range(n):
        acc = acc * pencil[i][perm[i]]
    return acc


def sigma_support_check(graph: PeriodicGraph, labeling: Labeling,
                        sigma: Sequence[int],
                        estimate: GenericSupportEstimate | None = None,
                        trials: int = 5, seed: int | str = 0) -> bool:
    """Whether the permutation product's support sits inside the generic one."""
    if estimate is None:
        estimate = generic_support(graph, trials=trials, seed=seed)
    product = permutation_product(FloquetMatrix(graph, labeling), sigma)
    return product.support() <= estimate.points
