"""Sylvester resultants and the cut-edge quotient-graph certificate.

The Sylvester matrix here lists coefficients in ascending order: for
f = a_0 + .. + a_s x^s and g = b_0 + .. + b_t x^t it stacks t shifted
copies of the a-row over s shifted copies of the b-row.  Its determinant
equals the classical resultant with the arguments swapped, that is
(-1)^(s*t) * Res(f, g), so it vanishes exactly when f and g share a
factor and is still multiplicative in each slot.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import unipoly
from .floquet import dispersion_polynomial, induced_dispersion
from .graph import Labeling, PeriodicGraph, is_support_zero, quotient_graph
from .unipoly import Coeffs


def sylvester_matrix(f: Sequence, g: Sequence) -> tuple[tuple[Fraction, ...], ...]:
    """The (s+t) x (s+t) matrix of shifted coefficient rows, a-rows first."""
    fc = unipoly.normalize(f)
    gc = unipoly.normalize(g)
    s, t = unipoly.degree(fc), unipoly.degree(gc)
    if s < 1 or t < 1:
        raise ValueError("resultant needs two polynomials of positive degree")
    size = s + t
    rows = []
    for r in range(t):
        row = [Fraction(0)] * size
        for k, c in enumerate(fc):
            row[r + k] = c
        rows.append(tuple(row))
    for r in range(s):
        row = [Fraction(0)] * size
        for k, c in enumerate(gc):
            row[r + k] = c
        rows.append(tuple(row))
    return tuple(rows)


def _det_fraction(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with column pivoting."""
    n = len(matrix)
    work = [list(row) for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if work[r][k]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
            det = -det
        pivot = work[k][k]
        det *= pivot
        for r in range(k + 1, n):
            if work[r][k]:
                factor = work[r][k] / pivot
                work[r] = [a - factor * b for a, b in zip(work[r], work[k])]
    return det


def resultant(f: Sequence, g: Sequence) -> Fraction:
    """Determinant of the ascending-layout Sylvester matrix.

    Zero exactly when f and g share a nonconstant common factor.
    """
    return _det_fraction(sylvester_matrix(f, g))


# ---------------------------------------------------------------------------
# cut-edge certificate


def _is_cut_edge_multigraph(num_orbits: int, edges: list[tuple[int, int]], index: int) -> bool:
    """Whether removing edge `index` disconnects its endpoints."""
    a, b = edges[index]
    adjacency: dict[int, list[int]] = {v: [] for v in range(num_orbits)}
    for k, (i, j) in enumerate(edges):
        if k != index:
            adjacency[i].append(j)
            adjacency[j].append(i)
    seen = {a}
    stack = [a]
    while stack:
        v = stack.pop()
        if v == b:
            return False
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return True


def evaluate_z(poly, z0: Sequence) -> Coeffs:
    """Specialize the momentum variables of a Laurent polynomial.

    Returns ascending lam-coefficients; every coordinate of z0 must be a
    nonzero rational so negative exponents stay exact.
    """
    z = [Fraction(c) for c in z0]
    if len(z) != poly.dimension:
        raise ValueError(f"z0 has {len(z)} coordinates, expected {poly.dimension}")
    if any(c == 0 for c in z):
        raise ValueError("z0 must have nonzero coordinates")
    out = [Fraction(0)] * (poly.lam_degree + 1)
    for key, coeff in poly.items():
        value = coeff
        for c, e in zip(z, key[:-1]):
            value *= c ** e
        out[key[-1]] += value
    return unipoly.normalize(out)


def cut_edge_certificate(graph: PeriodicGraph, subset: Sequence[int],
                         labeling: Labeling, z0: Sequence) -> Fraction:
    """Resultant of the dispersion at z0 against the subset's dispersion.

    Hypotheses checked one by one: the subset omits exactly one orbit and
    carries only zero offsets, the quotient multigraph is connected with
    every edge a cut edge (so it is a tree), all weights are nonzero, and
    z0 avoids the coordinate axes.  Under those, a nonzero value
    certifies that the two spectra share no energy at z0.
    """
    members = sorted(set(subset))
    n = graph.num_orbits
    if len(members) != n - 1:
        raise ValueError(f"subset must omit exactly one orbit, got {len(members)} of {n}")
    if not is_support_zero(graph, members):
        raise ValueError("subset carries a nonzero offset; not support-zero as given")
    quotient = quotient_graph(graph)
    edges = list(quotient.multi_edges)
    block = {0}
    stack = [0]
    adjacency: dict[int, list[int]] = {v: [] for v in range(n)}
    for i, j in edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in block:
                block.add(w)
                stack.append(w)
    if len(block) != n:
        raise ValueError("quotient graph is not connected")
    for k, (i, j) in enumerate(edges):
        if i == j or not _is_cut_edge_multigraph(n, edges, k):
            raise ValueError(f"non-bridge edge found in the quotient graph: {graph.sorted_edges()[k]}")
    for edge, weight in labeling.weights.items():
        if weight == 0:
            raise ValueError(f"zero weight on {edge}")

    full = evaluate_z(dispersion_polynomial(graph, labeling), z0)
    inner_poly = induced_dispersion(graph, labeling, members)
    for key in inner_poly.support():
        if any(e != 0 for e in key[:-1]):
            raise AssertionError("support-zero subset produced a z-dependent dispersion")
    inner = evaluate_z(inner_poly, [1] * graph.dimension)
    return resultant(full, inner)
