"""Floquet matrix of a labeled periodic graph and its dispersion polynomial.

For orbits i != j the matrix entry collects ``w * z^a`` over every edge
class (i, j, a), read with the offset oriented from i to j; the symmetric
entry picks up ``z^-a``.  A class joining an orbit to its own translate
contributes ``w * (z^a + z^-a)`` on the diagonal, on top of the potential.
The construction makes ``L(1/z)`` the transpose of ``L(z)``.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Labeling, PeriodicGraph
from .laurent import LaurentMatrix, LaurentPoly, determinant


class FloquetMatrix:
    """Matrix-valued symbol of the periodic operator, with cached dispersion."""

    __slots__ = ("graph", "labeling", "matrix", "_dispersion")

    def __init__(self, graph: PeriodicGraph, labeling: Labeling):
        if labeling.graph != graph:
            raise ValueError("labeling belongs to a different graph")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "labeling", labeling)
        object.__setattr__(self, "matrix", _build_matrix(graph, labeling))
        object.__setattr__(self, "_dispersion", None)

    def __setattr__(self, name, value):
        raise AttributeError("FloquetMatrix is immutable")

    @property
    def size(self) -> int:
        return self.matrix.size

    def char_matrix(self) -> LaurentMatrix:
        """The pencil L(z) - lam * I as one Laurent matrix."""
        return self.matrix.minus_lam_identity()

    def dispersion(self, method: str = "auto") -> LaurentPoly:
        """det(L(z) - lam I); cached after the first call.

        The lam-leading coefficient is (-1)^n by construction, which is
        asserted here as a cheap sanity check on the determinant code.
        """
        cached = self._dispersion
        if cached is not None and method == "auto":
            return cached
        poly = determinant(self.char_matrix(), method=method)
        n = self.graph.num_orbits
        lead = poly.lam_coefficient(n)
        expected = LaurentPoly.constant(self.graph.dimension, (-1) ** n)
        if lead != expected or poly.lam_degree != n:
            raise ArithmeticError("dispersion lost its leading lam term")
        if method == "auto":
            object.__setattr__(self, "_dispersion", poly)
        return poly


def _build_matrix(graph: PeriodicGraph, labeling: Labeling) -> LaurentMatrix:
    d = graph.dimension
    n = graph.num_orbits
    rows = [
        [LaurentPoly.zero(d) for _ in range(n)]
        for _ in range(n)
    ]
    for v in range(n):
        rows[v][v] = LaurentPoly.constant(d, labeling.potentials[v])
    for i, j, a in graph.sorted_edges():
        w = labeling.weights[(i, j, a)]
        direct = LaurentPoly.monomial(d, a, 0, w)
        reverse = LaurentPoly.monomial(d, tuple(-e for e in a), 0, w)
        if i == j:
            rows[i][i] = rows[i][i] + direct + reverse
        else:
            rows[i][j] = rows[i][j] + direct
            rows[j][i] = rows[j][i] + reverse
    return LaurentMatrix(rows)


def build_floquet(graph: PeriodicGraph, labeling: Labeling) -> FloquetMatrix:
    return FloquetMatrix(graph, labeling)


def dispersion_polynomial(graph: PeriodicGraph, labeling: Labeling,
                          method: str = "auto") -> LaurentPoly:
    return FloquetMatrix(graph, labeling).dispersion(method=method)


def induced_operator(graph: PeriodicGraph, labeling: Labeling,
                     subset: Iterable[int]) -> FloquetMatrix:
    """Floquet matrix of the labeled subgraph induced on an orbit subset."""
    sub, sub_labeling, _ = labeling.restrict(subset)
    return FloquetMatrix(sub, sub_labeling)


def induced_dispersion(graph: PeriodicGraph, labeling: Labeling,
                       subset: Iterable[int]) -> LaurentPoly:
    return induced_operator(graph, labeling, subset).dispersion()
