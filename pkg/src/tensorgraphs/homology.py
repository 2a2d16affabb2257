"""Bubble chain complex and integer homology of colored graphs.

A closed graph on ``k`` colors has a chain complex whose degree-``p`` group
is freely generated by its p-bubbles (connected subgraphs spanned by ``p``
of the colors), for ``p = 0 .. k-1``:

* degree 0: the vertices,
* degree 1: the edges,
* degree p >= 2: bubbles over each p-subset of colors.

Boundary maps: an edge maps to (white end) - (black end); a bubble with
colors ``i_1 < ... < i_p`` maps to the alternating sum over ``q`` of its
sub-bubbles obtained by deleting color ``i_q``, with sign ``(-1)**(q+1)``.

Homology is computed over the integers via the Smith normal form, so free
ranks and torsion coefficients are exact.  All arithmetic uses Python's
arbitrary-precision integers; no floating point enters anywhere.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graphs import Bubble, ColoredGraph, GraphError, bubbles

__all__ = [
    "ChainComplex",
    "chain_complex",
    "SmithForm",
    "smith_normal_form",
    "HomologyGroup",
    "HomologyResult",
    "homology",
    "euler_characteristic",
    "matches_three_sphere",
]

Matrix = list[list[int]]


@dataclass(frozen=True)
class ChainComplex:
    """Ordered bubble bases and integer boundary matrices.

    ``basis[p]`` lists the p-bubbles in the canonical order (sorted by
    color subset, then smallest member vertex).  ``matrix(p)`` is the
    boundary map from degree ``p`` to degree ``p - 1``, with
    ``len(basis[p-1])`` rows and ``len(basis[p])`` columns.
    """

    colors: tuple[int, ...]
    basis: tuple[tuple[Bubble, ...], ...]
    _matrices: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def top_degree(self) -> int:
        return len(self.basis) - 1

    def dim(self, p: int) -> int:
        if 0 <= p <= self.top_degree:
            return len(self.basis[p])
        return 0

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)

    def matrix(self, p: int) -> Matrix:
        """The matrix of the boundary map in degree p (1 <= p <= top)."""
        if not 1 <= p <= self.top_degree:
            raise GraphError(f"no boundary matrix in degree {p}")
        return [list(row) for row in self._matrices[p - 1]]


def chain_complex(g: ColoredGraph) -> ChainComplex:
    """Build the bubble chain complex of a closed graph."""
    if g.is_open:
        raise GraphError("chain complex requires a closed graph (no legs)")
    colors = g.colors
    top = len(colors) - 1

    basis: list[list[Bubble]] = [bubbles(g, ())]
    for p in range(1, top + 1):
        layer: list[Bubble] = []
        for subset in combinations(colors, p):
            layer.extend(bubbles(g, subset))
        layer.sort(key=lambda b: b.key)
        basis.append(layer)

    index = [{b.key: i for i, b in enumerate(layer)} for layer in basis]

    matrices: list[Matrix] = []
    if top >= 1:
        m1: Matrix = [[0] * len(basis[1]) for _ in basis[0]]
        for col, b in enumerate(basis[1]):
            e = g.edges[b.edges[0]]
            m1[index[0][((), e.white)]][col] += 1
            m1[index[0][((), e.black)]][col] -= 1
        matrices.append(m1)
    for p in range(2, top + 1):
        mp: Matrix = [[0] * len(basis[p]) for _ in basis[p - 1]]
        for col, b in enumerate(basis[p]):
            sub = b.as_graph(g)
            for q, dropped in enumerate(b.colors):
                sign = 1 if q % 2 == 0 else -1
                rest = tuple(c for c in b.colors if c != dropped)
                for w in bubbles(sub, rest):
                    mp[index[p - 1][w.key]][col] += sign
        matrices.append(mp)

    return ChainComplex(
        colors,
        tuple(tuple(layer) for layer in basis),
        tuple(tuple(tuple(row) for row in m) for m in matrices),
    )


# -- Smith normal form -------------------------------------------------------


@dataclass(frozen=True)
class SmithForm:
    """U * M * V = diag(d_1, ..., d_r, 0, ...) with d_i | d_{i+1}.

    ``diagonal`` has min(rows, cols) entries, all non-negative; ``rank``
    counts the nonzero ones.  U and V are unimodular.
    """

    diagonal: tuple[int, ...]
    rank: int
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    shape: tuple[int, int]

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Pivots are chosen as the smallest-magnitude nonzero entry of the
    remaining block; a final fix-up enforces the divisibility chain.  Exact
    integer arithmetic throughout.

    >>> smith_normal_form([[2, 4], [6, 8]]).diagonal
    (2, 4)
    >>> smith_normal_form([[1, 0], [0, 1], [0, 0]]).rank
    2
    """
    a: Matrix = [[operator.index(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    u: Matrix = [[int(i == j) for j in range(m)] for i in range(m)]
    v: Matrix = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_sub(i: int, j: int, q: int) -> None:  # row i -= q * row j
        ai, aj, ui, uj = a[i], a[j], u[i], u[j]
        for k in range(n):
            ai[k] -= q * aj[k]
        for k in range(m):
            ui[k] -= q * uj[k]

    def col_sub(i: int, j: int, q: int) -> None:  # col i -= q * col j
        for r in range(m):
            a[r][i] -= q * a[r][j]
        for r in range(n):
            v[r][i] -= q * v[r][j]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for r in range(m):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    size = min(m, n)
    t = 0
    while t < size:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (best is None or abs(x) < best):
                    pivot, best = (i, j), abs(x)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            if a[t][t] < 0:
                negate_row(t)
            # clear column t and row t; a nonzero remainder replaces the
            # pivot (it is strictly smaller, so this terminates)
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_sub(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_sub(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility fix-up: pivot must divide the remaining block
            d = a[t][t]
            offender = None
            for i in range(t + 1, m):
                if any(a[i][j] % d for j in range(t + 1, n)):
                    offender = i
                    break
            if offender is None:
                break
            row_sub(t, offender, -1)
        t += 1

    for i in range(size):
        if a[i][i] < 0:
            negate_row(i)
    diagonal = tuple(a[i][i] for i in range(size))
    return SmithForm(
        diagonal,
        sum(1 for d in diagonal if d),
        tuple(tuple(row) for row in u),
        tuple(tuple(row) for row in v),
        (m, n),
    )


# -- homology ------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyGroup:
    """One homology group: free rank plus torsion coefficients."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyResult:
    """Integer homology of the bubble complex, degree by degree."""

    groups: tuple[HomologyGroup, ...]
    euler: int

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(h.free_rank for h in self.groups)

    def lines(self) -> list[str]:
        out = [f"H_{q} = {h}" for q, h in enumerate(self.groups)]
        out.append(f"chi = {self.euler}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def homology(g: ColoredGraph) -> HomologyResult:
    """Integer homology H_q = ker d_q / im d_{q+1} via Smith normal forms."""
    cc = chain_complex(g)
    top = cc.top_degree
    rank = [0] * (top + 2)  # rank[p] = rank of the degree-p boundary map
    snf = {}
    for p in range(1, top + 1):
        snf[p] = smith_normal_form(cc.matrix(p))
        rank[p] = snf[p].rank
    groups = []
    for q in range(top + 1):
        free = cc.dim(q) - rank[q] - rank[q + 1]
        torsion = snf[q + 1].torsion if q + 1 <= top else ()
        groups.append(HomologyGroup(free, torsion))
    chi = sum((-1) ** q * h.free_rank for q, h in enumerate(groups))
    return HomologyResult(tuple(groups), chi)


def euler_characteristic(g: ColoredGraph) -> int:
    """Alternating sum of the homology free ranks."""
    return homology(g).euler


def matches_three_sphere(result: HomologyResult) -> bool:
    """True iff the homology is (Z, 0, 0, Z) with no torsion.

    Informational only: sharing the homology of the 3-sphere does not make
    a graph spherical (degree-1 counterexamples exist), so nothing in this
    package treats the pattern as conclusive.
    """
    return (
        len(result.groups) == 4
        and result.betti == (1, 0, 0, 1)
        and all(not h.torsion for h in result.groups)
    )
