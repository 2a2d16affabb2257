"""Tensor-model vertex sets, Feynman membership, and graph-family builders.

A rank-D model is specified by its finite set of interaction vertices: closed
D-colored graphs (:class:`ModelSpec`).  A (D+1)-colored graph is a Feynman
graph of the model iff, after amputating legs and deleting the propagator
color 0, every connected component is one of the interaction vertices
(:func:`is_member`).  Wick contraction of ``k`` vertices is enumerated as
perfect matchings of white against black vertices (:func:`enumerate_vacuum`).

The second half of the module builds the named graph families used
throughout the package: the quartic-matrix contractions R0/R1, the torus
block O and its sphere twin N, the genus-g chains Qg/Kg and their opened
bordism versions Qgbc, the canonical genus-g boundary templates Cg, the
filled graphs Tg with boundary Cg, separator-spliced chains L, and small
fixture graphs (dipoles, the necklace, a 2-point chain, abstract ribbon
examples).

Two constructions the literature leaves to figures are *searched* for,
deterministically, at first use and then cached:

* the Tg gadgets (how a quartic vertex with one leg and three color-0
  stubs replaces each vertex of Cg) -- bounded search over stub labelings
  and contraction rules, fixed by requiring boundary(T1) = C1 and
  boundary(T2) = C2;
* O's four distinguished color-0 edges mu0, nu0, alpha0, beta0 -- search
  over ordered edge 4-tuples for the chain/opening properties the
  constructions need.

The separator graphs P and M (also figure-only) are found by
:func:`find_separators`; the shipped builders use a frozen copy of the
search result so that fixtures regenerate without re-searching.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .graphs import (
    Bubble,
    ColoredGraph,
    Edge,
    GraphError,
    Leg,
    add_prefix,
    amputate,
    bubbles,
    canonical_certificate,
    connected_components,
    is_isomorphic,
    parse,
    relabel,
    remove_color,
)
from .ribbon import RibbonStructure
from .surgery import boundary_graph, cone, connected_sum, open_edge, separator_check

__all__ = [
    "ModelSpec",
    "builtin_model",
    "MembershipReport",
    "is_member",
    "enumerate_vacuum",
    "build",
    "build_families",
    "build_dipole",
    "build_melon",
    "build_r0",
    "build_r1",
    "build_necklace",
    "build_twopoint",
    "build_cg",
    "build_tg",
    "build_o",
    "build_n",
    "build_qg",
    "build_kg",
    "build_qgbc",
    "build_l",
    "build_p",
    "build_m",
    "build_ribbon_w",
    "build_ribbon_q",
    "build_ribbon_r",
    "SeparatorResult",
    "default_probes",
    "find_separators",
    "separator_p",
    "separator_m",
]


# -- model specifications ------------------------------------------------------


@dataclass(frozen=True)
class ModelSpec:
    """Rank D plus the interaction vertices (closed D-colored graphs)."""

    name: str
    rank: int
    upsilon: tuple[ColoredGraph, ...]
    vertex_names: tuple[str, ...]

    def __post_init__(self) -> None:
        for label, v in zip(self.vertex_names, self.upsilon):
            if v.colors != tuple(range(1, self.rank + 1)):
                raise GraphError(f"vertex {label}: colors {v.colors} != 1..{self.rank}")
            if v.is_open:
                raise GraphError(f"vertex {label} has legs")
            if len(connected_components(v)) != 1:
                raise GraphError(f"vertex {label} is not connected")


def _cycle_vertex(p: int) -> ColoredGraph:
    """The 2p-gonal matrix vertex: a 2p-cycle alternating colors 1, 2."""
    vertices = {}
    edges = []
    for i in range(1, p + 1):
        vertices[f"w{i}"] = "w"
        vertices[f"b{i}"] = "b"
        edges.append(Edge(f"s{i}", 1, f"w{i}", f"b{i}"))
        edges.append(Edge(f"t{i}", 2, f"w{i % p + 1}", f"b{i}"))
    return ColoredGraph((1, 2), vertices, edges)


def _rank3_vertex(i: int) -> ColoredGraph:
    """The quartic rank-3 vertex in which color i is transmitted.

    Colors j != i run in parallel (a-p, b-q); color i crosses (a-q, b-p).
    """
    edges = []
    for j in (1, 2, 3):
        if j == i:
            edges.append(Edge(f"c{j}1", j, "a", "q"))
            edges.append(Edge(f"c{j}2", j, "b", "p"))
        else:
            edges.append(Edge(f"c{j}1", j, "a", "p"))
            edges.append(Edge(f"c{j}2", j, "b", "q"))
    return ColoredGraph((1, 2, 3), {"a": "w", "b": "w", "p": "b", "q": "b"}, edges)


def builtin_model(name: str) -> ModelSpec:
    """Look up a built-in model: ``phi4-matrix``, ``phi4-rank3``, ``matrix-2p:<p>``."""
    if name == "phi4-matrix":
        return ModelSpec("phi4-matrix", 2, (_cycle_vertex(2),), ("V",))
    if name == "phi4-rank3":
        return ModelSpec(
            "phi4-rank3",
            3,
            tuple(_rank3_vertex(i) for i in (1, 2, 3)),
            ("V1", "V2", "V3"),
        )
    if name.startswith("matrix-2p:"):
        try:
            p = int(name.split(":", 1)[1])
        except ValueError:
            raise GraphError(f"bad matrix-2p parameter in {name!r}") from None
        if p < 2:
            raise GraphError("matrix-2p requires p >= 2")
        return ModelSpec(name, 2, (_cycle_vertex(p),), (f"V{2 * p}",))
    raise GraphError(f"unknown model {name!r}")


# -- membership ----------------------------------------------------------------


@dataclass(frozen=True)
class MembershipReport:
    """Verdict plus, per component of the 0-color-deleted interior, the
    matched vertex name (or None)."""

    ok: bool
    components: tuple[tuple[str, str | None], ...]

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        out = []
        for tag, match in self.components:
            verdict = match if match is not None else "no match"
            out.append(f"component {tag}: {verdict}")
        out.append("member" if self.ok else "not member")
        return out


def is_member(g: ColoredGraph, model: ModelSpec) -> MembershipReport:
    """Is g a Feynman graph of the model?

    Checks that every connected component of the amputated graph with the
    propagator color removed is exact-colors isomorphic to an interaction
    vertex.
    """
    expected = tuple(range(model.rank + 1))
    if g.colors != expected:
        raise GraphError(
            f"graph colors {g.colors} do not match rank-{model.rank} model "
            f"(expected {expected})"
        )
    inner = amputate(g) if g.is_open else g
    stripped = remove_color(inner, 0)
    entries = []
    ok = True
    for comp in connected_components(stripped):
        match = None
        for name, vertex in zip(model.vertex_names, model.upsilon):
            if is_isomorphic(comp, vertex, "exact-colors"):
                match = name
                break
        if match is None:
            ok = False
        entries.append((min(comp.vertices), match))
    return MembershipReport(ok, tuple(entries))


# -- Wick contraction ----------------------------------------------------------

_MAX_MATCHING_WHITES = 6


def enumerate_vacuum(
    model: ModelSpec, k: int, *, dedup: bool = False
) -> list[ColoredGraph]:
    """All vacuum graphs from k interaction vertices.

    Chooses k vertices from the model with repetition and contracts every
    white against every black vertex in all possible ways (perfect
    matchings by color 0).  The raw list counts each Wick contraction once;
    with ``dedup`` the list is reduced up to exact-colors isomorphism,
    keeping first occurrences in order.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    out: list[ColoredGraph] = []
    for combo in itertools.combinations_with_replacement(range(len(model.upsilon)), k):
        pieces = [add_prefix(model.upsilon[t], f"x{i}.") for i, t in enumerate(combo)]
        vertices: dict[str, str] = {}
        edges: list[Edge] = []
        for piece in pieces:
            vertices.update(piece.vertices)
            edges.extend(piece.edges.values())
        whites = sorted(v for v, p in vertices.items() if p == "w")
        blacks = sorted(v for v, p in vertices.items() if p == "b")
        if len(whites) > _MAX_MATCHING_WHITES:
            raise GraphError(
                f"{len(whites)} white vertices exceed the enumeration cap "
                f"({_MAX_MATCHING_WHITES}); k is too large for this model"
            )
        colors = (0,) + tuple(range(1, model.rank + 1))
        for matching in itertools.permutations(range(len(blacks))):
            zero_edges = [
                Edge(f"z{j}", 0, whites[j], blacks[matching[j]])
                for j in range(len(whites))
            ]
            out.append(ColoredGraph(colors, vertices, edges + zero_edges))
    if dedup:
        seen = set()
        unique = []
        for g in out:
            cert = canonical_certificate(g)
            if cert not in seen:
                seen.add(cert)
                unique.append(g)
        return unique
    return out


# -- small fixed graphs ---------------------------------------------------------


def build_dipole(d: int = 3, base: int = 1) -> ColoredGraph:
    """Two vertices joined by one edge of each of d colors."""
    if d < 1:
        raise GraphError("dipole needs at least one color")
    colors = tuple(range(base, base + d))
    return ColoredGraph(
        colors,
        {"w": "w", "b": "b"},
        [Edge(f"e{c}", c, "w", "b") for c in colors],
    )


def build_r1() -> ColoredGraph:
    """The quartic-matrix 2-vertex contraction realizing the torus."""
    return ColoredGraph(
        (0, 1, 2),
        {"p": "w", "q": "w", "x": "w", "y": "w", "a": "b", "b": "b", "c": "b", "d": "b"},
        [
            Edge("e1", 1, "p", "a"),
            Edge("e2", 2, "q", "a"),
            Edge("f1", 1, "q", "b"),
            Edge("f2", 2, "p", "b"),
            Edge("g1", 1, "x", "c"),
            Edge("g2", 2, "x", "d"),
            Edge("h1", 1, "y", "d"),
            Edge("h2", 2, "y", "c"),
            Edge("alpha0", 0, "x", "a"),
            Edge("beta0", 0, "p", "d"),
            Edge("gamma0", 0, "y", "b"),
            Edge("mu0", 0, "q", "c"),
        ],
    )


def build_r0() -> ColoredGraph:
    """The quartic-matrix 2-vertex contraction realizing the sphere."""
    return ColoredGraph(
        (0, 1, 2),
        {"p": "w", "q": "w", "x": "w", "y": "w", "a": "b", "b": "b", "c": "b", "d": "b"},
        [
            Edge("e1", 1, "p", "a"),
            Edge("e2", 2, "q", "a"),
            Edge("f1", 1, "q", "b"),
            Edge("f2", 2, "p", "b"),
            Edge("g1", 1, "x", "c"),
            Edge("g2", 2, "x", "d"),
            Edge("h1", 1, "y", "d"),
            Edge("h2", 2, "y", "c"),
            Edge("alpha0", 0, "x", "a"),
            Edge("beta0", 0, "y", "b"),
            Edge("gamma0", 0, "p", "c"),
            Edge("mu0", 0, "q", "d"),
        ],
    )


def build_necklace(base: int = 0) -> ColoredGraph:
    """The 4-colored necklace: a 4-cycle with doubled edges.

    The doubled edges carry the color pairs {base, base+1} and
    {base+2, base+3}; with the default base 0 this is the degree-1 vacuum
    graph whose jackets have genera (0, 1, 0).
    """
    c = base
    return ColoredGraph(
        (c, c + 1, c + 2, c + 3),
        {"p": "w", "q": "w", "a": "b", "b": "b"},
        [
            Edge("e1", c, "p", "b"),
            Edge("e2", c + 1, "p", "b"),
            Edge("e3", c + 2, "p", "a"),
            Edge("e4", c + 3, "p", "a"),
            Edge("f1", c, "q", "a"),
            Edge("f2", c + 1, "q", "a"),
            Edge("f3", c + 2, "q", "b"),
            Edge("f4", c + 3, "q", "b"),
        ],
    )


def build_twopoint() -> ColoredGraph:
    """A 2-point chain of three melonic blocks (open, 6 inner vertices).

    Its boundary is the propagator dipole; amputation leaves the 6-vertex
    interior.
    """
    vertices = {f"w{i}": "w" for i in (1, 2, 3)} | {f"b{i}": "b" for i in (1, 2, 3)}
    edges = [
        Edge(f"m{i}{c}", c, f"w{i}", f"b{i}") for i in (1, 2, 3) for c in (1, 2, 3)
    ]
    edges.append(Edge("z1", 0, "w2", "b1"))
    edges.append(Edge("z2", 0, "w3", "b2"))
    return ColoredGraph(
        (0, 1, 2, 3), vertices, edges, [Leg("lw", "w1"), Leg("lb", "b3")]
    )


def build_cg(g: int) -> ColoredGraph:
    """The canonical genus-g boundary template on colors 1, 2, 3.

    A 2(2g+1)-gon with alternating side colors 1 and 2 and the longest
    diagonals colored 3; C0 is the 3-dipole and C1 the colored K(3,3).
    """
    if g < 0:
        raise GraphError("genus must be >= 0")
    n = 2 * g + 1
    shift = (n - 1) // 2
    vertices = {f"w{i}": "w" for i in range(n)} | {f"b{i}": "b" for i in range(n)}
    edges = []
    for i in range(n):
        edges.append(Edge(f"s{i}", 1, f"w{i}", f"b{i}"))
        edges.append(Edge(f"t{i}", 2, f"w{(i + 1) % n}", f"b{i}"))
        edges.append(Edge(f"d{i}", 3, f"w{i}", f"b{(i + shift) % n}"))
    return ColoredGraph((1, 2, 3), vertices, edges)


# -- ribbon fixtures -------------------------------------------------------------


def build_ribbon_w() -> RibbonStructure:
    """One 4-valent vertex, opposite half-edges paired: genus 1, bc 1."""
    return RibbonStructure(
        {"v": ("h1", "h2", "h3", "h4")}, {"h1": "h3", "h2": "h4"}
    )


def build_ribbon_q() -> RibbonStructure:
    """One 4-valent vertex, adjacent half-edges paired: genus 0, bc 3."""
    return RibbonStructure(
        {"v": ("h1", "h2", "h3", "h4")}, {"h1": "h2", "h3": "h4"}
    )


def build_ribbon_r() -> RibbonStructure:
    """Theta graph with equal cyclic orders at both vertices: genus 1, bc 1."""
    return RibbonStructure(
        {"u": ("h1", "h2", "h3"), "v": ("k1", "k2", "k3")},
        {"h1": "k1", "h2": "k2", "h3": "k3"},
    )


# -- the torus block O and its sphere twin N -------------------------------------


def _o_base() -> ColoredGraph:
    """(R0 # R1) # R0', summed along the alpha0 / beta0 color-0 edges."""
    left = connected_sum(
        add_prefix(build_r0(), "r0."),
        "r0.alpha0",
        add_prefix(build_r1(), "r1."),
        "r1.alpha0",
    )
    return connected_sum(
        left, "r1.beta0", add_prefix(build_r0(), "r0b."), "r0b.alpha0"
    )


def _two_bubble_count(g: ColoredGraph) -> int:
    """Total number of 2-bubbles over all color pairs."""
    return sum(len(bubbles(g, pair)) for pair in itertools.combinations(g.colors, 2))


def _central_bubble(g: ColoredGraph, mu: str, nu: str) -> Bubble | None:
    """First (1,2)-bubble touching an endpoint of mu and one of nu."""
    em, en = g.edges[mu], g.edges[nu]
    ends_mu = {em.white, em.black}
    ends_nu = {en.white, en.black}
    for b in bubbles(g, (1, 2)):
        vs = set(b.vertices)
        if vs & ends_mu and vs & ends_nu:
            return b
    return None


def _swap_bubble_colors(g: ColoredGraph, bubble: Bubble) -> ColoredGraph:
    """Swap colors 1 <-> 2 on the edges of one (1,2)-bubble of g."""
    swap = {1: 2, 2: 1}
    target = set(bubble.edges)
    edges = [
        Edge(e.label, swap[e.color], e.white, e.black) if e.label in target else e
        for e in g.edges.values()
    ]
    return ColoredGraph(g.colors, dict(g.vertices), edges, g.legs.values())


def _chain(
    blocks: Sequence[ColoredGraph], left: str = "nu0", right: str = "mu0"
) -> ColoredGraph:
    """Connected-sum a row of blocks: the `left` edge of each block is summed
    with the `right` edge of the next.  Block k is namespaced ``o<k>.``."""
    s = add_prefix(blocks[0], "o1.")
    for k in range(2, len(blocks) + 1):
        s = connected_sum(
            s,
            f"o{k - 1}.{left}",
            add_prefix(blocks[k - 1], f"o{k}."),
            f"o{k}.{right}",
        )
    return s


def _opening_profile(g: ColoredGraph, alpha: str, beta: str) -> tuple[int, int]:
    """Boundary-circle counts after opening alpha, then beta as well."""
    once = open_edge(g, alpha)
    twice = open_edge(once, beta)
    return (
        len(connected_components(boundary_graph(once))),
        len(connected_components(boundary_graph(twice))),
    )


def _chain_conditions(
    base: ColoredGraph, bub: Bubble, mu: str, nu: str, alpha: str, beta: str
) -> bool:
    """Chain-level validation of a distinguished-edge candidate.

    With O = base (edges renamed) and N its central color swap: the 2-block
    chain must have 22 two-bubbles (chi = -2), the O-O-N chain 34
    (chi = -2), and opening alpha twice + beta twice + alpha once along the
    three blocks must create exactly 5 boundary circles.
    """
    o = relabel(base, edge_map={mu: "mu0", nu: "nu0", alpha: "alpha0", beta: "beta0"})
    n = _swap_bubble_colors(o, bub)
    if _two_bubble_count(_chain((o, o))) != 22:
        return False
    chain3 = _chain((o, o, n))
    if _two_bubble_count(chain3) != 34:
        return False
    for label in ("o1.alpha0", "o1.beta0", "o2.alpha0", "o2.beta0", "o3.alpha0"):
        chain3 = open_edge(chain3, label)
    return len(connected_components(boundary_graph(chain3))) == 5


def _search_o_edges(base: ColoredGraph) -> tuple[str, str, str, str]:
    """First (mu, nu, alpha, beta) choice of color-0 edges satisfying:

    * some (1,2)-bubble (the central one) touches endpoints of mu and nu;
    * no (0,1)- or (0,2)-bubble through alpha or beta contains mu or nu,
      so opening alpha/beta never disturbs the mu/nu chain faces;
    * swapping colors on the central bubble raises the 2-bubble count from
      12 to 14 (chi 0 -> 2);
    * on the block and on its swap, opening alpha creates one boundary
      circle and opening beta a second;
    * the chain-level conditions of :func:`_chain_conditions`.
    """
    if _two_bubble_count(base) != 12:
        raise GraphError("block graph should have 12 two-bubbles")
    zeros = sorted(e for e, x in base.edges.items() if x.color == 0)
    face_sets = [
        frozenset(b.edges) for b in bubbles(base, (0, 1)) + bubbles(base, (0, 2))
    ]
    centrals: dict[tuple[str, str], Bubble | None] = {}
    twins: dict[tuple, ColoredGraph | None] = {}
    profiles: dict[tuple, tuple[int, int]] = {}

    def central(mu: str, nu: str) -> Bubble | None:
        key = (mu, nu)
        if key not in centrals:
            centrals[key] = _central_bubble(base, mu, nu)
        return centrals[key]

    def twin(bub: Bubble) -> ColoredGraph | None:
        if bub.key not in twins:
            g = _swap_bubble_colors(base, bub)
            twins[bub.key] = g if _two_bubble_count(g) == 14 else None
        return twins[bub.key]

    def profile(tag, g: ColoredGraph, alpha: str, beta: str) -> tuple[int, int]:
        key = (tag, alpha, beta)
        if key not in profiles:
            profiles[key] = _opening_profile(g, alpha, beta)
        return profiles[key]

    for mu, nu, alpha, beta in itertools.permutations(zeros, 4):
        bub = central(mu, nu)
        if bub is None:
            continue
        if any(fs & {alpha, beta} and fs & {mu, nu} for fs in face_sets):
            continue
        n = twin(bub)
        if n is None:
            continue
        if profile("o", base, alpha, beta) != (1, 2):
            continue
        if profile(bub.key, n, alpha, beta) != (1, 2):
            continue
        if _chain_conditions(base, bub, mu, nu, alpha, beta):
            return mu, nu, alpha, beta
    raise GraphError("no distinguished-edge choice found in (R0 # R1) # R0'")


@lru_cache(maxsize=1)
def _o_structure() -> tuple[ColoredGraph, Bubble]:
    base = _o_base()
    mu, nu, alpha, beta = _search_o_edges(base)
    o = relabel(base, edge_map={mu: "mu0", nu: "nu0", alpha: "alpha0", beta: "beta0"})
    bub = _central_bubble(o, "mu0", "nu0")
    assert bub is not None
    return o, bub


def build_o() -> ColoredGraph:
    """The 24-vertex torus block (R0 # R1) # R0'.

    Its four distinguished color-0 edges are named mu0, nu0 (chaining) and
    alpha0, beta0 (boundary creation); see :func:`_search_o_edges` for how
    the naming is fixed.
    """
    return _o_structure()[0]


def build_n() -> ColoredGraph:
    """The sphere twin of O: the central (1,2)-bubble's colors swapped."""
    o, bub = _o_structure()
    return _swap_bubble_colors(o, bub)


def build_qg(g: int) -> ColoredGraph:
    """Chain of g torus blocks summed nu0-to-mu0 (closed, chi = 2 - 2g)."""
    if g < 1:
        raise GraphError("qg needs g >= 1")
    return _chain((build_o(),) * g)


def build_kg(g: int) -> ColoredGraph:
    """Chain of g torus blocks summed beta0-to-alpha0 (chi = 2 - 2g)."""
    if g < 1:
        raise GraphError("kg needs g >= 1")
    return _chain((build_o(),) * g, left="beta0", right="alpha0")


def build_qgbc(g: int, b: int = 0, c: int = 0) -> ColoredGraph:
    """The bordism chain: max(g, c) blocks, opened along alpha0/beta0.

    Block k is a torus block O for k <= g and the sphere twin N beyond;
    blocks k <= b have both alpha0 and beta0 opened (two boundary circles
    each), blocks b < k <= c only alpha0.  Total boundary circles: b + c.
    """
    if g < 0 or b < 0 or c < 0:
        raise GraphError("qgbc parameters must be non-negative")
    if b > c:
        raise GraphError("qgbc needs B <= C")
    m = max(g, c)
    if m < 1:
        raise GraphError("qgbc needs max(g, C) >= 1")
    o, n = build_o(), build_n()
    s = _chain(tuple(o if k <= g else n for k in range(1, m + 1)))
    for k in range(1, m + 1):
        if k <= b:
            s = open_edge(open_edge(s, f"o{k}.alpha0"), f"o{k}.beta0")
        elif k <= c:
            s = open_edge(s, f"o{k}.alpha0")
    return s


# -- the filled genus-g graphs Tg --------------------------------------------------

# Stub names on the white-side gadget pair with those on the black side:
# o with p (per color-1 edge), d with q (color 2), w with b (color 3).
_STUB_PARTNER = {"o": "p", "d": "q", "w": "b"}

# How a color-3 edge (w_i, b_j) of Cg maps to a gadget pair (a_i', m_j').
_Z3_RULES = (
    lambda i, j, n: (i, j),
    lambda i, j, n: (i, (j + 1) % n),
    lambda i, j, n: ((i + 1) % n, j),
    lambda i, j, n: (i, (j - 1) % n),
    lambda i, j, n: ((i - 1) % n, j),
)


def _leg_fragment(crossing: int, leg_vertex: str) -> ColoredGraph:
    """A quartic rank-3 vertex viewed inside a 4-colored graph, one leg."""
    frag = _rank3_vertex(crossing)
    return ColoredGraph(
        (0, 1, 2, 3), frag.vertices, frag.edges.values(), [Leg("leg", leg_vertex)]
    )


def _iter_gadget_configs():
    """All parity-consistent gadget labelings, in deterministic order.

    A configuration is (t, s, wa, ba, rule): the crossing colors of the
    white- and black-side fragments, the assignment of stub names (o,d,w)
    to the white fragment's non-legged vertices (b,p,q), the assignment of
    (p,q,b) to the black fragment's (a,b,q), and the color-3 contraction
    rule.  Parity: the single white stub on the white side must pair with
    the single black stub on the black side.
    """
    for t, s in itertools.product((1, 2, 3), repeat=2):
        for wa in itertools.permutations(("b", "p", "q")):
            white_stub = ("o", "d", "w")[wa.index("b")]
            for ba in itertools.permutations(("a", "b", "q")):
                black_stub = ("p", "q", "b")[ba.index("q")]
                if _STUB_PARTNER[white_stub] != black_stub:
                    continue
                for rule in range(len(_Z3_RULES)):
                    yield (t, s, wa, ba, rule)


def _tg(g: int, cfg) -> ColoredGraph:
    """Build Tg from a gadget configuration: one gadget per Cg vertex."""
    t, s, wa, ba, rule = cfg
    n = 2 * g + 1
    shift = (n - 1) // 2
    vertices: dict[str, str] = {}
    edges: list[Edge] = []
    legs: list[Leg] = []
    a_stub: list[dict[str, str]] = []
    m_stub: list[dict[str, str]] = []
    for i in range(n):
        for prefix, crossing, leg_at, names, assign, stubs in (
            (f"a{i}.", t, "a", ("o", "d", "w"), wa, a_stub),
            (f"m{i}.", s, "p", ("p", "q", "b"), ba, m_stub),
        ):
            piece = add_prefix(_leg_fragment(crossing, leg_at), prefix)
            vertices.update(piece.vertices)
            edges.extend(piece.edges.values())
            legs.extend(piece.legs.values())
            stubs.append({k: prefix + v for k, v in zip(names, assign)})

    def contract(label: str, u: str, v: str) -> None:
        white, black = (u, v) if vertices[u] == "w" else (v, u)
        edges.append(Edge(label, 0, white, black))

    for i in range(n):
        contract(f"z1.{i}", a_stub[i]["o"], m_stub[i]["p"])
        contract(f"z2.{i}", a_stub[(i + 1) % n]["d"], m_stub[i]["q"])
        i2, j2 = _Z3_RULES[rule](i, (i + shift) % n, n)
        contract(f"z3.{i}", a_stub[i2]["w"], m_stub[j2]["b"])
    return ColoredGraph((0, 1, 2, 3), vertices, edges, legs)


@lru_cache(maxsize=1)
def _gadget_config():
    """The first gadget configuration with boundary(T1) = C1, boundary(T2) = C2."""
    survivors = []
    c1 = build_cg(1)
    for cfg in _iter_gadget_configs():
        t1 = _tg(1, cfg)
        if len(connected_components(t1)) != 1:
            continue
        if not is_isomorphic(boundary_graph(t1), c1):
            continue
        survivors.append(cfg)
    c2 = build_cg(2)
    for cfg in survivors:
        if is_isomorphic(boundary_graph(_tg(2, cfg)), c2):
            return cfg
    raise GraphError("no gadget labeling reproduces the canonical boundaries")


def build_tg(g: int) -> ColoredGraph:
    """The open 4-colored graph filling Cg: boundary(Tg) = Cg.

    Each vertex of Cg is replaced by a quartic rank-3 vertex with one leg;
    the color-0 contractions between gadgets follow the edges of Cg.  The
    gadget internals are searched once (bounded, deterministic) and cached.
    """
    if g < 0:
        raise GraphError("genus must be >= 0")
    return _tg(g, _gadget_config())


# -- separators and the multi-boundary chain L ------------------------------------


@dataclass(frozen=True)
class SeparatorResult:
    """A separator graph with its two distinguished color-0 splice edges."""

    graph: ColoredGraph
    k: str
    l: str


def default_probes() -> list[tuple[ColoredGraph, ColoredGraph]]:
    """Probe pairs used to certify separators: (T1,T1), (T1,T2), (cone C1, T1)."""
    t1 = build_tg(1)
    return [(t1, t1), (t1, build_tg(2)), (cone(build_cg(1)), t1)]


def find_separators(
    model: ModelSpec,
    max_vertices: int,
    probes: Sequence[tuple[ColoredGraph, ColoredGraph]] | None = None,
) -> tuple[SeparatorResult, SeparatorResult]:
    """Search vacuum graphs for the first two non-isomorphic separators.

    Scans enumerate_vacuum outputs for k = 1..max_vertices interaction
    vertices (deduplicated, in order) and every ordered pair of distinct
    color-0 edges, keeping configurations that pass separator_check on all
    probes.  Returns the first hit and the first hit on a graph not
    isomorphic to it.
    """
    if model.rank != 3:
        raise GraphError("separator search is defined for rank-3 models")
    if max_vertices < 1:
        raise GraphError("max_vertices must be >= 1")
    if probes is None:
        probes = default_probes()
    first: SeparatorResult | None = None
    for k in range(1, max_vertices + 1):
        for g in enumerate_vacuum(model, k, dedup=True):
            if first is not None and is_isomorphic(g, first.graph):
                continue
            zeros = sorted(e for e, x in g.edges.items() if x.color == 0)
            for ke, le in itertools.permutations(zeros, 2):
                if not separator_check(g, ke, le, probes):
                    continue
                if first is None:
                    first = SeparatorResult(g, ke, le)
                    break
                return first, SeparatorResult(g, ke, le)
    raise GraphError(
        ("only one separator" if first else "no separator")
        + f" found within {max_vertices} interaction vertices; raise the bound"
    )


# Frozen copy of find_separators(builtin_model("phi4-rank3"), 2): the shipped
# builders must not re-run the search.  Regenerate with the find-separators
# CLI command if the search logic changes.  P is the one-vertex vacuum graph
# whose color-0 edges run parallel to the non-crossing colors; M is the first
# non-isomorphic passer in enumeration order (two disjoint copies of P,
# spliced through one copy).
_P_TEXT: str | None = """\
colors 3 open
v x0.a w
v x0.b w
v x0.p b
v x0.q b
e x0.c11 1 x0.a x0.q
e x0.c12 1 x0.b x0.p
e x0.c21 2 x0.a x0.p
e x0.c22 2 x0.b x0.q
e x0.c31 3 x0.a x0.p
e x0.c32 3 x0.b x0.q
e z0 0 x0.a x0.p
e z1 0 x0.b x0.q
"""
_P_EDGES = ("z0", "z1")
_M_TEXT: str | None = """\
colors 3 open
v x0.a w
v x0.b w
v x0.p b
v x0.q b
v x1.a w
v x1.b w
v x1.p b
v x1.q b
e x0.c11 1 x0.a x0.q
e x0.c12 1 x0.b x0.p
e x0.c21 2 x0.a x0.p
e x0.c22 2 x0.b x0.q
e x0.c31 3 x0.a x0.p
e x0.c32 3 x0.b x0.q
e x1.c11 1 x1.a x1.q
e x1.c12 1 x1.b x1.p
e x1.c21 2 x1.a x1.p
e x1.c22 2 x1.b x1.q
e x1.c31 3 x1.a x1.p
e x1.c32 3 x1.b x1.q
e z0 0 x0.a x0.p
e z1 0 x0.b x0.q
e z2 0 x1.a x1.p
e z3 0 x1.b x1.q
"""
_M_EDGES = ("z0", "z1")


@lru_cache(maxsize=1)
def _frozen_separators() -> tuple[SeparatorResult, SeparatorResult]:
    if _P_TEXT is None or _M_TEXT is None:
        return find_separators(builtin_model("phi4-rank3"), 2)
    return (
        SeparatorResult(parse(_P_TEXT), *_P_EDGES),
        SeparatorResult(parse(_M_TEXT), *_M_EDGES),
    )


def separator_p() -> SeparatorResult:
    """The first discovered separator, with its splice edges."""
    return _frozen_separators()[0]


def separator_m() -> SeparatorResult:
    """The second (non-isomorphic) discovered separator."""
    return _frozen_separators()[1]


def build_p() -> ColoredGraph:
    return separator_p().graph


def build_m() -> ColoredGraph:
    return separator_m().graph


def _first_internal_zero(g: ColoredGraph, prefix: str) -> str:
    """First (sorted) color-0 edge in a namespace, skipping sum replacements."""
    for label in sorted(g.edges):
        e = g.edges[label]
        if e.color == 0 and label.startswith(prefix) and not label.endswith("'"):
            return label
    raise GraphError(f"no internal color-0 edge with prefix {prefix!r}")


def build_l(genera: Sequence[int]) -> ColoredGraph:
    """The multi-boundary chain T_g1 # P # T_g2 # P # ... # T_gb.

    Each separator P is spliced between consecutive T blocks along its two
    distinguished edges, so the boundary is the disjoint union of the Cg's.
    A single genus gives T_g1 alone.
    """
    genera = tuple(genera)
    if not genera:
        raise GraphError("l needs at least one genus")
    if any(g < 0 for g in genera):
        raise GraphError("genera must be non-negative")
    sep = separator_p()
    s = add_prefix(build_tg(genera[0]), "t1.")
    for i in range(2, len(genera) + 1):
        block = add_prefix(build_tg(genera[i - 1]), f"t{i}.")
        pin = add_prefix(sep.graph, f"p{i}.")
        s = connected_sum(
            s, _first_internal_zero(s, f"t{i - 1}."), pin, f"p{i}.{sep.k}"
        )
        s = connected_sum(
            s, f"p{i}.{sep.l}", block, _first_internal_zero(block, f"t{i}.")
        )
    return s


# -- family registry ----------------------------------------------------------------


def build_melon() -> ColoredGraph:
    """The elementary melon: the 4-dipole on colors 0..3 (degree 0)."""
    return build_dipole(4, base=0)


build_families = {
    "dipole": build_dipole,
    "r0": build_r0,
    "r1": build_r1,
    "necklace": build_necklace,
    "melon": build_melon,
    "twopoint": build_twopoint,
    "cg": build_cg,
    "tg": build_tg,
    "o": build_o,
    "n": build_n,
    "qg": build_qg,
    "kg": build_kg,
    "qgbc": build_qgbc,
    "l": build_l,
    "p": build_p,
    "m": build_m,
    "ribbon-w": build_ribbon_w,
    "ribbon-q": build_ribbon_q,
    "ribbon-r": build_ribbon_r,
}


def build(family: str, **params):
    """Build a named family member; see ``build_families`` for the names."""
    try:
        builder = build_families[family]
    except KeyError:
        known = ", ".join(sorted(build_families))
        raise GraphError(f"unknown family {family!r} (known: {known})") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family!r}: {exc}") from None
