"""Graph surgery: connected sums, edge opening/capping, cones, boundaries.

All operations are label-driven and pure.  The connected sum cuts one
same-colored edge in each summand and cross-rejoins the four loose ends;
along color 0 it is the QFT-compatible gluing (both summands' Feynman
structure survives).  The crystallization-style sum instead deletes a white
vertex in one graph and a black vertex in the other and rejoins the hanging
half-edges color by color -- topologically also a connected sum, but it
generally leaves the Feynman class.

Opening an internal color-0 edge replaces it by two legs; capping two legs
of opposite parity restores an edge.  The cone over a closed D-colored
graph ``b`` is the open (D+1)-colored graph with one leg per vertex of
``b``; its boundary is ``b`` again.

The boundary graph of an open graph has one vertex per leg and one color-c
edge for each alternating (0, c)-path between legs; regularity of the input
makes the path tracing deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import (
    ColoredGraph,
    Edge,
    GraphError,
    Leg,
    add_prefix,
    connected_components,
    disjoint_union,
    is_isomorphic,
)

__all__ = [
    "connected_sum",
    "crys_sum",
    "open_edge",
    "close_legs",
    "cone",
    "boundary_graph",
    "separator_check",
]


def _fresh(label: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    while label in taken:
        label += "'"
    return label


def _namespace_pair(
    a: ColoredGraph, b: ColoredGraph
) -> tuple[ColoredGraph, ColoredGraph, str, str]:
    """Prefix both graphs' labels if any collide; return the prefixes used."""
    if (
        set(a.vertices) & set(b.vertices)
        or set(a.edges) & set(b.edges)
        or set(a.legs) & set(b.legs)
    ):
        return add_prefix(a, "l."), add_prefix(b, "r."), "l.", "r."
    return a, b, "", ""


def connected_sum(a: ColoredGraph, e: str, b: ColoredGraph, f: str) -> ColoredGraph:
    """Cut edge e of a and edge f of b (same color) and cross-rejoin.

    The replacement edges run source-of-e -> target-of-f (named ``<e>'``)
    and source-of-f -> target-of-e (named ``<f>'``).  If the two graphs'
    labels collide, both sides are namespaced (``l.``/``r.``) first.
    """
    if a.colors != b.colors:
        raise GraphError(f"color sets differ: {a.colors} vs {b.colors}")
    if e not in a.edges:
        raise GraphError(f"no edge {e!r} in the first summand")
    if f not in b.edges:
        raise GraphError(f"no edge {f!r} in the second summand")
    a2, b2, pa, pb = _namespace_pair(a, b)
    e2, f2 = pa + e, pb + f
    ea, fb = a2.edges[e2], b2.edges[f2]
    if ea.color != fb.color:
        raise GraphError(f"edge colors differ: {ea.color} vs {fb.color}")
    edges = [x for x in a2.edges.values() if x.label != e2]
    edges += [x for x in b2.edges.values() if x.label != f2]
    taken = {x.label for x in edges}
    e_new = _fresh(e2 + "'", taken)
    taken.add(e_new)
    f_new = _fresh(f2 + "'", taken)
    edges.append(Edge(e_new, ea.color, ea.white, fb.black))
    edges.append(Edge(f_new, fb.color, fb.white, ea.black))
    return ColoredGraph(
        a2.colors,
        {**a2.vertices, **b2.vertices},
        edges,
        list(a2.legs.values()) + list(b2.legs.values()),
    )


def crys_sum(a: ColoredGraph, p: str, b: ColoredGraph, q: str) -> ColoredGraph:
    """Delete white vertex p of a and black vertex q of b; rejoin by color.

    For each color c, the hanging half-edge at p's former c-neighbor is
    joined to the one at q's former c-neighbor.  Requires both graphs
    closed, on the same colors, with full color slots at p and q.
    """
    if a.colors != b.colors:
        raise GraphError(f"color sets differ: {a.colors} vs {b.colors}")
    if a.is_open or b.is_open:
        raise GraphError("crys sum requires closed graphs")
    if p not in a.vertices or a.parity(p) != "w":
        raise GraphError(f"{p!r} is not a white vertex of the first summand")
    if q not in b.vertices or b.parity(q) != "b":
        raise GraphError(f"{q!r} is not a black vertex of the second summand")
    a2, b2, pa, pb = _namespace_pair(a, b)
    p2, q2 = pa + p, pb + q
    edges = [x for x in a2.edges.values() if p2 not in (x.white, x.black)]
    edges += [x for x in b2.edges.values() if q2 not in (x.white, x.black)]
    taken = {x.label for x in edges}
    for c in a2.colors:
        ea = a2.edge_at(p2, c)
        eb = b2.edge_at(q2, c)
        if ea is None or eb is None:
            raise GraphError(f"missing color {c} at {p2!r} or {q2!r}")
        label = _fresh(f"{ea.label}~{eb.label}", taken)
        taken.add(label)
        edges.append(Edge(label, c, eb.white, ea.black))
    vertices = {v: par for v, par in a2.vertices.items() if v != p2}
    vertices.update((v, par) for v, par in b2.vertices.items() if v != q2)
    return ColoredGraph(a2.colors, vertices, edges)


def open_edge(g: ColoredGraph, e: str) -> ColoredGraph:
    """Replace the internal color-0 edge e by two legs (``<e>.w``, ``<e>.b``)."""
    if e not in g.edges:
        raise GraphError(f"no edge {e!r}")
    edge = g.edges[e]
    if edge.color != 0:
        raise GraphError(f"edge {e!r} has color {edge.color}, not 0")
    taken = set(g.legs)
    lw = _fresh(f"{e}.w", taken)
    taken.add(lw)
    lb = _fresh(f"{e}.b", taken)
    legs = list(g.legs.values()) + [Leg(lw, edge.white), Leg(lb, edge.black)]
    return ColoredGraph(
        g.colors,
        dict(g.vertices),
        [x for x in g.edges.values() if x.label != e],
        legs,
    )


def close_legs(g: ColoredGraph, l1: str, l2: str) -> ColoredGraph:
    """Replace two legs of opposite parity by a color-0 edge (``<l1>~<l2>``)."""
    for l in (l1, l2):
        if l not in g.legs:
            raise GraphError(f"no leg {l!r}")
    v1, v2 = g.legs[l1].vertex, g.legs[l2].vertex
    p1, p2 = g.parity(v1), g.parity(v2)
    if p1 == p2:
        raise GraphError(f"legs {l1!r} and {l2!r} sit on same-parity vertices")
    white, black = (v1, v2) if p1 == "w" else (v2, v1)
    label = _fresh(f"{l1}~{l2}", g.edges)
    return ColoredGraph(
        g.colors,
        dict(g.vertices),
        list(g.edges.values()) + [Edge(label, 0, white, black)],
        [x for x in g.legs.values() if x.label not in (l1, l2)],
    )


def cone(b: ColoredGraph) -> ColoredGraph:
    """The open (D+1)-colored graph with one leg per vertex of b.

    The inner copy keeps b's vertices, edges and parities; each vertex v
    gets a leg ``v'``.  The boundary of the cone is b again.
    """
    if b.is_open:
        raise GraphError("cone requires a closed graph")
    if 0 in b.colors:
        raise GraphError("cone input must not use color 0")
    return ColoredGraph(
        (0,) + b.colors,
        dict(b.vertices),
        b.edges.values(),
        [Leg(f"{v}'", v) for v in sorted(b.vertices)],
    )


def boundary_graph(g: ColoredGraph) -> ColoredGraph:
    """The D-colored graph on the legs of g.

    One vertex per leg (parity inherited from the legged inner vertex); for
    each leg on a white vertex and each color c != 0, the alternating
    (0, c)-path from that vertex ends at a black-legged vertex, giving one
    color-c edge.  Closed graphs have empty boundary.
    """
    if 0 not in g.colors:
        raise GraphError("boundary graph needs color 0 in the color set")
    colors = tuple(c for c in g.colors if c != 0)
    if not g.legs:
        return ColoredGraph(colors, {})
    leg_of = {l.vertex: l.label for l in g.legs.values()}
    vertices = {l.label: g.parity(l.vertex) for l in g.legs.values()}
    edges = []
    for label, leg in sorted(g.legs.items()):
        if g.parity(leg.vertex) != "w":
            continue
        for c in colors:
            cur = leg.vertex
            while True:
                nxt = g.neighbor(cur, c)
                if nxt is None:
                    raise GraphError(
                        f"broken (0,{c})-path at vertex {cur!r}: missing color {c}"
                    )
                if nxt in leg_of:
                    edges.append(Edge(f"{label}.{c}", c, label, leg_of[nxt]))
                    break
                cur = g.neighbor(nxt, 0)
                if cur is None:
                    raise GraphError(
                        f"broken (0,{c})-path at vertex {nxt!r}: no color-0 edge or leg"
                    )
    return ColoredGraph(colors, vertices, edges)


def separator_check(
    p: ColoredGraph,
    k: str,
    l: str,
    probes: Sequence[tuple[ColoredGraph, ColoredGraph]],
    *,
    choice: str = "first",
) -> bool:
    """Does splicing p (along k, l) between probe pairs split their boundaries?

    For each probe pair (G, H), G is summed to p along an internal color-0
    edge of G and k, then H along l and an internal color-0 edge of H; the
    check holds if the boundary of the splice is isomorphic to the disjoint
    union of the boundaries of G and H.  ``choice='first'`` uses the first
    internal color-0 edge (by label) on each side; ``choice='all'`` demands
    the property for every choice.  A probe side with no internal color-0
    edge admits no choice and is skipped (vacuously true).
    """
    for label in (k, l):
        if label not in p.edges or p.edges[label].color != 0:
            raise GraphError(f"{label!r} is not a color-0 edge of the separator")
    if k == l:
        raise GraphError("the two separator edges must be distinct")
    if choice not in ("first", "all"):
        raise GraphError(f"unknown edge choice mode {choice!r}")

    for g_probe, h_probe in probes:
        g_edges = sorted(e for e, x in g_probe.edges.items() if x.color == 0)
        h_edges = sorted(e for e, x in h_probe.edges.items() if x.color == 0)
        if not g_edges or not h_edges:
            continue
        if choice == "first":
            g_edges, h_edges = g_edges[:1], h_edges[:1]
        expected = disjoint_union(boundary_graph(g_probe), boundary_graph(h_probe))
        g2 = add_prefix(g_probe, "g.")
        h2 = add_prefix(h_probe, "h.")
        p2 = add_prefix(p, "p.")
        for ge in g_edges:
            left = connected_sum(g2, "g." + ge, p2, "p." + k)
            for he in h_edges:
                spliced = connected_sum(left, "p." + l, h2, "h." + he)
                if not is_isomorphic(boundary_graph(spliced), expected):
                    return False
    return True
