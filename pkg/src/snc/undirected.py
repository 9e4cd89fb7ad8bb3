"""Directed networks as undirected networks.

Every vertex of the directed network gets an undirected self-loop as a
marker; every directed edge (i, j) becomes a fresh three-vertex gadget

    i -- x,  x -- y,  x -- z,  y -- j,  z -- j

whose asymmetry (one edge on the tail side, two parallel two-step arms on
the head side) encodes the direction. Gadget vertices never carry loops,
so markers and gadgets cannot be confused.
"""

from __future__ import annotations

from collections import Counter

from .errors import NotDecodableError
from .model import DirectedNetwork, IdAllocator, UndirectedNetwork, undirected_edge


def directed_to_undirected(net: DirectedNetwork, ids: IdAllocator | None = None) -> UndirectedNetwork:
    """Encode a directed network (self-loops included) as an undirected one."""
    if ids is None:
        ids = IdAllocator()
    ids.reserve(net.vertices)
    vertices = set(net.vertices)
    edges = {undirected_edge(v, v) for v in net.vertices}
    for tail, head in sorted(net.edges):
        x, y, z = ids.fresh(), ids.fresh(), ids.fresh()
        vertices.update((x, y, z))
        edges.update(
            undirected_edge(a, b)
            for a, b in [(tail, x), (x, y), (x, z), (y, head), (z, head)]
        )
    return UndirectedNetwork(frozenset(vertices), frozenset(edges))


def has_direction_gadget(net: UndirectedNetwork, tail: str, head: str) -> bool:
    """True iff a direction gadget runs from tail to head.

    Requires pairwise-distinct, loop-free x, y, z outside {tail, head}
    with the five gadget edges present, x of degree 3 and y, z of
    degree 2. Satisfied by every generated gadget and decidable on
    arbitrary input.
    """
    for x in net.neighbors(tail):
        if x in (tail, head) or (x, x) in net.edges or net.degree(x) != 3:
            continue
        arms = [
            w
            for w in net.neighbors(x)
            if w not in (tail, head, x)
            and (w, w) not in net.edges
            and net.degree(w) == 2
            and undirected_edge(w, head) in net.edges
        ]
        if len(arms) >= 2:
            return True
    return False


def undirected_to_directed(net: UndirectedNetwork) -> DirectedNetwork:
    """Decode an undirected network produced by :func:`directed_to_undirected`.

    Original vertices are the self-looped ones. Each loop-free unmarked
    vertex of degree 3 must be the center of a well-formed gadget; every
    other unmarked vertex must be consumed as one of its arms, and every
    edge must be either a marker or part of exactly one gadget.
    """
    marked = net.self_loops
    unmarked = net.vertices - marked
    used: Counter[tuple[str, str]] = Counter((v, v) for v in marked)
    decoded = set()
    consumed = set()
    gadgets = 0
    for x in sorted(unmarked):
        if (x, x) in net.edges or net.degree(x) != 3:
            continue
        tails = [v for v in net.neighbors(x) if v in marked]
        arms = sorted(v for v in net.neighbors(x) if v not in marked)
        if len(tails) != 1 or len(arms) != 2:
            raise NotDecodableError(f"vertex {x!r} does not match a direction gadget")
        heads = set()
        for arm in arms:
            if (arm, arm) in net.edges or net.degree(arm) != 2:
                raise NotDecodableError(f"gadget arm {arm!r} is malformed")
            (head,) = net.neighbors(arm) - {x}
            if head not in marked:
                raise NotDecodableError(f"gadget arm {arm!r} does not end at a marked vertex")
            heads.add(head)
        if len(heads) != 1:
            raise NotDecodableError(f"gadget arms of {x!r} disagree on the head vertex")
        (head,) = heads
        tail = tails[0]
        y, z = arms
        used.update(
            undirected_edge(a, b)
            for a, b in [(tail, x), (x, y), (x, z), (y, head), (z, head)]
        )
        decoded.add((tail, head))
        consumed.update((x, y, z))
        gadgets += 1
    if any(count > 1 for count in used.values()):
        raise NotDecodableError("direction gadgets overlap")
    leftover = net.edges - set(used)
    if leftover:
        raise NotDecodableError(f"{len(leftover)} edge(s) not covered by markers or gadgets")
    if marked | consumed != net.vertices:
        raise NotDecodableError("vertices left over after gadget matching")
    if gadgets != len(decoded):
        raise NotDecodableError("duplicate direction gadgets for the same edge")
    return DirectedNetwork(marked, frozenset(decoded))
