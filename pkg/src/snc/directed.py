"""Semantic networks as plain directed networks.

Each triple becomes a fresh label chain whose ends are tied to the
subject and to the object with mutual edge pairs, so both the label and
the edge direction survive as pure topology:

    subject <-> b1 -> b2 -> ... -> bn <-> object

with a self-loop on bk for every 1-bit of the label's code. Original
vertices are recognizable afterwards: they are exactly the loop-free
vertices of even total degree that sit on a mutual edge pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .chain import bits_to_chain
from .errors import CodebookError, NotDecodableError
from .labels import Codebook
from .model import DirectedNetwork, IdAllocator, SemanticNetwork, Triple


@dataclass(frozen=True)
class LabelPath:
    """One decoded triple pattern: subject, chain vertices in order, object."""

    subject: str
    chain: tuple[str, ...]
    obj: str


def semantic_to_directed(
    net: SemanticNetwork,
    codebook: Codebook,
    ids: IdAllocator | None = None,
) -> DirectedNetwork:
    """Encode a semantic network as a directed network."""
    if ids is None:
        ids = IdAllocator()
    ids.reserve(net.vertices)
    vertices = set(net.vertices)
    edges: set[tuple[str, str]] = set()
    for triple in sorted(net.triples):
        chain = bits_to_chain(codebook.encode(triple.label), ids)
        vertices.update(chain.order)
        edges.update(chain.network.edges)
        first, last = chain.order[0], chain.order[-1]
        edges.update(
            [
                (triple.subject, first),
                (first, triple.subject),
                (last, triple.obj),
                (triple.obj, last),
            ]
        )
    return DirectedNetwork(frozenset(vertices), frozenset(edges))


def original_vertices(net: DirectedNetwork) -> frozenset[str]:
    """Vertices with even total degree, no self-loop, and a mutual-edge partner."""
    found = set()
    for v in net.vertices:
        succ = net.successors(v)
        if v in succ or net.degree(v) % 2:
            continue
        if any((u, v) in net.edges for u in succ):
            found.add(v)
    return frozenset(found)


def find_label_paths(
    net: DirectedNetwork,
    originals: frozenset[str],
    max_chain: int | None = None,
) -> frozenset[LabelPath]:
    """All chain patterns running from one original vertex to another.

    A valid path enters the chain through a mutual edge pair, follows
    forward edges through at least two non-original vertices, and leaves
    through a mutual edge pair. Chain members must not be connected to
    each other except by the consecutive forward edges: a mutual pair or
    any longer cycle inside the chain disqualifies the candidate.
    """
    found = set()
    for subject in originals:
        for first in net.successors(subject):
            if first in originals or (first, subject) not in net.edges:
                continue
            stack = [(first,)]
            while stack:
                seq = stack.pop()
                tail = seq[-1]
                if len(seq) >= 2:
                    for obj in net.successors(tail):
                        if obj in originals and (obj, tail) in net.edges:
                            found.add(LabelPath(subject, seq, obj))
                if max_chain is not None and len(seq) >= max_chain:
                    continue
                for nxt in net.successors(tail):
                    if nxt == tail or nxt in originals or nxt in seq:
                        continue
                    if (nxt, tail) in net.edges:
                        continue
                    if any((b, nxt) in net.edges or (nxt, b) in net.edges for b in seq[:-1]):
                        continue
                    stack.append(seq + (nxt,))
    return frozenset(found)


def _path_edges(path: LabelPath, bits: tuple[int, ...]) -> list[tuple[str, str]]:
    chain = path.chain
    edges = [
        (path.subject, chain[0]),
        (chain[0], path.subject),
        (chain[-1], path.obj),
        (path.obj, chain[-1]),
    ]
    edges.extend(zip(chain, chain[1:]))
    edges.extend((b, b) for b, bit in zip(chain, bits) if bit)
    return edges


def directed_to_semantic(net: DirectedNetwork, codebook: Codebook) -> SemanticNetwork:
    """Decode a directed network produced by :func:`semantic_to_directed`.

    The input is validated, not assumed: every edge and every vertex must
    be accounted for by exactly one decoded label path, every chain must
    have the codebook's width, and every chain must carry an assigned
    code. Anything else raises NotDecodableError.
    """
    originals = original_vertices(net)
    paths = find_label_paths(net, originals, max_chain=codebook.width)
    used: Counter[tuple[str, str]] = Counter()
    triples = set()
    chain_vertices = set()
    for path in paths:
        if len(path.chain) != codebook.width:
            raise NotDecodableError(
                f"label chain between {path.subject!r} and {path.obj!r} has "
                f"length {len(path.chain)}, codebook width is {codebook.width}"
            )
        bits = tuple(1 if (b, b) in net.edges else 0 for b in path.chain)
        try:
            label = codebook.decode(bits)
        except CodebookError as exc:
            raise NotDecodableError(f"chain code {bits!r} is not assigned in the codebook") from exc
        triples.add(Triple(path.subject, label, path.obj))
        chain_vertices.update(path.chain)
        used.update(_path_edges(path, bits))
    if any(count > 1 for count in used.values()):
        raise NotDecodableError("decoded label paths overlap")
    leftover = net.edges - set(used)
    if leftover:
        raise NotDecodableError(f"{len(leftover)} edge(s) not covered by any label path")
    if originals | chain_vertices != net.vertices:
        raise NotDecodableError("vertices left over after label path matching")
    if len(paths) != len(triples):
        raise NotDecodableError("distinct label paths decode to the same triple")
    return SemanticNetwork(frozenset(triples))
