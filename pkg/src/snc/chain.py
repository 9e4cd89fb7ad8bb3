"""Bitstrings as directed vertex chains.

A bitstring of length n becomes a path of n fresh vertices with an edge
between consecutive positions; a self-loop on position k marks bit k as 1.
Decoding walks the unique non-loop path that covers every vertex and reads
the loops back off.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDecodableError
from .labels import Bits
from .model import DirectedNetwork, IdAllocator


@dataclass(frozen=True)
class Chain:
    """A chain-shaped directed network plus its vertex order."""

    order: tuple[str, ...]
    network: DirectedNetwork


def bits_to_chain(bits: Bits, ids: IdAllocator | None = None) -> Chain:
    """Encode a non-empty bitstring as a fresh chain network."""
    bits = tuple(bits)
    if not bits:
        raise ValueError("cannot encode an empty bitstring")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be 0 or 1, got {bits!r}")
    if ids is None:
        ids = IdAllocator()
    order = tuple(ids.fresh() for _ in bits)
    edges = set(zip(order, order[1:]))
    edges.update((v, v) for v, bit in zip(order, bits) if bit)
    return Chain(order, DirectedNetwork(frozenset(order), frozenset(edges)))


def chain_order(net: DirectedNetwork) -> tuple[str, ...]:
    """Vertex order of a chain-shaped network, or NotDecodableError.

    Chain-shaped means: exactly one vertex without incoming non-loop
    edges, and following the unique non-loop out-edges from it visits
    every vertex exactly once.
    """
    if not net.vertices:
        raise NotDecodableError("empty network is not a chain")
    sources = [v for v in net.vertices if not (net.predecessors(v) - {v})]
    if len(sources) != 1:
        raise NotDecodableError(f"chain must have exactly one start vertex, found {len(sources)}")
    order = []
    seen = set()
    current: str | None = sources[0]
    while current is not None:
        if current in seen:
            raise NotDecodableError("non-loop edges revisit a vertex; not a chain")
        order.append(current)
        seen.add(current)
        nxt = net.successors(current) - {current}
        if len(nxt) > 1:
            raise NotDecodableError(f"vertex {current!r} branches; not a chain")
        current = next(iter(nxt)) if nxt else None
    if len(order) != len(net.vertices):
        raise NotDecodableError("non-loop path does not reach every vertex; not a chain")
    return tuple(order)


def chain_to_bits(net: DirectedNetwork) -> Bits:
    """Decode a chain-shaped network back to its bitstring."""
    return tuple(1 if (v, v) in net.edges else 0 for v in chain_order(net))
