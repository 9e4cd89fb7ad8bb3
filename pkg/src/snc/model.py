"""Network value types shared by every codec.

Vertex and label identifiers are opaque printable tokens. No decoder ever
reads meaning out of a token: everything is recovered from topology alone,
so all three network kinds stay correct under arbitrary renaming.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple


def check_token(token: str) -> str:
    """Validate a vertex or label identifier: non-empty, printable, no whitespace."""
    if not isinstance(token, str) or not token:
        raise ValueError(f"identifier must be a non-empty string, got {token!r}")
    if not token.isprintable() or any(ch.isspace() for ch in token):
        raise ValueError(f"identifier contains whitespace or unprintable characters: {token!r}")
    return token


class Triple(NamedTuple):
    """One labeled directed edge of a semantic network."""

    subject: str
    label: str
    obj: str


def undirected_edge(a: str, b: str) -> tuple[str, str]:
    """Normalize an unordered vertex pair; self-loops keep both endpoints."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class SemanticNetwork:
    """A finite set of subject-label-object triples.

    The vertex set is exactly the set of identifiers appearing in some
    triple; isolated vertices are not representable.
    """

    triples: frozenset[Triple] = frozenset()

    def __post_init__(self):
        triples = frozenset(Triple(*t) for t in self.triples)
        for t in triples:
            check_token(t.subject)
            check_token(t.label)
            check_token(t.obj)
        object.__setattr__(self, "triples", triples)

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(v for t in self.triples for v in (t.subject, t.obj))

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(t.label for t in self.triples)


@dataclass(frozen=True)
class DirectedNetwork:
    """An explicit vertex set plus a set of ordered vertex pairs.

    Edge endpoints are unioned into the vertex set on construction, so
    the endpoint invariant cannot be violated; vertices with no edges are
    allowed. No parallel edges (set semantics); self-loops allowed.
    """

    vertices: frozenset[str] = frozenset()
    edges: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self):
        edges = set()
        for e in self.edges:
            a, b = e
            edges.add((check_token(a), check_token(b)))
        vertices = {check_token(v) for v in self.vertices}
        vertices.update(v for e in edges for v in e)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "vertices", frozenset(vertices))

    @cached_property
    def _succ(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            out[a].add(b)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def _pred(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            out[b].add(a)
        return {v: frozenset(s) for v, s in out.items()}

    def successors(self, v: str) -> frozenset[str]:
        self._require(v)
        return self._succ[v]

    def predecessors(self, v: str) -> frozenset[str]:
        self._require(v)
        return self._pred[v]

    def degree(self, v: str) -> int:
        """In-degree plus out-degree; a self-loop contributes 2."""
        self._require(v)
        return len(self._succ[v]) + len(self._pred[v])

    def _require(self, v: str) -> None:
        if v not in self.vertices:
            raise ValueError(f"vertex {v!r} is not in the network")


@dataclass(frozen=True)
class UndirectedNetwork:
    """An explicit vertex set plus a set of unordered vertex pairs.

    Pairs are normalized so that {a,b} and {b,a} are the same edge;
    self-loops {a,a} are allowed. Endpoints are unioned into the vertex
    set on construction.
    """

    vertices: frozenset[str] = frozenset()
    edges: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self):
        edges = set()
        for e in self.edges:
            a, b = e
            edges.add(undirected_edge(check_token(a), check_token(b)))
        vertices = {check_token(v) for v in self.vertices}
        vertices.update(v for e in edges for v in e)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "vertices", frozenset(vertices))

    @cached_property
    def _adj(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            out[a].add(b)
            out[b].add(a)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def self_loops(self) -> frozenset[str]:
        return frozenset(a for a, b in self.edges if a == b)

    def neighbors(self, v: str) -> frozenset[str]:
        self._require(v)
        return self._adj[v]

    def degree(self, v: str) -> int:
        """Number of incident edge endpoints; a self-loop contributes 2."""
        self._require(v)
        return len(self._adj[v]) + (1 if v in self._adj[v] else 0)

    def _require(self, v: str) -> None:
        if v not in self.vertices:
            raise ValueError(f"vertex {v!r} is not in the network")


Network = SemanticNetwork | DirectedNetwork | UndirectedNetwork


def _checked_mapping(mapping: Mapping[str, str], vertices: frozenset[str]) -> dict[str, str]:
    missing = [v for v in vertices if v not in mapping]
    if missing:
        raise ValueError(f"mapping is not total: no image for {sorted(missing)!r}")
    image = {mapping[v] for v in vertices}
    if len(image) != len(vertices):
        raise ValueError("mapping is not injective on the vertex set")
    return {v: mapping[v] for v in vertices}


def relabel(net: Network, mapping: Mapping[str, str]) -> Network:
    """Rename vertices through a bijection; structure is preserved exactly."""
    if isinstance(net, SemanticNetwork):
        m = _checked_mapping(mapping, net.vertices)
        return SemanticNetwork(frozenset(Triple(m[t.subject], t.label, m[t.obj]) for t in net.triples))
    if isinstance(net, DirectedNetwork):
        m = _checked_mapping(mapping, net.vertices)
        return DirectedNetwork(
            frozenset(m[v] for v in net.vertices),
            frozenset((m[a], m[b]) for a, b in net.edges),
        )
    if isinstance(net, UndirectedNetwork):
        m = _checked_mapping(mapping, net.vertices)
        return UndirectedNetwork(
            frozenset(m[v] for v in net.vertices),
            frozenset(undirected_edge(m[a], m[b]) for a, b in net.edges),
        )
    raise TypeError(f"not a network: {net!r}")


def equal_networks(a: Network, b: Network) -> bool:
    """Exact, identifier-sensitive equality of two networks of the same kind."""
    kinds = (SemanticNetwork, DirectedNetwork, UndirectedNetwork)
    if not isinstance(a, kinds) or not isinstance(b, kinds):
        raise TypeError("both arguments must be networks")
    if type(a) is not type(b):
        raise TypeError(f"cannot compare {type(a).__name__} with {type(b).__name__}")
    return a == b


class IdAllocator:
    """Deterministic source of fresh vertex identifiers (``_g0``, ``_g1``, ...).

    Tokens already present in the input must be reserved first so that a
    vertex literally named like a gadget id can never collide.
    """

    def __init__(self, prefix: str = "_g", start: int = 0, reserved: Iterable[str] = ()):
        check_token(prefix)
        self._prefix = prefix
        self._next = start
        self._reserved = set(reserved)

    def reserve(self, ids: Iterable[str]) -> None:
        self._reserved.update(ids)

    def fresh(self) -> str:
        while True:
            token = f"{self._prefix}{self._next}"
            self._next += 1
            if token not in self._reserved:
                return token
