"""Small 3-uniform hypergraphs: representation, shadows, links, blow-ups and
sub-hypergraph search.

Vertices are the integers ``0..n-1``. Edges are stored as sorted triples in
lexicographic order, so two graphs with the same edge set compare equal and
serialize identically.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import GuardExceeded, InvalidGraph

Edge = tuple[int, int, int]
Pair = tuple[int, int]

MAX_PATTERN_VERTICES = 12


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PairSet:
    """A set of unordered vertex pairs on ``n`` vertices (shadows and links)."""

    n: int
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        norm = set()
        for p in self.pairs:
            u, v = p
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraph(f"bad pair {p!r} for n={self.n}")
            norm.add(_pair(u, v))
        object.__setattr__(self, "pairs", tuple(sorted(norm)))

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        u, v = pair
        return _pair(u, v) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[Pair]:
        return frozenset(self.pairs)

    def as_set(self) -> frozenset[Pair]:
        return self._lookup


@dataclass(frozen=True)
class ThreeGraph:
    """A 3-uniform hypergraph on vertices ``0..n-1``.

    Unsorted triples are normalized and duplicates collapse; a triple with a
    repeated vertex or an out-of-range vertex raises :class:`InvalidGraph`.
    """

    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidGraph(f"vertex count must be a non-negative int, got {self.n!r}")
        norm = set()
        for e in self.edges:
            t = tuple(int(x) for x in e)
            if len(t) != 3 or len(set(t)) != 3:
                raise InvalidGraph(f"edge {e!r} must have three distinct vertices")
            if min(t) < 0 or max(t) >= self.n:
                raise InvalidGraph(f"edge {e!r} out of range for n={self.n}")
            norm.add(tuple(sorted(t)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_array(cls, n: int, arr) -> "ThreeGraph":
        """Bulk constructor for large edge arrays (validated with numpy)."""
        import numpy as np

        a = np.sort(np.asarray(arr, dtype=np.int64).reshape(-1, 3), axis=1)
        if len(a):
            if a.min() < 0 or a.max() >= n:
                raise InvalidGraph(f"edge out of range for n={n}")
            if np.any(a[:, 0] == a[:, 1]) or np.any(a[:, 1] == a[:, 2]):
                raise InvalidGraph("edge with a repeated vertex")
            a = np.unique(a, axis=0)
        self = object.__new__(cls)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(map(tuple, a.tolist())))
        return self

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int, w: int) -> bool:
        return tuple(sorted((u, v, w))) in self.edge_set

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        c = Counter(v for e in self.edges for v in e)
        return tuple(c[v] for v in range(self.n))

    @cached_property
    def isolated(self) -> tuple[int, ...]:
        return tuple(v for v, d in enumerate(self.degrees) if d == 0)

    def relabel(self, perm: Sequence[int]) -> "ThreeGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidGraph("relabeling must be a permutation of the vertices")
        return ThreeGraph(self.n, tuple(tuple(perm[v] for v in e) for e in self.edges))

    # serialization

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "ThreeGraph":
        try:
            return cls(int(data["n"]), tuple(tuple(e) for e in data["edges"]))
        except (KeyError, TypeError) as exc:
            raise InvalidGraph(f"malformed graph document: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ThreeGraph":
        return cls.from_dict(json.loads(text))


def shadow(F: ThreeGraph) -> PairSet:
    return PairSet(F.n, tuple(p for e in F.edges for p in combinations(e, 2)))


def link(F: ThreeGraph, v: int) -> PairSet:
    if not 0 <= v < F.n:
        raise InvalidGraph(f"vertex {v} out of range for n={F.n}")
    return PairSet(F.n, tuple(tuple(x for x in e if x != v) for e in F.edges if v in e))


def blow_up(F: ThreeGraph, t: int) -> ThreeGraph:
    """The full t-blow-up: vertex ``v`` becomes copies ``v*t .. v*t+t-1``."""
    if t < 1:
        raise InvalidGraph("blow-up factor must be at least 1")
    edges = []
    for a, b, c in F.edges:
        for x, y, z in product(range(t), repeat=3):
            edges.append((a * t + x, b * t + y, c * t + z))
    return ThreeGraph(F.n * t, tuple(edges))


def induced_sub(F: ThreeGraph, S: Iterable[int]) -> ThreeGraph:
    """Sub-hypergraph induced on ``S``, relabeled to ``0..|S|-1`` in increasing order."""
    verts = sorted(set(S))
    if verts and (verts[0] < 0 or verts[-1] >= F.n):
        raise InvalidGraph("induced_sub vertex set out of range")
    index = {v: i for i, v in enumerate(verts)}
    edges = tuple(tuple(index[v] for v in e) for e in F.edges if all(v in index for v in e))
    return ThreeGraph(len(verts), edges)


def contains_sub(H: ThreeGraph, F: ThreeGraph,
                 max_vertices: int = MAX_PATTERN_VERTICES) -> dict[int, int] | None:
    """Find an injection ``V(F) -> V(H)`` sending every edge of F onto an edge of H.

    Returns the map as a dict, or ``None`` when no copy of F exists in H.
    """
    if F.n > max_vertices:
        raise GuardExceeded(f"pattern has {F.n} vertices, guard is {max_vertices}")
    if F.n > H.n:
        return None
    if len(F.edges) > len(H.edges):
        return None

    f_deg = F.degrees
    h_deg = H.degrees
    f_incident: dict[int, list[Edge]] = {v: [] for v in range(F.n)}
    for e in F.edges:
        for v in e:
            f_incident[v].append(e)
    h_shadow = shadow(H).as_set()
    f_nbrs = {v: set() for v in range(F.n)}
    for u, v in shadow(F):
        f_nbrs[u].add(v)
        f_nbrs[v].add(u)

    # connected-first order: highest degree, then most already-placed neighbours
    order: list[int] = []
    remaining = set(range(F.n))
    while remaining:
        best = max(remaining, key=lambda v: (len(f_nbrs[v] & set(order)), f_deg[v], -v))
        order.append(best)
        remaining.remove(best)

    # edges to check once vertex order[i] is placed
    check_at: list[list[Edge]] = []
    placed: set[int] = set()
    for v in order:
        placed.add(v)
        check_at.append([e for e in f_incident[v] if all(x in placed for x in e)])

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def feasible(v: int, h: int) -> bool:
        if h_deg[h] < f_deg[v]:
            return False
        for u in f_nbrs[v]:
            if u in mapping and _pair(h, mapping[u]) not in h_shadow:
                return False
        return True

    def search(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for h in range(H.n):
            if h in used or not feasible(v, h):
                continue
            mapping[v] = h
            if all(H.has_edge(*(mapping[x] for x in e)) for e in check_at[depth]):
                used.add(h)
                if search(depth + 1):
                    return True
                used.discard(h)
            del mapping[v]
        return False

    if search(0):
        return dict(sorted(mapping.items()))
    return None


def is_embedding(H: ThreeGraph, F: ThreeGraph, mapping: dict[int, int]) -> bool:
    """Direct check that ``mapping`` is an injective edge-preserving map F -> H."""
    if sorted(mapping) != list(range(F.n)):
        return False
    if len(set(mapping.values())) != F.n:
        return False
    if any(not 0 <= h < H.n for h in mapping.values()):
        return False
    return all(H.has_edge(*(mapping[v] for v in e)) for e in F.edges)
