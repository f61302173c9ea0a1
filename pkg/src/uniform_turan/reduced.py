"""Reduced 3-graphs at desk scale.

An I-reduced 3-graph has a vertex class ``P_ij`` for every pair ``i < j`` of
the index set and a tripartite constituent ``A_ijk`` for every triple
``i < j < k``. Vertices of a class are addressed by their position
``0..|P_ij|-1``, so classes are disjoint by construction. A constituent edge
is stored as ``(left, right, top)`` with ``left`` in ``P_ij``, ``right`` in
``P_jk`` and ``top`` in ``P_ik``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Mapping

import numpy as np

from .errors import GuardExceeded, TuranError
from .hypergraph import Pair, ThreeGraph, shadow

MAX_INDICES = 8
MAX_CLASS_SIZE = 16

Triple = tuple[int, int, int]


class InvalidReducedGraph(TuranError, ValueError):
    pass


@dataclass(frozen=True)
class ReducedThreeGraph:
    indices: tuple[int, ...]
    class_sizes: Mapping[Pair, int]
    constituents: Mapping[Triple, frozenset] = field(default_factory=dict)

    def __post_init__(self):
        idx = tuple(sorted(set(int(i) for i in self.indices)))
        object.__setattr__(self, "indices", idx)
        sizes = {}
        for i, j in combinations(idx, 2):
            if (i, j) not in self.class_sizes:
                raise InvalidReducedGraph(f"missing class size for pair {(i, j)}")
            s = int(self.class_sizes[(i, j)])
            if s < 0:
                raise InvalidReducedGraph(f"negative class size for pair {(i, j)}")
            sizes[(i, j)] = s
        extra = set(self.class_sizes) - set(sizes)
        if extra:
            raise InvalidReducedGraph(f"class sizes given for unknown pairs {sorted(extra)}")
        object.__setattr__(self, "class_sizes", sizes)
        cons = {}
        for ijk in combinations(idx, 3):
            edges = frozenset(tuple(int(x) for x in e) for e in self.constituents.get(ijk, ()))
            i, j, k = ijk
            bounds = (sizes[(i, j)], sizes[(j, k)], sizes[(i, k)])
            for e in edges:
                if len(e) != 3 or any(not 0 <= x < b for x, b in zip(e, bounds)):
                    raise InvalidReducedGraph(f"constituent edge {e} out of range for {ijk}")
            cons[ijk] = edges
        extra = set(self.constituents) - set(cons)
        if extra:
            raise InvalidReducedGraph(f"constituents given for unknown triples {sorted(extra)}")
        object.__setattr__(self, "constituents", cons)

    def size(self, a: int, b: int) -> int:
        return self.class_sizes[(min(a, b), max(a, b))]

    def reverse(self) -> "ReducedThreeGraph":
        """Reverse with index relabeling P'_{x_i x_j} = P_{x_(n-j+1) x_(n-i+1)}.

        Left and right vertices trade places; top vertices stay top.
        """
        idx = self.indices
        n = len(idx)
        mirror = {idx[p]: idx[n - 1 - p] for p in range(n)}
        sizes = {(a, b): self.class_sizes[(mirror[b], mirror[a])] for a, b in combinations(idx, 2)}
        cons = {}
        for a, b, c in combinations(idx, 3):
            src = self.constituents[(mirror[c], mirror[b], mirror[a])]
            cons[(a, b, c)] = frozenset((r, l, t) for l, r, t in src)
        return ReducedThreeGraph(idx, sizes, cons)

    def to_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "class_sizes": {f"{i},{j}": s for (i, j), s in self.class_sizes.items()},
            "constituents": {f"{i},{j},{k}": sorted(list(e) for e in edges)
                             for (i, j, k), edges in self.constituents.items()},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReducedThreeGraph":
        try:
            sizes = {tuple(int(x) for x in key.split(",")): int(v)
                     for key, v in data["class_sizes"].items()}
            cons = {tuple(int(x) for x in key.split(",")): [tuple(e) for e in edges]
                    for key, edges in data.get("constituents", {}).items()}
            return cls(tuple(data["indices"]), sizes, cons)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InvalidReducedGraph(f"malformed reduced-graph document: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ReducedThreeGraph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class DenseCheck:
    dense: bool
    worst_triple: Triple | None
    worst_density: Fraction | None


def constituent_density(A: ReducedThreeGraph, ijk: Triple) -> Fraction:
    i, j, k = ijk
    denom = A.size(i, j) * A.size(j, k) * A.size(i, k)
    if denom == 0:
        raise InvalidReducedGraph(f"empty vertex class in constituent {ijk}; density undefined")
    return Fraction(len(A.constituents[ijk]), denom)


def is_d_dense(A: ReducedThreeGraph, d) -> DenseCheck:
    worst = None
    worst_t = None
    for ijk in combinations(A.indices, 3):
        dens = constituent_density(A, ijk)
        if worst is None or dens < worst:
            worst, worst_t = dens, ijk
    if worst is None:
        return DenseCheck(True, None, None)
    return DenseCheck(worst >= Fraction(d), worst_t, worst)


@dataclass(frozen=True)
class EmbeddingWitness:
    """``phi`` sends vertices of F to indices; ``psi`` sends each shadow pair
    to a vertex (position) of the class ``P_{phi(u) phi(v)}``."""

    phi: Mapping[int, int]
    psi: Mapping[Pair, int]

    def to_dict(self) -> dict:
        return {
            "phi": {str(v): i for v, i in sorted(self.phi.items())},
            "psi": [{"pair": list(p), "vertex": x} for p, x in sorted(self.psi.items())],
        }


def _edge_key(phi: Mapping[int, int], e) -> tuple[Triple, tuple[Pair, Pair, Pair]]:
    a, b, c = sorted(e, key=phi.__getitem__)
    pr = lambda x, y: (min(x, y), max(x, y))  # noqa: E731
    return (phi[a], phi[b], phi[c]), (pr(a, b), pr(b, c), pr(a, c))


def check_witness(A: ReducedThreeGraph, F: ThreeGraph, w: EmbeddingWitness) -> bool:
    """Direct check of the three embedding conditions."""
    idx = set(A.indices)
    if set(w.phi) != set(range(F.n)) or not set(w.phi.values()) <= idx:
        return False
    sh = shadow(F).as_set()
    if set(w.psi) != sh:
        return False
    for (u, v), x in w.psi.items():
        if w.phi[u] == w.phi[v] or not 0 <= x < A.size(w.phi[u], w.phi[v]):
            return False
    for e in F.edges:
        phis = {w.phi[v] for v in e}
        if len(phis) < 3:
            return False
        ijk, (p_left, p_right, p_top) = _edge_key(w.phi, e)
        if (w.psi[p_left], w.psi[p_right], w.psi[p_top]) not in A.constituents[ijk]:
            return False
    return True


def _find_psi(A: ReducedThreeGraph, F: ThreeGraph, phi: dict[int, int],
              pairs: list[Pair]) -> dict[Pair, int] | None:
    pair_pos = {p: i for i, p in enumerate(pairs)}
    # edges keyed by the last of their pairs in assignment order
    due: list[list] = [[] for _ in pairs]
    for e in F.edges:
        ijk, roles = _edge_key(phi, e)
        last = max(pair_pos[p] for p in roles)
        due[last].append((A.constituents[ijk], roles))
    domains = [range(A.size(phi[u], phi[v])) for u, v in pairs]
    psi: dict[Pair, int] = {}

    def go(t: int) -> bool:
        if t == len(pairs):
            return True
        p = pairs[t]
        for x in domains[t]:
            psi[p] = x
            if all((psi[r[0]], psi[r[1]], psi[r[2]]) in cons for cons, r in due[t]):
                if go(t + 1):
                    return True
        del psi[p]
        return False

    return dict(psi) if go(0) else None


def embeds(A: ReducedThreeGraph, F: ThreeGraph, all_orderings: bool = False) -> EmbeddingWitness | None:
    """Search for a witness that A embeds F.

    By default ``phi`` is an increasing injection (vertex order of F maps to
    index order); ``all_orderings`` allows any injection. The first witness in
    lexicographic (phi, psi) order is returned and re-checked.
    """
    if not F.n <= len(A.indices) <= MAX_INDICES:
        raise GuardExceeded(f"need |V(F)| <= |I| <= {MAX_INDICES}")
    if any(s > MAX_CLASS_SIZE for s in A.class_sizes.values()):
        raise GuardExceeded(f"class sizes above {MAX_CLASS_SIZE}")
    pairs = list(shadow(F))
    chooser = permutations if all_orderings else combinations
    for image in chooser(A.indices, F.n):
        phi = dict(enumerate(image))
        psi = _find_psi(A, F, phi, pairs)
        if psi is not None:
            w = EmbeddingWitness(phi, psi)
            if not check_witness(A, F, w):
                raise AssertionError("embedding search produced an invalid witness")
            return w
    return None


@dataclass(frozen=True)
class BipartiteQ:
    """Projection graph between ``P_ij`` (left side) and ``P_ik`` (top side)."""

    left_size: int
    top_size: int
    edges: frozenset[Pair]

    def top_degrees(self) -> list[int]:
        deg = [0] * self.top_size
        for _, v in self.edges:
            deg[v] += 1
        return deg


def project_Q(A: ReducedThreeGraph, i: int, j: int, k: int, eps) -> BipartiteQ:
    """Join u in P_ij to v in P_ik when at least eps^2 |P_jk| vertices w of
    P_jk make (u, w, v) an edge of A_ijk."""
    if not i < j < k:
        raise ValueError("need i < j < k")
    if not 0 < Fraction(eps) <= 1:
        raise ValueError("eps must lie in (0, 1]")
    cons = A.constituents[(i, j, k)]
    need = Fraction(eps) ** 2 * A.size(j, k)
    counts: dict[Pair, int] = {}
    for l, r, t in cons:
        counts[(l, t)] = counts.get((l, t), 0) + 1
    edges = frozenset(p for p, c in counts.items() if c >= need)
    return BipartiteQ(A.size(i, j), A.size(i, k), edges)


@dataclass(frozen=True)
class DegreeSquare:
    value: int
    threshold: Fraction
    holds: bool


def degree_square_stat(Q: BipartiteQ, eps) -> DegreeSquare:
    """Sum over top vertices of squared degree against (1/4 + eps/2)|P_ij|^2 |P_ik|."""
    value = sum(d * d for d in Q.top_degrees())
    threshold = (Fraction(1, 4) + Fraction(eps) / 2) * Q.left_size ** 2 * Q.top_size
    return DegreeSquare(value, threshold, value >= threshold)


def s_set(A: ReducedThreeGraph, i: int, j: int, k: int, eps, r: int) -> frozenset[int]:
    """Top vertices of ``Q^i_jk`` with degree at least (1/2 + r eps^2)|P_ij|."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    Q = project_Q(A, i, j, k, eps)
    bar = (Fraction(1, 2) + r * Fraction(eps) ** 2) * Q.left_size
    return frozenset(v for v, d in enumerate(Q.top_degrees()) if d >= bar)


def random_reduced(I_size: int, class_size: int, edge_prob: float, seed: int = 0) -> ReducedThreeGraph:
    """Index set 1..I_size, every class of the same size, each constituent
    triple present independently with probability ``edge_prob``."""
    if I_size > MAX_INDICES or class_size > MAX_CLASS_SIZE:
        raise GuardExceeded(f"guards: |I| <= {MAX_INDICES}, class size <= {MAX_CLASS_SIZE}")
    rng = np.random.default_rng(seed)
    idx = tuple(range(1, I_size + 1))
    sizes = {p: class_size for p in combinations(idx, 2)}
    cons = {}
    for ijk in combinations(idx, 3):
        hit = rng.random((class_size,) * 3) < edge_prob
        cons[ijk] = frozenset(map(tuple, np.argwhere(hit).tolist()))
    return ReducedThreeGraph(idx, sizes, cons)


def planted_reduced(F: ThreeGraph, I_size: int, class_size: int, seed: int = 0,
                    noise: float = 0.0) -> tuple[ReducedThreeGraph, EmbeddingWitness]:
    """A reduced graph built around a chosen (phi, psi): exactly the
    constituent edges the witness needs, plus optional random noise edges."""
    if F.n > I_size:
        raise ValueError("index set smaller than the graph")
    rng = np.random.default_rng(seed)
    base = random_reduced(I_size, class_size, noise, seed=int(rng.integers(2**32)))
    image = sorted(rng.choice(base.indices, size=F.n, replace=False).tolist())
    phi = dict(enumerate(image))
    psi = {p: int(rng.integers(class_size)) for p in shadow(F)}
    cons = {k: set(v) for k, v in base.constituents.items()}
    for e in F.edges:
        ijk, (pl, pr, pt) = _edge_key(phi, e)
        cons[ijk].add((psi[pl], psi[pr], psi[pt]))
    A = ReducedThreeGraph(base.indices, base.class_sizes, cons)
    return A, EmbeddingWitness(phi, psi)
