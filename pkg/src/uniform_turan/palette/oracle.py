"""Exhaustive reference decision procedure.

Every ordering of all vertices (isolated ones included), every split index
and every coloring of the shadow is accounted for, with no pruning and no
symmetry reduction. For a fixed ordering and split index the number of
valid colorings is a sum over the full product space ``palette ** |shadow|``
of a product of per-edge indicator tensors; it is evaluated as a tensor
contraction, which gives the same total as literal enumeration without
materializing 6**10 assignments. Counts are exact (they stay far below 2**53).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from ..errors import GuardExceeded
from ..hypergraph import ThreeGraph, shadow
from .kinds import PropertyKind

ORACLE_MAX_VERTICES = 5
ORACLE_MAX_PAIRS = 10


@lru_cache(maxsize=None)
def _edge_tensor(kind: PropertyKind, colors_roles: tuple[int, int, int],
                 classes: frozenset[int]) -> np.ndarray:
    """Indicator over the colors of the edge's three pairs (sorted-pair slot order).

    ``colors_roles[r]`` is the slot holding the pair that plays role r
    (first-middle, middle-last, first-last); ``classes`` are the patterns the
    edge's positions permit.
    """
    palette = kind.palette
    size = len(palette)
    t = np.zeros((size, size, size))
    targets = {kind.patterns[ci].colors for ci in classes}
    for idx in product(range(size), repeat=3):
        found = tuple(palette[idx[colors_roles[r]]] for r in range(3))
        if found in targets:
            t[idx] = 1.0
    t.setflags(write=False)
    return t


_MAX_INTERMEDIATE = 10**7


def count_colorings(F: ThreeGraph, kind: PropertyKind, ordering, istar,
                    allowed_classes=None, path=None) -> int:
    """Number of shadow colorings that make (ordering, istar) a certificate,
    restricted to edges matching patterns in ``allowed_classes``."""
    if allowed_classes is None:
        allowed_classes = set(range(len(kind.patterns)))
    pairs = list(shadow(F))
    if not F.edges:
        return 1
    pid = {p: i for i, p in enumerate(pairs)}
    pos = {v: i + 1 for i, v in enumerate(ordering)}
    operands = []
    for e in F.edges:
        slots = [pid[p] for p in combinations(e, 2)]  # sorted pairs of the sorted edge
        a, b, c = sorted(e, key=pos.__getitem__)
        role_pairs = [tuple(sorted(x)) for x in ((a, b), (b, c), (a, c))]
        sorted_slot_pairs = list(combinations(e, 2))
        colors_roles = [sorted_slot_pairs.index(rp) for rp in role_pairs]
        permitted = frozenset(ci for ci in allowed_classes
                              if kind.patterns[ci].cond.holds(pos[b], pos[c], istar))
        t = _edge_tensor(kind, tuple(colors_roles), permitted)
        operands.extend([t, slots])
    if path is None:
        path = contraction_path(operands)
    total = np.einsum(*operands, [], optimize=path)
    return int(round(float(total)))


def contraction_path(operands) -> list:
    # the index structure depends only on the graph, so callers reuse one path
    return np.einsum_path(*operands, [], optimize=("greedy", _MAX_INTERMEDIATE))[0]


def _path_for(F: ThreeGraph, kind: PropertyKind) -> list | None:
    if not F.edges:
        return None
    pid = {p: i for i, p in enumerate(shadow(F))}
    size = len(kind.palette)
    operands = []
    for e in F.edges:
        operands.extend([np.empty((size, size, size)), [pid[p] for p in combinations(e, 2)]])
    return contraction_path(operands)


def oracle_solve(F: ThreeGraph, kind: PropertyKind) -> bool:
    """True iff some (ordering, coloring[, istar]) is a certificate of ``kind``."""
    if F.n > ORACLE_MAX_VERTICES or len(shadow(F)) > ORACLE_MAX_PAIRS:
        raise GuardExceeded(
            f"oracle handles at most {ORACLE_MAX_VERTICES} vertices and {ORACLE_MAX_PAIRS} shadow pairs")
    splits = range(1, F.n + 1) if kind.needs_istar else [None]
    path = _path_for(F, kind)
    classes = range(len(kind.patterns))
    for ordering in permutations(range(F.n)):
        for istar in splits:
            total = count_colorings(F, kind, ordering, istar, path=path)
            if kind.needs_all_classes and total > 0:
                # colorings using every class, by inclusion-exclusion over excluded classes
                total = 0
                for r in range(len(classes) + 1):
                    for excluded in combinations(classes, r):
                        keep = set(classes) - set(excluded)
                        total += (-1) ** r * count_colorings(F, kind, ordering, istar, keep, path)
            if total > 0:
                return True
    return False
