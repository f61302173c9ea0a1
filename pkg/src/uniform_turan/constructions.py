"""The randomized lower-bound construction H(n) and (d, mu)-density audits.

H(n) lives on ``0..n-1``. Each pair gets red or blue from a splitmix64 stream
and a triple i<j<k is an edge exactly when its pair colors read
(red, red, blue) or (blue, blue, red) as (ij, jk, ik). Every induced
sub-hypergraph therefore carries a CLUBS certificate: the natural vertex
order with the generating colors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import InvalidGraph, TuranError
from .hypergraph import ThreeGraph, induced_sub, shadow
from .palette.certificate import PaletteCertificate
from .palette.kinds import PropertyKind

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

EXACT_AUDIT_LIMIT = 5000


def splitmix64(seed: int, index: int) -> int:
    """Element ``index`` (0-based) of the splitmix64 stream seeded with ``seed``."""
    z = (seed + (index + 1) * GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def splitmix64_array(seed: int, indices: np.ndarray) -> np.ndarray:
    idx = np.asarray(indices, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & MASK64) + (idx + np.uint64(1)) * np.uint64(GOLDEN_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def pair_rank(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class PairColoringSource:
    """Red/blue coloring of all pairs of ``0..n-1``.

    ``override`` replaces the generator (a test hook); it receives ``(i, j)``
    with ``i < j`` and returns ``"red"`` or ``"blue"``.
    """

    n: int
    seed: int = 0
    override: Callable[[int, int], str] | None = field(default=None, compare=False)

    def color(self, i: int, j: int) -> str:
        if i > j:
            i, j = j, i
        if self.override is not None:
            return self.override(i, j)
        return "red" if splitmix64(self.seed, pair_rank(i, j)) & 1 == 0 else "blue"

    def blue_matrix(self) -> np.ndarray:
        """Symmetric boolean matrix, True where the pair is blue (diagonal False)."""
        n = self.n
        out = np.zeros((n, n), dtype=bool)
        if n < 2:
            return out
        iu, ju = np.triu_indices(n, k=1)
        if self.override is not None:
            vals = np.array([self.override(int(i), int(j)) == "blue" for i, j in zip(iu, ju)])
        else:
            ranks = ju * (ju - 1) // 2 + iu
            vals = (splitmix64_array(self.seed, ranks) & np.uint64(1)).astype(bool)
        out[iu, ju] = vals
        out[ju, iu] = vals
        return out


def _edges_from_colors(blue: np.ndarray) -> np.ndarray:
    n = blue.shape[0]
    if n < 3:
        return np.zeros((0, 3), dtype=np.int64)
    ij = blue[:, :, None]
    jk = blue[None, :, :]
    ik = blue[:, None, :]
    hit = (ij == jk) & (ik != ij)
    i, j, k = np.nonzero(hit)
    keep = (i < j) & (j < k)
    return np.stack([i[keep], j[keep], k[keep]], axis=1)


def random_construction(n: int, seed: int = 0, source: PairColoringSource | None = None) -> ThreeGraph:
    if n < 0:
        raise InvalidGraph("n must be non-negative")
    if source is None:
        source = PairColoringSource(n, seed)
    elif source.n != n:
        raise InvalidGraph("coloring source has a different vertex count")
    arr = _edges_from_colors(source.blue_matrix())
    return ThreeGraph.from_array(n, arr)


def inherited_certificate(H: ThreeGraph, S: Iterable[int],
                          source: PairColoringSource | None) -> PaletteCertificate:
    """CLUBS certificate for ``induced_sub(H, S)``: natural order, generating colors."""
    if source is None:
        raise TuranError("the pair-coloring source of H is required")
    if source.n != H.n:
        raise TuranError("coloring source does not belong to this graph")
    verts = sorted(set(S))
    sub = induced_sub(H, verts)
    coloring = {(a, b): source.color(verts[a], verts[b]) for a, b in shadow(sub)}
    return PaletteCertificate(PropertyKind.CLUBS, tuple(range(len(verts))), coloring)


@dataclass(frozen=True)
class SizeAudit:
    size: int
    tested: int
    exact: bool
    worst_deficit: float
    min_edges: int


@dataclass(frozen=True)
class DensityAudit:
    d: float
    mu: float
    samples: int
    worst_deficit: float
    passed: bool
    per_size: tuple[SizeAudit, ...] = ()
    note: str = ("mu and subset sizes are audit choices; a pass is finite-sample evidence, "
                 "not the asymptotic density statement")

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "mu": self.mu,
            "samples": self.samples,
            "worst_deficit": self.worst_deficit,
            "pass": self.passed,
            "per_size": [s.__dict__ for s in self.per_size],
            "note": self.note,
        }


def _edge_array(H: ThreeGraph) -> np.ndarray:
    if not H.edges:
        return np.zeros((0, 3), dtype=np.int64)
    return np.asarray(H.edges, dtype=np.int64)


def density_audit(H: ThreeGraph, d: float, mu: float, subset_sizes: Sequence[int],
                  samples: int, seed: int = 0, exact_limit: int = EXACT_AUDIT_LIMIT) -> DensityAudit:
    """Worst value of ``d*C(|U|,3) - e(U) - mu*n^3`` over tested vertex sets U.

    Sizes with at most ``exact_limit`` subsets are checked exhaustively;
    otherwise ``samples`` uniform subsets are drawn, sample ``s`` of size
    ``k`` from its own generator seeded by ``(seed, k, s)``.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    n = H.n
    for k in subset_sizes:
        if not 0 <= k <= n:
            raise ValueError(f"subset size {k} outside 0..{n}")
    cols = [np.ascontiguousarray(c) for c in _edge_array(H).T]
    slack = mu * n ** 3
    per_size = []
    total = 0
    worst = -np.inf
    for k in subset_sizes:
        target = d * comb(k, 3)
        exact = comb(n, k) <= exact_limit
        if exact:
            subsets: Iterable = combinations(range(n), k)
        else:
            subsets = (np.random.default_rng([seed, k, s]).choice(n, size=k, replace=False)
                       for s in range(samples))
        size_worst = -np.inf
        min_edges = None
        tested = 0
        mask = np.zeros(n, dtype=bool)
        for U in subsets:
            mask[:] = False
            mask[list(U)] = True
            hit = mask[cols[0]] & mask[cols[1]] & mask[cols[2]]
            e_u = int(np.count_nonzero(hit))
            deficit = target - e_u - slack
            size_worst = max(size_worst, deficit)
            min_edges = e_u if min_edges is None else min(min_edges, e_u)
            tested += 1
        per_size.append(SizeAudit(k, tested, exact, float(size_worst), int(min_edges or 0)))
        total += tested
        worst = max(worst, size_worst)
    worst = float(worst) if total else 0.0
    return DensityAudit(d, mu, total, worst, worst <= 0, tuple(per_size))
