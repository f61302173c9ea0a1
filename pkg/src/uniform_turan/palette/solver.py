"""Backtracking search for palette certificates.

The search places the non-isolated vertices one position at a time. When the
last vertex of an edge is placed, the edge learns which of its pairs plays
which role (first-middle, middle-last, first-last) and which patterns its
position allows; the pattern choice of every ordered edge and the color of
every shadow pair are kept as bitmask domains and reduced to generalized arc
consistency after each placement. A branch dies as soon as any domain is
empty. Once every vertex is placed the remaining pattern choices are searched
with the same propagation.

Split index. For the spades kinds the split position is a search token,
placed among the vertices: either "the next vertex sits at the split" or
"split on a gap" (only when an isolated vertex exists to occupy that gap).
Leaving the token unplaced means the split is the last position. Tokens that
can only forbid patterns relative to leaving it unplaced are never tried.

Search order, hence which certificate is returned: at every position, plain
vertices in increasing label order, then split-vertex tokens in label order,
then the gap token; within the completed ordering, edges are decided most
constrained first, patterns in table order. Isolated vertices go last (one of
them fills a gap split when used).

Symmetry reduction: for CLUBS the lexicographically first shadow pair is
fixed to red, which is safe because the two patterns swap into each other
under red <-> blue.
"""

from __future__ import annotations

import enum
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..errors import GuardExceeded, SearchTimeout
from ..hypergraph import ThreeGraph, shadow
from .certificate import PaletteCertificate, verify
from .kinds import COLOR_INDEX, COLORS, Cond, PropertyKind

DEFAULT_MAX_VERTICES = 10
DEFAULT_TIMEOUT_MS = 60_000
_CHECK_EVERY = 512


class Status(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class SolveResult:
    kind: PropertyKind
    status: Status
    certificate: PaletteCertificate | None = None
    nodes: int = 0

    @property
    def sat(self) -> bool:
        return self.status is Status.SAT

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "status": self.status.value,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "nodes": self.nodes,
        }


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class _Problem:
    """Read-only description shared by all branches (picklable)."""

    def __init__(self, F: ThreeGraph, kind: PropertyKind):
        self.kind = kind
        self.n = F.n
        self.edges = list(F.edges)
        self.pairs = list(shadow(F))
        self.pair_id = {p: i for i, p in enumerate(self.pairs)}
        self.iso = list(F.isolated)
        self.active = [v for v in range(F.n) if v not in set(self.iso)]
        self.incident = {v: [] for v in range(F.n)}
        for ei, e in enumerate(self.edges):
            for v in e:
                self.incident[v].append(ei)
        self.pair_edges = [[] for _ in self.pairs]
        for ei, (a, b, c) in enumerate(self.edges):
            for p in ((a, b), (b, c), (a, c)):
                self.pair_edges[self.pair_id[p]].append(ei)

        pats = kind.patterns
        self.npat = len(pats)
        self.pat_colors = [tuple(COLOR_INDEX[c] for c in p.colors) for p in pats]
        self.pat_cond = [p.cond for p in pats]
        # role_union[m][r]: colors the role r pair may take if the edge keeps pattern set m
        self.role_union = []
        for m in range(1 << self.npat):
            row = []
            for r in range(3):
                u = 0
                for pi in _bits(m):
                    u |= 1 << self.pat_colors[pi][r]
                row.append(u)
            self.role_union.append(row)
        self.palette_mask = sum(1 << COLOR_INDEX[c] for c in kind.palette)
        self.any_mask = sum(1 << i for i, c in enumerate(self.pat_cond) if c is Cond.ANY)
        self.within_mask = sum(1 << i for i, c in enumerate(self.pat_cond) if c is Cond.WITHIN)
        self.straddle_mask = sum(1 << i for i, c in enumerate(self.pat_cond) if c is Cond.STRADDLE)
        self.full_pat = (1 << self.npat) - 1
        self.uses_split = kind.needs_istar


@dataclass
class _State:
    pos: dict            # vertex -> compressed position (1-based)
    order: list          # placed vertices
    split: tuple | None  # ("vertex", p) or ("gap", p)
    pair_dom: list
    edge_dom: list       # 0 while the edge is not yet ordered
    roles: list          # per edge: (pA, pB, pC) pair ids once ordered


class _Search:
    def __init__(self, prob: _Problem, deadline: float | None):
        self.prob = prob
        self.deadline = deadline
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise SearchTimeout("search deadline reached")

    def initial(self) -> _State | None:
        prob = self.prob
        pair_dom = [prob.palette_mask] * len(prob.pairs)
        if prob.kind is PropertyKind.CLUBS and prob.pairs:
            pair_dom[0] = 1 << COLOR_INDEX["red"]
        return _State({}, [], None, pair_dom, [0] * len(prob.edges), [None] * len(prob.edges))

    def propagate(self, st: _State, queue: list[int]) -> bool:
        prob = self.prob
        pair_dom, edge_dom, roles = st.pair_dom, st.edge_dom, st.roles
        pending = set(queue)
        while queue:
            e = queue.pop()
            pending.discard(e)
            r = roles[e]
            m = edge_dom[e]
            keep = 0
            for pi in _bits(m):
                ca, cb, cc = prob.pat_colors[pi]
                if (pair_dom[r[0]] >> ca) & 1 and (pair_dom[r[1]] >> cb) & 1 and (pair_dom[r[2]] >> cc) & 1:
                    keep |= 1 << pi
            if not keep:
                return False
            edge_dom[e] = keep
            union = prob.role_union[keep]
            for ri in range(3):
                p = r[ri]
                new = pair_dom[p] & union[ri]
                if new != pair_dom[p]:
                    if not new:
                        return False
                    pair_dom[p] = new
                    for e2 in prob.pair_edges[p]:
                        if e2 != e and roles[e2] is not None and e2 not in pending:
                            pending.add(e2)
                            queue.append(e2)
        return True

    def tokens(self, st: _State) -> list[tuple]:
        prob = self.prob
        rest = [v for v in prob.active if v not in st.pos]
        out = [("v", v) for v in rest]
        if prob.uses_split and st.split is None:
            p = len(st.order) + 1  # position the next vertex would take
            if 3 <= p and len(rest) >= 2:
                out.extend(("s", v) for v in rest)
            if prob.iso and p - 1 >= 2 and rest:
                out.append(("g", None))
        return out

    def apply(self, st: _State, token: tuple) -> _State | None:
        prob = self.prob
        kind, v = token
        if kind == "g":
            return _State(st.pos, st.order, ("gap", len(st.order)), st.pair_dom, st.edge_dom, st.roles)
        p = len(st.order) + 1
        pos = dict(st.pos)
        pos[v] = p
        split = ("vertex", p) if kind == "s" else st.split
        new = _State(pos, st.order + [v], split, list(st.pair_dom), list(st.edge_dom), list(st.roles))
        queue = []
        for e in prob.incident[v]:
            a, b, c = prob.edges[e]
            if a not in pos or b not in pos or c not in pos:
                continue
            x, y, z = sorted((a, b, c), key=pos.__getitem__)
            j, k = pos[y], pos[z]
            allowed = prob.any_mask
            if split is None or (split[0] == "vertex" and split[1] == k):
                allowed |= prob.within_mask
            elif split[0] == "vertex":
                if j < split[1]:
                    allowed |= prob.straddle_mask
            elif j <= split[1]:
                allowed |= prob.straddle_mask
            pid = prob.pair_id
            new.roles[e] = (pid[(min(x, y), max(x, y))], pid[(min(y, z), max(y, z))], pid[(min(x, z), max(x, z))])
            new.edge_dom[e] = allowed
            queue.append(e)
        if queue and not self.propagate(new, queue):
            return None
        return new

    def complete(self, st: _State) -> _State | None:
        """Decide every open edge pattern; returns a fully decided state or None."""
        self._tick()
        prob = self.prob
        if prob.kind.needs_all_classes:
            seen = 0
            for m in st.edge_dom:
                seen |= m
            if seen != prob.full_pat:
                return None
        best = None
        best_size = 99
        for e, m in enumerate(st.edge_dom):
            size = bin(m).count("1")
            if size > 1 and size < best_size:
                best, best_size = e, size
        if best is None:
            if prob.kind.needs_all_classes:
                seen = 0
                for m in st.edge_dom:
                    seen |= m
                if seen != prob.full_pat:
                    return None
            return st
        for pi in _bits(st.edge_dom[best]):
            child = _State(st.pos, st.order, st.split, list(st.pair_dom), list(st.edge_dom), st.roles)
            child.edge_dom[best] = 1 << pi
            if self.propagate(child, [best]):
                done = self.complete(child)
                if done is not None:
                    return done
        return None

    def run(self, st: _State) -> _State | None:
        self._tick()
        if len(st.order) == len(self.prob.active):
            return self.complete(st)
        for tok in self.tokens(st):
            child = self.apply(st, tok)
            if child is None:
                continue
            if tok[0] == "g":
                # gap split must be followed by a vertex
                for tok2 in self.tokens(child):
                    if tok2[0] != "v":
                        continue
                    child2 = self.apply(child, tok2)
                    if child2 is not None:
                        found = self.run(child2)
                        if found is not None:
                            return found
                continue
            found = self.run(child)
            if found is not None:
                return found
        return None


def _certificate(prob: _Problem, st: _State) -> PaletteCertificate:
    coloring = {}
    for p, dom in zip(prob.pairs, st.pair_dom):
        coloring[p] = COLORS[_bits(dom)[0]]
    order = list(st.order)
    iso = list(prob.iso)
    istar = None
    if st.split is not None and st.split[0] == "gap":
        cut = st.split[1]
        order = order[:cut] + [iso[0]] + order[cut:] + iso[1:]
        istar = cut + 1
    else:
        order = order + iso
        if st.split is not None:
            istar = st.split[1]
        else:
            istar = prob.n
    if not prob.kind.needs_istar:
        istar = None
    return PaletteCertificate(prob.kind, tuple(order), coloring, istar)


def _trivial(prob: _Problem) -> SolveResult | None:
    kind = prob.kind
    if prob.edges:
        return None
    if kind is PropertyKind.SPADES_STAR:
        return SolveResult(kind, Status.UNSAT)
    if kind.needs_istar and prob.n == 0:
        # istar must lie in [f], which is empty
        return SolveResult(kind, Status.UNSAT)
    istar = prob.n if kind.needs_istar else None
    return SolveResult(kind, Status.SAT, PaletteCertificate(kind, tuple(range(prob.n)), {}, istar))


def _run_branch(args) -> tuple[PaletteCertificate | None, int]:
    F, kind, index, deadline = args
    prob = _Problem(F, kind)
    search = _Search(prob, deadline)
    root = search.initial()
    tok = search.tokens(root)[index]
    child = search.apply(root, tok)
    if child is None:
        return None, search.nodes
    if tok[0] == "g":
        found = None
        for tok2 in search.tokens(child):
            if tok2[0] == "v" and (c2 := search.apply(child, tok2)) is not None:
                found = search.run(c2)
                if found is not None:
                    break
    else:
        found = search.run(child)
    return (_certificate(prob, found) if found is not None else None), search.nodes


def solve(F: ThreeGraph, kind: PropertyKind, *, max_vertices: int = DEFAULT_MAX_VERTICES,
          timeout_ms: int | None = DEFAULT_TIMEOUT_MS, threads: int = 1) -> SolveResult:
    """Decide whether F has a certificate of the given kind.

    Raises :class:`GuardExceeded` for graphs over ``max_vertices`` and
    :class:`SearchTimeout` when ``timeout_ms`` elapses first. The verdict and
    the returned certificate do not depend on ``threads``.
    """
    if F.n > max_vertices:
        raise GuardExceeded(f"graph has {F.n} vertices, guard is {max_vertices}")
    prob = _Problem(F, kind)
    trivial = _trivial(prob)
    if trivial is not None:
        return trivial
    deadline = None if timeout_ms is None else time.monotonic() + timeout_ms / 1000.0

    if threads > 1:
        search = _Search(prob, deadline)
        n_top = len(search.tokens(search.initial()))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_branch, [(F, kind, i, deadline) for i in range(n_top)]))
        nodes = sum(r[1] for r in results)
        for cert, _ in results:
            if cert is not None:
                _check_emitted(F, cert)
                return SolveResult(kind, Status.SAT, cert, nodes)
        return SolveResult(kind, Status.UNSAT, None, nodes)

    search = _Search(prob, deadline)
    found = search.run(search.initial())
    if found is None:
        return SolveResult(kind, Status.UNSAT, None, search.nodes)
    cert = _certificate(prob, found)
    _check_emitted(F, cert)
    return SolveResult(kind, Status.SAT, cert, search.nodes)


def _check_emitted(F: ThreeGraph, cert: PaletteCertificate) -> None:
    verdict = verify(F, cert)
    if not verdict:
        raise AssertionError(f"solver emitted a rejected certificate: {verdict.reason}")


def threads_from_env(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get("TURAN_THREADS", default)))
    except ValueError:
        return default
