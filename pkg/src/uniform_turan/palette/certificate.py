"""Palette certificates: data type, JSON form, verifier and certificate
transformations (restriction, blow-up lifting, color swaps)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..errors import InvalidCertificate
from ..hypergraph import Pair, ThreeGraph, shadow
from .kinds import COLORS, PropertyKind


@dataclass(frozen=True)
class PaletteCertificate:
    """An ordering (``ordering[p]`` is the vertex at position ``p+1``), a
    coloring of the shadow and, for the spades kinds, the split index."""

    kind: PropertyKind
    ordering: tuple[int, ...]
    coloring: Mapping[Pair, str] = field(default_factory=dict)
    istar: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "ordering", tuple(int(v) for v in self.ordering))
        norm = {}
        for (u, v), c in self.coloring.items():
            norm[(min(u, v), max(u, v))] = c
        object.__setattr__(self, "coloring", dict(sorted(norm.items())))

    @property
    def positions(self) -> dict[int, int]:
        return {v: p + 1 for p, v in enumerate(self.ordering)}

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "ordering": list(self.ordering),
            "istar": self.istar,
            "coloring": [{"pair": list(p), "color": c} for p, c in self.coloring.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PaletteCertificate":
        try:
            kind = PropertyKind.parse(data["kind"])
            coloring = {tuple(item["pair"]): item["color"] for item in data["coloring"]}
            return cls(kind, tuple(data["ordering"]), coloring, data.get("istar"))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidCertificate(f"malformed certificate document: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "PaletteCertificate":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str = ""
    edge: tuple[int, int, int] | None = None
    expected: tuple[tuple[str, str, str], ...] = ()
    found: tuple[str, str, str] | None = None
    # pattern index matched by each edge, in graph edge order (accepted certificates only)
    classes: tuple[int, ...] = ()
    # every violating edge, in graph edge order (``edge`` is the first)
    violations: tuple[tuple[int, int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.accepted

    def to_dict(self) -> dict:
        out = {"accepted": self.accepted}
        if not self.accepted:
            out.update(reason=self.reason,
                       edge=list(self.edge) if self.edge else None,
                       expected=[list(p) for p in self.expected],
                       found=list(self.found) if self.found else None,
                       violations=[list(e) for e in self.violations])
        return out


def check_structure(F: ThreeGraph, cert: PaletteCertificate) -> None:
    """Raise :class:`InvalidCertificate` unless ``cert`` is well-formed for ``F``."""
    if sorted(cert.ordering) != list(range(F.n)):
        raise InvalidCertificate("ordering is not a permutation of the vertices")
    dom = set(cert.coloring)
    sh = shadow(F).as_set()
    if dom != sh:
        missing = sorted(sh - dom)
        extra = sorted(dom - sh)
        raise InvalidCertificate(
            f"coloring domain differs from the shadow (missing {missing}, extra {extra})")
    bad = sorted({c for c in cert.coloring.values() if c not in cert.kind.palette})
    if bad:
        raise InvalidCertificate(f"colors {bad} not in the {cert.kind.value} palette")
    if cert.kind.needs_istar:
        if cert.istar is None:
            raise InvalidCertificate(f"{cert.kind.value} certificate needs istar")
        if not 1 <= cert.istar <= F.n:
            raise InvalidCertificate(f"istar {cert.istar} outside 1..{F.n}")
    elif cert.istar is not None:
        raise InvalidCertificate(f"{cert.kind.value} certificate must not carry istar")


def verify(F: ThreeGraph, cert: PaletteCertificate) -> Verdict:
    check_structure(F, cert)
    pos = cert.positions
    chi = cert.coloring
    patterns = cert.kind.patterns
    classes = []
    bad = []
    for e in F.edges:
        a, b, c = sorted(e, key=pos.__getitem__)
        j, k = pos[b], pos[c]
        found = (chi[min(a, b), max(a, b)], chi[min(b, c), max(b, c)], chi[min(a, c), max(a, c)])
        hit = [i for i, p in enumerate(patterns) if p.matches(found, j, k, cert.istar)]
        if hit:
            classes.append(hit[0])
        else:
            bad.append((e, found))
    if bad:
        e, found = bad[0]
        return Verdict(False, f"edge {e} does not match any permitted pattern",
                       edge=e, expected=tuple(p.colors for p in patterns), found=found,
                       violations=tuple(x for x, _ in bad))
    if cert.kind.needs_all_classes:
        unused = [i for i in range(len(patterns)) if i not in classes]
        if unused:
            return Verdict(False, f"pattern classes {[patterns[i].colors for i in unused]} are empty",
                           expected=tuple(patterns[i].colors for i in unused))
    return Verdict(True, classes=tuple(classes))


def restrict(cert: PaletteCertificate, F: ThreeGraph, S: Iterable[int]) -> PaletteCertificate:
    """Restrict a certificate for F to ``induced_sub(F, S)`` (relabeled in increasing order)."""
    verts = sorted(set(S))
    index = {v: i for i, v in enumerate(verts)}
    order = [v for v in cert.ordering if v in index]
    sub_edges = [e for e in F.edges if all(v in index for v in e)]
    keep = {p for e in sub_edges for p in ((e[0], e[1]), (e[1], e[2]), (e[0], e[2]))}
    coloring = {(index[u], index[v]): c for (u, v), c in cert.coloring.items() if (u, v) in keep}
    new_order = tuple(index[v] for v in order)
    if not cert.kind.needs_istar or not verts:
        return PaletteCertificate(cert.kind, new_order, coloring, None)
    kept_pos = [p + 1 for p, v in enumerate(cert.ordering) if v in index]
    below = sum(1 for p in kept_pos if p <= cert.istar)
    if cert.istar in kept_pos:
        return PaletteCertificate(cert.kind, new_order, coloring, below)
    # The split vertex is gone. Straddling edges then need a split strictly
    # between two kept positions, which may not exist; try both neighbours.
    candidates = [c for c in (below + 1, below) if 1 <= c <= len(verts)]
    sub = ThreeGraph(len(verts), tuple(tuple(index[v] for v in e) for e in sub_edges))
    for c in candidates:
        out = PaletteCertificate(cert.kind, new_order, coloring, c)
        if verify(sub, out):
            return out
    return PaletteCertificate(cert.kind, new_order, coloring, candidates[0])


def lift(cert: PaletteCertificate, t: int) -> PaletteCertificate:
    """Certificate for ``blow_up(F, t)``: copies are consecutive and inherit colors."""
    order = tuple(v * t + c for v in cert.ordering for c in range(t))
    coloring = {}
    for (u, v), col in cert.coloring.items():
        for x in range(t):
            for y in range(t):
                coloring[(u * t + x, v * t + y)] = col
    istar = cert.istar * t if cert.istar is not None else None
    return PaletteCertificate(cert.kind, order, coloring, istar)


def recolor(cert: PaletteCertificate, mapping: Mapping[str, str],
            kind: PropertyKind | None = None, istar: int | None = None) -> PaletteCertificate:
    new_kind = kind or cert.kind
    coloring = {p: mapping.get(c, c) for p, c in cert.coloring.items()}
    if not new_kind.needs_istar:
        istar = None
    elif istar is None:
        istar = cert.istar
    return PaletteCertificate(new_kind, cert.ordering, coloring, istar)


def swap_clubs(cert: PaletteCertificate) -> PaletteCertificate:
    return recolor(cert, {"red": "blue", "blue": "red"})


def vanishing_as_spades(cert: PaletteCertificate) -> PaletteCertificate:
    """A vanishing certificate read as a spades certificate with istar = f."""
    return recolor(cert, {"red": "green", "blue": "cyan", "green": "blue"},
                   kind=PropertyKind.SPADES, istar=max(len(cert.ordering), 1))


assert set(COLORS) >= {c for k in PropertyKind for c in k.palette}
