"""Named 3-graphs.

Letter-labelled graphs use the vertex numbering a,b,c,d,x,y,z -> 0..6.
Wheels put the hub at 0 and the rim ``v_1..v_{t-1}`` at ``1..t-1``. Double
pyramids put the apexes x, y at 0, 1 and the rim at ``2..t``.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InvalidGraph
from .hypergraph import ThreeGraph

LETTERS = {ch: i for i, ch in enumerate("abcdxyz")}

_K4_MINUS = ("abc", "abd", "acd")
_F5_EXTRA = ("xab", "xcd")
_F6_EXTRA = ("yac", "ybd")
_F7_EXTRA = ("zad", "zbc")
_HAT_EXTRA = ("xyz",)


def _lettered(words) -> ThreeGraph:
    verts = sorted({LETTERS[ch] for w in words for ch in w})
    n = verts[-1] + 1
    return ThreeGraph(n, tuple(tuple(LETTERS[ch] for ch in w) for w in words))


def k4minus() -> ThreeGraph:
    return _lettered(_K4_MINUS)


def f5star() -> ThreeGraph:
    return _lettered(_K4_MINUS + _F5_EXTRA)


def f6star() -> ThreeGraph:
    return _lettered(_K4_MINUS + _F5_EXTRA + _F6_EXTRA)


def f7star() -> ThreeGraph:
    return _lettered(_K4_MINUS + _F5_EXTRA + _F6_EXTRA + _F7_EXTRA)


def f7star_hat() -> ThreeGraph:
    return _lettered(_K4_MINUS + _F5_EXTRA + _F6_EXTRA + _F7_EXTRA + _HAT_EXTRA)


def wheel(t: int) -> ThreeGraph:
    """Hub 0 joined to every consecutive pair of the rim cycle ``1..t-1``."""
    if t < 3:
        raise InvalidGraph("wheel needs t >= 3")
    rim = list(range(1, t))
    m = len(rim)
    return ThreeGraph(t, tuple((0, rim[i], rim[(i + 1) % m]) for i in range(m)))


def double_pyramid(t: int) -> ThreeGraph:
    if t < 4:
        raise InvalidGraph("double pyramid needs t >= 4")
    rim = list(range(2, t + 1))
    m = len(rim)
    edges = []
    for apex in (0, 1):
        edges.extend((apex, rim[i], rim[(i + 1) % m]) for i in range(m))
    return ThreeGraph(t + 1, tuple(edges))


def single_edge() -> ThreeGraph:
    return ThreeGraph(3, ((0, 1, 2),))


def edgeless(n: int) -> ThreeGraph:
    return ThreeGraph(n)


def complete(n: int) -> ThreeGraph:
    return ThreeGraph(n, tuple(combinations(range(n), 3)))


_NULLARY = {
    "k4minus": k4minus,
    "f5star": f5star,
    "f6star": f6star,
    "f7star": f7star,
    "f7star_hat": f7star_hat,
    "single_edge": single_edge,
}
_UNARY = {
    "wheel": wheel,
    "double_pyramid": double_pyramid,
    "edgeless": edgeless,
    "complete": complete,
}

NAMES = tuple(sorted(_NULLARY) + sorted(_UNARY))


def catalog(name: str, *params: int) -> ThreeGraph:
    if name in _NULLARY:
        if params:
            raise InvalidGraph(f"{name} takes no parameters")
        return _NULLARY[name]()
    if name in _UNARY:
        if len(params) != 1:
            raise InvalidGraph(f"{name} takes exactly one integer parameter")
        return _UNARY[name](int(params[0]))
    raise InvalidGraph(f"unknown catalog graph {name!r}; known: {', '.join(NAMES)}")


def from_spec(spec: str) -> ThreeGraph:
    """Resolve ``"wheel:6"`` or ``"name:wheel:6"`` style references."""
    if spec.startswith("name:"):
        spec = spec[len("name:"):]
    name, *rest = spec.split(":")
    try:
        params = [int(p) for p in rest]
    except ValueError as exc:
        raise InvalidGraph(f"bad catalog parameter in {spec!r}") from exc
    return catalog(name, *params)
