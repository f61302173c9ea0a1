"""Explicit certificates for the hat-F7 graph and for wheels."""

from __future__ import annotations

from importlib import resources

from .catalog import LETTERS
from .errors import InvalidGraph
from .palette.certificate import PaletteCertificate
from .palette.kinds import PropertyKind

_HAT_COLOR_SETS = {
    "red": ("ad", "yd", "xd"),
    "blue": ("az", "ax", "ac", "yx", "zc", "xc"),
    "green": ("ay", "ab", "yz", "yb", "zb"),
    "violet": ("zd", "cd"),
    "cyan": ("yc", "bx", "bc", "zx"),
    "black": ("bd",),
}


def f7star_hat_certificate(kind: PropertyKind = PropertyKind.SPADES) -> PaletteCertificate:
    """Order (a, y, z, b, x, c, d), split at position 6."""
    order = tuple(LETTERS[ch] for ch in "ayzbxcd")
    coloring = {}
    for color, words in _HAT_COLOR_SETS.items():
        for u, v in words:
            coloring[(LETTERS[u], LETTERS[v])] = color
    return PaletteCertificate(kind, order, coloring, 6)


def odd_wheel_certificate(t: int) -> PaletteCertificate:
    """Vanishing certificate for the wheel on t = 2m+1 vertices.

    Order: hub, odd rim vertices, even rim vertices. Spokes to odd rim
    vertices are red, to even ones green; rim pairs are blue.
    """
    if t < 3 or t % 2 == 0:
        raise InvalidGraph("odd wheel certificate needs odd t >= 3")
    m = (t - 1) // 2
    rim = list(range(1, 2 * m + 1))
    order = (0, *range(1, 2 * m, 2), *range(2, 2 * m + 1, 2))
    coloring = {(0, i): "red" if i % 2 else "green" for i in rim}
    for i in rim:
        nxt = i % (2 * m) + 1
        coloring[(min(i, nxt), max(i, nxt))] = "blue"
    return PaletteCertificate(PropertyKind.VANISHING, order, coloring)


def even_wheel_certificate(t: int, kind: PropertyKind = PropertyKind.SPADES) -> PaletteCertificate:
    """SPADES certificate for the wheel on t = 2m+2 vertices, split at 2m+1.

    Positions: hub first, odd rim vertices v_1..v_(2m-1) at 2..m+1, even
    rim vertices v_2..v_2m at m+2..2m+1, and v_(2m+1) last. Colors are
    assigned to position pairs.
    """
    if t < 4 or t % 2:
        raise InvalidGraph("even wheel certificate needs even t >= 4")
    m = (t - 2) // 2
    at = {1: 0, 2 * m + 2: 2 * m + 1}
    for i in range(1, 2 * m, 2):
        at[(i + 1) // 2 + 1] = i
    for j in range(2, 2 * m + 1, 2):
        at[j // 2 + m + 1] = j
    by_pos = {(1, 2 * m + 2): "red", (2 * m + 1, 2 * m + 2): "violet", (2, 2 * m + 2): "black",
              (m + 1, 2 * m + 1): "cyan"}
    for p in range(m + 2, 2 * m + 2):
        by_pos[(1, p)] = "blue"
    for p in range(2, m + 2):
        by_pos[(1, p)] = "green"
    for p in range(2, m + 1):
        by_pos[(p, p + m)] = "cyan"
        by_pos[(p + 1, p + m)] = "cyan"
    coloring = {}
    for (p, q), color in by_pos.items():
        u, v = at[p], at[q]
        coloring[(min(u, v), max(u, v))] = color
    order = tuple(at[p] for p in range(1, 2 * m + 3))
    return PaletteCertificate(kind, order, coloring, 2 * m + 1)


def shipped_certificate(name: str) -> PaletteCertificate:
    """Load a certificate bundled under ``uniform_turan/data``."""
    text = resources.files("uniform_turan").joinpath("data", f"{name}.json").read_text()
    return PaletteCertificate.from_json(text)
