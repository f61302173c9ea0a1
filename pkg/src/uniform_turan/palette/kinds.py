"""Property kinds, palettes and the per-edge pattern tables."""

from __future__ import annotations

import enum
from dataclasses import dataclass

COLORS = ("red", "blue", "green", "violet", "cyan", "black")
COLOR_INDEX = {c: i for i, c in enumerate(COLORS)}


class Cond(enum.Enum):
    """Side condition on the positions ``i < j < k`` of an edge."""

    ANY = "any"
    WITHIN = "k <= istar"
    STRADDLE = "j < istar < k"

    def holds(self, j: int, k: int, istar: int | None) -> bool:
        if self is Cond.ANY:
            return True
        if self is Cond.WITHIN:
            return k <= istar
        return j < istar < k


@dataclass(frozen=True)
class Pattern:
    # colors of (first-middle, middle-last, first-last)
    colors: tuple[str, str, str]
    cond: Cond = Cond.ANY

    def matches(self, found: tuple[str, str, str], j: int, k: int, istar: int | None) -> bool:
        return found == self.colors and self.cond.holds(j, k, istar)


class PropertyKind(enum.Enum):
    VANISHING = "vanishing"
    CLUBS = "clubs"
    SPADES = "spades"
    SPADES_STAR = "spades-star"
    FIVE_COLOR = "five-color"

    @property
    def palette(self) -> tuple[str, ...]:
        return _PALETTES[self]

    @property
    def patterns(self) -> tuple[Pattern, ...]:
        return _PATTERNS[self]

    @property
    def needs_istar(self) -> bool:
        return self in (PropertyKind.SPADES, PropertyKind.SPADES_STAR)

    @property
    def needs_all_classes(self) -> bool:
        return self is PropertyKind.SPADES_STAR

    @classmethod
    def parse(cls, text: str) -> "PropertyKind":
        key = text.strip().lower().replace("_", "-")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown property {text!r}")


_SPADES_PATTERNS = (
    Pattern(("blue", "violet", "red")),
    Pattern(("green", "cyan", "blue"), Cond.WITHIN),
    Pattern(("green", "black", "red"), Cond.STRADDLE),
)

_PATTERNS = {
    PropertyKind.VANISHING: (Pattern(("red", "blue", "green")),),
    PropertyKind.CLUBS: (Pattern(("red", "red", "blue")), Pattern(("blue", "blue", "red"))),
    PropertyKind.SPADES: _SPADES_PATTERNS,
    PropertyKind.SPADES_STAR: _SPADES_PATTERNS,
    PropertyKind.FIVE_COLOR: (Pattern(("blue", "violet", "red")), Pattern(("green", "cyan", "blue"))),
}

_PALETTES = {
    PropertyKind.VANISHING: ("red", "blue", "green"),
    PropertyKind.CLUBS: ("red", "blue"),
    PropertyKind.SPADES: COLORS,
    PropertyKind.SPADES_STAR: COLORS,
    PropertyKind.FIVE_COLOR: ("red", "blue", "green", "violet", "cyan"),
}
