from .certificate import PaletteCertificate, Verdict, lift, recolor, restrict, swap_clubs, vanishing_as_spades, verify
from .dstar import DStar, d_star
from .kinds import COLORS, PropertyKind
from .oracle import oracle_solve
from .solver import SolveResult, Status, solve

__all__ = [
    "COLORS", "DStar", "PaletteCertificate", "PropertyKind", "SolveResult", "Status", "Verdict",
    "d_star", "lift", "oracle_solve", "recolor", "restrict", "solve", "swap_clubs", "vanishing_as_spades", "verify",
]
