"""The sl2 weight system on chord diagrams, shares and graph joins.

Exact arithmetic throughout: values are polynomials in the Casimir ``c`` with
rational coefficients.
"""

from .diagrams import (
    ChordDiagram,
    Share,
    SimpleGraph,
    parse_diagram,
    parse_graph,
    parse_share,
)
from .exactalg import PolyC, PolyC1C2X, PolyCY
from .genfun import RSeries, gen_series
from .rewrite import Engine, normal_form, wsl2_diagram, wsl2_share_S
from .share_space import SElem, basis_convert, pairing, sigma

__all__ = [
    "ChordDiagram",
    "Engine",
    "PolyC",
    "PolyC1C2X",
    "PolyCY",
    "RSeries",
    "SElem",
    "Share",
    "SimpleGraph",
    "basis_convert",
    "gen_series",
    "normal_form",
    "pairing",
    "parse_diagram",
    "parse_graph",
    "parse_share",
    "sigma",
    "wsl2_diagram",
    "wsl2_share_S",
]

__version__ = "0.1.0"
