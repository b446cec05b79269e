"""Two-letter word calculus for the Menger curve fundamental group."""

from .words import (
    EMPTY,
    DyadicStage,
    Letter,
    Word,
    X_NEG,
    X_POS,
    Y_NEG,
    Y_POS,
    chi,
    format_word,
    invert_word,
    parse_word,
    psi,
    reduce_word,
)
from .graph import Vertex, base_vertex, bit_length, is_loop, neighbor, trace
from .projection import decompose, project, project_chain, project_reduced
from .sequences import CoherentSequence, cap, complete, star, validate
from .weights import BoundInterval, norm_bounds, rho, weigh_level1, weigh_refine

__all__ = [
    "EMPTY",
    "DyadicStage",
    "Letter",
    "Word",
    "X_NEG",
    "X_POS",
    "Y_NEG",
    "Y_POS",
    "chi",
    "format_word",
    "invert_word",
    "parse_word",
    "psi",
    "reduce_word",
    "Vertex",
    "base_vertex",
    "bit_length",
    "is_loop",
    "neighbor",
    "trace",
    "decompose",
    "project",
    "project_chain",
    "project_reduced",
    "CoherentSequence",
    "cap",
    "complete",
    "star",
    "validate",
    "BoundInterval",
    "norm_bounds",
    "rho",
    "weigh_level1",
    "weigh_refine",
]

__version__ = "0.1.0"
