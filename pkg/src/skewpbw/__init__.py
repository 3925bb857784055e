"""Skew PBW extensions over concrete coefficient rings.

Normal-form arithmetic, decision procedures for ring and extension
properties, a bounded theorem-checking suite, localization on finite and
commutative rings, a catalog of named instances and a command-line front end.
"""

from .algebra import SkewPoly, SkewPresentation, validate_presentation
from .config import DEFAULT_CONFIG, SearchConfig
from .properties import ALL_PROPERTIES, decide, implication_report, replay
from .theorems import THEOREMS, run_all, verify
from .verdict import Status, TheoremReport, TheoremStatus, Verdict, Witness

__version__ = "0.1.0"

__all__ = [
    "SkewPoly", "SkewPresentation", "validate_presentation", "DEFAULT_CONFIG", "SearchConfig",
    "ALL_PROPERTIES", "decide", "implication_report", "replay", "THEOREMS", "run_all", "verify",
    "Status", "TheoremReport", "TheoremStatus", "Verdict", "Witness", "__version__",
]
