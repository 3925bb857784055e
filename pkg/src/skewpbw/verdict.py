"""Outcome types shared by all deciders."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    VERIFIED_UP_TO = "verified-up-to"
    INCONCLUSIVE = "inconclusive"

    @property
    def presumed_true(self) -> bool:
        return self in (Status.HOLDS, Status.VERIFIED_UP_TO)


@dataclass
class Witness:
    """A replayable counterexample.

    ``elements`` holds coefficient-ring elements, ``polys`` holds elements of
    the extension, ``info`` holds plain JSON-able data (indices, exponents).
    """

    kind: str
    ring: Any
    elements: dict = field(default_factory=dict)
    polys: dict = field(default_factory=dict)
    element_sets: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind}
        for key, value in self.elements.items():
            out[key] = self.ring.format(value)
        for key, value in self.polys.items():
            out[key] = str(value)
        for key, values in self.element_sets.items():
            out[key] = [self.ring.format(v) for v in values]
        for key, value in self.info.items():
            out[key] = _plain(value)
        return dict(sorted(out.items()))

    def describe(self) -> str:
        d = self.to_dict()
        return "; ".join(f"{k}={_short(v)}" for k, v in d.items() if k != "kind")


@dataclass
class Verdict:
    property: str
    status: Status
    bound: int | None = None
    witness: Witness | None = None
    pairs_examined: int = 0
    scope: str = "exhaustive"
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def label(self) -> str:
        if self.status is Status.VERIFIED_UP_TO:
            return f"verified-up-to({self.bound})"
        return self.status.value

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "status": self.status.value,
            "bound": self.bound,
            "scope": self.scope,
            "pairs_examined": self.pairs_examined,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "note": self.note,
        }


def _plain(value):
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, list):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items())}
    return value


def _short(value):
    if isinstance(value, list):
        return "{" + ", ".join(str(v) for v in value) + "}"
    return str(value)


class TheoremStatus(str, enum.Enum):
    CONSISTENT = "consistent"
    VIOLATION = "violation"
    HYPOTHESES_NOT_MET = "hypotheses-not-met"
    INCONCLUSIVE = "inconclusive"


@dataclass
class TheoremReport:
    """One theorem checked on one instance.

    ``hypotheses`` and ``conclusions`` map statement names to verdicts; the
    status is derived from them by the rules in ``theorems``.
    """

    theorem: str
    instance: str
    degree: int
    status: TheoremStatus
    hypotheses: dict = field(default_factory=dict)
    conclusions: dict = field(default_factory=dict)
    witness: Witness | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "degree": self.degree,
            "status": self.status.value,
            "hypotheses": {k: v.to_dict() for k, v in self.hypotheses.items()},
            "conclusions": {k: v.to_dict() for k, v in self.conclusions.items()},
            "witness": None if self.witness is None else self.witness.to_dict(),
            "note": self.note,
        }
