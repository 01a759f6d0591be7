"""Structured pass/fail evidence returned by the checkers and verifiers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Optional


class Verdict(str, enum.Enum):
    CONSISTENT = "consistent"
    NOT_APPLICABLE = "not-applicable"
    INCONSISTENT = "inconsistent"


@dataclass
class Check:
    """One named hypothesis or proof step; ``satisfied`` is None when undecided."""

    name: str
    satisfied: Optional[bool]
    evidence: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "satisfied": self.satisfied, "evidence": self.evidence}


@dataclass
class TheoremReport:
    theorem: str
    hypotheses: list[Check] = field(default_factory=list)
    conclusion: Optional[bool] = None
    verdict: Verdict = Verdict.NOT_APPLICABLE
    coverage: list[str] = field(default_factory=list)
    steps: list[Check] = field(default_factory=list)
    contrapositive: Optional[bool] = None
    instances: list["TheoremReport"] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def decide(self) -> "TheoremReport":
        """Set the verdict from hypotheses, coverage and conclusion.

        Proof steps are folded into the conclusion: a failed step with all
        hypotheses satisfied is an inconsistency just like a failed conclusion.
        """
        if self.conclusion is not None and self.steps:
            self.conclusion = self.conclusion and all(s.satisfied for s in self.steps)
        if self.coverage or not all(h.satisfied for h in self.hypotheses):
            self.verdict = Verdict.NOT_APPLICABLE
        elif self.conclusion:
            self.verdict = Verdict.CONSISTENT
        elif self.conclusion is None:
            self.verdict = Verdict.NOT_APPLICABLE
        else:
            self.verdict = Verdict.INCONSISTENT
        return self

    @classmethod
    def combine(cls, theorem: str, instances: list["TheoremReport"], notes=()) -> "TheoremReport":
        """Aggregate several instances of one theorem into one verdict."""
        report = cls(theorem, instances=list(instances), notes=list(notes))
        verdicts = {r.verdict for r in instances}
        if Verdict.INCONSISTENT in verdicts:
            report.verdict = Verdict.INCONSISTENT
        elif Verdict.CONSISTENT in verdicts:
            report.verdict = Verdict.CONSISTENT
        else:
            report.verdict = Verdict.NOT_APPLICABLE
        return report

    def hypothesis(self, name: str) -> Optional[Check]:
        return next((h for h in self.hypotheses if h.name == name), None)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "theorem": self.theorem,
            "verdict": self.verdict.value,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "conclusion": self.conclusion,
        }
        if self.steps:
            out["steps"] = [s.to_dict() for s in self.steps]
        if self.coverage:
            out["coverage"] = list(self.coverage)
        if self.contrapositive is not None:
            out["contrapositive"] = self.contrapositive
        if self.instances:
            out["instances"] = [r.to_dict() for r in self.instances]
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def render(self, indent: str = "") -> str:
        lines = [f"{indent}{self.theorem}: {self.verdict.value}"]
        for h in self.hypotheses:
            lines.append(f"{indent}  hypothesis {h.name}: {_flag(h.satisfied)} {h.evidence}".rstrip())
        for s in self.steps:
            lines.append(f"{indent}  step {s.name}: {_flag(s.satisfied)} {s.evidence}".rstrip())
        if self.conclusion is not None:
            lines.append(f"{indent}  conclusion: {_flag(self.conclusion)}")
        if self.contrapositive is not None:
            word = "confirmed" if self.contrapositive else "NOT confirmed"
            lines.append(f"{indent}  contrapositive {word}")
        for c in self.coverage:
            lines.append(f"{indent}  coverage: {c}")
        for n in self.notes:
            lines.append(f"{indent}  note: {n}")
        for r in self.instances:
            lines.append(r.render(indent + "  "))
        return "\n".join(lines)


@dataclass
class DecisionReport:
    """Outcome of deciding a property such as distributivity on one category.

    ``witness`` is the first failing tuple, ``skipped`` the tuples that could
    not be checked because a (co)limit is missing.
    """

    property: str
    holds: bool
    scope: str
    witness: Optional[tuple[int, ...]] = None
    checked: int = 0
    skipped: list[tuple[int, ...]] = field(default_factory=list)
    reason: str = ""

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "holds": self.holds,
            "scope": self.scope,
            "witness": list(self.witness) if self.witness is not None else None,
            "checked": self.checked,
            "skipped": [list(t) for t in self.skipped],
            "reason": self.reason,
        }


@dataclass
class CoherenceReport:
    failures: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def axioms(self) -> set[str]:
        return {name for name, _ in self.failures}

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failures": [[n, list(w)] for n, w in self.failures]}


def _flag(value: Optional[bool]) -> str:
    return {True: "yes", False: "no", None: "undecided"}[value]
