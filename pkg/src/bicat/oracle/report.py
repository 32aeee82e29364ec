"""Verification reports and the per-partition tally that feeds them."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional

RECORD_CAP = 25

ALL_PASS = "AllPass"
COUNTEREXAMPLE = "Counterexample"


@dataclass
class Part:
    """One enumeration domain; ``variables`` maps names to domain sizes when the
    domain is a plain product, otherwise ``cases`` is counted during planning."""

    name: str
    cases: int
    variables: Optional[Dict[str, int]] = None

    def to_dict(self):
        out = {"part": self.name, "cases": self.cases}
        if self.variables is not None:
            out["variables"] = dict(self.variables)
        return out


class Tally:
    """Mutable accumulator for one partition of a verification run."""

    def __init__(self):
        self.cases: Counter = Counter()
        self.failures = 0
        self.counterexamples: List[dict] = []
        self.witnesses: Counter = Counter()
        self.examples: Dict[str, dict] = {}
        self.findings: Counter = Counter()
        self.finding_examples: Dict[str, dict] = {}

    def case(self, part: str, n: int = 1):
        self.cases[part] += n

    def fail(self, reason: str, **context):
        self.failures += 1
        if len(self.counterexamples) < RECORD_CAP:
            self.counterexamples.append({"reason": reason, **context})

    def hit(self, label: str, example: Optional[dict] = None):
        self.witnesses[label] += 1
        if example is not None and label not in self.examples:
            self.examples[label] = example

    def note(self, label: str, example: Optional[dict] = None):
        self.findings[label] += 1
        if example is not None and label not in self.finding_examples:
            self.finding_examples[label] = example

    def merge(self, other: "Tally"):
        """Fold a later partition into this one (order matters for records)."""
        self.cases.update(other.cases)
        self.failures += other.failures
        room = RECORD_CAP - len(self.counterexamples)
        self.counterexamples.extend(other.counterexamples[: max(room, 0)])
        self.witnesses.update(other.witnesses)
        for k, v in other.examples.items():
            self.examples.setdefault(k, v)
        self.findings.update(other.findings)
        for k, v in other.finding_examples.items():
            self.finding_examples.setdefault(k, v)


@dataclass
class VerificationReport:
    theorem: str
    claim: str
    profile: Dict[str, object]
    bounds: Dict[str, int]
    domains: List[Part]
    cases_checked: int
    counterexample_count: int
    counterexamples: List[dict]
    witnesses: Dict[str, int]
    examples: Dict[str, dict]
    findings: Dict[str, dict] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return ALL_PASS if not self.counterexamples else COUNTEREXAMPLE

    @property
    def passed(self) -> bool:
        return self.status == ALL_PASS

    @classmethod
    def from_tally(cls, theorem, claim, profile, bounds, domains, tally: Tally) -> "VerificationReport":
        findings = {
            k: {"count": tally.findings[k], "example": tally.finding_examples.get(k)}
            for k in sorted(tally.findings)
        }
        return cls(
            theorem=theorem,
            claim=claim,
            profile=profile,
            bounds=dict(sorted(bounds.items())),
            domains=list(domains),
            cases_checked=sum(tally.cases.values()),
            counterexample_count=tally.failures,
            counterexamples=list(tally.counterexamples),
            witnesses=dict(sorted(tally.witnesses.items())),
            examples={k: tally.examples[k] for k in sorted(tally.examples)},
            findings=findings,
        )

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "claim": self.claim,
            "profile": self.profile,
            "bounds": self.bounds,
            "domains": [p.to_dict() for p in self.domains],
            "cases_checked": self.cases_checked,
            "status": self.status,
            "counterexample_count": self.counterexample_count,
            "counterexamples": self.counterexamples,
            "witnesses": self.witnesses,
            "examples": self.examples,
            "findings": self.findings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [
            f"theorem   {self.theorem}: {self.claim}",
            f"profile   {self.profile['involution']}",
            "bounds    " + " ".join(f"{k}={v}" for k, v in self.bounds.items()),
            f"cases     {self.cases_checked}",
            f"status    {self.status}",
        ]
        for p in self.domains:
            shape = ""
            if p.variables:
                shape = " = " + " x ".join(f"{k}({n})" for k, n in p.variables.items())
            lines.append(f"  domain {p.name}: {p.cases}{shape}")
        for label, n in self.witnesses.items():
            ex = self.examples.get(label)
            lines.append(f"  witness {label}: {n}" + (f"  e.g. {_inline(ex)}" if ex else ""))
        for label, info in self.findings.items():
            ex = info["example"]
            lines.append(f"  finding {label}: {info['count']}" + (f"  e.g. {_inline(ex)}" if ex else ""))
        if self.counterexamples:
            lines.append(f"counterexamples ({self.counterexample_count}, first {len(self.counterexamples)} shown):")
            for rec in self.counterexamples:
                lines.append("  " + _inline(rec))
        return "\n".join(lines) + "\n"


def _inline(d) -> str:
    if not isinstance(d, dict):
        return str(d)
    parts = []
    for k, v in d.items():
        if isinstance(v, list):
            v = "{" + ", ".join(str(x) for x in v) + "}"
        elif isinstance(v, dict):
            v = "(" + _inline(v) + ")"
        parts.append(f"{k}={v}")
    return " ".join(parts)
