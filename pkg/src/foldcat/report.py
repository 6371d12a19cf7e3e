"""Verification reports shared by all identity-checking modules."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    i: int
    j: int
    expected: object
    got: object

    def as_dict(self) -> dict:
        return {"i": self.i, "j": self.j,
                "expected": str(self.expected), "got": str(self.got)}


@dataclass
class VerifyReport:
    suite: str
    size: int
    failures: list[Failure] = field(default_factory=list)
    conjecture: bool = False

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, i: int, j: int, expected, got) -> None:
        self.failures.append(Failure(i, j, expected, got))

    def merge(self, other: "VerifyReport") -> None:
        self.failures.extend(other.failures)

    def as_dict(self) -> dict:
        d = {"suite": self.suite, "size": self.size, "pass": self.ok,
             "failures": [f.as_dict() for f in self.failures]}
        if self.conjecture:
            d["conjecture"] = True
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict())
