"""Uniform pass/fail reporting for the check suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional


@dataclass(frozen=True)
class CheckItem:
    check: str
    location: str
    status: str  # "pass" | "fail"
    witness: Optional[str] = None

    def to_json(self) -> dict:
        obj = {"check": self.check, "location": self.location, "status": self.status}
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


class Report:
    """An ordered list of check items; ordering is construction order and is
    deterministic for deterministic inputs."""

    def __init__(self, items=()):
        self.items: List[CheckItem] = list(items)

    def add(self, check: str, location: str, ok: bool, witness: Optional[str] = None):
        self.items.append(CheckItem(check, location, "pass" if ok else "fail", None if ok else witness))

    def extend(self, other: "Report"):
        self.items.extend(other.items)

    @property
    def ok(self) -> bool:
        return all(i.status == "pass" for i in self.items)

    def failures(self) -> List[CheckItem]:
        return [i for i in self.items if i.status != "pass"]

    def to_json(self) -> list:
        return [i.to_json() for i in self.items]

    def summary(self) -> dict:
        fails = len(self.failures())
        return {"pass": len(self.items) - fails, "fail": fails}

    def __repr__(self):
        s = self.summary()
        return "Report(%d pass, %d fail)" % (s["pass"], s["fail"])
