# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Report values returned by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of a verification.

    A report fails when its own check failed or when any child failed. Only
    the first violation is kept, with the witnesses that exhibit it.
    """

    name: str
    failed: bool = False
    msg: str = ""
    witness: dict[str, Any] = field(default_factory=dict)
    checked: int = 0
    data: dict[str, Any] = field(default_factory=dict)
    children: list[Report] = field(default_factory=list)

    @property
    def passed(self: Report) -> bool:
        """Whether this check and every child passed."""
        return not self.failed and all(child.passed for child in self.children)

    def fail(self: Report, msg: str, **witness: Any) -> Report:
        """Record the first violation; later ones are ignored."""
        if not self.failed:
            self.failed = True
            self.msg = msg
            self.witness = witness
        return self

    def tick(self: Report, count: int = 1) -> None:
        """Count checked identities."""
        self.checked += count

    def child(self: Report, name: str) -> Report:
        """Create and attach a sub-report."""
        report = Report(name)
        self.children.append(report)
        return report

    def first_failure(self: Report) -> Report | None:
        """The first failing report in depth-first order."""
        if self.failed:
            return self
        for child in self.children:
            found = child.first_failure()
            if found is not None:
                return found
        return None

    def as_dict(self: Report) -> dict[str, Any]:
        """JSON friendly form."""
        result: dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
        }
        if self.failed:
            result["msg"] = self.msg
            result["witness"] = {key: str(value) for key, value in self.witness.items()}
        if self.data:
            result["data"] = {key: str(value) for key, value in self.data.items()}
        if self.children:
            result["children"] = [child.as_dict() for child in self.children]
        return result
