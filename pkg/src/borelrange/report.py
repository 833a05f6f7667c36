from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SweepReport:
    check: str
    cells: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)
    asserted: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def checked(self) -> int:
        return len(self.cells)
