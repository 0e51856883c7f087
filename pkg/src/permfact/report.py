"""Small result types for identity-verification runs."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CaseResult:
    """Outcome of one verified case."""

    label: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        text = f"{'PASS' if self.ok else 'FAIL'} {self.label}"
        if self.detail and not self.ok:
            text += f": {self.detail}"
        return text


@dataclass
class CheckReport:
    """A named batch of case results."""

    name: str
    cases: list = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.cases.append(CaseResult(label, bool(ok), detail))

    def extend(self, other: "CheckReport") -> None:
        self.cases.extend(other.cases)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def failures(self) -> list:
        return [c for c in self.cases if not c.ok]

    def summary(self) -> str:
        passed = sum(1 for c in self.cases if c.ok)
        return f"{self.name}: {passed}/{len(self.cases)} checks passed"
