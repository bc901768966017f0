"""Base classes shared by the z2kit models and verification reports."""
from __future__ import annotations

from collections.abc import Iterator

from pydantic import BaseModel, ConfigDict, Field


class Z2KitModel(BaseModel):
    """Base model for all z2kit data models.

    Models are immutable values; matrices and polynomials are embedded as
    arbitrary (already validated) types.
    """

    model_config = ConfigDict(
        frozen=True,
        arbitrary_types_allowed=True,
        populate_by_name=True,
    )


class CheckResult(Z2KitModel):
    """Outcome of a single named verification item.

    Attributes:
        name: Human-readable name of the checked relation or property
        passed: Whether the check holds exactly
        detail: Optional explanation, filled in for failures
    """

    name: str
    passed: bool
    detail: str | None = None


class VerificationReport(Z2KitModel):
    """Ordered collection of check results.

    Attributes:
        title: What was verified
        checks: Results in declaration order
    """

    title: str
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        """Checks that did not pass."""
        return [check for check in self.checks if not check.passed]

    def __len__(self) -> int:
        """Return the number of checks."""
        return len(self.checks)

    def __iter__(self) -> Iterator[CheckResult]:  # type: ignore[override]
        """Iterate over the checks."""
        return iter(self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        """Get a check by name."""
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_payload(self) -> dict[str, object]:
        """Serialize with a stable key order."""
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }

    def render(self) -> str:
        """Render as human-readable text."""
        lines = [self.title]
        for check in self.checks:
            mark = "PASS" if check.passed else "FAIL"
            line = f"  [{mark}] {check.name}"
            if check.detail:
                line += f" ({check.detail})"
            lines.append(line)
        lines.append("all checks passed" if self.passed else f"{len(self.failures)} check(s) failed")
        return "\n".join(lines)
