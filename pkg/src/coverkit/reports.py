"""Shared verdict vocabulary for verification operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
NOT_APPLICABLE = "NOT-APPLICABLE"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one claim check.

    ``verdict`` is PASS when the claim's inequality holds, FAIL when it is
    violated (never expected on valid input), and NOT-APPLICABLE when the
    claim's hypotheses are not met.  ``details`` carries the numbers the
    check was decided on and serializes directly into CLI output.
    """

    verdict: str
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def __str__(self) -> str:
        return self.verdict
