# transcript.py
from __future__ import annotations

from dataclasses import asdict, dataclass, field
import json
import logging
from typing import Any

logger = logging.getLogger("regmat." + __name__)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


@dataclass
class CheckResult:
    """
    One named check: its status, how many trials ran and, on failure, a
    printable counterexample.
    """

    name: str
    status: str = PASS
    trials: int = 0
    counterexample: str | None = None
    note: str = ""

    @property
    def passed(self) -> bool:
        # a skipped check never fails the run
        return self.status != FAIL


@dataclass
class Transcript:
    """
    Everything a CLI invocation reports.

    ``outputs`` holds named text blocks (matrices in the shared text
    format, reports); ``checks`` the named checks. The exit code is derived:
    2 when ``error`` is set, else 0 when every check passed and 1 otherwise.

    """

    command: str
    seed: int | None = None
    checks: list[CheckResult] = field(default_factory=list)
    outputs: dict[str, str] = field(default_factory=dict)
    error: str | None = None

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return EXIT_INPUT_ERROR
        return EXIT_OK if all(c.passed for c in self.checks) else EXIT_FAILED

    def add(
        self,
        name: str,
        ok: bool,
        counterexample: str | None = None,
        trials: int = 1,
        note: str = "",
    ) -> CheckResult:
        result = CheckResult(
            name, PASS if ok else FAIL, trials, counterexample, note
        )
        self.checks.append(result)
        if not ok:
            logger.warning("check %s failed: %s", name, counterexample)
        return result

    def skip(self, name: str, note: str) -> CheckResult:
        result = CheckResult(name, SKIPPED, 0, None, note)
        self.checks.append(result)
        logger.info("check %s skipped: %s", name, note)
        return result

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["exit_code"] = self.exit_code
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"$ {self.command}"]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        for name, block in self.outputs.items():
            lines.append(f"--- {name}")
            lines.append(block.rstrip("\n"))
        if self.error is not None:
            lines.append(f"error: {self.error}")
        for check in self.checks:
            line = f"{check.name}: {check.status}"
            if check.trials != 1 and check.status != SKIPPED:
                line += f" ({check.trials} trials)"
            if check.note:
                line += f" [{check.note}]"
            lines.append(line)
            if check.counterexample:
                for row in check.counterexample.splitlines():
                    lines.append(f"    {row}")
        lines.append(f"exit: {self.exit_code}")
        return "\n".join(lines) + "\n"
