from dataclasses import dataclass, field

from ehrhart_mckay.components.algebra import AlgebraId
from ehrhart_mckay.enums import Method, OutputFormat, VerifyMode
from ehrhart_mckay.errors import TruncationError


@dataclass(frozen=True)
class RunSpec:
    """One requested computation: a series to `truncation` or a single count at `level`."""

    algebra: AlgebraId
    method: Method
    truncation: int | None = None
    level: int | None = None
    output_format: OutputFormat = OutputFormat.TEXT

    def __post_init__(self):
        if (self.truncation is None) == (self.level is None):
            raise TruncationError("Give exactly one of a truncation or a level")
        if self.truncation is not None and self.truncation < 1:
            raise TruncationError(f"Truncation must be >= 1, got {self.truncation}")
        if self.level is not None and self.level < 0:
            raise TruncationError(f"Level must be >= 0, got {self.level}")


@dataclass
class ComparisonRow:
    label: str
    values: dict[str, str]
    agree: bool

    def __str__(self):
        shown = "  ".join(f"{name}={value}" for name, value in self.values.items())
        return f"{'ok ' if self.agree else 'BAD'} {self.label}: {shown}"


@dataclass
class VerificationReport:
    mode: VerifyMode
    subject: str
    methods: list[str] = field(default_factory=list)
    rows: list[ComparisonRow] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def add(self, label: str, values: dict, agree: bool | None = None):
        """Adds a row; without an explicit verdict the row agrees when all values are equal."""
        values = {name: str(value) for name, value in values.items()}
        if agree is None:
            agree = len(set(values.values())) <= 1
        self.rows.append(ComparisonRow(label, values, agree))

    @property
    def mismatches(self) -> list[ComparisonRow]:
        return [row for row in self.rows if not row.agree]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "subject": self.subject,
            "methods": list(self.methods),
            "passed": self.passed,
            "rows": [{"label": row.label, "values": row.values, "agree": row.agree} for row in self.rows],
            "mismatches": [row.label for row in self.mismatches],
            "notes": list(self.notes),
            "timing": self.timing,
        }

    def render_text(self) -> str:
        lines = [f"verify {self.mode.value} [{self.subject}]"]
        if self.methods:
            lines.append(f"methods: {', '.join(self.methods)}")
        lines += [f"  {row}" for row in self.rows]
        lines += [f"  {note}" for note in self.notes]
        if self.timing:
            lines.append(f"time: {self.timing.get('total_seconds', 0):.3f}s over {self.timing.get('total_calls', 0)} calls")
        verdict = "PASS" if self.passed else f"FAIL ({len(self.mismatches)} mismatches)"
        lines.append(verdict)
        return "\n".join(lines)
