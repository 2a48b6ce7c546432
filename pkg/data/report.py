"""Reports of evaluated 3-folds: machine (JSON) and human (table) formats."""

import json
import logging
import os
from dataclasses import dataclass, field

from topology.flags import TriState
from topology.threefold import CharNumbers
from utils.constants import BANNER_WIDTH, REPORT_FIELDS, REPORT_SCHEMA_VERSION, TODD_DENOMINATOR
from utils.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Report:
    """Everything the CLI says about one emitted 3-fold."""

    numbers: CharNumbers
    todd: int
    spin: bool
    kahler_type: TriState
    simply_connected: TriState
    provenance: tuple = ()
    warnings: tuple = field(default=())

    @classmethod
    def from_threefold(cls, x):
        """Build a report; policy assumptions become warnings."""
        warnings = list(x.assumptions)
        todd = x.c1c2 // TODD_DENOMINATOR
        for warning in warnings:
            logger.warning(warning)
        return cls(
            numbers=x.numbers,
            todd=todd,
            spin=x.spin,
            kahler_type=x.kahler_type,
            simply_connected=x.simply_connected,
            provenance=tuple(x.provenance),
            warnings=tuple(warnings),
        )

    def to_dict(self):
        """Machine format; key order follows REPORT_FIELDS."""
        values = {
            "c1_cubed": self.numbers.c1_cubed,
            "c1c2": self.numbers.c1c2,
            "c3": self.numbers.c3,
            "todd": self.todd,
            "spin": self.spin,
            "kahler_type": str(self.kahler_type),
            "simply_connected": str(self.simply_connected),
            "provenance": list(self.provenance),
            "warnings": list(self.warnings),
        }
        data = {"schema_version": REPORT_SCHEMA_VERSION}
        data.update((name, values[name]) for name in REPORT_FIELDS)
        return data

    @classmethod
    def from_dict(cls, data):
        version = data.get("schema_version")
        if version != REPORT_SCHEMA_VERSION:
            raise DomainError(f"unsupported report schema_version {version!r}")
        missing = [name for name in REPORT_FIELDS if name not in data]
        if missing:
            raise DomainError(f"report is missing field(s) {', '.join(missing)}")
        return cls(
            numbers=CharNumbers(int(data["c1_cubed"]), int(data["c1c2"]), int(data["c3"])),
            todd=int(data["todd"]),
            spin=bool(data["spin"]),
            kahler_type=TriState.parse(data["kahler_type"]),
            simply_connected=TriState.parse(data["simply_connected"]),
            provenance=tuple(data["provenance"]),
            warnings=tuple(data["warnings"]),
        )

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def format_table(self, title="3-fold"):
        """Human-readable table framed by banners."""
        rows = [
            ("c1^3", self.numbers.c1_cubed),
            ("c1c2", self.numbers.c1c2),
            ("c3", self.numbers.c3),
            ("Todd genus", self.todd),
            ("spin", "yes" if self.spin else "no"),
            ("Kahler type", self.kahler_type),
            ("simply connected", self.simply_connected),
        ]
        lines = ["=" * BANNER_WIDTH, f"  {title}", "=" * BANNER_WIDTH]
        lines += [f"  {label:<18}{value}" for label, value in rows]
        lines.append("-" * BANNER_WIDTH)
        lines.append("  provenance:")
        lines += [f"    {i}. {step}" for i, step in enumerate(self.provenance, start=1)]
        if self.warnings:
            lines.append("  warnings:")
            lines += [f"    ! {warning}" for warning in self.warnings]
        lines.append("=" * BANNER_WIDTH)
        return "\n".join(lines)


def export_report(report, filepath):
    """Write a report's JSON to filepath, creating parent directories.

    Returns:
        Path to the written file
    """
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(filepath, "w") as f:
        f.write(report.to_json() + "\n")
    logger.debug("wrote report to %s", filepath)
    return filepath


def load_report(filepath):
    with open(filepath, "r") as f:
        return Report.from_dict(json.load(f))
