"""
Table emission for the survey commands.

Rows are pydantic models whose fields are the catalog columns of their
command. They are assembled into a pandas DataFrame in catalog column
order and written as CSV (LF line endings, floats at the configured
significant digits, summary as trailing '# key: value' lines) or as JSON.
"""

from dataclasses import dataclass, field
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel

from polya_groups.config import get_app_config
from polya_groups.types import Commands

logger = logging.getLogger(__name__)


@dataclass
class Table:
    """Rows of one command plus its summary block."""

    command: str
    rows: Sequence[BaseModel]
    summary: Dict[str, Any] = field(default_factory=dict)

    @property
    def columns(self) -> List[str]:
        return Commands.columns(self.command)

    def records(self) -> List[Dict[str, Any]]:
        columns = self.columns
        records = [row.model_dump() for row in self.rows]
        for record in records:
            if set(record) != set(columns):
                raise ValueError(
                    f"{self.command} row fields {sorted(record)} do not match "
                    f"the documented columns {columns}"
                )
        return records

    def to_frame(self) -> pd.DataFrame:
        """Raw values, object dtype so None and big integers survive."""
        return pd.DataFrame(self.records(), columns=self.columns, dtype=object)


def format_cell(value: Any, float_digits: int) -> str:
    """
    CSV text of one cell.

    Example:
        >>> format_cell(2 / 3, 12), format_cell(None, 12), format_cell(True, 12)
        ('0.666666666667', '', '1')
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return f"{value:.{float_digits}g}"
    return str(value)


def round_floats(value: Any, float_digits: int) -> Any:
    """Floats (also inside lists and dicts) cut to float_digits significant digits."""
    if isinstance(value, float):
        return float(f"{value:.{float_digits}g}")
    if isinstance(value, dict):
        return {k: round_floats(v, float_digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(v, float_digits) for v in value]
    return value


def _summary_value(value: Any, float_digits: int) -> str:
    return json.dumps(round_floats(value, float_digits), default=str)


def to_csv(table: Table, float_digits: Optional[int] = None) -> str:
    """
    CSV text with a trailing summary block.

    The summary lines start with '#', so pd.read_csv(..., comment='#')
    reads the rows back.
    """
    digits = float_digits or get_app_config().float_digits
    frame = table.to_frame().map(lambda v: format_cell(v, digits))
    text = frame.to_csv(index=False, lineterminator="\n")
    lines = [f"# {key}: {_summary_value(value, digits)}\n" for key, value in table.summary.items()]
    return text + "".join(lines)


def to_json(table: Table, float_digits: Optional[int] = None) -> str:
    """{"command", "columns", "rows", "summary"} as indented JSON, floats as in CSV."""
    digits = float_digits or get_app_config().float_digits
    payload = {
        "command": table.command,
        "columns": table.columns,
        "rows": round_floats(table.to_frame().to_dict(orient="records"), digits),
        "summary": round_floats(table.summary, digits),
    }
    return json.dumps(payload, indent=2, default=str) + "\n"


def render(table: Table, fmt: str = "csv", float_digits: Optional[int] = None) -> str:
    if fmt == "json":
        return to_json(table, float_digits)
    return to_csv(table, float_digits)


def write_table(table: Table, fmt: str = "csv", out: Optional[str] = None,
                float_digits: Optional[int] = None) -> str:
    """
    Render the table and write it to `out` (parents created) when given.

    Returns:
        The rendered text
    """
    text = render(table, fmt, float_digits)
    if out is not None:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"Wrote {len(table.rows)} {table.command} rows to {path}")
    return text
