"""
Machine-readable output for every command.

JSON carries the whole envelope; CSV carries only the rows. Integers are
emitted as decimal strings and rationals as num/den pairs, so nothing exact
ever passes through a float.
"""
import csv
import io
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..utils.helpers import stringify_exact

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class OutputEnvelope(BaseModel):
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    result: Dict[str, Any] = Field(default_factory=dict)
    columns: Optional[List[str]] = None
    rows: Optional[List[Dict[str, Any]]] = None
    exit_code: int = Field(default=EXIT_OK, exclude=True)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "parameters": stringify_exact(self.parameters),
            "result": stringify_exact(self.result),
        }
        if self.rows is not None:
            payload["rows"] = stringify_exact(self.rows)
        return EnvelopeJson.model_validate(payload).model_dump_json(indent=2, exclude_none=True)

    def to_csv(self) -> str:
        columns = self.columns or sorted({key for row in self.rows or [] for key in row})
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in self.rows or []:
            writer.writerow([_csv_cell(row.get(column)) for column in columns])
        return buffer.getvalue()

    def render(self, fmt: str = "json") -> str:
        if fmt == "csv":
            return self.to_csv()
        return self.to_json()


class EnvelopeJson(BaseModel):
    command: str
    parameters: Dict[str, Any]
    result: Dict[str, Any]
    rows: Optional[List[Dict[str, Any]]] = None


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)
