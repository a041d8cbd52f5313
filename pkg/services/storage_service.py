import csv
import json
import logging
import math
import sys
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterator, Optional, Sequence, TextIO

from api.models import OutputFormat
from config import get_settings

logger = logging.getLogger(__name__)


class StorageService:
    """Writes result tables as CSV or JSON, to a file or stdout."""

    def __init__(self, digits: Optional[int] = None):
        self.digits = digits or get_settings().csv_digits

    def _format_value(self, value: Any) -> Any:
        if isinstance(value, bool) or value is None:
            return value
        if isinstance(value, float):
            if not math.isfinite(value):
                return str(value)
            return format(value, f".{self.digits}g")
        return value

    @contextmanager
    def _open(self, path: Optional[str]) -> Iterator[TextIO]:
        if path is None or path == "-":
            yield sys.stdout
            return
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="") as f:
            yield f

    def _csv_cell(self, value: Any) -> str:
        value = self._format_value(value)
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        return str(value)

    def write_rows(
        self,
        rows: Sequence[dict],
        columns: Sequence[str],
        path: Optional[str] = None,
        fmt: OutputFormat = OutputFormat.CSV,
    ) -> None:
        with self._open(path) as f:
            if fmt is OutputFormat.CSV:
                writer = csv.DictWriter(f, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
                writer.writeheader()
                for row in rows:
                    writer.writerow({key: self._csv_cell(row.get(key)) for key in columns})
            else:
                payload = [
                    {key: self._json_value(row.get(key)) for key in columns}
                    for row in rows
                ]
                json.dump(payload, f, ensure_ascii=False, indent=2)
                f.write("\n")

        if path:
            logger.info(f"💾 Wrote {len(rows)} rows to {path}")

    def _json_value(self, value: Any) -> Any:
        # JSON keeps floats as numbers; non-finite ones become strings
        if isinstance(value, float) and not math.isfinite(value):
            return str(value)
        return value

    def save_metadata(self, path: str, command: str, arguments: dict, config: dict) -> Path:
        """Sidecar ``<path>.meta.json`` recording how a result file was produced."""
        sidecar = Path(f"{path}.meta.json")
        data = {
            "command": command,
            "arguments": arguments,
            "config": config,
            "created_at": datetime.now(timezone.utc).isoformat(),
            "versions": self._versions(),
        }
        try:
            sidecar.parent.mkdir(parents=True, exist_ok=True)
            with open(sidecar, "w", encoding="utf-8") as f:
                json.dump(data, f, ensure_ascii=False, indent=2, default=str)
        except OSError as e:
            logger.error(f"Error saving {sidecar}: {e}")
            raise
        return sidecar

    @staticmethod
    def _versions() -> dict:
        import numpy
        import scipy
        import pydantic

        return {
            "python": sys.version.split()[0],
            "numpy": numpy.__version__,
            "scipy": scipy.__version__,
            "pydantic": pydantic.VERSION,
        }

    def write_document(self, data: dict, path: Optional[str] = None) -> None:
        """A single JSON object, e.g. a comparison report."""
        with self._open(path) as f:
            json.dump(data, f, ensure_ascii=False, indent=2, default=str)
            f.write("\n")
        if path:
            logger.info(f"💾 Wrote report to {path}")
