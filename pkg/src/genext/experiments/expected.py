"""
Loader for the bundled expected-table files.

Each ``tableN.json`` carries a provenance string and one entry per printed
cell. Values are ascending coefficient lists; the order table stores integers,
and cells the source left blank are flagged ``uncomputed``.
"""

import json
import logging
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError, model_validator

from ..config import EXPECTED_DIR
from ..exceptions import ExpectedDataError

logger = logging.getLogger(__name__)

TABLE_IDS = (1, 2, 3, 4, 5)

type CellKey = tuple[int, tuple[int, ...]]


class ExpectedCell(BaseModel):
    """One printed cell; Table 3 rows give n - d instead of n."""

    n: int | None = None
    n_minus_d: int | None = None
    d: list[int] = Field(min_length=1)
    value: list[int] | int | None = None
    uncomputed: bool = False

    @model_validator(mode="after")
    def _resolve_n(self) -> "ExpectedCell":
        if self.n is None:
            if self.n_minus_d is None:
                raise ValueError("cell needs n or n_minus_d")
            self.n = self.n_minus_d + self.d[0]
        if not self.uncomputed and self.value is None:
            raise ValueError(f"cell n={self.n}, d={self.d} has no value")
        return self

    @property
    def key(self) -> CellKey:
        if self.n is None:
            raise ExpectedDataError(f"cell d={self.d} has no resolved n")
        return self.n, tuple(self.d)


class ExpectedTable(BaseModel):
    table: int
    provenance: str
    cells: list[ExpectedCell]
    cubic_constants: dict[int, tuple[int, int]] = Field(default_factory=dict)

    def by_key(self) -> dict[CellKey, ExpectedCell]:
        return {cell.key: cell for cell in self.cells}


def load_expected(table_id: int, directory: Path = EXPECTED_DIR) -> ExpectedTable:
    """
    Load one bundled table.

    Args:
        table_id: 1..5
        directory: Folder holding ``tableN.json``

    Returns:
        Parsed table

    Raises:
        ExpectedDataError: If the file is missing or malformed
    """
    if table_id not in TABLE_IDS:
        raise ExpectedDataError(f"unknown table id {table_id}")
    path = Path(directory) / f"table{table_id}.json"
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
        table = ExpectedTable.model_validate(raw)
    except FileNotFoundError as e:
        raise ExpectedDataError(f"expected data file not found: {path}") from e
    except (json.JSONDecodeError, ValidationError) as e:
        raise ExpectedDataError(f"malformed expected data in {path}: {e}") from e
    if table.table != table_id:
        raise ExpectedDataError(f"{path} declares table {table.table}, expected {table_id}")
    keys = [cell.key for cell in table.cells]
    if len(keys) != len(set(keys)):
        raise ExpectedDataError(f"{path} lists a cell twice")
    logger.debug("ℹ️ Loaded %s cells of table %s from %s", len(keys), table_id, path)
    return table


def load_cubic_constants(directory: Path = EXPECTED_DIR) -> dict[int, tuple[int, int]]:
    """(c1, c2) per n ≡ 1 (mod 4), read from the cubic table."""
    return load_expected(4, directory).cubic_constants
