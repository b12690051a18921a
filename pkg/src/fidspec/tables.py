"""Tabular sweep results shared by the model modules and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Table:
    """A rectangular result table with fixed column names.

    ``meta`` carries run diagnostics (iteration counts, comparator
    deviations, resolved parameters) that end up in metadata.json, never in
    the CSV body.
    """

    columns: list[str]
    rows: list[list[float]]
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        arity = len(self.columns)
        for k, row in enumerate(self.rows):
            if len(row) != arity:
                raise ValueError(
                    f"row {k} has {len(row)} entries, schema has {arity} columns"
                )

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> list[float]:
        j = self.columns.index(name)
        return [row[j] for row in self.rows]
