"""
Module for the table component used in text output
"""

import pandas as pd

from hochschild.algebra.koszul import is_profile_dict
from hochschild.models import CheckResult


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return ", ".join(str(v) for v in value)
    if is_profile_dict(value):
        return f"total {value['total']}" + ("" if value["stabilized"] else " (not stable)")
    return str(value)


class TableComponent:
    """
    Class for the results table
    """

    COLUMNS = ["name", "status", "computed", "expected", "anchor"]

    def __init__(self, data: list[CheckResult]):
        self.data = pd.DataFrame(
            [{**r.model_dump(), "computed": _cell(r.computed), "expected": _cell(r.expected)} for r in data],
            columns=self.COLUMNS + ["detail"],
        )

    def render(self, title: str, checklist: bool = True) -> str:
        """
        Method to render the table as text

        Outside a checklist the rows are plain results: no status, no expected
        values. Columns without content are dropped.
        """
        columns = list(self.COLUMNS)
        if not checklist:
            columns.remove("status")
        if not checklist or not self.data["expected"].astype(bool).any():
            columns.remove("expected")
        if self.data["detail"].notna().any():
            columns.append("detail")
        frame = self.data[columns].fillna("")
        body = frame.to_string(index=False, justify="left", max_colwidth=80) if len(frame) else "(no results)"
        return f"{title}\n{body}"
