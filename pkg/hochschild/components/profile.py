"""
Module for the dimension profile component
"""

from typing import Optional

import pandas as pd

from hochschild.algebra.koszul import profile_degrees


class ProfileComponent:
    """
    Class for one dimension profile, given in its serialized form
    {"<degree>": dim, ..., "total": n, "stabilized": bool}
    """

    def __init__(self, data: dict):
        degrees = profile_degrees(data)
        self.data = pd.DataFrame({"degree": list(degrees), "dimension": list(degrees.values())})
        self.total = data["total"]
        self.stabilized = data["stabilized"]
        self.truncation: Optional[int] = max(degrees) if degrees else None

    def render(self, title: str, nonzero_only: bool = False) -> str:
        frame = self.data[self.data["dimension"] > 0] if nonzero_only else self.data
        status = "stable" if self.stabilized else "not stable"
        footer = f"total {self.total}, {status}"
        if self.truncation is not None:
            footer += f" through degree {self.truncation}"
        rows = frame.T.to_string(header=False) if len(frame) else "(all zero)"
        return f"{title}\n{rows}\n{footer}"
