"""
Module for the JSON report component
"""

import json

from hochschild.models import Report


class JsonComponent:
    """
    Class for the JSON report:
    {"subcommand", "config", "results": [{"name", "anchor", "status", "expected", "computed"}]}
    """

    def __init__(self, data: Report):
        self.data = data

    def render(self, indent: int = 2) -> str:
        payload = {
            "subcommand": self.data.subcommand,
            "config": self.data.config.model_dump(mode="json"),
            "results": [
                {
                    "name": r.name,
                    "anchor": r.anchor,
                    "status": r.status,
                    "expected": r.expected,
                    "computed": r.computed,
                    **({"detail": r.detail} if r.detail else {}),
                }
                for r in self.data.results
            ],
        }
        return json.dumps(payload, indent=indent)
