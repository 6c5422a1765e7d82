import json
import os
from dataclasses import dataclass, field

import pandas as pd

import config


@dataclass
class TargetResult:
    name: str
    rows: list
    diffs: list = field(default_factory=list)
    summary: str = ""

    @property
    def match(self):
        return not self.diffs

    def to_json(self):
        return {
            "target": self.name,
            "summary": self.summary,
            "match": self.match,
            "rows": self.rows,
            "diffs": self.diffs,
        }

    def to_frame(self):
        return pd.DataFrame(
            [{key: _cell(value) for key, value in row.items()} for row in self.rows]
        )


def _cell(value):
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return value


class Target:
    """A reproduced table: rows computed from the library, compared with a snapshot

    Subclasses set name and description and implement rows(). Each row is a
    dict of JSON values with a unique "key". Snapshot fields starting with "_"
    are annotations and are not compared.
    """

    name = None
    description = ""

    def rows(self):
        """Abstract method computing the rows of the table

        Raises
        ------
            NotImplementedError
                Raises a not implemented error if the abstract rows method is ran
        """
        raise NotImplementedError(
            "The rows method is not implemented for the generic target"
        )

    def summary(self, rows):
        return f"{len(rows)} rows"

    @property
    def expected_path(self):
        return os.path.join(config.EXPECTED_DIR, f"{self.name}.json")

    def load_expected(self):
        with open(self.expected_path, encoding="utf-8") as file:
            return json.load(file)

    def compare(self, rows, expected):
        """Row level differences between computed rows and the snapshot rows

        Returns
        -------
            diffs : list of dict
                One entry per missing row, unexpected row or differing field
        """
        computed = {row["key"]: row for row in rows}
        wanted = {row["key"]: row for row in expected["rows"]}
        diffs = []
        for key in wanted:
            if key not in computed:
                diffs.append({"key": key, "status": "missing"})
                continue
            for name, value in wanted[key].items():
                if name.startswith("_") or name == "key":
                    continue
                if computed[key].get(name) != value:
                    diffs.append(
                        {
                            "key": key,
                            "field": name,
                            "expected": value,
                            "computed": computed[key].get(name),
                        }
                    )
        for key in computed:
            if key not in wanted:
                diffs.append({"key": key, "status": "unexpected"})
        return diffs

    def bless(self, rows):
        """Rewrite the snapshot with the computed rows, keeping annotations"""
        annotations = {}
        if os.path.exists(self.expected_path):
            for row in self.load_expected()["rows"]:
                annotations[row["key"]] = {
                    name: value for name, value in row.items() if name.startswith("_")
                }
        document = {
            "target": self.name,
            "rows": [{**row, **annotations.get(row["key"], {})} for row in rows],
        }
        with open(self.expected_path, "w", encoding="utf-8", newline="\n") as file:
            file.write(json.dumps(document, sort_keys=True, indent=2) + "\n")

    def run(self, bless=False):
        rows = self.rows()
        if bless:
            self.bless(rows)
        diffs = self.compare(rows, self.load_expected())
        return TargetResult(self.name, rows, diffs, self.summary(rows))
