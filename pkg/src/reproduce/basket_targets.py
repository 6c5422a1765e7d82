import config
from rr import Basket, BasketPoint, enumerate_baskets, validate_fixture
from rr.fixtures import HIGHER_INDEX, TABLE6, TABLE10, TABLE10_ARGUMENTS, TABLE11
from orbits import half_point_table, possible_groups, terminal_endgame
from abelian import AbelianGroup
from reproduce.target import Target


def _names(groups):
    return sorted(str(g) for g in groups)


class BasketTable(Target):
    """Groups allowed by each printed basket under one grouping mode"""

    fixtures = ()
    mode = "any"
    non_cyclic_only = False

    def row(self, fixture):
        groups = possible_groups(fixture.basket, self.mode, self.non_cyclic_only)
        return {"key": fixture.label, "groups": _names(groups)}

    def rows(self):
        return [self.row(fixture) for fixture in self.fixtures]


class Table6(BasketTable):
    name = "table6"
    description = "Baskets with h0 = 1 allowing one of the six groups"
    fixtures = TABLE6

    def row(self, fixture):
        row = super().row(fixture)
        row["enumerated"] = fixture.basket in self.enumerated
        return row

    def rows(self):
        self.enumerated = set(enumerate_baskets(progress=config.PROGRESS))
        return super().rows()


class Table10(BasketTable):
    name = "table10"
    description = "Groups left when every point of the basket is a cyclic quotient point"
    fixtures = TABLE10
    mode = "cyclic"

    def row(self, fixture):
        row = super().row(fixture)
        row["arguments"] = [TABLE10_ARGUMENTS[g] for g in row["groups"]]
        return row


class Table11(BasketTable):
    name = "table11"
    description = "Baskets allowing a non-cyclic point, and the endgame survivors"
    fixtures = TABLE11
    non_cyclic_only = True

    def row(self, fixture):
        row = super().row(fixture)
        row["endgame_survivors"] = sum(
            len(terminal_endgame(AbelianGroup.parse(g), fixture.basket))
            for g in row["groups"]
        )
        return row

    def summary(self, rows):
        return f"{sum(row['endgame_survivors'] for row in rows)} endgame survivors"


class HigherIndex(Target):
    name = "fixtures"
    description = "Printed baskets of Fano index 2, 3 and 4 against the Miyaoka bound"

    def rows(self):
        return [
            {
                "key": fixture.label,
                "fano_index": fixture.fano_index,
                "valid": validate_fixture(fixture).valid,
            }
            for fixture in HIGHER_INDEX
        ]


class HalfPoints(Target):
    name = "prop8_1"
    description = "Baskets of N half points with h0 = 1"

    def rows(self):
        enumerated = set(enumerate_baskets(progress=config.PROGRESS))
        rows = []
        for row in half_point_table(range(8, 17)):
            valid = row.cube > 0 and row.miyaoka_sum < config.MIYAOKA_BOUND
            basket_in = Basket([BasketPoint(2, 1, row.n)]) in enumerated
            rows.append(
                {
                    "key": str(row.n),
                    "cube": str(row.cube),
                    "miyaoka_sum": str(row.miyaoka_sum),
                    "valid": valid,
                    "enumerated": basket_in,
                    "groups": _names(row.groups) if valid else [],
                }
            )
        return rows
