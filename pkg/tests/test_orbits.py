import pytest

from abelian import AbelianGroup
from catalog import DuValType
from orbits import (
    PointClass,
    PointConfiguration,
    admissible_groupings,
    constrained_groups,
    coprime_filter,
    cyclic_du_val_type,
    enumerate_groupings,
    filter_basket_table,
    half_point_table,
    minimal_du_val_type,
    orbit_constraints,
    picard_bound_feasible,
    possible_groups,
    stabilizer_splits,
    terminal_endgame,
)
from rr import Basket, BasketPoint
from rr.fixtures import TABLE6, TABLE10, TABLE11

G842 = AbelianGroup.parse("2,4,8")
G633 = AbelianGroup.parse("3,3,6")
G4222 = AbelianGroup.parse("2,2,2,4")
G22222 = AbelianGroup.parse("2,2,2,2,2")


def G(text):
    return AbelianGroup.parse(text)


def basket(*points):
    return Basket(BasketPoint(r, b, n) for r, b, n in points)


def test_orbit_constraints():
    assert orbit_constraints(G22222).count_divisor == 8
    assert orbit_constraints(G("4,4,4")).forbid_singular
    constraints = orbit_constraints(G633)
    assert constraints.single_class
    assert constraints.admits_counts([9])
    assert not constraints.admits_counts([9, 3])
    assert not constraints.admits_counts([81])
    with pytest.raises(ValueError):
        orbit_constraints(G("60"))
    assert len(constrained_groups()) == 6


@pytest.mark.parametrize(
    "h, r, total, expected",
    [
        (G842, 4, 6, []),
        (G633, 2, 9, [(9, 1)]),
        (G22222, 3, 12, []),
        (G4222, 3, 4, [(4, 1)]),
    ],
)
def test_admissible_groupings(h, r, total, expected):
    assert admissible_groupings(h, r, total) == expected


@pytest.mark.parametrize("counts, expected", [((9,), True), ((4, 6), True), ((5, 7), False)])
def test_coprime_filter(counts, expected):
    configuration = PointConfiguration(tuple(PointClass(k, (((2, 1), 1),)) for k in counts))
    assert coprime_filter(configuration) is expected


def test_enumerate_groupings():
    groupings = enumerate_groupings(basket((3, 1, 4)))
    assert len(groupings) == 5
    cyclic = enumerate_groupings(basket((3, 1, 4)), "cyclic")
    assert [str(c) for c in cyclic] == ["4 x 1/3(1,-1,1)"]
    with pytest.raises(ValueError):
        enumerate_groupings(basket((3, 1, 4)), "orbifold")


def test_enumerate_groupings_forms_cax4_points():
    groupings = enumerate_groupings(basket((2, 1, 2), (4, 1, 2)))
    labels = {str(c) for c in groupings}
    assert "2 x cAx/4" in labels
    assert any(c.has_non_cyclic for c in groupings)
    assert all(c.is_all_cyclic for c in enumerate_groupings(basket((2, 1, 2), (4, 1, 2)), "cyclic"))


@pytest.mark.parametrize("r, expected", [(2, "A1"), (3, "A2"), (4, "A3")])
def test_cyclic_du_val_type(r, expected):
    assert cyclic_du_val_type(r) == DuValType.parse(expected)


def test_minimal_du_val_type_of_non_cyclic_point():
    point_class = PointClass(2, (((4, 1), 3),))
    assert minimal_du_val_type(point_class) == DuValType("A", 7)
    with pytest.raises(ValueError):
        cyclic_du_val_type(1)


def test_picard_bound():
    assert not picard_bound_feasible([DuValType("A", 5)] * 4)
    assert picard_bound_feasible([DuValType("A", 1)] * 16)
    assert picard_bound_feasible([])


def test_stabilizer_splits():
    assert stabilizer_splits(G4222, 4) == sorted(
        [
            (G("2,2,2"), G("4")),
            (G("2,4"), G("2,2")),
            (G("2,2,2"), G("2,2")),
        ]
    )
    assert stabilizer_splits(G22222, 8) == [(G("2,2"), G("2,2,2"))]
    assert stabilizer_splits(G842, 1) == [(G842, AbelianGroup.trivial())]
    with pytest.raises(ValueError):
        stabilizer_splits(G842, 3)


def test_filter_basket_table():
    kept = filter_basket_table(
        G4222,
        [basket((2, 1, 4), (3, 1, 4)), basket((2, 1, 9))],
    )
    assert [b for b, _ in kept] == [basket((2, 1, 4), (3, 1, 4))]
    assert filter_basket_table(G22222, [basket((3, 1, 8))])
    assert not filter_basket_table(G842, [basket((2, 1, 9))])
    with pytest.raises(ValueError):
        filter_basket_table(G842, [], mode="orbifold")


def _names(groups):
    return sorted(str(g) for g in groups)


@pytest.mark.parametrize("row", TABLE6, ids=lambda row: row.label)
def test_table6_groups(row):
    assert _names(possible_groups(row.basket)) == sorted(row.groups)


@pytest.mark.parametrize("row", TABLE10, ids=lambda row: row.label)
def test_table10_groups(row):
    assert _names(possible_groups(row.basket, "cyclic")) == sorted(row.groups)


@pytest.mark.parametrize("row", TABLE11, ids=lambda row: row.label)
def test_table11_groups_contain_printed_ones(row):
    computed = _names(possible_groups(row.basket, non_cyclic_only=True))
    assert set(row.groups) <= set(computed)


def test_table11_extra_group():
    row = next(r for r in TABLE11 if r.note == "4 x cAx/4")
    assert _names(possible_groups(row.basket, non_cyclic_only=True)) == ["2,2,2,4", "2,4,8"]


@pytest.mark.parametrize("row", TABLE11, ids=lambda row: row.label)
def test_terminal_endgame_leaves_nothing(row):
    for h in possible_groups(row.basket, non_cyclic_only=True):
        assert terminal_endgame(h, row.basket) == []


def test_half_point_table():
    groups = {row.n: _names(row.groups) for row in half_point_table()}
    assert groups == {
        9: ["3,3,6"],
        10: ["2,4,8"],
        11: [],
        12: ["2,2,2,4", "2,4,8", "3,3,6"],
        13: [],
        14: ["2,4,8"],
        15: ["3,3,6"],
    }
    cubes = [row.cube for row in half_point_table()]
    assert cubes == sorted(cubes)
