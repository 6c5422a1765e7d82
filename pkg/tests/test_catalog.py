import pytest

from abelian import AbelianGroup
from catalog import (
    EXCEPTIONAL_GROUPS,
    DuValType,
    build_document,
    catalog_checksum,
    du_val_pi1ab,
    exceptional_entry,
    exceptional_six,
    fermat_examples,
    is_cr1_group,
    is_cr2_group,
    k3_admissible,
    load_catalog,
    maximal_k3_groups,
    nikulin_symplectic,
    symplectic_fixed_count,
    table1_members,
)
from lattice import Lattice


def G(text):
    return AbelianGroup.parse(text)


@pytest.mark.parametrize("text, expected", [("7", True), ("2,2", True), ("3,3", False), ("1", True)])
def test_cr1(text, expected):
    assert is_cr1_group(G(text)) is expected


@pytest.mark.parametrize(
    "text, expected",
    [("6,12", True), ("3,3,3", True), ("4,4,4", False), ("2,2,10", True), ("2,4,4", True), ("2,2,2,2,2", False)],
)
def test_cr2(text, expected):
    assert is_cr2_group(G(text)) is expected


def test_nikulin_list():
    groups = nikulin_symplectic()
    assert len(groups) == 14
    assert G("8") in groups
    assert G("4,4") in groups
    assert G("2,2,2,2,2") not in groups


def test_maximal_k3_groups():
    groups = maximal_k3_groups()
    assert len(groups) == 20
    assert G("4,4,4") in groups
    assert G("60") in groups
    assert G("2,2,2,2,2,2") not in groups


def test_six_maximal_groups_are_not_plane_cremona_groups():
    outside = {g for g in maximal_k3_groups() if not is_cr2_group(g)}
    assert outside == {entry.group for entry in exceptional_six()}
    assert len(outside) == 6


def test_exceptional_entries():
    entry = exceptional_entry(G("2,4,8"))
    assert entry.symplectic_part == G("2,4")
    assert entry.nonsymplectic_order == 8
    entry = exceptional_entry(G("4,4,4"))
    assert entry.invariant_rank_range == (1, 1)
    assert entry.gram_options == (Lattice([[4]]),)
    assert exceptional_entry(G("3,3,6")).gram_options == (Lattice([[0, 3], [3, 0]]),)
    with pytest.raises(ValueError):
        exceptional_entry(G("60"))


def test_symplectic_parts_are_nikulin_groups():
    for entry in exceptional_six():
        assert entry.symplectic_part in nikulin_symplectic() or entry.symplectic_part == G(
            "2,2,2,2,2"
        )
        assert entry.symplectic_part.embeds_in(entry.group)


def test_only_the_elementary_entry_breaks_the_order_split():
    broken = [entry.group for entry in exceptional_six() if not entry.splits_as_product]
    assert broken == [G("2,2,2,2,2")]


def test_appendix_sizes():
    assert len(exceptional_entry(G("2,2,2,4")).gram_options) == 10
    assert len(exceptional_entry(G("2,2,2,2,2")).gram_options) == 14


@pytest.mark.parametrize("order, count", [(2, 8), (5, 4), (8, 2)])
def test_symplectic_fixed_count(order, count):
    assert symplectic_fixed_count(order) == count


def test_symplectic_fixed_count_rejects_other_orders():
    with pytest.raises(ValueError):
        symplectic_fixed_count(9)


@pytest.mark.parametrize("text, expected", [("A3", "4"), ("D4", "2,2"), ("D5", "4"), ("E8", "1"), ("E6", "3")])
def test_du_val_pi1ab(text, expected):
    assert du_val_pi1ab(DuValType.parse(text)) == G(expected)


DU_VAL_CASES = {
    "A_n": ["A1", "A2", "A7", "A11"],
    "D_n, n even": ["D4", "D6", "D10"],
    "D_n, n odd": ["D5", "D7", "D9"],
    "E_6": ["E6"],
    "E_7": ["E7"],
    "E_8": ["E8"],
}


def test_exported_du_val_rows_match_pi1ab():
    rows = load_catalog()["du_val"]
    assert [row["case"] for row in rows] == list(DU_VAL_CASES)
    for row in rows:
        for text in DU_VAL_CASES[row["case"]]:
            t = DuValType.parse(text)
            expected = str(t.n + 1) if row["pi1ab"] == "Z/(n+1)" else row["pi1ab"]
            assert du_val_pi1ab(t) == G(expected), (row["case"], text)


def test_du_val_type_validation():
    assert DuValType.parse("A_5").curve_count == 5
    with pytest.raises(ValueError):
        DuValType("D", 3)
    with pytest.raises(ValueError):
        DuValType("E", 9)


@pytest.mark.parametrize("text, expected", [("2,4", True), ("2,2,2,2,2,2", False), ("60", True)])
def test_k3_admissible(text, expected):
    assert k3_admissible(G(text)) is expected


def test_catalog_file_matches_tables():
    assert load_catalog() == build_document()


def test_catalog_checksum_is_stable():
    checksum = catalog_checksum()
    assert len(checksum) == 64
    assert checksum == catalog_checksum(load_catalog())


@pytest.mark.parametrize("example", fermat_examples(), ids=lambda e: e.label)
def test_fermat_examples(example):
    assert example.group() == G(example.expected)


def test_fermat_printed_discrepancy():
    flagged = [e for e in fermat_examples() if e.printed]
    assert [e.label for e in flagged] == ["k3-dodecic-2334"]
    assert G(flagged[0].printed).order == 48
    assert flagged[0].group().order == 24


def test_table1_members():
    members = table1_members()
    assert len(members) == 27 + 3 + 3 + 9 + 3 + 1 + 1 + 4
    assert [g for row, _, _, g in members if row > 7] == EXCEPTIONAL_GROUPS
