from itertools import product

import numpy as np
import pytest

import config
from abelian import (
    AbelianGroup,
    all_groups_of_order,
    all_groups_up_to,
    canonicalize,
    direct_product,
    embeds_in,
    fermat_group,
    p_part,
    quotient_by_cyclic,
    rank,
)
from abelian.oracle import (
    GroupModel,
    OrderBoundError,
    brute_force_subgroup_quotient_oracle,
    subgroup_quotient_pairs,
)
from abelian.smith import element_order, group_from_relations
from partitions import Partition
from orbits import stabilizer_splits
from partitions.exact_sequences import extension_exists


def G(text):
    return AbelianGroup.parse(text)


def test_canonicalize():
    assert canonicalize([4, 4, 4, 4]).prime_parts == {2: Partition([2, 2, 2, 2])}
    assert canonicalize([2, 6]).prime_parts == {2: Partition([1, 1]), 3: Partition([1])}
    assert canonicalize([12, 6]).invariant_factors == [6, 12]
    assert canonicalize([1, 1]) == AbelianGroup.trivial()


@pytest.mark.parametrize("factors", [[0], [-2, 4]])
def test_canonicalize_rejects_non_positive(factors):
    with pytest.raises(ValueError):
        canonicalize(factors)


def test_prime_parts_must_be_prime():
    with pytest.raises(ValueError):
        AbelianGroup({4: [1]})


def test_parse_and_print():
    assert str(G("8,2,4")) == "2,4,8"
    assert str(G("1")) == "1"
    assert G("2,4,4,8").pretty() == "Z/8 x (Z/4)^2 x Z/2"
    with pytest.raises(ValueError):
        G("2,x")
    with pytest.raises(ValueError):
        G("")


def test_p_part():
    g = G("6,12")
    assert p_part(g, 2) == G("2,4")
    assert p_part(g, 3) == G("3,3")
    assert p_part(g, 5) == AbelianGroup.trivial()
    with pytest.raises(ValueError):
        p_part(g, 4)


@pytest.mark.parametrize(
    "text, expected", [("2,2,2,2,2,2", 6), ("2,4,8", 3), ("3,3,6", 3), ("1", 0), ("60", 1)]
)
def test_rank(text, expected):
    assert rank(G(text)) == expected


def test_direct_product():
    assert direct_product(G("4"), G("2,2")) == G("2,2,4")
    assert direct_product(AbelianGroup.trivial(), G("2,6")) == G("2,6")
    assert direct_product(G("6"), G("6")).prime_parts == {
        2: Partition([1, 1]),
        3: Partition([1, 1]),
    }
    assert G("4").power(3) == G("4,4,4")


@pytest.mark.parametrize(
    "small, large, expected",
    [
        ("2,2", "4", False),
        ("4", "2,2", False),
        ("6,12", "6,12", True),
        ("2,4", "2,4,8", True),
        ("8", "4,4,4", False),
    ],
)
def test_embeds_in(small, large, expected):
    assert embeds_in(G(small), G(large)) is expected


def test_all_groups_of_order():
    assert all_groups_of_order(16) == sorted(
        G(text) for text in ["16", "2,8", "4,4", "2,2,4", "2,2,2,2"]
    )
    assert len(all_groups_of_order(72)) == 6
    assert all_groups_up_to(4) == [G("1"), G("2"), G("3"), G("4"), G("2,2")]


def test_subgroup_classes():
    assert G("4").subgroup_classes() == [G("1"), G("2"), G("4")]
    assert G("2,4") in G("2,4,8").subgroup_classes()
    assert G("8") in G("2,4,8").subgroup_classes()


def test_group_from_relations():
    assert group_from_relations([[4, 0], [0, 6]]) == G("2,12")
    assert group_from_relations([[2, 4], [6, 8]]) == G("2,4")


@pytest.mark.parametrize(
    "moduli, expected",
    [
        ([4] * 5, "4,4,4,4"),
        ([6, 6, 6, 6, 2], "2,6,6,6"),
        ([8, 8, 8, 4, 2], "2,4,8,8"),
    ],
)
def test_quotient_by_all_ones(moduli, expected):
    assert quotient_by_cyclic(moduli, [1] * len(moduli)) == G(expected)


def test_quotient_by_cyclic_rejects_bad_elements():
    with pytest.raises(ValueError):
        quotient_by_cyclic([4, 4], [1])
    with pytest.raises(ValueError):
        quotient_by_cyclic([4, 4], [1, 4])


@pytest.mark.parametrize(
    "weights, degree, expected",
    [
        ([(1, 4)], 4, "4,4,4"),
        ([(1, 3), (3, 1)], 6, "2,6,6"),
        ([(1, 7)], 2, "2,2,2,2,2,2"),
    ],
)
def test_fermat_group(weights, degree, expected):
    assert fermat_group(weights, degree) == G(expected)


def test_fermat_group_needs_dividing_weights():
    with pytest.raises(ValueError):
        fermat_group([(1, 3), (5, 1)], 6)


def test_group_model():
    model = GroupModel(G("2,4"))
    assert model.size == 8
    assert sorted(model.orders.tolist()) == [1, 2, 2, 2, 4, 4, 4, 4]
    assert len(model.subgroups()) == 8
    with pytest.raises(OrderBoundError):
        GroupModel(G("2,4"), max_order=4)


@pytest.mark.parametrize(
    "g, sub, exists, quotients",
    [
        ("4", "2", True, {"2"}),
        ("2,2", "2", True, {"2"}),
        ("2,8", "4", True, {"4", "2,2"}),
        ("8", "2,2", False, set()),
        ("9", "2", False, set()),
    ],
)
def test_brute_force_oracle(g, sub, exists, quotients):
    found, classes = brute_force_subgroup_quotient_oracle(G(g), G(sub))
    assert found is exists
    assert classes == {G(q) for q in quotients}


def test_brute_force_oracle_respects_the_bound():
    with pytest.raises(OrderBoundError):
        brute_force_subgroup_quotient_oracle(G("2,2,2,2,2,2,2,2"), G("2"))


def test_order_bound_is_read_when_called(monkeypatch):
    monkeypatch.setattr(config, "MAX_ORACLE_ORDER", 16)
    with pytest.raises(OrderBoundError):
        brute_force_subgroup_quotient_oracle(G("2,2,2,2,2"), G("2"))
    with pytest.raises(OrderBoundError):
        subgroup_quotient_pairs(G("2,16"))
    with pytest.raises(OrderBoundError):
        stabilizer_splits(G("2,4,8"), 4)
    assert GroupModel(G("2,2,2,2,2"), max_order=32).size == 32
    monkeypatch.setattr(config, "MAX_ORACLE_ORDER", 256)
    assert GroupModel(G("2,2,4,4,4")).size == 256


def _prime_power_groups(p, bound):
    groups = []
    order = p
    while order <= bound:
        groups.extend(all_groups_of_order(order))
        order *= p
    return groups


@pytest.mark.slow
@pytest.mark.parametrize("p", [2, 3])
def test_littlewood_richardson_criterion_matches_subgroup_search(p):
    groups = _prime_power_groups(p, config.EMBEDDING_TEST_ORDER)
    for total in groups:
        pairs = subgroup_quotient_pairs(total)
        for sub in [AbelianGroup.trivial()] + groups:
            for quot in [AbelianGroup.trivial()] + groups:
                if sub.order * quot.order != total.order:
                    continue
                assert extension_exists(sub, quot, total) == ((sub, quot) in pairs), (
                    sub,
                    quot,
                    total,
                )


@pytest.mark.slow
def test_embeds_in_matches_subgroup_search():
    groups = all_groups_up_to(config.EMBEDDING_TEST_ORDER)
    for g in groups:
        found = {sub for sub, _ in subgroup_quotient_pairs(g)}
        assert found == set(g.subgroup_classes()), g
        for h in groups:
            assert h.embeds_in(g) == (h in found)


@pytest.mark.slow
def test_extension_criterion_spot_checks_on_mixed_orders():
    rng = np.random.default_rng(config.SEED)
    candidates = [g for g in all_groups_up_to(72) if len(g.primes) > 1]
    for index in rng.choice(len(candidates), size=12, replace=False):
        total = candidates[index]
        pairs = subgroup_quotient_pairs(total)
        for d in range(1, total.order + 1):
            if total.order % d:
                continue
            for sub in all_groups_of_order(d):
                for quot in all_groups_of_order(total.order // d):
                    assert extension_exists(sub, quot, total) == ((sub, quot) in pairs), (
                        sub,
                        quot,
                        total,
                    )


@pytest.mark.slow
def test_prime_parts_and_invariant_factors_agree():
    for g in all_groups_up_to(512):
        factors = g.invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert AbelianGroup.from_factors(factors) == g
        assert AbelianGroup(g.prime_parts) == g
        assert AbelianGroup.parse(str(g)) == g


def _rank_of_product(a, b):
    primes = set(a.primes) | set(b.primes)
    return max((a.type_at(p).length + b.type_at(p).length for p in primes), default=0)


@pytest.mark.slow
def test_direct_product_laws():
    groups = all_groups_up_to(256)
    small = [g for g in groups if g.order <= 16]
    for a in groups:
        for b in groups:
            if a.order * b.order > 256:
                break
            ab = direct_product(a, b)
            assert ab == direct_product(b, a)
            assert ab.order == a.order * b.order
            assert rank(ab) == _rank_of_product(a, b)
            for c in small:
                if ab.order * c.order > 256:
                    break
                assert direct_product(ab, c) == direct_product(a, direct_product(b, c))


@pytest.mark.slow
def test_quotient_by_cyclic_times_element_order():
    for g in all_groups_up_to(48):
        moduli = g.invariant_factors
        for element in product(*(range(n) for n in moduli)):
            quotient = quotient_by_cyclic(moduli, element)
            assert quotient.order * element_order(moduli, element) == g.order
