from rr.basket import Basket, BasketPoint
from rr.enumeration import enumerate_baskets, half_point_baskets, point_types
from rr.fixtures import FixtureReport, validate_fixture
from rr.riemann_roch import (
    anticanonical_cube,
    c_q,
    genus_contribution,
    max_point_count,
    miyaoka_valid,
)
