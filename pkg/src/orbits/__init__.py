from orbits.constraints import OrbitConstraints, constrained_groups, orbit_constraints
from orbits.du_val import cyclic_du_val_type, minimal_du_val_type, picard_bound_feasible
from orbits.filters import (
    admissible_groupings,
    filter_basket_table,
    half_point_table,
    possible_groups,
    terminal_endgame,
)
from orbits.groupings import (
    PointClass,
    PointConfiguration,
    coprime_filter,
    enumerate_groupings,
)
from orbits.stabilizers import stabilizer_splits
