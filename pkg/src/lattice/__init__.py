from lattice.lattice import (
    DegenerateLatticeError,
    Lattice,
    determinant,
    discriminant_group,
    scale,
    signature,
)
from lattice.sandwich import (
    DiagonalFamily,
    SandwichResult,
    finite_index_compatible,
    orbit_class_lattice_check,
    sandwich_feasible,
)
