from catalog.catalog import (
    CatalogEntry,
    DuValType,
    build_document,
    catalog_checksum,
    du_val_pi1ab,
    exceptional_entry,
    exceptional_six,
    is_cr1_group,
    is_cr2_group,
    k3_admissible,
    k3_subgroup_classes,
    load_catalog,
    maximal_k3_groups,
    nikulin_symplectic,
    symplectic_fixed_count,
)
from catalog.examples import EXCEPTIONAL_GROUPS, TABLE1, fermat_examples, table1_members
