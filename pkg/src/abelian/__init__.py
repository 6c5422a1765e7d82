from abelian.group import (
    AbelianGroup,
    all_groups_of_order,
    all_groups_up_to,
    canonicalize,
    direct_product,
    embeds_in,
    p_part,
    rank,
)
from abelian.smith import fermat_group, quotient_by_cyclic
