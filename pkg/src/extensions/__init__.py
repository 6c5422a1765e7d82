from extensions.classification import (
    Classification,
    Verdict,
    classify_group,
    h0geq2_classification,
    lemma_g_splits_table,
    non_product_maxima,
)
from extensions.k3_type import K3TypeResult, is_k3_type
from extensions.product_type import (
    in_product_families,
    is_product_type,
    is_product_type_by_decomposition,
    product_decompositions,
)
