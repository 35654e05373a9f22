"""Self-dual codes from dual-containing BCH codes via the (u | lam u + v) construction."""
from .cosets import (
    DefiningSet,
    all_cosets,
    bch_bound,
    cyclotomic_coset,
    gcd_identities,
    has_self_paired_residue,
    is_dual_containing_defining_set,
    negate_set,
)
from .cyclic import (
    ConstructionError,
    CyclicCode,
    construct_dual_containing_bch,
    dual_code,
    encode,
    from_defining_set,
    generator_matrix,
    is_dual_containing,
)
from .distance import (
    BudgetExceeded,
    WeightEnumerator,
    extremal_upper_bound,
    macwilliams_transform,
    min_distance,
    weight_enumerator,
    weight_enumerator_exhaustive,
)
from .gf import GF, FieldElement, SubfieldEmbedding, field_new, field_of_order
from .polyring import Poly, minimal_polynomial, poly_gcd, reciprocal_normalized
from .selfdual import (
    LinearCode,
    certify_by_witness,
    certify_distance,
    family,
    find_lambda,
    is_self_dual,
    repeated_root_equivalence,
    rs_dual_containing,
    search_dual_containing,
    u_lambda_u_v,
)

__version__ = "0.1.0"
