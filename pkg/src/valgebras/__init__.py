"""Nonassociative algebras classified by S3-invariant subspaces of Q[S3]
acting on the associator."""
from .algebra import (
    AssociatorTensor,
    StructureConstants,
    alternative_check,
    analyze,
    annihilator,
    associator,
    builtin,
    jacobi_check,
    power_assoc_check,
    satisfies,
    tensor,
)
from .classification import (
    VAlgebraType,
    all_types,
    classify_lie_admissible,
    classify_module,
    classify_power_associative,
    parse_label,
)
from .group_algebra import (
    BASIS,
    V,
    W,
    GroupAlgebraElement,
    IrrepMultiplicities,
    Permutation,
    act,
    apply,
    decompose,
    multiply,
    span_of_orbit,
)
from .linalg import Subspace
from .operads import (
    OperadDeg3Element,
    check_dual_table,
    decompose_dual,
    dual_relations,
    embed_associator,
    inner_product,
    orthogonal_complement,
    relabel,
)
from .vw import lie_admissible_witness, monoidal_identity_check, satisfies_star, satisfies_starstar

__version__ = "0.1.0"
