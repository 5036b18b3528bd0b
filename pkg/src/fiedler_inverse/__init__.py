"""Forward and inverse Fiedler-vector problems on weighted trees and cycles."""

from .classify import (
    CompleteVerdict,
    CycleVerdict,
    TreeVerdict,
    classify_complete_vector,
    classify_cycle_vector,
    classify_tree_vector,
    cyclic_interval,
)
from .cycle_inverse import CycleInverseResult, cycle_inverse, feasible_h_interval
from .graphs import (
    Branch,
    Cycle,
    Tree,
    WeightAssignment,
    branches_at,
    dirichlet_incidence,
    path_matrix,
)
from .linalg import (
    EigenDecomposition,
    SymMatrix,
    eigenvalue_indices,
    eigh,
    entrywise_div,
    multiplicity_of,
    solve_incidence,
)
from .sampling import (
    random_fiedler_like,
    random_periodic_balanced,
    random_tree,
    random_type1_vector,
    random_type2_vector,
    random_weights,
    tree_from_pruefer,
)
from .spectral import (
    CharacteristicSet,
    DirichletMatrix,
    FiedlerData,
    PerronPair,
    WeightedLaplacian,
    check_sum_identity,
    dirichlet_matrix,
    fiedler,
    full_incidence,
    laplacian,
    locate_characteristic_set,
    perron_pair,
    zero_tolerance,
)
from .transform import ContractionResult, SubdivisionResult, WeightedTree, contract, subdivide
from .tree_inverse import (
    DirichletReconstruction,
    FreeBranchChoice,
    TreeInverseResult,
    default_filler,
    dirichlet_from_perron,
    general_lambda_rescale,
    type1_inverse,
    type2_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "CharacteristicSet",
    "CompleteVerdict",
    "ContractionResult",
    "Cycle",
    "CycleInverseResult",
    "CycleVerdict",
    "DirichletMatrix",
    "DirichletReconstruction",
    "EigenDecomposition",
    "FiedlerData",
    "FreeBranchChoice",
    "PerronPair",
    "SubdivisionResult",
    "SymMatrix",
    "Tree",
    "TreeInverseResult",
    "TreeVerdict",
    "WeightAssignment",
    "WeightedLaplacian",
    "WeightedTree",
    "branches_at",
    "check_sum_identity",
    "classify_complete_vector",
    "classify_cycle_vector",
    "classify_tree_vector",
    "contract",
    "cycle_inverse",
    "cyclic_interval",
    "default_filler",
    "dirichlet_from_perron",
    "dirichlet_incidence",
    "dirichlet_matrix",
    "eigenvalue_indices",
    "eigh",
    "entrywise_div",
    "feasible_h_interval",
    "fiedler",
    "full_incidence",
    "general_lambda_rescale",
    "laplacian",
    "locate_characteristic_set",
    "multiplicity_of",
    "path_matrix",
    "perron_pair",
    "random_fiedler_like",
    "random_periodic_balanced",
    "random_tree",
    "random_type1_vector",
    "random_type2_vector",
    "random_weights",
    "solve_incidence",
    "subdivide",
    "tree_from_pruefer",
    "type1_inverse",
    "type2_inverse",
    "zero_tolerance",
]
