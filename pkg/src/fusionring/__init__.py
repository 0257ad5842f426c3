"""Exact fusion-ring arithmetic, invariants, and categorifiability
obstruction checks."""

from .algebraic import AlgebraicReal, IsolatedRoot, Quadratic, alg_cmp
from .classify import (
    LevelEntry,
    LevelReport,
    classify_elementary2,
    classify_generic,
    scan_prime_levels,
)
from .construct import (
    AbelianGroupSpec,
    CharacterTable,
    character_ring,
    dihedral_character_ring,
    dihedral_character_table,
    group_ring,
    haagerup_izumi,
    near_group,
    uniform_two_orbit,
)
from .errors import (
    CertificationError,
    FusionRingError,
    HypothesisError,
    InternalInvariantError,
    MalformedRingError,
    NotAFusionRingError,
    NotTwoOrbitError,
    ThetaInconsistentError,
)
from .numtheory import (
    SquareFreeDecomposition,
    min_roots_of_unity,
    phi_ratio_cmp,
    quad_sign,
    squarefree_part,
    totient,
)
from .obstruct import (
    BudgetModel,
    ObstructionVerdict,
    budget_bound,
    elementary2_coarse,
    elementary2_coarse_both,
    endgame_both,
    endgame_check,
    galois_partner,
    obstruct_divisibility,
    obstruct_noncommutative,
    prime_parity,
    prime_xbound,
    quartic_coeffs,
    quartic_f,
    run_all,
)
from .represent import (
    Codegree,
    IrrepModel,
    characters_commutative,
    codegree_spectrum,
    irr0_codegrees,
    irr_H_of_G,
    semidirect_irr,
    uniform_irreps,
    verify_irrep,
)
from .ring import (
    DimensionProfile,
    FusionRing,
    TwoOrbitData,
    Violation,
    dimension_profile,
    fpdim_basis,
    fpdim_total,
    fusion_matrix,
    invertibles,
    is_commutative,
    orbit_structure,
    two_orbit_data,
    verify_axioms,
)
from .ringfile import dumps_ring, load_ring, loads_ring, save_ring

__version__ = "0.1.0"
