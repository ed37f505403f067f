"""Exact structure-constant toolkit for Hom-Poisson algebras.

Structures are numpy object arrays of :class:`fractions.Fraction`; every
checker returns :class:`~hompoisson.algebra.Residual` tensors that vanish
exactly when the identity holds.
"""
from .algebra import (
    HomAssocAlgebra,
    HomLieAlgebra,
    HomPoissonAlgebra,
    Residual,
    check_hom_associative,
    check_hom_lie,
    check_hom_poisson,
    check_leibniz,
    check_poisson_homomorphism,
    failures,
    passes,
)
from .bialgebra import (
    HomPoissonBialgebra,
    check_coboundary_conditions,
    check_infinitesimal,
    check_lie_cocycle,
    check_poisson_bialgebra,
    check_poisson_coalgebra,
    check_theorem44,
    chybe_residual,
    coboundary_Delta,
    coboundary_delta,
    drinfeld_double,
    dualize_costructure,
    haybe_residual,
    w_residual,
)
from .errors import (
    CapExceeded,
    GridTooLarge,
    HomPoissonError,
    HypothesisViolated,
    InputError,
    ParseError,
    SchemaMismatch,
    ShapeError,
)
from .kernel import dual_action, dual_map, embed_leg, flip_tau, leg_product, qarray
from .matched import (
    BilinearForm,
    MatchedPairAssoc,
    MatchedPairLie,
    MatchedPairPoisson,
    bowtie_assoc,
    bowtie_lie,
    bowtie_poisson,
    check_invariant_form,
    check_manin_triple,
    check_matched_pair_assoc,
    check_matched_pair_lie,
    check_matched_pair_poisson,
    standard_manin_triple,
)
from .post import (
    ModuleHomPoisson,
    OOperator,
    PostHomPoisson,
    associated_hom_poisson,
    check_comm_dendriform,
    check_l_hom_lie_algebra,
    check_module_hom_algebra,
    check_module_hom_poisson,
    check_o_operator,
    check_post_hom_lie,
    check_post_hom_poisson,
    check_quasitriangular,
    check_rota_baxter,
    module_semidirect,
    post_from_o_operator,
    post_from_quasitriangular,
    quasitriangular_dual_module,
    symmetric_parts,
)
from .reps import (
    PoissonModule,
    adjoint_module,
    check_assoc_rep,
    check_lie_rep,
    check_poisson_module,
    coadjoint_module,
    dual_module,
    semidirect_product,
)
from .solver import SearchSpec, solve
from .structfile import load_structure, save_structure

__version__ = "0.1.0"
