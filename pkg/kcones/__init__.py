'''
Exact K-classes of subvarieties of projective space, of their projective
and affine cones, and the torus-equivariant transfer between the two.

Example:
```
    import kcones as kc

    # Sheaf, pushforward and motivic classes of the nodal cubic in P^2
    triple = kc.cubic('nodal')
    print(triple.sheaf)          # 3*H - 3*H^2
    print(triple.pushforward)    # 3*H - 2*H^2

    # Motivic Chern class of the cone over a plane quartic
    quartic = kc.mc_smooth_hypersurface(4, 2)
    cone = kc.projective_cone_mc(quartic, smooth=True)
    print(cone.cone_class.at_y(0))    # 4*H - 6*H^2 + 3*H^3

    # Hilbert data of two lines in P^3
    ideal = kc.MonomialIdeal.parse('x0*x2, x0*x3, x1*x2, x1*x3', 4)
    k = kc.kpoly_from_monomial_ideal(ideal)
    print(k)                              # 1 - 4*t^2 + 4*t^3 - t^4
    print(kc.sheaf_class_from_kpoly(k))   # 2*H^2

    # Equivariant class of a line in P^2 and its affine cone
    action = kc.TorusAction.diagonal(2)
    M, R, mc = kc.equiv_linear_subspace(1, action)
    assert kc.projective_to_affine_full(mc) == M - R
```
'''

from .errors import (
    KConesError,
    DimensionMismatchError,
    InexactDivisionError,
    FractionalExponentError,
    PoleError,
    ZeroClassError,
    NonSplitBundleError,
    ResourceCapError,
    ParseError,
)
from .config import Config
from .yrational import YRational
from .ring import (
    TruncatedClass,
    ring_ops,
    convert_basis,
    divide_exact_y,
)
from .projective import (
    ClassTriple,
    GenusReport,
    linear_subspace_class,
    complete_intersection_class,
    mc_projective_space,
    mc_linear_subspace,
    split_divisor_mc,
    mc_smooth_hypersurface,
    pushforward_self_map_p1,
    push_along_self_map_p1,
    linear_inclusion_pushforward,
    union_additive_pushforward,
    motivic_inclusion_exclusion,
    mc0_union_two_linear,
    integral,
    genus_report,
    degree_codim,
    motivic_segre,
    rational_normal_curve_class,
    mc_rational_normal_curve,
    chi_y_plane_curve,
    chi_y_space_surface,
    cubic_catalogue,
    cubic,
    variety_triple,
)
from .cones import (
    ConeResult,
    projective_cone_mc,
    projective_cone_mc0,
    projective_cone_pushforward,
    projective_cone_sheaf,
    csm_projective_cone,
    hyperplane_restriction,
)
from .hilbert import (
    MonomialIdeal,
    KPolynomial,
    HilbertPolynomial,
    kpoly_from_monomial_ideal,
    hilbert_series_coefficients,
    sheaf_class_from_kpoly,
    hilbert_polynomial_from_class,
    gamma_equivariant_sheaf_class,
)
from .laurent import (
    LaurentExpr,
    ScalarEmbedding,
    TorusAction,
    EquivariantClass,
    laurent_divmod,
    laurent_reduce,
)
from .equivariant import (
    AffineEquivariantClass,
    AffineSegreClass,
    ProjectiveSegreClass,
    kirwan,
    forget_gamma,
    forget_torus,
    chi_y_of,
    equiv_linear_subspace,
    affine_motivic_segre,
    affine_to_projective_segre,
    affine_to_projective_mc,
    projective_to_affine_full,
    projective_to_affine_scalar,
    projective_to_affine_forget,
)
from .cohomology import (
    CohomClass,
    coho_affine_to_projective,
    coho_affine_to_projective_action,
    coho_projective_to_affine,
    leading_cohomology_term,
)
from .codec import dumps
from .verify import VerifyOutcome, run_verification
