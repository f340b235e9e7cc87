"""Numerical geometry of curvature-bounded submanifolds.

Constructs the centered, rescaled rank-one-projection embeddings of the
projective spaces over R, C, H, O, flat-torus embeddings from frequency
families, and discrete-curve comparison tools, and verifies their
quantitative properties (normal and sectional curvatures, enclosing
radii, circle geodesics, chordal distances, the minimax torus constant)
at desk scale.
"""

from .algebra import (
    ALGEBRAS,
    COMPLEX,
    OCTONION,
    QUATERNION,
    REAL,
    Algebra,
    AlgebraElement,
    algebra_by_kind,
)
from .ambient import (
    HermitianMatrix,
    flat_dim,
    flatten,
    frobenius_inner,
    jordan_product,
    random_hermitian,
    unflatten,
)
from .ball import Ball, min_enclosing_ball
from .curves import (
    BowReport,
    DiscreteCurve,
    FaryReport,
    Hyperplane,
    InvalidComparison,
    bow_check,
    discrete_curvature,
    fary_check,
    fit_circle,
    monotonicity_check,
    reflect_concat,
)
from .flat_torus import (
    TorusEmbedding,
    curvature_bound,
    optimize_weights,
    torus_normal_curvature,
    torus_worst_direction,
)
from .manifold import (
    GeodesicState,
    ImplicitManifold,
    ProjectionError,
    SingularPointError,
    geodesic_state,
    integrate_geodesic,
    mean_curvature_vector,
    normal_curvature,
    second_fundamental_form,
    sectional_curvature,
    tangent_basis,
)
from .veronese import (
    VeroneseSpace,
    base_point,
    chordal_distance,
    geodesic_circle,
    intrinsic_distance,
    point_from_homogeneous,
    sample_points,
    simplex_circumradius,
    space,
    space_from_name,
    standard_planes,
    variety,
)

__version__ = "0.1.0"
