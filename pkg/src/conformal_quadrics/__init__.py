"""Exact conformal geometry of R^{p,q} and its compactification N^{p,q}.

Points of R^{p,q} embed into the projective quadric N^{p,q} in
RP^{p+q+1}; the group O(p+1, q+1) acts there by conformal maps.  This
package classifies conformal quadratic hypersurfaces and surfaces by exact
rational arithmetic and builds group elements relating them.
"""

from .exceptions import (
    ConformalError,
    DimensionMismatch,
    DomainError,
    InvalidHypersurface,
    InvalidSurface,
    NotOnQuadric,
    NotOrthogonal,
    NumericalError,
    SignMismatch,
    UndefinedPoint,
)
from .forms import LiftedSpace, QuadraticSpace, Signature, congruent_diagonalize, eval_B, eval_Q, gram, signature
from .projective import (
    ProjectivePoint,
    ProjectiveSubspace,
    embed,
    member,
    on_quadric,
    quadric_intersection_dim,
    span,
    unembed,
)
from .quadric_surfaces import (
    AffineQuadric,
    Hypersurface,
    Sign,
    SurfaceD,
    act_hypersurface,
    act_surface,
    affine_to_projective,
    definite_case_orbit,
    make_surface,
    orbit_map,
    projective_to_affine,
    same_orbit_given_realizations,
    same_orbit_hypersurface,
    sign_of,
    surface_points_equal,
)
from .transforms import (
    ConformalMap,
    Dilate,
    Invert,
    Rotate,
    Translate,
    act_affine,
    act_point,
    decompose,
    dilation,
    estimate_conformal_factor,
    inversion,
    lift,
    rotation,
    translation,
    verify_orthogonal,
)
from .witt import Witness, extend_isometry, hyperbolic_partner, map_vector, reflection

__version__ = "0.1.0"
