"""Exact signed decompositions of simple rational polytopes.

The package builds, for a bounded full-dimensional simple polytope given
as a rational half-space intersection:

* the tangent-cone (one-cell-per-face, alternating-sign) decomposition,
* the polarized vertex-cone decomposition for a generic linear functional,
* the norm-square decomposition for an admissible center,

together with the critical-point machinery that selects among them
(per-face localizing data, admissibility checks, an exact-LP center
search, per-face Morse levels) and an exact verification layer that tests
the defining indicator and measure identities with no tolerances.
"""

from .errors import (
    AssumptionViolated,
    DegeneratePairing,
    GenericityFailure,
    InputError,
    MalformedRational,
    NotFullDimensional,
    NotSimple,
    PolytopeError,
    PreconditionError,
    RedundantHalfSpace,
    Unbounded,
)
from .polytope import (
    Box,
    Face,
    HalfSpace,
    SimplePolytope,
    affine_projection,
    bounding_box,
    enumerate_faces,
    enumerate_vertices,
    parse_polytope,
    relint_contains,
)
from .clipping import CellClipper, ClippedPolytope, clip, exact_volume
from .decompose import (
    Decomposition,
    EdgeFrame,
    SignedCell,
    TangentCone,
    brianchon_gram,
    decomposition_from_doc,
    decomposition_to_doc,
    edge_frame,
    indicator_sum,
    lawrence_varchenko,
    tangent_cone,
    witten,
)
from .taming import (
    LocalizingComponent,
    MorseData,
    TamingSpec,
    admissible_center,
    check_assumption,
    dual_edge_frame,
    induced_decomposition,
    localizing_set,
    morse_data,
    morse_data_from_center,
    verify_morse_data,
)
from .measure import (
    SeededStream,
    VerificationReport,
    monte_carlo_volume,
    sample_boxes,
    sample_points,
    signed_volume,
    verify_measure,
    verify_pointwise,
)
from . import shapes

__version__ = "0.1.0"
