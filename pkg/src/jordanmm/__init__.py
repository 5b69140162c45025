"""Computational engine for Jordan-algebra matrix models.

Octonion and bioctonion arithmetic, the Jordan algebras of Hermitian
matrices over R, C, H, O and CO (including the exceptional 3x3 octonionic
algebra), spectral frames, projective incidence geometry, spin-factor
Minkowski geometry, and the cubic matrix-model actions built on them.

The hot product kernels run from a compiled extension when available and
fall back to NumPy otherwise; ``jordanmm.kernels.BACKEND`` names the one in
use and JORDANMM_NO_EXT=1 forces the fallback.
"""

from .division_algebras import (
    Bioctonion,
    Octonion,
    associator,
    conjugate,
    multiply,
    norm_form,
)
from .errors import (
    AlgebraError,
    GeometryError,
    JordanmmError,
    SpectralError,
    ValidationError,
)
from .jordan_core import (
    GROUND_DIMS,
    HermitianElement,
    SpinFactorElement,
    characteristic_coefficients,
    congruence_action,
    cubic_form,
    determinant,
    freudenthal_product,
    jordan_product,
    minkowski_inner,
    peel,
    spin_product,
    trace_of_product,
    trilinear_form,
    unpeel,
)
from .kernels import BACKEND
from .matrix_model import (
    GaugeAlgebra,
    GaugeConfiguration,
    bfss_split,
    bfss_unsplit,
    minkowski_coordinates,
    ohwashi_action,
    ohwashi_action_value,
    smolin_action,
    to_spin_factor,
    triality_cycle,
)
from .projective import (
    ProjectiveLine,
    ProjectivePoint,
    dual,
    h2_determinant,
    incidence_residual,
    incident,
    is_lightlike,
    join,
    meet,
    point_from_vector,
    transition_probability,
)
from .sampling import DEFAULT_SEED, Sampler, random_element
from .spectral import SpectralFrame, solve_characteristic_cubic, spectral_decompose

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
