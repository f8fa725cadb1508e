"""Linear-programming upper bounds for quantum codes, in exact arithmetic."""

from .asymptotics import (
    CurvePoint,
    entropy,
    gv_exponent,
    hamming_exponent,
    lp1_exponent_binary,
    singleton_exponent,
    tabulate_curve,
    xi_e,
)
from .certificates import (
    CertificateError,
    DualCertificate,
    NoValidA,
    SignViolation,
    ZeroDenominator,
    check_certificate,
    first_lp_binary_certificate,
    hamming_certificate,
    singleton_certificate,
)
from .enum_lp import EnumeratorPair, lp_feasible, lp_max_K, macwilliams_image
from .kraw import binomial, expand_in_kraw, kraw_table, kraw_value, linearize_product
from .mixed import mixed_plotkin, mixed_sphere_volume, stabilizer_hamming, stabilizer_plotkin

__version__ = "0.1.0"
