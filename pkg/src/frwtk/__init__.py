"""Fractional wavelet transform toolkit.

The transform uses chirp-modulated daughters
``exp(-i/2 (t^2 - b^2) cot theta) a^-rho phi((t - b)/a)`` with
``theta = alpha pi / 2``.  The package also provides the fractional
Fourier transform, the basic function and associated convolution built
on the transform, and numerical checks of their bounds.
"""
from .errors import (ConfigError, CostGuardError, DivergentNorm, DomainError, FrwtkError,
                     GridMismatch, HypothesisError, NoConverge, NotAdmissible, ParseError,
                     QuadNoConverge, SingularAngle)
from .core import (INF, CoefficientPlane, MexicanHat, Morlet, SampledSignal, ScaleShiftGrid,
                   Tabulated, TransformParams, Wavelet, WaveletTriple, conjugate_exponent,
                   inner_product, lp_norm, power_weighted_l1, weighted_norm)
from .quad import QuadResult, integrate_1d, integrate_2d
from .specfun import gamma, hyp1f1, hyp1f1_series
from .frft import FrftSpectrum, default_output_grid, frft, frft_kernel, inverse_frft
from .gnfrwt import (ParsevalResult, admissibility_constant, cwt, daughter_wavelet, forward,
                     forward_via_frft, inverse, parseval_residual, reconstruction_constant)
from .convo import (BasicFunctionCache, BasicFunctionSample, MexicanAux, basic_function,
                    basic_function_values, convolution_theorem_residual, convolve_direct,
                    defining_property_residual, mexican_basic_reduced, morlet_basic_reduced,
                    translate)
from .bounds import (BoundReport, ScanPoint, integrated_bound_check, integrated_bound_rhs,
                     integrated_bound_scan, pointwise_bound, young_bound_check)

__version__ = "0.1.0"
