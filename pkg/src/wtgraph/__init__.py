"""Spectral theory of weighted threshold graphs."""

from .algebra import add, basis_power, basis_product, decompose, product, scale
from .cospectral import (
    AffineShift,
    WeightAlphabet,
    affine_shift,
    counterexample_pair,
    isomorphic,
    normalize_alphabet,
    reconstruct,
    shift_spectrum,
)
from .exceptions import (
    ConvergenceError,
    NormalizationUndefined,
    NotInAlgebra,
    NotRealizable,
    SizeLimitError,
    ThresholdGraphError,
)
from .numkernel import Polynomial, brute_force_isomorphic, char_poly, eig_sym, matmul
from .spectral import (
    EigenBasis,
    SpectralMap,
    Spectrum,
    basis_char_poly,
    are_cospectral,
    cospectral_mates,
    eigen_basis,
    spectral_map,
    spectrum_of,
    spectrum_via_degrees,
    synthesize,
)
from .threshold import WeightVector, adjacency, basis_matrix, degrees, laplacian, to_dot

__version__ = "0.1.0"
