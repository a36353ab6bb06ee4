"""Feature catalog: wavelet transforms and energies, time-domain statistics,
spectral and autoregressive features, and per-record vector assembly."""

from .extract import (DEFAULT_WE_WAVELETS, FeatureConfig, FeatureVector, extract,
                      normalized_for_ar, welch_bin, write_feature_csv)
from .spectral import WelchConfig, ar_fit, fft_coefficients, linear_trend, welch_density
from .stats import (change_quantile, complexity_invariant_distance, excess_kurtosis,
                    moments, sample_entropy, variance)
from .wavelets import (DwtResult, WaveletSpec, dwt, idwt, filter_bank, filter_length,
                       max_level, parse_wavelet_name, supported_wavelets,
                       total_detail_energy, wavelet_energy)

__all__ = [
    "DEFAULT_WE_WAVELETS", "DwtResult", "FeatureConfig", "FeatureVector",
    "WaveletSpec", "WelchConfig", "ar_fit", "change_quantile",
    "complexity_invariant_distance", "dwt", "excess_kurtosis", "extract",
    "fft_coefficients", "filter_bank", "filter_length", "idwt", "linear_trend",
    "max_level", "moments", "normalized_for_ar", "parse_wavelet_name",
    "sample_entropy", "supported_wavelets", "total_detail_energy", "variance",
    "wavelet_energy", "welch_bin", "welch_density", "write_feature_csv",
]
