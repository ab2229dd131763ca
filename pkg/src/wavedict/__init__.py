"""Redundant wavelet dictionaries and OOMP sparse modelling of ECG signals."""

__version__ = "0.1.0"

from .cascade import SampledGenerators, integer_values, wavelet_gen
from .dictionary import (AtomDescriptor, FullDictionary, WaveletDictionary, dcos,
                         full_dictionary, gen_dict, norm_dict, wavelet_dict)
from .ecgio import read_csv, read_signal, read_ubit11, write_outputs
from .filters import FAMILIES, FilterPair, filters, get_filters, normalize_scaling_filter
from .model import SignalModelResult, match_prd, metrics, partition, signal_model
from .pursuit import PursuitResult, oomp

__all__ = [
    "AtomDescriptor", "FAMILIES", "FilterPair", "FullDictionary", "PursuitResult",
    "SampledGenerators", "SignalModelResult", "WaveletDictionary", "dcos", "filters",
    "full_dictionary", "gen_dict", "get_filters", "integer_values", "match_prd",
    "metrics", "norm_dict", "normalize_scaling_filter", "oomp", "partition",
    "read_csv", "read_signal", "read_ubit11", "signal_model", "wavelet_dict",
    "wavelet_gen", "write_outputs",
]
