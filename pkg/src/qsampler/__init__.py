from .truncation import top_k, top_k_of_values, topk_charge, build_truncated, truncated_from_values, rejection_draw
from .amplification import amplification_rounds
from .sampler import QuantumSoftmaxSampler, ClassicalSoftmaxSampler, make_sampler, sample_batch
from .diagnostics import exact_softmax, tv_distance, chi_square_pvalue, empirical_frequencies, acceptance_probability

__all__ = [
    "top_k",
    "top_k_of_values",
    "topk_charge",
    "build_truncated",
    "truncated_from_values",
    "rejection_draw",
    "amplification_rounds",
    "QuantumSoftmaxSampler",
    "ClassicalSoftmaxSampler",
    "make_sampler",
    "sample_batch",
    "exact_softmax",
    "tv_distance",
    "chi_square_pvalue",
    "empirical_frequencies",
    "acceptance_probability",
]
