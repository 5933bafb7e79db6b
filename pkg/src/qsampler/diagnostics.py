import numpy as np
from numpy.typing import NDArray
from scipy.stats import chisquare

from .truncation import truncated_from_values


def empirical_frequencies(indices: NDArray[np.int64], n: int) -> NDArray[np.float64]:
    return np.bincount(np.asarray(indices, dtype=np.int64), minlength=n) / max(len(indices), 1)


def tv_distance(indices: NDArray[np.int64], probabilities: NDArray[np.float64]) -> float:
    """
    Total variation distance between the empirical law of `indices` and `probabilities`.
    """
    probabilities = np.asarray(probabilities, dtype=np.float64)
    return 0.5 * float(np.sum(np.abs(empirical_frequencies(indices, len(probabilities)) - probabilities)))


def chi_square_pvalue(indices: NDArray[np.int64], probabilities: NDArray[np.float64], min_expected: float = 5.0) -> float:
    """
    Pearson chi-square p-value of the sample counts against `probabilities`. Bins whose
    expected count is below min_expected are pooled into one bin.
    """
    probabilities = np.asarray(probabilities, dtype=np.float64)
    counts = np.bincount(np.asarray(indices, dtype=np.int64), minlength=len(probabilities)).astype(np.float64)
    expected = probabilities * counts.sum()

    small = expected < min_expected
    observed_bins = list(counts[~small])
    expected_bins = list(expected[~small])
    if small.any():
        observed_bins.append(counts[small].sum())
        expected_bins.append(expected[small].sum())
    if len(observed_bins) < 2:
        return 1.0
    return float(chisquare(observed_bins, expected_bins).pvalue)


def acceptance_probability(values: NDArray[np.float64], k: int, epsilon_prime: float) -> float:
    """
    Success probability p_hat of the truncated proposal for the top-k set of `values`.
    """
    order = np.argsort(-np.asarray(values), kind="stable")
    return truncated_from_values(values, np.sort(order[:k]), epsilon_prime).success_prob


def exact_softmax(values: NDArray[np.float64], epsilon_prime: float) -> NDArray[np.float64]:
    """
    Exact softmax law p_i of the given values, for comparing against drawn samples.
    """
    scaled = np.asarray(values, dtype=np.float64) / epsilon_prime
    weights = np.exp(scaled - scaled.max())
    return weights / weights.sum()
