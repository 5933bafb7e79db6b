from .softmax import (
    f_max,
    f_smax,
    f_smax_reg,
    smax_of_values,
    softmax_of_values,
    softmax_weights,
    center_values_and_weights,
)
from .gamma import (
    gamma,
    gamma_gradient_exact,
    gamma_stochastic_gradient,
    gradient_bound,
    default_gradient_bound,
    conversion_constant,
)

__all__ = [
    "f_max",
    "f_smax",
    "f_smax_reg",
    "smax_of_values",
    "softmax_of_values",
    "softmax_weights",
    "center_values_and_weights",
    "gamma",
    "gamma_gradient_exact",
    "gamma_stochastic_gradient",
    "gradient_bound",
    "default_gradient_bound",
    "conversion_constant",
]
