from .oracle import evaluate, evaluate_all, subgradient_all, subgradient_query
from .affine import AffineFamily, affine_ball_minimum, make_affine_family, make_symmetric_affine_family
from .validation import check_lipschitz, check_smoothness, check_subgradient

__all__ = [
    "evaluate",
    "evaluate_all",
    "subgradient_query",
    "subgradient_all",
    "AffineFamily",
    "affine_ball_minimum",
    "make_affine_family",
    "make_symmetric_affine_family",
    "check_lipschitz",
    "check_smoothness",
    "check_subgradient",
]
