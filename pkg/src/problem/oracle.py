import warnings

import numpy as np
from numpy.typing import NDArray

from src.core import IFunctionFamily
from src.core.exceptions import DomainWarning, InvalidArgumentError
from src.core.models import QueryLedger


def _check_index(family: IFunctionFamily, i: int) -> int:
    if isinstance(i, bool) or not isinstance(i, (int, np.integer)) or not 0 <= i < family.n_functions:
        raise InvalidArgumentError(f"Function index {i!r} out of range [0, {family.n_functions})")
    return int(i)


def _check_domain(family: IFunctionFamily, x: NDArray[np.float64]) -> NDArray[np.float64]:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (family.dim,):
        raise InvalidArgumentError(f"Expected a point of dimension {family.dim}, got shape {x.shape}")
    distance = float(np.linalg.norm(x - family.domain_center))
    if distance > family.domain_radius * (1.0 + 1e-9):
        warnings.warn(
            f"Query point lies {distance:.6g} from the domain center (radius {family.domain_radius:.6g})",
            DomainWarning,
            stacklevel=3,
        )
    return x


def evaluate(family: IFunctionFamily, i: int, x: NDArray[np.float64], ledger: QueryLedger) -> float:
    """
    One emulated value-oracle call: returns f_i(x), charges one value query.
    """
    i = _check_index(family, i)
    x = _check_domain(family, x)
    ledger.charge_value(1)
    return float(family.value(i, x))


def subgradient_query(family: IFunctionFamily, i: int, x: NDArray[np.float64], ledger: QueryLedger) -> NDArray[np.float64]:
    """
    Emulated one-query gradient estimation: returns a subgradient of f_i at x and
    charges one gradient query.
    """
    i = _check_index(family, i)
    x = _check_domain(family, x)
    ledger.charge_gradient(1)
    return np.asarray(family.gradient(i, x), dtype=np.float64)


def evaluate_all(family: IFunctionFamily, x: NDArray[np.float64], ledger: QueryLedger) -> NDArray[np.float64]:
    """
    Values of all N functions at x; charges N value queries.
    """
    x = _check_domain(family, x)
    ledger.charge_value(family.n_functions)
    return np.asarray(family.values(x), dtype=np.float64)


def subgradient_all(family: IFunctionFamily, x: NDArray[np.float64], ledger: QueryLedger) -> NDArray[np.float64]:
    """
    N x d matrix of subgradients at x; charges N gradient queries.
    """
    x = _check_domain(family, x)
    ledger.charge_gradient(family.n_functions)
    return np.asarray(family.gradients(x), dtype=np.float64)
