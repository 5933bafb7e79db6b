import math
import warnings
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import qr

from src.core import IFunctionFamily
from src.core.exceptions import ClippedScaleWarning, InvalidArgumentError
from src.core.models import HardInstance
from src.utils import stream
from .chain import chain_gradients, chain_values, prog, zero_point


class ShuffledHardFamily(IFunctionFamily):
    """
    f~_i(x) = f_{Pi^-1(i)}(U^T x) over the unit ball: the zero-chain seen through a hidden
    rotation and a hidden relabelling of the functions.
    """

    def __init__(self, instance: HardInstance, domain_radius: float = 1.0):
        super().__init__(n_functions=instance.n_functions,
                         dim=instance.dim,
                         lipschitz=1.0,
                         smoothness=instance.smooth_param,
                         domain_radius=domain_radius)
        self.instance = instance

    def base_point(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.instance.rotation.T @ np.asarray(x, dtype=np.float64)

    def progress(self, x: NDArray[np.float64]) -> int:
        return prog(self.base_point(x), self.instance.alpha)

    def value(self, i: int, x: NDArray[np.float64]) -> float:
        return float(self.values(x)[i])

    def gradient(self, i: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.gradients(x)[i]

    def values(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        inst = self.instance
        base = chain_values(self.base_point(x), inst.chain_len, inst.n_functions, inst.smooth_param)
        return base[inst.inverse_permutation]

    def gradients(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        inst = self.instance
        base = chain_gradients(self.base_point(x), inst.chain_len, inst.n_functions, inst.smooth_param)
        return base[inst.inverse_permutation] @ inst.rotation.T

    def minimizer(self) -> NDArray[np.float64]:
        return self.instance.rotation @ zero_point(self.instance.chain_len)

    def reference_minimum(self, center: NDArray[np.float64], radius: float) -> Optional[float]:
        if np.linalg.norm(self.minimizer() - np.asarray(center)) <= radius * (1.0 + 1e-9):
            return 0.0
        return None


def haar_columns(rng: np.random.Generator, dim: int, columns: int) -> NDArray[np.float64]:
    """
    d x T matrix with Haar-distributed orthonormal columns: thin QR of a Gaussian matrix
    with the signs of R's diagonal moved into Q.
    """
    q, r = qr(rng.standard_normal((dim, columns)), mode="economic")
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def make_shuffled_instance(seed: int,
                           chain_len: int,
                           n_functions: int,
                           smooth_param: float,
                           dim: int,
                           identity: bool = False) -> ShuffledHardFamily:
    """
    Draws U and Pi from stream(seed, "instance", "hard"). identity=True keeps U = first T
    columns of I_d and Pi = id, which leaves the plain chain.
    """
    if dim < chain_len:
        raise InvalidArgumentError(f"Need d >= T, got d={dim}, T={chain_len}")
    if n_functions < chain_len:
        raise InvalidArgumentError(f"Need N >= T, got N={n_functions}, T={chain_len}")

    if identity:
        rotation = np.eye(dim, chain_len)
        permutation = np.arange(n_functions)
    else:
        rng = stream(seed, "instance", "hard")
        rotation = haar_columns(rng, dim, chain_len)
        permutation = rng.permutation(n_functions)

    return ShuffledHardFamily(HardInstance(chain_len=chain_len,
                                           n_functions=n_functions,
                                           smooth_param=float(smooth_param),
                                           dim=dim,
                                           rotation=rotation,
                                           permutation=permutation.astype(np.int64),
                                           seed=seed))


def required_dimension(chain_len: int, n_functions: int, delta: float) -> int:
    """
    Smallest d the progress-control argument allows:
    T + max(32 T^3 ln(32 sqrt(N) T^5), 32 T^3 ln(4T / delta)).
    """
    T = chain_len
    cube = 32.0 * T ** 3
    return math.ceil(T + max(cube * math.log(32.0 * math.sqrt(n_functions) * T ** 5), cube * math.log(4.0 * T / delta)))


def guess_success_bound(chain_len: int, dim: int) -> float:
    """
    min(1, 2T exp(-(d - T) / (32 T^3))): chance that one uniform guess in the unit ball
    reaches prog >= T.
    """
    return min(1.0, 2.0 * chain_len * math.exp(-(dim - chain_len) / (32.0 * chain_len ** 3)))


class ScaledHardFamily(IFunctionFamily):
    """
    L_f R f~_i(x / R) on B_R(0): L_f-Lipschitz and (L_f l / R)-smooth.
    """

    def __init__(self, base: ShuffledHardFamily, lipschitz: float, radius: float):
        super().__init__(n_functions=base.n_functions,
                         dim=base.dim,
                         lipschitz=lipschitz,
                         smoothness=lipschitz * base.instance.smooth_param / radius,
                         domain_radius=radius)
        self.base = base
        self.scale = radius

    def value(self, i: int, x: NDArray[np.float64]) -> float:
        return self.lipschitz * self.scale * self.base.value(i, np.asarray(x) / self.scale)

    def gradient(self, i: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.lipschitz * self.base.gradient(i, np.asarray(x) / self.scale)

    def values(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.lipschitz * self.scale * self.base.values(np.asarray(x) / self.scale)

    def gradients(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.lipschitz * self.base.gradients(np.asarray(x) / self.scale)

    def progress(self, x: NDArray[np.float64]) -> int:
        return self.base.progress(np.asarray(x) / self.scale)

    def reference_minimum(self, center: NDArray[np.float64], radius: float) -> Optional[float]:
        return self.base.reference_minimum(np.asarray(center) / self.scale, radius / self.scale)


def scaled_chain_length(lipschitz: float, smoothness: float, radius: float, epsilon: float) -> int:
    """
    T = ceil(max((L_f R / eps)^{2/3}, (L_g R^2 / eps)^{1/3}) / 5), at least 1.
    """
    ratio = max((lipschitz * radius / epsilon) ** (2.0 / 3.0), (smoothness * radius ** 2 / epsilon) ** (1.0 / 3.0))
    return max(1, math.ceil(ratio / 5.0 - 1e-9))


def scaled_hard_family(lipschitz: float,
                       smoothness: float,
                       radius: float,
                       epsilon: float,
                       n_functions: int,
                       seed: int,
                       d_cap: int = 64,
                       delta: float = 1.0 / 3.0) -> ScaledHardFamily:
    """
    Hard family for accuracy eps at Lipschitz constant L_f, smoothness L_g and radius R.
    The dimension the construction asks for is clipped to d_cap with a ClippedScaleWarning.
    """
    if lipschitz <= 0 or smoothness <= 0 or radius <= 0:
        raise InvalidArgumentError("L_f, L_g and R must be positive")
    if not 0 < epsilon < min(lipschitz * radius, smoothness * radius ** 2):
        raise InvalidArgumentError(
            f"epsilon must lie in (0, min(L_f R, L_g R^2)) = (0, {min(lipschitz * radius, smoothness * radius ** 2):.6g})")

    chain_len = scaled_chain_length(lipschitz, smoothness, radius, epsilon)
    needed = required_dimension(chain_len, n_functions, delta)
    dim = needed
    if needed > d_cap:
        warnings.warn(f"Dimension {needed} required for T={chain_len}, N={n_functions}; clipped to {d_cap}",
                      ClippedScaleWarning,
                      stacklevel=2)
        dim = max(d_cap, chain_len)

    base = make_shuffled_instance(seed, chain_len, n_functions, smoothness * radius / lipschitz, dim)
    return ScaledHardFamily(base, lipschitz, radius)
