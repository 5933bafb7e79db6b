from .function_family import IFunctionFamily
from .softmax_sampler import ISoftmaxSampler
from .outer_strategy import IOuterStrategy
from .progress_arm import IProgressArm

__all__ = ["IFunctionFamily", "ISoftmaxSampler", "IOuterStrategy", "IProgressArm"]
