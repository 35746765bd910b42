"""Reproducing-kernel sampling toolkit."""

from ._core import (
    JacobiModel,
    Model,
    PWModel,
    SampledSignal,
    SamplingSet,
    StateVector,
    kernel_series,
    lagrange_reconstruct,
    limit_circle,
    load_model,
    make_state,
    place_sampling_point,
    run_verification,
    sample_transform,
    st_zeros,
)

__all__ = [
    "JacobiModel",
    "Model",
    "PWModel",
    "SampledSignal",
    "SamplingSet",
    "StateVector",
    "kernel_series",
    "lagrange_reconstruct",
    "limit_circle",
    "load_model",
    "make_state",
    "place_sampling_point",
    "run_verification",
    "sample_transform",
    "st_zeros",
]

__version__ = "0.1.0"
