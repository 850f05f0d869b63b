"""Topological argumentation models of belief."""

from ._core import (
    ArgbeliefError,
    Model,
    ProbabilisticModel,
    format_formula,
    properties,
    random_model,
    sweep,
)

__all__ = [
    "ArgbeliefError",
    "Model",
    "ProbabilisticModel",
    "format_formula",
    "properties",
    "random_model",
    "sweep",
]
