"""Finite simplicial sets with marking and their homotopy monoids."""

from .constructions import (
    LoopSpace,
    StandardSpec,
    cone,
    join,
    loop,
    pullback,
    pushout,
    sphere,
    standard,
    suspend,
)
from .core import (
    ComplexBuilder,
    ComplexError,
    ComplexMap,
    MarkedComplex,
    PointedComplex,
    Simplex,
    hom_enumerate,
    validate,
)
from .generators import MonoidTable, cocycle_nerve, nerve_of_monoid
from .homotopy import tau, tau0, verify_loop_theorem
from .lifting import AnodyneInstance, check_complicial, find_lift
from .operators import SimplicialOperator, compose, ez_decompose

__all__ = [
    "AnodyneInstance",
    "ComplexBuilder",
    "ComplexError",
    "ComplexMap",
    "LoopSpace",
    "MarkedComplex",
    "MonoidTable",
    "PointedComplex",
    "Simplex",
    "SimplicialOperator",
    "StandardSpec",
    "check_complicial",
    "cocycle_nerve",
    "compose",
    "cone",
    "ez_decompose",
    "find_lift",
    "hom_enumerate",
    "join",
    "loop",
    "nerve_of_monoid",
    "pullback",
    "pushout",
    "sphere",
    "standard",
    "suspend",
    "tau",
    "tau0",
    "validate",
    "verify_loop_theorem",
]
