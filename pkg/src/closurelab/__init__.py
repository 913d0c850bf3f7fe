"""Finite Čech closure spaces, their function spaces, and exhaustive checks."""

from .space import (
    Pretopology,
    Topology,
    closure_of,
    compare,
    discrete,
    indiscrete,
    interior_of,
    is_regular,
    join,
    meet,
    minimal_neighborhood,
    product,
    semi_regularization,
    sierpinski,
    theta_open_topology,
    theta_pretopology,
    topological_modification,
    verify_closure_axioms,
)
from .maps import FiniteMap, classify, compose, is_continuous, is_continuous_at, is_theta_continuous
from .funcspace import (
    FunctionSpace,
    SigmaStructure,
    a_topology,
    c_topology,
    cc_pretopology,
    curry,
    enumerate_functions,
    evaluation_map,
    finest_proper_topology,
    is_admissible,
    is_proper,
    uncurry,
)

__version__ = "0.1.0"

__all__ = [
    "FiniteMap",
    "FunctionSpace",
    "Pretopology",
    "SigmaStructure",
    "Topology",
    "a_topology",
    "c_topology",
    "cc_pretopology",
    "classify",
    "closure_of",
    "compare",
    "compose",
    "curry",
    "discrete",
    "enumerate_functions",
    "evaluation_map",
    "finest_proper_topology",
    "indiscrete",
    "interior_of",
    "is_admissible",
    "is_continuous",
    "is_continuous_at",
    "is_proper",
    "is_regular",
    "is_theta_continuous",
    "join",
    "meet",
    "minimal_neighborhood",
    "product",
    "semi_regularization",
    "sierpinski",
    "theta_open_topology",
    "theta_pretopology",
    "topological_modification",
    "uncurry",
    "verify_closure_axioms",
]
