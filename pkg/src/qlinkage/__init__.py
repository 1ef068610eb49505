"""Exact Weyl groupoid, character and linkage computations for diagonal braidings."""

__version__ = "0.1.0"

from .bicharacter import BraidingMatrix, bound, cartan_matrix, dual_action, reflect_matrix, simple_reflection
from .catalog import cartan_type, default_suite, resolve, super_a11
from .characters import (
    FormalCharacter,
    ch_kernel_phi,
    ch_negative_part,
    ch_simple_1atypical,
    ch_simple_typical,
    ch_twisted_verma,
    ch_verma,
)
from .cyclotomic import RootOfUnity, is_quantum_zero, order
from .groupoid import Groupoid, Morphism, hom_into, longest_element, orbit
from .lattice import LatticeMap
from .linkage import (
    TorusCharacter,
    atypicality,
    down,
    linkage_classes,
    n_beta,
    strongly_linked_set,
    t_beta,
)
from .rootsystem import RootSystemData, is_standard_type, positive_roots, root_system, shift, two_varrho

__all__ = [
    "BraidingMatrix",
    "FormalCharacter",
    "Groupoid",
    "LatticeMap",
    "Morphism",
    "RootOfUnity",
    "RootSystemData",
    "TorusCharacter",
    "atypicality",
    "bound",
    "cartan_matrix",
    "cartan_type",
    "ch_kernel_phi",
    "ch_negative_part",
    "ch_simple_1atypical",
    "ch_simple_typical",
    "ch_twisted_verma",
    "ch_verma",
    "default_suite",
    "down",
    "dual_action",
    "hom_into",
    "is_quantum_zero",
    "is_standard_type",
    "linkage_classes",
    "longest_element",
    "n_beta",
    "orbit",
    "order",
    "positive_roots",
    "reflect_matrix",
    "resolve",
    "root_system",
    "shift",
    "simple_reflection",
    "strongly_linked_set",
    "super_a11",
    "t_beta",
    "two_varrho",
]
