"""Exact weight-graded linear algebra for KP modules, their primed variants and Schur modules."""

from ._rank import backend, rank
from .kp import (
    annihilator_check, borel_action, build_phi, build_psi, build_schur_map,
    cyclic_span, cyclic_span_check, generator_vector, kp_character,
    kp_prime_character, kp_reduces_to_schur_check, schur_character,
)
from .maps import Block, Factor, WeightBasis, WeightGradedMap, build_tensor_map

__all__ = [
    "annihilator_check", "borel_action", "build_phi", "build_psi", "build_schur_map",
    "cyclic_span", "cyclic_span_check", "generator_vector", "kp_character",
    "kp_prime_character", "kp_reduces_to_schur_check", "schur_character",
    "Block", "Factor", "WeightBasis", "WeightGradedMap", "build_tensor_map",
    "backend", "rank",
]
