"""Paired de Bruijn graphs: sound cycle deciders and hardness constructions."""

from .core import (Alphabet, Bilabel, CycleWitness, Edge, GraphError, PairedDbGraph, Walk,
                   WalkError, is_covering, is_sound, make_graph, matches_with_shift, spell,
                   validate_graph)
from .exact import StateLimitExceeded, exists_covering_sound_cycle, exists_sound_cycle

__all__ = [
    "Alphabet", "Bilabel", "CycleWitness", "Edge", "GraphError", "PairedDbGraph", "Walk",
    "WalkError", "is_covering", "is_sound", "make_graph", "matches_with_shift", "spell",
    "validate_graph", "StateLimitExceeded", "exists_covering_sound_cycle", "exists_sound_cycle",
]
