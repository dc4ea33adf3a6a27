"""Repetition-free words, automata whose shortest repetition-free word is long,
and Carpi's preimage construction for overlap-free words."""
from .automata import Dfa, accepts, build_Di, shortest_accepted
from .carpi import build_psi_dfa, invert_phi, phi, phi_split
from .constructions import build_w, build_w_prime, find_circularly_squarefree
from .morphisms import MU, Morphism, thue_morse_prefix
from .search import enumerate_free, shortest_free_accepted
from .words import (Constraint, Occurrence, cyc, find_kpower, find_overlap,
                    is_primitive, is_simple_kpower)

__version__ = "0.1.0"
