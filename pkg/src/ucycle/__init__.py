"""Greedy universal cycles for rotation-closed sets of words, and the warden's game behind them."""

from .core import (
    CycleString,
    Params,
    Word,
    WordError,
    aperiodic_prefix,
    cyclic_equal,
    format_word,
    is_necklace,
    parse_word,
    rotate_left,
    rotations,
    windows,
)
from .fkm import (
    fkm_cycle,
    fkm_equals_greedy,
    is_alpha_suffix_language,
    is_k_suffix_language,
    necklaces_of,
)
from .greedy import GreedyResult, Verdict, greedy_is_universal, greedy_sequence, verify_universal_cycle
from .increase import increasable_set, increasable_to, increase_successors
from .sets import SetSpec, SpecError, WordSet, is_rotation_closed, load_spec, materialize, rotation_closure
from .warden import INFINITE, RemotenessTable, legal_moves, optimal_line, optimal_move, solve

__version__ = "0.1.0"
