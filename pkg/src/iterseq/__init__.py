"""Iterated digit maps: Collatz, generalized Kaprekar, digit factorial and digit power.

The submodules are the public API; the most used names are re-exported here.
"""

from .collatz import collatz_step, collatz_trajectory, collatz_verify_range
from .cycledetect import Cycle, TrajectoryResult, canonical, find_terminal, verify_cycle
from .digitproc import DFP, DPP, ProcessKind, apply, apply_to_multiset
from .digits import DigitMultiset, Digits, compose, decompose, enumerate_multisets, multiset_count
from .kaprekar import KaprekarConfig, alpha, beta, classify_all, conjecture_check, kaprekar_step
from .verifier import coverage_argument_check, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "DFP", "DPP", "Cycle", "DigitMultiset", "Digits", "KaprekarConfig", "ProcessKind",
    "TrajectoryResult", "alpha", "apply", "apply_to_multiset", "beta", "canonical",
    "classify_all", "collatz_step", "collatz_trajectory", "collatz_verify_range", "compose",
    "conjecture_check", "coverage_argument_check", "decompose", "enumerate_multisets",
    "find_terminal", "kaprekar_step", "multiset_count", "verify_cycle", "verify_theorem",
]
