"""Digit factorial (dfp) and digit power (dpp) maps, plus their descent bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .digits import DigitMultiset, parse_natural
from .errors import ParseError, PreconditionViolated


@dataclass(frozen=True)
class ProcessKind:
    tag: str
    weights: tuple[int, ...]
    descent_threshold: int
    multiset_depth: int

    def __post_init__(self):
        object.__setattr__(self, "_by_char", {str(d): w for d, w in enumerate(self.weights)})

    @property
    def max_weight(self) -> int:
        return self.weights[9]

    def __call__(self, n: int) -> int:
        """Fast path for ints; see :func:`apply` for validated input."""
        table = self._by_char
        return sum([table[ch] for ch in str(n)])

    def __str__(self):
        return self.tag


DFP = ProcessKind("dfp", tuple(factorial(d) for d in range(10)), 10**7, 7)
# 0**0 == 1 in Python, which is the convention the multiset reduction needs
DPP = ProcessKind("dpp", tuple(d**d for d in range(10)), 10**10, 10)

KINDS = {"dfp": DFP, "dpp": DPP}


def kind_of(name: str | ProcessKind) -> ProcessKind:
    if isinstance(name, ProcessKind):
        return name
    try:
        return KINDS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown process {name!r}; expected dfp or dpp") from None


def apply(kind: ProcessKind, n: int | str) -> int:
    """Sum of the digit weights of ``n``; ``n`` may be a decimal string of any length."""
    if isinstance(n, str):
        if not n or not n.isascii() or not n.isdigit():
            raise ParseError(f"not a base-10 digit string: {n!r}")
        return kind(n.lstrip("0") or "0")
    return kind(parse_natural(n))


def apply_to_multiset(kind: ProcessKind, m: DigitMultiset) -> int:
    # digit 1 stands for {0, 1}; both carry weight 1 in either process
    return sum(c * kind.weights[d] for d, c in m.items())


def descent_bound(kind: ProcessKind, m: int) -> tuple[Fraction, int]:
    """(``(10**m - 1) / 10``, ``m * w(9)``) as exact values.

    The descent lemma for ``kind`` needs lhs > rhs from m = 8 (dfp) or
    m = 11 (dpp) onward.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    return Fraction(10**m - 1, 10), m * kind.max_weight


def descent_ratio(kind: ProcessKind, m: int) -> Fraction:
    """lhs / rhs of :func:`descent_bound`: (10**m - 1) / (10 * m * w(9))."""
    lhs, rhs = descent_bound(kind, m)
    return lhs / rhs


def ratio_increases(kind: ProcessKind, m: int) -> bool:
    """Whether descent_ratio(m) < descent_ratio(m + 1), by integer cross-multiplication."""
    return (10**m - 1) * (m + 1) < (10 ** (m + 1) - 1) * m


def _less(a: str, b: str) -> bool:
    # compare canonical decimal strings without converting to int
    a, b = a.lstrip("0") or "0", b.lstrip("0") or "0"
    return (len(a), a) < (len(b), b)


def check_descent(kind: ProcessKind, n: int | str) -> bool:
    s = n if isinstance(n, str) else str(parse_natural(n))
    if not s or not s.isascii() or not s.isdigit():
        raise ParseError(f"not a base-10 digit string: {n!r}")
    if _less(s, str(kind.descent_threshold)):
        raise PreconditionViolated(f"{kind} descent needs n >= {kind.descent_threshold}")
    return _less(str(apply(kind, s)), s)


def trap_bound(kind: ProcessKind, threshold: int | None = None) -> tuple[int, int]:
    """(largest image of any n < threshold, threshold).

    Below 10**k the largest image comes from the all-9 string with k digits.
    """
    t = kind.descent_threshold if threshold is None else threshold
    digits = len(str(t - 1))
    return digits * kind.max_weight, t
