"""Fixed-length digit strings and the 0/1-merged digit multisets.

``Digits`` is an exact positional representation: leading zeros are kept and
nothing is merged.  ``DigitMultiset`` is the coarser object used by the
exhaustive verifier, where the digits 0 and 1 are identified because both
digit maps weight them identically (0! = 1! and 0^0 = 1^1).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import ParseError, ValueTooLarge

MULTISET_ALPHABET = tuple(range(1, 10))


@dataclass(frozen=True)
class Digits:
    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if not self.digits:
            raise ValueError("digit string must be nonempty")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    @property
    def length(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)

    @property
    def value(self) -> int:
        return compose(self)


def parse_natural(n: int | str) -> int:
    """Accept an int or a base-10 digit string and return a nonnegative int."""
    if isinstance(n, bool):
        raise ParseError(f"not a natural number: {n!r}")
    if isinstance(n, int):
        if n < 0:
            raise ParseError(f"negative value: {n}")
        return n
    if not isinstance(n, str) or not n or not n.isascii() or not n.isdigit():
        raise ParseError(f"not a base-10 digit string: {n!r}")
    return int(n)


def decompose(n: int | str, base: int = 10, pad_length: int | None = None) -> Digits:
    value = parse_natural(n)
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if pad_length is not None:
        if pad_length < 1:
            raise ValueError(f"pad_length must be >= 1, got {pad_length}")
        if value >= base**pad_length:
            raise ValueTooLarge(f"{value} needs more than {pad_length} base-{base} digits")
    out = []
    while value:
        value, r = divmod(value, base)
        out.append(r)
    if not out:
        out.append(0)
    if pad_length is not None:
        out.extend([0] * (pad_length - len(out)))
    out.reverse()
    return Digits(base, tuple(out))


def compose(d: Digits) -> int:
    value = 0
    for x in d.digits:
        value = value * d.base + x
    return value


@dataclass(frozen=True)
class DigitMultiset:
    """Counts of the digit values 1..9, with 0 already folded into 1.

    ``counts[k]`` is the multiplicity of digit ``k + 1``.
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != 9:
            raise ValueError("counts must cover the digit values 1..9")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")
        if sum(self.counts) < 1:
            raise ValueError("multiset must be nonempty")

    @classmethod
    def from_digits(cls, digits: Iterable[int]) -> DigitMultiset:
        counts = [0] * 9
        for d in digits:
            if not 0 <= d <= 9:
                raise ValueError(f"not a decimal digit: {d}")
            counts[max(d, 1) - 1] += 1
        return cls(tuple(counts))

    @classmethod
    def from_counts(cls, mapping: Mapping[int, int]) -> DigitMultiset:
        counts = [0] * 9
        for d, c in mapping.items():
            if not 0 <= d <= 9:
                raise ValueError(f"not a decimal digit: {d}")
            counts[max(d, 1) - 1] += c
        return cls(tuple(counts))

    @classmethod
    def of_number(cls, n: int | str) -> DigitMultiset:
        s = str(parse_natural(n))
        return cls.from_digits(int(ch) for ch in s)

    @property
    def size(self) -> int:
        return sum(self.counts)

    def items(self) -> Iterator[tuple[int, int]]:
        """(digit, count) pairs with nonzero count, ascending by digit."""
        for k, c in enumerate(self.counts):
            if c:
                yield k + 1, c

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    def digits(self) -> tuple[int, ...]:
        return tuple(d for d, c in self.items() for _ in range(c))


def enumerate_multisets(r: int) -> Iterator[DigitMultiset]:
    """Yield every size-``r`` multiset over 1..9 once.

    Order is that of nondecreasing digit sequences in lexicographic order
    (111..1 first, 999..9 last), which is stable across runs.
    """
    if r < 1:
        raise ValueError(f"multiset size must be >= 1, got {r}")
    for combo in combinations_with_replacement(MULTISET_ALPHABET, r):
        yield DigitMultiset.from_digits(combo)


def enumerate_multisets_upto(r_max: int) -> Iterator[DigitMultiset]:
    for r in range(1, r_max + 1):
        yield from enumerate_multisets(r)


def multiset_count(r_max: int) -> int:
    if r_max < 1:
        raise ValueError(f"r_max must be >= 1, got {r_max}")
    return sum(comb(r + 8, r) for r in range(1, r_max + 1))


def min_value_of_multiset(m: DigitMultiset) -> int:
    """Smallest natural whose 0/1-merged digit multiset is ``m``.

    When ``m`` has at least one 1, the cheapest spelling leads with a 1 and
    writes the remaining 1s as zeros: {1:3, 5:1} -> 1005.
    """
    ones = m.counts[0]
    rest = [d for d, c in m.items() if d != 1 for _ in range(c)]
    if ones:
        digits = [1] + [0] * (ones - 1) + rest
    else:
        digits = rest
    return int("".join(map(str, digits)))
