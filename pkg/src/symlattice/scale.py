"""Finite symmetric linear scales and the symmetric maximum / minimum.

A level of the symmetric scale ``L = L- u L+`` is stored as a signed ``int``
``i`` with ``|i| <= k``: ``i > 0`` is the positive level ``l_i``, ``i < 0`` its
reflected copy ``-l_|i|`` and ``0`` the shared zero.  Since Python has no
negative zero, ``-0`` and ``0`` are the same object, which is exactly the
identification the construction requires.

The bare functions (:func:`sym_max`, :func:`sym_min`, ...) do no range checks
and are what the inner loops use.  :class:`Scale` wraps them with validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Level = int

ZERO: Level = 0


class InvalidLevelError(ValueError):
    """A level lies outside ``[-k, k]`` for its scale."""


class DomainError(ValueError):
    """An operation defined on ``L+`` only received a negative level."""


def sym_max(a: Level, b: Level) -> Level:
    """Symmetric maximum: the argument larger in absolute value, 0 if ``b == -a``."""
    if a == -b:
        return 0
    return a if abs(a) > abs(b) or a == b else b


def sym_min(a: Level, b: Level) -> Level:
    """Symmetric minimum: magnitude ``|a| ^ |b|``, negative iff signs are opposite."""
    m = min(abs(a), abs(b))
    if (a > 0 and b < 0) or (a < 0 and b > 0):
        return -m
    return m


def negate(a: Level) -> Level:
    return -a


def absolute(a: Level) -> Level:
    return abs(a)


def sym_max_fold(items: Iterable[Level]) -> Level:
    """Left fold of :func:`sym_max`; meaningful only when the items are associative."""
    acc = 0
    for x in items:
        acc = sym_max(acc, x)
    return acc


@dataclass(frozen=True)
class Scale:
    """The symmetric scale built on ``L+ = {0 = l_0 < l_1 < ... < l_k = 1}``."""

    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"scale size must be an integer >= 1, got {self.k!r}")

    @property
    def top(self) -> Level:
        return self.k

    @property
    def bottom(self) -> Level:
        return -self.k

    def levels(self) -> range:
        """All of ``L`` in increasing order."""
        return range(-self.k, self.k + 1)

    def positive_levels(self) -> range:
        """``L+`` in increasing order (zero included)."""
        return range(0, self.k + 1)

    def __iter__(self) -> Iterator[Level]:
        return iter(self.levels())

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int) and -self.k <= a <= self.k

    def check(self, a: Level) -> Level:
        if not isinstance(a, int) or isinstance(a, bool):
            raise InvalidLevelError(f"level must be an int, got {a!r}")
        if not -self.k <= a <= self.k:
            raise InvalidLevelError(f"level {a} outside [-{self.k}, {self.k}]")
        return a

    def check_positive(self, a: Level) -> Level:
        self.check(a)
        if a < 0:
            raise DomainError(f"level {a} is not in L+")
        return a

    def sym_max(self, a: Level, b: Level) -> Level:
        return sym_max(self.check(a), self.check(b))

    def sym_min(self, a: Level, b: Level) -> Level:
        return sym_min(self.check(a), self.check(b))

    def negate(self, a: Level) -> Level:
        return -self.check(a)

    def abs(self, a: Level) -> Level:
        return abs(self.check(a))

    def sign(self, a: Level) -> Level:
        """``-1``, ``0`` or ``1`` of the scale, i.e. ``-k``, ``0`` or ``k``."""
        self.check(a)
        return self.k if a > 0 else (-self.k if a < 0 else 0)

    def conjugate(self, a: Level) -> Level:
        """Order-reversing involution ``l_i -> l_{k-i}`` on ``L+``."""
        return self.k - self.check_positive(a)

    def weber_diff(self, a: Level, b: Level) -> Level:
        """``inf{c : b v c >= a}``: ``a`` if ``a > b``, else zero."""
        self.check_positive(a)
        self.check_positive(b)
        return a if a > b else 0

    def parse(self, text: str) -> Level:
        """Read the textual form (a signed decimal integer)."""
        try:
            value = int(text.strip())
        except ValueError:
            raise InvalidLevelError(f"not a level: {text!r}") from None
        return self.check(value)
