"""Computation rules for the non-associative symmetric maximum.

A sequence of levels is a plain tuple of ints.  A rule deletes an index set
``J`` so that what remains fulfills associativity; the rule's value is the
(now well-defined) symmetric-max fold of the remainder, zero when everything
was deleted.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .scale import Level, sym_max, sym_max_fold

DEFAULT_ACHIEVABLE_BOUND = 8
DEFAULT_MAX_LEN = 5
DEFAULT_K = 3


class NonAssociativeError(ValueError):
    """The sequence has several values depending on parenthesization."""


class SequenceTooLongError(ValueError):
    """Exhaustive enumeration was asked for a sequence beyond its bound."""


class RuleId(enum.Enum):
    SPLITTING = "splitting"
    WEAK = "weak"
    STRONG = "strong"
    OPTIMISTIC = "optimistic"
    PESSIMISTIC = "pessimistic"

    @classmethod
    def from_name(cls, name: str) -> "RuleId":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(r.value for r in cls)
            raise ValueError(f"unknown rule {name!r} (choose from {choices})") from None

    def __str__(self) -> str:
        return self.value


ALL_RULES: tuple[RuleId, ...] = tuple(RuleId)


@dataclass(frozen=True)
class RuleOutcome:
    """Indices deleted by a rule and the fold of what is left."""

    deleted: frozenset[int]
    result: Level

    def kept(self, seq: Sequence[Level]) -> tuple[Level, ...]:
        return tuple(x for i, x in enumerate(seq) if i not in self.deleted)


def parse_sequence(text: str) -> tuple[Level, ...]:
    """Parse ``"3,3,-2"``; the empty string is the empty sequence."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse sequence {text!r}") from None


def fulfills_associativity(seq: Sequence[Level]) -> bool:
    """True iff ``len(seq) <= 2`` or ``max(seq) != -min(seq)``.

    An all-zero sequence is treated as associative as well: its extreme
    "opposite pair" is ``(0, 0)``, and every parenthesization gives zero.
    """
    if len(seq) <= 2:
        return True
    hi = max(seq)
    return hi == 0 or hi != -min(seq)


def assoc_fold(seq: Sequence[Level]) -> Level:
    """The common value of every parenthesization of an associative sequence."""
    if not fulfills_associativity(seq):
        raise NonAssociativeError(f"sequence {tuple(seq)} does not fulfill associativity")
    return sym_max_fold(seq)


def _extreme_pair(seq: Sequence[Level], idx: Iterable[int]) -> Optional[Level]:
    """Positive ``a`` with ``a = max``, ``-a = min`` over ``idx`` if that breaks associativity."""
    vals = [seq[i] for i in idx]
    if fulfills_associativity(vals):
        return None
    return max(vals)


def weak_deletions(seq: Sequence[Level]) -> frozenset[int]:
    """Index set of the sequence of maximal opposite terms.

    Every occurrence of the current extreme pair ``(a, -a)`` is removed, and the
    process repeats on what remains while it has at least three terms and is
    still not associative.
    """
    remaining = list(range(len(seq)))
    deleted: set[int] = set()
    while (a := _extreme_pair(seq, remaining)) is not None:
        gone = [i for i in remaining if seq[i] in (a, -a)]
        deleted.update(gone)
        remaining = [i for i in remaining if seq[i] not in (a, -a)]
    return frozenset(deleted)


def strong_deletions(seq: Sequence[Level]) -> frozenset[int]:
    """Index set of the restricted sequence of maximal opposite terms.

    One pair ``(a, -a)`` at a time is removed (lowest indices first) until the
    remainder is associative.
    """
    remaining = list(range(len(seq)))
    deleted: set[int] = set()
    while (a := _extreme_pair(seq, remaining)) is not None:
        i = next(i for i in remaining if seq[i] == a)
        j = next(j for j in remaining if seq[j] == -a)
        deleted.update((i, j))
        remaining = [u for u in remaining if u not in (i, j)]
    return frozenset(deleted)


def _opt_pes_deletions(seq: Sequence[Level], optimistic: bool) -> frozenset[int]:
    a = _extreme_pair(seq, range(len(seq)))
    if a is None:
        return frozenset()
    pos = [i for i, x in enumerate(seq) if x == a]
    neg = [i for i, x in enumerate(seq) if x == -a]
    kp, km = len(pos), len(neg)
    if (kp == 1 and km <= 2) or (km == 1 and kp <= 2):
        return frozenset(range(len(seq)))
    # a lone survivor cannot outlive the opposite copies: only 0 is reachable
    if (optimistic and kp == 1) or (not optimistic and km == 1):
        return frozenset(range(len(seq)))
    if optimistic:
        return frozenset(pos[:-1] + neg)
    return frozenset(pos + neg[:-1])


def rule_deletions(rule: RuleId, seq: Sequence[Level]) -> frozenset[int]:
    if rule is RuleId.SPLITTING:
        return frozenset() if fulfills_associativity(seq) else frozenset(range(len(seq)))
    if rule is RuleId.WEAK:
        return weak_deletions(seq)
    if rule is RuleId.STRONG:
        return strong_deletions(seq)
    if rule is RuleId.OPTIMISTIC:
        return _opt_pes_deletions(seq, optimistic=True)
    if rule is RuleId.PESSIMISTIC:
        return _opt_pes_deletions(seq, optimistic=False)
    raise ValueError(f"unknown rule {rule!r}")


def apply_rule(rule: RuleId, seq: Sequence[Level]) -> RuleOutcome:
    """Run ``rule`` on ``seq``; the result is recomputed from the kept terms."""
    deleted = rule_deletions(rule, seq)
    kept = [x for i, x in enumerate(seq) if i not in deleted]
    return RuleOutcome(deleted, assoc_fold(kept))


def evaluate(rule: RuleId, seq: Sequence[Level]) -> Level:
    """Shorthand for ``apply_rule(rule, seq).result``."""
    if fulfills_associativity(seq):
        return sym_max_fold(seq)
    return apply_rule(rule, seq).result


@lru_cache(maxsize=None)
def _achievable(ms: tuple[Level, ...]) -> frozenset[Level]:
    if len(ms) == 1:
        return frozenset(ms)
    out: set[Level] = set()
    seen: set[tuple[Level, Level]] = set()
    for i, j in itertools.combinations(range(len(ms)), 2):
        pair = (ms[i], ms[j])
        if pair in seen:
            continue
        seen.add(pair)
        rest = [x for u, x in enumerate(ms) if u != i and u != j]
        rest.append(sym_max(*pair))
        out |= _achievable(tuple(sorted(rest)))
    return frozenset(out)


def achievable_results(
    seq: Sequence[Level], bound: int = DEFAULT_ACHIEVABLE_BOUND
) -> frozenset[Level]:
    """Every value some (commutative) parenthesization of ``seq`` can produce."""
    if len(seq) > bound:
        raise SequenceTooLongError(f"sequence of length {len(seq)} exceeds bound {bound}")
    if not seq:
        return frozenset({0})
    return _achievable(tuple(sorted(seq)))


def bounded_sequences(max_len: int = DEFAULT_MAX_LEN, k: int = DEFAULT_K) -> Iterator[tuple[Level, ...]]:
    """All sequences over ``[-k, k]`` of length ``0..max_len``."""
    levels = range(-k, k + 1)
    for n in range(max_len + 1):
        yield from itertools.product(levels, repeat=n)


def refinement_witness(
    r1: RuleId, r2: RuleId, max_len: int = DEFAULT_MAX_LEN, k: int = DEFAULT_K
) -> Optional[tuple[Level, ...]]:
    """First bounded sequence on which ``J1`` does not contain ``J2``."""
    for seq in bounded_sequences(max_len, k):
        if not rule_deletions(r1, seq) >= rule_deletions(r2, seq):
            return seq
    return None


def rule_refines(
    r1: RuleId, r2: RuleId, max_len: int = DEFAULT_MAX_LEN, k: int = DEFAULT_K
) -> bool:
    """Bounded check of ``r1 [= r2``: ``J1 >= J2`` on every sequence within bounds."""
    return refinement_witness(r1, r2, max_len, k) is None


def is_cancelling(rule: RuleId, seq: Sequence[Level]) -> bool:
    return evaluate(rule, seq) == 0


def more_discriminating(
    r1: RuleId, r2: RuleId, max_len: int = DEFAULT_MAX_LEN, k: int = DEFAULT_K
) -> bool:
    """Bounded check that every cancelling sequence of ``r1`` also cancels ``r2``."""
    return all(
        is_cancelling(r2, seq)
        for seq in bounded_sequences(max_len, k)
        if is_cancelling(r1, seq)
    )
