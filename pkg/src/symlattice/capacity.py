"""Capacities on ``2^N`` valued in ``L+``, their Möbius transforms, and the
(symmetric) Sugeno integral.

Set functions are tuples indexed by bitmask: bit ``i-1`` set means criterion
``i`` is in the subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional, Sequence, Union

from . import mobius
from .poset import LFunction, Poset, boolean_lattice, boolean_masks, mask_members
from .rules import RuleId, evaluate
from .scale import DomainError, Level, Scale, sym_max

MAX_N = 12

SetFunction = tuple[Level, ...]


class CapacityError(ValueError):
    """Endpoint or monotonicity violation; ``witness`` holds the offending subsets."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class NormalizationError(ValueError):
    pass


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subset_label(mask: int) -> str:
    """Capacity-file spelling of a subset: ``{}`` or ``1,3``."""
    members = mask_members(mask)
    return ",".join(map(str, members)) if members else "{}"


def parse_subset(text: str, n: int) -> int:
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    mask = 0
    for tok in filter(None, (t.strip() for t in body.split(","))):
        i = int(tok)
        if not 1 <= i <= n:
            raise ValueError(f"criterion {i} outside 1..{n}")
        mask |= 1 << (i - 1)
    return mask


@dataclass(frozen=True)
class Capacity:
    n: int
    scale: Scale
    values: SetFunction

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be in 1..{MAX_N}")
        if len(self.values) != 1 << self.n:
            raise ValueError(f"capacity needs {1 << self.n} values, got {len(self.values)}")
        for a in self.values:
            self.scale.check_positive(a)
        v = self.values
        if v[0] != 0 or v[-1] != self.scale.top:
            raise CapacityError("capacity must be 0 on the empty set and top on N")
        for a in range(len(v)):
            for b in range(self.n):
                bigger = a | (1 << b)
                if v[a] > v[bigger]:
                    raise CapacityError(
                        f"not isotone: v({subset_label(a)}) = {v[a]} > "
                        f"v({subset_label(bigger)}) = {v[bigger]}",
                        witness=(a, bigger),
                    )

    def __call__(self, members) -> Level:
        mask = members if isinstance(members, int) else sum(1 << (i - 1) for i in set(members))
        return self.values[mask]

    def to_lfunction(self) -> LFunction:
        return set_function_to_lfunction(self.values, self.n)


def capacity_from_table(
    n: int, values: Union[Sequence[Level], Mapping[int, Level]], scale: Scale
) -> Capacity:
    """Validated capacity from a mask-indexed sequence or a ``{mask: level}`` map."""
    if isinstance(values, Mapping):
        missing = [subset_label(m) for m in range(1 << n) if m not in values]
        if missing:
            raise CapacityError(f"missing subsets: {' '.join(missing)}")
        values = [values[m] for m in range(1 << n)]
    return Capacity(n, scale, tuple(values))


@lru_cache(maxsize=None)
def _lattice(n: int) -> tuple[Poset, tuple[int, ...]]:
    return boolean_lattice(n, MAX_N), tuple(boolean_masks(n))


def set_function_to_lfunction(values: Sequence[Level], n: int) -> LFunction:
    p, masks = _lattice(n)
    return LFunction(p, tuple(values[m] for m in masks))


def lfunction_to_set_function(g: LFunction, n: int) -> SetFunction:
    _, masks = _lattice(n)
    out = [0] * (1 << n)
    for m, val in zip(masks, g.values):
        out[m] = val
    return tuple(out)


def conjugate_capacity(v: Capacity) -> Capacity:
    full = full_mask(v.n)
    return Capacity(v.n, v.scale, tuple(v.scale.conjugate(v.values[full & ~a]) for a in range(1 << v.n)))


def _check_weights(weights: Sequence[Level], scale: Scale) -> None:
    if not weights:
        raise ValueError("need at least one weight")
    for w in weights:
        scale.check_positive(w)
    if max(weights) != scale.top:
        raise NormalizationError("possibility weights must reach the top of the scale")


def possibility(weights: Sequence[Level], scale: Scale) -> Capacity:
    """``Pi(A) = max_{i in A} pi(i)``."""
    _check_weights(weights, scale)
    n = len(weights)
    vals = [0] * (1 << n)
    for a in range(1, 1 << n):
        low = a & -a
        vals[a] = max(vals[a ^ low], weights[low.bit_length() - 1])
    return Capacity(n, scale, tuple(vals))


def necessity(weights: Sequence[Level], scale: Scale) -> Capacity:
    return conjugate_capacity(possibility(weights, scale))


def mobius_possibility_closed(weights: Sequence[Level], scale: Scale) -> SetFunction:
    """Transform of ``Pi``: ``pi(i)`` on each singleton, zero elsewhere."""
    _check_weights(weights, scale)
    out = [0] * (1 << len(weights))
    for i, w in enumerate(weights):
        out[1 << i] = w
    return tuple(out)


def mobius_necessity_closed(weights: Sequence[Level], scale: Scale) -> SetFunction:
    """Transform of the necessity measure, supported on a chain.

    With criteria sorted by increasing weight ``s_1, ..., s_n`` (stable sort)
    the support is ``{s_{i+1}, ..., s_n}`` carrying ``conj(pi(s_i))``, zeroed
    when ``pi(s_i) = pi(s_{i+1})``.  ``i = 0`` stands for ``A = N`` with
    ``pi(s_0) = 0``, i.e. ``m(N)`` is top unless the smallest weight is zero.
    """
    _check_weights(weights, scale)
    n = len(weights)
    order = sorted(range(n), key=lambda i: weights[i])
    sorted_w = [0] + [weights[i] for i in order]
    out = [0] * (1 << n)
    for i in range(n):
        a = sum(1 << order[j] for j in range(i, n))
        if sorted_w[i] != sorted_w[i + 1]:
            out[a] = scale.conjugate(sorted_w[i])
    return tuple(out)


def capacity_mobius(v: Capacity, rule: RuleId = RuleId.SPLITTING) -> SetFunction:
    """Canonical Möbius transform of ``v`` computed on the Boolean lattice."""
    return lfunction_to_set_function(mobius.canonical_mobius(v.to_lfunction(), rule), v.n)


def capacity_mobius_evenodd(v: Capacity) -> SetFunction:
    """``m(A) = V_{even |A\\B|} v(B)  symmax  -(V_{odd |A\\B|} v(B))``."""
    out = []
    for a in range(1 << v.n):
        even = odd = 0
        b = a
        while True:
            if bin(a & ~b).count("1") % 2:
                odd = max(odd, v.values[b])
            else:
                even = max(even, v.values[b])
            if b == 0:
                break
            b = (b - 1) & a
        out.append(sym_max(even, -odd))
    return tuple(out)


def _check_profile(v: Capacity, f: Sequence[Level]) -> None:
    if len(f) != v.n:
        raise ValueError(f"profile has {len(f)} scores, capacity has {v.n} criteria")
    for x in f:
        v.scale.check(x)


def sugeno(v: Capacity, f: Sequence[Level]) -> Level:
    """Sugeno integral ``V_A [ v(A) ^ min_{i in A} f(i) ]`` of a non-negative profile."""
    _check_profile(v, f)
    if any(x < 0 for x in f):
        raise DomainError("the Sugeno integral needs a non-negative profile")
    best = 0
    for a in range(1, 1 << v.n):
        low = min(f[i - 1] for i in mask_members(a))
        best = max(best, min(v.values[a], low))
    return best


def sugeno_sorted(v: Capacity, f: Sequence[Level]) -> Level:
    """Same integral via increasing rearrangement: ``V_i f(s_i) ^ v({s_i..s_n})``."""
    _check_profile(v, f)
    if any(x < 0 for x in f):
        raise DomainError("the Sugeno integral needs a non-negative profile")
    order = sorted(range(v.n), key=lambda i: f[i])
    best = 0
    upper = full_mask(v.n)
    for i in order:
        best = max(best, min(f[i], v.values[upper]))
        upper &= ~(1 << i)
    return best


def symmetric_sugeno(v: Capacity, f: Sequence[Level], rule: Optional[RuleId] = None) -> Level:
    """``S(f+) symmax -S(f-)``; two terms are always associative, so ``rule`` is inert."""
    _check_profile(v, f)
    pos = sugeno(v, [max(x, 0) for x in f])
    neg = sugeno(v, [max(-x, 0) for x in f])
    return evaluate(rule or RuleId.SPLITTING, [pos, -neg])


# -- text formats ----------------------------------------------------------


def parse_capacity(text: str) -> Capacity:
    """``n: <int>``, ``scale: <k>``, then one ``<subset> <level>`` line per subset."""
    n = k = None
    entries: dict[int, Level] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if sep and head.strip() in ("n", "scale"):
            value = int(rest)
            if head.strip() == "n":
                n = value
            else:
                k = value
            continue
        if n is None or k is None:
            raise ValueError(f"line {lineno}: 'n:' and 'scale:' must precede the table")
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected '<subset> <level>', got {raw!r}")
        mask = parse_subset(fields[0], n)
        if mask in entries:
            raise ValueError(f"line {lineno}: subset {fields[0]} listed twice")
        entries[mask] = int(fields[1])
    if n is None or k is None:
        raise ValueError("capacity file needs 'n:' and 'scale:' headers")
    return capacity_from_table(n, entries, Scale(k))


def format_capacity(v: Capacity) -> str:
    lines = [f"n: {v.n}", f"scale: {v.scale.k}"]
    lines += format_set_function(v.values, v.n).splitlines()
    return "\n".join(lines) + "\n"


def format_set_function(values: Sequence[Level], n: int) -> str:
    """One ``<subset> <level>`` line per subset, in lattice order."""
    _, masks = _lattice(n)
    return "".join(f"{subset_label(m)} {values[m]}\n" for m in masks)
