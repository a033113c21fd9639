"""Finite posets with a unique bottom, and functions from them into ``L``.

Elements carry string ids.  Internally everything is indexed by position in
``Poset.ids``, which lists the elements by rank (longest chain from the
bottom) and then by a natural sort of the ids, so iteration order is a
deterministic linear extension.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .scale import Level

MAX_BOOLEAN_N = 12


class OrderError(ValueError):
    """The cover relation is cyclic, so it does not generate a partial order."""


class BottomError(ValueError):
    """The order does not have exactly one minimal element."""


class UnknownElementError(LookupError):
    pass


class PosetSizeError(ValueError):
    pass


class ConjugationError(ValueError):
    """A map is not an order-reversing involution, or none is available."""


def natural_key(s: str) -> tuple:
    return tuple((0, int(t)) if t.isdigit() else (1, t) for t in re.findall(r"\d+|\D+", s))


def subset_id(members: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(members)) + "}"


class Poset:
    """Immutable finite poset with a unique bottom.

    Build one with :meth:`from_covers`, :func:`boolean_lattice`, :func:`chain`
    or :func:`parse_poset` rather than calling the constructor directly.
    """

    def __init__(
        self,
        ids: Sequence[str],
        down_sets: Sequence[frozenset[int]],
        lower_covers: Optional[Sequence[frozenset[int]]] = None,
        conjugation: Optional[Sequence[int]] = None,
    ):
        n = len(ids)
        self.ids: tuple[str, ...] = tuple(ids)
        self.index: dict[str, int] = {x: i for i, x in enumerate(self.ids)}
        if len(self.index) != n:
            raise ValueError("duplicate element ids")
        self.down: tuple[frozenset[int], ...] = tuple(down_sets)
        up: list[set[int]] = [set() for _ in range(n)]
        for y in range(n):
            for x in self.down[y]:
                up[x].add(y)
        self.up: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in up)
        if lower_covers is None:
            lower_covers = [self._compute_lower_covers(y) for y in range(n)]
        self.lower_covers: tuple[frozenset[int], ...] = tuple(lower_covers)
        upper: list[set[int]] = [set() for _ in range(n)]
        for y in range(n):
            for x in self.lower_covers[y]:
                upper[x].add(y)
        self.upper_covers: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in upper)

        minimal = [i for i in range(n) if len(self.down[i]) == 1]
        if len(minimal) != 1:
            names = [self.ids[i] for i in minimal]
            raise BottomError(f"expected exactly one minimal element, found {names}")
        self.bottom: int = minimal[0]
        maximal = [i for i in range(n) if len(self.up[i]) == 1]
        self.top: Optional[int] = maximal[0] if len(maximal) == 1 else None
        self.conjugation: Optional[tuple[int, ...]] = None
        if conjugation is not None:
            self.conjugation = tuple(conjugation)
            self._check_conjugation()

    def _compute_lower_covers(self, y: int) -> frozenset[int]:
        strict = self.down[y] - {y}
        return frozenset(
            x for x in strict if not any(x in self.down[z] and z != x for z in strict)
        )

    def _check_conjugation(self) -> None:
        c = self.conjugation
        assert c is not None
        n = len(self)
        if len(c) != n or sorted(c) != list(range(n)):
            raise ConjugationError("conjugation must be a bijection on the elements")
        for x in range(n):
            if c[c[x]] != x:
                raise ConjugationError(f"conjugation is not an involution at {self.ids[x]}")
            for y in range(n):
                if (x in self.down[y]) != (c[y] in self.down[c[x]]):
                    raise ConjugationError("conjugation is not order-reversing")
        if self.top is None or c[self.bottom] != self.top:
            raise ConjugationError("conjugation must map bottom to top")

    @classmethod
    def from_covers(
        cls,
        elements: Iterable[str],
        cover_pairs: Iterable[tuple[str, str]],
        conjugation: Optional[Mapping[str, str]] = None,
    ) -> "Poset":
        """Order generated by ``lo < hi`` for each pair (transitive closure)."""
        elems = list(dict.fromkeys(elements))
        pos = {x: i for i, x in enumerate(elems)}
        succ: list[set[int]] = [set() for _ in elems]
        for lo, hi in cover_pairs:
            for e in (lo, hi):
                if e not in pos:
                    raise UnknownElementError(f"cover mentions unknown element {e!r}")
            if lo == hi:
                raise OrderError(f"cover {lo} < {hi} is a cycle")
            succ[pos[lo]].add(pos[hi])

        # upward reachability, then reject cycles
        reach: list[set[int]] = []
        for i in range(len(elems)):
            seen = {i}
            stack = [i]
            while stack:
                u = stack.pop()
                for v in succ[u]:
                    if v == i:
                        raise OrderError(f"covers contain a cycle through {elems[i]!r}")
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
            reach.append(seen)

        down = [set() for _ in elems]
        for i, r in enumerate(reach):
            for j in r:
                down[j].add(i)
        rank = [0] * len(elems)
        for i in sorted(range(len(elems)), key=lambda i: len(down[i])):
            rank[i] = max((rank[j] + 1 for j in down[i] if j != i), default=0)
        order = sorted(range(len(elems)), key=lambda i: (rank[i], natural_key(elems[i])))
        new = {old: new for new, old in enumerate(order)}
        ids = [elems[i] for i in order]
        down_sets = [frozenset(new[j] for j in down[i]) for i in order]
        conj = None
        if conjugation is not None:
            missing = set(ids) - set(conjugation)
            if missing:
                raise ConjugationError(f"conjugation undefined on {sorted(missing)}")
            idx = {x: i for i, x in enumerate(ids)}
            conj = [idx[conjugation[x]] for x in ids]
        return cls(ids, down_sets, conjugation=conj)

    # -- queries by id -------------------------------------------------

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self):
        return iter(self.ids)

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.ids == other.ids and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.ids, self.down))

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, bottom={self.ids[self.bottom]!r})"

    def idx(self, x: str) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElementError(f"unknown element {x!r}") from None

    def leq(self, x: str, y: str) -> bool:
        return self.idx(x) in self.down[self.idx(y)]

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    def covers(self, x: str, y: str) -> bool:
        """True iff ``x`` covers ``y``."""
        return self.idx(y) in self.lower_covers[self.idx(x)]

    def cover_pairs(self) -> list[tuple[str, str]]:
        """``(lo, hi)`` for each cover, in element order."""
        return [
            (self.ids[x], self.ids[y])
            for y in range(len(self))
            for x in sorted(self.lower_covers[y])
        ]

    def _names(self, s: Iterable[int]) -> frozenset[str]:
        return frozenset(self.ids[i] for i in s)

    def predecessors(self, x: str) -> frozenset[str]:
        """Elements covered by ``x``."""
        return self._names(self.lower_covers[self.idx(x)])

    def successors(self, x: str) -> frozenset[str]:
        return self._names(self.upper_covers[self.idx(x)])

    def down_set(self, x: str) -> frozenset[str]:
        return self._names(self.down[self.idx(x)])

    def strict_down_set(self, x: str) -> frozenset[str]:
        i = self.idx(x)
        return self._names(self.down[i] - {i})

    def segment(self, u: str, v: str) -> frozenset[str]:
        """``[u, v] = {x : u <= x <= v}``."""
        return self._names(self.up[self.idx(u)] & self.down[self.idx(v)])

    def conjugate(self, x: str) -> str:
        if self.conjugation is None:
            raise ConjugationError("poset has no conjugation")
        return self.ids[self.conjugation[self.idx(x)]]

    # index-level helpers used by the transforms
    def segment_idx(self, u: int, v: int) -> list[int]:
        return sorted(self.up[u] & self.down[v])


def boolean_lattice(n: int, max_n: int = MAX_BOOLEAN_N) -> Poset:
    """Subsets of ``{1..n}`` under inclusion, with complement as conjugation.

    Element ``i`` in the result corresponds to the subset listed by
    :func:`boolean_masks`; ids look like ``{}``, ``{1}``, ``{1,2}``.
    """
    if n < 1:
        raise PosetSizeError("n must be >= 1")
    if n > max_n:
        raise PosetSizeError(f"2^{n} elements exceeds the limit 2^{max_n}")
    masks = boolean_masks(n)
    pos = {m: i for i, m in enumerate(masks)}
    ids = [subset_id(mask_members(m)) for m in masks]
    down = []
    covers = []
    for m in masks:
        subs = []
        s = m
        while True:
            subs.append(pos[s])
            if s == 0:
                break
            s = (s - 1) & m
        down.append(frozenset(subs))
        covers.append(frozenset(pos[m & ~(1 << b)] for b in range(n) if m >> b & 1))
    full = (1 << n) - 1
    conj = [pos[full & ~m] for m in masks]
    return Poset(ids, down, covers, conj)


def boolean_masks(n: int) -> list[int]:
    """Bitmasks of ``2^N`` in the element order used by :func:`boolean_lattice`."""
    return sorted(range(1 << n), key=lambda m: (bin(m).count("1"), mask_members(m)))


def mask_members(mask: int) -> tuple[int, ...]:
    """1-based members of the subset encoded by ``mask``."""
    return tuple(b + 1 for b in range(mask.bit_length()) if mask >> b & 1)


def chain(length: int) -> Poset:
    """Linear order ``0 < 1 < ... < length`` (``length + 1`` elements)."""
    ids = [str(i) for i in range(length + 1)]
    return Poset.from_covers(ids, [(ids[i], ids[i + 1]) for i in range(length)])


def diamond() -> Poset:
    """``0 < a, b < c`` with ``a, b`` incomparable."""
    return Poset.from_covers("0abc", [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c")])


@dataclass(frozen=True)
class LFunction:
    """A function ``X -> L``; ``values[i]`` is the value at ``poset.ids[i]``."""

    poset: Poset
    values: tuple[Level, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.poset):
            raise ValueError("function must be total on the poset")

    @classmethod
    def from_mapping(cls, poset: Poset, mapping: Mapping[str, Level]) -> "LFunction":
        missing = [x for x in poset.ids if x not in mapping]
        if missing:
            raise ValueError(f"function undefined on {missing}")
        extra = [x for x in mapping if x not in poset]
        if extra:
            raise UnknownElementError(f"unknown elements {extra}")
        return cls(poset, tuple(mapping[x] for x in poset.ids))

    @classmethod
    def constant(cls, poset: Poset, c: Level) -> "LFunction":
        return cls(poset, (c,) * len(poset))

    def __getitem__(self, x: str) -> Level:
        return self.values[self.poset.idx(x)]

    def as_dict(self) -> dict[str, Level]:
        return dict(zip(self.poset.ids, self.values))

    def __neg__(self) -> "LFunction":
        return LFunction(self.poset, tuple(-v for v in self.values))

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)


def is_isotone(g: LFunction) -> bool:
    p, v = g.poset, g.values
    return all(v[x] <= v[y] for y in range(len(p)) for x in p.lower_covers[y])


def is_abs_isotone(g: LFunction) -> bool:
    p, v = g.poset, g.values
    return all(abs(v[x]) <= abs(v[y]) for y in range(len(p)) for x in p.lower_covers[y])


# -- text formats ----------------------------------------------------------


def parse_poset(text: str) -> Poset:
    """Read ``bottom: <id>`` / ``elements: <ids>`` / ``cover: <lo> <hi>`` lines."""
    bottom = None
    elements: list[str] = []
    covers: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key: value', got {raw!r}")
        key, fields = key.strip(), rest.split()
        if key == "bottom" and len(fields) == 1:
            bottom = fields[0]
        elif key == "elements":
            elements.extend(fields)
        elif key == "cover" and len(fields) == 2:
            covers.append((fields[0], fields[1]))
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    if not elements:
        raise ValueError("poset file lists no elements")
    p = Poset.from_covers(elements, covers)
    if bottom is not None and p.ids[p.bottom] != bottom:
        raise BottomError(f"declared bottom {bottom!r} but the minimum is {p.ids[p.bottom]!r}")
    return p


def format_poset(p: Poset) -> str:
    lines = [f"bottom: {p.ids[p.bottom]}", "elements: " + " ".join(p.ids)]
    lines += [f"cover: {lo} {hi}" for lo, hi in p.cover_pairs()]
    return "\n".join(lines) + "\n"


def parse_function(text: str, poset: Poset) -> LFunction:
    """One ``<element-id> <signed-int>`` per line."""
    values: dict[str, Level] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected '<id> <level>', got {raw!r}")
        if fields[0] in values:
            raise ValueError(f"line {lineno}: duplicate element {fields[0]!r}")
        try:
            values[fields[0]] = int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: bad level {fields[1]!r}") from None
    return LFunction.from_mapping(poset, values)


def format_function(g: LFunction) -> str:
    return "".join(f"{x} {v}\n" for x, v in zip(g.poset.ids, g.values))
