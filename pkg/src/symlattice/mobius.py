"""Möbius inversion on finite posets: the classical integer version and the
ordinal version over a symmetric scale.

The classical layer (``classical_*``) is exact integer arithmetic and exists
mainly as a reference.  The ordinal layer replaces ``+`` / ``x`` with the
symmetric maximum / minimum, each sum being evaluated under a computation rule.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .poset import ConjugationError, LFunction, Poset, is_abs_isotone, is_isotone
from .rules import RuleId, evaluate
from .scale import Level, Scale, sym_min

MAX_ENUM_ELEMENTS = 5
MAX_ENUM_K = 2


class PosetMismatchError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class EnumerationSizeError(ValueError):
    pass


class NotAbsIsotoneWarning(UserWarning):
    """|g| is not isotone, so the canonical transform need not solve the inversion."""


# -- bi-functions ------------------------------------------------------------


@dataclass(frozen=True)
class BiFunction:
    """A function ``X x X -> values`` stored as a dense matrix in element order.

    Used for both the integer-valued classical functions and the ``L``-valued
    ordinal ones; which one it is depends only on what is stored.
    """

    poset: Poset
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, xy: tuple[str, str]) -> int:
        x, y = xy
        return self.values[self.poset.idx(x)][self.poset.idx(y)]

    @classmethod
    def from_rule(cls, poset: Poset, fn) -> "BiFunction":
        n = len(poset)
        return cls(poset, tuple(tuple(fn(x, y) for y in range(n)) for x in range(n)))

    def in_G(self, scale: Scale) -> bool:
        """Diagonal equal to the scale's top and zero below the diagonal."""
        p = self.poset
        for x in range(len(p)):
            if self.values[x][x] != scale.top:
                return False
            for y in p.down[x]:
                if y != x and self.values[x][y] != 0:
                    return False
        return True


ZBiFunction = BiFunction
LBiFunction = BiFunction


def _same_poset(a: Poset, b: Poset) -> None:
    if a is not b and a != b:
        raise PosetMismatchError("functions live on different posets")


# -- classical layer ---------------------------------------------------------


def classical_zeta(p: Poset) -> ZBiFunction:
    return BiFunction.from_rule(p, lambda x, y: 1 if x in p.down[y] else 0)


def classical_delta(p: Poset) -> ZBiFunction:
    return BiFunction.from_rule(p, lambda x, y: 1 if x == y else 0)


def classical_mobius(p: Poset) -> ZBiFunction:
    """Möbius function by the recursion ``mu(x,y) = -sum_{x<=t<y} mu(x,t)``."""
    n = len(p)
    mu = [[0] * n for _ in range(n)]
    for x in range(n):
        mu[x][x] = 1
        # ids are a linear extension, so every t < y is finished before y
        for y in sorted(p.up[x]):
            if y != x:
                mu[x][y] = -sum(mu[x][t] for t in p.segment_idx(x, y) if t != y)
    return BiFunction(p, tuple(tuple(r) for r in mu))


def classical_star(f: ZBiFunction, g: ZBiFunction) -> ZBiFunction:
    """``(f*g)(x,y) = sum_{x<=u<=y} f(x,u) g(u,y)``."""
    _same_poset(f.poset, g.poset)
    p = f.poset
    return BiFunction.from_rule(
        p, lambda x, y: sum(f.values[x][u] * g.values[u][y] for u in p.segment_idx(x, y))
    )


def _submasks(a: int) -> Iterator[int]:
    b = a
    while True:
        yield b
        if b == 0:
            return
        b = (b - 1) & a


def _set_function_size(v: Sequence[int]) -> int:
    n = len(v).bit_length() - 1
    if len(v) != 1 << n:
        raise ValueError(f"a set function needs 2^n entries, got {len(v)}")
    if n > 12:
        raise ValueError("set functions are limited to n <= 12")
    return n


def classical_set_mobius(v: Sequence[int]) -> tuple[int, ...]:
    """``m(A) = sum_{B<=A} (-1)^|A\\B| v(B)``; ``v`` is indexed by bitmask."""
    _set_function_size(v)
    return tuple(
        sum((-1) ** bin(a & ~b).count("1") * v[b] for b in _submasks(a)) for a in range(len(v))
    )


def classical_set_zeta(m: Sequence[int]) -> tuple[int, ...]:
    """``v(A) = sum_{B<=A} m(B)``."""
    _set_function_size(m)
    return tuple(sum(m[b] for b in _submasks(a)) for a in range(len(m)))


# -- ordinal layer -----------------------------------------------------------


def ordinal_zeta(p: Poset, scale: Scale) -> LBiFunction:
    return BiFunction.from_rule(p, lambda x, y: scale.top if x in p.down[y] else 0)


def ordinal_delta(p: Poset, scale: Scale) -> LBiFunction:
    return BiFunction.from_rule(p, lambda x, y: scale.top if x == y else 0)


def canonical_zeta_inverse(p: Poset, scale: Scale) -> LBiFunction:
    """Top on the diagonal, minus top on covers, zero elsewhere."""

    def entry(x: int, y: int) -> Level:
        if x == y:
            return scale.top
        return -scale.top if x in p.lower_covers[y] else 0

    return BiFunction.from_rule(p, entry)


def ostar_fn(f: LFunction, h: LBiFunction, rule: RuleId) -> LFunction:
    """``(f (*) h)(y) = <V_{u<=y} f(u) ^ h(u,y)>`` under ``rule``."""
    _same_poset(f.poset, h.poset)
    p = f.poset
    return LFunction(
        p,
        tuple(
            evaluate(rule, [sym_min(f.values[u], h.values[u][y]) for u in sorted(p.down[y])])
            for y in range(len(p))
        ),
    )


def ostar_bi(h1: LBiFunction, h2: LBiFunction, rule: RuleId) -> LBiFunction:
    """``(h1 (*) h2)(x,y) = <V_{x<=u<=y} h1(x,u) ^ h2(u,y)>`` under ``rule``."""
    _same_poset(h1.poset, h2.poset)
    p = h1.poset
    return BiFunction.from_rule(
        p,
        lambda x, y: evaluate(
            rule, [sym_min(h1.values[x][u], h2.values[u][y]) for u in p.segment_idx(x, y)]
        ),
    )


def verify_zeta_inverse(candidate: LBiFunction, rule: RuleId, scale: Scale) -> bool:
    """Check that ``candidate (*) zeta = delta`` entrywise under ``rule``."""
    if not candidate.in_G(scale):
        return False
    p = candidate.poset
    rows = candidate.values
    for x in range(len(p)):
        for y in p.up[x]:
            if y != x and evaluate(rule, [rows[x][u] for u in p.segment_idx(x, y)]) != 0:
                return False
    return True


def _inverse_rows(p: Poset, rule: RuleId, scale: Scale, x: int) -> list[dict[int, Level]]:
    """All assignments of row ``x`` above the diagonal solving the inverse equations."""
    above = sorted(y for y in p.up[x] if y != x)
    out: list[dict[int, Level]] = []
    row: dict[int, Level] = {x: scale.top}

    def search(i: int) -> None:
        if i == len(above):
            out.append(dict(row))
            return
        y = above[i]
        seg = p.segment_idx(x, y)
        for v in scale.levels():
            row[y] = v
            if evaluate(rule, [row[u] for u in seg]) == 0:
                search(i + 1)
        del row[y]

    search(0)
    return out


def enumerate_zeta_inverses(
    p: Poset,
    rule: RuleId,
    scale: Scale,
    max_elements: int = MAX_ENUM_ELEMENTS,
    max_k: int = MAX_ENUM_K,
) -> list[LBiFunction]:
    """Every member of G solving the inverse equations, by exhaustive search.

    Rows are independent, so each row is searched on its own (entries in
    linear-extension order, pruning as soon as an equation fails) and the
    solutions are the product of the row solutions.
    """
    if len(p) > max_elements or scale.k > max_k:
        raise EnumerationSizeError(
            f"enumeration limited to |X| <= {max_elements} and k <= {max_k}"
        )
    n = len(p)
    per_row = [_inverse_rows(p, rule, scale, x) for x in range(n)]
    result = []
    for rows in itertools.product(*per_row):
        result.append(
            BiFunction(p, tuple(tuple(rows[x].get(y, 0) for y in range(n)) for x in range(n)))
        )
    return result


def eval_primitive(f: LFunction, rule: RuleId) -> LFunction:
    """``g(x) = <V_{y<=x} f(y)>`` under ``rule``."""
    p = f.poset
    return LFunction(
        p, tuple(evaluate(rule, [f.values[y] for y in sorted(p.down[x])]) for x in range(len(p)))
    )


def solves(f: LFunction, g: LFunction, rule: RuleId) -> bool:
    """Whether ``f`` is a Möbius transform of ``g`` under ``rule``."""
    return eval_primitive(f, rule) == g


def check_star_condition(g: LFunction) -> bool:
    """At every x, ``g(x) = 0`` or ``|g(x)| >= |g(y)|`` for each lower cover y.

    Necessary for a solution under the splitting rule, not sufficient.
    """
    p, v = g.poset, g.values
    return all(
        v[x] == 0 or all(abs(v[x]) >= abs(v[y]) for y in p.lower_covers[x])
        for x in range(len(p))
    )


def canonical_mobius(g: LFunction, rule: RuleId) -> LFunction:
    """``m(x) = <g(x) V [ -V_{y covered by x} g(y) ]>``.

    Always computable; emits :class:`NotAbsIsotoneWarning` when ``|g|`` is not
    isotone, since the result then carries no solution guarantee.
    """
    if not is_abs_isotone(g):
        warnings.warn("|g| is not isotone", NotAbsIsotoneWarning, stacklevel=2)
    p, v = g.poset, g.values
    return LFunction(
        p,
        tuple(
            evaluate(rule, [v[x]] + [-v[y] for y in sorted(p.lower_covers[x])])
            for x in range(len(p))
        ),
    )


def _require_nonneg_isotone(g: LFunction) -> None:
    if not g.is_nonnegative():
        raise PreconditionError("function must take values in L+")
    if not is_isotone(g):
        raise PreconditionError("function must be isotone")


@dataclass(frozen=True)
class SolutionInterval:
    m_lower: LFunction
    m_upper: LFunction

    def __contains__(self, f: LFunction) -> bool:
        return all(
            lo <= v <= hi for lo, v, hi in zip(self.m_lower.values, f.values, self.m_upper.values)
        )

    def members(self) -> Iterator[LFunction]:
        ranges = [range(lo, hi + 1) for lo, hi in zip(self.m_lower.values, self.m_upper.values)]
        for vals in itertools.product(*ranges):
            yield LFunction(self.m_lower.poset, vals)


def solution_interval(g: LFunction) -> SolutionInterval:
    """Non-negative solutions of the inversion for a non-negative isotone ``g``."""
    _require_nonneg_isotone(g)
    p, v = g.poset, g.values
    lower = tuple(
        v[x] if all(v[x] > v[y] for y in p.lower_covers[x]) else 0 for x in range(len(p))
    )
    return SolutionInterval(LFunction(p, lower), g)


def derivative(g: LFunction) -> LFunction:
    """``g'(x)`` is zero where ``g(x)`` equals the sup of g strictly below x, else ``g(x)``."""
    _require_nonneg_isotone(g)
    p, v = g.poset, g.values
    out = []
    for x in range(len(p)):
        below = max((v[y] for y in p.down[x] if y != x), default=0)
        out.append(0 if v[x] == below else v[x])
    return LFunction(p, tuple(out))


@dataclass(frozen=True)
class GChain:
    """A maximal chain on which ``g`` is constant, listed bottom to top."""

    elements: tuple[str, ...]
    value: Level

    @property
    def minimum(self) -> str:
        return self.elements[0]

    @property
    def maximum(self) -> str:
        return self.elements[-1]

    @property
    def length(self) -> int:
        return len(self.elements) - 1

    def place_reversal(self, x: str) -> str:
        """The element with the symmetric place in the chain (``n_C``)."""
        return self.elements[len(self.elements) - 1 - self.elements.index(x)]


def g_chains(g: LFunction) -> list[GChain]:
    """All g-chains of a non-negative isotone function (singletons excluded)."""
    _require_nonneg_isotone(g)
    p, v = g.poset, g.values
    chains: list[GChain] = []

    def extend(path: list[int]) -> None:
        top = path[-1]
        nxt = sorted(y for y in p.upper_covers[top] if v[y] == v[top])
        if not nxt:
            if len(path) > 1:
                chains.append(GChain(tuple(p.ids[i] for i in path), v[top]))
            return
        for y in nxt:
            extend(path + [y])

    for x in range(len(p)):
        # level sets of an isotone g are convex, so chain starts have no equal cover below
        if not any(v[y] == v[x] for y in p.lower_covers[x]):
            extend([x])
    return chains


def conjugate_function(g: LFunction, scale: Scale) -> LFunction:
    """``gbar(x) = conj(g(conj x))``."""
    p = g.poset
    if p.conjugation is None:
        raise ConjugationError("poset has no conjugation")
    return LFunction(
        p, tuple(scale.conjugate(g.values[p.conjugation[x]]) for x in range(len(p)))
    )


def conjugate_mobius_closed(
    g: LFunction, scale: Scale, chains: Optional[Sequence[GChain]] = None
) -> LFunction:
    """Möbius transform of the conjugate function, computed from that of ``g``.

    The conjugate chains are the conjugates of the g-chains (order reversed).
    Zero on every non-minimal element of a conjugate chain; elsewhere
    ``conj(m^g(n_C(conj x)))`` with ``n_C`` the identity off the chains.
    """
    _require_nonneg_isotone(g)
    p = g.poset
    if p.conjugation is None:
        raise ConjugationError("poset has no conjugation")
    if chains is None:
        chains = g_chains(g)
    m = canonical_mobius(g, RuleId.SPLITTING).values
    c = p.conjugation
    zero: set[int] = set()
    reversal: dict[int, int] = {}
    for ch in chains:
        idx = [p.idx(e) for e in ch.elements]
        conj_chain = [c[i] for i in reversed(idx)]
        zero.update(conj_chain[1:])
        # x = min of the conjugate chain, so conj(x) = max of ch, n_C maps it to min of ch
        reversal[conj_chain[0]] = idx[0]
    out = []
    for x in range(len(p)):
        if x in zero:
            out.append(0)
        else:
            out.append(scale.conjugate(m[reversal.get(x, c[x])]))
    return LFunction(p, tuple(out))
