"""Brute-force verification suites for the algebra, the rules, the transforms
and the capacity results.

Each suite returns a list of :class:`Check` records; a check counts cases and
keeps the first few counterexamples.  ``symlattice verify`` prints them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from . import capacity as cap
from . import mobius as mob
from .poset import LFunction, Poset, boolean_lattice, chain, diamond, is_abs_isotone, is_isotone
from .rules import (
    ALL_RULES,
    RuleId,
    achievable_results,
    apply_rule,
    bounded_sequences,
    evaluate,
    fulfills_associativity,
    more_discriminating,
    rule_deletions,
)
from .scale import Scale, sym_max, sym_min

MAX_EXAMPLES = 5


@dataclass
class Check:
    name: str
    cases: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, witness: object = None) -> bool:
        self.cases += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(witness)
        return ok

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.cases > 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.cases - self.failed}/{self.cases}"
        if self.examples:
            text += f"  e.g. {self.examples[0]!r}"
        return text


# -- generators ----------------------------------------------------------------


def sign_coherent(g: LFunction) -> bool:
    """No cover ``y < x`` with ``g(y) = -g(x) != 0``."""
    p, v = g.poset, g.values
    return not any(
        v[y] == -v[x] != 0 for x in range(len(p)) for y in p.lower_covers[x]
    )


def random_abs_isotone(p: Poset, k: int, rng: random.Random, coherent: bool = False) -> LFunction:
    """Random ``g`` with ``|g|`` isotone; ``coherent`` also forbids sign flips at equal magnitude."""
    while True:
        vals = [0] * len(p)
        ok = True
        for x in range(len(p)):
            covers = p.lower_covers[x]
            lb = max((abs(vals[y]) for y in covers), default=0)
            mag = rng.randint(lb, k)
            if mag == 0:
                continue
            sign = rng.choice((-1, 1))
            if coherent and mag == lb:
                signs = {1 if vals[y] > 0 else -1 for y in covers if abs(vals[y]) == lb}
                if len(signs) > 1:
                    if lb == k:
                        ok = False
                        break
                    mag = rng.randint(lb + 1, k)
                elif signs:
                    sign = signs.pop()
            vals[x] = sign * mag
        if ok:
            return LFunction(p, tuple(vals))


def all_functions(p: Poset, levels: Iterable[int]) -> Iterator[LFunction]:
    levels = list(levels)
    for vals in itertools.product(levels, repeat=len(p)):
        yield LFunction(p, vals)


def isotone_nonneg_functions(p: Poset, k: int) -> Iterator[LFunction]:
    """Every isotone ``g: X -> L+`` (backtracking in element order)."""
    vals = [0] * len(p)

    def rec(x: int) -> Iterator[LFunction]:
        if x == len(p):
            yield LFunction(p, tuple(vals))
            return
        lb = max((vals[y] for y in p.lower_covers[x]), default=0)
        for v in range(lb, k + 1):
            vals[x] = v
            yield from rec(x + 1)

    yield from rec(0)


def all_capacities(n: int, k: int) -> Iterator[cap.Capacity]:
    masks = sorted(range(1 << n), key=lambda m: bin(m).count("1"))
    full = (1 << n) - 1
    vals = [0] * (1 << n)
    scale = Scale(k)

    def rec(i: int) -> Iterator[cap.Capacity]:
        if i == len(masks):
            yield cap.Capacity(n, scale, tuple(vals))
            return
        a = masks[i]
        lb = max((vals[a & ~(1 << b)] for b in range(n) if a >> b & 1), default=0)
        choices = [0] if a == 0 else [k] if a == full else range(lb, k + 1)
        for v in choices:
            if v < lb:
                continue
            vals[a] = v
            yield from rec(i + 1)

    yield from rec(0)


def random_capacity(n: int, k: int, rng: random.Random) -> cap.Capacity:
    masks = sorted(range(1 << n), key=lambda m: bin(m).count("1"))
    full = (1 << n) - 1
    vals = [0] * (1 << n)
    for a in masks[1:]:
        lb = max(vals[a & ~(1 << b)] for b in range(n) if a >> b & 1)
        vals[a] = k if a == full else rng.randint(lb, k)
    return cap.Capacity(n, Scale(k), tuple(vals))


def shipped_posets() -> list[Poset]:
    """Boolean lattices 2^1..2^3, chains up to length 6, and the diamond."""
    return [boolean_lattice(n) for n in (1, 2, 3)] + [chain(l) for l in range(1, 7)] + [diamond()]


# -- algebra -------------------------------------------------------------------


def suite_algebra(max_k: int = 4) -> list[Check]:
    c = {name: Check(name) for name in (
        "coincides_with_max_min_on_L+",
        "sym_max_is_min_on_L-",
        "marichal_forms",
        "sym_max_commutative",
        "zero_unique_neutral_of_sym_max",
        "zero_unique_absorbing_of_sym_min",
        "opposite_cancels",
        "sym_max_reflection",
        "sym_min_reflection",
        "associative_unless_opposite_extremes",
        "sym_min_commutative",
        "top_unique_neutral_of_sym_min",
        "extremes_only_absorbing_of_sym_max_except_opposite",
        "sym_min_associative",
        "distributive_within_one_sign",
        "distributivity_counterexample_family",
        "sym_max_isotone",
        "associativity_fails_across_zero",
    )}
    for k in range(1, max_k + 1):
        L = list(range(-k, k + 1))
        for a, b in itertools.product(L, repeat=2):
            w = (k, a, b)
            if a >= 0 and b >= 0:
                c["coincides_with_max_min_on_L+"].record(
                    sym_max(a, b) == max(a, b) and sym_min(a, b) == min(a, b), w)
            if a <= 0 and b <= 0:
                c["sym_max_is_min_on_L-"].record(sym_max(a, b) == min(a, b), w)
            sgn = (a + b > 0) - (a + b < 0)
            prod = (a * b > 0) - (a * b < 0)
            c["marichal_forms"].record(
                sym_max(a, b) == sgn * max(abs(a), abs(b))
                and sym_min(a, b) == prod * min(abs(a), abs(b)), w)
            c["sym_max_commutative"].record(sym_max(a, b) == sym_max(b, a), w)
            c["sym_min_commutative"].record(sym_min(a, b) == sym_min(b, a), w)
            c["sym_max_reflection"].record(-sym_max(a, b) == sym_max(-a, -b), w)
            c["sym_min_reflection"].record(-sym_min(a, b) == sym_min(-a, b), w)
        for a in L:
            c["opposite_cancels"].record(sym_max(a, -a) == 0, (k, a))
        for e in L:
            w = (k, e)
            is_neutral_max = all(sym_max(e, a) == a for a in L)
            c["zero_unique_neutral_of_sym_max"].record(is_neutral_max == (e == 0), w)
            is_absorbing_min = all(sym_min(e, a) == e for a in L)
            c["zero_unique_absorbing_of_sym_min"].record(is_absorbing_min == (e == 0), w)
            is_neutral_min = all(sym_min(e, a) == a for a in L)
            c["top_unique_neutral_of_sym_min"].record(is_neutral_min == (e == k), w)
            absorbs = all(sym_max(e, a) == e for a in L if a != -e)
            c["extremes_only_absorbing_of_sym_max_except_opposite"].record(
                absorbs == (abs(e) == k), w)
        for a, b, d in itertools.product(L, repeat=3):
            w = (k, a, b, d)
            if fulfills_associativity((a, b, d)):
                vals = {sym_max(sym_max(x, y), z) for x, y, z in itertools.permutations((a, b, d))}
                vals |= {sym_max(x, sym_max(y, z)) for x, y, z in itertools.permutations((a, b, d))}
                c["associative_unless_opposite_extremes"].record(len(vals) == 1, w)
            c["sym_min_associative"].record(
                sym_min(sym_min(a, b), d) == sym_min(a, sym_min(b, d)), w)
            if (a >= 0 and b >= 0 and d >= 0) or (a <= 0 and b <= 0 and d <= 0):
                c["distributive_within_one_sign"].record(
                    sym_min(a, sym_max(b, d)) == sym_max(sym_min(a, b), sym_min(a, d)), w)
            if 0 <= a < b and d < 0 and b < -d:
                c["distributivity_counterexample_family"].record(
                    sym_min(a, sym_max(b, d)) == -a
                    and sym_max(sym_min(a, b), sym_min(a, d)) == 0, w)
        for a, a2, b, b2 in itertools.product(L, repeat=4):
            if a <= a2 and b <= b2:
                c["sym_max_isotone"].record(
                    sym_max(a, b) <= sym_max(a2, b2), (k, a, a2, b, b2))
        for a in range(1, k + 1):
            for b in range(a + 1, k + 1):
                c["associativity_fails_across_zero"].record(
                    sym_max(sym_max(-b, b), a) != sym_max(-b, sym_max(b, a)), (k, a, b))
    return list(c.values())


def top_absorbing_literal_violations(k: int) -> list[tuple[int, int]]:
    """Pairs ``(top, a)`` where ``top symmax a != top`` (only ``a = -top``)."""
    return [(k, a) for a in range(-k, k + 1) if sym_max(k, a) != k]


# -- rules ---------------------------------------------------------------------


def _raise_one(seq: tuple, k: int) -> Iterator[tuple]:
    for i, x in enumerate(seq):
        if x < k:
            yield seq[:i] + (x + 1,) + seq[i + 1:]


def refinement_matrix(max_len: int = 5, k: int = 3) -> dict[tuple[RuleId, RuleId], bool]:
    """``(r1, r2) -> r1 [= r2`` over all bounded sequences, in one pass."""
    rel = {(r1, r2): True for r1 in ALL_RULES for r2 in ALL_RULES}
    for seq in bounded_sequences(max_len, k):
        dels = {r: rule_deletions(r, seq) for r in ALL_RULES}
        for pair in rel:
            if rel[pair] and not dels[pair[0]] >= dels[pair[1]]:
                rel[pair] = False
    return rel


def suite_rules(max_len: int = 5, k: int = 3) -> list[Check]:
    names = (
        "worked_example_weak_strong_pessimistic",
        "deletion_sets_weak_strong",
        "kept_terms_fulfill_associativity",
        "result_is_fold_of_kept_terms",
        "result_realizable_by_parenthesization",
        "refinement_bounds_magnitude",
        "refinement_reverses_cancelling_sets",
        "splitting_unique_minimum",
        "strong_maximal",
        "strong_weak_splitting_magnitudes",
        "cancelling_sets_nested",
        "between_min_and_max",
        "splitting_and_strong_isotone",
        "weak_not_isotone_witness",
        "splitting_append",
        "non_lattice_witness_deletions",
    )
    c = {name: Check(name) for name in names}

    ex = (3, 3, 3, 2, 1, 0, -2, -3, -3)
    got = tuple(apply_rule(r, ex).result for r in (RuleId.WEAK, RuleId.STRONG, RuleId.PESSIMISTIC))
    c[names[0]].record(got == (1, 3, -3), got)
    jw = sorted(ex[i] for i in rule_deletions(RuleId.WEAK, ex))
    js = sorted(ex[i] for i in rule_deletions(RuleId.STRONG, ex))
    c[names[1]].record(
        jw == sorted([3, 3, 3, 2, -2, -3, -3]) and js == sorted([3, -3, 3, -3]), (jw, js))

    rel = refinement_matrix(max_len, k)
    related = [pair for pair, ok in rel.items() if ok and pair[0] is not pair[1]]
    others = [r for r in ALL_RULES if r is not RuleId.SPLITTING]
    c["splitting_unique_minimum"].record(
        all(rel[(RuleId.SPLITTING, r)] for r in ALL_RULES)
        and not any(all(rel[(r, s)] for s in ALL_RULES) for r in others), rel)
    c["strong_maximal"].record(
        not any(rel[(RuleId.STRONG, r)] for r in ALL_RULES if r is not RuleId.STRONG),
        [r for r in ALL_RULES if r is not RuleId.STRONG and rel[(RuleId.STRONG, r)]])

    for seq in bounded_sequences(max_len, k):
        outs = {r: apply_rule(r, seq) for r in ALL_RULES}
        res = {r: o.result for r, o in outs.items()}
        reach = achievable_results(seq)
        for r, o in outs.items():
            kept = o.kept(seq)
            c["kept_terms_fulfill_associativity"].record(fulfills_associativity(kept), (r, seq))
            c["result_is_fold_of_kept_terms"].record(
                o.result == evaluate(RuleId.SPLITTING, kept), (r, seq))
            c["result_realizable_by_parenthesization"].record(o.result in reach, (r, seq))
            if seq:
                c["between_min_and_max"].record(min(seq) <= o.result <= max(seq), (r, seq))
        for r1, r2 in related:
            c["refinement_bounds_magnitude"].record(
                abs(res[r1]) <= abs(res[r2]), (r1, r2, seq))
            if res[r2] == 0:
                c["refinement_reverses_cancelling_sets"].record(
                    res[r1] == 0, (r1, r2, seq))
        c["strong_weak_splitting_magnitudes"].record(
            abs(res[RuleId.STRONG]) >= abs(res[RuleId.WEAK]) >= abs(res[RuleId.SPLITTING])
            and all(abs(res[RuleId.SPLITTING]) <= abs(v) for v in res.values()), seq)
        for r in (RuleId.SPLITTING, RuleId.STRONG):
            for up in _raise_one(seq, k):
                c["splitting_and_strong_isotone"].record(
                    evaluate(r, seq) <= evaluate(r, up), (r, seq, up))
        if len(seq) < max_len:
            old = res[RuleId.SPLITTING]
            for b in range(-k, k + 1):
                new = evaluate(RuleId.SPLITTING, seq + (b,))
                c["splitting_append"].record(
                    new == 0 or abs(new) >= abs(old), (seq, b))

    c["cancelling_sets_nested"].record(
        more_discriminating(RuleId.STRONG, RuleId.WEAK, max_len, k)
        and more_discriminating(RuleId.WEAK, RuleId.SPLITTING, max_len, k))
    c["weak_not_isotone_witness"].record(
        evaluate(RuleId.WEAK, (-3, 3, 1)) == 1 and evaluate(RuleId.WEAK, (-3, 3, 3)) == 0)
    w = (3, 3, 3, 2, 1, -2, -3, -3, -3)
    jo = sorted(w[i] for i in rule_deletions(RuleId.OPTIMISTIC, w))
    jp = sorted(w[i] for i in rule_deletions(RuleId.PESSIMISTIC, w))
    c["non_lattice_witness_deletions"].record(
        jo == sorted([3, 3, -3, -3, -3]) and jp == sorted([3, 3, 3, -3, -3]), (jo, jp))
    return list(c.values())


# -- mobius --------------------------------------------------------------------


def suite_classical(max_n: int = 5, trials: int = 200, max_rt_n: int = 8, seed: int = 0) -> list[Check]:
    inv = Check("classical_zeta_star_mu_is_delta")
    form = Check("classical_mu_boolean_sign_formula")
    rt = Check("classical_set_mobius_round_trip")
    for n in range(1, max_n + 1):
        p = boolean_lattice(n)
        mu = mob.classical_mobius(p)
        zeta, delta = mob.classical_zeta(p), mob.classical_delta(p)
        inv.record(mob.classical_star(zeta, mu) == delta and mob.classical_star(mu, zeta) == delta, n)
        # |down(B)| = 2^|B| in a Boolean lattice
        size = [len(p.down[x]).bit_length() - 1 for x in range(len(p))]
        ok = all(
            mu.values[a][b] == (-1) ** (size[b] - size[a])
            for a in range(len(p)) for b in p.up[a]
        )
        form.record(ok, n)
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, max_rt_n)
        v = [rng.randint(-50, 50) for _ in range(1 << n)]
        m = mob.classical_set_mobius(v)
        rt.record(list(mob.classical_set_zeta(m)) == v, (n, v[:4]))
    return [inv, form, rt]


def inversion_failures(
    g: LFunction, scale: Scale, rules=(RuleId.SPLITTING, RuleId.WEAK), inverse=None
) -> list[RuleId]:
    """Rules under which ``g (*) zeta^-1`` fails to solve the inversion for ``g``."""
    inv = inverse if inverse is not None else mob.canonical_zeta_inverse(g.poset, scale)
    return [r for r in rules if not mob.solves(mob.ostar_fn(g, inv, r), g, r)]


def strong_counterexample() -> LFunction:
    d = diamond()
    return LFunction.from_mapping(d, {"0": 0, "a": -1, "b": -1, "c": 1})


def has_solution(g: LFunction, rule: RuleId, k: int) -> bool:
    return any(mob.solves(f, g, rule) for f in all_functions(g.poset, range(-k, k + 1)))


def suite_mobius(trials: int = 500, seed: int = 0) -> list[Check]:
    c = {name: Check(name) for name in (
        "canonical_inverse_solves_sign_coherent_random",
        "every_inverse_solves_sign_coherent_tiny",
        "strong_rule_diamond_no_solution",
        "solution_set_is_interval",
        "zeta_inverse_free_entries",
        "chain_canonical_inverse_every_rule",
        "strict_increase_keeps_value",
        "splitting_equal_cover_zero",
        "smaller_stays_smaller",
        "star_condition_necessary",
        "example_table_g1_g2",
        "transform_not_a_morphism",
        "delta_neutral",
        "derivative_equals_canonical",
        "g_chains_locate_zeros",
        "conjugate_closed_form",
    )}
    rng = random.Random(seed)
    posets = shipped_posets()
    for i in range(trials):
        p = posets[i % len(posets)]
        k = rng.randint(1, 3)
        g = random_abs_isotone(p, k, rng, coherent=True)
        c["canonical_inverse_solves_sign_coherent_random"].record(not inversion_failures(g, Scale(k)), g.as_dict())

    tiny = [boolean_lattice(2), chain(2), chain(3), diamond()]
    for p in tiny:
        for k in (1, 2):
            s = Scale(k)
            invs = {r: mob.enumerate_zeta_inverses(p, r, s) for r in (RuleId.SPLITTING, RuleId.WEAK)}
            for g in all_functions(p, s.levels()):
                if not (is_abs_isotone(g) and sign_coherent(g)):
                    continue
                for r, inv_list in invs.items():
                    for inv in inv_list:
                        c["every_inverse_solves_sign_coherent_tiny"].record(
                            not inversion_failures(g, s, (r,), inv), (r, g.as_dict()))

    ce = strong_counterexample()
    c["strong_rule_diamond_no_solution"].record(
        not has_solution(ce, RuleId.STRONG, 1), ce.as_dict())

    for p in (boolean_lattice(2), chain(2)):
        for k in (1, 2):
            for g in isotone_nonneg_functions(p, k):
                iv = mob.solution_interval(g)
                sols = {f.values for f in all_functions(p, range(k + 1))
                        if mob.solves(f, g, RuleId.SPLITTING)}
                members = {f.values for f in iv.members()}
                c["solution_set_is_interval"].record(
                    sols == members and iv.m_lower == mob.canonical_mobius(g, RuleId.SPLITTING),
                    g.as_dict())

    b2 = boolean_lattice(2)
    free = (b2.index["{}"], b2.index["{1,2}"])
    for k in (1, 2):
        s = Scale(k)
        canon = mob.canonical_zeta_inverse(b2, s)
        for r, expected in ((RuleId.WEAK, {-k, 0, k}), (RuleId.SPLITTING, set(s.levels()))):
            got = {inv.values[free[0]][free[1]] for inv in mob.enumerate_zeta_inverses(b2, r, s)}
            c["zeta_inverse_free_entries"].record(
                got == expected and mob.verify_zeta_inverse(canon, r, s), (k, r, sorted(got)))
    for length in range(1, 5):
        p = chain(length)
        for k in (1, 2):
            s = Scale(k)
            canon = mob.canonical_zeta_inverse(p, s)
            for r in ALL_RULES:
                c["chain_canonical_inverse_every_rule"].record(
                    mob.verify_zeta_inverse(canon, r, s), (length, k, r))

    for i in range(trials):
        p = posets[i % len(posets)]
        k = rng.randint(1, 3)
        s = Scale(k)
        g = random_abs_isotone(p, k, rng)
        inv = mob.canonical_zeta_inverse(p, s)
        fs = {r: mob.ostar_fn(g, inv, r).values for r in ALL_RULES}
        v = g.values
        for x in range(len(p)):
            covers = p.lower_covers[x]
            if all(abs(v[x]) > abs(v[y]) for y in covers):
                c["strict_increase_keeps_value"].record(
                    all(f[x] == v[x] for f in fs.values()), (g.as_dict(), p.ids[x]))
            if any(v[x] == v[y] for y in covers):
                c["splitting_equal_cover_zero"].record(
                    fs[RuleId.SPLITTING][x] == 0, (g.as_dict(), p.ids[x]))
            for y in p.down[x]:
                if abs(v[y]) < abs(v[x]):
                    c["smaller_stays_smaller"].record(
                        all(abs(f[y]) < abs(v[x]) for f in fs.values()), (g.as_dict(), p.ids[y]))

    for p in (boolean_lattice(2), chain(2), diamond()):
        for k in (1, 2):
            for f in all_functions(p, range(-k, k + 1)):
                g = mob.eval_primitive(f, RuleId.SPLITTING)
                c["star_condition_necessary"].record(mob.check_star_condition(g), f.as_dict())

    g1 = LFunction(b2, (0, 0, 0, 1))
    g2 = LFunction(b2, (0, 1, 1, 1))
    m1 = mob.canonical_mobius(g1, RuleId.SPLITTING)
    m2 = mob.canonical_mobius(g2, RuleId.SPLITTING)
    c["example_table_g1_g2"].record(
        m1.values == (0, 0, 0, 1) and m2.values == (0, 1, 1, 0), (m1.values, m2.values))
    join = tuple(sym_max(a, b) for a, b in zip(g1.values, g2.values))
    mjoin = tuple(sym_max(a, b) for a, b in zip(m1.values, m2.values))
    c["transform_not_a_morphism"].record(join == g2.values and mjoin != m2.values, mjoin)

    for p in (boolean_lattice(2), diamond(), chain(3)):
        s = Scale(2)
        delta = mob.ordinal_delta(p, s)
        for _ in range(20):
            f = LFunction(p, tuple(rng.randint(-2, 2) for _ in p.ids))
            for r in ALL_RULES:
                c["delta_neutral"].record(mob.ostar_fn(f, delta, r) == f, (r, f.as_dict()))

    for p in (boolean_lattice(2), boolean_lattice(3), chain(3), diamond()):
        for k in (1, 2):
            s = Scale(k)
            for g in isotone_nonneg_functions(p, k):
                m = mob.canonical_mobius(g, RuleId.SPLITTING)
                c["derivative_equals_canonical"].record(mob.derivative(g) == m, g.as_dict())
                c["g_chains_locate_zeros"].record(g_chain_zeros_hold(g, m), g.as_dict())
                if p.conjugation is not None:
                    c["conjugate_closed_form"].record(conjugate_chains_hold(g, s), g.as_dict())
    return list(c.values())


def g_chain_zeros_hold(g: LFunction, m: LFunction) -> bool:
    p = g.poset
    chains = mob.g_chains(g)
    # a chain of value zero leaves m = g there, so only nonzero chains count
    if (not any(ch.value for ch in chains)) != (m == g):
        return False
    boolean_n = len(p).bit_length() - 1
    if p.conjugation is not None and len(p) == 1 << boolean_n and g.values[p.bottom] < g.values[p.top]:
        if any(ch.length >= boolean_n for ch in chains):
            return False
    on_chain: set[str] = set()
    for ch in chains:
        on_chain.update(ch.elements)
        if m[ch.minimum] != g[ch.minimum]:
            return False
        if any(m[x] != 0 for x in ch.elements[1:]):
            return False
    return all(m[x] == g[x] for x in p.ids if x not in on_chain)


def conjugate_chains_hold(g: LFunction, scale: Scale) -> bool:
    p = g.poset
    gbar = mob.conjugate_function(g, scale)
    expected = {
        tuple(p.conjugate(e) for e in reversed(ch.elements)) for ch in mob.g_chains(g)
    }
    got = {ch.elements for ch in mob.g_chains(gbar)}
    if expected != got:
        return False
    return mob.conjugate_mobius_closed(g, scale) == mob.canonical_mobius(gbar, RuleId.SPLITTING)


# -- capacity ------------------------------------------------------------------


def weight_cases(max_n: int = 5, max_k: int = 4, seed: int = 0) -> list[tuple[tuple[int, ...], int]]:
    """All normalized weight vectors for n <= 3, plus a random sample for n = 4, 5."""
    rng = random.Random(seed)
    cases = []
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            if n <= 3:
                for w in itertools.product(range(k + 1), repeat=n):
                    if max(w) == k:
                        cases.append((w, k))
            else:
                for _ in range(150):
                    w = [rng.randint(0, k) for _ in range(n)]
                    w[rng.randrange(n)] = k
                    if rng.random() < 0.3:
                        i, j = rng.sample(range(n), 2)
                        w[i] = w[j]
                        if max(w) != k:
                            w[rng.randrange(n)] = k
                    cases.append((tuple(w), k))
    return cases


def _is_chain(masks: list[int]) -> bool:
    return all((a & b) in (a, b) for a, b in itertools.combinations(masks, 2))


def suite_capacity(seed: int = 0, random_cases: int = 1000) -> list[Check]:
    c = {name: Check(name) for name in (
        "possibility_closed_form",
        "necessity_closed_form",
        "possibility_support_singletons",
        "necessity_support_chain_strict",
        "evenodd_equals_canonical_exhaustive",
        "evenodd_equals_canonical_random_n4",
        "conjugate_involution",
        "possibility_necessity_conjugate",
        "sugeno_subset_equals_sorted",
        "sugeno_indicator_recovers_capacity",
        "sugeno_isotone_in_profile",
        "sugeno_isotone_in_capacity",
        "symmetric_sugeno_reflection",
        "symmetric_sugeno_nonneg_is_sugeno",
    )}
    for w, k in weight_cases(seed=seed):
        s = Scale(k)
        pi, nec = cap.possibility(w, s), cap.necessity(w, s)
        mp, mn = cap.capacity_mobius(pi), cap.capacity_mobius(nec)
        c["possibility_closed_form"].record(mp == cap.mobius_possibility_closed(w, s), (w, k))
        c["necessity_closed_form"].record(mn == cap.mobius_necessity_closed(w, s), (w, k))
        c["possibility_support_singletons"].record(
            all(bin(a).count("1") == 1 for a, x in enumerate(mp) if x), (w, k))
        if 0 < min(w) and len(set(w)) == len(w):
            c["necessity_support_chain_strict"].record(
                _is_chain([a for a, x in enumerate(mn) if x]), (w, k))
        c["possibility_necessity_conjugate"].record(
            cap.conjugate_capacity(nec) == pi, (w, k))

    for n in (1, 2, 3):
        for k in (1, 2):
            for v in all_capacities(n, k):
                c["evenodd_equals_canonical_exhaustive"].record(
                    cap.capacity_mobius_evenodd(v) == cap.capacity_mobius(v), v.values)
                c["conjugate_involution"].record(
                    cap.conjugate_capacity(cap.conjugate_capacity(v)) == v, v.values)
    rng = random.Random(seed)
    for _ in range(200):
        v = random_capacity(4, rng.randint(1, 4), rng)
        c["evenodd_equals_canonical_random_n4"].record(
            cap.capacity_mobius_evenodd(v) == cap.capacity_mobius(v), v.values)

    for _ in range(random_cases):
        n, k = rng.randint(1, 5), rng.randint(1, 4)
        v = random_capacity(n, k, rng)
        f = [rng.randint(0, k) for _ in range(n)]
        c["sugeno_subset_equals_sorted"].record(cap.sugeno(v, f) == cap.sugeno_sorted(v, f), (v.values, f))
        up = list(f)
        i = rng.randrange(n)
        up[i] = rng.randint(f[i], k)
        c["sugeno_isotone_in_profile"].record(cap.sugeno(v, f) <= cap.sugeno(v, up), (v.values, f, up))
        bigger = cap.Capacity(n, v.scale, tuple(
            max(x, y) for x, y in zip(v.values, random_capacity(n, k, rng).values)))
        c["sugeno_isotone_in_capacity"].record(cap.sugeno(v, f) <= cap.sugeno(bigger, f), (v.values, f))
        g = [rng.randint(-k, k) for _ in range(n)]
        c["symmetric_sugeno_reflection"].record(
            cap.symmetric_sugeno(v, [-x for x in g]) == -cap.symmetric_sugeno(v, g), (v.values, g))
        c["symmetric_sugeno_nonneg_is_sugeno"].record(
            cap.symmetric_sugeno(v, f) == cap.sugeno(v, f), (v.values, f))

    for n in range(1, 5):
        caps = list(all_capacities(n, 1)) if n <= 2 else []
        caps += [random_capacity(n, rng.randint(1, 4), rng) for _ in range(25)]
        for v in caps:
            for a in range(1 << n):
                ind = [v.scale.top if a >> i & 1 else 0 for i in range(n)]
                c["sugeno_indicator_recovers_capacity"].record(cap.sugeno(v, ind) == v.values[a], (v.values, a))
    return list(c.values())


SUITES: dict[str, Callable[[], list[Check]]] = {
    "algebra": suite_algebra,
    "rules": suite_rules,
    "mobius": lambda: suite_classical() + suite_mobius(),
    "capacity": suite_capacity,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [chk for key in SUITES for chk in SUITES[key]()]
    try:
        return SUITES[name]()
    except KeyError:
        raise ValueError(f"unknown suite {name!r} (choose from {', '.join(SUITES)}, all)") from None
