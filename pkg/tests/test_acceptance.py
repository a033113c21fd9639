"""Acceptance criteria 1-12, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import time
from functools import lru_cache

import pytest

from symlattice import checks
from symlattice import mobius as mob
from symlattice.poset import is_abs_isotone
from symlattice.rules import ALL_RULES, RuleId, apply_rule, rule_deletions
from symlattice.scale import Scale, sym_max

WORKED = (3, 3, 3, 2, 1, 0, -2, -3, -3)


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


@lru_cache(maxsize=None)
def mobius_suite():
    return {c.name: c for c in checks.suite_mobius()}


@lru_cache(maxsize=None)
def capacity_suite():
    return timed(lambda: {c.name: c for c in checks.suite_capacity()})


def verdict(chks):
    bad = [c for c in chks if not c.passed]
    return not bad, "; ".join(c.line() for c in bad) or ", ".join(f"{c.name} {c.cases}" for c in chks)


def criterion_1():
    rules = (RuleId.WEAK, RuleId.STRONG, RuleId.PESSIMISTIC)
    best = float("inf")
    for _ in range(5):
        got, dt = timed(lambda: tuple(apply_rule(r, WORKED).result for r in rules))
        best = min(best, dt)
    ok = got == (1, 3, -3) and best < 1e-3
    return ok, f"weak/strong/pessimistic = {got}, {best * 1e3:.3f} ms"


def criterion_2():
    jw = sorted(WORKED[i] for i in rule_deletions(RuleId.WEAK, WORKED))
    js = sorted(WORKED[i] for i in rule_deletions(RuleId.STRONG, WORKED))
    ok = jw == sorted([3, 3, 3, 2, -2, -3, -3]) and js == sorted([3, -3, 3, -3])
    return ok, f"weak deletes {jw}, strong deletes {js}"


def literal_top_absorbing(max_k=4):
    """Violations of: the top level is the unique element with e symmax a = e for all a."""
    bad = []
    for k in range(1, max_k + 1):
        absorbing = [e for e in range(-k, k + 1) if all(sym_max(e, a) == e for a in range(-k, k + 1))]
        if absorbing != [k]:
            bad.append((k, absorbing, f"{k} symmax {-k} = {sym_max(k, -k)}"))
    return bad


def criterion_3():
    suite, dt = timed(checks.suite_algebra, 4)
    ok, detail = verdict(suite)
    literal = literal_top_absorbing()
    ok = ok and not literal and dt < 10
    if literal:
        k, found, why = literal[0]
        detail = (f"top is not absorbing for symmax: absorbing elements for k={k} are {found} "
                  f"({why}); {len(literal)} of 4 scales violate it. Other clauses: {detail}")
    return ok, f"{detail}; {dt:.2f} s"


def criterion_4():
    suite, dt = timed(checks.suite_rules, 5, 3)
    ok, detail = verdict(suite)
    return ok and dt < 60, f"{detail}; {dt:.2f} s"


def criterion_5():
    return verdict(checks.suite_classical(max_n=5, trials=200, max_rt_n=8))


def criterion_6(trials=500, seed=0):
    rng = random.Random(seed)
    posets = checks.shipped_posets()
    failures = []
    for i in range(trials):
        p = posets[i % len(posets)]
        k = rng.randint(1, 3)
        g = checks.random_abs_isotone(p, k, rng)
        assert is_abs_isotone(g)
        bad = checks.inversion_failures(g, Scale(k))
        if bad:
            failures.append((g.as_dict(), [r.value for r in bad]))
    ce = checks.strong_counterexample()
    strong_none = not checks.has_solution(ce, RuleId.STRONG, 1)
    ok = not failures and strong_none
    detail = f"{len(failures)}/{trials} |g|-isotone functions not inverted"
    if failures:
        detail += f", e.g. {failures[0][0]} under {failures[0][1]}"
    return ok, detail + f"; strong-rule diamond has no solution: {strong_none}"


def criterion_7():
    chk, dt = timed(lambda: mobius_suite()["solution_set_is_interval"])
    ok, detail = verdict([chk])
    return ok and dt < 60, detail


def criterion_8():
    return verdict([mobius_suite()["zeta_inverse_free_entries"]])


def criterion_9():
    s = mobius_suite()
    return verdict([s["example_table_g1_g2"], s["transform_not_a_morphism"]])


def criterion_10():
    suite, dt = capacity_suite()
    names = ("possibility_closed_form", "necessity_closed_form",
             "possibility_support_singletons", "necessity_support_chain_strict")
    ok, detail = verdict([suite[n] for n in names])
    enough = suite["possibility_closed_form"].cases >= 1000
    return ok and enough and dt < 60, f"{detail}; {dt:.2f} s"


def criterion_11():
    return verdict([capacity_suite()[0]["evenodd_equals_canonical_exhaustive"]])


def criterion_12():
    suite = capacity_suite()[0]
    chks = [suite[n] for n in ("sugeno_subset_equals_sorted", "sugeno_indicator_recovers_capacity",
                               "symmetric_sugeno_reflection")]
    ok, detail = verdict(chks)
    return ok and chks[0].cases >= 1000 and chks[2].cases >= 1000, detail


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 13)}


def report(i):
    ok, detail = CRITERIA[i]()
    return ok, f"criterion {i:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_criterion(i, record_property):
    ok, line = report(i)
    record_property("acceptance", line)
    print(line)
    assert ok, line


def test_top_absorbs_all_but_its_opposite():
    # the reading of the absorbing clause that agrees with a symmax -a = 0
    for k in range(1, 5):
        for e in range(-k, k + 1):
            absorbs = all(sym_max(e, a) == e for a in range(-k, k + 1) if a != -e)
            assert absorbs == (abs(e) == k)


def test_inversion_holds_without_sign_conflicts():
    # same sampling as criterion 6, restricted to functions with no y < x, g(y) = -g(x) != 0
    rng = random.Random(0)
    posets = checks.shipped_posets()
    for i in range(500):
        p = posets[i % len(posets)]
        k = rng.randint(1, 3)
        g = checks.random_abs_isotone(p, k, rng, coherent=True)
        assert checks.sign_coherent(g)
        assert checks.inversion_failures(g, Scale(k)) == []


def test_every_criterion_6_failure_is_a_sign_conflict():
    rng = random.Random(0)
    posets = checks.shipped_posets()
    for i in range(500):
        p = posets[i % len(posets)]
        k = rng.randint(1, 3)
        g = checks.random_abs_isotone(p, k, rng)
        if checks.inversion_failures(g, Scale(k)):
            assert not checks.sign_coherent(g)


def test_sign_conflict_diamond_has_no_solution_under_any_rule():
    g = checks.strong_counterexample()
    for r in ALL_RULES:
        assert not checks.has_solution(g, r, 1)


if __name__ == "__main__":
    for i in sorted(CRITERIA):
        print(report(i)[1])
