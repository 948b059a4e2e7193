"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL lines;
they are also repeated in the terminal summary.
"""

import random
import time
from collections import Counter

import pytest

from relginz.dg_core import apply_morphism, apply_twisted_derivation, concat, graded_dimension, normalize
from relginz.dg_core.algebra import Element
from relginz.verifier import (
    construct,
    path_count,
    random_quiver,
    run_random,
    run_verification,
    verify_instance,
)

from corpus import CORPUS
from randgen import composable_chain, mixed_setup

CASES = 10_000
LITERAL_FAILURES = {"d_squared:A_e(F1)", "colimit:A"}


def sign(deg):
    return -1 if deg % 2 else 1


def test_corpus_passes_all_checks(acceptance_log):
    t0 = time.perf_counter()
    bad = []
    total = 0
    for name, q in CORPUS.items():
        for rep in run_verification(q, (4, 5, 6, 7)):
            total += 1
            if not rep.passed:
                bad.append(f"{name}/n={rep.n}: {[c.name for c in rep.failures()]}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 5
    acceptance_log("1 corpus x n in {4,5,6,7}", ok, f"{total} reports, {len(bad)} failing, {elapsed:.2f}s")
    assert not bad, bad
    assert elapsed < 5


def test_random_instances_pass(acceptance_log):
    t0 = time.perf_counter()
    reports = run_random(500, seed=2024, n_list=(4, 5))
    elapsed = time.perf_counter() - t0
    bad = [r for r in reports if not r.passed]
    ok = len(reports) == 1000 and not bad and elapsed < 120
    acceptance_log("2 500 random instances x n in {4,5}", ok, f"{len(reports)} reports, {len(bad)} failing, {elapsed:.1f}s")
    assert not bad, [r.render() for r in bad[:3]]
    assert len(reports) == 1000 and elapsed < 120


def _literal_ok(rep, c):
    """Only the expected checks fail, and every residual is +-d on a frozen half-edge."""
    failing = {chk.name: chk for chk in rep.failures()}
    if set(failing) != LITERAL_FAILURES:
        return False
    for chk in failing.values():
        for r in chk.residuals:
            arrow_role = r.generator.split("[", 1)[1]
            e, role = arrow_role.split("]@")
            d = c.a.gen(f"d[{e}]@{role}")
            if r.element != d and r.element != -d:
                return False
    return True


def test_literal_variant_regression(acceptance_log):
    cases = [(name, q) for name, q in CORPUS.items() if q.frozen_arrows]
    rng = random.Random(99)
    while len(cases) < len(CORPUS) + 40:
        q = random_quiver(rng)
        if q.frozen_arrows:
            cases.append((f"random#{len(cases)}", q))
    bad = []
    checked = 0
    for name, q in cases:
        for n in (4, 5, 6, 7):
            rep = verify_instance(q, n, paper_literal=True)
            c = construct(q, n)
            checked += 1
            if not _literal_ok(rep, c):
                bad.append(f"{name}/n={n}: {[x.name for x in rep.failures()]}")
    # quivers without frozen arrows are unaffected
    for name, q in CORPUS.items():
        if not q.frozen_arrows:
            if not all(r.passed for r in run_verification(q, (4, 5), paper_literal=True)):
                bad.append(f"{name}: literal mode changed a quiver with no frozen arrows")
    acceptance_log("3 literal variant fails exactly d_squared:A_e(F1) + colimit:A", not bad,
                   f"{checked} reports, {len(bad)} unexpected")
    assert not bad, bad


def test_h0_oracle(acceptance_log):
    rng = random.Random(4242)
    mismatches = []
    for i in range(50):
        q = random_quiver(rng)
        n = (4, 5, 6, 7)[i % 4]
        a = construct(q, n).a
        got, want = graded_dimension(a, 0, 6), path_count(q, 6)
        if got != want:
            mismatches.append((q.to_json(), n, got, want))
    acceptance_log("4 H0 word counts match path-count oracle (L=6, 50 quivers)", not mismatches,
                   f"{len(mismatches)} mismatches")
    assert not mismatches, mismatches[:3]


def _assoc(c, buckets, rng):
    (a, _), (b, _), (x, _) = composable_chain(buckets, rng, 3)
    return concat(concat(a, b), x) == concat(a, concat(b, x))


def _leibniz(c, buckets, rng):
    p = c.a
    (a, da), (b, _) = composable_chain(buckets, rng, 2)
    return p.d(concat(a, b)) == concat(p.d(a), b) + concat(a, p.d(b)).scale(sign(da))


def _multiplicative(c, buckets, rng):
    (a, _), (b, _) = composable_chain(buckets, rng, 2)
    return apply_morphism(c.tau, concat(a, b)) == concat(c.tau(a), c.tau(b))


def _twisted(c, buckets, rng):
    k = c.K
    (a, da), (b, _) = composable_chain(buckets, rng, 2)
    lhs = apply_twisted_derivation(k, concat(a, b))
    return lhs == concat(k(a), k.companion(b)) + concat(a, k(b)).scale(sign(da))


def _normalize(c, buckets, rng):
    x, _ = buckets.element(rng, max_terms=6)
    terms = list(x.items())
    rng.shuffle(terms)
    once = normalize(Element(x.src, x.tgt, terms))
    return normalize(once) == once == x


PROPERTIES = {
    "associativity": _assoc,
    "Leibniz": _leibniz,
    "morphism multiplicativity": _multiplicative,
    "twisted-derivation law": _twisted,
    "normalization idempotence": _normalize,
}


@pytest.mark.parametrize("prop", list(PROPERTIES))
def test_property_suite(prop, acceptance_log):
    check = PROPERTIES[prop]
    rng = random.Random(f"acceptance:{prop}")
    setups = {n: mixed_setup(n) for n in (4, 5)}
    failures = Counter()
    for i in range(CASES):
        c, buckets, _ = setups[4 + i % 2]
        if not check(c, buckets, rng):
            failures[4 + i % 2] += 1
    total = sum(failures.values())
    acceptance_log(f"5 property: {prop}", total == 0, f"{CASES} cases, {total} failures")
    assert total == 0, dict(failures)


def test_homotopy_sign_constant(acceptance_log):
    signs = {}
    for name, q in CORPUS.items():
        for rep in run_verification(q, (4, 5, 6, 7)):
            signs[(name, rep.n)] = rep.resolved_homotopy_sign
    values = set(signs.values())
    acceptance_log("6 resolved homotopy sign constant over corpus", values == {1},
                   f"signs seen: {sorted(values)}")
    assert values == {1}, signs
