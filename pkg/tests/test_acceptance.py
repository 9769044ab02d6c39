"""Acceptance gate: each criterion at its stated bound and time limit.

Every test records one ``PASS``/``FAIL`` line; ``conftest.py`` prints them in
the terminal summary. Run as a script for the same lines without pytest.
"""

import time

from indpoly import verify
from indpoly.engine import independence_polynomial
from indpoly.families import BigStarParams, big_star

GOLDEN = [1, 15, 91, 296, 577, 714, 575, 296, 91, 15, 1]

RESULTS: list[str] = []


def _gate(label, limit, fn):
    start = time.perf_counter()
    ok, note = fn()
    elapsed = time.perf_counter() - start
    within = elapsed < limit
    line = f"{'PASS' if ok and within else 'FAIL'}  {label}: {note} ({elapsed:.2f}s, limit {limit:g}s)"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


def _suites(*results):
    bad = [r for r in results if not r.ok]
    checked = sum(r.checked for r in results)
    if bad:
        return False, f"{bad[0].name} failed, first counterexample {bad[0].first_counterexample}"
    return True, f"{checked} checks"


def test_1_golden_polynomial():
    def run():
        p = independence_polynomial(big_star(BigStarParams((1, 1, 1, 3, 3, 5))))
        return list(p.coeffs) == GOLDEN, f"G(1,1,1,3,3,5) -> {list(p.coeffs)}"

    _gate("1 golden polynomial", 1, run)


def test_2_big_star_box():
    def run():
        r = verify.verify_big_stars(max_arm=7, max_q=5, min_q=3)
        sym = r.details["symmetric_instances"]
        ok, note = _suites(r)
        return ok and sym == [[1, 1, 5]], f"{note}, {r.details['instances']} stars, symmetric {sym}"

    _gate("2 big-star box", 60, run)


def test_3_caterpillar_box():
    def run():
        r = verify.verify_caterpillars(max_n=6, max_f=2)
        ok, note = _suites(r)
        return ok, f"{note}, {r.details['instances']} caterpillars"

    _gate("3 caterpillar box", 60, run)


def test_4_whiskers():
    def run():
        r = verify.verify_whiskers(count=200, max_base=8, max_f=3)
        ok, note = _suites(r)
        return ok, f"{note}, {r.details['symmetric_instances']} symmetric"

    _gate("4 whisker theorems", 60, run)


def test_5_realizability_interval():
    def run():
        r = verify.verify_range(max_n=12, min_n=3)
        return _suites(r)

    _gate("5 realizability interval n=3..12", 30, run)


def test_5_supplementary_exhaustive():
    def run():
        # min_n > max_n skips the two-clique sweep and keeps only the enumeration
        r = verify.verify_range(max_n=2, min_n=3, exhaustive_max_n=6)
        return _suites(r)

    _gate("5b exhaustive alpha<=2, n=3..6", 180, run)


def test_6_exponential_bound():
    def run():
        r = verify.verify_bouquets(max_sum=0, max_witness_n=17)
        return _suites(r)

    _gate("6 exponential bound n=3..17", 10, run)


def test_7_cochordal():
    def run():
        r = verify.verify_cochordal(max_n=7)
        ok, note = _suites(r)
        d = r.details
        return ok, f"{note}, {d['cochordal']}/{d['corpus']} cochordal, {d['symmetric']} symmetric"

    _gate("7 cochordal suite", 180, run)


def test_8_oracle_and_properties():
    def run():
        return _suites(
            verify.verify_oracle(count=1000, max_n=14, pair_count=200),
            verify.verify_trees(count=500, max_n=16),
            verify.verify_engstrom(count=200, max_n=12),
        )

    _gate("8 oracle/property suite", 300, run)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
