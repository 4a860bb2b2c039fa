from __future__ import annotations

import pytest

from lcmlat.errors import BadTheoremId
from lcmlat.formats import dumps_json
from lcmlat.verify import (
    CATALOG,
    GRAPH_CASES,
    TheoremCase,
    betti_oracle_check,
    random_ideal,
    run_cases,
    verify,
)


def test_catalog_ids_are_closed():
    with pytest.raises(BadTheoremId):
        TheoremCase("made-up")
    assert len(CATALOG) == 17


def test_random_ideal_is_deterministic():
    import random

    a = [random_ideal(random.Random(42), 5, 5, 3) for _ in range(10)]
    b = [random_ideal(random.Random(42), 5, 5, 3) for _ in range(10)]
    assert a == b


def test_graph_cases_small_bounds():
    results = run_cases(list(GRAPH_CASES), max_n=4)
    assert all(r.passed for r in results)
    assert all(r.instances_checked == 43 for r in results)


def test_single_case_api():
    res = verify(TheoremCase("uss-modular", max_n=4))
    assert res.passed and res.verdict == "pass"


def test_seeded_cases_pass_quickly():
    for case_id, count in [
        ("pd-height-bound", 30),
        ("boolean-equivalence", 30),
        ("phan-roundtrip", 20),
        ("polarization-invariance", 30),
    ]:
        res = verify(TheoremCase(case_id, count=count, seed=3))
        assert res.passed, (case_id, res.counterexamples[:2])


def test_fixture_cases_pass():
    for case_id in ("special-families", "modular-cm", "product-lemma"):
        res = verify(TheoremCase(case_id))
        assert res.passed, (case_id, res.counterexamples[:2])


def test_geometric_and_strong_cases():
    res = verify(TheoremCase("geometric-pd", count=30))
    assert res.passed
    res = verify(TheoremCase("strongly-complemented-necessary", count=20))
    assert res.passed


def test_results_serialize_deterministically():
    r1 = verify(TheoremCase("boolean-edge", max_n=4))
    r2 = verify(TheoremCase("boolean-edge", max_n=4))
    assert dumps_json(r1.to_json()) == dumps_json(r2.to_json())
    assert "elapsed" not in r1.to_json()


def test_betti_oracle_check_small():
    res = betti_oracle_check(count=15, seed=9, chars=(2, 32003))
    assert res.passed


def test_jobs_parallel_matches_serial():
    serial = run_cases(["coatomic"], max_n=4, jobs=1)[0]
    parallel = run_cases(["coatomic"], max_n=4, jobs=2)[0]
    assert serial.instances_checked == parallel.instances_checked
    assert serial.counterexamples == parallel.counterexamples
