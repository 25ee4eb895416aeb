from oraclekit.propcheck import GenConfig, run_suite
from oraclekit.properties import PROPERTY_NAMES, REGISTRY

EXPECTED = (
    "c1a.nonempty",
    "c1a.begin_end",
    "c1a.bounds",
    "c1a.monotonic",
    "c1a.maximal",
    "c1a.oracle_eq",
    "c1b.merge_sorted",
    "c1b.sorted",
    "c1b.permutation",
    "c2a.index",
    "c2a.value",
    "c2a.smallest",
    "c2a.oracle_eq",
    "c2b.binary",
    "c2b.heap",
    "c2b.traversal",
    "c2b.oracle_eq",
    "c3.seq_correct",
    "c3.parallel_eq_seq",
    "c3.no_concurrency_issues",
    "c3.race_witness",
)


def test_registry_names_are_stable():
    assert PROPERTY_NAMES == EXPECTED
    assert set(REGISTRY) == set(EXPECTED)


def test_registry_kinds():
    kinds = {name: REGISTRY[name].kind for name in PROPERTY_NAMES}
    assert kinds["c3.seq_correct"] == "coo"
    assert kinds["c3.parallel_eq_seq"] == "coo"
    assert kinds["c3.no_concurrency_issues"] == "fixed"
    assert kinds["c3.race_witness"] == "fixed"
    sequence_names = [n for n in PROPERTY_NAMES if n.startswith(("c1", "c2"))]
    assert all(kinds[n] == "sequence" for n in sequence_names)
    assert all(REGISTRY[n].summary for n in PROPERTY_NAMES)


def test_sequence_and_seq_coo_properties_pass_quickly():
    names = [
        n
        for n in PROPERTY_NAMES
        if REGISTRY[n].kind == "sequence" or n == "c3.seq_correct"
    ]
    results = run_suite(names, GenConfig(seed=1, cases=60, max_len=40))
    assert all(r.passed for r in results), [
        (r.name, r.message) for r in results if not r.passed
    ]


def test_fixed_properties_pass():
    results = run_suite(
        ["c3.race_witness"], GenConfig(seed=1, cases=1)
    )
    assert results[0].passed and results[0].cases_run == 1


def test_parallel_property_passes_on_a_few_cases():
    results = run_suite(["c3.parallel_eq_seq"], GenConfig(seed=1, cases=3))
    assert results[0].passed
