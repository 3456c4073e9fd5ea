from necklace_bq.verify import SUITES, run_sample, run_suite


def test_every_suite_passes_a_small_run():
    for name in SUITES:
        report = run_suite(name, samples=4, seed=3, max_edges=6)
        assert report["passed"], report


def test_samples_are_reproducible():
    a = [o.inputs for o in run_sample("nq-bialgebra", 7, 2, 6)]
    b = [o.inputs for o in run_sample("nq-bialgebra", 7, 2, 6)]
    assert a == b


def test_parallel_merge_matches_serial():
    serial = run_suite("lie-bialgebra", samples=6, seed=1, max_edges=6)
    parallel = run_suite("lie-bialgebra", samples=6, seed=1, max_edges=6, jobs=2)
    assert serial["reports"] == parallel["reports"]


def test_report_shape():
    report = run_suite("confluence", samples=2, seed=0, max_edges=4)
    assert report["schema"] == 1
    rep, = report["reports"]
    assert rep == {"identity": "confluence", "samples": 2, "passed": True, "failures": []}
