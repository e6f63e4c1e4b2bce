import pytest

from oddhit.fixtures import FAIL, PASS, SKIPPED, all_fixtures, normalize_vector, run, same_up_to_scalar, select


def test_fixture_ids_unique_and_cited():
    fx = all_fixtures()
    ids = [f.id for f in fx]
    assert len(ids) == len(set(ids)) and ids == sorted(ids)
    assert all(f.source for f in fx)


def test_select_patterns():
    assert [f.id for f in select("slice-133")] == ["slice-133"]
    assert {f.id for f in select("lemma-*")} == {"lemma-short-cartan", "lemma-additivity"}
    assert select("nothing-here") == []


def test_full_run_passes():
    rep = run()
    assert rep.ok, [(r.id, r.detail) for r in rep.failed]
    c = rep.counts()
    assert c[FAIL] == 0 and c[PASS] > 50
    skipped = [r for r in rep.results if r.status == SKIPPED]
    assert all(r.id.startswith("rank2-inv-") for r in skipped)


def test_scalar_normalization():
    assert normalize_vector({(1, 0): 2, (0, 1): 1}, 3) == {(0, 1): 1, (1, 0): 2}
    assert same_up_to_scalar({(1,): 2, (2,): 4}, {(1,): 1, (2,): 2}, 5)
    assert not same_up_to_scalar({(1,): 1, (2,): 1}, {(1,): 1, (2,): 2}, 5)
    assert not same_up_to_scalar({(1,): 1}, {(2,): 1}, 5)
    assert same_up_to_scalar({}, {(1,): 0}, 3)


@pytest.mark.parametrize("fid", ["basis-3-3-5", "slice-38", "mode-graded-2-3-4", "digits-3-3-5"])
def test_single_fixture(fid):
    assert run(fid).results[0].status == PASS
