import pytest

from tesscover.graph import FamilySpec, GraphError
from tesscover.verify import (
    DEFAULT_CHECKS,
    W6_COVER,
    e3n_cover,
    format_reports,
    format_rows,
    parse_family_range,
    run_check,
    sweep,
    verify_e3n,
    verify_w6,
    verify_windmill,
)


def test_w6_passes():
    rep = verify_w6()
    assert rep.status == "pass", rep.failures
    assert rep.observed["T"] == 3 and rep.observed["hub_local_bound"] == 3


def test_w6_negative_control():
    mutated = (tuple(p for p in W6_COVER[0] if p != (4, 5, 6)) + ((4,), (5,), (6,)),) + W6_COVER[1:]
    rep = verify_w6(mutated)
    assert rep.status == "fail"
    assert rep.failures == ["fixture_uncovered_edges"]
    assert [4, 5] in rep.observed["fixture_uncovered_edges"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_e3n_passes(n):
    rep = verify_e3n(n)
    assert rep.status == "pass", rep.failures


def test_e3n_4_clique_sizes():
    assert verify_e3n(4).observed["clique_sizes"] == {"3": 12, "5": 3}


def test_e3n_3_per_tessellation():
    obs = verify_e3n(3).observed
    assert obs["fixture_edges_per_tessellation"] == [9, 9, 9]
    assert obs["fixture_pairwise_edge_disjoint"]


def test_e3n_fixture_literal():
    t0, t1, t2 = e3n_cover(2)
    assert t0 == ((0, 3, 6), (1, 2), (4, 5))
    assert t1 == ((1, 4, 6), (2, 3), (5, 0))
    assert t2 == ((2, 5, 6), (3, 4), (0, 1))


def test_e3n_bad_n():
    with pytest.raises(GraphError):
        verify_e3n(1)


@pytest.mark.parametrize("l, s, T", [(5, 3, 5), (2, 2, 2), (3, 4, 3)])
def test_windmill(l, s, T):
    rep = verify_windmill(l, s)
    assert rep.status == "pass" and rep.observed["T"] == T


def test_windmill_2_2_is_path():
    from tesscover.graph import path, windmill
    assert windmill(2, 2).edges == {(0, 1), (0, 2)}
    assert len(path(3).edges) == 2


def test_default_checks_all_pass():
    reports = [run_check(c) for c in DEFAULT_CHECKS]
    assert all(r.status == "pass" for r in reports)
    text = format_reports(reports)
    assert text.count("[PASS]") == len(DEFAULT_CHECKS)


def test_parse_family_range():
    assert parse_family_range("wheel:3-5") == [FamilySpec("wheel", {"n": n}) for n in (3, 4, 5)]
    assert parse_family_range("windmill:2-3:s=4") == [FamilySpec("windmill", {"l": l, "s": 4}) for l in (2, 3)]
    assert parse_family_range("petersen") == [FamilySpec("petersen")]
    with pytest.raises(GraphError):
        parse_family_range("bogus:1-2")


def test_sweep_rows():
    rows = sweep(parse_family_range("wheel:6") + parse_family_range("extended_wheel:4") + parse_family_range("complete:5"))
    by = {r["graph"]: r for r in rows}
    assert (by["wheel(n=6)"]["T"], by["wheel(n=6)"]["chi_K"], by["wheel(n=6)"]["ratio"]) == (3, 6, "1/2")
    assert (by["extended_wheel(n=4)"]["T"], by["extended_wheel(n=4)"]["chi_K"]) == (3, 15)
    assert (by["complete(n=5)"]["T"], by["complete(n=5)"]["chi_K"]) == (1, 1)
    assert sum(r["status"] == "out_of_scope" for r in rows) == 4
    assert all(r["status"] in ("pass", "out_of_scope") for r in rows)
    assert "out of scope" in format_rows(rows)


def test_sweep_skips_outside_envelope():
    rows = sweep(parse_family_range("extended_wheel:7"), include_out_of_scope=False)
    assert rows[0]["status"] == "skipped"
