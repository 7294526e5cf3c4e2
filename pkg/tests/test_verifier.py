import pytest

from iterseq.cycledetect import find_terminal
from iterseq.digitproc import DFP, DPP, apply, apply_to_multiset
from iterseq.digits import enumerate_multisets_upto, min_value_of_multiset
from iterseq.errors import CatalogInconsistent
from iterseq.verifier import (
    DFP_LISTING,
    CycleCatalog,
    catalog_for,
    coverage_argument_check,
    verify_theorem,
)


def test_catalog_sizes():
    dfp, dpp = catalog_for("dfp"), catalog_for("dpp")
    assert dfp.names == ("fixA", "fixB", "fixC", "fixD", "loop2A", "loop2B", "loop3")
    assert [len(c) for _, c in dfp.entries] == [1, 1, 1, 1, 2, 2, 3]
    assert dpp.names == ("fixA", "fixB", "loop2", "loop3", "loop8", "loop11", "loop40", "loop97")
    assert [len(c) for _, c in dpp.entries] == [1, 1, 2, 3, 8, 11, 40, 97]


def test_catalogs_are_consistent():
    for kind in ("dfp", "dpp"):
        cat = catalog_for(kind)
        cat.validate()
        assert all(ok for *_, ok in cat.successor_checks())


def test_corrupted_catalog_is_rejected():
    bad = CycleCatalog.from_listing(DFP, DFP_LISTING[:-1] + (("loop3", (169, 363601, 1455)),))
    with pytest.raises(CatalogInconsistent):
        bad.validate()
    overlap = CycleCatalog.from_listing(DFP, (("a", (1,)), ("b", (1,))))
    with pytest.raises(CatalogInconsistent):
        overlap.validate()


def test_lookup():
    cat = catalog_for("dfp")
    r = find_terminal(DFP, 1454)
    assert cat.lookup(r.cycle) == "loop3"
    assert cat.lookup(find_terminal(DPP, 7).cycle) is None


def test_single_digit_cases():
    rep = verify_theorem("dfp", depth=1)
    assert rep.cases_total == 9
    assert rep.confirmed
    # independent: iterate each digit directly
    expected = {}
    for d in range(1, 10):
        name = catalog_for("dfp").lookup(find_terminal(DFP, d).cycle)
        expected[name] = expected.get(name, 0) + 1
    assert rep.cases_per_terminal == {n: expected[n] for n in catalog_for("dfp").names if n in expected}


def test_representatives_have_the_multiset_image():
    for kind in (DFP, DPP):
        for m in enumerate_multisets_upto(4):
            assert apply(kind, min_value_of_multiset(m)) == apply_to_multiset(kind, m)


def test_dfp_full():
    rep = verify_theorem(DFP)
    assert rep.cases_total == 11439
    assert rep.confirmed and rep.unclassified_cases == 0
    assert set(rep.cases_per_terminal) == set(catalog_for("dfp").names)
    assert sum(rep.cases_per_terminal.values()) == 11439


def test_memoized_and_plain_runs_agree():
    a = verify_theorem(DFP, memoize=True)
    b = verify_theorem(DFP, memoize=False)
    assert a == b
    c = verify_theorem(DPP, depth=4, memoize=True)
    d = verify_theorem(DPP, depth=4, memoize=False)
    assert c == d


def test_worker_count_does_not_change_report():
    one = verify_theorem(DFP, workers=1)
    three = verify_theorem(DFP, workers=3)
    assert one == three


def test_transient_definition():
    # a representative already on its cycle has no transient; depth 1 contains 1 and 2
    rep = verify_theorem(DFP, depth=1)
    longest = max(
        find_terminal(DFP, d).transient_length for d in range(1, 10)
    )
    assert rep.max_transient_length == longest


def test_coverage_argument():
    assert coverage_argument_check("dfp") is True
    assert coverage_argument_check("dpp") is True
    assert coverage_argument_check("dfp", threshold=10**3) is False
    assert coverage_argument_check("dpp", threshold=10**9) is False


def test_dpp_worker_split_matches_serial():
    assert verify_theorem(DPP, depth=7, workers=1) == verify_theorem(DPP, depth=7, workers=4)
