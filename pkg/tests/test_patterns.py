import pytest
from hypothesis import given

from perfdiv.core import complement, cycle, induced, named
from perfdiv.generators import enumerate_up_to
from perfdiv.patterns import (
    HoleCertificate,
    find_hole,
    find_induced,
    find_odd_antihole,
    holes_by_subset_scan,
    is_l_free,
    iter_holes,
)

from strategies import graphs


def test_c5_in_figure1():
    g = named("figure1")
    emb = find_induced(g, named("c5"))
    assert emb is not None and emb.verify(g, named("c5"))
    assert find_induced(g, named("k23")) is None


def test_is_l_free_reports_pattern():
    ok, hit = is_l_free(named("petersen"), [named("k23"), named("c5")])
    assert not ok and hit[0] == named("c5")
    assert is_l_free(named("petersen"), [named("complete(3)")]) == (True, None)


@pytest.mark.parametrize("k", [5, 6, 7, 8, 9])
def test_cycles_are_their_own_hole(k):
    h = find_hole(cycle(k))
    assert h.length == k and h.verify(cycle(k))
    assert h.parity == ("odd" if k % 2 else "even")


@pytest.mark.parametrize("k", [5, 7, 9])
def test_odd_antiholes(k):
    g = complement(cycle(k))
    cert = find_odd_antihole(g)
    assert cert.complemented and cert.length == k and cert.verify(g)


def test_forged_certificate_fails():
    assert not HoleCertificate((0, 1, 2, 3, 4)).verify(named("complete(5)"))


def test_holes_match_subset_scan_exhaustively():
    for g in enumerate_up_to(7):
        found = sorted(sorted(h) for h in iter_holes(g))
        assert found == sorted(sorted(h) for h in holes_by_subset_scan(g))


@given(graphs(max_n=9))
def test_holes_match_subset_scan(g):
    for parity in ("odd", "even"):
        found = {frozenset(h) for h in iter_holes(g, parity)}
        assert found == set(holes_by_subset_scan(g, parity))


@given(graphs(min_n=1, max_n=9))
def test_hole_freeness_is_hereditary(g):
    if find_hole(g, "odd", 5) is None:
        sub, _ = induced(g, range(g.n - 1))
        assert find_hole(sub, "odd", 5) is None
