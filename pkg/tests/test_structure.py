import pytest

from zfpd.graph import Graph
from zfpd.families import (
    complete,
    complete_multipartite,
    cycle,
    enumerate_connected,
    h_graph,
    path,
    wagner_graph,
    wheel,
)
from zfpd.structure import has_minor, is_outerplanar, is_planar

from oracles import brute_minor


def test_has_minor_basic_examples():
    k4 = complete(4)
    w = has_minor(k4, k4)
    assert w is not None
    w.validate(k4, k4)
    assert has_minor(cycle(5), k4) is None
    w5 = wheel(5)
    w = has_minor(w5, k4)
    assert w is not None
    w.validate(w5, k4)


def test_minor_monotone_under_subpatterns():
    for g in [wheel(5), complete(5), wagner_graph()]:
        if has_minor(g, complete(4)) is not None:
            assert has_minor(g, complete(3)) is not None


def test_has_minor_empty_and_oversized_patterns():
    assert has_minor(path(3), Graph(0)) is not None
    with pytest.raises(ValueError):
        has_minor(complete(8), complete(7))


def test_has_minor_against_brute_force():
    patterns = [complete(3), complete(4), complete_multipartite((2, 3))]
    for n in range(1, 6):
        for g in enumerate_connected(n):
            for pat in patterns:
                witness = has_minor(g, pat)
                assert (witness is not None) == brute_minor(g, pat)
                if witness is not None:
                    witness.validate(g, pat)


def test_outerplanar_examples():
    for n in range(3, 9):
        assert is_outerplanar(cycle(n))
    assert not is_outerplanar(complete(4))
    assert not is_outerplanar(complete_multipartite((2, 3)))
    assert is_outerplanar(h_graph())
    assert is_outerplanar(path(1))
    assert not is_outerplanar(wheel(6))
    assert not is_outerplanar(wagner_graph())


def test_planar_examples():
    assert not is_planar(complete(5))
    assert not is_planar(complete_multipartite((3, 3)))
    assert is_planar(wheel(7))
    assert is_planar(wagner_graph()) is False
    assert is_planar(complete(4))
    with pytest.raises(ValueError):
        is_planar(path(13))


def test_wagner_k5_vs_k33():
    # the Wagner graph is nonplanar through the bipartite pattern only
    wg = wagner_graph()
    assert has_minor(wg, complete(5)) is None
    w = has_minor(wg, complete_multipartite((3, 3)))
    assert w is not None
    w.validate(wg, complete_multipartite((3, 3)))


def test_outerplanar_implies_planar_and_edge_bounds():
    for n in range(1, 8):
        for g in enumerate_connected(n):
            outer = is_outerplanar(g)
            planar = is_planar(g)
            if outer:
                assert planar
                assert g.n < 2 or g.m <= 2 * g.n - 3
            if planar and g.n >= 3:
                assert g.m <= 3 * g.n - 6
