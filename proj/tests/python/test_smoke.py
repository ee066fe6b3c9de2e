"""Smoke tests for the python bindings.

Runs against the installed package when available, otherwise against the
extension module from the cmake build tree (ctest sets PYTHONPATH).
"""

import math

import pytest

try:
    import mbtd
except ImportError:
    mbtd = pytest.importorskip("_mbtd")

C4 = "4\n0 1\n1 2\n2 3\n0 3\n"


def test_graph_round_trip():
    g = mbtd.Graph(C4)
    assert g.order == 4
    assert g.is_connected()
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert sorted(g.open_neighborhood(0)) == [1, 3]
    assert sorted(g.closed_neighborhood(0)) == [0, 1, 3]
    assert mbtd.Graph(g.to_edge_list()).edges() == g.edges()


def test_parse_error():
    with pytest.raises(Exception, match="line"):
        mbtd.Graph("2\n0 0\n")


def test_solve_anchor_values():
    g = mbtd.Graph(C4)
    for game, scored, start in [
        ("mbtd", "dominator", "dominator"),
        ("mbtd", "dominator", "staller"),
        ("mbd", "dominator", "dominator"),
        ("mbd", "dominator", "staller"),
    ]:
        r = mbtd.solve(g, game=game, scored=scored, start=start)
        assert r["value"] == 2
    assert mbtd.solve(g)["optimal_first_moves"] == [0, 1, 2, 3]
    assert mbtd.solve(g)["nodes"] > 0


def test_infinite_value_is_float_inf():
    p4 = mbtd.path(4)
    r = mbtd.solve(p4, game="mbtd")
    assert math.isinf(r["value"])
    assert r["optimal_first_moves"] == []


def test_outcome():
    assert mbtd.outcome(mbtd.Graph(C4), game="mbtd") == "D"
    assert mbtd.outcome(mbtd.cycle(3), game="mbtd") == "N"
    assert mbtd.outcome(mbtd.path(4), game="mbtd") == "S"


def test_solver_matches_reference():
    g = mbtd.cycle(5)
    for game in ("mbd", "mbtd"):
        for start in ("dominator", "staller"):
            assert mbtd.solve(g, game=game, start=start)["value"] == mbtd.naive_value(
                g, game=game, start=start
            )


def test_best_line_c4():
    line = mbtd.best_line(mbtd.Graph(C4))
    assert len(line) >= 2
    assert len(set(line)) == len(line)


def test_domination_numbers():
    assert mbtd.domination_number(mbtd.path(7)) == 3
    assert mbtd.total_domination_number(mbtd.cycle(8)) == 4
    assert math.isinf(mbtd.total_domination_number(mbtd.Graph("2\n")))


def test_construct_families():
    g, landmarks = mbtd.construct("G2l", l=3)
    assert g.order == 8
    assert landmarks == {"u": 6, "v": 7}
    f, _ = mbtd.construct("Fkl", k=2, l=3)
    assert f.order == 11
    with pytest.raises(Exception):
        mbtd.construct("nope")


def test_pairing():
    p = mbtd.find_pairing_total_dominating_set(mbtd.cycle(4), 2)
    assert p is not None and len(p) == 2
    assert mbtd.find_pairing_total_dominating_set(mbtd.path(4), 2) is None
