import pytest

import hsdcodes as hsd


def test_gray_map():
    assert hsd.gray_map("(5B6)") == "(121013)"
    assert hsd.gray_map("(0)") == "(00)"


def test_unitary_elements():
    assert hsd.unitary_elements("f4") == "123"
    assert hsd.unitary_elements("f4u") == "1235AF"


def test_build_and_distance():
    code = hsd.build("thm1", "f4", "1", "1",
                     ["(000333)", "(110101)", "(311023)"])
    assert code.length == 24
    assert code.rank == 12
    assert code.ring == "f4"
    assert code.is_self_dual()
    assert code.min_distance() == 8
    assert code.min_distance(method="exhaustive", workers=2) == 8


def test_weight_distribution_and_alpha():
    code = hsd.build("thm1", "f4", "1", "1",
                     ["(000333)", "(110101)", "(311023)"])
    dist = code.weight_distribution(cutoff=10, workers=2)
    assert dist[0] == 1
    assert all(w % 2 == 0 for w in dist)
    assert min(w for w in dist if w > 0) == 8


def test_building_up():
    base = hsd.build("thm1", "f4", "1", "1",
                     ["(000333)", "(110101)", "(311023)"])
    ext = hsd.building_up(base, "(100000000000000000000000)", "1")
    assert ext.length == 26
    assert ext.rank == 13
    assert ext.is_self_dual()


def test_gray_image():
    # thm2 with k=1 and generator e0 yields (I | I), self-dual over any ring
    code = hsd.build("thm2", "f4u", "1", "1", ["(100)"])
    assert code.is_self_dual()
    img = code.gray_image()
    assert img.ring == "f4"
    assert img.length == 2 * code.length


def test_bad_input_raises():
    with pytest.raises(hsd.HsdError):
        hsd.gray_map("(G)")  # not a valid symbol
    with pytest.raises(hsd.HsdError):
        hsd.build("thm1", "f4", "1", "1", ["(00)", "(00)", "(10)"])


def test_verify_table():
    ok, report = hsd.verify_table("26-1", max_rows=1)
    assert ok
    assert "pass" in report


def test_formulas():
    assert hsd.distance_bound(24) == 10
    assert hsd.distance_bound(40) == 14
    assert hsd.unitary_count("f4", 2) > 0
    assert "26-1" in hsd.table_ids()


def test_search():
    lines = hsd.search(construction="thm1", ring="f4", n=2,
                       target_d=2, budget=2000, seed=5)
    assert lines
    assert all(line.startswith("construction=thm1") for line in lines)
