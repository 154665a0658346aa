import json

import pytest

import semikit

PB = [[0, 0, 0, 0], [1, 1, 1, 1], [0, 0, 2, 2], [1, 1, 3, 3]]


def test_table_round_trip():
    s = semikit.Semigroup(PB, "pb")
    assert s.order == 4
    assert s.table == PB
    assert s(3, 2) == 3
    assert semikit.Semigroup.parse(s.format()) == s


def test_kernel_of_worked_example():
    k = semikit.kernel(semikit.Semigroup(PB))
    assert k["kernel"] == [0, 1]
    assert k["minimal_left_ideals"] == [[0, 1]]
    assert k["minimal_right_ideals"] == [[0], [1]]


def test_greens_and_decomposition():
    rb = semikit.Semigroup.from_descriptor("rect_band:2,2")
    g = semikit.greens(rb)
    assert len(g["h_classes"]) == 4
    assert len(g["d_classes"]) == 1
    d = semikit.rees_decompose(rb, base_idempotent=3)
    assert d["e"] == 3
    assert d["round_trip"]
    assert len(d["I"]) * len(d["Lambda"]) == 4


def test_errors_carry_kind():
    with pytest.raises(semikit.SemikitError) as info:
        semikit.Semigroup([[0, 1], [0, 0]])
    assert info.value.kind == "NotAssociative"
    with pytest.raises(semikit.SemikitError):
        semikit.rees_decompose(semikit.Semigroup(PB))


def test_census_and_verify():
    counts, members = semikit.census(3)
    assert counts == [0, 1, 5, 24]
    report = json.loads(semikit.verify(members))
    assert report["summary"]["instances"] == 30
    assert report["summary"]["failures"] == 0


def test_cli_entry_point():
    code, out, err = semikit.cli(["gen", "--help"])
    assert code == 0
    code, out, err = semikit.cli(["kernel", "missing.sg", "--bogus"])
    assert code == 2
    assert "--bogus" in err
