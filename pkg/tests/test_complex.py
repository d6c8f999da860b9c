import pytest

from kfc import models
from kfc.complex import (Arrow, CfkComplex, Generator, canonical_signature, direct_sum, dual,
                         tensor, validate)
from kfc.errors import KfcError


def kinds(c):
    return [v.kind for v in validate(c)]


def test_models_are_valid(model_set):
    for c in model_set:
        assert validate(c) == [], c.name


def test_maslov_drop_reported():
    c = CfkComplex("bad", [Generator("x", 0, 0), Generator("y", 0, 0)], [Arrow("x", "y")])
    assert kinds(c) == ["maslov-drop"]


def test_filtration_and_negative_power():
    up = CfkComplex("up", [Generator("x", 0, 0), Generator("y", -1, 1)], [Arrow("x", "y")])
    assert "alexander-filtration" in kinds(up)
    neg = CfkComplex("neg", [Generator("x", 0, 0), Generator("y", -3, -1)], [Arrow("x", "y", -1)])
    assert "negative-u-power" in kinds(neg)


def test_d_squared_detected():
    c = CfkComplex("chain", [Generator("x", 0, 0), Generator("y", -1, 0), Generator("z", -2, 0)],
                   [Arrow("x", "y"), Arrow("y", "z")])
    assert kinds(c) == ["d-squared"]


def test_construction_rejects_dangling_and_duplicates():
    with pytest.raises(KfcError):
        CfkComplex("d", [Generator("x", 0, 0)], [Arrow("x", "q")])
    with pytest.raises(KfcError):
        CfkComplex("d", [Generator("x", 0, 0), Generator("x", 1, 0)])


def test_tensor_sizes_and_names():
    t = models.t23()
    tt = tensor(t, t)
    assert len(tt) == 9 and len(tt.arrows) == 12
    assert tt.name == "T23+T23"
    assert "b|c" in tt.by_id


def test_dual_is_an_involution_up_to_ids():
    for c in (models.t23(), models.staircase(2, 1, 1, 2), models.figure_eight()):
        assert canonical_signature(dual(dual(c))) == canonical_signature(c)
        assert dual(dual(c)).name == c.name


def test_dual_negates_gradings():
    d = dual(models.t23())
    assert d.name == "-T23"
    assert sorted((g.maslov, g.alexander) for g in d.generators) == [(0, -1), (1, 0), (2, 1)]


def test_equality_ignores_generator_order():
    c = models.t23()
    assert CfkComplex(c.name, reversed(c.generators), c.arrows) == c


def test_direct_sum_concatenates():
    s = direct_sum("S", [models.t23(), models.figure_eight()])
    assert len(s) == 8 and validate(s) == []


def test_vertical_and_horizontal_lengths():
    t = models.t23()
    by = {(a.source, a.target): a for a in t.arrows}
    assert (t.hlen(by["b", "a"]), t.vlen(by["b", "a"])) == (1, 0)
    assert (t.hlen(by["b", "c"]), t.vlen(by["b", "c"])) == (0, 1)
