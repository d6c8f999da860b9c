import pytest

from kfc import models
from kfc.bordered import hat_cable, raw_cable
from kfc.errors import KfcError
from kfc.hat import (HatArrow, HatComplex, HatGenerator, hat_signature, relative_gradings,
                     total_homology_rank, validate_hat)


def kinds(h):
    return sorted({v.kind for v in validate_hat(h)})


def test_trefoil_hat_valid():
    h = models.trefoil_hat()
    assert validate_hat(h) == [] and h.absolute
    assert total_homology_rank(h) == 1


def test_shift_and_maslov_checks():
    h = HatComplex("x", [HatGenerator("p", 0, 2), HatGenerator("q", 0, 0)], [HatArrow("p", "q", 1)])
    assert kinds(h) == ["alexander-shift", "maslov-drop"]
    neg = HatComplex("n", [HatGenerator("p"), HatGenerator("q")], [HatArrow("p", "q", -1)])
    assert "negative-shift" in kinds(neg)


def test_inconsistent_loop():
    # p -> q [1], p -> r [0], q -> s [0], r -> s [0]: the square closes with mismatched shifts
    h = HatComplex("loop", [HatGenerator(g) for g in "pqrs"],
                   [HatArrow("p", "q", 1), HatArrow("p", "r", 0), HatArrow("q", "s", 0), HatArrow("r", "s", 0)])
    assert "relative-grading" in kinds(h)


def test_relative_offsets_of_raw_cable_match_table():
    p = 3
    offsets, problems = relative_gradings(raw_cable(p))
    assert problems == []
    reduced = hat_cable(p)
    ms = {g.id: (g.maslov, g.alexander) for g in reduced.generators}
    # inside one component, differences of absolute gradings equal differences of offsets
    pairs = [("b1.v1", "b1.mu1"), ("b1.v2", "b2.mu1"), ("b1.mu2", "b4.mu2")]
    for x, y in pairs:
        dx = (ms[x][0] - ms[y][0], ms[x][1] - ms[y][1])
        do = (offsets[x][0] - offsets[y][0], offsets[x][1] - offsets[y][1])
        assert dx == do


def test_signature_needs_absolute_gradings():
    with pytest.raises(KfcError):
        hat_signature(raw_cable(2))


def test_relative_only_round_trip():
    h = models.trefoil_hat()
    rel = h.relative_only()
    assert not rel.absolute
    assert rel.with_gradings({g.id: (g.maslov, g.alexander) for g in h.generators}, h.name) == h
