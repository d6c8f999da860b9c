import pytest
from hypothesis import given, settings, strategies as st

from kfc import invariants as inv
from kfc import models
from kfc.complex import dual, tensor
from kfc.errors import KfcError, NotKnotLikeError
from kfc.formats import read_complex
from kfc.reduction import edge_reduce
from kfc.regions import Column, HookWithTail, map_is_trivial
from conftest import DATA

T23 = models.t23()
ST = models.staircase(2, 1, 1, 2)


def test_reports_of_models():
    assert inv.report(models.unknot()).line() == \
        "tau=0 epsilon=0 a1=- a2=- breadth=0 gamma_lb=0 g4_lb=0 gc_lb=0"
    assert inv.report(T23).line() == \
        "tau=1 epsilon=1 a1=1 a2=1 breadth=1 gamma_lb=1 g4_lb=1 gc_lb=1"
    r = inv.report(ST)
    assert (r.tau, r.epsilon, r.a1, r.a2, r.breadth) == (3, 1, 2, 1, 3)
    e = inv.report(models.figure_eight())
    assert (e.tau, e.epsilon, e.a1, e.gamma_lower) == (0, 0, None, 0)


def test_dual_trefoil():
    d = dual(T23)
    assert inv.tau(d) == -1 and inv.epsilon(d) == -1
    r = inv.report(d)
    assert (r.a1, r.a2, r.gamma_lower) == (1, 1, 1)
    assert any("dual" in n for n in r.notes)


def test_trefoil_minus_trefoil():
    r = inv.report(tensor(T23, dual(T23)))
    assert (r.tau, r.epsilon, r.gamma_lower, r.breadth) == (0, 0, 0, 2)


def test_a1_a2_require_epsilon_one():
    with pytest.raises(KfcError, match="epsilon=1"):
        inv.a1(models.unknot())
    with pytest.raises(KfcError, match="epsilon=1"):
        inv.a2(dual(T23))


def test_not_knot_like():
    from kfc.complex import Arrow, CfkComplex, Generator
    two = CfkComplex("H", [Generator("x0", 0, 1), Generator("x1", -1, 0)], [Arrow("x1", "x0", 1)])
    with pytest.raises(NotKnotLikeError, match="not a knot-like complex"):
        inv.tau(two)


def test_a2_undefined_fixture():
    c = read_complex(DATA / "a2_undefined.cfk")
    r = inv.report(c)
    assert (r.tau, r.epsilon, r.a1, r.a2) == (1, 1, 3, inv.UNDEFINED)
    assert r.gamma_lower == 0 and "a2=undef" in r.line()
    # well past the scan cap, every tailed hook still kills the column class
    for s in range(1, 12):
        assert map_is_trivial(c, Column(), HookWithTail(1, 3, s))


def test_epsilon_equivalence_examples():
    assert inv.epsilon_equivalent(T23, T23)
    assert not inv.epsilon_equivalent(T23, models.unknot())
    assert inv.epsilon_equivalent(models.unknot(), models.figure_eight())


def test_basis_witness_on_trefoil():
    assert inv.basis_witness(T23, 1, 1, 1) == ("a", "b", "c")


def test_pretty_lists_notes():
    text = inv.report(dual(T23)).pretty()
    assert text.splitlines()[0].startswith("tau") and "note:" in text


def test_breadth_bounds_gamma(model_set):
    for c in model_set:
        assert inv.gamma_lower_bound(c) <= inv.breadth(c), c.name


steps = st.lists(st.integers(1, 3), min_size=2, max_size=6).filter(lambda s: len(s) % 2 == 0)


@settings(max_examples=40, deadline=None)
@given(steps)
def test_staircase_invariants(s):
    c = models.staircase(*s)
    r = inv.report(c)
    height = sum(s[1::2])
    assert r.tau == height == r.breadth
    assert (r.epsilon, r.a1, r.a2) == (1, s[0], s[1])


@settings(max_examples=20, deadline=None)
@given(steps, steps)
def test_tau_additive_on_staircases(s1, s2):
    c1, c2 = models.staircase(*s1), models.staircase(*s2)
    assert inv.tau(tensor(c1, c2)) == inv.tau(c1) + inv.tau(c2)


@settings(max_examples=20, deadline=None)
@given(steps)
def test_reduction_keeps_invariants(s):
    c = tensor(models.staircase(*s), models.figure_eight())
    assert inv.report(edge_reduce(c)).line() == inv.report(c).line()
