import pytest

from kfc import models
from kfc.bordered import hat_cable, raw_cable
from kfc.errors import KfcError
from kfc.render import RenderSpec, layout, render


def test_text_trefoil():
    out = render(models.t23(), RenderSpec("text"))
    grid = [line for line in out.splitlines() if "|" in line]
    assert sum(line.count("*") for line in grid) == 3
    assert "arrows (2):" in out
    assert "b -> U^1a" in out


def test_svg_cable_counts():
    svg = render(hat_cable(3), RenderSpec("svg"))
    assert svg.count('class="gen"') == 13
    assert svg.count('class="arrow"') == 6
    assert svg.startswith("<?xml")


def test_tikz_unknot_single_node():
    tex = render(models.unknot(), RenderSpec("tikz"))
    assert tex.count(r"\filldraw") == 1 and r"\begin{tikzpicture}" in tex


def test_output_is_stable():
    for fmt in ("text", "svg", "tikz"):
        spec = RenderSpec(fmt, gradings=True, overlay_tau=3)
        c = models.staircase(2, 1, 1, 2)
        assert render(c, spec) == render(c, spec)


def test_overlay_and_labels():
    c = models.staircase(2, 1, 1, 2)
    assert "<- j = tau" in render(c, RenderSpec("text", overlay_tau=3))
    assert 'class="overlay"' in render(c, RenderSpec("svg", overlay_tau=3))
    assert "c0 (0)" in render(c, RenderSpec("svg", gradings=True))


def test_translates_are_hollow():
    lay = layout(models.t23())
    hollow = [it for it in lay.items if not it.solid]
    assert [(it.label, it.lattice) for it in hollow] == [("U^1a", (-1, 0))]


def test_coincident_points_spread():
    lay = layout(hat_cable(3))
    xs = [it.x for it in lay.items if it.lattice == (0, 0)]
    assert len(xs) == len(set(xs)) > 1


def test_unknown_format():
    with pytest.raises(ValueError, match="unknown format"):
        RenderSpec("png")


def test_relative_hat_refused():
    with pytest.raises(KfcError):
        render(raw_cable(2), RenderSpec("text"))
