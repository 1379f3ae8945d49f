from __future__ import annotations

import pytest

from uncrossed import (
    Graph,
    PlaneDrawing,
    RenderSpec,
    bipartite_uncrossed_collection,
    double_cycle_cover,
    embed_double_cycle,
    is_planar_graph,
    k5_two_wheel_certificate,
    render,
    wheel_drawing,
)

BLUE = "#1a5fb4"
GRAY = "#9a9996"
RED = "#c01c28"


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(layout="spiral")
    with pytest.raises(ValueError):
        RenderSpec(format="png")
    with pytest.raises(ValueError):
        RenderSpec(width=0)


def test_render_rejects_unknown_objects():
    with pytest.raises(TypeError):
        render("not a drawing")


def test_wheel_svg():
    svg = render(wheel_drawing(7))
    assert svg.startswith("<svg")
    assert svg.count(BLUE) >= 12  # drawn edges
    assert RED not in svg


def test_certificate_svg_panels():
    svg = render(k5_two_wheel_certificate())
    assert "drawing 1 of 2" in svg
    assert "drawing 2 of 2" in svg
    # undrawn edges of each panel are cofacial, rendered dashed gray
    assert GRAY in svg


def test_double_cycle_layout_used_for_colored_drawing():
    cover = double_cycle_cover(4, 9)
    d = embed_double_cycle(cover.cycles[0])
    svg = render(d)
    assert svg.startswith("<svg")
    # blacks drawn as filled disks, whites hollow
    assert 'fill="#1c2128"' in svg or 'class="black"' in svg or BLUE in svg


def test_non_cofacial_edges_rendered_red():
    oct_edges = [
        (u, v)
        for u in range(6)
        for v in range(u + 1, 6)
        if (u, v) not in [(0, 1), (2, 3), (4, 5)]
    ]
    ok, emb = is_planar_graph(Graph(6, oct_edges))
    assert ok
    host = Graph(6, oct_edges + [(0, 1)])
    d = PlaneDrawing(host, oct_edges, emb.rotation, None)
    svg = render(d)
    assert RED in svg


def test_dot_output():
    dot = render(bipartite_uncrossed_collection(3, 4), RenderSpec(format="dot"))
    assert "graph drawing_1" in dot
    assert "pos=" in dot
    assert "style=dashed" in dot


def test_layout_override_falls_back_cleanly():
    # forcing the barycentric layout on a wheel must still produce svg
    svg = render(wheel_drawing(6), RenderSpec(layout="tutte-barycentric"))
    assert svg.startswith("<svg")
    svg2 = render(wheel_drawing(6), RenderSpec(labels=False))
    assert "<text" not in svg2.split(">", 1)[1] or svg2.count("<text") < svg.count("<text")
