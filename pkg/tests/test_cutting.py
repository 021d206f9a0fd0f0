from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamxray.cutting import CutSpec, cut_delzant3, cut_u2, wall_crossings
from hamxray.errors import (
    DegenerateCut,
    EmptyCut,
    InvalidParams,
    NonFreeAction,
    NotDelzant,
    VertexOnCutLine,
    WallNotPerpendicular,
)
from hamxray.geometry import Polygon, delzant_check, faces3
from hamxray.scenarios import gelfand_cetlin
from hamxray.xray import ChamberData

from oracles import clip_candidates, extreme_points

RECT = gelfand_cetlin((5, 1, 0))
SIMPLEX4 = faces3([(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4)])


def pts(*ps):
    return tuple((F(a), F(b)) for a, b in ps)


def test_tolman_cut():
    rep = cut_u2(RECT, CutSpec((1, 2), 4))
    assert rep.result.polygon.vertices == pts((1, 0), (4, 0), (2, 1), (1, 1))
    assert set(rep.new_fixed_vertices) == set(pts((4, 0), (2, 1)))
    assert rep.retained_fixed_vertices == pts((1, 0))
    assert all(c.free for c in rep.crossed_faces)


def test_non_free_cut():
    with pytest.raises(NonFreeAction) as info:
        cut_u2(RECT, CutSpec((2, 1), 5))
    assert info.value.details["determinant"] == 2
    assert {abs(v["determinant"]) for v in info.value.details["violations"]} == {2}


def test_wall_gate():
    with pytest.raises(WallNotPerpendicular):
        cut_u2(RECT, CutSpec((1, 2), 3))
    # (1,2)-level 3 passes through (1,1) on the wall
    assert wall_crossings(RECT, CutSpec((1, 2), 3)) == [(1, 1)]


def test_central_cut_is_accepted():
    rep = cut_u2(RECT, CutSpec((1, 1), 4))
    assert rep.result.polygon.vertices == pts((1, 0), (4, 0), (3, 1), (1, 1))
    assert not rep.notes


def test_central_cut_across_the_wall():
    # x + y = 2 meets the wall at (1, 1); the wall-adjacent edge is exempt
    cd = ChamberData.from_polygon(Polygon(pts((0, 0), (4, 0), (2, 2))))
    rep = cut_u2(cd, CutSpec((1, 1), 2))
    assert rep.result.polygon.vertices == pts((0, 0), (2, 0), (1, 1))
    assert [c.exempt for c in rep.crossed_faces] == [True]
    assert rep.notes
    with pytest.raises(WallNotPerpendicular):
        cut_u2(cd, CutSpec((1, 2), 3))


@pytest.mark.parametrize("v", [(1, 0), (5, 0), (5, 1), (1, 1)])
@pytest.mark.parametrize("X", [(1, 2), (1, -1), (1, 1), (2, 1), (0, 1), (1, 0), (1, 3)])
def test_vertex_on_line_is_always_rejected(v, X):
    a = X[0] * v[0] + X[1] * v[1]
    with pytest.raises((VertexOnCutLine, WallNotPerpendicular)):
        cut_u2(RECT, CutSpec(X, a))
    # the vertex gate fires whenever the wall gate lets the cut through
    if not wall_crossings(RECT, CutSpec(X, a)) or X == (1, 1):
        with pytest.raises(VertexOnCutLine):
            cut_u2(RECT, CutSpec(X, a))


def test_cut_direction_must_be_primitive():
    with pytest.raises(InvalidParams):
        CutSpec((2, 4), 1)


def test_simplex_cuts():
    rep = cut_delzant3(SIMPLEX4, CutSpec((1, 0, 0), 2))
    assert len(rep.result.vertices) == 6
    assert delzant_check(rep.result).is_delzant
    assert all(abs(c.determinant) == 1 for c in rep.crossed_faces if c.kind == "edge")
    with pytest.raises(NonFreeAction) as info:
        cut_delzant3(SIMPLEX4, CutSpec((1, 2, 0), 2))
    edges = [v for v in info.value.details["violations"] if v.get("kind", "edge") == "edge"]
    assert any(abs(v["determinant"]) == 2 for v in edges)
    with pytest.raises(VertexOnCutLine):
        cut_delzant3(SIMPLEX4, CutSpec((0, 0, 1), 4))
    pyramid = faces3([(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 1)])
    with pytest.raises(NotDelzant):
        cut_delzant3(pyramid, CutSpec((0, 0, 1), F(1, 2)))


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1), (1, 0, 1), (-1, 0, 0), (1, -1, 0)]),
    st.fractions(min_value=-1, max_value=5, max_denominator=3),
)
def test_admissible_3d_cuts_are_delzant(X, a):
    try:
        rep = cut_delzant3(SIMPLEX4, CutSpec(X, a))
    except (VertexOnCutLine, NonFreeAction, EmptyCut, DegenerateCut):
        return
    assert delzant_check(rep.result).is_delzant
    assert all(sum(x * c for x, c in zip(X, v)) <= a for v in rep.result.vertices)
    for v in SIMPLEX4.vertices:
        if sum(x * c for x, c in zip(X, v)) < a:
            assert v in rep.result.vertices


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([(1, 2), (1, 3), (1, -1), (1, -2), (1, 1), (0, 1), (1, 0), (-1, 0)]),
    st.fractions(min_value=-2, max_value=12, max_denominator=4),
)
def test_u2_cut_is_local_and_sound(X, a):
    try:
        rep = cut_u2(RECT, CutSpec(X, a))
    except (VertexOnCutLine, NonFreeAction, WallNotPerpendicular, EmptyCut, DegenerateCut):
        return
    poly = rep.result.polygon
    assert set(poly.vertices) == extreme_points(clip_candidates(RECT.polygon.vertices, X, a))
    for v in RECT.polygon.vertices:
        if X[0] * v[0] + X[1] * v[1] < a:
            assert v in poly.vertices
