from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hamxray.errors import (
    AmbiguousPairing,
    DuplicateFixedPoint,
    InvalidChamberData,
    NonFreeAction,
    NotDelzant,
    VertexOnCutLine,
    VerticalEdgeUnsupported,
    WallNotPerpendicular,
)
from hamxray.geometry import Polygon, faces3
from hamxray.scenarios import HnParams, gelfand_cetlin, hirzebruch, m2_toric, tolman_m3
from hamxray.xray import (
    ChamberData,
    WeightedFixedPoint,
    XRay,
    XRayEdge,
    chamber_to_xray,
    degree_sequence,
    flag_xray,
    ray_shoot,
    toric_xray,
    validate_xray,
)


def edge_set(x):
    return {e.endpoints for e in x.edges}


def pts(*ps):
    return tuple((F(a), F(b)) for a, b in ps)


def test_flag_xray_hand_data():
    x = flag_xray((2, 1, 0))
    assert set(x.positions) == set(pts((2, 1), (2, 0), (1, 2), (1, 0), (0, 2), (0, 1)))
    # transpositions: swapping the last two entries is vertical, the first two
    # diagonal, the outer pair horizontal in the projected picture
    expected = {
        tuple(sorted(pts(a, b)))
        for a, b in [
            ((2, 1), (1, 2)), ((2, 1), (0, 1)), ((2, 1), (2, 0)),
            ((2, 0), (0, 2)), ((2, 0), (1, 0)),
            ((1, 2), (1, 0)), ((1, 2), (0, 2)),
            ((1, 0), (0, 1)),
            ((0, 2), (0, 1)),
        ]
    }
    assert edge_set(x) == expected
    rep = validate_xray(x, weyl=True)
    assert rep.ok and rep.weyl_symmetric


def test_rank_count():
    for x in (flag_xray((5, 1, 0)), m2_toric().xray, tolman_m3().xray):
        assert 2 * sum(e.rank for e in x.edges) == sum(f.total_multiplicity for f in x.fixed_points)
        assert len(x.fixed_points) == 6 and len(x.edges) == 9


def test_m2_toric():
    x = m2_toric().xray
    assert set(x.positions) == set(pts((0, 0), (8, 0), (0, 8), (2, 2), (4, 2), (2, 4)))
    assert x.point_at((0, 0)).weights == (((0, 1), 1), ((1, 0), 1), ((1, 1), 1))
    assert validate_xray(x).ok


def test_toric_rejections():
    simplex = faces3([(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4)])
    # 0 and 4e3 share an image; they are joined by an edge, so the error is the
    # vertical-edge refinement of the duplicate-position error
    with pytest.raises(DuplicateFixedPoint):
        toric_xray(simplex)
    with pytest.raises(VerticalEdgeUnsupported):
        toric_xray(simplex)
    # opposite corners of a square face collide without any vertical edge
    cube = faces3([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    with pytest.raises(DuplicateFixedPoint) as info:
        toric_xray(cube, projection=((1, 1, 0), (0, 0, 1)))
    assert not isinstance(info.value, VerticalEdgeUnsupported)
    with pytest.raises(NotDelzant):
        toric_xray(faces3([(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 1)]))


def test_m3_chamber_xray():
    x = tolman_m3().xray
    expected = {
        tuple(sorted(pts(a, b)))
        for a, b in [
            ((1, 0), (1, 2)), ((1, 0), (4, 0)), ((1, 0), (0, 1)),
            ((2, 1), (0, 1)), ((2, 1), (4, 0)), ((2, 1), (1, 2)),
            ((4, 0), (0, 4)), ((1, 2), (0, 4)), ((0, 1), (0, 4)),
        ]
    }
    assert edge_set(x) == expected
    assert x.point_at((2, 1)).weights == (((-1, 0), 1), ((-1, 1), 1), ((2, -1), 1))
    assert degree_sequence(x) == [3] * 6


def test_mutilated_xray_reports_dangling_weight():
    x = tolman_m3().xray
    k = [e.endpoints for e in x.edges].index(pts((1, 0), (4, 0)))
    rep = validate_xray(x.without_edge(k))
    assert "DanglingWeight" in rep.codes()
    assert any(v.where == (pts((1, 0))[0], (1, 0)) for v in rep.violations)


def test_validate_reports_loose_endpoint():
    x = XRay((WeightedFixedPoint.from_directions((0, 0), [(1, 0)]),), (XRayEdge(((0, 0), (1, 0))),))
    assert "EdgeEndpointNotFixed" in validate_xray(x).codes()


def test_ray_shoot_unpartnered_weight():
    a = WeightedFixedPoint.from_directions((0, 0), [(1, 0)])
    b = WeightedFixedPoint.from_directions((2, 0), [(0, 1)])
    with pytest.raises(AmbiguousPairing):
        ray_shoot([a, b])


def test_chamber_data_checks():
    rect = Polygon(pts((1, 0), (5, 0), (5, 1), (1, 1)))
    with pytest.raises(InvalidChamberData):
        ChamberData(rect, pts((1, 0), (5, 0)))
    with pytest.raises(InvalidChamberData):
        ChamberData.from_polygon(Polygon(pts((0, 0), (1, 0), (0, 1))))


@pytest.mark.parametrize("lam", [(2, 1, 0), (5, 1, 0), (7, 3, 1), ("9/2", "1/3", -2)])
def test_builders_agree(lam):
    assert chamber_to_xray(gelfand_cetlin(lam)) == flag_xray(lam)


@st.composite
def hn_params(draw):
    """Parameters whose cut line crosses both horizontal edges strictly inside."""
    n = draw(st.integers(-6, 6).filter(bool))
    l3 = draw(st.integers(-3, 3))
    l2 = l3 + draw(st.integers(1, 4))
    d = l2 - l3
    top = draw(st.fractions(min_value=0, max_value=6, max_denominator=4).filter(lambda t: t > 0))
    assume(top + n * d > 0)
    l1 = l2 + max(top, top + n * d) + draw(st.integers(1, 4))
    # the line <v, (1, n)> = level meets y = l2 at x = l2 + top
    return HnParams(n, (l1, l2, l3), l2 + top + n * l2)


@settings(max_examples=100, deadline=None)
@given(hn_params())
def test_cut_xrays_are_valid_and_weyl_symmetric(params):
    try:
        space = hirzebruch(params)
    except (WallNotPerpendicular, VertexOnCutLine, NonFreeAction):
        assume(False)
    rep = validate_xray(space.xray, weyl=True)
    assert rep.ok and rep.weyl_symmetric
    x = space.xray
    assert len(x.fixed_points) == 6
    if all(m == 1 for f in x.fixed_points for _, m in f.weights):
        assert len(x.edges) == 9
