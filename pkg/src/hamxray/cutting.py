"""Symplectic cuts at the level of moment polytopes.

A cut keeps the part of the polytope where ``<v, X> <= a``.  It is only
performed when the cut space is a manifold: the circle generated by ``X``
has to act freely on the level set, and for U(2) the cut function has to be
smooth across the Weyl wall.  Cuts that would produce orbifolds are refused.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidParams,
    NonFreeAction,
    NotDelzant,
    VertexOnCutLine,
    WallNotPerpendicular,
)
from .geometry import (
    HalfSpace,
    Polytope3,
    clip2,
    clip3,
    cross3,
    delzant_check,
    det2,
    direction,
    dot,
    is_primitive,
    perp,
    primitive,
    q,
    sign_normalized,
)
from .groups import WALL_DIRECTION, on_wall
from .xray import ChamberData


@dataclass(frozen=True)
class CutSpec:
    """Circle direction ``X`` (primitive) and level ``a``; the ``<= a`` side is kept."""

    direction: tuple
    level: Fraction

    def __post_init__(self):
        d = tuple(int(c) for c in self.direction)
        if not is_primitive(d):
            raise InvalidParams("cut direction must be a primitive lattice vector", direction=list(d))
        object.__setattr__(self, "direction", d)
        object.__setattr__(self, "level", q(self.level))

    @property
    def halfspace(self) -> HalfSpace:
        return HalfSpace(self.direction, self.level)

    def value(self, p):
        return dot(self.direction, p)


@dataclass(frozen=True)
class CrossedFace:
    kind: str  # "edge" or "face"
    vertices: tuple
    isotropy: tuple  # generator of the isotropy Lie algebra (2-D), or the edge direction / face normal (3-D)
    determinant: int
    exempt: bool = False

    @property
    def free(self) -> bool:
        return self.exempt or abs(self.determinant) == 1


@dataclass(frozen=True)
class CutReport:
    spec: CutSpec
    result: object  # ChamberData or Polytope3
    new_fixed_vertices: tuple
    retained_fixed_vertices: tuple
    crossed_faces: tuple
    notes: tuple = ()


def _pts(vs):
    return [[str(c) for c in v] for v in vs]


def _crossed(spec, a, b):
    va = spec.value(a) - spec.level
    vb = spec.value(b) - spec.level
    return (va < 0 < vb) or (vb < 0 < va)


def wall_crossings(cd: ChamberData, spec: CutSpec):
    """Points of the polygon where the cut line meets the wall x = y."""
    x0, x1 = spec.direction
    s = x0 + x1
    poly = cd.polygon
    if s == 0:
        if spec.level != 0:
            return []
        return [v for v in poly.vertices if on_wall(v)]
    t = spec.level / s
    hit = (t, t)
    return [hit] if poly.contains(hit) else []


def cut_u2(cd: ChamberData, spec: CutSpec) -> CutReport:
    """Cut a multiplicity-free U(2)-space, given by its chamber polygon.

    Gates, in order: the cut line must avoid the wall inside the polygon
    unless ``X`` is central (proportional to (1, 1)); it must miss every
    vertex; and the circle must act freely over each crossed edge, i.e. the
    edge's isotropy circle ``u`` must satisfy ``|det(X, u)| == 1``.
    """
    if len(spec.direction) != 2:
        raise InvalidParams("cut_u2 needs a 2-dimensional circle direction")
    X, a = spec.direction, spec.level
    central = sign_normalized(X) == WALL_DIRECTION
    hits = wall_crossings(cd, spec)
    if hits and not central:
        raise WallNotPerpendicular(
            "cut line meets the Weyl wall inside the polygon without being perpendicular to it",
            direction=list(X),
            level=str(a),
            wall_points=_pts(hits),
        )
    poly = cd.polygon
    on_line = [v for v in poly.vertices if spec.value(v) == a]
    if on_line:
        raise VertexOnCutLine("cut line passes through a vertex", vertices=_pts(on_line))

    crossed, notes = [], []
    for u, v in poly.edges():
        if not _crossed(spec, u, v):
            continue
        if on_wall(u) and on_wall(v):
            continue
        iso = primitive(perp(direction(u, v)))
        exempt = bool(central and hits and (on_wall(u) or on_wall(v)))
        crossed.append(CrossedFace("edge", (u, v), iso, det2(X, iso), exempt))
    if any(c.exempt for c in crossed):
        notes.append("wall-adjacent edges exempt from the freeness test: the cut circle is central")
    bad = [c for c in crossed if not c.free]
    if bad:
        raise NonFreeAction(
            "circle does not act freely on the cut level; the cut would be an orbifold",
            violations=[
                {"edge": _pts(c.vertices), "isotropy": list(c.isotropy), "determinant": c.determinant}
                for c in bad
            ],
            determinant=bad[0].determinant,
        )

    clipped = clip2(poly, spec.halfspace)
    old = set(poly.vertices)
    new_fixed = tuple(sorted(v for v in clipped.vertices if v not in old and not on_wall(v)))
    retained = tuple(sorted(v for v in cd.fixed_vertices if spec.value(v) < a))
    result = ChamberData.from_polygon(clipped)
    return CutReport(spec, result, new_fixed, retained, tuple(crossed), tuple(notes))


def cut_delzant3(p: Polytope3, spec: CutSpec) -> CutReport:
    """Cut a Delzant 3-polytope, refusing cuts that would leave orbifold points.

    Over a crossed edge with direction ``d`` the isotropy is the 2-torus
    annihilating ``d``; the circle meets it trivially iff ``<d, X> = +-1``.
    Over a crossed 2-face with normal ``n`` the isotropy is the circle along
    ``n``; the circle meets it trivially iff the 2x2 minors of (X, n) are
    coprime.
    """
    if len(spec.direction) != 3:
        raise InvalidParams("cut_delzant3 needs a 3-dimensional circle direction")
    if not delzant_check(p).is_delzant:
        raise NotDelzant("input polytope is not Delzant")
    X, a = spec.direction, spec.level
    on_line = [v for v in p.vertices if spec.value(v) == a]
    if on_line:
        raise VertexOnCutLine("cut plane passes through a vertex", vertices=_pts(on_line))

    crossed = []
    for e in p.edges:
        u, v = (p.vertices[i] for i in e)
        if _crossed(spec, u, v):
            d = p.edge_direction(e)
            crossed.append(CrossedFace("edge", (u, v), d, dot(d, X)))
    for f in p.faces:
        vals = [spec.value(p.vertices[i]) - a for i in f.cycle]
        if min(vals) < 0 < max(vals):
            g = math.gcd(*cross3(X, f.normal))
            crossed.append(
                CrossedFace("face", tuple(p.vertices[i] for i in f.cycle), f.normal, g)
            )
    bad = [c for c in crossed if not c.free]
    if bad:
        raise NonFreeAction(
            "circle does not act freely on the cut level; the cut would be an orbifold",
            violations=[
                {"kind": c.kind, "vertices": _pts(c.vertices), "isotropy": list(c.isotropy), "determinant": c.determinant}
                for c in bad
            ],
            determinant=bad[0].determinant,
        )

    result = clip3(p, spec.halfspace)
    report = delzant_check(result)
    if not report.is_delzant:
        raise NotDelzant("cut polytope is not Delzant", vertices=_pts(v.vertex for v in report.failures()))
    old = set(p.vertices)
    new = tuple(v for v in result.vertices if v not in old)
    retained = tuple(v for v in p.vertices if spec.value(v) < a)
    return CutReport(spec, result, new, retained, tuple(crossed))
