"""Exact rational geometry in two and three dimensions.

Points are tuples of :class:`fractions.Fraction`; lattice vectors are tuples
of ``int``.  Nothing in here ever touches a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    DegenerateCone,
    DegenerateCut,
    DegenerateSegment,
    DimensionMismatch,
    EmptyCut,
    EmptyInput,
    InvalidPolygon,
    InvalidPolytope,
    NotFullDimensional,
    ZeroVector,
)

Point = tuple  # tuple[Fraction, ...]
Vector = tuple  # tuple[int, ...]


def q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use an exact rational")
    return Fraction(x)


def point(*coords) -> Point:
    return tuple(q(c) for c in coords)


def as_point(p: Iterable) -> Point:
    return tuple(q(c) for c in p)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u):
    return tuple(c * a for a in u)


def neg(u):
    return tuple(-a for a in u)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def det3(u, v, w):
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def primitive(v) -> Vector:
    """Return the primitive integer vector pointing the same way as ``v``.

    ``v`` may have rational entries; it is cleared of denominators first.

    >>> primitive((2, 4))
    (1, 2)
    """
    fr = [Fraction(c) for c in v]
    if all(c == 0 for c in fr):
        raise ZeroVector("cannot normalise the zero vector", vector=[str(c) for c in fr])
    den = math.lcm(*(c.denominator for c in fr))
    ints = [int(c * den) for c in fr]
    g = math.gcd(*ints)
    return tuple(c // g for c in ints)


def direction(a, b) -> Vector:
    """Primitive direction of the segment from ``a`` to ``b``."""
    return primitive(sub(b, a))


def is_primitive(v) -> bool:
    return all(isinstance(c, int) for c in v) and any(v) and math.gcd(*v) == 1


def sign_normalized(v) -> Vector:
    """Representative of the line spanned by ``v``: first nonzero entry positive."""
    p = primitive(v)
    for c in p:
        if c:
            return p if c > 0 else neg(p)
    return p


def perp(v) -> Vector:
    """Counterclockwise rotation by a quarter turn."""
    return (-v[1], v[0])


def orient(a, b, c):
    """Twice the signed area of the triangle abc (positive when counterclockwise)."""
    return det2(sub(b, a), sub(c, a))


def _check_2d(*vs):
    for v in vs:
        if len(v) != 2:
            raise DimensionMismatch("expected a 2-vector", vector=[str(c) for c in v])


def cone_member(alpha, beta, v) -> bool:
    """Whether ``v`` is a nonnegative combination of ``alpha`` and ``beta``."""
    _check_2d(alpha, beta, v)
    d = det2(alpha, beta)
    if d == 0:
        raise DegenerateCone("cone generators are dependent", alpha=list(alpha), beta=list(beta))
    c1 = Fraction(det2(v, beta)) / d
    c2 = Fraction(det2(alpha, v)) / d
    return c1 >= 0 and c2 >= 0


def feasible_direction(negatives: Sequence, positives: Sequence) -> Optional[Vector]:
    """Find ``v`` with <w, v> < 0 on ``negatives`` and > 0 on ``positives``.

    Each constraint confines ``v`` to an open half-plane of directions.  A
    nonempty intersection is an open angular interval whose endpoints are
    perpendiculars of the constraint vectors, so a point of it is either one
    of the (flipped) constraint vectors or the sum of two such endpoints.
    Returns a witness, or ``None`` when the system is infeasible.
    """
    _check_2d(*negatives, *positives)
    ws = [tuple(-c for c in w) for w in negatives] + [tuple(w) for w in positives]
    if not ws:
        return (1, 0)
    ends = []
    for w in ws:
        r = perp(w)
        ends.append(r)
        ends.append(neg(r))
    candidates = list(ws)
    candidates += [add(r, s) for r, s in combinations(ends, 2)]
    for v in candidates:
        if not any(v):
            continue
        if all(dot(w, v) > 0 for w in ws):
            return primitive(v)
    return None


def strict_feasible(negatives: Sequence, positives: Sequence) -> bool:
    return feasible_direction(negatives, positives) is not None


@dataclass(frozen=True)
class HalfSpace:
    """The region ``<v, normal> <= level``."""

    normal: Vector
    level: Fraction

    def __post_init__(self):
        normal = tuple(int(c) for c in self.normal)
        if not is_primitive(normal):
            raise InvalidPolygon("halfspace normal must be primitive", normal=list(normal))
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "level", q(self.level))

    def value(self, p):
        return dot(self.normal, p)

    def contains(self, p) -> bool:
        return self.value(p) <= self.level

    def on_boundary(self, p) -> bool:
        return self.value(p) == self.level


def _canonical_start(vs):
    i = min(range(len(vs)), key=lambda k: (vs[k][1], vs[k][0]))
    return vs[i:] + vs[:i]


@dataclass(frozen=True)
class Polygon:
    """A convex polygon with counterclockwise vertices.

    The vertex list always starts at the lowest (then leftmost) vertex.  One
    or two vertices denote a degenerate point or segment hull.
    """

    vertices: tuple

    def __post_init__(self):
        vs = tuple(as_point(v) for v in self.vertices)
        if not vs:
            raise InvalidPolygon("polygon needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise InvalidPolygon("repeated vertex", vertices=[[str(c) for c in v] for v in vs])
        if len(vs) >= 3:
            n = len(vs)
            for i in range(n):
                if orient(vs[i - 1], vs[i], vs[(i + 1) % n]) <= 0:
                    raise InvalidPolygon(
                        "vertices are not strictly convex counterclockwise",
                        at=[str(c) for c in vs[i]],
                    )
        object.__setattr__(self, "vertices", tuple(_canonical_start(list(vs))))

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def edges(self):
        vs = self.vertices
        if len(vs) < 2:
            return []
        if len(vs) == 2:
            return [(vs[0], vs[1])]
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def contains(self, p) -> bool:
        p = as_point(p)
        vs = self.vertices
        if len(vs) == 1:
            return p == vs[0]
        if len(vs) == 2:
            return on_segment(p, vs[0], vs[1])
        return all(orient(a, b, p) >= 0 for a, b in self.edges())

    def neighbours(self, i):
        vs = self.vertices
        return vs[i - 1], vs[(i + 1) % len(vs)]


def on_segment(p, a, b) -> bool:
    """Whether ``p`` lies on the closed segment ``ab``."""
    if orient(a, b, p) != 0:
        return False
    d = sub(b, a)
    t = dot(sub(p, a), d)
    return 0 <= t <= dot(d, d)


def hull2(points: Iterable) -> Polygon:
    """Convex hull of planar points (monotone chain, collinear points dropped)."""
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise EmptyInput("convex hull of nothing")
    if len(pts) == 1:
        return Polygon((pts[0],))

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return Polygon(tuple(hull))


def clip2(poly: Polygon, hs: HalfSpace) -> Polygon:
    """Intersect a polygon with a halfspace."""
    if poly.dimension != 2:
        raise InvalidPolygon("clip2 needs a two-dimensional polygon")
    vs = poly.vertices
    out = []
    for i, a in enumerate(vs):
        b = vs[(i + 1) % len(vs)]
        va = hs.value(a) - hs.level
        vb = hs.value(b) - hs.level
        if va <= 0:
            out.append(a)
        if (va < 0 < vb) or (vb < 0 < va):
            t = va / (va - vb)
            out.append(add(a, scale(t, sub(b, a))))
    if not out:
        raise EmptyCut("halfspace misses the polygon", normal=list(hs.normal), level=str(hs.level))
    result = hull2(out)
    if result.dimension < 2:
        raise DegenerateCut(
            "halfspace meets the polygon in a lower-dimensional set",
            normal=list(hs.normal),
            level=str(hs.level),
        )
    return result


def segment_union_covers(target, pieces) -> bool:
    """Whether the closed segment ``target`` lies in the union of the collinear ``pieces``."""
    a, b = as_point(target[0]), as_point(target[1])
    if a == b:
        raise DegenerateSegment("target segment has coincident endpoints")
    d = sub(b, a)
    dd = dot(d, d)
    intervals = []
    for piece in pieces:
        c, e = as_point(piece[0]), as_point(piece[1])
        if orient(a, b, c) != 0 or orient(a, b, e) != 0:
            continue
        s = dot(sub(c, a), d) / dd
        t = dot(sub(e, a), d) / dd
        lo, hi = min(s, t), max(s, t)
        if hi >= 0 and lo <= 1:
            intervals.append((lo, hi))
    intervals.sort()
    if not intervals or intervals[0][0] > 0:
        return False
    reach = Fraction(0)
    for lo, hi in intervals:
        if lo > reach:
            return False
        reach = max(reach, hi)
        if reach >= 1:
            return True
    return False


# -- three dimensions ---------------------------------------------------------


@dataclass(frozen=True)
class Face3:
    cycle: tuple  # vertex indices, counterclockwise seen from outside
    normal: Vector  # primitive outward normal
    level: Fraction


@dataclass(frozen=True)
class Polytope3:
    """A full-dimensional polytope in Q^3 with its face lattice.

    Build instances with :func:`faces3`; vertices are sorted
    lexicographically and every other field refers to them by index.
    """

    vertices: tuple
    edges: tuple
    faces: tuple

    def edge_direction(self, edge) -> Vector:
        i, j = edge
        return direction(self.vertices[i], self.vertices[j])

    def incident_edges(self, i):
        return [e for e in self.edges if i in e]

    def vertex_directions(self, i):
        """Primitive directions of the edges leaving vertex ``i``."""
        out = []
        for e in self.incident_edges(i):
            j = e[1] if e[0] == i else e[0]
            out.append(direction(self.vertices[i], self.vertices[j]))
        return sorted(out)

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)


def faces3(points: Iterable) -> Polytope3:
    """Face lattice of the convex hull of ``points`` by supporting-plane enumeration.

    Quartic in the number of points; meant for a dozen or so vertices.
    Points that are not extreme are dropped.
    """
    pts = sorted({as_point(p) for p in points})
    for p in pts:
        if len(p) != 3:
            raise DimensionMismatch("faces3 needs points in Q^3")
    if len(pts) < 4 or not _full_dimensional(pts):
        raise NotFullDimensional("points do not span Q^3", count=len(pts))

    planes = {}
    for i, j, k in combinations(range(len(pts)), 3):
        n = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]))
        if not any(n):
            continue
        n = primitive(n)
        c = dot(n, pts[i])
        vals = [dot(n, p) for p in pts]
        if all(v <= c for v in vals):
            pass
        elif all(v >= c for v in vals):
            n, c = neg(n), -c
        else:
            continue
        on = frozenset(m for m, p in enumerate(pts) if dot(n, p) == c)
        planes.setdefault(on, (n, c))

    cycles = []
    for on, (n, c) in planes.items():
        cycles.append((_facet_cycle([pts[m] for m in sorted(on)], n), n, c))

    verts = sorted({v for cyc, _, _ in cycles for v in cyc})
    index = {v: m for m, v in enumerate(verts)}
    edges = set()
    faces = []
    for cyc, n, c in cycles:
        ids = [index[v] for v in cyc]
        for m in range(len(ids)):
            a, b = ids[m], ids[(m + 1) % len(ids)]
            edges.add((min(a, b), max(a, b)))
        r = ids.index(min(ids))
        faces.append(Face3(tuple(ids[r:] + ids[:r]), n, c))
    faces.sort(key=lambda f: (f.cycle, f.normal))
    poly = Polytope3(tuple(verts), tuple(sorted(edges)), tuple(faces))
    if poly.euler_characteristic != 2:
        raise InvalidPolytope("face lattice fails the Euler check", euler=poly.euler_characteristic)
    return poly


def _full_dimensional(pts) -> bool:
    a = pts[0]
    for b, c, d in combinations(pts[1:], 3):
        if det3(sub(b, a), sub(c, a), sub(d, a)) != 0:
            return True
    return False


def _facet_cycle(on_plane, n):
    # project along the dominant normal coordinate, hull, lift back
    k = max(range(3), key=lambda m: abs(n[m]))
    keep = [m for m in range(3) if m != k]
    lift = {tuple(p[m] for m in keep): p for p in on_plane}
    ring = [lift[v] for v in hull2(lift).vertices]
    if len(ring) >= 3 and dot(cross3(sub(ring[1], ring[0]), sub(ring[2], ring[0])), n) < 0:
        ring.reverse()
    return ring


def clip3(poly: Polytope3, hs: HalfSpace) -> Polytope3:
    """Intersect a 3-polytope with a halfspace and rebuild its face lattice."""
    if len(hs.normal) != 3:
        raise DimensionMismatch("clip3 needs a 3-dimensional normal")
    vs = poly.vertices
    keep = [v for v in vs if hs.value(v) <= hs.level]
    for i, j in poly.edges:
        va = hs.value(vs[i]) - hs.level
        vb = hs.value(vs[j]) - hs.level
        if (va < 0 < vb) or (vb < 0 < va):
            t = va / (va - vb)
            keep.append(add(vs[i], scale(t, sub(vs[j], vs[i]))))
    if not keep:
        raise EmptyCut("halfspace misses the polytope", normal=list(hs.normal), level=str(hs.level))
    try:
        return faces3(keep)
    except NotFullDimensional as exc:
        raise DegenerateCut("halfspace meets the polytope in a lower-dimensional set") from exc


# -- smoothness ---------------------------------------------------------------


@dataclass(frozen=True)
class VertexSmoothness:
    vertex: Point
    directions: tuple
    determinant: Optional[int]  # None when the vertex is not simple

    @property
    def smooth(self) -> bool:
        return self.determinant is not None and abs(self.determinant) == 1


@dataclass(frozen=True)
class DelzantReport:
    vertices: tuple

    @property
    def is_delzant(self) -> bool:
        return bool(self.vertices) and all(v.smooth for v in self.vertices)

    def failures(self):
        return [v for v in self.vertices if not v.smooth]


def delzant_check(p) -> DelzantReport:
    """Per-vertex lattice-basis test for a polygon or a 3-polytope."""
    rows = []
    if isinstance(p, Polygon):
        if p.dimension != 2:
            return DelzantReport(tuple(VertexSmoothness(v, (), None) for v in p.vertices))
        for i, v in enumerate(p.vertices):
            prev, nxt = p.neighbours(i)
            dirs = (direction(v, prev), direction(v, nxt))
            rows.append(VertexSmoothness(v, dirs, det2(*dirs)))
    elif isinstance(p, Polytope3):
        for i, v in enumerate(p.vertices):
            dirs = tuple(p.vertex_directions(i))
            det = det3(*dirs) if len(dirs) == 3 else None
            rows.append(VertexSmoothness(v, dirs, det))
    else:
        raise TypeError(f"expected Polygon or Polytope3, got {type(p).__name__}")
    return DelzantReport(tuple(rows))
