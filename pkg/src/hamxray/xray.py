"""X-rays of Hamiltonian 2-torus spaces and the builders that produce them.

An X-ray is recorded as a list of fixed-point images carrying their weight
directions, plus the segments swept out by circle-fixed strata.  Three
builders are provided: coadjoint orbits of U(3) (:func:`flag_xray`),
projected Delzant 3-polytopes (:func:`toric_xray`) and multiplicity-free
U(2)-spaces given by their chamber polygon (:func:`chamber_to_xray`).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    AmbiguousPairing,
    DanglingWeight,
    DuplicateFixedPoint,
    InvalidChamberData,
    InvalidXRay,
    NotDelzant,
    VerticalEdgeUnsupported,
)
from .geometry import (
    Polygon,
    Polytope3,
    as_point,
    delzant_check,
    det2,
    direction,
    dot,
    is_primitive,
    neg,
    on_segment,
    sign_normalized,
)
from .groups import (
    MINUS_ALPHA1,
    in_chamber,
    on_wall,
    project,
    s3_orbit,
    weyl_reflect,
    weyl_reflect_vector,
)

# the order on X-ray elements is recorded as incidence of images, which is
# what the builders can certify; it agrees with closure order on every
# space constructed here
ORDER_RELATION = "image incidence"


@dataclass(frozen=True)
class WeightedFixedPoint:
    """A fixed-point image with its tangent weights as (direction, multiplicity) pairs."""

    position: tuple
    weights: tuple

    def __post_init__(self):
        counts = Counter()
        for d, m in self.weights:
            d = tuple(d)
            if not is_primitive(d):
                raise InvalidXRay("weight direction must be primitive and nonzero", direction=list(d))
            if int(m) < 1:
                raise InvalidXRay("weight multiplicity must be positive", direction=list(d))
            counts[d] += int(m)
        object.__setattr__(self, "position", as_point(self.position))
        object.__setattr__(self, "weights", tuple(sorted(counts.items())))

    @classmethod
    def from_directions(cls, position, directions):
        return cls(position, tuple(Counter(tuple(d) for d in directions).items()))

    def multiplicity(self, d) -> int:
        d = tuple(d)
        for w, m in self.weights:
            if w == d:
                return m
        return 0

    def slots(self):
        """Weight directions repeated according to multiplicity."""
        return [d for d, m in self.weights for _ in range(m)]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.weights)

    def reflected(self):
        return WeightedFixedPoint(
            weyl_reflect(self.position),
            tuple((weyl_reflect_vector(d), m) for d, m in self.weights),
        )


@dataclass(frozen=True)
class XRayEdge:
    """Image of a circle-fixed stratum closure; ``rank`` counts its weight pairs."""

    endpoints: tuple
    rank: int = 1
    direction: tuple = field(init=False)

    def __post_init__(self):
        a, b = (as_point(p) for p in self.endpoints)
        if a == b:
            raise InvalidXRay("edge endpoints coincide", at=[str(c) for c in a])
        if int(self.rank) < 1:
            raise InvalidXRay("edge rank must be positive")
        a, b = min(a, b), max(a, b)
        object.__setattr__(self, "endpoints", (a, b))
        object.__setattr__(self, "rank", int(self.rank))
        object.__setattr__(self, "direction", direction(a, b))

    def contains(self, p) -> bool:
        return on_segment(as_point(p), *self.endpoints)

    def leaves_along(self, p, d) -> bool:
        """Whether the edge contains ``p`` and continues from it in direction ``d``."""
        p = as_point(p)
        if not self.contains(p):
            return False
        d = tuple(d)
        if sign_normalized(d) != sign_normalized(self.direction):
            return False
        return any(q != p and direction(p, q) == d for q in self.endpoints)

    def reflected(self):
        return XRayEdge(tuple(weyl_reflect(p) for p in self.endpoints), self.rank)


@dataclass(frozen=True)
class XRay:
    fixed_points: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "fixed_points", tuple(sorted(self.fixed_points, key=lambda f: f.position))
        )
        object.__setattr__(
            self, "edges", tuple(sorted(self.edges, key=lambda e: (e.endpoints, e.rank)))
        )

    @property
    def positions(self):
        return [f.position for f in self.fixed_points]

    def point_at(self, pos) -> Optional[WeightedFixedPoint]:
        pos = as_point(pos)
        for f in self.fixed_points:
            if f.position == pos:
                return f
        return None

    def index_of(self, pos) -> int:
        pos = as_point(pos)
        for i, f in enumerate(self.fixed_points):
            if f.position == pos:
                return i
        raise KeyError(pos)

    @property
    def incidence(self):
        """(fixed point index, edge index) pairs with the point on the closed edge."""
        return tuple(
            (i, k)
            for k, e in enumerate(self.edges)
            for i, f in enumerate(self.fixed_points)
            if e.contains(f.position)
        )

    def edges_along(self, pos, d):
        return [e for e in self.edges if e.leaves_along(pos, d)]

    def without_edge(self, k):
        return XRay(self.fixed_points, self.edges[:k] + self.edges[k + 1 :])

    def reflected(self):
        return XRay(
            tuple(f.reflected() for f in self.fixed_points),
            tuple(e.reflected() for e in self.edges),
        )


@dataclass(frozen=True)
class ChamberData:
    """A multiplicity-free U(2)-space as a polygon in the chamber x >= y.

    ``fixed_vertices`` are the polygon vertices off the wall; they are images
    of torus-fixed points.
    """

    polygon: Polygon
    fixed_vertices: tuple

    def __post_init__(self):
        poly = self.polygon
        if not isinstance(poly, Polygon):
            poly = Polygon(tuple(poly))
        if poly.dimension != 2:
            raise InvalidChamberData("chamber polygon must be two-dimensional")
        fixed = tuple(sorted({as_point(v) for v in self.fixed_vertices}))
        for v in poly.vertices:
            if not in_chamber(v):
                raise InvalidChamberData("polygon leaves the chamber x >= y", at=[str(c) for c in v])
        off_wall = {v for v in poly.vertices if not on_wall(v)}
        if set(fixed) != off_wall:
            raise InvalidChamberData(
                "fixed vertices must be exactly the polygon vertices off the wall",
                fixed=[[str(c) for c in v] for v in fixed],
                expected=[[str(c) for c in v] for v in sorted(off_wall)],
            )
        object.__setattr__(self, "polygon", poly)
        object.__setattr__(self, "fixed_vertices", fixed)

    @classmethod
    def from_polygon(cls, polygon: Polygon):
        return cls(polygon, tuple(v for v in polygon.vertices if not on_wall(v)))

    @property
    def wall_vertices(self):
        return tuple(v for v in self.polygon.vertices if on_wall(v))


# -- builders -----------------------------------------------------------------


def flag_xray(lam) -> XRay:
    """X-ray of the U(3) coadjoint orbit through diag(lam), restricted to the 2-torus.

    Fixed points are the projections of the six permutations of ``lam``; each
    is joined to the three permutations obtained by a transposition.
    """
    orbit = s3_orbit(lam)
    transpositions = [(0, 1), (0, 2), (1, 2)]
    points, edges = [], set()
    for p in orbit:
        here = project(p)
        partners = []
        for i, j in transpositions:
            s = list(p)
            s[i], s[j] = s[j], s[i]
            there = project(s)
            partners.append(direction(here, there))
            edges.add(tuple(sorted((here, there))))
        points.append(WeightedFixedPoint.from_directions(here, partners))
    return XRay(tuple(points), tuple(XRayEdge(e) for e in sorted(edges)))


DROP_Z = ((1, 0, 0), (0, 1, 0))


def toric_xray(p: Polytope3, projection=DROP_Z) -> XRay:
    """X-ray of a toric 6-manifold restricted to a 2-torus.

    Only vertices and edges of the Delzant polytope contribute; 2-faces lie in
    the principal stratum.  ``projection`` is the integral 2x3 matrix of the
    restriction map; a projection that merges vertex images is rejected.
    """
    report = delzant_check(p)
    if not report.is_delzant:
        bad = report.failures()[0]
        raise NotDelzant(
            "polytope is not Delzant",
            vertex=[str(c) for c in bad.vertex],
            determinant=bad.determinant,
        )

    def proj(v):
        return tuple(sum(r[k] * v[k] for k in range(3)) for r in projection)

    images = [as_point(proj(v)) for v in p.vertices]
    # an edge collapsing to a point is the special case of two images coinciding
    for e in p.edges:
        if not any(proj(p.edge_direction(e))):
            raise VerticalEdgeUnsupported(
                "edge projects to a point",
                edge=[[str(c) for c in p.vertices[i]] for i in e],
            )
    if len(set(images)) != len(images):
        dup = next(x for x in images if images.count(x) > 1)
        raise DuplicateFixedPoint(
            "two vertices have the same image", position=[str(c) for c in dup]
        )
    points = [
        WeightedFixedPoint.from_directions(
            images[i], [direction((0, 0), proj(d)) for d in p.vertex_directions(i)]
        )
        for i in range(len(p.vertices))
    ]
    edges = [XRayEdge((images[i], images[j])) for i, j in p.edges]
    return XRay(tuple(points), tuple(edges))


def chamber_weights(cd: ChamberData):
    """Weighted fixed points of a chamber polygon and their Weyl images."""
    poly = cd.polygon
    out = []
    for i, v in enumerate(poly.vertices):
        if on_wall(v):
            continue
        prev, nxt = poly.neighbours(i)
        fp = WeightedFixedPoint.from_directions(
            v, [direction(v, prev), direction(v, nxt), MINUS_ALPHA1]
        )
        out.append(fp)
        out.append(fp.reflected())
    return out


def ray_shoot(points) -> list:
    """Join consecutive collinear fixed points whose weights face each other.

    For each weight line class and each line of that class, the fixed points
    on it are sorted and every consecutive pair with matching opposite
    weights is joined.  Every weight slot must end up on some edge.
    """
    classes = sorted({sign_normalized(d) for f in points for d, _ in f.weights})
    edges = []
    for d in classes:
        lines = defaultdict(list)
        for f in points:
            lines[det2(d, f.position)].append(f)
        for key in sorted(lines):
            row = sorted(lines[key], key=lambda f: dot(f.position, d))
            for m, m2 in zip(row, row[1:]):
                fwd = m.multiplicity(d)
                back = m2.multiplicity(neg(d))
                if fwd and back:
                    edges.append(XRayEdge((m.position, m2.position), min(fwd, back)))
                elif fwd or back:
                    lonely, w = (m, d) if fwd else (m2, neg(d))
                    raise AmbiguousPairing(
                        "weight has no partner at the next collinear fixed point",
                        position=[str(c) for c in lonely.position],
                        direction=list(w),
                    )
    xr = XRay(tuple(points), tuple(edges))
    for f in xr.fixed_points:
        for d, _ in f.weights:
            if not xr.edges_along(f.position, d):
                raise DanglingWeight(
                    "weight slot is not used by any edge",
                    position=[str(c) for c in f.position],
                    direction=list(d),
                )
    return list(xr.edges)


def chamber_to_xray(cd: ChamberData) -> XRay:
    """2-torus X-ray of a multiplicity-free U(2)-space from its chamber polygon.

    At a fixed vertex the weights are the two polygon edge directions plus
    the root direction normal to the coadjoint orbit, -alpha1; reflected
    fixed points carry reflected weights.
    """
    points = chamber_weights(cd)
    if len({f.position for f in points}) != len(points):
        raise DuplicateFixedPoint("chamber data yields coincident fixed points")
    return XRay(tuple(points), tuple(ray_shoot(points)))


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: tuple = ()


@dataclass(frozen=True)
class XRayReport:
    violations: tuple
    weyl_symmetric: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self):
        return sorted({v.code for v in self.violations})


def validate_xray(x: XRay, weyl: bool = False) -> XRayReport:
    """Check the structural invariants of an X-ray and report every violation."""
    out = []
    positions = [f.position for f in x.fixed_points]
    seen = set()
    for p in positions:
        if p in seen:
            out.append(Violation("DuplicateFixedPoint", "fixed-point images coincide", (p,)))
        seen.add(p)
    for e in x.edges:
        for p in e.endpoints:
            if p not in seen:
                out.append(
                    Violation("EdgeEndpointNotFixed", "edge endpoint is not a fixed-point image", (p,))
                )
    for f in x.fixed_points:
        for d, _ in f.weights:
            if not x.edges_along(f.position, d):
                out.append(
                    Violation("DanglingWeight", "no edge leaves the fixed point along this weight", (f.position, d))
                )
    symmetric = None
    if weyl:
        symmetric = x.reflected() == x
        if not symmetric:
            out.append(Violation("WeylAsymmetry", "X-ray is not invariant under the Weyl reflection"))
    return XRayReport(tuple(out), symmetric)


def degree_sequence(x: XRay):
    counts = Counter()
    for e in x.edges:
        for p in e.endpoints:
            counts[p] += 1
    return sorted(counts[f.position] for f in x.fixed_points)
