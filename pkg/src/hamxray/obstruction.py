"""Tolman's X-ray test for invariant compatible Kähler structures.

If the space were Kähler, the closure of a generic complex-torus orbit
through the unstable manifold at a fixed point ``p`` would map onto a convex
polytope: locally the cone spanned by the two unstable weights, globally the
hull of the fixed-point images in that cone.  Every edge of that polytope is
the image of a circle-fixed submanifold, so it must be covered by the X-ray.
An uncovered edge rules out any invariant compatible Kähler structure.
Finding nothing proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import WrongDimensionScope
from .geometry import (
    Polygon,
    cone_member,
    det2,
    feasible_direction,
    hull2,
    segment_union_covers,
    sub,
)
from .groups import weyl_reflect, weyl_reflect_vector
from .xray import WeightedFixedPoint, XRay

OBSTRUCTION_FOUND = "ObstructionFound"
NO_OBSTRUCTION_FOUND = "NoObstructionFound"


@dataclass(frozen=True)
class ConeCandidate:
    point: WeightedFixedPoint
    alpha: tuple
    beta: tuple

    @property
    def apex(self):
        return self.point.position

    def contains(self, pos) -> bool:
        return cone_member(self.alpha, self.beta, sub(pos, self.apex))

    def key(self):
        return (self.apex, self.alpha, self.beta)


@dataclass(frozen=True)
class ObstructionCertificate:
    candidate: ConeCandidate
    contained_points: tuple
    delta_cand: Polygon
    uncovered_face: tuple

    def key(self):
        return (self.candidate.key(), self.uncovered_face)

    def reflected(self):
        c = self.candidate
        alpha, beta = sorted((weyl_reflect_vector(c.alpha), weyl_reflect_vector(c.beta)))
        return ObstructionCertificate(
            ConeCandidate(c.point.reflected(), alpha, beta),
            tuple(sorted(weyl_reflect(p) for p in self.contained_points)),
            hull2(weyl_reflect(p) for p in self.delta_cand.vertices),
            tuple(sorted(weyl_reflect(p) for p in self.uncovered_face)),
        )


@dataclass(frozen=True)
class Verdict:
    certificates: tuple = ()

    @property
    def status(self) -> str:
        return OBSTRUCTION_FOUND if self.certificates else NO_OBSTRUCTION_FOUND

    @property
    def obstructed(self) -> bool:
        return bool(self.certificates)


def unstable_pair_ok(alpha, beta, others) -> bool:
    """Some generic direction makes exactly ``alpha`` and ``beta`` the descending weights.

    With one remaining weight ``gamma`` this says ``gamma`` is not in cone(alpha, beta).
    """
    return feasible_direction([alpha, beta], others) is not None


def enumerate_cones(x: XRay):
    """All cone candidates of an X-ray, in a stable order."""
    out = {}
    for f in x.fixed_points:
        slots = f.slots()
        for i, j in combinations(range(len(slots)), 2):
            alpha, beta = sorted((slots[i], slots[j]))
            if det2(alpha, beta) == 0:
                continue
            others = [s for k, s in enumerate(slots) if k not in (i, j)]
            if not unstable_pair_ok(alpha, beta, others):
                continue
            if not (x.edges_along(f.position, alpha) and x.edges_along(f.position, beta)):
                continue
            cand = ConeCandidate(f, alpha, beta)
            out.setdefault(cand.key(), cand)
    return [out[k] for k in sorted(out)]


def uncovered_faces(x: XRay, polygon: Polygon):
    """Edges of ``polygon`` not contained in a union of collinear X-ray edges."""
    pieces = [e.endpoints for e in x.edges]
    out = []
    for a, b in polygon.edges():
        if not segment_union_covers((a, b), pieces):
            out.append(tuple(sorted((a, b))))
    return out


def check_candidate(x: XRay, cand: ConeCandidate):
    contained = tuple(sorted(p for p in x.positions if cand.contains(p)))
    delta = hull2(contained)
    if delta.dimension != 2:
        return []
    return [
        ObstructionCertificate(cand, contained, delta, face)
        for face in uncovered_faces(x, delta)
    ]


def tolman_check(x: XRay) -> Verdict:
    for f in x.fixed_points:
        if f.total_multiplicity != 3:
            raise WrongDimensionScope(
                "the check is defined for isolated fixed points with three weights",
                position=[str(c) for c in f.position],
                weights=f.total_multiplicity,
            )
    certs = []
    for cand in enumerate_cones(x):
        certs.extend(check_candidate(x, cand))
    certs.sort(key=lambda c: c.key())
    return Verdict(tuple(certs))

