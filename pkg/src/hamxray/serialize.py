"""JSON documents for polytopes, chamber data, X-rays, verdicts and sweeps.

Rationals are written as strings ``"p/q"`` (``"p"`` for integers) in lowest
terms, lattice vectors as integer arrays.  X-ray edges refer to fixed points
by index.  Decoding is strict: unknown or missing fields, non-canonical
rationals and inconsistent derived data are all rejected with the JSON path
of the offending value.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .errors import DocumentError, HamXRayError
from .geometry import Polygon, Polytope3, faces3, is_primitive
from .obstruction import ConeCandidate, ObstructionCertificate, Verdict
from .xray import ORDER_RELATION, ChamberData, WeightedFixedPoint, XRay, XRayEdge

KINDS = ("polytope3", "chamber", "xray", "verdict", "sweep")

_RATIONAL = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


@dataclass(frozen=True)
class Document:
    kind: str
    payload: object
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DocumentError(f"unknown document kind {self.kind!r}", path="$.kind")
        meta = {"tool_version": __version__, "provenance": ""}
        meta.update(self.meta)
        object.__setattr__(self, "meta", meta)


def document(kind, payload, provenance=""):
    return Document(kind, payload, {"provenance": provenance})


# -- encoding -----------------------------------------------------------------


def rat(x) -> str:
    return str(x)


def _pt(p):
    return [rat(c) for c in p]


def _fixed_point(f: WeightedFixedPoint):
    return {
        "position": _pt(f.position),
        "weights": [{"direction": list(d), "multiplicity": m} for d, m in f.weights],
    }


def _xray(x: XRay):
    index = {f.position: i for i, f in enumerate(x.fixed_points)}
    return {
        "order": ORDER_RELATION,
        "fixed_points": [_fixed_point(f) for f in x.fixed_points],
        "edges": [
            {
                "endpoints": [index[e.endpoints[0]], index[e.endpoints[1]]],
                "direction": list(e.direction),
                "rank": e.rank,
            }
            for e in x.edges
        ],
        "incidence": [list(pair) for pair in x.incidence],
    }


def _verdict(v: Verdict):
    return {
        "status": v.status,
        "certificates": [
            {
                "point": _fixed_point(c.candidate.point),
                "alpha": list(c.candidate.alpha),
                "beta": list(c.candidate.beta),
                "contained_points": [_pt(p) for p in c.contained_points],
                "delta_cand": [_pt(p) for p in c.delta_cand.vertices],
                "uncovered_face": [_pt(p) for p in c.uncovered_face],
            }
            for c in v.certificates
        ],
    }


def encode_payload(kind, payload):
    if kind == "polytope3":
        return {
            "vertices": [_pt(v) for v in payload.vertices],
            "edges": [list(e) for e in payload.edges],
            "faces": [
                {"cycle": list(f.cycle), "normal": list(f.normal), "level": rat(f.level)}
                for f in payload.faces
            ],
        }
    if kind == "chamber":
        return {
            "polygon": [_pt(v) for v in payload.polygon.vertices],
            "fixed_vertices": [_pt(v) for v in payload.fixed_vertices],
        }
    if kind == "xray":
        return _xray(payload)
    if kind == "verdict":
        return _verdict(payload)
    if kind == "sweep":
        return {"rows": [{"n": n, "verdict": _verdict(v)} for n, v in payload]}
    raise DocumentError(f"unknown document kind {kind!r}", path="$.kind")


def to_json_obj(doc: Document):
    return {"kind": doc.kind, "meta": dict(doc.meta), "payload": encode_payload(doc.kind, doc.payload)}


def encode(doc: Document) -> str:
    return json.dumps(to_json_obj(doc), indent=2) + "\n"


# -- decoding -----------------------------------------------------------------


def _fail(path, msg):
    raise DocumentError(f"{path}: {msg}", path=path)


def _obj(o, path, keys):
    if not isinstance(o, dict):
        _fail(path, "expected an object")
    extra = set(o) - set(keys)
    if extra:
        _fail(path, f"unknown field(s) {sorted(extra)}")
    missing = set(keys) - set(o)
    if missing:
        _fail(path, f"missing field(s) {sorted(missing)}")
    return o


def _list(o, path):
    if not isinstance(o, list):
        _fail(path, "expected an array")
    return o


def _int(o, path):
    if isinstance(o, bool) or not isinstance(o, int):
        _fail(path, "expected an integer")
    return o


def _str(o, path):
    if not isinstance(o, str):
        _fail(path, "expected a string")
    return o


def _rat(o, path):
    s = _str(o, path)
    if not _RATIONAL.match(s):
        _fail(path, f"not a rational string: {s!r}")
    value = Fraction(s)
    if str(value) != s:
        _fail(path, f"rational {s!r} is not in lowest terms")
    return value


def _point(o, path, dim=2):
    coords = _list(o, path)
    if len(coords) != dim:
        _fail(path, f"expected {dim} coordinates")
    return tuple(_rat(c, f"{path}[{i}]") for i, c in enumerate(coords))


def _vector(o, path, primitive=True):
    coords = _list(o, path)
    v = tuple(_int(c, f"{path}[{i}]") for i, c in enumerate(coords))
    if primitive and not is_primitive(v):
        _fail(path, f"direction {list(v)} is not primitive")
    return v


def _wrap(path, fn, *args):
    try:
        return fn(*args)
    except DocumentError:
        raise
    except HamXRayError as exc:
        _fail(path, f"{exc.code}: {exc.message}")


def _d_fixed_point(o, path):
    o = _obj(o, path, ("position", "weights"))
    pos = _point(o["position"], path + ".position")
    weights = []
    for i, w in enumerate(_list(o["weights"], path + ".weights")):
        wp = f"{path}.weights[{i}]"
        w = _obj(w, wp, ("direction", "multiplicity"))
        d = _vector(w["direction"], wp + ".direction")
        m = _int(w["multiplicity"], wp + ".multiplicity")
        if m < 1:
            _fail(wp + ".multiplicity", "multiplicity must be positive")
        weights.append((d, m))
    return _wrap(path, WeightedFixedPoint, pos, tuple(weights))


def _d_xray(o, path):
    o = _obj(o, path, ("order", "fixed_points", "edges", "incidence"))
    if o["order"] != ORDER_RELATION:
        _fail(path + ".order", f"expected {ORDER_RELATION!r}")
    points = [
        _d_fixed_point(f, f"{path}.fixed_points[{i}]")
        for i, f in enumerate(_list(o["fixed_points"], path + ".fixed_points"))
    ]
    edges = []
    for k, e in enumerate(_list(o["edges"], path + ".edges")):
        ep = f"{path}.edges[{k}]"
        e = _obj(e, ep, ("endpoints", "direction", "rank"))
        ends = _list(e["endpoints"], ep + ".endpoints")
        if len(ends) != 2:
            _fail(ep + ".endpoints", "expected two indices")
        idx = [_int(i, f"{ep}.endpoints[{j}]") for j, i in enumerate(ends)]
        for j, i in enumerate(idx):
            if not 0 <= i < len(points):
                _fail(f"{ep}.endpoints[{j}]", "fixed point index out of range")
        d = _vector(e["direction"], ep + ".direction")
        edge = _wrap(ep, XRayEdge, (points[idx[0]].position, points[idx[1]].position), _int(e["rank"], ep + ".rank"))
        if edge.direction != d:
            _fail(ep + ".direction", "direction does not match the endpoints")
        edges.append(edge)
    x = XRay(tuple(points), tuple(edges))
    if list(x.fixed_points) != points or list(x.edges) != edges:
        _fail(path, "fixed points and edges must be listed in canonical order")
    inc = [tuple(_vector(p, f"{path}.incidence[{i}]", primitive=False)) for i, p in enumerate(_list(o["incidence"], path + ".incidence"))]
    if tuple(inc) != x.incidence:
        _fail(path + ".incidence", "incidence does not match the geometry")
    return x


def _d_polygon(o, path):
    pts = tuple(_point(v, f"{path}[{i}]") for i, v in enumerate(_list(o, path)))
    poly = _wrap(path, Polygon, pts)
    if poly.vertices != pts:
        _fail(path, "polygon must start at its lowest vertex")
    return poly


def _d_verdict(o, path):
    o = _obj(o, path, ("status", "certificates"))
    certs = []
    for i, c in enumerate(_list(o["certificates"], path + ".certificates")):
        cp = f"{path}.certificates[{i}]"
        c = _obj(c, cp, ("point", "alpha", "beta", "contained_points", "delta_cand", "uncovered_face"))
        cand = ConeCandidate(
            _d_fixed_point(c["point"], cp + ".point"),
            _vector(c["alpha"], cp + ".alpha"),
            _vector(c["beta"], cp + ".beta"),
        )
        contained = tuple(_point(p, f"{cp}.contained_points[{j}]") for j, p in enumerate(_list(c["contained_points"], cp + ".contained_points")))
        face = tuple(_point(p, f"{cp}.uncovered_face[{j}]") for j, p in enumerate(_list(c["uncovered_face"], cp + ".uncovered_face")))
        if len(face) != 2:
            _fail(cp + ".uncovered_face", "expected two endpoints")
        certs.append(ObstructionCertificate(cand, contained, _d_polygon(c["delta_cand"], cp + ".delta_cand"), face))
    v = Verdict(tuple(certs))
    if _str(o["status"], path + ".status") != v.status:
        _fail(path + ".status", "status disagrees with the certificate list")
    return v


def decode_payload(kind, o, path="$.payload"):
    if kind == "polytope3":
        o = _obj(o, path, ("vertices", "edges", "faces"))
        pts = [_point(v, f"{path}.vertices[{i}]", 3) for i, v in enumerate(_list(o["vertices"], path + ".vertices"))]
        poly = _wrap(path, faces3, pts)
        if list(poly.vertices) != pts:
            _fail(path + ".vertices", "vertices must be exactly the sorted extreme points")
        edges = [
            tuple(_int(c, f"{path}.edges[{i}][{j}]") for j, c in enumerate(_list(e, f"{path}.edges[{i}]")))
            for i, e in enumerate(_list(o["edges"], path + ".edges"))
        ]
        if edges != list(poly.edges):
            _fail(path + ".edges", "edges do not match the face lattice")
        faces = []
        for i, f in enumerate(_list(o["faces"], path + ".faces")):
            fp = f"{path}.faces[{i}]"
            f = _obj(f, fp, ("cycle", "normal", "level"))
            cycle = tuple(_int(c, f"{fp}.cycle[{j}]") for j, c in enumerate(_list(f["cycle"], fp + ".cycle")))
            faces.append((cycle, _vector(f["normal"], fp + ".normal"), _rat(f["level"], fp + ".level")))
        if faces != [(f.cycle, f.normal, f.level) for f in poly.faces]:
            _fail(path + ".faces", "faces do not match the face lattice")
        return poly
    if kind == "chamber":
        o = _obj(o, path, ("polygon", "fixed_vertices"))
        poly = _d_polygon(o["polygon"], path + ".polygon")
        fixed = tuple(_point(v, f"{path}.fixed_vertices[{i}]") for i, v in enumerate(_list(o["fixed_vertices"], path + ".fixed_vertices")))
        return _wrap(path, ChamberData, poly, fixed)
    if kind == "xray":
        return _d_xray(o, path)
    if kind == "verdict":
        return _d_verdict(o, path)
    if kind == "sweep":
        o = _obj(o, path, ("rows",))
        rows = []
        for i, r in enumerate(_list(o["rows"], path + ".rows")):
            rp = f"{path}.rows[{i}]"
            r = _obj(r, rp, ("n", "verdict"))
            rows.append((_int(r["n"], rp + ".n"), _d_verdict(r["verdict"], rp + ".verdict")))
        return tuple(rows)
    _fail("$.kind", f"unknown document kind {kind!r}")


def from_json_obj(o) -> Document:
    o = _obj(o, "$", ("kind", "meta", "payload"))
    kind = _str(o["kind"], "$.kind")
    if kind not in KINDS:
        _fail("$.kind", f"unknown document kind {kind!r}")
    meta = _obj(o["meta"], "$.meta", ("tool_version", "provenance"))
    meta = {k: _str(v, f"$.meta.{k}") for k, v in meta.items()}
    return Document(kind, decode_payload(kind, o["payload"]), meta)


def decode(text: str) -> Document:
    try:
        o = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}", path="$") from exc
    return from_json_obj(o)
