"""Exception hierarchy.

Every error carries a stable ``code`` string and a ``details`` dict so the
command line can report failures as machine-readable JSON.
"""


class HamXRayError(Exception):
    code = "Error"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.details = details

    def to_dict(self):
        return {"error": self.code, "message": self.message, "details": self.details}


# geometry
class ZeroVector(HamXRayError):
    code = "ZeroVector"


class DegenerateCone(HamXRayError):
    code = "DegenerateCone"


class EmptyInput(HamXRayError):
    code = "EmptyInput"


class EmptyCut(HamXRayError):
    code = "EmptyCut"


class DegenerateCut(HamXRayError):
    code = "DegenerateCut"


class NotFullDimensional(HamXRayError):
    code = "NotFullDimensional"


class InvalidPolygon(HamXRayError):
    code = "InvalidPolygon"


class DimensionMismatch(HamXRayError):
    code = "DimensionMismatch"


# group data
class NonGenericLambda(HamXRayError):
    code = "NonGenericLambda"


# x-rays
class InvalidChamberData(HamXRayError):
    code = "InvalidChamberData"


class InvalidXRay(HamXRayError):
    code = "InvalidXRay"


class NotDelzant(HamXRayError):
    code = "NotDelzant"


class DuplicateFixedPoint(HamXRayError):
    code = "DuplicateFixedPoint"


class VerticalEdgeUnsupported(DuplicateFixedPoint):
    code = "VerticalEdgeUnsupported"


class AmbiguousPairing(HamXRayError):
    code = "AmbiguousPairing"


class DanglingWeight(HamXRayError):
    code = "DanglingWeight"


# cutting
class WallNotPerpendicular(HamXRayError):
    code = "WallNotPerpendicular"


class VertexOnCutLine(HamXRayError):
    code = "VertexOnCutLine"


class NonFreeAction(HamXRayError):
    code = "NonFreeAction"


# obstruction
class WrongDimensionScope(HamXRayError):
    code = "WrongDimensionScope"


# scenarios
class InvalidParams(HamXRayError):
    code = "InvalidParams"


# documents
class DocumentError(HamXRayError):
    code = "DocumentError"


class DegenerateSegment(HamXRayError):
    code = "DegenerateSegment"


class InvalidPolytope(HamXRayError):
    code = "InvalidPolytope"
