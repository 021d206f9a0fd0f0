"""The concrete spaces: the flag variety M1, the toric variety M2, Tolman's
space M3 obtained by cutting M1, and the generalized Hirzebruch family H_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from .cutting import CutReport, CutSpec, cut_u2
from .errors import InvalidParams
from .geometry import Polygon, Polytope3, delzant_check, faces3, q
from .groups import check_generic
from .obstruction import Verdict, tolman_check
from .xray import ChamberData, XRay, chamber_to_xray, flag_xray, toric_xray

DEFAULT_LAMBDA = (5, 1, 0)

# Outer triangle at height 0, inner triangle at height 1; planar coordinates
# sit on the standard drawing grid in units of 20.
M2_VERTICES = (
    (0, 0, 0),
    (8, 0, 0),
    (0, 8, 0),
    (2, 2, 1),
    (4, 2, 1),
    (2, 4, 1),
)


def gelfand_cetlin(lam) -> ChamberData:
    """Chamber polygon of the U(3) orbit through diag(lam) viewed as a U(2)-space.

    This is the interlacing rectangle [l2, l1] x [l3, l2]; its corner
    (l2, l2) sits on the wall and is not a fixed-point image.
    """
    l1, l2, l3 = check_generic(lam)
    rect = Polygon(((l2, l3), (l1, l3), (l1, l2), (l2, l2)))
    return ChamberData(rect, ((l2, l3), (l1, l3), (l1, l2)))


def m1_flag(lam=DEFAULT_LAMBDA) -> XRay:
    return flag_xray(lam)


@dataclass(frozen=True)
class ToricScenario:
    polytope: Polytope3
    xray: XRay


def m2_polytope() -> Polytope3:
    p = faces3(M2_VERTICES)
    assert delzant_check(p).is_delzant
    return p


def m2_toric() -> ToricScenario:
    p = m2_polytope()
    return ToricScenario(p, toric_xray(p))


@dataclass(frozen=True)
class HnParams:
    n: int
    lam: tuple
    level: Fraction

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "lam", check_generic(self.lam))
        object.__setattr__(self, "level", q(self.level))
        if self.n == 0:
            return
        l1, l2, l3 = self.lam
        for y in (l3, l2):
            x = self.level - self.n * y
            if not l2 < x < l1:
                raise InvalidParams(
                    "cut line must cross both horizontal edges of the rectangle strictly inside",
                    n=self.n,
                    lam=[str(c) for c in self.lam],
                    level=str(self.level),
                )

    @classmethod
    def default(cls, n: int) -> "HnParams":
        n = int(n)
        if n >= 1:
            return cls(n, (n + 3, 1, 0), n + 2)
        if n == 0:
            return cls(0, DEFAULT_LAMBDA, 0)
        if n >= -3:
            return cls(n, DEFAULT_LAMBDA, Fraction(6 + n, 2))
        # (6 + n)/2 leaves the rectangle for n <= -4; widen it instead
        return cls(n, (3 - n, 1, 0), 2)

    @property
    def spec(self) -> CutSpec:
        return CutSpec((1, self.n), self.level)


@dataclass(frozen=True)
class HirzebruchSpace:
    params: HnParams
    chamber: ChamberData
    xray: XRay
    verdict: Verdict
    cut: Optional[CutReport] = None


def hirzebruch(params) -> HirzebruchSpace:
    """Build H_n by cutting the flag variety with <v, (1, n)> <= a and run the check.

    ``params`` is an :class:`HnParams` or just ``n`` (defaults are used).
    """
    if not isinstance(params, HnParams):
        params = HnParams.default(params)
    chamber = gelfand_cetlin(params.lam)
    report = None
    if params.n != 0:
        report = cut_u2(chamber, params.spec)
        chamber = report.result
    xray = chamber_to_xray(chamber)
    return HirzebruchSpace(params, chamber, xray, tolman_check(xray), report)


def tolman_m3() -> HirzebruchSpace:
    return hirzebruch(2)


def hn_sweep(n_from: int, n_to: int):
    """Verdicts for H_n over an inclusive range, in increasing ``n``."""
    if n_from > n_to:
        raise InvalidParams("empty sweep range", n_from=n_from, n_to=n_to)
    return tuple((n, hirzebruch(n).verdict) for n in range(n_from, n_to + 1))


def cut_edge(space: HirzebruchSpace):
    """The polygon edge created by the cut (its two new vertices)."""
    if space.cut is None:
        return None
    a, b = space.cut.new_fixed_vertices
    return a, b


def slope(a, b) -> Optional[Fraction]:
    if a[0] == b[0]:
        return None
    return Fraction(b[1] - a[1]) / (b[0] - a[0])


def tolman_fixture() -> XRay:
    """Tolman's X-ray, transcribed by hand onto a grid of unit 40."""
    from .serialize import decode

    text = resources.files("hamxray.data").joinpath("tolman_xray.json").read_text()
    return decode(text).payload

