"""Root data and Weyl chamber geometry for U(2) inside U(3), restricted to the 2-torus."""

from __future__ import annotations

from itertools import permutations

from .errors import NonGenericLambda
from .geometry import as_point, det2, q

# positive roots of U(3) restricted to the torus U(1)^2 x id
ALPHA1 = (1, -1)
ALPHA2 = (0, 1)
ALPHA3 = (1, 0)
MINUS_ALPHA1 = (-1, 1)
ROOTS = (ALPHA1, ALPHA2, ALPHA3)

# Weyl wall of U(2) and its normal direction; the chamber is x >= y
WALL_DIRECTION = (1, 1)


def _check_root_data():
    assert ALPHA3 == (ALPHA1[0] + ALPHA2[0], ALPHA1[1] + ALPHA2[1])
    assert MINUS_ALPHA1 == (-ALPHA1[0], -ALPHA1[1])
    for i in range(3):
        for j in range(i + 1, 3):
            assert abs(det2(ROOTS[i], ROOTS[j])) == 1


_check_root_data()


def weyl_reflect(p):
    """The nontrivial Weyl element of U(2): swap the two coordinates."""
    x, y = p
    return (y, x)


def on_wall(p) -> bool:
    return p[0] == p[1]


def in_chamber(p) -> bool:
    return p[0] >= p[1]


def weyl_reflect_vector(v):
    return (v[1], v[0])


def check_generic(lam):
    lam = tuple(q(c) for c in lam)
    if len(lam) != 3:
        raise NonGenericLambda("lambda needs three entries", lam=[str(c) for c in lam])
    if not lam[0] > lam[1] > lam[2]:
        raise NonGenericLambda(
            "lambda must be strictly decreasing", lam=[str(c) for c in lam]
        )
    return lam


def s3_orbit(lam):
    """The six coordinate permutations of a generic ``lam``, in lexicographic order of the permutation."""
    lam = check_generic(lam)
    return [tuple(lam[i] for i in perm) for perm in permutations(range(3))]


def project(p3):
    """Restriction from the torus of U(3) to U(1)^2 x id: drop the last coordinate."""
    return as_point(p3[:2])
