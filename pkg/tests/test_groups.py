from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamxray.errors import NonGenericLambda
from hamxray.groups import (
    ALPHA1,
    ALPHA2,
    ALPHA3,
    check_generic,
    in_chamber,
    on_wall,
    project,
    s3_orbit,
    weyl_reflect,
)

rat = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def test_roots():
    assert ALPHA3 == (ALPHA1[0] + ALPHA2[0], ALPHA1[1] + ALPHA2[1])


def test_orbit_images():
    images = {project(p) for p in s3_orbit((5, 1, 0))}
    assert images == {(5, 1), (5, 0), (1, 0), (1, 5), (0, 5), (0, 1)}


def test_nongeneric_lambda():
    with pytest.raises(NonGenericLambda):
        check_generic((1, 1, 0))
    with pytest.raises(NonGenericLambda):
        check_generic((0, 1, 2))
    assert check_generic(("7/2", 1, 0)) == (F(7, 2), 1, 0)


@given(rat, rat)
def test_reflection_is_an_involution(x, y):
    assert weyl_reflect(weyl_reflect((x, y))) == (x, y)


@given(rat, rat)
def test_trichotomy(x, y):
    p = (x, y)
    cases = [
        in_chamber(p) and not on_wall(p),
        on_wall(p),
        in_chamber(weyl_reflect(p)) and not on_wall(p),
    ]
    assert cases.count(True) == 1
