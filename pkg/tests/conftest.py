import pytest

from trisep.scene import Scene

# rotated-square environment that avoids collinearity with the fixtures below
QUAD_ENV = [(23, -17), (19, 21), (-21, 18), (-18, -22)]

# non-convex fixture: square with a notch cut from the upper-right corner
L_SHAPE = [(10, -10), (10, 2), (2, 2), (2, 10), (-10, 10), (-10, -10)]

BLUE_SQUARE = [(0, 0), (4, 0), (4, 4), (0, 4)]


@pytest.fixture(scope="session")
def one_red_scene() -> Scene:
    return Scene.from_ints(blue=BLUE_SQUARE, red=[(8, 2)], polygon=QUAD_ENV)


@pytest.fixture(scope="session")
def s1_scene() -> Scene:
    """Four reds around the blue square, one per side."""
    return Scene.from_ints(blue=BLUE_SQUARE, red=[(8, 2), (2, 8), (-8, 2), (2, -8)],
                           polygon=QUAD_ENV)
