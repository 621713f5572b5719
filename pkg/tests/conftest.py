import numpy as np
import pytest
from hypothesis import strategies as st

from parcc import Demonstration, ObjectClass, SceneObject, Space
from parcc import box_packing

sizes = st.floats(min_value=0.5, max_value=6.0, allow_nan=False, allow_infinity=False)
coords = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)

int_sizes = st.integers(min_value=1, max_value=8)
int_coords = st.integers(min_value=-10, max_value=10)


@st.composite
def rects(draw, ident="a", integer=False):
    if integer:
        l, w = draw(int_sizes), draw(int_sizes)
        x, y = draw(int_coords), draw(int_coords)
    else:
        l, w = draw(sizes), draw(sizes)
        x, y = draw(coords), draw(coords)
    return SceneObject(ident, "X", l, w, x, y)


@st.composite
def rect_pairs(draw, integer=False):
    return draw(rects("a", integer)), draw(rects("b", integer))


def random_demo(rng: np.random.Generator, n_classes=3, max_objects=6, snap=True) -> Demonstration:
    """A demo of random rectangles; half-unit snapping makes contacts common."""
    space = Space(0, 12, 0, 12)
    names = ["A", "B", "C"][: int(rng.integers(1, n_classes + 1))]
    classes = tuple(ObjectClass(n) for n in names)
    objects = []
    count = int(rng.integers(1, max_objects + 1))
    for i in range(count):
        cls = names[int(rng.integers(0, len(names)))]
        if snap and rng.random() < 0.5:
            l = float(rng.integers(1, 4))
            w = float(rng.integers(1, 4))
            x = float(rng.integers(2, 21)) / 2.0
            y = float(rng.integers(2, 21)) / 2.0
        else:
            l = float(rng.uniform(0.5, 3.0))
            w = float(rng.uniform(0.5, 3.0))
            x = float(rng.uniform(0.0, 12.0))
            y = float(rng.uniform(0.0, 12.0))
        objects.append(SceneObject(f"{cls.lower()}{i}", cls, l, w, x, y))
    return Demonstration(space, classes, tuple(objects))


@pytest.fixture(scope="session")
def packing_demos():
    return box_packing.demo_set(k=8, seed=0)


@pytest.fixture(scope="session")
def packing_spec():
    return box_packing.spec()
