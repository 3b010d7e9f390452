"""Hypothesis strategies and seeded generators shared across test modules."""

import numpy as np
from hypothesis import strategies as st

from atbplanes import PlaneSpec, Vec3

finite = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)
sizes = st.floats(min_value=0.1, max_value=10.0)
angles = st.floats(min_value=-179.999, max_value=180.0)


@st.composite
def plane_specs(draw, pitch_only=False):
    center = Vec3(draw(finite), draw(finite), draw(finite))
    if pitch_only:
        return PlaneSpec(center, draw(sizes), draw(sizes), pitch=draw(angles))
    return PlaneSpec(
        center, draw(sizes), draw(sizes),
        pitch=draw(angles), yaw=draw(angles), roll=draw(angles),
    )


def random_specs(n, seed, pitch_only=False):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        center = Vec3(*rng.uniform(-50.0, 50.0, 3))
        length, height = rng.uniform(0.1, 10.0, 2)
        # (-180, 180]: flip the closed lower end of uniform's [low, high).
        pitch, yaw, roll = -rng.uniform(-180.0, 180.0, 3)
        if pitch_only:
            yaw = roll = 0.0
        out.append(PlaneSpec(center, length, height, pitch=pitch, yaw=yaw, roll=roll))
    return out
