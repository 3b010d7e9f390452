"""Brute-force reference computations, deliberately independent of atbplanes internals."""

import numpy as np


def rx(deg):
    a = np.radians(deg)
    return np.array([[1, 0, 0], [0, np.cos(a), -np.sin(a)], [0, np.sin(a), np.cos(a)]])


def ry(deg):
    a = np.radians(deg)
    return np.array([[np.cos(a), 0, np.sin(a)], [0, 1, 0], [-np.sin(a), 0, np.cos(a)]])


def rz(deg):
    a = np.radians(deg)
    return np.array([[np.cos(a), -np.sin(a), 0], [np.sin(a), np.cos(a), 0], [0, 0, 1]])


def composed_rotation(yaw, pitch, roll):
    return rz(yaw) @ ry(pitch) @ rx(roll)


def corners_by_matrix(center, length, height, pitch, yaw, roll):
    """Rotate the local edges by an explicitly multiplied matrix and offset from center."""
    r = composed_rotation(yaw, pitch, roll)
    u = r @ np.array([length, 0.0, 0.0])
    v = r @ np.array([0.0, height, 0.0])
    c = np.asarray(center, dtype=float)
    return c - u / 2 - v / 2, c + u / 2 - v / 2, c - u / 2 + v / 2


def _rect_grid(r1, d21, d31, a_lo, a_hi, b_lo, b_hi, n):
    a, b = np.meshgrid(np.linspace(a_lo, a_hi, n), np.linspace(b_lo, b_hi, n), indexing="ij")
    a, b = a.ravel(), b.ravel()
    return a, b, r1 + a[:, None] * d21 + b[:, None] * d31


def closest_rectangle_point(p, r1, r2, r3, n=224):
    """Closest point of the filled rectangle to p by two-stage grid search.

    Returns (distance, a, b) with (a, b) the rectangle parameters in [0, 1].
    Uses n*n samples per stage (about 1e5 in total at the default n).
    """
    p, r1, r2, r3 = (np.asarray(v, dtype=float) for v in (p, r1, r2, r3))
    d21, d31 = r2 - r1, r3 - r1
    a, b, pts = _rect_grid(r1, d21, d31, 0.0, 1.0, 0.0, 1.0, n)
    k = np.argmin(np.linalg.norm(pts - p, axis=1))
    h = 1.0 / (n - 1)
    a, b, pts = _rect_grid(
        r1, d21, d31,
        max(0.0, a[k] - h), min(1.0, a[k] + h),
        max(0.0, b[k] - h), min(1.0, b[k] + h),
        n,
    )
    dist = np.linalg.norm(pts - p, axis=1)
    k = np.argmin(dist)
    return dist[k], a[k], b[k]


def point_probe_oracle(p, r1, r2, r3):
    """(signed distance or None, in_rectangle, penetration) from grid search.

    The side comes from the sign of the triple product [d21, d31, p - r1].
    The signed distance is only defined when the closest rectangle point is
    interior, i.e. the foot of the perpendicular lands inside.
    """
    p, r1, r2, r3 = (np.asarray(v, dtype=float) for v in (p, r1, r2, r3))
    dist, a, b = closest_rectangle_point(p, r1, r2, r3)
    inside = 0.0 < a < 1.0 and 0.0 < b < 1.0
    side = np.sign(np.linalg.det(np.array([r2 - r1, r3 - r1, p - r1])))
    if not inside:
        return None, False, 0.0
    sd = side * dist
    return sd, True, max(0.0, -sd)


def fibonacci_sphere(n=100_000):
    i = np.arange(n) + 0.5
    phi = np.arccos(1 - 2 * i / n)
    theta = np.pi * (1 + 5**0.5) * i
    return np.stack(
        [np.cos(theta) * np.sin(phi), np.sin(theta) * np.sin(phi), np.cos(phi)], axis=1
    )


_SPHERE = None


def ellipsoid_surface(center, radii, yaw, pitch, roll, n=100_000):
    global _SPHERE
    if _SPHERE is None or len(_SPHERE) != n:
        _SPHERE = fibonacci_sphere(n)
    r = composed_rotation(yaw, pitch, roll)
    return np.asarray(center, dtype=float) + (_SPHERE * np.asarray(radii, dtype=float)) @ r.T


def ellipsoid_probe_oracle(center, radii, yaw, pitch, roll, r1, r2, r3, margin=5e-3):
    """Penetration of a sampled ellipsoid surface against a finite rectangle.

    Depth is the largest distance of any surface sample below the plane. The
    footprint overlaps the rectangle when some sample projects inside it.
    Returns (penetration, overlaps) or None when the overlap decision is
    within ``margin`` (rectangle-parameter units) of flipping.
    """
    r1, r2, r3 = (np.asarray(v, dtype=float) for v in (r1, r2, r3))
    d21, d31 = r2 - r1, r3 - r1
    normal = np.cross(d21, d31)
    normal /= np.linalg.norm(normal)
    pts = ellipsoid_surface(center, radii, yaw, pitch, roll)
    rel = pts - r1
    depth = float(np.max(-(rel @ normal)))
    # Rectangle parameters of each sample's projection.
    basis = np.stack([d21, d31], axis=1)
    ab, *_ = np.linalg.lstsq(basis, rel.T, rcond=None)
    violation = np.maximum.reduce(
        [np.zeros(ab.shape[1]), -ab[0], ab[0] - 1, -ab[1], ab[1] - 1]
    )
    best = float(violation.min())
    if 0.0 < best < margin:
        return None
    if best == 0.0:
        inner = np.maximum.reduce([-ab[0], ab[0] - 1, -ab[1], ab[1] - 1])
        if inner.min() > -margin:
            return None
    overlaps = best == 0.0
    return (max(0.0, depth) if overlaps else 0.0), overlaps
