"""
Contact probes: which side of a contact plane a test body sits on, how deep
it penetrates, and which way the contact force would push it.

These are geometry checks for orienting planes before a simulation run, not
a contact solver. The force direction reported is always the plane's
``d21 x d31`` normal; no magnitude is computed.

The rectangle footprint is measured in the plane's edge coordinates
``s = (p - r1) . d21_hat`` and ``t = (p - r1) . d31_hat``, with the rectangle
occupying ``0 <= s <= L``, ``0 <= t <= H``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from atbplanes.errors import InvalidSpecError
from atbplanes.geometry import (
    ContactPlane,
    Vec3,
    VecLike,
    edge_vectors,
    rotation_matrix,
    surface_normal,
)


class BodyKind(str, Enum):
    POINT = "point"
    SPHERE = "sphere"
    ELLIPSOID = "ellipsoid"


@dataclass(frozen=True)
class ProbeBody:
    """A point, sphere or oriented ellipsoid used to test a contact plane.

    ``radii`` are the semi-axes along the body's local x, y, z before the
    ``Rz(yaw) @ Ry(pitch) @ Rx(roll)`` orientation (degrees) is applied.
    """

    kind: BodyKind
    center: Vec3
    radii: Vec3 = Vec3(0.0, 0.0, 0.0)
    pitch: float = 0.0
    yaw: float = 0.0
    roll: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", BodyKind(self.kind))
        object.__setattr__(self, "center", Vec3.of(self.center))
        radii = Vec3.of(self.radii)
        object.__setattr__(self, "radii", radii)
        if min(radii) < 0.0:
            raise InvalidSpecError(f"radii must be >= 0, got {radii.to_tuple()}")
        if self.kind is BodyKind.POINT and max(radii) != 0.0:
            raise InvalidSpecError("a point body has zero radii")
        if self.kind is BodyKind.SPHERE and not (radii.x == radii.y == radii.z > 0.0):
            raise InvalidSpecError("a sphere needs three equal positive radii")
        if self.kind is BodyKind.ELLIPSOID and min(radii) <= 0.0:
            raise InvalidSpecError("ellipsoid radii must all be > 0")

    @classmethod
    def point(cls, center: VecLike) -> "ProbeBody":
        return cls(BodyKind.POINT, Vec3.of(center))

    @classmethod
    def sphere(cls, center: VecLike, radius: float) -> "ProbeBody":
        return cls(BodyKind.SPHERE, Vec3.of(center), Vec3(radius, radius, radius))

    @classmethod
    def ellipsoid(
        cls,
        center: VecLike,
        radii: VecLike,
        pitch: float = 0.0,
        yaw: float = 0.0,
        roll: float = 0.0,
    ) -> "ProbeBody":
        return cls(BodyKind.ELLIPSOID, Vec3.of(center), Vec3.of(radii), pitch, yaw, roll)

    def shape_matrix(self) -> np.ndarray:
        """``M`` such that the body is ``{center + M x : |x| <= 1}``."""
        rot = np.array(rotation_matrix(self.yaw, self.pitch, self.roll))
        return rot * np.array(self.radii.to_tuple())


@dataclass(frozen=True)
class ProbeResult:
    signed_distance: float
    in_rectangle: bool
    penetration: float
    force_direction: Optional[Vec3] = None

    @property
    def contact(self) -> bool:
        return self.penetration > 0.0


class _PlaneFrame:
    """Normal and edge axes of a contact plane, computed once per probe."""

    def __init__(self, plane: ContactPlane):
        edges = edge_vectors(plane)
        self.origin = plane.r1
        self.normal = surface_normal(plane)
        self.length = edges.d21.norm()
        self.height = edges.d31.norm()
        self.axis_s = edges.d21 / self.length
        self.axis_t = edges.d31 / self.height

    def height_of(self, p: Vec3) -> float:
        return self.normal.dot(p - self.origin)

    def footprint(self, p: Vec3) -> tuple[float, float]:
        rel = p - self.origin
        return self.axis_s.dot(rel), self.axis_t.dot(rel)

    def contains(self, s: float, t: float) -> bool:
        return 0.0 <= s <= self.length and 0.0 <= t <= self.height

    def result(self, signed_distance: float, in_rectangle: bool) -> ProbeResult:
        penetration = max(0.0, -signed_distance) if in_rectangle else 0.0
        # Zero deflection means zero force: touching is not contact.
        if penetration > 0.0:
            return ProbeResult(signed_distance, in_rectangle, penetration, self.normal)
        return ProbeResult(signed_distance, in_rectangle, 0.0, None)


def probe_point(p: VecLike, plane: ContactPlane) -> ProbeResult:
    """Signed height of ``p`` above the plane and its penetration if below."""
    frame = _PlaneFrame(plane)
    p = Vec3.of(p)
    return frame.result(frame.height_of(p), frame.contains(*frame.footprint(p)))


def probe_sphere(body: ProbeBody, plane: ContactPlane) -> ProbeResult:
    """Probe with a sphere.

    The footprint test passes when the rectangle comes within one radius of
    the sphere's projected center, so a sphere overhanging an edge still
    registers contact.
    """
    if body.kind is not BodyKind.SPHERE:
        raise InvalidSpecError(f"probe_sphere needs a sphere, got {body.kind.value}")
    frame = _PlaneFrame(plane)
    radius = body.radii.x
    s, t = frame.footprint(body.center)
    ds = s - min(max(s, 0.0), frame.length)
    dt = t - min(max(t, 0.0), frame.height)
    overlaps = ds * ds + dt * dt <= radius * radius
    return frame.result(frame.height_of(body.center) - radius, overlaps)


def _box_min_quadratic(q: np.ndarray, cs: float, ct: float, length: float, height: float) -> float:
    """Minimum of ``(y - c)^T q (y - c)`` over the box ``[0, L] x [0, H]``."""
    if 0.0 <= cs <= length and 0.0 <= ct <= height:
        return 0.0
    best = math.inf
    # Convex objective: the box minimum lies on an edge when c is outside.
    for fixed_s in (0.0, length):
        a = fixed_s - cs
        t = ct - q[0, 1] * a / q[1, 1]
        b = min(max(t, 0.0), height) - ct
        best = min(best, q[0, 0] * a * a + 2.0 * q[0, 1] * a * b + q[1, 1] * b * b)
    for fixed_t in (0.0, height):
        b = fixed_t - ct
        s = cs - q[0, 1] * b / q[0, 0]
        a = min(max(s, 0.0), length) - cs
        best = min(best, q[0, 0] * a * a + 2.0 * q[0, 1] * a * b + q[1, 1] * b * b)
    return best


def probe_ellipsoid(body: ProbeBody, plane: ContactPlane) -> ProbeResult:
    """Probe with an oriented ellipsoid.

    The deepest point along ``-n`` is the support point
    ``c - M (M^T n) / |M^T n|``, so the signed distance is the center's
    height minus ``|M^T n|``. The footprint test checks whether the
    ellipse cast onto the plane overlaps the rectangle; for equal radii this
    is exactly the sphere test.
    """
    if body.kind is BodyKind.POINT:
        raise InvalidSpecError("probe_ellipsoid needs positive radii")
    frame = _PlaneFrame(plane)
    m = body.shape_matrix()
    n = np.array(frame.normal.to_tuple())
    reach = float(np.linalg.norm(m.T @ n))
    signed_distance = frame.height_of(body.center) - reach

    axes = np.array([frame.axis_s.to_tuple(), frame.axis_t.to_tuple()])
    m2 = axes @ m
    q = np.linalg.inv(m2 @ m2.T)
    cs, ct = frame.footprint(body.center)
    overlaps = _box_min_quadratic(q, cs, ct, frame.length, frame.height) <= 1.0
    return frame.result(signed_distance, overlaps)


def support_point(body: ProbeBody, direction: VecLike) -> Vec3:
    """Farthest point of the body along ``direction``."""
    d = np.array(Vec3.of(direction).to_tuple())
    if body.kind is BodyKind.POINT:
        return body.center
    m = body.shape_matrix()
    mt_d = m.T @ d
    offset = m @ mt_d / np.linalg.norm(mt_d)
    return body.center + Vec3(*offset)


def probe(body: ProbeBody, plane: ContactPlane) -> ProbeResult:
    """Dispatch on the body kind."""
    if body.kind is BodyKind.POINT:
        return probe_point(body.center, plane)
    if body.kind is BodyKind.SPHERE:
        return probe_sphere(body, plane)
    return probe_ellipsoid(body, plane)
