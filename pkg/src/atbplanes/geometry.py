"""
Contact-plane construction from oriented rectangles.

A contact plane is encoded as three corners of a rectangle, ``r1`` (rear-right),
``r2`` (front-right) and ``r3`` (rear-left), as seen from the driver's seat.
The edges ``d21 = r2 - r1`` and ``d31 = r3 - r1`` span the plane and their
normalized cross product ``d21 x d31`` is the surface normal, which points
up (+z) for a flat plane in the z-up scene frame.

Orientation angles are in degrees. The rotation carrying the local edges
``(L, 0, 0)`` and ``(0, H, 0)`` onto the plane is the fixed-axis composition
``Rz(yaw) @ Ry(pitch) @ Rx(roll)``, with ``Ry`` signed so that a pitched plane
has ``d21 = (L cos(pitch), 0, -L sin(pitch))``.

Note:
    "Height" is the name used by the scene software for the lateral edge of
    the rectangle, even though for a hood it spans the vehicle width.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence, Union

from atbplanes.errors import (
    DegeneratePlaneError,
    InvalidSpecError,
    NonRectangularError,
    NotSymmetricError,
)

# Sampled (snap-to-point) coordinates carry two decimals.
DEFAULT_ORTHOGONALITY_TOLERANCE = 1e-3

# |pitch| within this many degrees of 90 is treated as gimbal lock.
GIMBAL_LOCK_DEGREES = 1e-9


@dataclass(frozen=True, slots=True)
class Vec3:
    """Immutable 3-vector with finite components."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidSpecError(f"Vec3.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def of(cls, value: "VecLike") -> "Vec3":
        if isinstance(value, Vec3):
            return value
        x, y, z = value
        return cls(x, y, z)

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y
        yield self.z

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, k: float) -> "Vec3":
        return Vec3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> "Vec3":
        return Vec3(self.x / k, self.y / k, self.z / k)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def to_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


VecLike = Union[Vec3, Sequence[float]]


class Frame(str, Enum):
    """Coordinate frame a set of vertices is expressed in."""

    SCENE = "scene"
    SIMULATOR = "simulator"
    VEHICLE = "vehicle"


def normalize_angle(degrees: float) -> float:
    """Map an angle in degrees onto the half-open interval (-180, 180]."""
    a = math.fmod(float(degrees), 360.0)
    if a <= -180.0:
        a += 360.0
    elif a > 180.0:
        a -= 360.0
    return a


def _cos_sin(degrees: float) -> tuple[float, float]:
    # Exact values at quarter turns keep axis-aligned planes free of 1e-17 noise.
    quarter, rem = divmod(degrees, 90.0)
    if rem == 0.0:
        return ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))[int(quarter) % 4]
    rad = math.radians(degrees)
    return math.cos(rad), math.sin(rad)


@dataclass(frozen=True)
class PlaneSpec:
    """An oriented rectangle: geometric center, edge lengths and orientation.

    ``length`` runs along local x (front-back), ``height`` along local y
    (side-to-side). Angles are degrees and are normalized to (-180, 180].
    """

    center: Vec3
    length: float
    height: float
    pitch: float = 0.0
    yaw: float = 0.0
    roll: float = 0.0

    def __post_init__(self) -> None:
        try:
            center = Vec3.of(self.center)
        except (TypeError, ValueError) as exc:
            raise InvalidSpecError(f"invalid center {self.center!r}: {exc}") from None
        object.__setattr__(self, "center", center)
        for name in ("length", "height"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value <= 0.0:
                raise InvalidSpecError(f"{name} must be finite and > 0, got {value!r}")
            object.__setattr__(self, name, value)
        for name in ("pitch", "yaw", "roll"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidSpecError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, normalize_angle(value))


@dataclass(frozen=True)
class ContactPlane:
    """Ordered vertex triplet defining a finite rectangular contact plane."""

    r1: Vec3
    r2: Vec3
    r3: Vec3
    frame: Frame = Frame.SCENE

    def __post_init__(self) -> None:
        for name in ("r1", "r2", "r3"):
            object.__setattr__(self, name, Vec3.of(getattr(self, name)))
        object.__setattr__(self, "frame", Frame(self.frame))
        if self.r2 == self.r1 or self.r3 == self.r1:
            raise DegeneratePlaneError("contact plane vertices must be distinct from r1")

    @property
    def r4(self) -> Vec3:
        """Fourth corner, completing the parallelogram opposite r1."""
        return self.r2 + self.r3 - self.r1

    def vertices(self) -> tuple[Vec3, Vec3, Vec3]:
        return (self.r1, self.r2, self.r3)


@dataclass(frozen=True)
class EdgePair:
    d21: Vec3
    d31: Vec3


def rotation_matrix(yaw: float, pitch: float, roll: float) -> tuple[tuple[float, ...], ...]:
    """Closed form of ``Rz(yaw) @ Ry(pitch) @ Rx(roll)`` as row tuples.

    Args:
        yaw: Rotation about z in degrees.
        pitch: Rotation about y in degrees; positive pitch tips local +x downward.
        roll: Rotation about x in degrees.

    Returns:
        3x3 rotation matrix, row-major.
    """
    cy, sy = _cos_sin(yaw)
    cp, sp = _cos_sin(pitch)
    cr, sr = _cos_sin(roll)
    return (
        (cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr),
        (sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr),
        (-sp, cp * sr, cp * cr),
    )


def euler_from_matrix(m: Sequence[Sequence[float]]) -> tuple[float, float, float]:
    """Recover ``(yaw, pitch, roll)`` in degrees from a rotation matrix.

    Pitch is returned in [-90, 90]. At gimbal lock (|pitch| = 90) roll is
    reported as 0 and the whole rotation about z is folded into yaw.
    """
    cos_pitch = math.hypot(m[0][0], m[1][0])
    pitch = math.degrees(math.atan2(-m[2][0], cos_pitch))
    if 90.0 - abs(pitch) <= GIMBAL_LOCK_DEGREES:
        pitch = math.copysign(90.0, pitch)
        yaw = math.degrees(math.atan2(-m[0][1], m[1][1]))
        roll = 0.0
    else:
        yaw = math.degrees(math.atan2(m[1][0], m[0][0]))
        roll = math.degrees(math.atan2(m[2][1], m[2][2]))
    return normalize_angle(yaw), normalize_angle(pitch), normalize_angle(roll)


def canonical_angles(yaw: float, pitch: float, roll: float) -> tuple[float, float, float]:
    """Return the equivalent ``(yaw, pitch, roll)`` with pitch in [-90, 90].

    ``(yaw + 180, 180 - pitch, roll + 180)`` describes the same rotation, so
    every orientation has a representative with |pitch| <= 90. This is the
    form :func:`invert_plane` reports away from gimbal lock.
    """
    yaw, pitch, roll = (normalize_angle(a) for a in (yaw, pitch, roll))
    if abs(pitch) > 90.0:
        return (
            normalize_angle(yaw + 180.0),
            normalize_angle(math.copysign(180.0, pitch) - pitch),
            normalize_angle(roll + 180.0),
        )
    return yaw, pitch, roll


def vertices_symmetric(spec: PlaneSpec) -> ContactPlane:
    """Corners of a plane that is mirror-symmetric about the x-z plane.

    Only pitch is allowed; the rectangle's lateral edge stays parallel to y.

    Raises:
        NotSymmetricError: If the spec carries any yaw or roll.
    """
    if spec.yaw != 0.0 or spec.roll != 0.0:
        raise NotSymmetricError(
            f"yaw={spec.yaw}, roll={spec.roll}: plane is not x-z symmetric, use vertices_general"
        )
    c = spec.center
    cos_p, sin_p = _cos_sin(spec.pitch)
    half_l, half_h = spec.length / 2.0, spec.height / 2.0
    dx, dz = half_l * cos_p, half_l * sin_p
    return ContactPlane(
        Vec3(c.x - dx, c.y - half_h, c.z + dz),
        Vec3(c.x + dx, c.y - half_h, c.z - dz),
        Vec3(c.x - dx, c.y + half_h, c.z + dz),
        Frame.SCENE,
    )


def vertices_general(spec: PlaneSpec) -> ContactPlane:
    """Corners of an arbitrarily yawed, pitched and rolled rectangle.

    With zero yaw and roll this agrees with :func:`vertices_symmetric` to
    rounding error.
    """
    m = rotation_matrix(spec.yaw, spec.pitch, spec.roll)
    u = Vec3(m[0][0], m[1][0], m[2][0]) * spec.length
    v = Vec3(m[0][1], m[1][1], m[2][1]) * spec.height
    c = spec.center
    half_u, half_v = u / 2.0, v / 2.0
    return ContactPlane(
        c - half_u - half_v,
        c + half_u - half_v,
        c - half_u + half_v,
        Frame.SCENE,
    )


def edge_vectors(plane: ContactPlane) -> EdgePair:
    """Edge vectors ``d21 = r2 - r1`` (right side) and ``d31 = r3 - r1`` (rear side)."""
    d21 = plane.r2 - plane.r1
    d31 = plane.r3 - plane.r1
    if d21.norm() == 0.0 or d31.norm() == 0.0:
        raise DegeneratePlaneError("coincident vertices: edge vector has zero length")
    return EdgePair(d21, d31)


def surface_normal(plane: ContactPlane) -> Vec3:
    """Unit normal ``(d21 x d31) / |d21 x d31|``.

    Raises:
        DegeneratePlaneError: If the edges are zero or parallel.
    """
    edges = edge_vectors(plane)
    n = edges.d21.cross(edges.d31)
    size = n.norm()
    scale = edges.d21.norm() * edges.d31.norm()
    if size <= 1e-14 * scale:
        raise DegeneratePlaneError("edge vectors are parallel: plane normal undefined")
    return n / size


def invert_plane(
    plane: ContactPlane, tolerance: float = DEFAULT_ORTHOGONALITY_TOLERANCE
) -> PlaneSpec:
    """Recover the rectangle specification from three sampled corners.

    Center is the midpoint of the r2-r3 diagonal, length and height are the
    edge lengths, and the angles come from the rotation taking local x and y
    onto the edge directions. Slightly non-orthogonal samples are accepted up
    to ``tolerance`` (relative cosine) and squared up by Gram-Schmidt on d31.

    Raises:
        NonRectangularError: If the corner at r1 is not a right angle within
            ``tolerance``.
        DegeneratePlaneError: If the vertices coincide or are collinear.
    """
    edges = edge_vectors(plane)
    d21, d31 = edges.d21, edges.d31
    length, height = d21.norm(), d31.norm()
    cosine = d21.dot(d31) / (length * height)
    if abs(cosine) > tolerance:
        raise NonRectangularError(
            f"edges at r1 are not perpendicular: |cos| = {abs(cosine):.3g} > {tolerance:g}"
        )
    u = d21 / length
    v = d31 - u * u.dot(d31)
    v = v / v.norm()
    w = u.cross(v)
    m = (
        (u.x, v.x, w.x),
        (u.y, v.y, w.y),
        (u.z, v.z, w.z),
    )
    yaw, pitch, roll = euler_from_matrix(m)
    center = plane.r1 + (d21 + d31) / 2.0
    return PlaneSpec(center, length, height, pitch=pitch, yaw=yaw, roll=roll)
