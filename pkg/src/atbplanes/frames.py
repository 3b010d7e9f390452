"""
Scene <-> simulator frame conversion.

The scene frame is z-up with the origin under the vehicle center of gravity.
ATB-style simulator decks usually want y and z negated (z down), and often
work in inches while the scene reports feet, so a convention is an
axis-sign triple plus one uniform scale factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from atbplanes.errors import InvalidSpecError
from atbplanes.geometry import ContactPlane, Frame, Vec3


@dataclass(frozen=True)
class FrameConvention:
    """Axis signs and a uniform scale mapping scene coordinates to simulator ones.

    ``scale`` is output units per input unit. Anisotropic scaling is not
    representable on purpose: it would change edge lengths unevenly.
    """

    sign_x: int = 1
    sign_y: int = 1
    sign_z: int = 1
    scale: float = 1.0

    def __post_init__(self) -> None:
        for name in ("sign_x", "sign_y", "sign_z"):
            value = getattr(self, name)
            if value not in (-1, 1):
                raise InvalidSpecError(f"{name} must be -1 or +1, got {value!r}")
            object.__setattr__(self, name, int(value))
        scale = float(self.scale)
        if not math.isfinite(scale) or scale <= 0.0:
            raise InvalidSpecError(f"scale must be finite and > 0, got {self.scale!r}")
        object.__setattr__(self, "scale", scale)

    @property
    def signs(self) -> tuple[int, int, int]:
        return (self.sign_x, self.sign_y, self.sign_z)

    @property
    def handedness(self) -> int:
        """+1 if the map preserves orientation, -1 if it mirrors."""
        return self.sign_x * self.sign_y * self.sign_z

    @classmethod
    def parse(cls, text: str) -> "FrameConvention":
        """Parse a preset name or ``custom:sx,sy,sz,scale``."""
        text = text.strip()
        if text in PRESETS:
            return PRESETS[text]
        if text.startswith("custom:"):
            parts = text[len("custom:"):].split(",")
            if len(parts) != 4:
                raise InvalidSpecError(
                    f"custom convention needs 4 values sx,sy,sz,scale; got {text!r}"
                )
            try:
                sx, sy, sz = (int(p) for p in parts[:3])
                scale = float(parts[3])
            except ValueError:
                raise InvalidSpecError(f"malformed custom convention {text!r}") from None
            return cls(sx, sy, sz, scale)
        raise InvalidSpecError(
            f"unknown convention {text!r}; use one of {sorted(PRESETS)} or custom:sx,sy,sz,scale"
        )


IDENTITY = FrameConvention(1, 1, 1, 1.0)

# y and z flipped, feet -> inches. The x12 is inferred from reference vertex
# tables (8.165 ft -> 98.0 in); scene units are never labelled.
PAPER_CONVENTION = FrameConvention(1, -1, -1, 12.0)

PRESETS: dict[str, FrameConvention] = {
    "paper": PAPER_CONVENTION,
    "identity": IDENTITY,
}


def to_simulator(p: Vec3, conv: FrameConvention) -> Vec3:
    k = conv.scale
    return Vec3(conv.sign_x * k * p.x, conv.sign_y * k * p.y, conv.sign_z * k * p.z)


def from_simulator(p: Vec3, conv: FrameConvention) -> Vec3:
    k = conv.scale
    return Vec3(conv.sign_x * p.x / k, conv.sign_y * p.y / k, conv.sign_z * p.z / k)


def transform_plane(plane: ContactPlane, conv: FrameConvention) -> ContactPlane:
    """Map every vertex with :func:`to_simulator`, keeping vertex order.

    The frame tag flips between scene and simulator, so applying an
    involutive convention twice returns the original plane. Vertex order is
    never changed; with a mirroring convention (odd number of sign flips)
    the recomputed normal therefore points to the other physical side.
    """
    target = Frame.SCENE if plane.frame is Frame.SIMULATOR else Frame.SIMULATOR
    return ContactPlane(
        to_simulator(plane.r1, conv),
        to_simulator(plane.r2, conv),
        to_simulator(plane.r3, conv),
        target,
    )


def plane_from_simulator(plane: ContactPlane, conv: FrameConvention) -> ContactPlane:
    """Exact inverse of :func:`transform_plane` for a simulator-frame plane."""
    return ContactPlane(
        from_simulator(plane.r1, conv),
        from_simulator(plane.r2, conv),
        from_simulator(plane.r3, conv),
        Frame.SCENE,
    )
