"""Contact-plane vertex triplets for ATB-style simulators from oriented rectangles."""

from atbplanes.errors import (
    ContactPlaneError,
    CsvParseError,
    DegeneratePlaneError,
    DuplicateIdError,
    InvalidSpecError,
    NonRectangularError,
    NotSymmetricError,
    RowValidationError,
    SchemaError,
    WrongFrameError,
)
from atbplanes.frames import (
    IDENTITY,
    PAPER_CONVENTION,
    FrameConvention,
    from_simulator,
    to_simulator,
    transform_plane,
)
from atbplanes.geometry import (
    ContactPlane,
    EdgePair,
    Frame,
    PlaneSpec,
    Vec3,
    edge_vectors,
    invert_plane,
    surface_normal,
    vertices_general,
    vertices_symmetric,
)
from atbplanes.pipeline import (
    PlaneTable,
    VertexTable,
    build_vertex_tables,
    emit_atb_deck,
    emit_mesh,
    emit_vertex_csv,
    parse_plane_csv,
    parse_vertex_csv,
)
from atbplanes.probe import (
    ProbeBody,
    ProbeResult,
    probe,
    probe_ellipsoid,
    probe_point,
    probe_sphere,
)

__version__ = "0.1.0"

__all__ = [
    "ContactPlaneError", "CsvParseError", "DegeneratePlaneError", "DuplicateIdError",
    "InvalidSpecError", "NonRectangularError", "NotSymmetricError", "RowValidationError",
    "SchemaError", "WrongFrameError",
    "IDENTITY", "PAPER_CONVENTION", "FrameConvention", "from_simulator", "to_simulator",
    "transform_plane",
    "ContactPlane", "EdgePair", "Frame", "PlaneSpec", "Vec3", "edge_vectors", "invert_plane",
    "surface_normal", "vertices_general", "vertices_symmetric",
    "PlaneTable", "VertexTable", "build_vertex_tables", "emit_atb_deck", "emit_mesh",
    "emit_vertex_csv", "parse_plane_csv", "parse_vertex_csv",
    "ProbeBody", "ProbeResult", "probe", "probe_ellipsoid", "probe_point", "probe_sphere",
]
