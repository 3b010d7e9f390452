"""
Batch plane tables: CSV ingestion, vertex tables, deck and OBJ emission.

Input CSV columns (header names are case-insensitive, ``yaw`` and ``roll``
are optional and default to 0)::

    id,x,y,z,length,height,pitch,yaw,roll

Vertex CSV columns::

    id,x1,y1,z1,x2,y2,z2,x3,y3,z3

Every emitter returns UTF-8 bytes with LF line endings and is deterministic.
Numbers are written with ``.`` as decimal separator and no grouping,
independent of locale.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Union

from atbplanes.errors import (
    ContactPlaneError,
    CsvParseError,
    DuplicateIdError,
    InvalidSpecError,
    RowValidationError,
    SchemaError,
    WrongFrameError,
)
from atbplanes.frames import IDENTITY, FrameConvention, transform_plane
from atbplanes.geometry import (
    ContactPlane,
    Frame,
    PlaneSpec,
    Vec3,
    invert_plane,
    vertices_general,
)

DECK_FORMAT_VERSION = 1
DECK_FIELD_WIDTH = 12
DECK_DECIMALS = 4

PLANE_COLUMNS = ("id", "x", "y", "z", "length", "height", "pitch", "yaw", "roll")
OPTIONAL_PLANE_COLUMNS = ("yaw", "roll")
VERTEX_COLUMNS = ("id", "x1", "y1", "z1", "x2", "y2", "z2", "x3", "y3", "z3")

# Decimals printed per frame by the original spreadsheet tool.
SPREADSHEET_DECIMALS = {Frame.SCENE: 2, Frame.VEHICLE: 2, Frame.SIMULATOR: 1}

TextLike = Union[bytes, str]


@dataclass
class PlaneTable:
    rows: list[tuple[str, PlaneSpec]] = field(default_factory=list)
    source_convention: FrameConvention = IDENTITY

    def __post_init__(self) -> None:
        _check_unique(row[0] for row in self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def ids(self) -> list[str]:
        return [row_id for row_id, _ in self.rows]


@dataclass
class VertexTable:
    rows: list[tuple[str, ContactPlane]] = field(default_factory=list)
    frame: Frame = Frame.SCENE

    def __post_init__(self) -> None:
        _check_unique(row[0] for row in self.rows)
        for row_id, plane in self.rows:
            if plane.frame is not self.frame:
                raise WrongFrameError(
                    f"row {row_id!r}: plane in {plane.frame.value} frame, table is {self.frame.value}"
                )

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def ids(self) -> list[str]:
        return [row_id for row_id, _ in self.rows]


def _check_unique(ids: Iterable[str]) -> None:
    seen: set[str] = set()
    for row_id in ids:
        if row_id in seen:
            raise DuplicateIdError(f"duplicate id {row_id!r}")
        seen.add(row_id)


def _decode(text: TextLike) -> str:
    if isinstance(text, bytes):
        return text.decode("utf-8-sig")
    return text.lstrip("\ufeff")


def _read_rows(text: TextLike, required: Iterable[str], optional: Iterable[str] = ()):
    """Yield ``(line_number, {column: raw_cell})`` for each non-blank data row."""
    reader = csv.reader(io.StringIO(_decode(text), newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise SchemaError("CSV is empty: header row required") from None
    index = {name.strip().lower(): i for i, name in enumerate(header)}
    for name in required:
        if name not in index:
            raise SchemaError(f"missing mandatory column {name!r}")
    wanted = [c for c in (*required, *optional) if c in index]
    for cells in reader:
        if not any(cell.strip() for cell in cells):
            continue
        line = reader.line_num
        if len(cells) < len(header):
            raise CsvParseError(
                f"line {line}: expected {len(header)} cells, got {len(cells)}"
            )
        yield line, {c: cells[index[c]].strip() for c in wanted}


def _number(raw: str, row_id: str, column: str, line: int) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise CsvParseError(
            f"row {row_id!r} (line {line}), column {column!r}: not a number: {raw!r}"
        ) from None
    if not math.isfinite(value):
        raise CsvParseError(
            f"row {row_id!r} (line {line}), column {column!r}: non-finite value {raw!r}"
        )
    return value


def parse_plane_csv(
    text: TextLike, source_convention: FrameConvention = IDENTITY
) -> PlaneTable:
    """Read a plane table (one oriented rectangle per row).

    Raises:
        SchemaError: A mandatory column is missing.
        CsvParseError: A cell is not a finite number.
        RowValidationError: A row describes an invalid rectangle.
        DuplicateIdError: Two rows share an id.
    """
    required = [c for c in PLANE_COLUMNS if c not in OPTIONAL_PLANE_COLUMNS]
    rows: list[tuple[str, PlaneSpec]] = []
    seen: set[str] = set()
    for line, cells in _read_rows(text, required, OPTIONAL_PLANE_COLUMNS):
        row_id = cells["id"]
        if not row_id:
            raise CsvParseError(f"line {line}: empty id")
        if row_id in seen:
            raise DuplicateIdError(f"row {row_id!r} (line {line}): duplicate id")
        seen.add(row_id)
        values = {
            c: _number(cells[c], row_id, c, line) if c in cells else 0.0
            for c in PLANE_COLUMNS[1:]
        }
        try:
            spec = PlaneSpec(
                Vec3(values["x"], values["y"], values["z"]),
                values["length"],
                values["height"],
                pitch=values["pitch"],
                yaw=values["yaw"],
                roll=values["roll"],
            )
        except InvalidSpecError as exc:
            raise RowValidationError(f"row {row_id!r} (line {line}): {exc}") from None
        rows.append((row_id, spec))
    return PlaneTable(rows, source_convention)


def parse_vertex_csv(text: TextLike, frame: Frame = Frame.SCENE) -> VertexTable:
    """Read a vertex table as written by :func:`emit_vertex_csv`."""
    rows: list[tuple[str, ContactPlane]] = []
    seen: set[str] = set()
    for line, cells in _read_rows(text, VERTEX_COLUMNS):
        row_id = cells["id"]
        if not row_id:
            raise CsvParseError(f"line {line}: empty id")
        if row_id in seen:
            raise DuplicateIdError(f"row {row_id!r} (line {line}): duplicate id")
        seen.add(row_id)
        v = [_number(cells[c], row_id, c, line) for c in VERTEX_COLUMNS[1:]]
        try:
            plane = ContactPlane(Vec3(*v[0:3]), Vec3(*v[3:6]), Vec3(*v[6:9]), frame)
        except ContactPlaneError as exc:
            raise RowValidationError(f"row {row_id!r} (line {line}): {exc}") from None
        rows.append((row_id, plane))
    return VertexTable(rows, frame)


def build_vertex_tables(
    table: PlaneTable, conv: FrameConvention
) -> tuple[VertexTable, VertexTable]:
    """Scene-frame corners of every row plus their simulator-frame images."""
    scene: list[tuple[str, ContactPlane]] = []
    simulator: list[tuple[str, ContactPlane]] = []
    for row_id, spec in table.rows:
        try:
            plane = vertices_general(spec)
            moved = transform_plane(plane, conv)
        except ContactPlaneError as exc:
            raise RowValidationError(f"row {row_id!r}: {exc}") from None
        scene.append((row_id, plane))
        simulator.append((row_id, moved))
    return VertexTable(scene, Frame.SCENE), VertexTable(simulator, Frame.SIMULATOR)


def invert_vertex_table(
    table: VertexTable, tolerance: float = 1e-3
) -> PlaneTable:
    """Apply :func:`invert_plane` row by row, tagging failures with the row id."""
    rows = []
    for row_id, plane in table.rows:
        try:
            rows.append((row_id, invert_plane(plane, tolerance)))
        except ContactPlaneError as exc:
            raise RowValidationError(f"row {row_id!r}: {exc}") from None
    return PlaneTable(rows)


def format_number(value: float, decimals: int | None = None) -> str:
    """Locale-independent number text; ``decimals=None`` gives round-trip precision."""
    text = repr(float(value)) if decimals is None else f"{value:.{decimals}f}"
    # "-0.0" and "-0.00" carry no information and break byte comparisons.
    if text.startswith("-") and float(text) == 0.0:
        text = text[1:]
    return text


def _csv_bytes(header: Iterable[str], rows: Iterable[Iterable[str]]) -> bytes:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_vertex_csv(table: VertexTable, decimals: int | None = None) -> bytes:
    """Serialize a vertex table.

    Args:
        table: Table to write.
        decimals: Fixed decimals per value, or None for full round-trip
            precision. Use :func:`spreadsheet_decimals` for the spreadsheet look.
    """
    return _csv_bytes(
        VERTEX_COLUMNS,
        (
            [row_id, *(format_number(c, decimals) for v in plane.vertices() for c in v)]
            for row_id, plane in table.rows
        ),
    )


def spreadsheet_decimals(frame: Frame) -> int:
    return SPREADSHEET_DECIMALS[frame]


def emit_plane_csv(table: PlaneTable, decimals: int | None = None) -> bytes:
    def cells(row_id: str, s: PlaneSpec) -> list[str]:
        values = (*s.center, s.length, s.height, s.pitch, s.yaw, s.roll)
        return [row_id, *(format_number(v, decimals) for v in values)]

    return _csv_bytes(PLANE_COLUMNS, (cells(*row) for row in table.rows))


def _deck_field(value: float, row_id: str) -> str:
    text = format_number(value, DECK_DECIMALS).rjust(DECK_FIELD_WIDTH)
    if len(text) > DECK_FIELD_WIDTH:
        raise ContactPlaneError(
            f"row {row_id!r}: value {value!r} does not fit a {DECK_FIELD_WIDTH}-character deck field"
        )
    return text


def emit_atb_deck(table: VertexTable) -> bytes:
    """Plain-text contact-plane deck for the simulator frame.

    Layout (version 1)::

        # atbplanes contact-plane deck, format 1
        # plane <id>
        <x1><y1><z1>
        <x2><y2><z2>
        <x3><y3><z3>

    Each coordinate is right-aligned in a 12-character field with 4
    decimals. Blocks follow table order, which is the simulator's plane
    numbering.

    Raises:
        WrongFrameError: If the table is not in the simulator frame.
    """
    if table.frame is not Frame.SIMULATOR:
        raise WrongFrameError(
            f"deck needs simulator-frame vertices, table is in the {table.frame.value} frame"
        )
    lines = [f"# atbplanes contact-plane deck, format {DECK_FORMAT_VERSION}"]
    for row_id, plane in table.rows:
        lines.append(f"# plane {row_id}")
        for v in plane.vertices():
            lines.append("".join(_deck_field(c, row_id) for c in v))
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_mesh(table: VertexTable) -> bytes:
    """Wavefront OBJ with one quad per plane.

    Vertices are written r1, r2, r3, r4 per plane (r4 completes the
    parallelogram) and each face is wound r1 -> r2 -> r4 -> r3 so its
    right-hand normal matches the contact-plane normal.
    """
    lines: list[str] = []
    for i, (_, plane) in enumerate(table.rows):
        for v in (plane.r1, plane.r2, plane.r3, plane.r4):
            lines.append("v " + " ".join(format_number(c) for c in v))
        base = 4 * i
        lines.append(f"f {base + 1} {base + 2} {base + 4} {base + 3}")
    return "".join(line + "\n" for line in lines).encode("utf-8")


def parse_obj(text: TextLike) -> tuple[list[Vec3], list[list[int]]]:
    """Read back the ``v``/``f`` subset written by :func:`emit_mesh`.

    Face indices are returned 0-based.
    """
    vertices: list[Vec3] = []
    faces: list[list[int]] = []
    for line in _decode(text).splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "v":
            vertices.append(Vec3(*(float(p) for p in parts[1:4])))
        elif parts[0] == "f":
            faces.append([int(p.split("/")[0]) - 1 for p in parts[1:]])
    return vertices, faces


def face_normal(points: list[Vec3]) -> Vec3:
    """Unit polygon normal by Newell's method."""
    nx = ny = nz = 0.0
    for a, b in zip(points, points[1:] + points[:1]):
        nx += (a.y - b.y) * (a.z + b.z)
        ny += (a.z - b.z) * (a.x + b.x)
        nz += (a.x - b.x) * (a.y + b.y)
    n = Vec3(nx, ny, nz)
    return n / n.norm()

