"""
Command-line front end.

    atbplanes convert   --input planes.csv --output sim.csv [--scene-output scene.csv]
                        [--deck planes.deck] [--mesh planes.obj]
                        [--convention paper] [--precision figure7]
    atbplanes invert    --input vertices.csv --output planes.csv [--frame simulator]
    atbplanes probe     --input planes.csv --body sphere:x,y,z,r [--plane-id 3]
    atbplanes emit-mesh --input planes.csv --output planes.obj [--frame simulator]

Exit status is 0 on success, 1 on a data error and 2 on a usage error.
Outputs are written to a temporary file and renamed into place, so a failed
run never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import tempfile
from pathlib import Path
from typing import Sequence

from atbplanes.errors import ContactPlaneError
from atbplanes.frames import PAPER_CONVENTION, FrameConvention, plane_from_simulator
from atbplanes.geometry import DEFAULT_ORTHOGONALITY_TOLERANCE, Frame
from atbplanes.pipeline import (
    VertexTable,
    build_vertex_tables,
    emit_atb_deck,
    emit_mesh,
    emit_plane_csv,
    emit_vertex_csv,
    format_number,
    invert_vertex_table,
    parse_plane_csv,
    parse_vertex_csv,
    spreadsheet_decimals,
)
from atbplanes.probe import ProbeBody, ProbeResult, probe

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad arguments or unusable paths; reported with exit status 2."""


def _convention(text: str) -> FrameConvention:
    try:
        return FrameConvention.parse(text)
    except ContactPlaneError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _body(text: str) -> ProbeBody:
    kind, _, rest = text.partition(":")
    try:
        values = [float(v) for v in rest.split(",")] if rest else []
        if kind == "point" and len(values) == 3:
            return ProbeBody.point(values)
        if kind == "sphere" and len(values) == 4:
            return ProbeBody.sphere(values[:3], values[3])
        if kind == "ellipsoid" and len(values) in (6, 9):
            pitch, yaw, roll = values[6:9] if len(values) == 9 else (0.0, 0.0, 0.0)
            return ProbeBody.ellipsoid(values[:3], values[3:6], pitch, yaw, roll)
    except (ValueError, ContactPlaneError) as exc:
        raise argparse.ArgumentTypeError(f"invalid body {text!r}: {exc}") from None
    raise argparse.ArgumentTypeError(
        f"invalid body {text!r}; expected point:x,y,z | sphere:x,y,z,r | "
        "ellipsoid:x,y,z,a,b,c[,pitch,yaw,roll]"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atbplanes",
        description="Build ATB-style contact-plane vertex triplets from oriented rectangles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, type=Path, help="input CSV")
        p.add_argument(
            "--convention",
            type=_convention,
            default=PAPER_CONVENTION,
            help="scene->simulator map: 'paper' (+1,-1,-1, x12), 'identity' "
            "or custom:sx,sy,sz,scale (default: paper)",
        )

    p = sub.add_parser("convert", help="plane table -> vertex tables, deck, mesh")
    common(p)
    p.add_argument("--output", type=Path, help="simulator-frame vertex CSV")
    p.add_argument("--scene-output", type=Path, help="scene-frame vertex CSV")
    p.add_argument("--deck", type=Path, help="simulator-frame plane deck")
    p.add_argument("--mesh", type=Path, help="scene-frame OBJ mesh")
    p.add_argument(
        "--precision",
        choices=("full", "figure7"),
        default="full",
        help="full round-trip digits, or the spreadsheet's 2 (scene) / 1 (simulator) decimals",
    )

    p = sub.add_parser("invert", help="sampled vertex CSV -> plane table")
    common(p)
    p.add_argument("--output", required=True, type=Path, help="plane CSV to write")
    p.add_argument(
        "--frame",
        choices=("scene", "simulator"),
        default="scene",
        help="frame of the input vertices; simulator vertices are mapped back first",
    )
    p.add_argument(
        "--tolerance",
        type=float,
        default=DEFAULT_ORTHOGONALITY_TOLERANCE,
        help="allowed |cos| of the corner angle at r1 (default: %(default)g)",
    )
    p.add_argument("--precision", choices=("full", "figure7"), default="full")

    p = sub.add_parser("probe", help="test a body against contact planes")
    common(p)
    p.add_argument("--body", required=True, type=_body, help="point:x,y,z | sphere:x,y,z,r | ellipsoid:x,y,z,a,b,c[,pitch,yaw,roll]")
    p.add_argument("--plane-id", help="probe only this row (default: every row)")
    p.add_argument(
        "--frame",
        choices=("scene", "simulator"),
        default="scene",
        help="frame the body is given in",
    )
    p.add_argument("--output", type=Path, help="also write results as CSV")

    p = sub.add_parser("emit-mesh", help="plane table -> OBJ quads")
    common(p)
    p.add_argument("--output", required=True, type=Path, help="OBJ file to write")
    p.add_argument("--frame", choices=("scene", "simulator"), default="scene")
    return parser


def _read(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise UsageError(f"--input: cannot read {path}: {exc.strerror}") from None


def _write_all(outputs: dict[Path, bytes]) -> None:
    """Write every payload atomically: temp file in the target directory, then rename."""
    staged: list[tuple[str, Path]] = []
    try:
        for path, payload in outputs.items():
            directory = path.parent if str(path.parent) else Path(".")
            if not directory.is_dir():
                raise UsageError(f"output directory does not exist: {directory}")
            fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=directory)
            staged.append((tmp, path))
            with os.fdopen(fd, "wb") as fh:
                fh.write(payload)
        for tmp, path in staged:
            os.replace(tmp, path)
        staged.clear()
    except OSError as exc:
        raise UsageError(f"cannot write {exc.filename}: {exc.strerror}") from None
    finally:
        for tmp, _ in staged:
            if os.path.exists(tmp):
                os.unlink(tmp)


def _decimals(args: argparse.Namespace, frame: Frame) -> int | None:
    return spreadsheet_decimals(frame) if args.precision == "figure7" else None


def cmd_convert(args: argparse.Namespace) -> int:
    if not any((args.output, args.scene_output, args.deck, args.mesh)):
        raise UsageError("convert: give at least one of --output, --scene-output, --deck, --mesh")
    table = parse_plane_csv(_read(args.input))
    scene, simulator = build_vertex_tables(table, args.convention)
    outputs: dict[Path, bytes] = {}
    if args.output:
        outputs[args.output] = emit_vertex_csv(simulator, _decimals(args, Frame.SIMULATOR))
    if args.scene_output:
        outputs[args.scene_output] = emit_vertex_csv(scene, _decimals(args, Frame.SCENE))
    if args.deck:
        outputs[args.deck] = emit_atb_deck(simulator)
    if args.mesh:
        outputs[args.mesh] = emit_mesh(scene)
    _write_all(outputs)
    print(f"converted {len(table)} plane(s)", file=sys.stderr)
    return EXIT_OK


def cmd_invert(args: argparse.Namespace) -> int:
    frame = Frame(args.frame)
    vertices = parse_vertex_csv(_read(args.input), frame)
    if frame is Frame.SIMULATOR:
        vertices = VertexTable(
            [(i, plane_from_simulator(p, args.convention)) for i, p in vertices.rows],
            Frame.SCENE,
        )
    specs = invert_vertex_table(vertices, args.tolerance)
    decimals = 2 if args.precision == "figure7" else None
    _write_all({args.output: emit_plane_csv(specs, decimals)})
    print(f"inverted {len(specs)} plane(s)", file=sys.stderr)
    return EXIT_OK


def _report(row_id: str, result: ProbeResult) -> str:
    force = (
        ", ".join(format_number(c) for c in result.force_direction)
        if result.force_direction is not None
        else "none"
    )
    return "\n".join(
        [
            f"plane: {row_id}",
            f"  signed_distance: {format_number(result.signed_distance)}",
            f"  in_rectangle: {str(result.in_rectangle).lower()}",
            f"  penetration: {format_number(result.penetration)}",
            f"  contact: {str(result.contact).lower()}",
            f"  force_direction: {force}",
        ]
    )


def cmd_probe(args: argparse.Namespace) -> int:
    table = parse_plane_csv(_read(args.input))
    scene, simulator = build_vertex_tables(table, args.convention)
    planes = simulator if args.frame == "simulator" else scene
    rows = planes.rows
    if args.plane_id is not None:
        rows = [row for row in rows if row[0] == args.plane_id]
        if not rows:
            raise UsageError(f"--plane-id: no row with id {args.plane_id!r}")
    results = []
    for row_id, plane in rows:
        try:
            results.append((row_id, probe(args.body, plane)))
        except ContactPlaneError as exc:
            raise ContactPlaneError(f"row {row_id!r}: {exc}") from None
    print("\n".join(_report(row_id, r) for row_id, r in results))
    if args.output:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["id", "signed_distance", "in_rectangle", "penetration", "contact", "nx", "ny", "nz"]
        )
        for row_id, r in results:
            n = r.force_direction.to_tuple() if r.force_direction is not None else ("", "", "")
            writer.writerow(
                [
                    row_id,
                    format_number(r.signed_distance),
                    str(r.in_rectangle).lower(),
                    format_number(r.penetration),
                    str(r.contact).lower(),
                    *(format_number(c) if c != "" else "" for c in n),
                ]
            )
        _write_all({args.output: buf.getvalue().encode("utf-8")})
    return EXIT_OK


def cmd_emit_mesh(args: argparse.Namespace) -> int:
    table = parse_plane_csv(_read(args.input))
    scene, simulator = build_vertex_tables(table, args.convention)
    _write_all({args.output: emit_mesh(simulator if args.frame == "simulator" else scene)})
    return EXIT_OK


COMMANDS = {
    "convert": cmd_convert,
    "invert": cmd_invert,
    "probe": cmd_probe,
    "emit-mesh": cmd_emit_mesh,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"atbplanes {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContactPlaneError as exc:
        print(f"atbplanes {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
