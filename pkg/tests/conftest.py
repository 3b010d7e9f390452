from pathlib import Path

import pytest

from atbplanes import PlaneSpec, Vec3

DATA = Path(__file__).parent / "data"

# Input rows of the reference spreadsheet: center, L, H, pitch (yaw = roll = 0).
REFERENCE_SPECS = {
    "1": PlaneSpec(Vec3(8.20, 0.00, 1.10), 1.00, 5.48, pitch=86.0),
    "2": PlaneSpec(Vec3(7.60, 0.00, 1.90), 1.42, 5.48, pitch=31.0),
    "3": PlaneSpec(Vec3(5.10, 0.00, 2.50), 3.91, 5.48, pitch=10.0),
    "4": PlaneSpec(Vec3(2.00, 0.00, 3.60), 3.00, 5.48, pitch=33.0),
    "5": PlaneSpec(Vec3(-1.20, 0.00, 4.00), 3.91, 5.48, pitch=-11.0),
}


def read_reference_vertices(name):
    """{id: [x1, y1, z1, ..., z3]} from one of the printed reference tables."""
    lines = (DATA / name).read_text().splitlines()[1:]
    return {cells[0]: [float(c) for c in cells[1:]] for cells in (l.split(",") for l in lines)}


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def reference_specs():
    return dict(REFERENCE_SPECS)


@pytest.fixture
def reference_scene():
    return read_reference_vertices("reference_scene.csv")


@pytest.fixture
def reference_sim():
    return read_reference_vertices("reference_sim.csv")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
