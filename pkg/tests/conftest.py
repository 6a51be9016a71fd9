import pytest

from msset.constructions import pointed_point, sphere, standard
from msset.generators import (
    cocycle_nerve,
    cyclic_group,
    idempotent_monoid,
    nerve_of_monoid,
    symmetric_group,
    trivial_monoid,
)

MONOIDS = {
    "Z2": cyclic_group(2),
    "Z3": cyclic_group(3),
    "S3": symmetric_group(3),
    "M2": idempotent_monoid(),
}

# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def sample_complexes():
    """A small zoo used by the property tests."""
    return {
        "D0": standard("delta:0"),
        "D2": standard("delta:2"),
        "D3eq": standard("delta3eq"),
        "horn12": standard("horn:1:2"),
        "horn03": standard("horn:0:3"),
        "S1": sphere(1).complex,
        "S2": sphere(2).complex,
        "nZ2": nerve_of_monoid(cyclic_group(2), 3).complex,
        "nM2": nerve_of_monoid(idempotent_monoid(), 3).complex,
        "cZ2": cocycle_nerve(cyclic_group(2), 4).complex,
        "nTriv": nerve_of_monoid(trivial_monoid(), 3).complex,
    }


@pytest.fixture(scope="session")
def zoo():
    return sample_complexes()


@pytest.fixture(scope="session")
def monoids():
    return MONOIDS


@pytest.fixture
def point():
    return pointed_point()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
