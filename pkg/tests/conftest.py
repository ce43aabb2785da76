from pathlib import Path

import pytest

import tdabm

DATA_DIR = Path(__file__).parent / "data"
FIXTURE_CSV = DATA_DIR / "uniform2d_500.csv"


@pytest.fixture(scope="session")
def demo_csv() -> Path:
    """The committed 500-point uniform square dataset."""
    return FIXTURE_CSV


@pytest.fixture(scope="session")
def demo_cloud():
    return tdabm.load_table(FIXTURE_CSV, ["X1", "X2"], "Y")


@pytest.fixture(scope="session")
def demo_cover(demo_cloud):
    pc, _ = demo_cloud
    return tdabm.build_cover(pc, tdabm.CoverConfig(epsilon=0.4))


@pytest.fixture(scope="session")
def demo_graph(demo_cloud, demo_cover):
    _, y = demo_cloud
    return tdabm.color_graph(tdabm.build_graph(demo_cover), demo_cover, y)
