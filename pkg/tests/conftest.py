import pytest

from zzqh import compute_basis, presentation_borel, presentation_cover
from zzqh.extdual import build_dual_from_ext, ext_table

GRID = ((1, 2), (1, 3), (2, 2), (2, 3), (3, 2))


@pytest.fixture(scope="session")
def covers():
    return {p: compute_basis(presentation_cover(*p)) for p in GRID}


@pytest.fixture(scope="session")
def borels():
    return {p: compute_basis(presentation_borel(*p)) for p in GRID}


@pytest.fixture(scope="session")
def tables(covers):
    return {p: ext_table(covers[p]) for p in GRID}


@pytest.fixture(scope="session")
def built_duals(covers, tables):
    return {p: build_dual_from_ext(covers[p], tables[p]) for p in GRID}
