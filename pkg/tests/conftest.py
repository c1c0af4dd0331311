import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import zclasses as zc


def _build_catalog() -> dict:
    s3 = Path(__file__).parent.parent / "src" / "zclasses" / "data" / "s3.cayley"
    return {
        "trivial": zc.abelian([]),
        "C2": zc.cyclic(2),
        "C2xC2": zc.abelian([2, 2]),
        "C4": zc.cyclic(4),
        "S3": zc.read_cayley_table(s3, label="S3"),
        "D8": zc.dihedral(8),
        "Q8": zc.quaternion(8),
        "D16": zc.dihedral(16),
        "Q16": zc.quaternion(16),
        "Heis3": zc.heisenberg(3),
        "M27": zc.modular_p3(3),
        "Heis5": zc.heisenberg(5),
        "ES(2,2,+)": zc.extraspecial(2, 2, "plus"),
        "ES(2,2,-)": zc.extraspecial(2, 2, "minus"),
        "ES(3,2,+)": zc.extraspecial(3, 2, "plus"),
        "Heis3xC3": zc.direct_product(zc.heisenberg(3), zc.abelian([3])),
        "D8xC2": zc.direct_product(zc.dihedral(8), zc.abelian([2])),
        "Heis3xC9": zc.direct_product(zc.heisenberg(3), zc.abelian([9])),
    }


@pytest.fixture(scope="session")
def catalog() -> dict:
    """All groups of the builtin catalog, built once per test session."""
    return _build_catalog()


# labels of the extraspecial members of the catalog with their (count, bound)
EXTRASPECIAL_COUNTS = {
    "D8": 4,
    "Q8": 4,
    "Heis3": 5,
    "M27": 5,
    "Heis5": 7,
    "ES(2,2,+)": 16,
    "ES(2,2,-)": 16,
    "ES(3,2,+)": 41,
}

# every catalog z-class count, confirmed by the pairwise oracle
ZCLASS_COUNTS = {
    "trivial": 1, "C2": 1, "C2xC2": 1, "C4": 1, "S3": 3,
    "D8": 4, "Q8": 4, "D16": 4, "Q16": 4,
    "Heis3": 5, "M27": 5, "Heis5": 7,
    "ES(2,2,+)": 16, "ES(2,2,-)": 16, "ES(3,2,+)": 41,
    "Heis3xC3": 5, "D8xC2": 4, "Heis3xC9": 5,
}

CTV = {
    "trivial": (1,), "C2": (1,), "C2xC2": (1,), "C4": (1,), "S3": (3, 2, 1),
    "D8": (2, 1), "Q8": (2, 1), "D16": (4, 2, 1), "Q16": (4, 2, 1),
    "Heis3": (3, 1), "M27": (3, 1), "Heis5": (5, 1),
    "ES(2,2,+)": (2, 1), "ES(2,2,-)": (2, 1), "ES(3,2,+)": (3, 1),
    "Heis3xC3": (3, 1), "D8xC2": (2, 1), "Heis3xC9": (3, 1),
}
