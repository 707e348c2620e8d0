import json

import pytest

# The plane with the coordinate-triangle divisor 1*H1 + 1*H2 - 5*Hinf at
# d = 1, carrying the blow-up center H1 * H2 (a point of codimension 2
# missing Hinf).  chi_d is 0, the exceptional multiplicity is 3, and both
# induced-pair coefficients are 1.
TRIANGLE_TABLE = {
    "d": 1,
    "components": [
        {"id": "H1", "mult": 1, "contains_center": True},
        {"id": "H2", "mult": 1, "contains_center": True},
        {"id": "Hinf", "mult": -5, "contains_center": False},
    ],
    "center": {"codim": 2},
    "strata": [
        {"subset": [], "chi": 3, "nonempty": True, "chi_meet_center": 1},
        {"subset": ["H1"], "chi": 2, "nonempty": True, "chi_meet_center": 1},
        {"subset": ["H2"], "chi": 2, "nonempty": True, "chi_meet_center": 1},
        {"subset": ["Hinf"], "chi": 2, "nonempty": True, "chi_meet_center": None},
        {"subset": ["H1", "H2"], "chi": 1, "nonempty": True, "chi_meet_center": 1},
        {"subset": ["H1", "Hinf"], "chi": 1, "nonempty": True, "chi_meet_center": None},
        {"subset": ["H2", "Hinf"], "chi": 1, "nonempty": True, "chi_meet_center": None},
    ],
}

EMPTY_DIVISOR_TABLE = {
    "d": 2,
    "components": [],
    "center": None,
    "strata": [{"subset": [], "chi": 7, "nonempty": True, "chi_meet_center": None}],
}


@pytest.fixture
def triangle_table_path(tmp_path):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps(TRIANGLE_TABLE))
    return str(path)


@pytest.fixture
def empty_divisor_path(tmp_path):
    path = tmp_path / "empty_divisor.json"
    path.write_text(json.dumps(EMPTY_DIVISOR_TABLE))
    return str(path)
