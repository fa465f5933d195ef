import json
import warnings

import pytest

from pathpoly.exceptions import MalformedPolyhedronFileError, NonMinimalRepresentationWarning
from pathpoly.formats import (format_decomposition, format_ext, format_ine, format_trace, read_ext, read_ine,
                              to_json)
from pathpoly.oracle import Verdict, compare_hreps, minimal_hrep
from pathpoly.path_polytope import hrep_general, hrep_theorem_main, vrep
from pathpoly.polytope import canonicalize
from pathpoly.tfp import tfp_trace
from pathpoly.tree import star_decomposition, trees_up_to

GLUED_STARS_EXT = """\
* coordinates: {1,2} {1,3} {1,5} {5,6} {5,7}
* row 1: 2-3
* row 2: 2-6
* row 3: 2-7
* row 4: 3-6
* row 5: 3-7
* row 6: 6-7
V-representation
begin
6 6 rational
1 1 1 0 0 0
1 1 0 1 1 0
1 1 0 1 0 1
1 0 1 1 1 0
1 0 1 1 0 1
1 0 0 0 1 1
end
"""


def test_glued_stars_ext(glued_stars) -> None:
    assert format_ext(vrep(glued_stars)) == GLUED_STARS_EXT


def test_ine_layout(s3) -> None:
    text = format_ine(hrep_theorem_main(s3).sorted())
    lines = text.splitlines()
    assert "H-representation" in lines
    assert "linearity 1 1" in lines
    assert lines[lines.index("begin") + 1] == "4 4 rational"
    assert lines[lines.index("begin") + 2] == "-2 1 1 1"
    assert "* row 1: x{1,2} + x{1,3} + x{1,4} = 2  [leaf-sum]" in lines


def test_round_trip_through_files(glued_stars) -> None:
    V = read_ext(format_ext(vrep(glued_stars)), basis=glued_stars.edges)
    assert V == vrep(glued_stars)
    H = read_ine(format_ine(hrep_theorem_main(glued_stars)), basis=glued_stars.edges)
    assert compare_hreps(minimal_hrep(V).hrep, H).verdict is Verdict.EQUAL


@pytest.mark.parametrize("tree", list(trees_up_to(8)))
def test_every_tree_survives_ext_and_ine(tree) -> None:
    V = vrep(tree)
    assert read_ext(format_ext(V), basis=tree.edges) == V
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonMinimalRepresentationWarning)
        H = hrep_general(tree)
    assert canonicalize(read_ine(format_ine(H), basis=tree.edges)) == canonicalize(H)


def test_fractions_are_exact() -> None:
    V = read_ext("V-representation\nbegin\n1 3 rational\n1 1/2 -2/3\nend\n")
    assert V.basis == (1, 2)
    assert "1 1/2 -2/3" in format_ext(V)


@pytest.mark.parametrize("text, line", [
    ("begin\n1 2 rational\n1 0\nend\n", "line 1"),
    ("V-representation\nbegin\n1 2 rational\n1 x\nend\n", "line 4"),
    ("V-representation\nbegin\n2 2 rational\n1 0\nend\n", "line 5"),
    ("V-representation\nbegin\n1 2 rational\n1 0 0\nend\n", "line 4"),
])
def test_malformed_ext(text, line) -> None:
    with pytest.raises(MalformedPolyhedronFileError, match=line):
        read_ext(text)


def test_ext_rejects_rays() -> None:
    with pytest.raises(MalformedPolyhedronFileError):
        read_ext("V-representation\nbegin\n1 2 rational\n0 1\nend\n")


def test_json_labels_descriptors(glued_stars) -> None:
    data = json.loads(to_json(hrep_theorem_main(glued_stars)))
    assert data["basis"][2] == "{1,5}"
    assert data["equalities"][0]["descriptor"] == "leaf-sum"
    assert {c["descriptor"] for c in data["inequalities"]} >= {"G (1,5)", "G (5,1)"}
    vertices = json.loads(to_json(vrep(glued_stars)))["vertices"]
    assert vertices[0] == {"label": "2-3", "coords": ["1", "1", "0", "0", "0"]}


def test_outputs_are_deterministic(glued_stars) -> None:
    assert to_json(hrep_theorem_main(glued_stars)) == to_json(hrep_theorem_main(glued_stars))


def test_trace_table(two_stars) -> None:
    text = format_trace(tfp_trace(two_stars))
    assert "# factor 1: glued edge {1,4}" in text
    assert "2-4 | 6-8" in text
    assert text.rstrip().splitlines()[-1].endswith("->  0 0 0 1 1")


def test_decomposition_text(glued_stars) -> None:
    assert format_decomposition(star_decomposition(glued_stars)) == (
        "star 1: center 1, leaves 1#5 2 3\n"
        "star 2: center 5, leaves 5#1 6 7; glue {1,1#5} to {5,5#1} -> {1,5}\n")
