import pytest

from sphsys.dynkin import Diagram, DiagramError, parse_diagram, support


def test_parse_and_canonicalize():
    assert parse_diagram("B3").components == (("B", 3),)
    assert parse_diagram("f4,F4").components == (("F", 4), ("F", 4))
    assert Diagram([("B", 1)]).components == (("A", 1),)
    assert Diagram([("C", 2)]).components == (("B", 2),)
    assert Diagram([("C", 1)]).components == (("A", 1),)
    assert Diagram([("D", 2)]).components == (("A", 1), ("A", 1))
    assert Diagram([("D", 3)]).components == (("A", 3),)
    # sorting makes order irrelevant
    assert Diagram([("C", 3), ("A", 1)]) == parse_diagram("A1,C3")


@pytest.mark.parametrize("bad", ["E5", "E9", "F5", "G3", "H2", "A0"])
def test_rejects_non_diagrams(bad):
    with pytest.raises(DiagramError):
        parse_diagram(bad)


def test_cartan_conventions():
    b3 = parse_diagram("B3")
    # alpha_3 short: its coroot pairs -2 with alpha_2
    assert b3.cartan[2][1] == -2 and b3.cartan[1][2] == -1
    c3 = parse_diagram("C3")
    assert c3.cartan[1][2] == -2 and c3.cartan[2][1] == -1
    g2 = parse_diagram("G2")
    assert g2.cartan == ((2, -3), (-1, 2))
    f4 = parse_diagram("F4")
    assert f4.cartan[2][1] == -2 and f4.cartan[1][2] == -1
    assert f4.cartan[0][1] == f4.cartan[1][0] == -1
    assert f4.cartan[2][3] == f4.cartan[3][2] == -1
    b2 = parse_diagram("B2")
    assert b2.cartan[1][0] == -2 and b2.cartan[0][1] == -1


def test_e_series_shape():
    e6 = parse_diagram("E6")
    # branch node is alpha_4, attached to 2, 3 and 5
    adj4 = [j for j in range(6) if e6.adjacent(3, j)]
    assert adj4 == [1, 2, 4]
    assert e6.adjacent(0, 2) and not e6.adjacent(0, 1)
    e8 = parse_diagram("E8")
    assert e8.adjacent(6, 7)


def test_node_addressing():
    d = parse_diagram("A1,C3")
    assert d.nodes == ((0, 1), (1, 1), (1, 2), (1, 3))
    assert d.node_index("1.2") == 2
    assert d.node_id(0) == "0.1"
    assert list(d.component_nodes(1)) == [1, 2, 3]
    with pytest.raises(DiagramError):
        d.node_index("2.1")


# closure must reproduce the classical positive root counts
@pytest.mark.parametrize("spec,count", [
    ("A1", 1), ("A4", 10), ("B2", 4), ("B4", 16), ("C3", 9), ("C5", 25),
    ("D4", 12), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120),
    ("F4", 24), ("G2", 6), ("A2,B2", 7),
])
def test_positive_root_counts(spec, count):
    assert len(parse_diagram(spec).positive_roots) == count


def test_g2_positive_roots_exact():
    g2 = parse_diagram("G2")
    assert set(g2.positive_roots) == {
        (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


def test_pairing_weight():
    g2 = parse_diagram("G2")
    gamma = (2, 1)
    assert g2.pairing_weight(0, gamma) == 1
    assert g2.pairing_weight(1, gamma) == 0
    f4 = parse_diagram("F4")
    gamma = (1, 2, 3, 2)
    assert [f4.pairing_weight(i, gamma) for i in range(4)] == [0, 0, 0, 1]


def test_dim_flag():
    b3 = parse_diagram("B3")
    # roots using alpha_1: 2n-1 = 5
    assert b3.dim_flag({1, 2}) == 5
    a4 = parse_diagram("A4")
    assert a4.dim_flag(set()) == 10
    assert a4.dim_flag({0, 1, 2, 3}) == 0


def test_automorphism_counts():
    assert len(parse_diagram("A1").automorphisms) == 1
    assert len(parse_diagram("A3").automorphisms) == 2
    assert len(parse_diagram("B3").automorphisms) == 1
    assert len(parse_diagram("D4").automorphisms) == 6
    assert len(parse_diagram("D5").automorphisms) == 2
    assert len(parse_diagram("E6").automorphisms) == 2
    assert len(parse_diagram("E7").automorphisms) == 1
    assert len(parse_diagram("A2,A2").automorphisms) == 8
    assert len(parse_diagram("A1,A1").automorphisms) == 2


def test_automorphisms_preserve_cartan():
    for spec in ("A3", "D4", "E6", "A2,A2", "A1,C3"):
        d = parse_diagram(spec)
        n = d.n_nodes
        for perm in d.automorphisms:
            for i in range(n):
                for j in range(n):
                    assert d.cartan[perm[i]][perm[j]] == d.cartan[i][j]


def test_permute_weight():
    a3 = parse_diagram("A3")
    flip = [p for p in a3.automorphisms if p != (0, 1, 2)][0]
    assert a3.permute_weight(flip, (1, 0, 0)) == (0, 0, 1)
    assert a3.permute_weight(flip, (1, 2, 1)) == (1, 2, 1)


def test_json_roundtrip():
    d = parse_diagram("A1,C3")
    assert Diagram.from_json(d.to_json()) == d
    assert d.to_json() == {"components": [
        {"family": "A", "rank": 1}, {"family": "C", "rank": 3}]}


def test_support():
    assert support((0, 2, 1, 0)) == {1, 2}
