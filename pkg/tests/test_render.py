from pathlib import Path

import pytest

from sphsys import families, render
from sphsys.dynkin import parse_diagram
from sphsys.system import SphericalSystem

GOLDEN = Path(__file__).parent / "golden"

# the rank-one rows on their own support, smallest admissible rank
RANK1 = [
    ("a2",   "A2",    (),        (1, 1)),
    ("ap1",  "A1",    (),        (2,)),
    ("aa11", "A1,A1", (),        (1, 1)),
    ("d3",   "A3",    (0, 2),    (1, 2, 1)),
    ("b2",   "B2",    (1,),      (1, 1)),
    ("bp2",  "B2",    (1,),      (2, 2)),
    ("bs2",  "B2",    (),        (1, 1)),
    ("bss3", "B3",    (0, 1),    (1, 2, 3)),
    ("c3",   "C3",    (0, 2),    (1, 2, 1)),
    ("cs3",  "C3",    (2,),      (1, 2, 1)),
    ("d4",   "D4",    (1, 2, 3), (2, 2, 1, 1)),
    ("f4",   "F4",    (0, 1, 2), (1, 2, 3, 2)),
    ("g2",   "G2",    (1,),      (2, 1)),
    ("gp2",  "G2",    (1,),      (4, 2)),
    ("gs2",  "G2",    (),        (1, 1)),
]

CATALOG_PICKS = [
    ("go2",       "go(2)",         {}),
    ("fd4",       "fd(4)",         {}),
    ("ao4",       "ao(n)",         {"n": 4}),
    ("ac5",       "ac(n)",         {"n": 5}),
    ("aa232",     "aa(p+q+p)",     {"p": 2, "q": 3}),
    ("ccp22",     "cc'(p+2)",      {"p": 2}),
    ("dc5",       "dc(n)",         {"n": 5}),
    ("eo6",       "eo(n)",         {"n": 6}),
    ("aa11_cs3",  "aa(1,1)+c*(n)", {"n": 3}),
    ("bs4_bss3",  "b*(4)+b**(3)",  {}),
]


def _rank1_system(spec, sp, gamma):
    return SphericalSystem(parse_diagram(spec), sp=sp, sigma=(gamma,))


def _all_fixtures():
    for slug, spec, sp, g in RANK1:
        yield slug, _rank1_system(spec, sp, g)
    for slug, name, params in CATALOG_PICKS:
        yield slug, families.instantiate(name, **params)


FIXTURES = list(_all_fixtures())


class TestGolden:
    @pytest.mark.parametrize("slug,sys", FIXTURES, ids=[s for s, _ in FIXTURES])
    def test_text(self, slug, sys):
        assert render.render_text(sys) == (GOLDEN / f"{slug}.txt").read_text()

    @pytest.mark.parametrize("slug,sys", FIXTURES, ids=[s for s, _ in FIXTURES])
    def test_svg(self, slug, sys):
        assert render.render_svg(sys) == (GOLDEN / f"{slug}.svg").read_text()

    def test_nothing_extra_in_golden_dir(self):
        assert len(list(GOLDEN.glob("*"))) == 2 * len(FIXTURES)


class TestScene:
    @pytest.mark.parametrize("slug,sys", FIXTURES, ids=[s for s, _ in FIXTURES])
    def test_circles_cover_colour_incidences(self, slug, sys):
        scene = render.build_scene(sys)
        circled = {c.node for c in scene.circles}
        assert circled == set(range(sys.diagram.n_nodes)) - sys.sp
        for c in scene.circles:
            assert c.node in sys.colours[c.colour].nodes

    @pytest.mark.parametrize("slug,sys", FIXTURES, ids=[s for s, _ in FIXTURES])
    def test_connectors_join_one_colour(self, slug, sys):
        scene = render.build_scene(sys)
        for conn in scene.connectors:
            assert set(conn.nodes) == set(sys.colours[conn.colour].nodes)
            assert len(conn.nodes) > 1

    @pytest.mark.parametrize("slug,sys", FIXTURES, ids=[s for s, _ in FIXTURES])
    def test_renderers_agree_on_marker_counts(self, slug, sys):
        scene = render.build_scene(sys)
        svg = render.render_svg(sys)
        assert svg.count('id="circ-') == len(scene.circles)
        assert svg.count('id="node-') == sys.diagram.n_nodes
        joined = (svg.count('id="conn-'))
        assert joined == len(scene.connectors)
        text = render.render_text(sys)
        markers = sum(line.count("o") + line.count("u")
                      + line.count("O") + line.count("U")
                      for line in text.splitlines()
                      if not line.startswith("  ") or ":" not in line)
        assert markers >= len(scene.circles)

    def test_deterministic(self):
        sys = families.instantiate("aa(p+q+p)", p=2, q=3)
        assert render.render_text(sys) == render.render_text(sys)
        assert render.render_svg(sys) == render.render_svg(sys)

    def test_one_legend_line_per_root(self):
        for slug, sys in FIXTURES:
            text = render.render_text(sys)
            legend = [l for l in text.splitlines() if ": " in l and "[" in l]
            assert len(legend) == len(sys.sigma), slug


class TestExamples:
    def test_empty_system_is_bare_diagram(self):
        for spec in ["A3", "B2", "G2", "F4", "D4", "E6", "A1,A1"]:
            d = parse_diagram(spec)
            bare = render.render_text(SphericalSystem(d, sp=range(d.n_nodes)))
            assert bare == render.render_diagram_text(d)
            assert "o" not in bare and "u" not in bare
            assert bare.splitlines()[0] == spec

    def test_doubled_simple_root_marker(self):
        sys = _rank1_system("A1", (), (2,))
        text = render.render_text(sys)
        assert "u" in text and "2" in text
        assert "a'(1)" in text

    def test_go2_has_two_doubled_markers(self):
        text = render.render_text(families.instantiate("go(2)"))
        marker_row = [l for l in text.splitlines() if l.strip("u ") == ""]
        assert any(l.count("u") == 2 for l in marker_row)
        assert text.count("a'(1)") == 2

    def test_aa11_svg_topology(self):
        svg = render.render_svg(families.instantiate("aa(p,p)", p=1))
        assert svg.count('id="circ-') == 2
        assert svg.count('id="conn-') == 1
        assert 'fill="#bbb"' not in svg

    def test_svg_is_wellformed_enough(self):
        import xml.dom.minidom
        for slug, sys in FIXTURES:
            doc = xml.dom.minidom.parseString(render.render_svg(sys))
            assert doc.documentElement.tagName == "svg", slug
