import itertools

import pytest

from sphsys import families, ops, tables
from sphsys.dynkin import parse_diagram

# involution rows: (label, params, catalog name of the selfnormalising
# system), at the smallest admissible parameters and one larger choice
SYMMETRIC_CASES = [
    ("A I", {"n": 1}, "ao(1)"),
    ("A I", {"n": 4}, "ao(4)"),
    ("A II", {"n": 3}, "ac(3)"),
    ("A II", {"n": 5}, "ac(5)"),
    ("A III (q >= 2)", {"p": 1, "q": 2}, "aa(1+2+1)"),
    ("A III (q >= 2)", {"p": 2, "q": 3}, "aa(2+3+2)"),
    ("A III (q = 1)", {"p": 1}, "aa'(1+1+1)"),
    ("A III (q = 1)", {"p": 2}, "aa'(2+1+2)"),
    ("A IV (n >= 2)", {"n": 2}, "a(2)"),
    ("A IV (n >= 2)", {"n": 4}, "a(4)"),
    # rank one: the gl(1) involution coincides with the so(2) one
    ("A IV (n = 1)", {}, "ao(1)"),
    ("B I", {"p": 1, "q": 1}, "bo(1+1)"),
    ("B I", {"p": 2, "q": 2}, "bo(2+2)"),
    ("B I", {"p": 3, "q": 1}, "bo(3+1)"),
    ("B II", {"n": 2}, "b'(2)"),
    ("B II", {"n": 4}, "b'(4)"),
    ("C I", {"n": 3}, "co(3)"),
    ("C I", {"n": 4}, "co(4)"),
    ("C II (q >= 3)", {"p": 0, "q": 3}, "c(3)"),
    ("C II (q >= 3)", {"p": 0, "q": 4}, "c(4)"),
    ("C II (q >= 3)", {"p": 2, "q": 3}, "cc(2+3)"),
    ("C II (q >= 3)", {"p": 2, "q": 4}, "cc(2+4)"),
    ("C II (q = 2)", {"p": 2}, "cc'(2+2)"),
    ("C II (q = 2)", {"p": 4}, "cc'(4+2)"),
    ("D I (q >= 2)", {"p": 1, "q": 3}, "do(1+3)"),
    ("D I (q >= 2)", {"p": 2, "q": 2}, "do(2+2)"),
    ("D I (q >= 2)", {"p": 2, "q": 3}, "do(2+3)"),
    ("D I (q = 0)", {"p": 4}, "do(4)"),
    ("D I (q = 0)", {"p": 5}, "do(5)"),
    ("D II", {"n": 4}, "d(4)"),
    ("D II", {"n": 5}, "d(5)"),
    # at rank 4 the gl(4) involution lands on a fork swap of so(1)+so(7)
    ("D III (n even)", {"n": 4}, "do(1+3)"),
    ("D III (n even)", {"n": 6}, "dc'(6)"),
    ("D III (n odd)", {"n": 5}, "dc(5)"),
    ("D III (n odd)", {"n": 7}, "dc(7)"),
    ("E I", {}, "eo(6)"),
    ("E II", {}, "ea(6)"),
    ("E III", {}, "ed(6)"),
    ("E IV", {}, "ef(6)"),
    ("E V", {}, "eo(7)"),
    ("E VI", {}, "ec(7)"),
    ("E VII", {}, "ef(7)"),
    ("E VIII", {}, "eo(8)"),
    ("E IX", {}, "ef(8)"),
    ("F I", {}, "fo(4)"),
    ("F II", {}, "f(4)"),
    ("G", {}, "go(2)"),
]

HALVED_CASES = [
    ("B II", {"n": 2}, "b(2)"),
    ("B II", {"n": 4}, "b(4)"),
    ("C II (q = 2)", {"p": 2}, "cc(2+2)"),
    ("C II (q = 2)", {"p": 4}, "cc(4+2)"),
]


def _same_type(a, b):
    if len(a) != len(b):
        return False
    idx = range(len(a))
    return any(all(a[p[i]][p[j]] == b[i][j] for i in idx for j in idx)
               for p in itertools.permutations(idx))


class TestSymmetricTable:
    def test_row_count_and_labels(self):
        rows = tables.symmetric_table()
        assert len(rows) == 28
        labels = [r.label for r in rows]
        assert len(set(labels)) == 28
        assert labels[0] == "A I" and labels[-1] == "G"

    def test_g_row_basis(self):
        _, inst = tables.symmetric_instance("G")
        assert set(inst.basis) == {(2, 0), (0, 2)}

    def test_a2_minimal_basis(self):
        _, inst = tables.symmetric_instance("A II", n=3)
        assert inst.basis == ((1, 2, 1),)

    def test_e4_joint_support(self):
        _, inst = tables.symmetric_instance("E IV")
        assert len(inst.basis) == 2
        covered = set()
        for g in inst.basis:
            covered |= {i for i, c in enumerate(g) if c}
        assert covered == set(range(6))

    @pytest.mark.parametrize("label,params,_name", SYMMETRIC_CASES)
    def test_restricted_type(self, label, params, _name):
        _, inst = tables.symmetric_instance(label, **params)
        got = tables.restricted_cartan(inst.diagram, inst.basis)
        assert _same_type(got, tables.cartan_of_type(*inst.restricted))

    def test_printed_order_is_conventional_where_possible(self):
        # all rows except three exceptional ones list the basis in the
        # node order of the restricted type itself
        off = []
        for label, params, _ in SYMMETRIC_CASES:
            _, inst = tables.symmetric_instance(label, **params)
            got = tables.restricted_cartan(inst.diagram, inst.basis)
            if got != tables.cartan_of_type(*inst.restricted):
                off.append(label)
        assert set(off) == {"E II", "E III", "E IX"}

    def test_bad_parameters_rejected(self):
        with pytest.raises(ValueError):
            tables.symmetric_instance("A II", n=4)
        with pytest.raises(ValueError):
            tables.symmetric_instance("B I", p=0, q=2)
        with pytest.raises(ValueError):
            tables.symmetric_instance("C II (q = 2)", p=3)
        with pytest.raises(ValueError):
            tables.symmetric_instance("nonsense")

    def test_subcase_resolution_by_parameters(self):
        row, _ = tables.symmetric_instance("A III", p=1, q=1)
        assert row.label == "A III (q = 1)"
        row, _ = tables.symmetric_instance("A III", p=1, q=4)
        assert row.label == "A III (q >= 2)"
        row, _ = tables.symmetric_instance("D I", p=4, q=0)
        assert row.label == "D I (q = 0)"


class TestSymmetricSystem:
    @pytest.mark.parametrize("label,params,name", SYMMETRIC_CASES)
    def test_validates_and_classifies(self, label, params, name):
        sys = tables.symmetric_system(label, **params)
        assert sys.validate().ok
        assert families.classify(sys) == name

    @pytest.mark.parametrize("label,params,name", HALVED_CASES)
    def test_fixed_point_variants(self, label, params, name):
        sys = tables.symmetric_system(label, selfnormalising=False, **params)
        assert sys.validate().ok
        assert families.classify(sys) == name

    def test_single_variant_rows_refuse_halving(self):
        with pytest.raises(ValueError):
            tables.symmetric_system("A I", selfnormalising=False, n=3)
        with pytest.raises(ValueError):
            tables.symmetric_system("C II (q >= 3)", selfnormalising=False,
                                    p=0, q=3)

    def test_parabolic_prefers_larger_set(self):
        # the lone restricted root of sp(2)+sp(4) in sp(6) also fits a
        # smaller parabolic; the symmetric subgroup takes the larger one
        sys = tables.symmetric_system("C II", p=0, q=3)
        assert sorted(sys.sp) == [0, 2]

    def test_full_sweep_is_fast(self):
        for label, params, _ in SYMMETRIC_CASES:
            assert tables.symmetric_system(label, **params).validate().ok


class TestRestrictedCartan:
    def test_diagonal_is_two(self):
        d = parse_diagram("B3")
        mat = tables.restricted_cartan(d, [(2, 0, 0), (0, 2, 2)])
        assert all(mat[i][i] == 2 for i in range(2))

    def test_non_integral_pairing_rejected(self):
        d = parse_diagram("A2")
        with pytest.raises(ValueError):
            tables.restricted_cartan(d, [(2, 0), (0, 1)])

    def test_bc1_and_c2_shapes(self):
        assert tables.cartan_of_type("BC", 1) == ((2,),)
        assert tables.cartan_of_type("C", 2) == ((2, -2), (-1, 2))
        assert tables.cartan_of_type("BC", 3) == tables.cartan_of_type("B", 3)


class TestGrading:
    def test_g2_anchor(self):
        dims = tables.grading_dims("G2", (1, 0))
        assert dims == {0: 4, 1: 2, -1: 2, 2: 1, -2: 1, 3: 2, -3: 2}
        assert sum(dims.values()) == 14

    def test_b3_anchor(self):
        dims = tables.grading_dims("B3", (1, 0, 1))
        assert dims == {0: 5, 1: 4, -1: 4, 2: 2, -2: 2, 3: 2, -3: 2}

    def test_zero_characteristic(self):
        for spec, total in [("A3", 15), ("G2", 14), ("B3", 21)]:
            d = parse_diagram(spec)
            assert tables.grading_dims(d, (0,) * d.n_nodes) == {0: total}
            assert tables.orbit_dims(d, (0,) * d.n_nodes) == (total, 0, 0)

    def test_g2_heights(self):
        assert tables.height("G2", (1, 0)) == 3
        assert tables.height("G2", (0, 1)) == 2
        assert tables.height("G2", (0, 2)) == 4

    def test_orbit_dims_anchors(self):
        assert tables.orbit_dims("G2", (1, 0)) == (6, 3, 8)
        assert tables.orbit_dims("B3", (1, 0, 1)) == (9, 6, 12)

    def test_entry_range_enforced(self):
        with pytest.raises(ValueError):
            tables.grading_dims("A2", (3, 0))
        with pytest.raises(ValueError):
            tables.grading_dims("A2", (1, -1))
        with pytest.raises(ValueError):
            tables.grading_dims("A2", (1, 0, 0))

    def test_conservation(self):
        for spec in ["A4", "B4", "C4", "D4", "F4", "E6"]:
            d = parse_diagram(spec)
            total = d.n_nodes + 2 * len(d.positive_roots)
            for char in itertools.islice(
                    itertools.product((0, 1, 2), repeat=d.n_nodes), 40):
                assert sum(tables.grading_dims(d, char).values()) == total

    def test_spherical_filter_matches_height_bound(self):
        for spec in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1,A1"]:
            d = parse_diagram(spec)
            for char in itertools.product((0, 1, 2), repeat=d.n_nodes):
                assert (tables.is_spherical_orbit(d, char)
                        == (tables.height(d, char) <= 3))


HEIGHT3_SAMPLES = [
    ("B(2r+1)", {"r": 1}), ("B(2r+1)", {"r": 2}),
    ("B(2r+s+1)", {"r": 1, "s": 1}), ("B(2r+s+1)", {"r": 2, "s": 2}),
    ("D(2r+2)", {"r": 1}), ("D(2r+2)", {"r": 2}),
    ("D(2r+s+2)", {"r": 1, "s": 1}), ("D(2r+s+2)", {"r": 1, "s": 3}),
    ("E6 (000100)", {}), ("E7 (0010000)", {}), ("E7 (0100001)", {}),
    ("E8 (00000010)", {}), ("E8 (01000000)", {}),
    ("F4 (0100)", {}), ("G2 (10)", {}),
]


class TestHeight3Table:
    def test_row_count(self):
        assert len(tables.height3_table()) == 11

    def _row(self, label):
        return next(r for r in tables.height3_table() if r.label == label)

    @pytest.mark.parametrize("label,params", HEIGHT3_SAMPLES)
    def test_height_is_three(self, label, params):
        inst = self._row(label).realise(**params)
        assert tables.height(inst.diagram, inst.characteristic) == 3
        assert tables.is_spherical_orbit(inst.diagram, inst.characteristic)

    @pytest.mark.parametrize("label,params", HEIGHT3_SAMPLES)
    def test_grading_sums_to_algebra_dim(self, label, params):
        inst = self._row(label).realise(**params)
        d = inst.diagram
        dims = tables.grading_dims(d, inst.characteristic)
        assert sum(dims.values()) == d.n_nodes + 2 * len(d.positive_roots)

    @pytest.mark.parametrize("label,params", HEIGHT3_SAMPLES)
    def test_partitions_fill_the_natural_module(self, label, params):
        inst = self._row(label).realise(**params)
        if inst.partition is None:
            return
        fam, rank = inst.diagram.components[0]
        expected = 2 * rank + 1 if fam == "B" else 2 * rank
        assert sum(inst.partition) == expected
        assert sorted(inst.partition, reverse=True) == list(inst.partition)

    def test_b_minimal_characteristic(self):
        inst = self._row("B(2r+1)").realise(r=1)
        assert inst.characteristic == (1, 0, 1)
        assert inst.partition == (3, 2, 2)

    def test_constraints_enforced(self):
        with pytest.raises(ValueError):
            self._row("B(2r+1)").realise(r=0)
        with pytest.raises(ValueError):
            self._row("D(2r+s+2)").realise(r=1, s=0)


# model rows keyed by (group, parity): rank -> catalog name of the system
MODEL_RANKS = {
    ("A", "even"): {4: "ac*(4)", 6: "ac*(6)"},
    ("A", "odd"): {3: "ac*(3)", 5: "ac*(5)"},
    ("B", "even"): {4: "bc*(4)", 6: "bc*(6)"},
    ("B", "odd"): {3: "bc*(3)", 5: "bc*(5)"},
    ("C", "even"): {4: "ac*(3)+c*(2)", 6: "ac*(5)+c*(2)"},
    ("C", "odd"): {5: "ac*(4)+c*(2)", 7: "ac*(6)+c*(2)"},
    ("D", "even"): {4: "dc*(4)", 6: "dc*(6)"},
    ("D", "odd"): {5: "dc*(5)", 7: "dc*(7)"},
    ("E6", ""): {6: "ec*(6)"}, ("E7", ""): {7: "ec*(7)"},
    ("E8", ""): {8: "ec*(8)"}, ("F4", ""): {4: "fc*(4)"},
    ("G2", ""): {2: "g*(2)"},
    ("B adjoint", ""): {2: "bc'(2)", 4: "bc'(4)"},
}


class TestModelTable:
    def test_row_count(self):
        assert len(tables.model_table()) == 14

    def test_all_rows_covered(self):
        assert {(r.group, r.parity) for r in tables.model_table()} \
            == set(MODEL_RANKS)

    def test_systems_instantiate_and_classify(self):
        for row in tables.model_table():
            for n, name in MODEL_RANKS[(row.group, row.parity)].items():
                sys = row.instantiate(n)
                assert sys.validate().ok
                assert families.classify(sys) == name

    def test_simply_connected_roots_are_adjacent_sums(self):
        for row in tables.model_table():
            if row.group == "B adjoint":
                continue
            n = min(MODEL_RANKS[(row.group, row.parity)])
            sys = row.instantiate(n)
            for g in sys.sigma:
                sup = [i for i, c in enumerate(g) if c]
                assert len(sup) == 2
                assert all(g[i] == 1 for i in sup)
                assert sys.diagram.adjacent(*sup)

    def test_nilpotent_rows_have_height_three_characteristics(self):
        for row in tables.model_table():
            if row.characteristic is None:
                continue
            for n in MODEL_RANKS[(row.group, row.parity)]:
                sys = row.instantiate(n)
                char = row.characteristic(n)
                assert tables.height(sys.diagram, char) == 3

    def test_nilpotent_rows_match_height3_table(self):
        by_label = {r.label: r for r in tables.height3_table()}
        b = next(r for r in tables.model_table()
                 if (r.group, r.parity) == ("B", "odd"))
        assert b.characteristic(5) \
            == by_label["B(2r+1)"].realise(r=2).characteristic
        d = next(r for r in tables.model_table()
                 if (r.group, r.parity) == ("D", "even"))
        assert d.characteristic(6) \
            == by_label["D(2r+2)"].realise(r=2).characteristic
        g = next(r for r in tables.model_table() if r.group == "G2")
        assert g.characteristic(2) \
            == by_label["G2 (10)"].realise().characteristic

    def test_affine_isogeny_cases(self):
        # the even symplectic-subgroup row and the adjoint-B row are the
        # affine members of the list
        for row in tables.model_table():
            if row.group == "A" and row.parity == "even":
                assert ops.is_affine_feasible(row.instantiate(4))
            if row.group == "B adjoint":
                assert ops.is_affine_feasible(row.instantiate(3))
