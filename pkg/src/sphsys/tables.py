"""Reference tables: involutions, graded nilpotent orbits, model spaces.

Three bodies of fixture data with their derived computations:

* restricted root bases attached to the involutions of the simple groups,
  turned into validated spherical systems by ``symmetric_system``;
* integer gradings of a simple Lie algebra cut out by a characteristic
  vector, with the height filter for spherical orbits and the table of
  height-3 cases;
* the model homogeneous spaces and the catalog families naming them.

Row data uses 1-based node positions (converted to weight tuples on the
way out).  Subalgebra and module descriptions are opaque strings kept
for documentation; nothing interprets them.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Callable, NamedTuple

from .dynkin import Diagram, parse_diagram
from . import rankone
from .system import SphericalSystem, support


def _w(n, coeffs) -> tuple:
    v = [0] * n
    for pos, c in coeffs.items():
        v[pos - 1] += c
    return tuple(v)


def _doubles(n, positions):
    return [_w(n, {p: 2}) for p in positions]


def _span(n, lo, hi, coeff=1):
    return _w(n, {p: coeff for p in range(lo, hi + 1)})


def _humps(n, count):
    """Weights 1,2,1 on (2k-1, 2k, 2k+1) for k = 1..count."""
    return [_w(n, {2 * k - 1: 1, 2 * k: 2, 2 * k + 1: 1})
            for k in range(1, count + 1)]


def _need(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


# -- restricted root bases of involutions -------------------------------------

class SymmetricInstance(NamedTuple):
    diagram: Diagram
    basis: tuple
    restricted: tuple  # (family, rank) of the restricted root system


class SymmetricDatum(NamedTuple):
    label: str
    constraints: str
    subalgebra: str
    params: tuple
    recipe: Callable

    def realise(self, **params) -> SymmetricInstance:
        return self.recipe(**params)


def _sym_doubled(family, n, rank=None):
    d = parse_diagram(f"{family}{n}")
    return SymmetricInstance(d, tuple(_doubles(n, range(1, n + 1))),
                             (family, rank if rank is not None else n))


def _sym_a2(n):
    _need(n >= 3 and n % 2 == 1, "needs odd n >= 3")
    d = parse_diagram(f"A{n}")
    return SymmetricInstance(d, tuple(_humps(n, (n - 1) // 2)),
                             ("A", (n - 1) // 2))


def _sym_a3(p, q):
    _need(p >= 1 and q >= 2, "needs p >= 1, q >= 2")
    n = 2 * p + q
    basis = [_w(n, {i: 1, n + 1 - i: 1}) for i in range(1, p + 1)]
    basis.append(_span(n, p + 1, p + q))
    return SymmetricInstance(parse_diagram(f"A{n}"), tuple(basis),
                             ("BC", p + 1))


def _sym_a3q1(p, q=1):
    _need(p >= 1 and q == 1, "needs p >= 1, q = 1")
    n = 2 * p + 1
    basis = [_w(n, {i: 1, n + 1 - i: 1}) for i in range(1, p + 1)]
    basis.append(_w(n, {p + 1: 2}))
    return SymmetricInstance(parse_diagram(f"A{n}"), tuple(basis),
                             ("C", p + 1))


def _sym_a4(n):
    _need(n >= 2, "needs n >= 2")
    return SymmetricInstance(parse_diagram(f"A{n}"), (_span(n, 1, n),),
                             ("A", 1))


def _sym_a4n1(n=1):
    _need(n == 1, "needs n = 1")
    return _sym_doubled("A", 1)


def _sym_c1(n):
    _need(n >= 3, "needs n >= 3")
    return _sym_doubled("C", n)


def _sym_b1(p, q):
    _need(p >= 1 and q >= 1, "needs p, q >= 1")
    n = p + q
    basis = _doubles(n, range(1, p + 1)) + [_span(n, p + 1, n, 2)]
    return SymmetricInstance(parse_diagram(f"B{n}"), tuple(basis),
                             ("B", p + 1))


def _sym_b2(n):
    _need(n >= 2, "needs n >= 2")
    return SymmetricInstance(parse_diagram(f"B{n}"), (_span(n, 1, n, 2),),
                             ("A", 1))


def _sym_c2(p, q):
    _need(p >= 0 and p % 2 == 0 and q >= 3, "needs even p >= 0, q >= 3")
    n = p + q
    tail = {i: 2 for i in range(p + 2, n)}
    tail[p + 1] = 1
    tail[n] = 1
    basis = _humps(n, p // 2) + [_w(n, tail)]
    return SymmetricInstance(parse_diagram(f"C{n}"), tuple(basis),
                             ("BC", p // 2 + 1))


def _sym_c2q2(p, q=2):
    _need(p >= 2 and p % 2 == 0 and q == 2, "needs even p >= 2, q = 2")
    n = p + 2
    basis = _humps(n, p // 2) + [_w(n, {n - 1: 2, n: 2})]
    return SymmetricInstance(parse_diagram(f"C{n}"), tuple(basis),
                             ("C", p // 2 + 1))


def _sym_d1(p, q):
    _need(p >= 1 and q >= 2 and p + q >= 4, "needs p >= 1, q >= 2, p+q >= 4")
    n = p + q
    tail = {i: 2 for i in range(p + 1, n - 1)}
    tail[n - 1] = 1
    tail[n] = 1
    basis = _doubles(n, range(1, p + 1)) + [_w(n, tail)]
    return SymmetricInstance(parse_diagram(f"D{n}"), tuple(basis),
                             ("B", p + 1))


def _sym_d1q0(p, q=0):
    _need(p >= 4 and q == 0, "needs p >= 4, q = 0")
    return _sym_doubled("D", p)


def _sym_d2(n):
    _need(n >= 4, "needs n >= 4")
    tail = {i: 2 for i in range(1, n - 1)}
    tail[n - 1] = 1
    tail[n] = 1
    return SymmetricInstance(parse_diagram(f"D{n}"), (_w(n, tail),),
                             ("A", 1))


def _sym_d3even(n):
    _need(n >= 4 and n % 2 == 0, "needs even n >= 4")
    basis = _humps(n, (n - 2) // 2) + [_w(n, {n: 2})]
    return SymmetricInstance(parse_diagram(f"D{n}"), tuple(basis),
                             ("C", n // 2))


def _sym_d3odd(n):
    _need(n >= 5 and n % 2 == 1, "needs odd n >= 5")
    basis = _humps(n, (n - 3) // 2) + [_w(n, {n - 2: 1, n - 1: 1, n: 1})]
    return SymmetricInstance(parse_diagram(f"D{n}"), tuple(basis),
                             ("BC", (n - 1) // 2))


def _fixed(maker):
    # rank-specific rows take no parameters
    return lambda: maker


_E6 = parse_diagram("E6")
_E7 = parse_diagram("E7")
_E8 = parse_diagram("E8")

# The two long weights shared by the rank-2 restricted systems on E6 and,
# zero-padded, by their extensions on E7 and E8.
_E_LONG = ((2, 1, 2, 2, 1, 0), (0, 1, 1, 2, 2, 2))


def _e_long(n):
    return tuple(w + (0,) * (n - 6) for w in _E_LONG)


SYMMETRIC = (
    SymmetricDatum("A I", "n >= 1", "so(n+1)", ("n",),
                   lambda n: _sym_doubled("A", n)),
    SymmetricDatum("A II", "odd n >= 3", "sp(n+1)", ("n",), _sym_a2),
    SymmetricDatum("A III (q >= 2)", "n = 2p+q, p >= 1, q >= 2",
                   "sl(p+1) + sl(p+q) + gl(1)", ("p", "q"), _sym_a3),
    SymmetricDatum("A III (q = 1)", "n = 2p+1, p >= 1",
                   "sl(p+1) + sl(p+1) + gl(1)", ("p",), _sym_a3q1),
    SymmetricDatum("A IV (n >= 2)", "n >= 2", "gl(n)", ("n",), _sym_a4),
    SymmetricDatum("A IV (n = 1)", "n = 1", "gl(1)", ("n",), _sym_a4n1),
    SymmetricDatum("B I", "n = p+q, p, q >= 1", "so(p+1) + so(2n-p)",
                   ("p", "q"), _sym_b1),
    SymmetricDatum("B II", "n >= 2", "so(2n)", ("n",), _sym_b2),
    SymmetricDatum("C I", "n >= 3", "gl(n)", ("n",), _sym_c1),
    SymmetricDatum("C II (q >= 3)", "n = p+q, even p >= 0, q >= 3",
                   "sp(p+2) + sp(2n-p-2)", ("p", "q"), _sym_c2),
    SymmetricDatum("C II (q = 2)", "n = p+2, even p >= 2",
                   "sp(n) + sp(n)", ("p",), _sym_c2q2),
    SymmetricDatum("D I (q >= 2)", "n = p+q, p >= 1, q >= 2",
                   "so(p+1) + so(2n-p-1)", ("p", "q"), _sym_d1),
    SymmetricDatum("D I (q = 0)", "n = p >= 4", "so(n) + so(n)",
                   ("p",), _sym_d1q0),
    SymmetricDatum("D II", "n >= 4", "so(2n-1)", ("n",), _sym_d2),
    SymmetricDatum("D III (n even)", "even n >= 4", "gl(n)", ("n",),
                   _sym_d3even),
    SymmetricDatum("D III (n odd)", "odd n >= 5", "gl(n)", ("n",),
                   _sym_d3odd),
    SymmetricDatum("E I", "", "sp(8)", (),
                   _fixed(_sym_doubled("E", 6))),
    SymmetricDatum("E II", "", "sl(6) + sl(2)", (), _fixed(
        SymmetricInstance(_E6, ((1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0),
                                (0, 2, 0, 0, 0, 0), (0, 0, 0, 2, 0, 0)),
                          ("F", 4)))),
    SymmetricDatum("E III", "", "so(10) + gl(1)", (), _fixed(
        SymmetricInstance(_E6, ((1, 0, 1, 1, 1, 1), (0, 2, 1, 2, 1, 0)),
                          ("BC", 2)))),
    SymmetricDatum("E IV", "", "f4", (), _fixed(
        SymmetricInstance(_E6, _e_long(6), ("A", 2)))),
    SymmetricDatum("E V", "", "sl(8)", (),
                   _fixed(_sym_doubled("E", 7))),
    SymmetricDatum("E VI", "", "so(12) + sl(2)", (), _fixed(
        SymmetricInstance(_E7, ((2, 0, 0, 0, 0, 0, 0),
                                (0, 0, 2, 0, 0, 0, 0),
                                (0, 1, 0, 2, 1, 0, 0),
                                (0, 0, 0, 0, 1, 2, 1)), ("F", 4)))),
    SymmetricDatum("E VII", "", "e6 + gl(1)", (), _fixed(
        SymmetricInstance(_E7, _e_long(7) + (_w(7, {7: 2}),), ("C", 3)))),
    SymmetricDatum("E VIII", "", "so(16)", (),
                   _fixed(_sym_doubled("E", 8))),
    SymmetricDatum("E IX", "", "e7 + sl(2)", (), _fixed(
        SymmetricInstance(_E8, _e_long(8) + (_w(8, {7: 2}), _w(8, {8: 2})),
                          ("F", 4)))),
    SymmetricDatum("F I", "", "sp(6) + sl(2)", (),
                   _fixed(_sym_doubled("F", 4))),
    SymmetricDatum("F II", "", "so(9)", (), _fixed(
        SymmetricInstance(parse_diagram("F4"), ((1, 2, 3, 2),),
                          ("BC", 1)))),
    SymmetricDatum("G", "", "sl(2) + sl(2)", (),
                   _fixed(_sym_doubled("G", 2))),
)

# Rows whose fixed-point subgroup is wonderful on its own, next to the
# normaliser; the fixture halves the doubled basis element.
_TWO_VARIANTS = frozenset({"B II", "C II (q = 2)"})


def symmetric_table() -> tuple:
    return SYMMETRIC


def _resolve_rows(label: str) -> list:
    rows = [r for r in SYMMETRIC
            if r.label == label or r.label.startswith(label + " (")]
    if not rows:
        known = ", ".join(sorted({r.label.split(" (")[0]
                                  for r in SYMMETRIC}))
        raise ValueError(f"unknown involution label {label!r} "
                         f"(expected one of: {known})")
    return rows


def symmetric_instance(label: str, **params):
    """Resolve a label (and parameters) to (row, SymmetricInstance).

    Sub-case rows share a prefix ("A III" covers both q ranges); the
    parameters decide which one applies and must fit exactly one.
    """
    hits = []
    errors = []
    for row in _resolve_rows(label):
        try:
            hits.append((row, row.realise(**params)))
        except (ValueError, TypeError) as exc:
            errors.append(f"{row.label}: {exc}")
    if len(hits) == 1:
        return hits[0]
    if not hits:
        raise ValueError(f"no sub-case of {label!r} accepts "
                         f"{params!r} ({'; '.join(errors)})")
    raise ValueError(f"{label!r} with {params!r} fits several sub-cases: "
                     + ", ".join(row.label for row, _ in hits))


def symmetric_system(label: str, selfnormalising: bool = True,
                     **params) -> SphericalSystem:
    """Spherical system of the wonderful symmetric subgroup of a row.

    The spherical roots are exactly the restricted basis elements.  The
    parabolic set is not part of the table; it is recovered by trying
    every combination of admissible per-root traces and keeping the one
    whose union contains all the others.  A row with no valid choice, or
    with incomparable maximal choices, is a transcription bug and raises.

    With ``selfnormalising=False`` the doubled basis element is halved,
    giving the system of the plain fixed-point subgroup; only the rows
    with the so(2n) and sp(n)+sp(n) fixed subalgebras admit this.
    """
    row, inst = symmetric_instance(label, **params)
    sigma = list(inst.basis)
    if not selfnormalising:
        if row.label not in _TWO_VARIANTS:
            raise ValueError(f"{row.label} has a single wonderful variant")
        sigma = [tuple(c // 2 for c in g) if all(c % 2 == 0 for c in g)
                 else g for g in sigma]
    d = inst.diagram
    covered = frozenset().union(*(support(g) for g in sigma))
    if covered != frozenset(range(d.n_nodes)):
        raise ValueError(f"{row.label}: basis does not span the diagram")
    options = []
    for g in sigma:
        traces = sorted(rankone.admissible_traces(d, g), key=sorted)
        if not traces:
            raise ValueError(f"{row.label}: {list(g)} is not a rank-one "
                             "weight on its support")
        options.append(traces)
    valid = set()
    for combo in itertools.product(*options):
        sp = frozenset().union(*combo)
        if SphericalSystem(d, sp, sigma).validate().ok:
            valid.add(sp)
    if not valid:
        raise ValueError(f"{row.label}: no parabolic set completes the "
                         "restricted basis")
    best = max(valid, key=len)
    if any(not sp <= best for sp in valid):
        raise ValueError(f"{row.label}: incomparable parabolic sets "
                         f"{sorted(map(sorted, valid))}")
    return SphericalSystem(d, best, sigma)


def restricted_cartan(diagram: Diagram, basis) -> tuple:
    """Cartan matrix of the root subsystem spanned by ``basis``.

    Entries 2(g_i, g_j)/(g_i, g_i) must come out integral; fractions mean
    the given weights do not form the basis of a root system.
    """
    mat = []
    for gi in basis:
        nii = diagram.inner(gi, gi)
        row = []
        for gj in basis:
            v = 2 * diagram.inner(gi, gj) / nii
            if v.denominator != 1:
                raise ValueError(f"non-integral pairing between {list(gi)} "
                                 f"and {list(gj)}")
            row.append(int(v))
        mat.append(tuple(row))
    return tuple(mat)


def cartan_of_type(family: str, rank: int) -> tuple:
    """Cartan matrix of a simple (or BC) type in conventional node order."""
    if family == "BC":
        return ((2,),) if rank == 1 else cartan_of_type("B", rank)
    if family == "C" and rank == 2:
        # below the generic C range; the long root keeps the last place
        return ((2, -2), (-1, 2))
    return parse_diagram(f"{family}{rank}").cartan


# -- gradings from a characteristic vector -------------------------------------

class OrbitDims(NamedTuple):
    dim_h: int
    dim_hu: int
    dim_orbit: int


def _checked(diagram, characteristic):
    d = diagram if isinstance(diagram, Diagram) else parse_diagram(diagram)
    char = tuple(int(c) for c in characteristic)
    if len(char) != d.n_nodes:
        raise ValueError(f"characteristic length {len(char)} != "
                         f"{d.n_nodes} nodes")
    bad = [c for c in char if c not in (0, 1, 2)]
    if bad:
        raise ValueError(f"characteristic entries must be 0, 1 or 2; "
                         f"got {bad}")
    return d, char


def grading_dims(diagram, characteristic) -> dict:
    """Dimensions of the grading layers cut out by a characteristic.

    Every root contributes to the layer given by its evaluation against
    the characteristic; the Cartan subalgebra sits in layer 0.  Keys run
    over all nonzero layers and their negatives.
    """
    d, char = _checked(diagram, characteristic)
    levels = Counter(sum(c * k for c, k in zip(r, char))
                     for r in d.positive_roots)
    dims = {0: d.n_nodes + 2 * levels.pop(0, 0)}
    for lev in sorted(levels):
        dims[lev] = levels[lev]
        dims[-lev] = levels[lev]
    return dims


def height(diagram, characteristic) -> int:
    return max(grading_dims(diagram, characteristic))


def is_spherical_orbit(diagram, characteristic) -> bool:
    # nonzero nilpotent elements always reach layer 2, so "height 2 or 3"
    # and "height at most 3" agree wherever the vector is a genuine
    # characteristic; the latter keeps degenerate vectors total
    return height(diagram, characteristic) <= 3


def orbit_dims(diagram, characteristic) -> OrbitDims:
    dims = grading_dims(diagram, characteristic)
    total = sum(dims.values())
    dim_h = dims[0] + dims.get(1, 0)
    dim_hu = dims.get(1, 0) + dims.get(2, 0)
    return OrbitDims(dim_h, dim_hu, total - dim_h)


# -- height-3 orbit table ------------------------------------------------------

class OrbitInstance(NamedTuple):
    diagram: Diagram
    characteristic: tuple
    partition: tuple | None


class OrbitDatum(NamedTuple):
    label: str
    constraints: str
    fixed_part: str  # centraliser piece in layer 0, documentation only
    module: str      # its action on the odd tail, documentation only
    params: tuple
    recipe: Callable

    def realise(self, **params) -> OrbitInstance:
        return self.recipe(**params)


def _orb_b_tall(r):
    _need(r >= 1, "needs r >= 1")
    n = 2 * r + 1
    return OrbitInstance(parse_diagram(f"B{n}"), _w(n, {1: 1, n: 1}),
                         (3,) + (2,) * (2 * r))


def _orb_b(r, s):
    _need(r >= 1 and s >= 1, "needs r, s >= 1")
    n = 2 * r + s + 1
    return OrbitInstance(parse_diagram(f"B{n}"), _w(n, {1: 1, 2 * r + 1: 1}),
                         (3,) + (2,) * (2 * r) + (1,) * (2 * s))


def _orb_d_tall(r):
    _need(r >= 1, "needs r >= 1")
    n = 2 * r + 2
    return OrbitInstance(parse_diagram(f"D{n}"),
                         _w(n, {1: 1, n - 1: 1, n: 1}),
                         (3,) + (2,) * (2 * r) + (1,))


def _orb_d(r, s):
    _need(r >= 1 and s >= 1, "needs r, s >= 1")
    n = 2 * r + s + 2
    return OrbitInstance(parse_diagram(f"D{n}"), _w(n, {1: 1, 2 * r + 1: 1}),
                         (3,) + (2,) * (2 * r) + (1,) * (2 * s + 1))


def _orb_fixed(spec, char):
    inst = OrbitInstance(parse_diagram(spec), char, None)
    return lambda: inst


HEIGHT3 = (
    OrbitDatum("B(2r+1)", "r >= 1", "sp(2r)", "V(w1)", ("r",), _orb_b_tall),
    OrbitDatum("B(2r+s+1)", "r, s >= 1", "sp(2r) + so(2s)", "V(w1)",
               ("r", "s"), _orb_b),
    OrbitDatum("D(2r+2)", "r >= 1", "sp(2r)", "V(w1)", ("r",), _orb_d_tall),
    OrbitDatum("D(2r+s+2)", "r, s >= 1", "sp(2r) + so(2s+1)", "V(w1)",
               ("r", "s"), _orb_d),
    OrbitDatum("E6 (000100)", "", "sl(3) + sl(2)", "V(w1')", (),
               _orb_fixed("E6", (0, 0, 0, 1, 0, 0))),
    OrbitDatum("E7 (0010000)", "", "sl(2) + sp(6)", "V(w1)", (),
               _orb_fixed("E7", (0, 0, 1, 0, 0, 0, 0))),
    OrbitDatum("E7 (0100001)", "", "sp(6)", "V(w1)", (),
               _orb_fixed("E7", (0, 1, 0, 0, 0, 0, 1))),
    OrbitDatum("E8 (00000010)", "", "f4 + sl(2)", "V(w1')", (),
               _orb_fixed("E8", (0, 0, 0, 0, 0, 0, 1, 0))),
    OrbitDatum("E8 (01000000)", "", "sp(8)", "V(w1)", (),
               _orb_fixed("E8", (0, 1, 0, 0, 0, 0, 0, 0))),
    OrbitDatum("F4 (0100)", "", "sl(2) + so(3)", "V(w1)", (),
               _orb_fixed("F4", (0, 1, 0, 0))),
    OrbitDatum("G2 (10)", "", "sl(2)", "V(w1)", (),
               _orb_fixed("G2", (1, 0))),
)


def height3_table() -> tuple:
    return HEIGHT3


# -- model homogeneous spaces --------------------------------------------------

class ModelDatum(NamedTuple):
    group: str
    parity: str
    construction: str
    system: str                    # catalog family naming the system
    system_params: Callable        # rank -> family parameters
    characteristic: Callable | None = None  # rank -> orbit characteristic

    def instantiate(self, n: int = 0) -> SphericalSystem:
        from . import families
        return families.instantiate(self.system, **self.system_params(n))


def _n(n):
    return {"n": n}


MODEL = (
    ModelDatum("A", "even", "Sp(n) x GL(1)", "ac*(n)", _n),
    ModelDatum("A", "odd",
               "parabolic of semisimple type C((n-1)/2) in the fixed "
               "subgroup of row A II", "ac*(n)", _n),
    ModelDatum("B", "even",
               "inside the type-A(n-1) parabolic of the row B II subgroup, "
               "same radical, semisimple type C(n/2)", "bc*(n)", _n),
    ModelDatum("B", "odd",
               "normaliser of the centraliser of a nilpotent element",
               "bc*(n)", _n,
               lambda n: _w(n, {1: 1, n: 1})),
    ModelDatum("C", "even",
               "parabolic of semisimple type C(n/2-1) x C(n/2) in the "
               "row C II (q = 2) subgroup", "ac*(p)+c*(q)",
               lambda n: {"p": n - 1, "q": 2}),
    ModelDatum("C", "odd",
               "parabolic of semisimple type C((n-1)/2) x C((n-1)/2) in "
               "the row C II (q >= 3) subgroup", "ac*(p)+c*(q)",
               lambda n: {"p": n - 1, "q": 2}),
    ModelDatum("D", "even",
               "normaliser of the centraliser of a nilpotent element",
               "dc*(n)", _n,
               lambda n: _w(n, {1: 1, n - 1: 1, n: 1})),
    ModelDatum("D", "odd",
               "inside the type-A(n-2) parabolic of the row D II subgroup, "
               "same radical, semisimple type C((n-1)/2)", "dc*(n)", _n),
    ModelDatum("E6", "", "parabolic of semisimple type C3 in the row E IV "
               "subgroup", "ec*(n)", lambda n: {"n": 6}),
    ModelDatum("E7", "", "normaliser of the centraliser of a nilpotent "
               "element", "ec*(n)", lambda n: {"n": 7},
               lambda n: (0, 1, 0, 0, 0, 0, 1)),
    ModelDatum("E8", "", "normaliser of the centraliser of a nilpotent "
               "element", "ec*(n)", lambda n: {"n": 8},
               lambda n: (0, 1, 0, 0, 0, 0, 0, 0)),
    ModelDatum("F4", "", "parabolic of semisimple type A1 x B2 in the "
               "row F I subgroup", "fc*(4)", lambda n: {}),
    ModelDatum("G2", "", "normaliser of the centraliser of a nilpotent "
               "element", "g*(2)", lambda n: {},
               lambda n: (1, 0)),
    ModelDatum("B adjoint", "", "isogeny-sensitive case: the adjoint "
               "group's model subgroup", "bc'(n)", _n),
)


def model_table() -> tuple:
    return MODEL
