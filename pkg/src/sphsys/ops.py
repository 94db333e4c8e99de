"""Operations of the combinatorial dictionary on spherical systems.

Everything here is exact: feasibility questions go through rational
elimination and quotient monoids through Hilbert bases.  Quotient systems
are constructed and validated, never assumed valid.
"""

from __future__ import annotations

from dataclasses import dataclass

from sphsys import rankone
from sphsys.dynkin import Diagram, support
from sphsys.feasible import feasible_nonneg
from sphsys.hilbert import hilbert_basis
from sphsys.system import SphericalSystem


def induced_diagram(d: Diagram, keep):
    """Induced subdiagram on a node subset plus the old->new index map.

    The subset of a finite-type diagram is again one; its connected pieces
    are classified and relabelled in Bourbaki order.
    """
    keep = sorted(d.node_index(a) if not isinstance(a, int) else a
                  for a in keep)
    keepset = set(keep)
    pieces = []
    todo = set(keep)
    while todo:
        comp = {todo.pop()}
        grew = True
        while grew:
            grew = False
            for i in list(comp):
                for j in keepset:
                    if j not in comp and d.adjacent(i, j):
                        comp.add(j)
                        grew = True
        todo -= comp
        shapes = rankone._classify_segment(d, frozenset(comp))
        assert shapes, "subset of a Dynkin diagram must classify"
        pieces.append(shapes[0])
    pieces.sort(key=lambda s: (s[0], s[1], s[2]))
    sub = Diagram([(fam, rank) for fam, rank, _ in pieces])
    node_map = {}
    for ci, (_f, _r, order) in enumerate(pieces):
        for pos, old in enumerate(order, start=1):
            node_map[old] = sub.node_index((ci, pos))
    return sub, node_map


def localize(sys: SphericalSystem, keep) -> SphericalSystem:
    """Restrict to the induced subdiagram, keeping roots supported inside."""
    d = sys.diagram
    keep = frozenset(d.node_index(a) if not isinstance(a, int) else a
                     for a in keep)
    sub, node_map = induced_diagram(d, keep)
    sigma = []
    for g in sys.sigma:
        if support(g) <= keep:
            w = [0] * sub.n_nodes
            for i, c in enumerate(g):
                if c:
                    w[node_map[i]] = c
            sigma.append(tuple(w))
    sp = frozenset(node_map[i] for i in sys.sp & keep)
    return SphericalSystem(sub, sp, sigma)


def decuspidalize(sys: SphericalSystem) -> SphericalSystem:
    """Localize at the union of the supports of the spherical roots."""
    return localize(sys, sys.sigma_support)


# -- distinguished subsets and quotients ------------------------------------


def _subset_rows(sys, subset):
    rho = sys.rho_matrix
    return [tuple(rho[c][j] for c in subset)
            for j in range(len(sys.sigma))]


def distinguished_witness(sys: SphericalSystem, subset):
    """Positive integer colour multiplicities phi with <rho(phi), gamma> >= 0
    for every spherical root, or None."""
    subset = tuple(sorted(subset))
    if not subset:
        return ()
    rows = _subset_rows(sys, subset)
    return feasible_nonneg(rows, len(subset), strict=range(len(subset)))


def is_distinguished(sys: SphericalSystem, subset) -> bool:
    return distinguished_witness(sys, subset) is not None


@dataclass(frozen=True)
class QuotientResult:
    system: SphericalSystem
    sp: frozenset
    sigma: tuple
    coefficients: tuple       # Hilbert basis in sigma coordinates
    smooth: bool
    homogeneous: bool
    is_valid_system: bool

    def to_json(self):
        return {
            "system": self.system.to_json(),
            "coefficients": [list(x) for x in self.coefficients],
            "smooth": self.smooth,
            "homogeneous": self.homogeneous,
            "is_valid_system": self.is_valid_system,
        }


def quotient(sys: SphericalSystem, subset) -> QuotientResult:
    """Quotient by a distinguished subset of colours.

    The new spherical roots are the indecomposable elements of the monoid of
    nonnegative root combinations killed by every chosen colour.  Raises
    ValueError when the subset is not distinguished.
    """
    subset = tuple(sorted(subset))
    if distinguished_witness(sys, subset) is None:
        raise ValueError("quotient by a non-distinguished subset")
    # one equation per chosen colour, variables are root multiplicities
    rho = sys.rho_matrix
    rows = [tuple(rho[c]) for c in subset]
    coeffs = hilbert_basis(rows, len(sys.sigma))
    sigma_out = []
    for x in coeffs:
        w = [0] * sys.diagram.n_nodes
        for c, g in zip(x, sys.sigma):
            if c:
                for i, v in enumerate(g):
                    w[i] += c * v
        sigma_out.append(tuple(w))
    sigma_out.sort()
    sp_out = frozenset(sys.sp)
    for c in subset:
        sp_out |= sys.colours[c].nodes
    out = SphericalSystem(sys.diagram, sp_out, sigma_out)
    return QuotientResult(
        system=out,
        sp=sp_out,
        sigma=tuple(sigma_out),
        coefficients=coeffs,
        smooth=set(sigma_out) <= set(sys.sigma),
        homogeneous=not sigma_out,
        is_valid_system=out.is_valid,
    )


def support_colour_set(sys: SphericalSystem) -> tuple:
    """Indices of the colours living entirely on the support of sigma."""
    supp = sys.sigma_support
    return tuple(i for i, c in enumerate(sys.colours) if c.nodes <= supp)


# -- decompositions ----------------------------------------------------------


def _moved_roots(sys, subset):
    rho = sys.rho_matrix
    return frozenset(j for j in range(len(sys.sigma))
                     if any(rho[c][j] for c in subset))


def decomposes(sys: SphericalSystem, s1, s2) -> bool:
    """Whether two disjoint colour subsets split the system in two.

    Requires: disjoint supports of moved roots, mutually orthogonal new
    parabolic nodes, and at least one smooth quotient.  Non-distinguished
    subsets never decompose.  Raises ValueError on empty or overlapping
    subsets.
    """
    s1, s2 = frozenset(s1), frozenset(s2)
    if not s1 or not s2:
        raise ValueError("decomposition subsets must be nonempty")
    if s1 & s2:
        raise ValueError("decomposition subsets must be disjoint")
    if not (is_distinguished(sys, s1) and is_distinguished(sys, s2)):
        return False
    if _moved_roots(sys, s1) & _moved_roots(sys, s2):
        return False
    d = sys.diagram
    add1 = frozenset().union(*(sys.colours[c].nodes for c in s1)) - sys.sp
    add2 = frozenset().union(*(sys.colours[c].nodes for c in s2)) - sys.sp
    # Each connected piece of the subdiagram spanned by the two enlarged
    # parabolic sets must lie on one side: a chain through shared sp nodes
    # couples the factors just as a direct edge would.
    union = sys.sp | add1 | add2
    seen = set()
    for start in add1:
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            i = queue.pop()
            for j in union:
                if j not in comp and d.adjacent(i, j):
                    comp.add(j)
                    queue.append(j)
        if comp & add2:
            return False
        seen |= comp
    return quotient(sys, s1).smooth or quotient(sys, s2).smooth


def is_decomposable(sys: SphericalSystem):
    """First pair of colour subsets decomposing the system, else None."""
    n = len(sys.colours)
    subsets = []
    for mask in range(1, 1 << n):
        s = frozenset(i for i in range(n) if mask >> i & 1)
        subsets.append(tuple(sorted(s)))
    subsets.sort(key=lambda s: (len(s), s))
    dist = [s for s in subsets if is_distinguished(sys, s)]
    for a in range(len(dist)):
        for b in range(a + 1, len(dist)):
            s1, s2 = dist[a], dist[b]
            if set(s1) & set(s2):
                continue
            if decomposes(sys, s1, s2):
                return (s1, s2)
    return None


def is_primitive(sys: SphericalSystem) -> bool:
    return sys.is_cuspidal and is_decomposable(sys) is None


# -- affinity and dimension identities ---------------------------------------


def affine_witness(sys: SphericalSystem):
    """Nonnegative integer root combination pairing strictly positively with
    every colour, or None.  Encoded with one strict slack variable."""
    k = len(sys.sigma)
    rho = sys.rho_matrix
    if not sys.colours:
        return (0,) * k
    rows = [tuple(rho[c]) + (-1,) for c in range(len(sys.colours))]
    x = feasible_nonneg(rows, k + 1, strict={k})
    return None if x is None else x[:k]


def is_affine_feasible(sys: SphericalSystem) -> bool:
    return affine_witness(sys) is not None


def expected_dims(sys: SphericalSystem) -> tuple[int, int]:
    """(dimension, rank of the character group) predicted by the system."""
    dim = sys.diagram.dim_flag(sys.sp) + len(sys.sigma)
    rank = len(sys.colours) - len(sys.sigma)
    return dim, rank
