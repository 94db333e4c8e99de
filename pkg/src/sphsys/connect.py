"""Colour-visibility components of a spherical system.

A spherical root sees another through the colours sitting on its support;
chains of mutual visibility cut the root set into components.  How such a
component can be quotiented away (smoothly, validly, or by splitting the
underlying diagram) is what the enumeration uses to discard glueings that
can only produce decomposable systems.
"""

from dataclasses import dataclass
from itertools import combinations

from .dynkin import support
from .ops import decomposes, distinguished_witness, induced_diagram, quotient
from .system import SphericalSystem

__all__ = [
    "ComponentAnalysis",
    "classify_component",
    "components",
    "delta_of",
    "lemma_erasable_prunes",
    "strongly_adjacent",
]


def _colours_meeting(sys, nodes):
    return tuple(i for i, c in enumerate(sys.colours) if c.nodes & nodes)


def strongly_adjacent(sys, gamma1, gamma2) -> bool:
    """Every colour on either root's support pairs nonzero with the other."""
    cols = sys.colours
    for g, other in ((gamma1, gamma2), (gamma2, gamma1)):
        for i in _colours_meeting(sys, support(g)):
            if sys.rho(cols[i], other) == 0:
                return False
    return True


def components(sys) -> tuple:
    """Partition of the spherical roots by chains of strong adjacency."""
    sigma = sys.sigma
    parent = list(range(len(sigma)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(len(sigma)), 2):
        if strongly_adjacent(sys, sigma[i], sigma[j]):
            parent[find(i)] = find(j)
    groups = {}
    for i in range(len(sigma)):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(sigma[i] for i in g) for g in sorted(groups.values()))


def delta_of(sys, roots) -> tuple:
    """Colours on the subset's support that ignore every outside root."""
    inside = set(map(tuple, roots))
    supp = set()
    for g in inside:
        supp |= support(g)
    outside = [g for g in sys.sigma if g not in inside]
    cols = sys.colours
    return tuple(i for i in _colours_meeting(sys, supp)
                 if all(sys.rho(cols[i], g) == 0 for g in outside))


@dataclass(frozen=True)
class ComponentAnalysis:
    component: tuple
    delta_of: tuple
    isolated: bool
    erasable: bool
    quasi_erasable: bool


def _isolated(sys, roots):
    # the two support halves must carve the colours in two, and the halves
    # must decompose the system localized at the whole spherical support
    supp_all = sys.sigma_support
    supp1 = set()
    for g in roots:
        supp1 |= support(g)
    supp2 = supp_all - supp1
    if not supp1 or not supp2:
        return False
    sub, node_map = induced_diagram(sys.diagram, supp_all)
    sigma = []
    for g in sys.sigma:
        w = [0] * sub.n_nodes
        for i, c in enumerate(g):
            if c:
                w[node_map[i]] = c
        sigma.append(tuple(w))
    core = SphericalSystem(sub, {node_map[i] for i in sys.sp & supp_all},
                           sigma)
    side1 = {node_map[i] for i in supp1}
    side2 = {node_map[i] for i in supp2}
    d1, d2 = [], []
    for i, c in enumerate(core.colours):
        if c.nodes <= side1:
            d1.append(i)
        elif c.nodes <= side2:
            d2.append(i)
        else:
            return False
    if not d1 or not d2:
        return False
    return decomposes(core, d1, d2)


def classify_component(sys, roots) -> ComponentAnalysis:
    """Erasability flags of a subset of spherical roots within the system."""
    roots = tuple(tuple(g) for g in roots)
    dlt = delta_of(sys, roots)
    erasable = quasi = False
    for r in range(1, len(dlt) + 1):
        for sub in combinations(dlt, r):
            if distinguished_witness(sys, sub) is None:
                continue
            q = quotient(sys, sub)
            erasable = erasable or q.smooth
            quasi = quasi or q.is_valid_system
        if erasable and quasi:
            break
    return ComponentAnalysis(roots, dlt, _isolated(sys, roots),
                             erasable, quasi)


def lemma_erasable_prunes(sys, roots1, roots2) -> bool:
    """Disjoint subsets, both quasi-erasable, at least one erasable.

    When this holds the whole system decomposes along the two colour
    subsets, so a search for indecomposable systems may skip it.
    """
    r1 = tuple(tuple(g) for g in roots1)
    r2 = tuple(tuple(g) for g in roots2)
    if not r1 or not r2 or set(r1) & set(r2):
        return False
    a1 = classify_component(sys, r1)
    if not a1.quasi_erasable:
        return False
    a2 = classify_component(sys, r2)
    if not a2.quasi_erasable:
        return False
    return a1.erasable or a2.erasable
