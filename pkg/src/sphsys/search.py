"""Exhaustive search for spherical systems on a fixed diagram.

The rank-one table lists every weight a root set may contain, so the search
space is finite: walk independent, pairwise-admissible subsets of those
weights, then attach every parabolic set the trace conditions allow.  The
final validation gate keeps the walk honest; the pruning rules are only
necessary conditions, never assumed sufficient.

``verify_catalog`` compares the primitive systems found this way with the
members the family catalog predicts on the same diagram.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from . import ops
from .budget import BudgetExceeded, max_states
from .dynkin import Diagram, parse_diagram
from .families import expand_catalog
from .rankone import admissible_traces, rank1_embeddings
from .system import SphericalSystem


def candidate_roots(diagram) -> tuple:
    """Distinct weights admitting at least one rank-one realization."""
    d = diagram if isinstance(diagram, Diagram) else parse_diagram(diagram)
    return tuple(sorted({w for _, w, _ in rank1_embeddings(d)}))


def _doubled_node(w):
    supp = [i for i, c in enumerate(w) if c]
    if len(supp) == 1 and w[supp[0]] == 2:
        return supp[0]
    return None


def _orthogonal_pair(d, w):
    supp = [i for i, c in enumerate(w) if c]
    if (len(supp) == 2 and w[supp[0]] == 1 and w[supp[1]] == 1
            and d.orthogonal(supp[0], supp[1])):
        return supp
    return None


def _compatible(d, w1, w2) -> bool:
    """Pairwise necessary conditions: halved pairings against a doubled
    root stay nonpositive integers, and the two halves of an orthogonal
    pair root pair equally with everything."""
    for a, b in ((w1, w2), (w2, w1)):
        i = _doubled_node(a)
        if i is not None and b != a:
            s = d.pairing_weight(i, b)
            if s > 0 or s % 2:
                return False
        pair = _orthogonal_pair(d, a)
        if pair is not None:
            if d.pairing_weight(pair[0], b) != d.pairing_weight(pair[1], b):
                return False
    return True


def _try_extend(basis, w):
    """Echelon step; returns the new basis or None if w is dependent."""
    v = [Fraction(c) for c in w]
    for pivot, row in basis:
        if v[pivot]:
            f = v[pivot] / row[pivot]
            v = [a - f * b for a, b in zip(v, row)]
    for i, c in enumerate(v):
        if c:
            return basis + [(i, v)]
    return None


def _trace_assignments(sigma, traces):
    """All ways to pick one admissible trace per root that agree on shared
    support nodes; each result is the sp-part living on the root supports."""
    out = set()
    decided = {}

    def rec(k):
        if k == len(sigma):
            out.add(frozenset(i for i, v in decided.items() if v))
            return
        w = sigma[k]
        supp = [i for i, c in enumerate(w) if c]
        for t in traces[w]:
            if any(i in decided and decided[i] != (i in t) for i in supp):
                continue
            fresh = [i for i in supp if i not in decided]
            for i in fresh:
                decided[i] = i in t
            rec(k + 1)
            for i in fresh:
                del decided[i]

    rec(0)
    return out


def enumerate_systems(diagram, cuspidal_only=False) -> tuple:
    """Every valid spherical system on the diagram.

    With cuspidal_only only root sets whose supports cover the whole
    diagram are kept, which cuts the walk down sharply.
    """
    d = diagram if isinstance(diagram, Diagram) else parse_diagram(diagram)
    cands = candidate_roots(d)
    m = len(cands)
    compat = [[_compatible(d, cands[i], cands[j]) for j in range(m)]
              for i in range(m)]
    traces = {w: admissible_traces(d, w) for w in cands}
    budget = max_states()
    n = d.n_nodes
    state = {"count": 0}
    out = []

    def tick():
        state["count"] += 1
        if state["count"] > budget:
            raise BudgetExceeded(
                f"enumeration on {d.spec()} exceeded {budget} states")

    def emit(chosen):
        sigma = tuple(cands[k] for k in chosen)
        union_supp = set()
        banned = set()
        for w in sigma:
            supp = {i for i, c in enumerate(w) if c}
            union_supp |= supp
            for i in range(n):
                if i not in supp and i not in banned and d.pairing_weight(i, w):
                    banned.add(i)
        outside = [i for i in range(n) if i not in union_supp]
        if cuspidal_only and outside:
            return
        free = [i for i in outside if i not in banned]
        free_subsets = [frozenset(f for k, f in enumerate(free)
                                  if mask >> k & 1)
                        for mask in range(1 << len(free))]
        for base in _trace_assignments(sigma, traces):
            for extra in free_subsets:
                tick()
                sys = SphericalSystem(d, base | extra, sigma)
                if sys.validate().ok:
                    out.append(sys)

    def walk(chosen, basis, start):
        tick()
        emit(chosen)
        for k in range(start, m):
            if not all(compat[j][k] for j in chosen):
                continue
            nb = _try_extend(basis, cands[k])
            if nb is None:
                continue
            walk(chosen + [k], nb, k + 1)

    walk([], [], 0)
    return tuple(out)


def enumerate_primitive(diagram) -> tuple:
    return tuple(s for s in enumerate_systems(diagram, cuspidal_only=True)
                 if ops.is_primitive(s))


class CatalogCheck(NamedTuple):
    diagram: str
    found: int
    expected: int
    missing: tuple   # predicted labels the search never produced
    extra: tuple     # found systems the catalog does not predict

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra


def verify_catalog(diagram) -> CatalogCheck:
    """Compare the primitive systems found by search with the catalog.

    Systems are matched up to diagram automorphism, so one catalog entry
    accounts for its whole symmetry orbit.
    """
    d = diagram if isinstance(diagram, Diagram) else parse_diagram(diagram)
    found = {}
    for s in enumerate_primitive(d):
        found.setdefault(s.canonical_key(), s)
    predicted = {e.system.canonical_key(): e.label for e in expand_catalog(d)}
    missing = tuple(lbl for key, lbl in predicted.items() if key not in found)
    extra = tuple(repr(found[key]) for key in found if key not in predicted)
    return CatalogCheck(d.spec(), len(found), len(predicted), missing, extra)
