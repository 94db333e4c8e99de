"""Spherical systems: a parabolic node set plus a set of spherical roots.

A system is a triple (diagram, sp, sigma) where sp is a set of nodes and
sigma a sequence of weights.  Validation checks the two pairwise axioms on
sigma, rank-one realizability of every root against the table in
sphsys.rankone, that no root is simple, that roots are distinct, and linear
independence (on by default, opt out per call site via check_independent).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from sphsys import rankone
from sphsys.dynkin import Diagram, support


@dataclass(frozen=True)
class Colour:
    """An equivalence class of active simple roots.

    doubled means twice the representative is itself a spherical root; its
    functional then takes half pairings.
    """
    nodes: frozenset
    doubled: bool

    def rep(self) -> int:
        return min(self.nodes)


@dataclass
class ValidationReport:
    pairwise_doubled: list = field(default_factory=list)   # axiom on 2*alpha roots
    pairwise_orthogonal: list = field(default_factory=list)  # axiom on alpha+beta roots
    rank_one: list = field(default_factory=list)
    simple_roots: list = field(default_factory=list)
    duplicates: list = field(default_factory=list)
    dependent: bool = False
    independence_checked: bool = True

    @property
    def ok(self) -> bool:
        return not (self.pairwise_doubled or self.pairwise_orthogonal
                    or self.rank_one or self.simple_roots
                    or self.duplicates or self.dependent)

    def to_json(self) -> dict:
        return {
            "valid": self.ok,
            "pairwise_doubled": self.pairwise_doubled,
            "pairwise_orthogonal": self.pairwise_orthogonal,
            "rank_one": self.rank_one,
            "simple_roots": self.simple_roots,
            "duplicates": self.duplicates,
            "dependent": self.dependent,
            "independence_checked": self.independence_checked,
        }


def _matrix_rank(rows) -> int:
    """Rank over Q by fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    rank = 0
    cols = len(m[0]) if m else 0
    col = 0
    while rank < len(m) and col < cols:
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        a = m[rank][col]
        for r in range(rank + 1, len(m)):
            b = m[r][col]
            if b:
                m[r] = [a * x - b * y for x, y in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


class SphericalSystem:
    __slots__ = ("diagram", "sp", "sigma", "_cache")

    def __init__(self, diagram, sp=(), sigma=(), check_independent=True):
        if not isinstance(diagram, Diagram):
            diagram = Diagram(diagram)
        object.__setattr__(self, "diagram", diagram)
        spx = frozenset(diagram.node_index(a) if not isinstance(a, int) else a
                        for a in sp)
        object.__setattr__(self, "sp", spx)
        sig = []
        for w in sigma:
            if isinstance(w, dict):
                t = [0] * diagram.n_nodes
                for nd, c in w.items():
                    t[diagram.node_index(nd)] = int(c)
                sig.append(tuple(t))
            else:
                sig.append(tuple(int(c) for c in w))
        object.__setattr__(self, "sigma", tuple(sig))
        object.__setattr__(self, "_cache",
                           {"check_independent": bool(check_independent)})

    def __setattr__(self, name, value):
        raise AttributeError("SphericalSystem is immutable")

    def __eq__(self, other):
        return (isinstance(other, SphericalSystem)
                and self.diagram == other.diagram
                and self.sp == other.sp
                and sorted(self.sigma) == sorted(other.sigma))

    def __hash__(self):
        return hash((self.diagram, self.sp, tuple(sorted(self.sigma))))

    def __repr__(self):
        return (f"SphericalSystem({self.diagram.spec()!r}, "
                f"sp={sorted(self.sp)}, sigma={list(self.sigma)})")

    # -- validation ---------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Full validation; the report is computed once and reused."""
        if "report" in self._cache:
            return self._cache["report"]
        d = self.diagram
        rep = ValidationReport(
            independence_checked=self._cache["check_independent"])

        seen = {}
        for k, g in enumerate(self.sigma):
            if g in seen:
                rep.duplicates.append({"gamma": list(g), "positions":
                                       [seen[g], k]})
            seen.setdefault(g, k)

        simples = {d.simple_weight(i) for i in range(d.n_nodes)}
        for g in self.sigma:
            if g in simples:
                rep.simple_roots.append({"gamma": list(g)})

        doubled = [i for i in range(d.n_nodes)
                   if tuple(2 * int(k == i) for k in range(d.n_nodes))
                   in seen]
        for i in doubled:
            two_ai = tuple(2 * int(k == i) for k in range(d.n_nodes))
            for g in self.sigma:
                if g == two_ai:
                    continue
                v = d.pairing_weight(i, g)
                if v % 2 or v > 0:
                    rep.pairwise_doubled.append(
                        {"alpha": d.node_id(i), "gamma": list(g),
                         "pairing": v})

        for g in self.sigma:
            sup = sorted(support(g))
            if (len(sup) == 2 and g[sup[0]] == 1 and g[sup[1]] == 1
                    and d.orthogonal(*sup)):
                i, j = sup
                for h in self.sigma:
                    vi, vj = d.pairing_weight(i, h), d.pairing_weight(j, h)
                    if vi != vj:
                        rep.pairwise_orthogonal.append(
                            {"pair": [d.node_id(i), d.node_id(j)],
                             "gamma": list(h), "pairings": [vi, vj]})

        for g in self.sigma:
            sup = support(g)
            trace = frozenset(self.sp & sup)
            options = rankone.admissible_traces(d, g)
            if trace not in options:
                rep.rank_one.append(
                    {"gamma": list(g), "reason": "trace",
                     "actual_trace": sorted(d.node_id(i) for i in trace),
                     "admissible_traces": [sorted(d.node_id(i) for i in t)
                                           for t in sorted(options, key=sorted)]})
                continue
            bad = [i for i in self.sp - sup if d.pairing_weight(i, g)]
            if bad:
                rep.rank_one.append(
                    {"gamma": list(g), "reason": "parabolic-pairing",
                     "nodes": [d.node_id(i) for i in bad]})

        if self._cache["check_independent"] and self.sigma:
            rep.dependent = _matrix_rank(self.sigma) < len(self.sigma)

        self._cache["report"] = rep
        return rep

    @property
    def is_valid(self) -> bool:
        return self.validate().ok

    # -- colours ------------------------------------------------------------

    @property
    def colours(self) -> tuple[Colour, ...]:
        if "colours" not in self._cache:
            self._cache["colours"] = self._build_colours()
        return self._cache["colours"]

    def _build_colours(self):
        d = self.diagram
        active = [i for i in range(d.n_nodes) if i not in self.sp]
        parent = {i: i for i in active}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        sig = set(self.sigma)
        for i in active:
            for j in active:
                if j > i and d.orthogonal(i, j):
                    w = tuple(int(k in (i, j)) for k in range(d.n_nodes))
                    if w in sig:
                        parent[find(i)] = find(j)
        classes: dict[int, set] = {}
        for i in active:
            classes.setdefault(find(i), set()).add(i)
        out = []
        for members in classes.values():
            rep0 = min(members)
            w2 = tuple(2 * int(k == rep0) for k in range(d.n_nodes))
            out.append(Colour(frozenset(members), w2 in sig))
        out.sort(key=lambda c: c.rep())
        return tuple(out)

    def rho(self, colour: Colour, gamma) -> int:
        """Value of the colour's functional on a weight."""
        d = self.diagram
        vals = set()
        for a in colour.nodes:
            v = d.pairing_weight(a, gamma)
            if colour.doubled:
                assert v % 2 == 0, "half-pairing must be integral"
                v //= 2
            vals.add(v)
        assert len(vals) == 1, "colour members must pair equally"
        return vals.pop()

    @property
    def rho_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Rows per colour (in colour order), columns per spherical root."""
        if "rho" not in self._cache:
            self._cache["rho"] = tuple(
                tuple(self.rho(c, g) for g in self.sigma)
                for c in self.colours)
        return self._cache["rho"]

    # -- derived predicates ---------------------------------------------------

    @property
    def sigma_support(self) -> frozenset:
        out = frozenset()
        for g in self.sigma:
            out |= support(g)
        return out

    @property
    def is_cuspidal(self) -> bool:
        return self.sigma_support == frozenset(range(self.diagram.n_nodes))

    def root_label(self, gamma) -> str | None:
        """Rank-one row naming this root under the system's parabolic set."""
        trace = self.sp & support(gamma)
        return rankone.rank1_label(self.diagram, gamma, trace)

    def doubling_realizable(self, gamma) -> bool:
        """True when 2*gamma is itself realizable with the same trace."""
        two = tuple(2 * c for c in gamma)
        trace = frozenset(self.sp & support(gamma))
        return trace in rankone.admissible_traces(self.diagram, two)

    @property
    def is_strict(self) -> bool:
        return not any(self.doubling_realizable(g) for g in self.sigma)

    # -- transforms ----------------------------------------------------------

    def permuted(self, perm) -> "SphericalSystem":
        d = self.diagram
        return SphericalSystem(
            d, frozenset(perm[i] for i in self.sp),
            tuple(d.permute_weight(perm, g) for g in self.sigma),
            check_independent=self._cache["check_independent"])

    def canonical_key(self):
        """Smallest (sp, sigma) over all diagram automorphisms."""
        if "canon" not in self._cache:
            d = self.diagram
            best = None
            for perm in d.automorphisms:
                key = (tuple(sorted(perm[i] for i in self.sp)),
                       tuple(sorted(d.permute_weight(perm, g)
                                    for g in self.sigma)))
                if best is None or key < best:
                    best = key
            self._cache["canon"] = best
        return self._cache["canon"]

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        d = self.diagram
        return {
            "diagram": d.to_json(),
            "sp": [d.node_id(i) for i in sorted(self.sp)],
            "sigma": [{d.node_id(i): c for i, c in enumerate(g) if c}
                      for g in self.sigma],
        }

    @classmethod
    def from_json(cls, data) -> "SphericalSystem":
        if isinstance(data, str):
            data = json.loads(data)
        d = Diagram.from_json(data["diagram"])
        return cls(d, data.get("sp", ()), data.get("sigma", ()))
