"""Dynkin diagrams over the simple families A..G with exact integer Cartan data.

Nodes are addressed as (component, position) pairs with 1-based Bourbaki
positions; internally everything is flattened to 0-based indices into a
block-diagonal Cartan matrix.  Weights (elements of the root lattice) are
plain integer tuples aligned with the node order.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache

_FAMILIES = "ABCDEFG"

# Admissible ranks after canonicalization.
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class DiagramError(ValueError):
    """Component spec outside the simple families, or a bad node reference."""


def canonicalize_component(family: str, rank: int) -> list[tuple[str, int]]:
    """Resolve low-rank coincidences to a canonical list of components.

    B1 -> A1, C1 -> A1, C2 -> B2, D2 -> A1 A1, D3 -> A3.
    """
    family = family.upper()
    if family not in _FAMILIES or rank < 1:
        raise DiagramError(f"not a Dynkin component: {family}{rank}")
    if family == "B" and rank == 1:
        return [("A", 1)]
    if family == "C":
        if rank == 1:
            return [("A", 1)]
        if rank == 2:
            return [("B", 2)]
    if family == "D":
        if rank == 2:
            return [("A", 1), ("A", 1)]
        if rank == 3:
            return [("A", 3)]
        if rank == 1:
            raise DiagramError("D1 is not a Dynkin component")
    lo, hi = _RANK_RANGE[family]
    if rank < lo or (hi is not None and rank > hi):
        raise DiagramError(f"not a Dynkin component: {family}{rank}")
    return [(family, rank)]


def _component_cartan(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix A with A[i][j] = <alpha_i^vee, alpha_j>, 0-indexed."""
    n = rank
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def bond(i, j, ij=-1, ji=-1):
        a[i][j] = ij
        a[j][i] = ji

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B" and n >= 2:
            # alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2
            bond(n - 2, n - 1, ij=-1, ji=-2)
        if family == "C":
            # alpha_n long: <alpha_{n-1}^vee, alpha_n> = -2
            bond(n - 2, n - 1, ij=-2, ji=-1)
    elif family == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif family == "E":
        # chain 1-3-4-5-6(-7-8) plus 2-4, Bourbaki numbering
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for u, v in zip(chain, chain[1:]):
            bond(u - 1, v - 1)
        bond(2 - 1, 4 - 1)
    elif family == "F":
        bond(0, 1)
        bond(2, 3)
        # alpha_2 long, alpha_3 short
        bond(1, 2, ij=-1, ji=-2)
    elif family == "G":
        # alpha_1 short, alpha_2 long
        bond(0, 1, ij=-3, ji=-1)
    return a


# per-component automorphisms as permutations of 1-based positions
def _component_automorphisms(family: str, rank: int) -> list[dict[int, int]]:
    ident = {p: p for p in range(1, rank + 1)}
    auts = [ident]
    if family == "A" and rank >= 2:
        auts.append({p: rank + 1 - p for p in range(1, rank + 1)})
    elif family == "D":
        if rank == 4:
            auts = []
            for perm in itertools.permutations((1, 3, 4)):
                m = {2: 2}
                for src, dst in zip((1, 3, 4), perm):
                    m[src] = dst
                auts.append(m)
        else:
            swap = dict(ident)
            swap[rank - 1], swap[rank] = rank, rank - 1
            auts.append(swap)
    elif family == "E" and rank == 6:
        auts.append({1: 6, 6: 1, 3: 5, 5: 3, 4: 4, 2: 2})
    return auts


def parse_diagram(spec) -> "Diagram":
    """Build a diagram from 'B3', 'F4,F4' (case-insensitive) or [(family, rank)] pairs."""
    if isinstance(spec, Diagram):
        return spec
    if isinstance(spec, str):
        parts = [p.strip() for p in spec.split(",") if p.strip()]
        comps = []
        for p in parts:
            fam, num = p[:1], p[1:]
            if not num.isdigit():
                raise DiagramError(f"cannot parse component {p!r}")
            comps.append((fam.upper(), int(num)))
        return Diagram(comps)
    return Diagram(spec)


class Diagram:
    """An immutable finite-type Dynkin diagram, possibly with several components.

    Components are canonicalized (see canonicalize_component) and sorted, so
    two diagrams with the same content compare equal.
    """

    __slots__ = ("components", "_cache")

    def __init__(self, components):
        flat: list[tuple[str, int]] = []
        for fam, rank in components:
            flat.extend(canonicalize_component(fam, int(rank)))
        flat.sort()
        object.__setattr__(self, "components", tuple(flat))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"Diagram({self.spec()!r})"

    def spec(self) -> str:
        return ",".join(f"{f}{r}" for f, r in self.components)

    # -- nodes -------------------------------------------------------------

    @property
    def nodes(self) -> tuple[tuple[int, int], ...]:
        """All (component, position) pairs in index order."""
        if "nodes" not in self._cache:
            out = []
            for ci, (_f, rank) in enumerate(self.components):
                out.extend((ci, p) for p in range(1, rank + 1))
            self._cache["nodes"] = tuple(out)
        return self._cache["nodes"]

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    def node_index(self, node) -> int:
        """Index of a node given as (ci, pos) or a 'ci.pos' string."""
        if isinstance(node, str):
            ci, _, pos = node.partition(".")
            node = (int(ci), int(pos))
        if "index" not in self._cache:
            self._cache["index"] = {nd: i for i, nd in enumerate(self.nodes)}
        try:
            return self._cache["index"][tuple(node)]
        except KeyError:
            raise DiagramError(f"no node {node} in {self.spec()}") from None

    def node_id(self, i: int) -> str:
        ci, pos = self.nodes[i]
        return f"{ci}.{pos}"

    def component_nodes(self, ci: int) -> range:
        start = sum(r for _f, r in self.components[:ci])
        return range(start, start + self.components[ci][1])

    def component_of(self, i: int) -> int:
        return self.nodes[i][0]

    # -- Cartan pairings ---------------------------------------------------

    @property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """Block-diagonal Cartan matrix, cartan[i][j] = <alpha_i^vee, alpha_j>."""
        if "cartan" not in self._cache:
            n = self.n_nodes
            m = [[0] * n for _ in range(n)]
            off = 0
            for fam, rank in self.components:
                block = _component_cartan(fam, rank)
                for i in range(rank):
                    for j in range(rank):
                        m[off + i][off + j] = block[i][j]
                off += rank
            self._cache["cartan"] = tuple(tuple(row) for row in m)
        return self._cache["cartan"]

    def pairing(self, i: int, j: int) -> int:
        return self.cartan[i][j]

    def pairing_weight(self, i: int, w) -> int:
        """<alpha_i^vee, w> for a weight tuple w."""
        row = self.cartan[i]
        return sum(r * c for r, c in zip(row, w) if c)

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i][j] != 0

    def orthogonal(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i][j] == 0

    def simple_weight(self, i: int) -> tuple[int, ...]:
        return tuple(int(k == i) for k in range(self.n_nodes))

    @property
    def symmetrizers(self) -> tuple[Fraction, ...]:
        """Positive weights d_i making (d_i * cartan[i][j]) symmetric.

        Normalised so the first node of each component has weight 1; the
        ratios d_j/d_i = cartan[i][j]/cartan[j][i] along edges pin the rest.
        """
        if "symmetrizers" not in self._cache:
            a = self.cartan
            d: list[Fraction | None] = [None] * self.n_nodes
            for ci in range(len(self.components)):
                nodes = self.component_nodes(ci)
                d[nodes[0]] = Fraction(1)
                queue = [nodes[0]]
                while queue:
                    i = queue.pop()
                    for j in nodes:
                        if d[j] is None and a[i][j]:
                            d[j] = d[i] * a[i][j] / a[j][i]
                            queue.append(j)
            self._cache["symmetrizers"] = tuple(d)
        return self._cache["symmetrizers"]

    def inner(self, w1, w2) -> Fraction:
        """Weyl-invariant inner product of two weight tuples."""
        a = self.cartan
        d = self.symmetrizers
        total = Fraction(0)
        for i, c1 in enumerate(w1):
            if not c1:
                continue
            for j, c2 in enumerate(w2):
                if c2:
                    total += c1 * c2 * d[i] * a[i][j]
        return total

    # -- root system -------------------------------------------------------

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        if "posroots" not in self._cache:
            self._cache["posroots"] = _positive_roots(self.components)
        return self._cache["posroots"]

    def dim_flag(self, sp) -> int:
        """Number of positive roots whose support is not contained in sp.

        This is the dimension of the flag variety of the parabolic attached
        to the node set sp.
        """
        sp = frozenset(sp)
        count = 0
        for r in self.positive_roots:
            if any(c and i not in sp for i, c in enumerate(r)):
                count += 1
        return count

    # -- automorphisms -----------------------------------------------------

    @property
    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        """All diagram automorphisms as node-index permutations.

        Includes swaps of isomorphic components composed with the symmetry
        of each component (A_n flip, D_n fork swap, D4 triality, E6 flip).
        """
        if "auts" not in self._cache:
            self._cache["auts"] = self._build_automorphisms()
        return self._cache["auts"]

    def _build_automorphisms(self):
        comps = self.components
        groups: dict[tuple[str, int], list[int]] = {}
        for ci, key in enumerate(comps):
            groups.setdefault(key, []).append(ci)
        swap_choices = []
        for key, members in sorted(groups.items()):
            swap_choices.append([dict(zip(members, perm))
                                 for perm in itertools.permutations(members)])
        aut_choices = [_component_automorphisms(f, r) for f, r in comps]
        index = {nd: i for i, nd in enumerate(self.nodes)}
        perms = []
        for swaps in itertools.product(*swap_choices):
            cmap = {}
            for d in swaps:
                cmap.update(d)
            for pick in itertools.product(*aut_choices):
                perm = [0] * self.n_nodes
                for i, (ci, pos) in enumerate(self.nodes):
                    perm[i] = index[(cmap[ci], pick[ci][pos])]
                perms.append(tuple(perm))
        return tuple(sorted(set(perms)))

    def permute_weight(self, perm, w) -> tuple[int, ...]:
        out = [0] * len(w)
        for i, c in enumerate(w):
            if c:
                out[perm[i]] = c
        return tuple(out)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"components": [{"family": f, "rank": r} for f, r in self.components]}

    @classmethod
    def from_json(cls, data) -> "Diagram":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([(c["family"], c["rank"]) for c in data["components"]])


def support(w) -> frozenset:
    return frozenset(i for i, c in enumerate(w) if c)


def add_weights(a, b) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def scale_weight(k: int, w) -> tuple[int, ...]:
    return tuple(k * x for x in w)


@lru_cache(maxsize=None)
def _positive_roots(components) -> tuple[tuple[int, ...], ...]:
    """All positive roots by closing the simple roots under root strings.

    gamma + alpha_i is a root iff p - <gamma, alpha_i^vee> > 0 where p is the
    largest k with gamma - k alpha_i a root; heights grow by one per layer so
    p is always known when needed.
    """
    d = Diagram.__new__(Diagram)
    object.__setattr__(d, "components", components)
    object.__setattr__(d, "_cache", {})
    n = d.n_nodes
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for r in layer:
            for i in range(n):
                p = 0
                probe = list(r)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in roots:
                        break
                    p += 1
                if p - d.pairing_weight(i, r) > 0:
                    up = list(r)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        nxt.append(t)
        layer = nxt
    return tuple(sorted(roots))
