"""Counting-level combinatorics of admissible Z/7-covers of stable genus-2 curves.

A cover is described by its base dual graph, an index (1 or 7) on every
node, and for each base component whether its preimage splits into 7
components or stays irreducible.  From this data the cover's dual graph is
synthesized (vertex genera from Riemann-Hurwitz, edges lifted according to
the node indices) whenever connectivity or Betti numbers are needed.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import permutations, product

import networkx as nx

P = 7


# dual graphs -----------------------------------------------------------------


@dataclass(frozen=True)
class DualGraph:
    genera: tuple  # geometric genus of each vertex (vertex ids are positions)
    edges: tuple  # pairs (u, v); u == v is a self-node

    def __post_init__(self):
        n = len(self.genera)
        if any(g < 0 for g in self.genera):
            raise ValueError("vertex genera must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} references a missing vertex")

    @property
    def n_vertices(self):
        return len(self.genera)

    def adjacency(self):
        adj = {v: set() for v in range(self.n_vertices)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def components(self, subset=None):
        verts = set(range(self.n_vertices)) if subset is None else set(subset)
        adj = self.adjacency()
        comps, seen = [], set()
        for s in sorted(verts):
            if s in seen:
                continue
            stack, comp = [s], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(y for y in adj[x] if y in verts and y not in comp)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def n_components(self):
        return len(self.components())

    def is_connected(self, subset=None):
        return len(self.components(subset)) == 1

    def betti(self):
        return len(self.edges) - self.n_vertices + self.n_components()

    def relabel(self, perm):
        """Vertex v becomes perm[v]."""
        genera = [0] * self.n_vertices
        for v, g in enumerate(self.genera):
            genera[perm[v]] = g
        return DualGraph(tuple(genera), tuple((perm[u], perm[v]) for u, v in self.edges))


def arithmetic_genus(g):
    return sum(g.genera) + len(g.edges) - g.n_vertices + g.n_components()


def cycle_graph(n, genus=0):
    return DualGraph((genus,) * n, tuple((i, (i + 1) % n) for i in range(n)))


@dataclass(frozen=True)
class GraphAutomorphism:
    vertex_perm: tuple  # vertex v -> vertex_perm[v]

    def __call__(self, v):
        return self.vertex_perm[v]

    def power(self, k):
        out = list(range(len(self.vertex_perm)))
        for _ in range(k % self.order()):
            out = [self.vertex_perm[v] for v in out]
        return GraphAutomorphism(tuple(out))

    def order(self):
        n = len(self.vertex_perm)
        k, cur = 1, list(self.vertex_perm)
        while cur != list(range(n)):
            cur = [self.vertex_perm[v] for v in cur]
            k += 1
        return k

    def orbits(self):
        seen, out = set(), []
        for v in range(len(self.vertex_perm)):
            if v in seen:
                continue
            orb, x = [], v
            while x not in orb:
                orb.append(x)
                x = self.vertex_perm[x]
            seen.update(orb)
            out.append(tuple(orb))
        return out

    def preserves(self, g):
        key = lambda e: (min(e), max(e))
        before = Counter(key(e) for e in g.edges)
        after = Counter(key((self(u), self(v))) for u, v in g.edges)
        return before == after and all(
            g.genera[v] == g.genera[self(v)] for v in range(g.n_vertices)
        )


class LemmaViolation(RuntimeError):
    pass


def fundamental_subgraph(g, s, p=P):
    """Connected vertex set S, disjoint from s(S), whose translates cover g.

    Searches transversals of the s-orbits (one vertex per orbit) in
    lexicographic order; such an S satisfies S & s^i(S) = {} for 0 < i < p.
    """
    if len(s.vertex_perm) != g.n_vertices:
        raise ValueError("automorphism and graph have different vertex counts")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if not s.preserves(g):
        raise ValueError("permutation is not a graph automorphism")
    if s.order() != p:
        raise ValueError(f"automorphism must have order {p}")
    orbits = s.orbits()
    if any(len(o) != p for o in orbits):
        raise ValueError("automorphism must act without fixed points")
    for choice in product(*[sorted(o) for o in orbits]):
        if g.is_connected(choice):
            return frozenset(choice)
    raise LemmaViolation("no connected fundamental subgraph exists")


def check_fundamental_subgraph(g, s, sub, p=P):
    """Postconditions of fundamental_subgraph, checked from scratch."""
    if not sub or not g.is_connected(sub):
        return False
    image = {s(v) for v in sub}
    if image & set(sub):
        return False
    covered = set()
    for i in range(p):
        si = s.power(i)
        covered |= {si(v) for v in sub}
    return covered == set(range(g.n_vertices))


# counts ----------------------------------------------------------------------


@dataclass(frozen=True)
class CoverCounts:
    n1: int  # base nodes of index 1
    n7: int  # base nodes of index 7
    comp1: int  # base components whose preimage has 7 components
    comp7: int  # base components whose preimage is irreducible
    r: int = 0  # smooth fixed points of sigma
    g: int = 2  # base arithmetic genus

    def __post_init__(self):
        if min(self.n1, self.n7, self.comp1, self.comp7, self.r) < 0:
            raise ValueError("counts must be nonnegative")


def hurwitz_cover_genus(gN, r, n7):
    """p_a of the normalized cover: p_a - 1 = 7 (gN - 1) + 3 r + 6 n7."""
    if min(r, n7) < 0:
        raise ValueError("counts must be nonnegative")
    return 7 * (gN - 1) + 3 * r + 6 * n7 + 1


def cover_genus(g, r=0):
    """p_a of the cover from the base arithmetic genus: 7 (g - 1) + 3 r + 1."""
    return 7 * (g - 1) + 3 * r + 1


def check_star_star(c):
    return c.r == 0 and c.comp1 == c.n1


def torus_dims(c):
    """(dim of the toric part upstairs, downstairs)."""
    return (
        (c.n7 - c.comp7) + 7 * (c.n1 - c.comp1) + 1,
        (c.n7 - c.comp7) + (c.n1 - c.comp1) + 1,
    )


def prym_dim(g):
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    return 6 * g - 6


def polarization_type(g):
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    return (1,) * (5 * g - 5) + (7,) * (g - 1)


# group-theoretic counts ---------------------------------------------------------


def x_of_e_kernel_order(p=P):
    """Number of points x of R^2/Z^2 with p x = 0, by scanning the 1/p^2 grid."""
    n = p * p
    count = 0
    for u in range(n):
        for v in range(n):
            x = (Fraction(u, n), Fraction(v, n))
            if all((p * t).denominator == 1 for t in x):
                count += 1
    return count


def _perm_order(perm):
    k, cur = 1, perm
    ident = tuple(range(len(perm)))
    while cur != ident:
        cur = tuple(perm[i] for i in cur)
        k += 1
    return k


def _cyclic_subgroup(perm):
    out, cur = set(), perm
    ident = tuple(range(len(perm)))
    while cur not in out:
        out.add(cur)
        cur = tuple(perm[i] for i in cur)
    out.add(ident)
    return frozenset(out)


def sylow_7_subgroup_count_of_S7():
    subgroups = {
        _cyclic_subgroup(perm)
        for perm in permutations(range(7))
        if _perm_order(perm) == 7
    }
    return len(subgroups)


def order_p_subgroups_of_plane(p=P):
    """Number of order-p subgroups of (Z/p)^2, i.e. lines through the origin."""
    lines = set()
    for u in range(p):
        for v in range(p):
            if (u, v) != (0, 0):
                lines.add(frozenset(((k * u) % p, (k * v) % p) for k in range(p)))
    return len(lines)


# base curves and the fibre classification -------------------------------------


class BaseType(Enum):
    SMOOTH = "smooth genus 2"
    ELLIPTIC_ONE_NODE = "irreducible elliptic, one node"
    RATIONAL_TWO_NODES = "irreducible rational, two nodes"
    TWO_ELLIPTIC = "two elliptic, one point"
    ELLIPTIC_NODAL_RATIONAL = "elliptic + nodal rational, one point"
    TWO_NODAL_RATIONAL = "two nodal rational, one point"
    TWO_RATIONAL_THREE_POINTS = "two rational, three points"

    @property
    def graph(self):
        return _BASE_GRAPHS[self]


_BASE_GRAPHS = {
    BaseType.SMOOTH: DualGraph((2,), ()),
    BaseType.ELLIPTIC_ONE_NODE: DualGraph((1,), ((0, 0),)),
    BaseType.RATIONAL_TWO_NODES: DualGraph((0,), ((0, 0), (0, 0))),
    BaseType.TWO_ELLIPTIC: DualGraph((1, 1), ((0, 1),)),
    # vertex 0 elliptic, vertex 1 rational with a node
    BaseType.ELLIPTIC_NODAL_RATIONAL: DualGraph((1, 0), ((0, 1), (1, 1))),
    BaseType.TWO_NODAL_RATIONAL: DualGraph((0, 0), ((0, 1), (0, 0), (1, 1))),
    BaseType.TWO_RATIONAL_THREE_POINTS: DualGraph((0, 0), ((0, 1), (0, 1), (0, 1))),
}


@dataclass(frozen=True)
class Candidate:
    base: BaseType
    indices: tuple  # index (1 or 7) of each base edge
    split: tuple  # per base vertex: True if the preimage has 7 components
    shifts: tuple  # per base edge: cyclic gluing shift used when both ends split
    cover: DualGraph | None = None
    counts: CoverCounts | None = None
    rejection: str | None = None
    label: str | None = None


def _branch_points(base, indices, v):
    # each index-7 node contributes one branch point per branch on v
    n = 0
    for (a, b), idx in zip(base.edges, indices):
        if idx == 7:
            n += (a == v) + (b == v)
    return n


def _synthesize_cover(base, indices, split, shifts):
    """Dual graph of the cover, or None if the data is not realizable."""
    genera, ids = [], {}
    for v, g in enumerate(base.genera):
        b = _branch_points(base, indices, v)
        if b == 1:
            return None  # a cyclic cover cannot branch over a single point
        if split[v]:
            if b:
                return None  # ramified components cannot split
            ids[v] = [len(genera) + k for k in range(P)]
            genera.extend([g] * P)
        else:
            if b == 0 and g == 0:
                return None  # P^1 has no connected unramified cyclic cover
            gt = 7 * (g - 1) + 3 * b + 1
            ids[v] = [len(genera)]
            genera.append(gt)
    edges = []
    for (a, b), idx, k in zip(base.edges, indices, shifts):
        if idx == 7:
            if split[a] or split[b]:
                return None
            edges.append((ids[a][0], ids[b][0]))
            continue
        for t in range(P):
            u = ids[a][t] if split[a] else ids[a][0]
            w = ids[b][(t + k) % P] if split[b] else ids[b][0]
            edges.append((u, w))
    return DualGraph(tuple(genera), tuple(edges))


def _counts(base, indices, split):
    n1 = sum(1 for i in indices if i == 1)
    return CoverCounts(
        n1=n1,
        n7=len(indices) - n1,
        comp1=sum(split),
        comp7=len(split) - sum(split),
        r=0,
        g=arithmetic_genus(base),
    )


def _label(base, indices, split):
    if base is BaseType.ELLIPTIC_ONE_NODE:
        return "i"
    if base is BaseType.TWO_ELLIPTIC:
        return "ii"
    if base is BaseType.ELLIPTIC_NODAL_RATIONAL:
        return "iv" if all(i == 1 for i in indices) else "iii"
    return None


def enumerate_candidates(base):
    """Every index assignment, splitting pattern and gluing shift, with the verdict."""
    graph = base.graph
    n_e, n_v = len(graph.edges), graph.n_vertices
    for indices in product((1, 7), repeat=n_e):
        for split in product((False, True), repeat=n_v):
            shift_ranges = [
                range(P) if idx == 1 and split[a] and split[b] else range(1)
                for (a, b), idx in zip(graph.edges, indices)
            ]
            for shifts in product(*shift_ranges):
                yield _judge(base, indices, split, shifts)


def _judge(base, indices, split, shifts):
    graph = base.graph
    mk = lambda **kw: Candidate(base, indices, split, shifts, **kw)
    # every fibre cover over X(E) has a node of index 1
    if 1 not in indices:
        return mk(rejection="no node of index 1")
    # on a component with nodes of both indices, index-1 nodes join two components
    for v in range(graph.n_vertices):
        here = [(e, i) for e, i in zip(graph.edges, indices) if v in e]
        if {i for _, i in here} == {1, 7} and any(
            i == 1 and e[0] == e[1] for e, i in here
        ):
            return mk(rejection="index-1 self-node on a mixed-index component")
    cover = _synthesize_cover(graph, indices, split, shifts)
    if cover is None:
        return mk(rejection="not realizable as a cyclic cover")
    counts = _counts(graph, indices, split)
    if not cover.is_connected():
        return mk(cover=cover, counts=counts, rejection="cover is disconnected")
    if not check_star_star(counts):
        return mk(cover=cover, counts=counts, rejection="comp1 != n1")
    if cover.betti() > graph.betti():
        return mk(cover=cover, counts=counts, rejection="cover graph has extra loops: toric Prym")
    return mk(cover=cover, counts=counts, label=_label(base, indices, split))


@dataclass(frozen=True)
class FiberResult:
    base: BaseType
    types: tuple  # sorted distinct labels
    witnesses: tuple  # surviving candidates


def classify_fiber(base):
    survivors = [c for c in enumerate_candidates(base) if c.rejection is None]
    return FiberResult(base, tuple(sorted({c.label for c in survivors}, key=_ROMAN.index)), tuple(survivors))


_ROMAN = ["i", "ii", "iii", "iv"]

PARAMETRIZATION = {
    "i": "a curve (the free point q on E, up to translation)",
    "ii": "pairs (E1, order-7 subgroup of E1)",
    "iii": "unique",
    "iv": "unique",
}
STRATA = {"S1": ("i", "iv"), "S2": ("ii", "iii", "iv")}


@dataclass(frozen=True)
class FiberCatalog:
    by_base: dict  # BaseType -> tuple of labels
    types: tuple
    unique: tuple  # labels with a single cover up to isomorphism
    parametrization: dict = field(default_factory=lambda: dict(PARAMETRIZATION))
    strata: dict = field(default_factory=lambda: dict(STRATA))

    @property
    def nonempty_bases(self):
        return tuple(b for b, t in self.by_base.items() if t)

    def intersection(self):
        return tuple(t for t in self.strata["S1"] if t in self.strata["S2"])


def _as_nx(g):
    mg = nx.MultiGraph()
    mg.add_nodes_from((v, {"genus": gv}) for v, gv in enumerate(g.genera))
    mg.add_edges_from(g.edges)
    return mg


def isomorphic(g, h):
    """Dual graphs agree up to relabeling, genera included."""
    return nx.is_isomorphic(
        _as_nx(g), _as_nx(h), node_match=lambda x, y: x["genus"] == y["genus"]
    )


def cover_classes(cands):
    """Partition covers into isomorphism classes of their dual graphs."""
    classes = []
    for c in cands:
        for cls in classes:
            if isomorphic(cls[0].cover, c.cover):
                cls.append(c)
                break
        else:
            classes.append([c])
    return classes


def base_moduli(c):
    """Dimension of the family of base curves with the fibre curve E held fixed.

    Genus-1 components contribute their j-invariant plus marked points modulo
    translation, except one split genus-1 component whose copies are E;
    genus-0 components contribute marked points minus 3.
    """
    graph = c.base.graph
    special = Counter()
    for u, v in graph.edges:
        special[u] += 1
        special[v] += 1
    fixed = next(
        (v for v in range(graph.n_vertices) if graph.genera[v] == 1 and c.split[v]), None
    )
    dim = 0
    for v, g in enumerate(graph.genera):
        if g == 1:
            dim += (0 if v == fixed else 1) + max(special[v] - 1, 0)
        elif g == 0:
            dim += max(special[v] - 3, 0)
        else:
            dim += 3 * g - 3 + special[v]
    return dim


def fiber_catalog():
    results = {b: classify_fiber(b) for b in BaseType}
    by_base = {b: r.types for b, r in results.items()}
    all_types = tuple(sorted({t for ts in by_base.values() for t in ts}, key=_ROMAN.index))
    unique = []
    for label in all_types:
        cands = [c for r in results.values() for c in r.witnesses if c.label == label]
        # one rigid base and one cover graph up to isomorphism
        if all(base_moduli(c) == 0 for c in cands) and len(cover_classes(cands)) == 1:
            unique.append(label)
    return FiberCatalog(by_base=by_base, types=all_types, unique=tuple(unique))
