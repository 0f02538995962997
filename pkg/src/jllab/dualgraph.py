"""Dual graphs with edge thicknesses and their component (critical) groups.

A length graph is a finite connected multigraph whose edges carry positive
integer lengths.  Its component group is the critical group of the unit
subdivision: cokernel of the Laplacian acting on degree-zero divisors.  The
order is cross-checked against the spanning tree count (matrix-tree) on
every construction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .abgroup import FinAbGroup, determinant


@dataclass(frozen=True)
class LengthGraph:
    """Multigraph with positive integer edge lengths.

    vertices: tuple of hashable labels (order is canonical for matrices)
    edges: tuple of (u, v, length)
    """

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        for u, v, l in self.edges:
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u}, {v}) references unknown vertex")
            if u == v:
                raise ValueError("loops are not allowed in a dual graph")
            if int(l) < 1:
                raise ValueError("edge lengths must be positive integers")

    @classmethod
    def build(cls, vertices, edges):
        return cls(tuple(vertices), tuple((u, v, int(l)) for u, v, l in edges))

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    def degree(self, v):
        return sum(1 for a, b, _ in self.edges if v in (a, b))

    def neighbors(self, v):
        out = []
        for a, b, _ in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        while frontier:
            v = frontier.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == len(self.vertices)

    def betti_number(self) -> int:
        if not self.is_connected():
            raise ValueError("Betti number computed for connected graphs only")
        return self.n_edges - self.n_vertices + 1

    def to_json(self):
        return {
            "vertices": [str(v) for v in self.vertices],
            "edges": [[str(u), str(v), int(l)] for u, v, l in self.edges],
        }

    def to_dot(self, name="G"):
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for u, v, l in self.edges:
            lines.append(f'  "{u}" -- "{v}" [len={l}];')
        lines.append("}")
        return "\n".join(lines)


def subdivide(g: LengthGraph) -> LengthGraph:
    """Replace each edge of length l by a chain of l unit edges.

    Chain vertices are named "{u}|{v}|{edge_index}|{position}", position
    counted from the u end starting at 1, so callers can address them.
    """
    verts = list(g.vertices)
    edges = []
    for k, (u, v, l) in enumerate(g.edges):
        prev = u
        for i in range(1, l):
            w = f"{u}|{v}|{k}|{i}"
            verts.append(w)
            edges.append((prev, w, 1))
            prev = w
        edges.append((prev, v, 1))
    return LengthGraph.build(verts, edges)


def chain_vertex(g: LengthGraph, edge_index: int, position: int):
    """Label of a subdivision vertex of edge edge_index (1-based position)."""
    u, v, l = g.edges[edge_index]
    if not 1 <= position <= l - 1:
        raise ValueError("position must lie strictly inside the chain")
    return f"{u}|{v}|{edge_index}|{position}"


def laplacian(g: LengthGraph):
    """Combinatorial Laplacian of a unit graph (lengths must all be 1)."""
    idx = {v: i for i, v in enumerate(g.vertices)}
    n = len(g.vertices)
    m = [[0] * n for _ in range(n)]
    for u, v, l in g.edges:
        if l != 1:
            raise ValueError("laplacian expects a unit (subdivided) graph")
        i, j = idx[u], idx[v]
        m[i][i] += 1
        m[j][j] += 1
        m[i][j] -= 1
        m[j][i] -= 1
    return m


def spanning_tree_count(g: LengthGraph) -> int:
    """Matrix-tree count of the unit subdivision."""
    sg = subdivide(g)
    lap = laplacian(sg)
    reduced = [row[1:] for row in lap[1:]]
    return determinant(reduced)


@dataclass
class CriticalGroupResult:
    graph: LengthGraph           # original graph
    subdivided: LengthGraph
    group: FinAbGroup            # generators: subdivided vertices minus base
    base_vertex: object

    def class_of(self, divisor: dict):
        """Group element of a degree-zero divisor on subdivided vertices."""
        vs = self.subdivided.vertices
        vset = set(vs)
        total = 0
        for v, c in divisor.items():
            if v not in vset:
                raise ValueError(f"divisor supported on unknown vertex {v!r}")
            total += c
        if total != 0:
            raise ValueError("divisor must have degree zero")
        user = [divisor.get(v, 0) for v in vs[1:]]
        return self.group.element_from_user(user)


def critical_group(g: LengthGraph) -> CriticalGroupResult:
    """Critical group of the unit subdivision of g.

    Presented on the subdivided vertices minus a base vertex (degree-zero
    divisors in the basis v - base), with relations the Laplacian rows.
    The group order is cross-checked against the spanning tree count.
    """
    if not g.is_connected():
        raise ValueError("critical group needs a connected graph")
    sg = subdivide(g)
    lap = laplacian(sg)
    # each Laplacian row sums to zero, so dropping the base column expresses
    # it in the basis (v_i - v_0)
    relations = [row[1:] for row in lap]
    group = FinAbGroup.from_relations(len(sg.vertices) - 1, relations)
    trees = spanning_tree_count(g)
    assert group.is_finite and group.order == trees, (
        f"critical group order {group.invariant_factors} disagrees with "
        f"spanning tree count {trees}"
    )
    return CriticalGroupResult(graph=g, subdivided=sg, group=group, base_vertex=sg.vertices[0])


def discrete_log(group: FinAbGroup, generator, target):
    """Smallest k >= 0 with k * generator == target in a finite cyclic span."""
    order = group.element_order(generator)
    acc = group.zero
    for k in range(order):
        if acc == group.reduce(target):
            return k
        acc = group.add(acc, generator)
    raise ValueError("target is not a multiple of the generator")


# ---------------------------------------------------------------------------
# the two-vertex degenerating family

def family_graph(n: int, m: int) -> LengthGraph:
    """Two components Z, Zp crossing in n points, two of thickness m and
    n - 2 of thickness 1.  Edges 0 and 1 are the thick ones."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 crossing points and thickness m >= 1")
    edges = [("Z", "Zp", m), ("Z", "Zp", m)] + [("Z", "Zp", 1)] * (n - 2)
    return LengthGraph.build(("Z", "Zp"), edges)


def family_chain_labels(n: int, m: int):
    """Vertex labels for the two thick chains of family_graph(n, m).

    Returns (e_labels, g_labels): e_labels[i] is the i-th component of the
    first chain (1-based, counted from Z), endpoints included, so
    e_labels[1] .. e_labels[m-1] name the chain interior.
    """
    g = family_graph(n, m)
    e_labels = {i: chain_vertex(g, 0, i) for i in range(1, m)}
    g_labels = {i: chain_vertex(g, 1, i) for i in range(1, m)}
    return e_labels, g_labels


def family_group_order(n: int, m: int) -> int:
    """Closed-form component group order m*(m*(n-2)+2); equals the spanning
    tree count sum_i prod_{j != i} m_j of the thickness multiset."""
    return m * (m * (n - 2) + 2)


def family_group(n: int, m: int):
    """Closed-form description of the family's component group.

    Returns (order, coords) where the group is cyclic of the given order,
    generated by the class e_{m-1} = [E_{m-1}] - [Zp], and coords maps the
    named degree-zero classes to multiples of that generator:
      z            -> m                       (class of Z - Zp)
      ("e", i)     -> m - i                   (class of E_i - Zp)
      ("g", i)     -> i*(n*m + 1) - (2*i - 1)*m  (class of G_i - Zp)
    For m == 1 there are no chain components; the group is Z/n generated by
    z itself and coords contains only z -> 1.
    """
    order = family_group_order(n, m)
    if m == 1:
        return order, {"z": 1}
    coords = {"z": m}
    for i in range(1, m):
        coords[("e", i)] = m - i
        coords[("g", i)] = i * (n * m + 1) - (2 * i - 1) * m
    return order, coords
