"""Quotient of the Bruhat-Tits tree for GL_2 over F_q[T] at square-free
level, computed layer by layer through finite matrix group actions on
P^1(A/n).

Layer i vertices are orbits of the level-i acting group; layer-i edges are
orbits of the intersection with the next group and connect the containing
vertex orbits.  Once consecutive layer partitions agree (confirmed twice)
the quotient continues as infinite half-lines, one per cusp; peeling those
half-lines off leaves the finite dual graph with its edge thicknesses
(stabilizer order divided by q - 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import FiniteField, Poly, ResidueRing
from .dualgraph import LengthGraph


# ---------------------------------------------------------------------------
# acting groups

def acting_group_order(q: int, i: int) -> int:
    """Abstract order of the level-i acting group.

    i == 0: GL_2(F_q); i >= 1: upper triangular matrices over F_q[T] with
    unit diagonal entries and deg(b) <= i.
    """
    if i == 0:
        return (q * q - 1) * (q * q - q)
    return (q - 1) ** 2 * q ** (i + 1)


def edge_group_order(q: int, i: int) -> int:
    """Order of the intersection of the level-i and level-(i+1) groups:
    the Borel of GL_2(F_q) for i == 0, the level-i group itself after."""
    if i == 0:
        return q * (q - 1) ** 2
    return acting_group_order(q, i)


def acting_group_generators(field: FiniteField, i: int, max_b_degree=None):
    """Generating matrices (2x2, entries in F_q[T]) for the level-i group.

    For orbit computations mod n only b mod n matters, so callers may cap
    the unipotent generators at max_b_degree = deg(n) - 1.
    """
    one = Poly.one(field)
    zero = Poly.zero(field)
    g = Poly.constant(field, field.multiplicative_generator)
    if i == 0:
        return [
            ((one, one), (zero, one)),
            ((one, zero), (one, one)),
            ((g, zero), (zero, one)),
        ]
    top = i if max_b_degree is None else min(i, max_b_degree)
    gens = [
        ((g, zero), (zero, one)),
        ((one, zero), (zero, g)),
    ]
    for j in range(top + 1):
        gens.append(((one, Poly.T(field) ** j), (zero, one)))
    return gens


def edge_group_generators(field: FiniteField, i: int, max_b_degree=None):
    """Generators of the level-i edge group (Borel for i == 0)."""
    if i == 0:
        one = Poly.one(field)
        zero = Poly.zero(field)
        g = Poly.constant(field, field.multiplicative_generator)
        return [
            ((g, zero), (zero, one)),
            ((one, zero), (zero, g)),
            ((one, one), (zero, one)),
        ]
    return acting_group_generators(field, i, max_b_degree)


def enumerate_group_closure(gens, i: int):
    """All elements generated by gens inside the level-i shape (upper
    triangular with deg(b) <= i, or all of GL_2(F_q) for i == 0).

    Multiplicative closure at desk scale; used to certify the abstract
    group orders."""
    def key(m):
        return tuple(tuple(p.key() for p in row) for row in m)

    def mul(a, b):
        return tuple(
            tuple(
                a[r][0] * b[0][c] + a[r][1] * b[1][c] for c in range(2)
            )
            for r in range(2)
        )

    seen = {key(g): g for g in gens}
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                m = mul(a, g)
                k = key(m)
                if k not in seen:
                    seen[k] = m
                    nxt.append(m)
        frontier = nxt
    return list(seen.values())


# ---------------------------------------------------------------------------
# orbits

@dataclass
class LayerOrbits:
    layer: int
    group_order: int
    orbits: list            # list of frozensets of projective points
    sizes: list
    stabilizer_orders: list

    @property
    def partition(self):
        return frozenset(self.orbits)


def _orbits_under(ring: ResidueRing, gens, points):
    """Partition points into orbits via BFS closure under the generators."""
    reduced = [ring.reduce_matrix(g) for g in gens]
    remaining = dict.fromkeys(points)
    orbits = []
    while remaining:
        start = next(iter(remaining))
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for pt in frontier:
                for g in reduced:
                    img = ring.act(g, pt)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        for pt in orbit:
            del remaining[pt]
        orbits.append(frozenset(orbit))
    orbits.sort(key=lambda o: min(ring.point_key(p) for p in o))
    return orbits


def layer_orbits(ring: ResidueRing, i: int, points=None) -> LayerOrbits:
    """Vertex orbits of P^1(A/n) at layer i, with stabilizer orders from
    the abstract group order (orbit-stabilizer)."""
    field = ring.base
    q = field.size
    if points is None:
        points = ring.projective_line()
    cap = ring.modulus.degree - 1
    gens = acting_group_generators(field, i, max_b_degree=cap)
    orbits = _orbits_under(ring, gens, points)
    order = acting_group_order(q, i)
    sizes = [len(o) for o in orbits]
    stabs = []
    for s in sizes:
        if order % s:
            raise AssertionError("orbit size does not divide the group order")
        stabs.append(order // s)
    return LayerOrbits(i, order, orbits, sizes, stabs)


def edge_orbits(ring: ResidueRing, i: int, points=None):
    """Edge orbits at layer i and the edge group order."""
    field = ring.base
    q = field.size
    if points is None:
        points = ring.projective_line()
    cap = ring.modulus.degree - 1
    gens = edge_group_generators(field, i, max_b_degree=cap)
    orbits = _orbits_under(ring, gens, points)
    return orbits, edge_group_order(q, i)


# ---------------------------------------------------------------------------
# the quotient graph

@dataclass
class QuotientEdge:
    layer: int
    u: str                # vertex id in layer `layer`
    v: str                # vertex id in layer `layer + 1`
    stabilizer_order: int
    length: int


@dataclass
class QuotientGraph:
    q: int
    modulus: Poly
    layers: list                   # LayerOrbits for layers 0 .. stable + 1
    edges: list                    # QuotientEdge for layers 0 .. stable
    stable_layer: int              # first i with partitions i == i+1 == i+2
    tails: list                    # vertex ids at layer stable + 1 (half-lines)
    cusps: dict                    # label -> {"chain": [vertex ids by layer]}

    def vertex_id(self, layer: int, orbit_index: int) -> str:
        return f"L{layer}.{orbit_index}"

    def all_vertices(self):
        out = []
        for lo in self.layers:
            out.extend(self.vertex_id(lo.layer, k) for k in range(len(lo.orbits)))
        return out

    def neighbors(self, v):
        out = []
        for e in self.edges:
            if e.u == v:
                out.append(e.v)
            elif e.v == v:
                out.append(e.u)
        return out

    def to_json(self):
        return {
            "q": self.q,
            "modulus": self.modulus.to_json(),
            "stable_layer": self.stable_layer,
            "layers": [
                {
                    "layer": lo.layer,
                    "group_order": lo.group_order,
                    "orbit_sizes": lo.sizes,
                    "stabilizer_orders": lo.stabilizer_orders,
                }
                for lo in self.layers
            ],
            "edges": [
                [e.u, e.v, e.length, e.stabilizer_order] for e in self.edges
            ],
            "tails": list(self.tails),
            "cusps": {lab: info["chain"] for lab, info in self.cusps.items()},
        }


def build_quotient_graph(ring: ResidueRing, layer_bound=None) -> QuotientGraph:
    """Compute the quotient graph layer by layer until stabilization.

    Stabilization: orbit partitions of three consecutive layers agree; the
    default layer bound deg(n) + 4 always suffices for the levels handled
    here (a failure to stabilize raises).
    """
    field = ring.base
    q = field.size
    if layer_bound is None:
        layer_bound = ring.modulus.degree + 4
    points = ring.projective_line()

    layers = []
    stable = None
    for i in range(layer_bound + 3):
        layers.append(layer_orbits(ring, i, points))
        if len(layers) >= 3:
            a, b, c = layers[-3], layers[-2], layers[-1]
            if a.partition == b.partition == c.partition:
                stable = a.layer
                break
    if stable is None:
        raise RuntimeError(
            f"no stabilization within {layer_bound} layers at level {ring.modulus}"
        )

    kept = layers[: stable + 2]

    def locate(layer_index, pt):
        lo = kept[layer_index]
        for k, orbit in enumerate(lo.orbits):
            if pt in orbit:
                return k
        raise AssertionError("point missing from layer partition")

    qg = QuotientGraph(
        q=q,
        modulus=ring.modulus,
        layers=kept,
        edges=[],
        stable_layer=stable,
        tails=[],
        cusps={},
    )

    for i in range(stable + 1):
        eorbs, gorder = edge_orbits(ring, i, points)
        for o in eorbs:
            rep = min(o, key=ring.point_key)
            u = qg.vertex_id(i, locate(i, rep))
            v = qg.vertex_id(i + 1, locate(i + 1, rep))
            if gorder % len(o):
                raise AssertionError("edge orbit size does not divide the group order")
            stab = gorder // len(o)
            if stab % (q - 1) and q > 2:
                raise AssertionError("edge stabilizer not divisible by q - 1")
            qg.edges.append(
                QuotientEdge(layer=i, u=u, v=v, stabilizer_order=stab, length=stab // (q - 1))
            )

    top = stable + 1
    qg.tails = [qg.vertex_id(top, k) for k in range(len(kept[top].orbits))]

    # cusps: stabilized orbits; 2^s of them for n with s prime factors
    n_cusps = len(kept[top].orbits)
    if n_cusps != 2 ** len(ring.primes):
        raise AssertionError(
            f"expected {2 ** len(ring.primes)} cusps, found {n_cusps}"
        )
    qg.cusps = _label_cusps(ring, qg, locate)
    return qg


def _label_cusps(ring: ResidueRing, qg: QuotientGraph, locate):
    """Attach labels to the stabilized orbits via distinguished points.

    For level n = x*y the four cusps carry the labels [inf], [0], [x], [y]
    with representatives (1:0), (0:1), (1:x), (1:y); other levels get
    positional labels cusp0, cusp1, ...
    """
    field = ring.base
    one = Poly.one(field)
    zero = Poly.zero(field)
    reps = {}
    if len(ring.primes) == 2 and [p.degree for p in ring.primes] in ([1, 2], [2, 1]):
        x = min(ring.primes, key=lambda p: p.degree)
        y = max(ring.primes, key=lambda p: p.degree)
        reps = {
            "inf": (one, zero),
            "0": (zero, one),
            "x": (one, x),
            "y": (one, y),
        }
    else:
        pts = [min(o, key=ring.point_key) for o in qg.layers[-1].orbits]
        cusps = {}
        for k, _pt in enumerate(pts):
            chain = [qg.vertex_id(i, locate(i, _pt)) for i in range(len(qg.layers))]
            cusps[f"cusp{k}"] = {"chain": chain}
        return cusps

    cusps = {}
    seen_top = set()
    for label, (u, v) in reps.items():
        pt = ring.point_from_polys(u, v)
        chain = [qg.vertex_id(i, locate(i, pt)) for i in range(len(qg.layers))]
        if chain[-1] in seen_top:
            raise AssertionError("two cusp labels landed on the same half-line")
        seen_top.add(chain[-1])
        cusps[label] = {"chain": chain}
    return cusps


# ---------------------------------------------------------------------------
# peeling the half-lines

@dataclass
class DualGraphResult:
    graph: LengthGraph | None      # None when peeling consumes everything
    attachments: dict              # cusp label -> vertex of graph
    peeled: set

    @property
    def is_empty(self):
        return self.graph is None


def finite_dual_graph(qg: QuotientGraph) -> DualGraphResult:
    """Peel the infinite half-lines off the quotient graph.

    The top-layer vertices seed the ray set (each continues as an infinite
    half-line); a vertex joins the ray when it touches the ray and has
    exactly one remaining non-ray edge.  A genus-zero level peels away
    completely, reported via graph=None rather than an error.
    """
    vertices = qg.all_vertices()
    ray = set(qg.tails)
    changed = True
    while changed:
        changed = False
        for v in vertices:
            if v in ray:
                continue
            nbrs = qg.neighbors(v)
            ray_nbrs = sum(1 for w in nbrs if w in ray)
            if ray_nbrs and len(nbrs) - ray_nbrs == 1:
                ray.add(v)
                changed = True

    remaining = [v for v in vertices if v not in ray]

    def attachment(chain):
        for v in reversed(chain):
            if v not in ray:
                return v
        # whole chain peeled: the half-line continues through the peeled
        # region; BFS from the bottom chain vertex to the nearest surviving
        # vertex (None when that vertex is not unique)
        frontier = {chain[0]}
        seen = set(frontier)
        while frontier:
            cands = set()
            nxt = set()
            for u in frontier:
                for w in qg.neighbors(u):
                    if w in seen:
                        continue
                    seen.add(w)
                    (cands if w not in ray else nxt).add(w)
            if cands:
                return cands.pop() if len(cands) == 1 else None
            frontier = nxt
        return None

    if not remaining:
        return DualGraphResult(graph=None, attachments={}, peeled=ray)

    edges = [
        (e.u, e.v, e.length)
        for e in qg.edges
        if e.u not in ray and e.v not in ray
    ]
    graph = LengthGraph.build(remaining, edges)
    attach = {label: attachment(info["chain"]) for label, info in qg.cusps.items()}
    return DualGraphResult(graph=graph, attachments=attach, peeled=ray)


def genus_from_quotient(qg: QuotientGraph) -> int:
    """First Betti number of the finite dual graph (0 when it is empty)."""
    res = finite_dual_graph(qg)
    if res.is_empty:
        return 0
    return res.graph.betti_number()


def infinity_component_data(q: int, x: Poly | None = None, y: Poly | None = None):
    """Full pipeline at level x*y: quotient graph, finite dual graph with
    cusp attachments, and the named component vertices.

    Returns (qg, dual_result, names) where names maps
    Z, Zp, E1, Eq, G1, Gq to dual graph vertices:
      E1 carries the [inf] cusp, Eq the [0] cusp, G1 the [x] cusp,
      Gq the [y] cusp; Z is the common neighbor of E1 and G1, Zp of Eq
      and Gq.
    """
    from .algebra import default_level_polys

    if x is None or y is None:
        dx, dy = default_level_polys(q)
        x = x or dx
        y = y or dy
    ring = ResidueRing(x * y)
    qg = build_quotient_graph(ring)
    res = finite_dual_graph(qg)
    if res.is_empty:
        raise AssertionError("level x*y should have a nonempty dual graph")
    g = res.graph
    e1 = res.attachments["inf"]
    eq = res.attachments["0"]
    g1 = res.attachments["x"]
    gq = res.attachments["y"]

    def common_neighbor(a, b, exclude):
        cands = set(g.neighbors(a)) & set(g.neighbors(b)) - set(exclude)
        if len(cands) != 1:
            raise AssertionError(f"expected a unique hub adjacent to {a} and {b}")
        return cands.pop()

    z = common_neighbor(e1, g1, (e1, eq, g1, gq))
    zp = common_neighbor(eq, gq, (e1, eq, g1, gq))
    names = {"Z": z, "Zp": zp, "E1": e1, "Eq": eq, "G1": g1, "Gq": gq}
    return qg, res, names
