"""Labeled multigraphs with loops, and their cycle matroids.

Canonical forms are computed by vertex-invariant refinement followed by
a minimum edge-list encoding over the permutations that respect the
refined cells; with at most ~8 vertices that stays cheap while giving
exact isomorphism classes for the census.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations_with_replacement, permutations

from .errors import FormatError, SizeBoundExceeded
from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid, isomorphic


class Multigraph:
    """Vertices 0..nvertices-1; edges are (u, v, label) with u <= v."""

    __slots__ = ("nvertices", "edges")

    def __init__(self, nvertices: int, edges):
        norm = []
        labels = set()
        used = set()
        for u, v, label in edges:
            if not (0 <= u < nvertices and 0 <= v < nvertices):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
            if label in labels:
                raise ValueError(f"duplicate edge label {label!r}")
            labels.add(label)
            used.add(u)
            used.add(v)
            norm.append((min(u, v), max(u, v), label))
        if nvertices > 0 and used != set(range(nvertices)):
            missing = sorted(set(range(nvertices)) - used)
            raise ValueError(f"phantom vertices with no incident edge: {missing}")
        object.__setattr__(self, "nvertices", nvertices)
        object.__setattr__(self, "edges", tuple(norm))

    def __setattr__(self, name, value):
        raise AttributeError("Multigraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.nvertices == other.nvertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.nvertices, self.edges))

    def __repr__(self):
        return f"Multigraph(nvertices={self.nvertices}, nedges={len(self.edges)})"

    @property
    def nedges(self) -> int:
        return len(self.edges)

    def edge_labels(self) -> tuple:
        return tuple(label for _, _, label in self.edges)

    def pair_multiset(self) -> tuple:
        return tuple(sorted((u, v) for u, v, _ in self.edges))

    def n_components(self) -> int:
        if self.nvertices == 0:
            return 0
        parent = list(range(self.nvertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        return len({find(v) for v in range(self.nvertices)})

    def is_connected(self) -> bool:
        return self.n_components() <= 1


def _refine_cells(nvertices: int, pairs) -> list[list[int]]:
    """Stable vertex partition under iterated neighborhood refinement."""
    loops = [0] * nvertices
    mult: dict[tuple[int, int], int] = defaultdict(int)
    neighbors: list[set[int]] = [set() for _ in range(nvertices)]
    for u, v in pairs:
        if u == v:
            loops[u] += 1
        else:
            mult[(u, v)] += 1
            neighbors[u].add(v)
            neighbors[v].add(u)

    def multiplicity(u, v):
        return mult[(min(u, v), max(u, v))]

    inv = [(loops[v], sum(multiplicity(v, u) for u in neighbors[v])) for v in range(nvertices)]
    ranks = _rank_values(inv)
    while True:
        new_inv = [
            (ranks[v], tuple(sorted((multiplicity(v, u), ranks[u]) for u in neighbors[v])))
            for v in range(nvertices)
        ]
        new_ranks = _rank_values(new_inv)
        if new_ranks == ranks:
            break
        ranks = new_ranks
    cells: dict[int, list[int]] = defaultdict(list)
    for v in range(nvertices):
        cells[ranks[v]].append(v)
    return [cells[r] for r in sorted(cells)]


def _rank_values(values) -> list[int]:
    order = {val: i for i, val in enumerate(sorted(set(values)))}
    return [order[val] for val in values]


def canonical_pairs(nvertices: int, pairs) -> tuple:
    """Minimum sorted edge-pair encoding over cell-respecting relabelings."""
    pairs = [(min(u, v), max(u, v)) for u, v in pairs]
    cells = _refine_cells(nvertices, pairs)
    best = None
    for perm_parts in _cell_permutations(cells):
        relabeling = [0] * nvertices
        pos = 0
        for part in perm_parts:
            for v in part:
                relabeling[v] = pos
                pos += 1
        encoded = tuple(sorted(
            (min(relabeling[u], relabeling[v]), max(relabeling[u], relabeling[v]))
            for u, v in pairs
        ))
        if best is None or encoded < best:
            best = encoded
    return best if best is not None else ()


def _cell_permutations(cells):
    if not cells:
        yield []
        return
    head, rest = cells[0], cells[1:]
    for head_perm in permutations(head):
        for rest_perm in _cell_permutations(rest):
            yield [head_perm] + rest_perm


def canonical_form(g: Multigraph) -> tuple:
    """Isomorphism-invariant key: (nvertices, canonical edge pairs)."""
    return (g.nvertices, canonical_pairs(g.nvertices, [(u, v) for u, v, _ in g.edges]))


def encode_canonical(g: Multigraph) -> str:
    """One-line canonical encoding, e.g. "3:0-1,0-1,1-2"."""
    nv, pairs = canonical_form(g)
    return f"{nv}:" + ",".join(f"{u}-{v}" for u, v in pairs)


def decode_canonical(text: str) -> Multigraph:
    try:
        head, _, body = text.strip().partition(":")
        nv = int(head)
        pairs = []
        if body:
            for chunk in body.split(","):
                u, _, v = chunk.partition("-")
                pairs.append((int(u), int(v)))
    except ValueError:
        raise FormatError(f"bad graph encoding: {text!r}") from None
    return graph_from_pairs(nv, pairs)


def graph_from_pairs(nvertices: int, pairs, prefix: str = "e") -> Multigraph:
    """Wrap bare endpoint pairs with generated labels e1, e2, ..."""
    edges = [(u, v, f"{prefix}{i + 1}") for i, (u, v) in enumerate(pairs)]
    try:
        return Multigraph(nvertices, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def cycle_matroid(g: Multigraph) -> BinaryMatroid:
    """Vertex-edge incidence matroid over GF(2); loops give zero columns."""
    rows = []
    for v in range(g.nvertices):
        bitsval = 0
        for j, (a, b, _) in enumerate(g.edges):
            if (a == v) != (b == v):  # loops contribute 0 mod 2
                bitsval |= 1 << j
        rows.append(bitsval)
    mat = Gf2Matrix(g.nvertices, g.nedges, tuple(rows))
    return BinaryMatroid(mat, g.edge_labels())


def graph_isomorphic(a: Multigraph, b: Multigraph):
    """Incidence-preserving (vertex bijection, edge bijection), or None.

    Both graphs are mapped to a common canonical labeling; this fixes a
    deterministic witness pair.  Within a parallel class, edge labels
    are matched in sorted order.
    """
    if a.nvertices != b.nvertices or a.nedges != b.nedges:
        return None
    if canonical_form(a) != canonical_form(b):
        return None
    perm_a = _canonical_relabeling(a)
    perm_b = _canonical_relabeling(b)
    inv_b = {pos: v for v, pos in perm_b.items()}
    vertex_map = {v: inv_b[perm_a[v]] for v in range(a.nvertices)}
    groups_a: dict[tuple[int, int], list] = defaultdict(list)
    groups_b: dict[tuple[int, int], list] = defaultdict(list)
    for u, v, label in a.edges:
        groups_a[(min(perm_a[u], perm_a[v]), max(perm_a[u], perm_a[v]))].append(label)
    for u, v, label in b.edges:
        groups_b[(min(perm_b[u], perm_b[v]), max(perm_b[u], perm_b[v]))].append(label)
    edge_map = {}
    for key, labels_a in groups_a.items():
        for la, lb in zip(sorted(labels_a), sorted(groups_b[key])):
            edge_map[la] = lb
    return vertex_map, edge_map


def _canonical_relabeling(g: Multigraph) -> dict[int, int]:
    """A vertex -> position map realizing the canonical encoding."""
    pairs = [(u, v) for u, v, _ in g.edges]
    target = canonical_pairs(g.nvertices, pairs)
    cells = _refine_cells(g.nvertices, pairs)
    for perm_parts in _cell_permutations(cells):
        relabeling = {}
        pos = 0
        for part in perm_parts:
            for v in part:
                relabeling[v] = pos
                pos += 1
        encoded = tuple(sorted(
            (min(relabeling[u], relabeling[v]), max(relabeling[u], relabeling[v]))
            for u, v in pairs
        ))
        if encoded == target:
            return relabeling
    raise AssertionError("canonical relabeling not found")  # unreachable


GRAPHIC_WITNESS_BOUND = 12


def graphic_witness(m: BinaryMatroid, max_vertices: int) -> Multigraph | None:
    """A multigraph whose cycle matroid matches m, or None within bounds.

    Matroid components are realized independently: a connected graph
    realizing a rank-r component needs exactly r+1 vertices, so each
    component searches connected multigraphs of that size.  The witness
    carries m's own element labels as edge labels.
    """
    if m.size > GRAPHIC_WITNESS_BOUND:
        raise SizeBoundExceeded(f"{m.size} elements exceeds bound {GRAPHIC_WITNESS_BOUND}")
    if m.size == 0:
        return Multigraph(0, [])
    component_graphs = []
    for comp in _matroid_components(m):
        sub = m.restrict(comp)
        r = sub.rank
        if r == 0:
            label = next(iter(comp))
            component_graphs.append(Multigraph(1, [(0, 0, label)]))
            continue
        if r + 1 > max_vertices:
            return None
        witness = _connected_witness(sub, r + 1)
        if witness is None:
            return None
        component_graphs.append(witness)
    return _disjoint_union(component_graphs)


def _matroid_components(m: BinaryMatroid) -> list[frozenset]:
    """Connected components: classes under sharing a circuit; coloops alone."""
    parent = {e: e for e in m.labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for circuit in m.circuits():
        members = sorted(circuit)
        for other in members[1:]:
            ra, rb = find(members[0]), find(other)
            if ra != rb:
                parent[ra] = rb
    groups: dict = defaultdict(set)
    for e in m.labels:
        groups[find(e)].add(e)
    return sorted((frozenset(s) for s in groups.values()), key=lambda s: sorted(s))


def _connected_witness(sub: BinaryMatroid, nv: int) -> Multigraph | None:
    """Search connected loopless multigraphs on nv vertices matching sub."""
    ne = sub.size
    max_mult = max(len(sub.parallel_class(e)) for e in sub.labels)
    slots = [(u, v) for u, v in combinations_with_replacement(range(nv), 2) if u != v]
    seen = set()
    for combo in combinations_with_replacement(slots, ne):
        if max(combo.count(s) for s in set(combo)) > max_mult:
            continue
        used = {u for u, _ in combo} | {v for _, v in combo}
        if used != set(range(nv)):
            continue
        key = canonical_pairs(nv, combo)
        if key in seen:
            continue
        seen.add(key)
    for key in sorted(seen):
        g = graph_from_pairs(nv, key)
        if not g.is_connected():
            continue
        mapping = isomorphic(cycle_matroid(g), sub)
        if mapping is not None:
            relabeled = [(u, v, mapping[label]) for u, v, label in g.edges]
            return Multigraph(nv, relabeled)
    return None


def _disjoint_union(graphs) -> Multigraph:
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset, label) for u, v, label in g.edges)
        offset += g.nvertices
    return Multigraph(offset, edges)


def graph_to_text(g: Multigraph) -> str:
    """Text form: "graph <nvertices> <nedges>" then "<label> <u> <v>" lines."""
    lines = [f"graph {g.nvertices} {g.nedges}"]
    for u, v, label in g.edges:
        lines.append(f"{label} {u} {v}")
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Multigraph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty graph text")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "graph":
        raise FormatError(f"bad graph header: {lines[0]!r}")
    try:
        nv, ne = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError(f"bad graph header: {lines[0]!r}") from None
    if len(lines) - 1 != ne:
        raise FormatError(f"expected {ne} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad edge line: {ln!r}")
        label, u, v = parts
        try:
            edges.append((int(u), int(v), label))
        except ValueError:
            raise FormatError(f"bad edge line: {ln!r}") from None
    try:
        return Multigraph(nv, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
