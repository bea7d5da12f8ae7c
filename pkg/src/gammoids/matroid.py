"""Binary matroids represented by GF(2) matrices.

A matroid is stored as its canonical RREF representation plus one label
per column.  Binary matroids are uniquely representable over GF(2), so
two matroids on the same labeled ground set are equal iff their stored
matrices are identical.  Deletion, contraction, duality, circuits and
certificate-producing isomorphism all reduce to column/row arithmetic.
"""

from __future__ import annotations

from itertools import combinations

from . import gf2
from .errors import FormatError, SizeBoundExceeded, UnknownLabelError
from .gf2 import Gf2Matrix, rank_of_rows, rref

CIRCUIT_SIZE_BOUND = 16  # default ground-set cap for circuit enumeration


class BinaryMatroid:
    """A GF(2)-represented matroid on a labeled ground set.

    The constructor canonicalizes: the stored matrix is the RREF of the
    input with zero rows removed, so it has full row rank and the rank
    of the matroid is ``mat.nrows``.
    """

    __slots__ = ("mat", "labels", "_col", "_hash", "_fp")

    def __init__(self, mat: Gf2Matrix, labels):
        labels = tuple(labels)
        if len(labels) != mat.ncols:
            raise ValueError(f"{len(labels)} labels for {mat.ncols} columns")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be pairwise distinct")
        object.__setattr__(self, "mat", rref(mat).matrix)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_col", {e: j for j, e in enumerate(labels)})
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_fp", None)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryMatroid is immutable")

    def __eq__(self, other):
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return self.labels == other.labels and self.mat == other.mat

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.labels, self.mat)))
        return self._hash

    def __repr__(self):
        return f"BinaryMatroid(rank={self.rank}, n={self.size})"

    @property
    def rank(self) -> int:
        return self.mat.nrows

    @property
    def size(self) -> int:
        return self.mat.ncols

    @property
    def ground_set(self) -> frozenset:
        return frozenset(self.labels)

    def column_of(self, e) -> int:
        j = self._col.get(e)
        if j is None:
            raise UnknownLabelError(e)
        return j

    def column_vector(self, e) -> int:
        """The GF(2) column of element e, as a bitset over matrix rows."""
        return self.mat.column(self.column_of(e))

    def _mask(self, subset) -> int:
        mask = 0
        for e in subset:
            mask |= 1 << self.column_of(e)
        return mask

    def rank_of(self, subset) -> int:
        """Rank of a subset of the ground set."""
        mask = self._mask(subset)
        return rank_of_rows(r & mask for r in self.mat.rows)

    def is_loop(self, e) -> bool:
        return self.column_vector(e) == 0

    def is_coloop(self, e) -> bool:
        others = [x for x in self.labels if x != e]
        return self.rank_of(others) < self.rank

    def loops(self) -> tuple:
        return tuple(e for e in self.labels if self.is_loop(e))

    def parallel_class(self, e) -> frozenset:
        """All elements sharing e's nonzero column (e itself if a loop)."""
        col = self.column_vector(e)
        if col == 0:
            return frozenset([e])
        return frozenset(x for x in self.labels if self.column_vector(x) == col)

    def delete(self, subset) -> "BinaryMatroid":
        drop = {self.column_of(e) for e in subset}
        keep = [j for j in range(self.size) if j not in drop]
        new_labels = tuple(self.labels[j] for j in keep)
        return BinaryMatroid(self.mat.take_columns(keep), new_labels)

    def contract(self, subset) -> "BinaryMatroid":
        """Contract a subset (loops are deleted, the usual convention).

        Implemented order-free: re-reduce with the contracted columns
        given pivot priority, drop the pivot rows, then drop the columns.
        """
        drop = sorted({self.column_of(e) for e in subset})
        if not drop:
            return self
        keep = [j for j in range(self.size) if j not in set(drop)]
        reordered = self.mat.take_columns(drop + keep)
        reduced = rref(reordered).matrix
        k = len(drop)
        # RREF pivots lead their rows, so a row survives contraction iff it
        # has no bit among the first k (contracted) columns.
        kept_rows = [r >> k for r in reduced.rows if (r & ((1 << k) - 1)) == 0]
        new_mat = Gf2Matrix(len(kept_rows), len(keep), tuple(kept_rows))
        new_labels = tuple(self.labels[j] for j in keep)
        return BinaryMatroid(new_mat, new_labels)

    def restrict(self, subset) -> "BinaryMatroid":
        keep_set = {self.column_of(e) for e in subset}
        return self.delete(e for e in self.labels if self._col[e] not in keep_set)

    def dual(self) -> "BinaryMatroid":
        """Standard-form dual: row space becomes the orthogonal complement."""
        m = self.mat
        pivots = rref(m).pivot_cols  # m is already canonical
        pivot_set = set(pivots)
        nonpivots = [j for j in range(self.size) if j not in pivot_set]
        rows = []
        for q in nonpivots:
            v = 1 << q
            for i, p in enumerate(pivots):
                if (m.rows[i] >> q) & 1:
                    v |= 1 << p
            rows.append(v)
        dual_mat = Gf2Matrix(len(rows), self.size, tuple(rows))
        return BinaryMatroid(dual_mat, self.labels)

    def circuits(self, max_elements: int = CIRCUIT_SIZE_BOUND) -> list[frozenset]:
        """All circuits (minimal dependent sets), smallest first.

        The null space of the representation is spanned by one vector per
        non-pivot column; its nonzero supports are exactly the disjoint
        unions of circuits, so the minimal supports are the circuits.
        """
        if self.size > max_elements:
            raise SizeBoundExceeded(f"{self.size} elements exceeds bound {max_elements}")
        m = self.mat
        pivots = rref(m).pivot_cols
        pivot_set = set(pivots)
        nonpivots = [j for j in range(self.size) if j not in pivot_set]
        kernel = []
        for q in nonpivots:
            v = 1 << q
            for i, p in enumerate(pivots):
                if (m.rows[i] >> q) & 1:
                    v |= 1 << p
            kernel.append(v)
        supports = set()
        for combo in range(1, 1 << len(kernel)):
            v = 0
            c = combo
            i = 0
            while c:
                if c & 1:
                    v ^= kernel[i]
                c >>= 1
                i += 1
            if v:
                supports.add(v)
        minimal: list[int] = []
        for s in sorted(supports, key=lambda x: (bin(x).count("1"), x)):
            if not any(t & s == t for t in minimal):
                minimal.append(s)
        out = []
        for s in minimal:
            out.append(frozenset(self.labels[j] for j in range(self.size) if (s >> j) & 1))
        return sorted(out, key=lambda c: (len(c), sorted(c)))


def element_fingerprint(m: BinaryMatroid, e) -> tuple:
    """Cheap isomorphism-invariant profile of one element."""
    col = m.column_vector(e)
    loop = col == 0
    par = 1 if loop else sum(1 for x in m.labels if m.column_vector(x) == col)
    coloop = m.is_coloop(e)
    return (loop, coloop, par)


def _fingerprint(m: BinaryMatroid) -> tuple:
    if m._fp is None:
        per_element = sorted(element_fingerprint(m, e) for e in m.labels)
        try:
            sizes = tuple(sorted(len(c) for c in m.circuits() if len(c) <= 4))
        except SizeBoundExceeded:
            sizes = ()
        object.__setattr__(m, "_fp", (m.size, m.rank, tuple(per_element), sizes))
    return m._fp


def isomorphic(a: BinaryMatroid, b: BinaryMatroid) -> dict | None:
    """Find a label bijection making the matroids equal, or None.

    Backtracks over sorted labels of ``a`` against sorted labels of
    ``b``, pruning by per-element fingerprints and by rank agreement on
    matched prefixes.  Returns the lexicographically least valid
    bijection under sorted labels.
    """
    if a.size != b.size or a.rank != b.rank:
        return None
    if _fingerprint(a) != _fingerprint(b):
        return None
    la = sorted(a.labels)
    lb = sorted(b.labels)
    fa = {e: element_fingerprint(a, e) for e in la}
    fb = {e: element_fingerprint(b, e) for e in lb}

    assignment: list = []
    used: set = set()

    def prefix_ok() -> bool:
        k = len(assignment)
        if a.rank_of(la[:k]) != b.rank_of(assignment):
            return False
        # pair ranks catch parallel-structure mismatches early
        last_a, last_b = la[k - 1], assignment[-1]
        for i in range(k - 1):
            if a.rank_of((la[i], last_a)) != b.rank_of((assignment[i], last_b)):
                return False
        return True

    def full_check() -> dict | None:
        mapping = dict(zip(la, assignment))
        perm = [b.column_of(mapping[a.labels[j]]) for j in range(a.size)]
        # place a's column j at position perm[j], then compare canonical forms
        order = sorted(range(a.size), key=lambda j: perm[j])
        permuted = a.mat.take_columns(order)
        if rref(permuted).matrix == b.mat:
            return mapping
        return None

    def extend(depth: int) -> dict | None:
        if depth == len(la):
            return full_check()
        e = la[depth]
        for f in lb:
            if f in used or fb[f] != fa[e]:
                continue
            assignment.append(f)
            used.add(f)
            if prefix_ok():
                result = extend(depth + 1)
                if result is not None:
                    return result
            assignment.pop()
            used.remove(f)
        return None

    return extend(0)


def relabel(m: BinaryMatroid, mapping: dict) -> BinaryMatroid:
    """Apply a label bijection, keeping column order."""
    new_labels = tuple(mapping[e] for e in m.labels)
    return BinaryMatroid(m.mat, new_labels)


def same_matroid(a: BinaryMatroid, b: BinaryMatroid) -> bool:
    """Equality as matroids on the same ground set, any label order."""
    if set(a.labels) != set(b.labels):
        return False
    reordered = b.mat.take_columns([b.column_of(e) for e in a.labels])
    return a.mat == rref(reordered).matrix


def matroid_to_text(m: BinaryMatroid) -> str:
    """Text form: "matroid <r> <n>", a label line, then the 0/1 rows."""
    lines = [f"matroid {m.rank} {m.size}"]
    lines.append(" ".join(m.labels) if m.labels else "-")
    for r in m.mat.rows:
        lines.append("".join(str((r >> j) & 1) for j in range(m.size)))
    return "\n".join(lines) + "\n"


def matroid_from_text(text: str) -> BinaryMatroid:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty matroid text")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "matroid":
        raise FormatError(f"bad matroid header: {lines[0]!r}")
    try:
        r, n = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError(f"bad matroid header: {lines[0]!r}") from None
    if len(lines) < 2:
        raise FormatError("missing label line")
    labels = tuple(lines[1].split()) if n > 0 else ()
    if len(labels) != n:
        raise FormatError(f"expected {n} labels, found {len(labels)}")
    row_lines = lines[2:]
    if len(row_lines) != r:
        raise FormatError(f"expected {r} rows, found {len(row_lines)}")
    rows = []
    for ln in row_lines:
        ln = ln.strip()
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise FormatError(f"bad matroid row: {ln!r}")
        rows.append(gf2.bits(int(ch) for ch in ln))
    try:
        return BinaryMatroid(Gf2Matrix(r, n, tuple(rows)), labels)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def brute_force_rank(m: BinaryMatroid, subset) -> int:
    """Independent rank oracle: the span of the columns has 2^rank vectors."""
    cols = [m.column_vector(e) for e in subset]
    span = {0}
    for c in cols:
        span |= {v ^ c for v in span}
    return len(span).bit_length() - 1


def brute_force_circuits(m: BinaryMatroid) -> list[frozenset]:
    """Independent circuit oracle: scan all subsets for minimal dependence."""
    out = []
    elems = sorted(m.labels)
    for k in range(1, m.size + 1):
        for sub in combinations(elems, k):
            if m.rank_of(sub) < k and not any(c <= set(sub) for c in out):
                out.append(frozenset(sub))
    return sorted(out, key=lambda c: (len(c), sorted(c)))
