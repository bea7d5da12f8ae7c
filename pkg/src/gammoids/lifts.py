"""Splitting, element splitting, and es-splitting of binary matroids.

All three append the indicator row of a subset H to the canonical
representation; element splitting additionally adjoins a new unit
column, and es-splitting first adjoins a parallel copy of a designated
element of H.  Fresh element labels use the reserved prefix "γ".
"""

from __future__ import annotations

from .matroid import BinaryMatroid


def fresh_label(existing, prefix: str = "γ") -> str:
    taken = set(existing)
    k = 1
    while f"{prefix}{k}" in taken:
        k += 1
    return f"{prefix}{k}"


def _indicator_row(m: BinaryMatroid, subset) -> int:
    row = 0
    for e in subset:
        row |= 1 << m.column_of(e)
    return row


def splitting(m: BinaryMatroid, subset) -> BinaryMatroid:
    """Append the indicator row of the subset; ground set unchanged.

    The rank grows by one exactly when the indicator row is outside the
    row space of the representation; otherwise the matroid is unchanged.
    """
    row = _indicator_row(m, subset)
    return BinaryMatroid(m.mat.append_row(row), m.labels)


def element_splitting(m: BinaryMatroid, subset) -> BinaryMatroid:
    """Splitting plus a fresh element represented by the new unit column.

    The new element γ satisfies: deleting γ gives splitting(m, subset)
    and contracting γ gives back m, so the result is a single-element
    coextension of m.
    """
    row = _indicator_row(m, subset)
    with_row = m.mat.append_row(row)
    with_col = with_row.append_column(1 << m.rank)  # unit in the appended row
    return BinaryMatroid(with_col, m.labels + (fresh_label(m.labels),))


def es_splitting(m: BinaryMatroid, subset, pivot) -> BinaryMatroid:
    """Element splitting applied after adjoining a parallel copy of pivot.

    Requires pivot ∈ subset ⊆ ground set.  The parallel copy gets a
    fresh "γp<k>" label; the coextension element gets a fresh "γ<k>"
    label.  The ground set grows by two.
    """
    subset = set(subset)
    for e in subset:
        m.column_of(e)  # raises UnknownLabelError on bad input
    if pivot not in subset:
        raise ValueError(f"pivot {pivot!r} must be a member of the split set")
    copy_col = m.column_vector(pivot)
    widened = m.mat.append_column(copy_col)
    parallel = BinaryMatroid(widened, m.labels + (fresh_label(m.labels, "γp"),))
    return element_splitting(parallel, subset)
