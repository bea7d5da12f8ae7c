"""Certificate-producing minor detection and the binary-gammoid test.

Search order is fixed (independent contraction sets first, then
deletion sets, both in lexicographic order over sorted labels) so every
witness is reproducible.  A returned certificate can always be
re-verified by independently applying it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import FormatError, SizeBoundExceeded
from .gf2 import Gf2Matrix, bits, rref
from .matroid import BinaryMatroid, _fingerprint, isomorphic, relabel
from .lifts import splitting

HOST_SIZE_BOUND = 14


@dataclass(frozen=True)
class MinorCertificate:
    """Witness that a pattern is a minor of a host.

    Applying delete(deleted) then contract(contracted) to the host and
    renaming pattern labels through ``bijection`` (pattern -> host)
    yields a matroid equal to the pattern.
    """

    deleted: frozenset
    contracted: frozenset
    bijection: dict

    def to_text(self) -> str:
        dele = ",".join(sorted(self.deleted))
        cont = ",".join(sorted(self.contracted))
        pairs = ",".join(f"{p}->{h}" for p, h in sorted(self.bijection.items()))
        return f"delete: {dele}; contract: {cont}; map: {pairs}"

    @classmethod
    def from_text(cls, text: str) -> "MinorCertificate":
        parts = {}
        for chunk in text.strip().split(";"):
            key, sep, value = chunk.strip().partition(":")
            if not sep:
                raise FormatError(f"bad certificate: {text!r}")
            parts[key.strip()] = value.strip()
        if set(parts) != {"delete", "contract", "map"}:
            raise FormatError(f"bad certificate: {text!r}")
        deleted = frozenset(x for x in parts["delete"].split(",") if x)
        contracted = frozenset(x for x in parts["contract"].split(",") if x)
        bijection = {}
        for pair in parts["map"].split(","):
            if pair:
                p, sep, h = pair.partition("->")
                if not sep:
                    raise FormatError(f"bad certificate: {text!r}")
                bijection[p] = h
        return cls(deleted, contracted, bijection)


def verify_certificate(host: BinaryMatroid, pattern: BinaryMatroid, cert: MinorCertificate) -> bool:
    """Independently re-check a certificate against host and pattern."""
    if cert.deleted & cert.contracted:
        return False
    ground = host.ground_set
    if not (cert.deleted <= ground and cert.contracted <= ground):
        return False
    minor = host.delete(cert.deleted).contract(cert.contracted)
    if set(cert.bijection.keys()) != set(pattern.labels):
        return False
    if set(cert.bijection.values()) != set(minor.labels):
        return False
    renamed = relabel(pattern, cert.bijection)
    reordered = minor.mat.take_columns([minor.column_of(e) for e in renamed.labels])
    return renamed.mat == rref(reordered).matrix


def _k4_matroid() -> BinaryMatroid:
    """Rank-3 six-element reference pattern: all nonzero GF(2)^3 columns
    except (1,1,1); equals the cycle matroid of the complete graph K4."""
    cols = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110]
    rows = []
    for i in range(3):
        rows.append(bits((c >> i) & 1 for c in cols))
    mat = Gf2Matrix(3, 6, tuple(rows))
    return BinaryMatroid(mat, tuple(f"k{i}" for i in range(1, 7)))


K4_PATTERN = _k4_matroid()


def has_minor(host: BinaryMatroid, pattern: BinaryMatroid,
              max_elements: int = HOST_SIZE_BOUND) -> MinorCertificate | None:
    """First minor certificate in deterministic search order, or None.

    Contraction sets are restricted to independent sets (contracting a
    dependent set equals contracting a maximal independent subset and
    deleting the rest), which prunes without losing any minor.
    """
    if host.size > max_elements:
        raise SizeBoundExceeded(f"{host.size} elements exceeds bound {max_elements}")
    n_contract = host.rank - pattern.rank
    n_delete = host.size - n_contract - pattern.size
    if n_contract < 0 or n_delete < 0:
        return None
    labels = sorted(host.labels)
    pattern_fp = _fingerprint(pattern)
    for contract_set in combinations(labels, n_contract):
        if host.rank_of(contract_set) != n_contract:
            continue
        contracted = host.contract(contract_set)
        remaining = sorted(contracted.labels)
        for delete_set in combinations(remaining, n_delete):
            candidate = contracted.delete(delete_set)
            if _fingerprint(candidate) != pattern_fp:
                continue
            mapping = isomorphic(pattern, candidate)
            if mapping is not None:
                return MinorCertificate(frozenset(delete_set), frozenset(contract_set), mapping)
    return None


def has_u24_minor(host: BinaryMatroid,
                  max_elements: int = HOST_SIZE_BOUND) -> tuple[frozenset, frozenset] | None:
    """Search for the 4-element rank-2 uniform pattern via the rank oracle.

    The pattern has no GF(2) representation, so a hit is reported as the
    (delete, contract) pair alone: the minor must have rank 2, four
    elements, no loops and no 2-element circuits.  No binary host can
    contain it; the search is the executable form of that claim.
    """
    if host.size > max_elements:
        raise SizeBoundExceeded(f"{host.size} elements exceeds bound {max_elements}")
    n_contract = host.rank - 2
    n_delete = host.size - n_contract - 4
    if n_contract < 0 or n_delete < 0:
        return None
    labels = sorted(host.labels)
    for contract_set in combinations(labels, n_contract):
        if host.rank_of(contract_set) != n_contract:
            continue
        contracted = host.contract(contract_set)
        remaining = sorted(contracted.labels)
        for delete_set in combinations(remaining, n_delete):
            candidate = contracted.delete(delete_set)
            if candidate.rank != 2:
                continue
            elems = candidate.labels
            if any(candidate.rank_of((e,)) != 1 for e in elems):
                continue
            if any(candidate.rank_of(pair) != 2 for pair in combinations(elems, 2)):
                continue
            return (frozenset(delete_set), frozenset(contract_set))
    return None


@lru_cache(maxsize=None)
def is_binary_gammoid(m: BinaryMatroid) -> bool:
    """True iff the matroid has no minor matching the K4 cycle matroid."""
    return has_minor(m, K4_PATTERN) is None


def in_class_gk(m: BinaryMatroid, k: int) -> tuple | None:
    """Least k-subset H (sorted-label order) whose splitting breaks
    gammoid-ness, or None if every k-subset preserves it."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not is_binary_gammoid(m):
        raise ValueError("input matroid is not a binary gammoid")
    for subset in combinations(sorted(m.labels), k):
        if not is_binary_gammoid(splitting(m, subset)):
            return subset
    return None


def reduce_to_minimal_witness(m: BinaryMatroid, subset):
    """Strip a K4 certificate's outside-H removals down into m.

    Given that splitting(m, H) has a K4-pattern minor, returns
    (P, H1', H2') where P is the minor of m obtained by deleting and
    contracting the certificate's outside-H parts, and H1', H2' are the
    inside-H deletion and contraction sets; then
    splitting(P, H) \\ H1' / H2' is again K4-isomorphic.
    """
    split = splitting(m, subset)
    cert = has_minor(split, K4_PATTERN)
    if cert is None:
        raise ValueError("splitting by the given set has no K4-pattern minor")
    inside = frozenset(subset)
    h1_in = cert.deleted & inside
    h2_in = cert.contracted & inside
    h1_out = cert.deleted - inside
    h2_out = cert.contracted - inside
    reduced = m.delete(h1_out).contract(h2_out)
    return reduced, h1_in, h2_in
