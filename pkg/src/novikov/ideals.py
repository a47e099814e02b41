"""Subspace products, ideal closures, power/series chains and quotients.

Series terms, ideals and radicals are all canonical :class:`Subspace`
values over the algebra's coordinate space, so equality of results is
literal equality of echelon bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import AlgebraTable
from .errors import (DimensionMismatchError, FieldMismatchError, NotAnIdealError,
                     PreconditionError)
from .exactlin import Matrix, Subspace, vec_is_zero

CHAIN_KINDS = ("right", "derived", "lie", "full")


def _check_subspace(A, U):
    if U.field != A.field:
        raise FieldMismatchError("subspace over a different field")
    if U.ambient_dim != A.dim:
        raise DimensionMismatchError("subspace ambient dimension differs from algebra")


def subspace_product(A, U, V):
    """Span of ``{u v : u in U basis, v in V basis}``.

    Bilinearity makes the basis products span all products of elements.
    """
    _check_subspace(A, U)
    _check_subspace(A, V)
    seen = set()
    vecs = []
    for u in U.rows:
        for v in V.rows:
            w = A.multiply(u, v)
            if not vec_is_zero(w) and w not in seen:
                seen.add(w)
                vecs.append(w)
    return Subspace.span(A.field, vecs, A.dim)


def is_ideal(A, U):
    full = A.full_space()
    return (subspace_product(A, full, U).is_subspace_of(U)
            and subspace_product(A, U, full).is_subspace_of(U))


def ideal_closure(A, S):
    """Smallest ideal containing S: iterate U <- U + AU + UA to a fixed point."""
    _check_subspace(A, S)
    full = A.full_space()
    U = S
    while True:
        W = U.sum(subspace_product(A, full, U)).sum(subspace_product(A, U, full))
        if W == U:
            return U
        U = W


def subalgebra_generated(A, elements):
    """Smallest multiplication-closed subspace containing the elements."""
    U = Subspace.span(A.field, [A.element(x) for x in elements], A.dim)
    while True:
        W = U.sum(subspace_product(A, U, U))
        if W == U:
            return U
        U = W


@lru_cache(maxsize=1024)
def commutator_ideal(A, U):
    """Span of ``{uv - vu : u, v in U basis}`` for an ideal U.

    For an ideal of a Novikov algebra this span is itself an ideal without
    further closure; that claim is a test target and re-verified in the
    suite via :func:`ideal_closure`.
    """
    _check_subspace(A, U)
    if not is_ideal(A, U):
        raise NotAnIdealError("commutator span is only taken over an ideal")
    vecs = []
    rows = U.rows
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            vecs.append(A.commutator(rows[a], rows[b]))
    return Subspace.span(A.field, vecs, A.dim)


def is_trivial_ideal(A, I):
    """True iff I is an ideal with zero multiplication (I^2 = 0)."""
    _check_subspace(A, I)
    return is_ideal(A, I) and subspace_product(A, I, I).is_zero()


# ---------------------------------------------------------------------------
# chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainReport:
    """Successive terms of a power/series chain, 1-indexed.

    ``index`` is the first k with term_k = 0 when the chain reaches zero;
    otherwise None and the last term is the nonzero fixed point.
    """

    kind: str
    terms: tuple
    stabilized: bool
    index: int | None


@lru_cache(maxsize=4096)
def chain(A, kind, base=None):
    """Compute a descending chain until it hits zero or a fixed point.

    kinds: ``right``  T_{k+1} = T_k . base   (left-normed powers of base)
           ``derived`` T_{k+1} = T_k . T_k
           ``lie``     T_{k+1} = [T_k, T_k]  (base must be an ideal)
           ``full``    T_{k+1} = sum of T_i . T_j over i + j = k + 1

    The base defaults to the full space.  For the non-lie kinds the base
    must be multiplication-closed, which keeps every chain descending and
    makes fixed-point detection sound.
    """
    if kind not in CHAIN_KINDS:
        raise ValueError(f"unknown chain kind {kind!r}")
    if base is None:
        base = A.full_space()
    _check_subspace(A, base)
    if kind == "lie":
        if not is_ideal(A, base):
            raise NotAnIdealError("lie chain needs an ideal base")
    elif not subspace_product(A, base, base).is_subspace_of(base):
        raise PreconditionError(f"{kind} chain needs a multiplication-closed base")

    if kind == "full":
        return _full_chain(A, base)

    terms = [base]
    while True:
        cur = terms[-1]
        if cur.is_zero():
            return ChainReport(kind, tuple(terms), True, len(terms))
        if kind == "right":
            nxt = subspace_product(A, cur, base)
        elif kind == "derived":
            nxt = subspace_product(A, cur, cur)
        else:  # lie
            vecs = [A.commutator(u, v)
                    for a, u in enumerate(cur.rows) for v in cur.rows[a + 1:]]
            nxt = Subspace.span(A.field, vecs, A.dim)
        # these recurrences depend on the current term alone, so an adjacent
        # repeat really is a fixed point
        if nxt == cur:
            return ChainReport(kind, tuple(terms), True, None)
        terms.append(nxt)


def _full_chain(A, base):
    """Chain of full powers N_{k+1} = sum over i+j=k+1 of N_i N_j.

    The recurrence is memoryful, so an adjacent repeat does not prove
    stabilization (a plateau can be followed by a drop).  Instead compute
    the limit of the comb-shaped chain L_{k+1} = L_k B + B L_k, whose
    recurrence is memoryless: every product of 2^{k-1} or more factors
    lies in L_k, so both chains share the same limit.
    """
    L = base
    while True:
        nL = subspace_product(A, L, base).sum(subspace_product(A, base, L))
        if nL == L:
            break
        L = nL
    limit = L
    terms = [base]
    while terms[-1] != limit:
        k1 = len(terms) + 1
        nxt = Subspace.zero(A.field, A.dim)
        for i in range(1, k1):
            nxt = nxt.sum(subspace_product(A, terms[i - 1], terms[k1 - i - 1]))
        terms.append(nxt)
    index = len(terms) if limit.is_zero() else None
    return ChainReport("full", tuple(terms), True, index)


@dataclass(frozen=True)
class ClassifyReport:
    """Structural predicates, each with the chain index where zero is hit
    (1-indexed) or None when the chain stabilizes at a nonzero term."""

    right_nilpotent: int | None
    solvable: int | None
    lie_solvable: int | None
    nilpotent: int | None

    def as_dict(self):
        return {
            "right_nilpotent": self.right_nilpotent,
            "solvable": self.solvable,
            "lie_solvable": self.lie_solvable,
            "nilpotent": self.nilpotent,
        }


@lru_cache(maxsize=1024)
def classify(A):
    return ClassifyReport(
        right_nilpotent=chain(A, "right").index,
        solvable=chain(A, "derived").index,
        lie_solvable=chain(A, "lie").index,
        nilpotent=chain(A, "full").index,
    )


# ---------------------------------------------------------------------------
# quotients
# ---------------------------------------------------------------------------

def quotient_section(I):
    """Matrix lifting quotient coordinates back into the ambient space by
    placing them at the non-pivot coordinates of I's echelon basis."""
    F = I.field
    comp = [c for c in range(I.ambient_dim) if c not in set(I.pivots)]
    cols = []
    for c in comp:
        v = [F.zero] * I.ambient_dim
        v[c] = F.one
        cols.append(tuple(v))
    return Matrix.from_columns(F, cols, nrows=I.ambient_dim)


@lru_cache(maxsize=1024)
def quotient(A, I):
    """Quotient algebra on the complement coordinates plus the projection.

    The quotient basis is the set of non-pivot coordinates of I's echelon
    basis, which makes the construction deterministic.  The projection P
    satisfies P(xy) = P(x)P(y) with products taken in A and the quotient.
    """
    _check_subspace(A, I)
    if not is_ideal(A, I):
        raise NotAnIdealError("quotient requires an ideal")
    F = A.field
    pivot_set = set(I.pivots)
    comp = [c for c in range(A.dim) if c not in pivot_set]
    qdim = len(comp)

    def project(v):
        res = I.residual(v)
        return tuple(res[c] for c in comp)

    proj = Matrix.from_columns(F, [project(A.basis_vector(j)) for j in range(A.dim)],
                               nrows=qdim)
    cube = []
    for a in comp:
        row = []
        for b in comp:
            row.append(project(A.cube[a][b]))
        cube.append(row)
    names = tuple(A.basis_names[c] for c in comp)
    return AlgebraTable(F, cube, names), proj


def preimage_under_quotient(A, I, S):
    """Preimage in A of a subspace S of the quotient A/I."""
    sec = quotient_section(I)
    lifted = [sec.mat_vec(v) for v in S.rows]
    return Subspace.span(A.field, list(I.rows) + lifted, A.dim)
