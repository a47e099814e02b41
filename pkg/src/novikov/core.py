"""Algebras presented by structure constants.

An algebra is a cube ``c`` of scalars with ``e_i e_j = sum_k c[i][j][k] e_k``;
elements are plain coordinate tuples over the algebra's field.  This module
provides the bilinear product, multiplication operators, associators,
multilinear identity verification on basis tuples, left-normed powers and the
r-nilpotency decision.

Tables are immutable and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatchError, FieldMismatchError
from .exactlin import Matrix, Subspace, coerce_vector, vec_is_zero, vec_sub, vec_zeros


class AlgebraTable:
    """Finite-dimensional algebra over an exact field.

    Unspecified structure constants are zero; the cube is always total.
    """

    __slots__ = ("field", "dim", "cube", "basis_names")

    def __init__(self, field, cube, basis_names=None):
        dim = len(cube)
        rows = []
        for i, plane in enumerate(cube):
            if len(plane) != dim:
                raise DimensionMismatchError("structure cube is not dim x dim x dim")
            rows.append(tuple(coerce_vector(field, v, dim) for v in plane))
        if basis_names is None:
            basis_names = tuple(f"e{i + 1}" for i in range(dim))
        else:
            basis_names = tuple(basis_names)
            if len(basis_names) != dim:
                raise DimensionMismatchError("basis name count differs from dim")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "cube", tuple(rows))
        object.__setattr__(self, "basis_names", basis_names)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraTable is immutable")

    @classmethod
    def from_products(cls, field, dim, products, basis_names=None):
        """Build a table from a ``{(i, j): coordinate vector}`` mapping."""
        zero = vec_zeros(field, dim)
        cube = [[zero] * dim for _ in range(dim)]
        for (i, j), v in products.items():
            cube[i][j] = coerce_vector(field, v, dim)
        return cls(field, cube, basis_names)

    # -- elements ----------------------------------------------------------

    def zero_vector(self):
        return vec_zeros(self.field, self.dim)

    def basis_vector(self, i):
        z = self.field.zero
        return tuple(self.field.one if j == i else z for j in range(self.dim))

    def basis_vectors(self):
        return [self.basis_vector(i) for i in range(self.dim)]

    def element(self, coords):
        return coerce_vector(self.field, coords, self.dim)

    def random_element(self, rng, spread=2):
        """Deterministic-for-seed sample with small integer coordinates."""
        F = self.field
        if F.p is None:
            return tuple(F.of_int(rng.randint(-spread, spread)) for _ in range(self.dim))
        return tuple(rng.randrange(F.p) for _ in range(self.dim))

    def full_space(self):
        return Subspace.full(self.field, self.dim)

    def zero_space(self):
        return Subspace.zero(self.field, self.dim)

    # -- products ----------------------------------------------------------

    def _check_element(self, x):
        if len(x) != self.dim:
            raise DimensionMismatchError(f"element length {len(x)} differs from dim {self.dim}")

    def multiply(self, x, y):
        """Bilinear extension of the structure cube."""
        self._check_element(x)
        self._check_element(y)
        F = self.field
        out = [F.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            plane = self.cube[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cij = plane[j]
                s = F.mul(xi, yj)
                for k, c in enumerate(cij):
                    if c:
                        out[k] = F.add(out[k], F.mul(s, c))
        return tuple(out)

    def commutator(self, x, y):
        return vec_sub(self.field, self.multiply(x, y), self.multiply(y, x))

    def associator(self, x, y, z):
        """(x, y, z) = (xy)z - x(yz), exactly."""
        lhs = self.multiply(self.multiply(x, y), z)
        rhs = self.multiply(x, self.multiply(y, z))
        return vec_sub(self.field, lhs, rhs)

    def operator_matrix(self, x, side="right"):
        """Matrix of right (v -> vx) or left (v -> xv) multiplication by x."""
        self._check_element(x)
        if side == "right":
            cols = [self.multiply(self.basis_vector(j), x) for j in range(self.dim)]
        elif side == "left":
            cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        else:
            raise ValueError(f"unknown side {side!r}")
        return Matrix.from_columns(self.field, cols, nrows=self.dim)

    # -- powers ------------------------------------------------------------

    def left_normed_power(self, x, n):
        """x^1 = x, x^n = x^{n-1} x.  Rejects n = 0: no unit is assumed."""
        if n < 1:
            raise ValueError("left-normed powers start at exponent 1")
        self._check_element(x)
        p = tuple(x)
        for _ in range(n - 1):
            p = self.multiply(p, x)
        return p

    def r_nilpotency_index(self, x):
        """Smallest n with x^n = 0, or None if x is not r-nilpotent.

        The power sequence is the orbit of x under right multiplication by
        x, which stays inside a cyclic subspace of dimension <= dim; so some
        power vanishes iff x^(dim+1) = 0 already.
        """
        self._check_element(x)
        p = tuple(x)
        for n in range(1, self.dim + 2):
            if vec_is_zero(p):
                return n
            p = self.multiply(p, x)
        return None

    def __eq__(self, other):
        return (isinstance(other, AlgebraTable) and other.field == self.field
                and other.cube == self.cube
                and other.basis_names == self.basis_names)

    def __hash__(self):
        return hash((self.field, self.cube, self.basis_names))

    def __repr__(self):
        return f"AlgebraTable(dim={self.dim}, field={self.field.spec_string()})"


# ---------------------------------------------------------------------------
# identity verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityFailure:
    law: str
    indices: tuple
    lhs: tuple
    rhs: tuple


@dataclass(frozen=True)
class IdentityReport:
    kind: str
    ok: bool
    failure: IdentityFailure | None = None


IDENTITY_KINDS = ("novikov", "eq1", "associative", "commutative", "leibniz")


def _check_same_algebra(A, d):
    if d.field != A.field:
        raise FieldMismatchError("map over a different field")
    if d.nrows != A.dim or d.ncols != A.dim:
        raise DimensionMismatchError("map shape differs from algebra dimension")


@lru_cache(maxsize=4096)
def verify_identity(A, kind, derivation=None):
    """Check a multilinear identity on all basis tuples.

    Multilinearity makes the basis check complete; the report either passes
    or carries the first failing tuple together with both sides.  Inputs
    are immutable, so results are memoized.
    """
    n = A.dim
    basis = A.basis_vectors()
    if kind == "commutative":
        for i in range(n):
            for j in range(n):
                lhs = A.cube[i][j]
                rhs = A.cube[j][i]
                if lhs != rhs:
                    return IdentityReport(kind, False,
                                          IdentityFailure("xy == yx", (i, j), lhs, rhs))
        return IdentityReport(kind, True)

    if kind == "associative":
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    a = A.associator(basis[i], basis[j], basis[k])
                    if not vec_is_zero(a):
                        return IdentityReport(kind, False,
                                              IdentityFailure("(xy)z == x(yz)", (i, j, k),
                                                              a, A.zero_vector()))
        return IdentityReport(kind, True)

    if kind == "novikov":
        assoc = _associator_cube(A)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = assoc[i][j][k]
                    rhs = assoc[j][i][k]
                    if lhs != rhs:
                        return IdentityReport(kind, False,
                                              IdentityFailure("(x,y,z) == (y,x,z)",
                                                              (i, j, k), lhs, rhs))
                    lhs = A.multiply(A.cube[i][j], basis[k])
                    rhs = A.multiply(A.cube[i][k], basis[j])
                    if lhs != rhs:
                        return IdentityReport(kind, False,
                                              IdentityFailure("(xy)z == (xz)y",
                                                              (i, j, k), lhs, rhs))
        return IdentityReport(kind, True)

    if kind == "eq1":
        assoc = _associator_cube(A)
        F = A.field

        def assoc_of(vec, j, k):
            out = [F.zero] * n
            for m, a in enumerate(vec):
                if a:
                    row = assoc[m][j][k]
                    for t, c in enumerate(row):
                        if c:
                            out[t] = F.add(out[t], F.mul(a, c))
            return tuple(out)

        for i in range(n):
            for j in range(n):
                for k in range(n):
                    aijk = assoc[i][j][k]
                    for l in range(n):
                        lhs = A.multiply(aijk, basis[l])
                        mid = assoc_of(A.cube[i][l], j, k)
                        if lhs != mid:
                            return IdentityReport(kind, False,
                                                  IdentityFailure("(x,y,z)t == (xt,y,z)",
                                                                  (i, j, k, l), lhs, mid))
                        rhs = assoc_of(A.cube[j][l], i, k)
                        if lhs != rhs:
                            return IdentityReport(kind, False,
                                                  IdentityFailure("(x,y,z)t == (x,yt,z)",
                                                                  (i, j, k, l), lhs, rhs))
        return IdentityReport(kind, True)

    if kind == "leibniz":
        if derivation is None:
            raise ValueError("leibniz check needs a linear map")
        _check_same_algebra(A, derivation)
        F = A.field
        dcols = [derivation.column(j) for j in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = derivation.mat_vec(A.cube[i][j])
                rhs = tuple(F.add(a, b)
                            for a, b in zip(A.multiply(dcols[i], basis[j]),
                                            A.multiply(basis[i], dcols[j])))
                if lhs != rhs:
                    return IdentityReport(kind, False,
                                          IdentityFailure("d(xy) == d(x)y + x d(y)",
                                                          (i, j), lhs, rhs))
        return IdentityReport(kind, True)

    raise ValueError(f"unknown identity kind {kind!r}")


def _associator_cube(A):
    n = A.dim
    basis = A.basis_vectors()
    return [[[A.associator(basis[i], basis[j], basis[k]) for k in range(n)]
             for j in range(n)] for i in range(n)]


def is_novikov(A):
    return verify_identity(A, "novikov").ok


def is_commutative_associative(A):
    return verify_identity(A, "commutative").ok and verify_identity(A, "associative").ok
