"""Exact linear algebra and subspaces over an arbitrary finite field.

Every routine takes a ``field`` object exposing ``add``, ``sub``, ``neg``,
``mul``, ``inv``, ``zero``, ``one``, ``order`` and ``elements()``; this is
satisfied by :class:`~rankmetric.field.PrimeField`, the F_q view of a tower
(``tower.base``) and the tower itself, so the same code does F_q support
calculations and F_{q^m} code calculations.

Matrices are sequences of rows of field elements (ints).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Any, Iterator, Sequence

from .errors import AmbientMismatch, EnumerationTooLarge

Matrix = Sequence[Sequence[int]]

DEFAULT_ENUMERATION_CAP = 1 << 22


def rref(M: Matrix, field: Any, ncols: int | None = None) -> tuple[list[list[int]], int]:
    """Reduced row echelon form of ``M`` and its rank.

    Zero rows are kept at the bottom so the shape is unchanged.
    """
    R = [list(r) for r in M]
    if ncols is None:
        ncols = len(R[0]) if R else 0
    rows = len(R)
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        lead = R[r][c]
        if lead != field.one:
            s = field.inv(lead)
            R[r] = [field.mul(s, x) for x in R[r]]
        pr = R[r]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(R[i], pr)]
        r += 1
    return R, r


def rank(M: Matrix, field: Any) -> int:
    return rref(M, field)[1] if M else 0


def pivots(R: Matrix) -> list[int]:
    """Pivot columns of a matrix already in RREF (zero rows ignored)."""
    out = []
    for row in R:
        for j, x in enumerate(row):
            if x:
                out.append(j)
                break
    return out


def transpose(M: Matrix) -> list[list[int]]:
    return [list(c) for c in zip(*M)]


def matmul(A: Matrix, B: Matrix, field: Any) -> list[list[int]]:
    Bt = transpose(B)
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = field.zero
            for x, y in zip(row, col):
                if x and y:
                    acc = field.add(acc, field.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def vec_mat(v: Sequence[int], M: Matrix, field: Any) -> list[int]:
    return matmul([v], M, field)[0]


def null_space(M: Matrix, field: Any, ncols: int | None = None) -> list[list[int]]:
    """Basis (in RREF) of ``{x : M x^T = 0}``."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M:
        return [[field.one if i == j else field.zero for j in range(ncols)] for i in range(ncols)]
    R, rk = rref(M, field, ncols)
    R = R[:rk]
    piv = pivots(R)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, pc in zip(R, piv):
            x[pc] = field.neg(row[f])
        basis.append(x)
    return rref(basis, field, ncols)[0] if basis else []


def left_null_space(M: Matrix, field: Any) -> list[list[int]]:
    """Basis of ``{a : a M = 0}``."""
    if not M:
        return []
    return null_space(transpose(M), field, len(M))


def inverse(M: Matrix, field: Any) -> list[list[int]]:
    n = len(M)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(M)]
    R, rk = rref(aug, field, n)
    if rk < n or any(R[i][i] != field.one for i in range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held as its canonical RREF basis (no zero rows).

    Equality and hashing are structural on ``(ambient, basis)``.
    """

    ambient: int
    basis: tuple[tuple[int, ...], ...]
    field: Any = dc_field(compare=False, hash=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient {self.ambient}")
        return rank(list(self.basis) + [list(v)], self.field) == self.dim

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """Every vector of the subspace (``q**dim`` of them)."""
        f = self.field
        for coeffs in product(f.elements(), repeat=self.dim):
            v = [f.zero] * self.ambient
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
            yield tuple(v)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.basis]

    def __repr__(self) -> str:
        return f"Subspace(ambient={self.ambient}, basis={[list(r) for r in self.basis]})"


def row_space(M: Matrix, field: Any, ambient: int | None = None) -> Subspace:
    if ambient is None:
        ambient = len(M[0]) if M else 0
    if not M:
        return Subspace(ambient, (), field)
    R, rk = rref(M, field, ambient)
    return Subspace(ambient, tuple(tuple(r) for r in R[:rk]), field)


def zero_subspace(n: int, field: Any) -> Subspace:
    return Subspace(n, (), field)


def full_space(n: int, field: Any) -> Subspace:
    return row_space([[field.one if i == j else field.zero for j in range(n)] for i in range(n)], field, n)


def _check_ambient(U: Subspace, W: Subspace) -> None:
    if U.ambient != W.ambient:
        raise AmbientMismatch(f"ambient dimensions {U.ambient} and {W.ambient} differ")


def subspace_sum(U: Subspace, W: Subspace) -> Subspace:
    _check_ambient(U, W)
    return row_space(list(U.basis) + list(W.basis), U.field, U.ambient)


def orthogonal(U: Subspace) -> Subspace:
    """Orthogonal complement under the standard bilinear form."""
    return Subspace(U.ambient, tuple(tuple(r) for r in null_space(list(U.basis), U.field, U.ambient)), U.field)


def subspace_intersection(U: Subspace, W: Subspace) -> Subspace:
    # U ∩ W = (U^perp + W^perp)^perp
    _check_ambient(U, W)
    return orthogonal(subspace_sum(orthogonal(U), orthogonal(W)))


def contains(U: Subspace, W: Subspace) -> bool:
    """True iff ``W`` is a subspace of ``U``."""
    _check_ambient(U, W)
    if W.dim > U.dim:
        return False
    return rank(list(U.basis) + list(W.basis), U.field) == U.dim


def count_subspaces(n: int, t: int, q: int) -> int:
    from .qcombinat import gaussian_binomial

    return gaussian_binomial(n, t, q)


def enumerate_subspaces(
    n: int, t: int, field: Any, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[Subspace]:
    """Yield every ``t``-dimensional subspace of F^n exactly once.

    Order: pivot-column sets lexicographically, then the free entries
    counted base-q in ``field.elements()`` order with the first free
    position (row-major) most significant.  ``field`` may be an int q.
    """
    if isinstance(field, int):
        from .field import gf

        field = gf(field)
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    total = count_subspaces(n, t, field.order)
    if total > cap:
        raise EnumerationTooLarge(f"{t}-subspaces of F_{field.order}^{n}", total, cap)
    return _enumerate(n, t, field)


def _enumerate(n: int, t: int, field: Any) -> Iterator[Subspace]:
    elems = field.elements()
    for piv in combinations(range(n), t):
        pivset = set(piv)
        free = [(i, j) for i, pc in enumerate(piv) for j in range(pc + 1, n) if j not in pivset]
        for vals in product(elems, repeat=len(free)):
            rows = [[field.zero] * n for _ in range(t)]
            for i, pc in enumerate(piv):
                rows[i][pc] = field.one
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield Subspace(n, tuple(tuple(r) for r in rows), field)
