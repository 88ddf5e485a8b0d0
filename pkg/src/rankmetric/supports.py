"""Supports, subcode weights, Frobenius closure and generalized rank weights."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import linalg
from .code import RankCode, rank_weight
from .errors import InvalidCode
from .field import FieldTower
from .linalg import DEFAULT_ENUMERATION_CAP, Subspace


def expand(v: Sequence[int], tower: FieldTower, B: Sequence[int] | None = None) -> list[list[int]]:
    """The ``m x n`` matrix over F_q whose column ``j`` is the B-coordinate vector of ``v_j``."""
    basis = tower.basis(B)
    cols = [basis.coords(x) for x in v]
    return [[col[i] for col in cols] for i in range(tower.m)]


def supp(v: Sequence[int], tower: FieldTower, B: Sequence[int] | None = None) -> Subspace:
    """F_q row space of ``expand(v, B)``, a subspace of F_q^n."""
    return linalg.row_space(expand(v, tower, B), tower.base, len(v))


@dataclass(frozen=True)
class Subcode:
    """An ``r``-dimensional F_{q^m}-subspace of F_{q^m}^n given by basis rows.

    ``parent`` is the code it lives in, or ``None`` for a free-standing
    subspace (a star closure need not lie inside the code).
    """

    tower: FieldTower
    basis: tuple[tuple[int, ...], ...]
    parent: RankCode | None = None

    def __post_init__(self) -> None:
        if not self.basis:
            raise InvalidCode("subcode needs at least one basis row")
        if linalg.rank(self.basis, self.tower) != len(self.basis):
            raise InvalidCode("subcode basis rows are dependent")
        if self.parent is not None:
            k = self.parent.k
            if linalg.rank(list(self.parent.G) + list(self.basis), self.tower) != k:
                raise InvalidCode("subcode is not contained in its parent code")

    @classmethod
    def of(cls, C: RankCode, rows: Sequence[Sequence[int]] | None = None) -> "Subcode":
        rows = C.G if rows is None else rows
        return cls(C.tower, tuple(tuple(r) for r in rows), C)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return len(self.basis[0])


def supp_subcode(D: Subcode) -> Subspace:
    """Sum of the supports of the basis rows."""
    t = D.tower
    rows: list[list[int]] = []
    for v in D.basis:
        rows.extend(expand(v, t))
    return linalg.row_space(rows, t.base, D.n)


def wt_subcode(D: Subcode) -> int:
    return supp_subcode(D).dim


def star_closure(D: Subcode) -> Subcode:
    """F_{q^m}-span of all coordinatewise Frobenius twists ``v^{q^i}``, ``i < m``."""
    t = D.tower
    rows = [[t.frobenius(x, i) for x in v] for v in D.basis for i in range(t.m)]
    R, rk = linalg.rref(rows, t, D.n)
    return Subcode(t, tuple(tuple(r) for r in R[:rk]))


def subcodes(C: RankCode, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Subcode]:
    """Every ``r``-dimensional subcode, via ``r``-subspaces of the message space."""
    t = C.tower
    for S in linalg.enumerate_subspaces(C.k, r, t, cap):
        rows = linalg.matmul(S.basis, C.G, t)
        yield Subcode(t, tuple(tuple(x) for x in rows), C)


@dataclass(frozen=True)
class GeneralizedWeights:
    values: tuple[int, ...]
    subcodes_checked: int = 0

    def __getitem__(self, r: int) -> int:
        """``d_r`` for ``r >= 1``."""
        return self.values[r - 1]

    @property
    def strictly_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))


def generalized_weights(
    C: RankCode, cap: int = DEFAULT_ENUMERATION_CAP, cross_check: bool = True
) -> GeneralizedWeights:
    """``d_r = min wt(D)`` over ``r``-dimensional subcodes ``D``, for ``r = 1..k``.

    With ``cross_check`` every subcode also has ``dim star_closure(D)``
    compared against ``wt(D)``; a mismatch raises ``AssertionError``.
    """
    values = []
    checked = 0
    for r in range(1, C.k + 1):
        best = None
        for D in subcodes(C, r, cap):
            w = wt_subcode(D)
            if cross_check:
                s = star_closure(D).dim
                if s != w:
                    raise AssertionError(f"wt(D)={w} but dim D*={s} for D={D.basis}")
            checked += 1
            if best is None or w < best:
                best = w
        values.append(best)
    return GeneralizedWeights(tuple(values), checked)


def combine_supports(u: Sequence[int], v: Sequence[int], tower: FieldTower) -> tuple[int, int, tuple[int, ...]]:
    """Find ``(alpha, beta, w = alpha*u + beta*v)`` with ``supp(w) = supp(u) + supp(v)``.

    Search order: ``alpha = 1`` with ``beta`` ascending, then the remaining
    ``alpha`` ascending, each with ``beta`` ascending.
    """
    if not any(u) or not any(v):
        raise ValueError("u and v must be nonzero")
    target = linalg.subspace_sum(supp(u, tower), supp(v, tower))
    alphas = [1] + [a for a in tower.elements() if a != 1]
    for a in alphas:
        for b in tower.elements():
            w = tuple(tower.add(tower.mul(a, x), tower.mul(b, y)) for x, y in zip(u, v))
            if rank_weight(w, tower) == target.dim and supp(w, tower) == target:
                return a, b, w
    raise AssertionError("no combination reaches supp(u) + supp(v)")  # pragma: no cover
