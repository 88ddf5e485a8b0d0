"""F_{q^m}-linear rank-metric codes.

A :class:`RankCode` is the row space of a ``k x n`` generator matrix over the
big field of a :class:`~rankmetric.field.FieldTower`.  Weight distributions
are computed by enumerating all ``q**(m*k)`` codewords, so everything here is
exact and meant for desk-scale parameters.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import islice, product
from typing import Iterator, Sequence

from . import linalg
from .errors import (
    DependentEvaluationPoints,
    DimensionTooLarge,
    EnumerationTooLarge,
    InvalidCode,
    NonIntegralCount,
)
from .field import FieldTower
from .qcombinat import gaussian_binomial

log = logging.getLogger(__name__)

DEFAULT_CODEWORD_CAP = 1 << 24

MRD = "MRD"
DUALLY_AMRD = "dually-AMRD"
AMRD_ONLY = "AMRD-only"
OTHER = "other"


def _fp_rank_bits(vals: list[int]) -> int:
    """Rank over F_2 of ints read as bit vectors."""
    basis: list[int] = []  # distinct leading bits, kept in decreasing order
    for v in vals:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def rank_weight(v: Sequence[int], tower: FieldTower) -> int:
    """``dim_{F_q} <v_1, ..., v_n>``.

    Computed as the F_p-dimension of the F_q-span divided by ``e``; this
    avoids basis expansion and is an independent route from
    ``rank(expand(v, B))``.
    """
    nz = [x for x in v if x]
    if not nz:
        return 0
    if tower.e == 1:
        vecs = nz
    else:
        vecs = [tower.mul(s, x) for x in nz for s in tower.subfield_basis]
    if tower.p == 2:
        return _fp_rank_bits(vecs) // tower.e
    return linalg.rank([tower.coeffs(x) for x in vecs], tower.prime_field) // tower.e


@dataclass(frozen=True)
class WeightDistribution:
    """Exact counts ``A_0..A_n`` of codewords by rank weight."""

    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> int:
        return next(i for i, a in enumerate(self.counts) if i > 0 and a > 0)

    def as_list(self) -> list[int]:
        return list(self.counts)


class RankCode:
    """A ``k``-dimensional F_{q^m}-linear code in F_{q^m}^n.

    ``allow_long`` lifts the ``n <= m`` restriction (Gabidulin codes exist
    without it) but such codes are refused by :func:`classify`.
    """

    def __init__(self, tower: FieldTower, G: Sequence[Sequence[int]], allow_long: bool = False) -> None:
        G = tuple(tuple(int(x) for x in row) for row in G)
        if not G or not G[0]:
            raise InvalidCode("generator matrix is empty")
        n = len(G[0])
        if any(len(row) != n for row in G):
            raise InvalidCode("generator rows have different lengths")
        if any(not 0 <= x < tower.order for row in G for x in row):
            raise InvalidCode("generator entry outside the field")
        k = len(G)
        if linalg.rank(G, tower) != k:
            raise InvalidCode("generator rows are linearly dependent")
        if not 1 <= k < n:
            raise InvalidCode(f"code must be nontrivial (1 <= k < n), got k={k}, n={n}")
        if n > tower.m:
            if not allow_long:
                raise InvalidCode(f"n={n} exceeds m={tower.m}; pass allow_long to override")
            log.warning("code length n=%d exceeds m=%d", n, tower.m)
        self.tower = tower
        self.G = G
        self.n = n
        self.k = k
        self.allow_long = allow_long

    @property
    def size(self) -> int:
        return self.tower.order**self.k

    def encode(self, msg: Sequence[int]) -> tuple[int, ...]:
        t = self.tower
        out = [0] * self.n
        for a, row in zip(msg, self.G):
            if a:
                out = [t.add(x, t.mul(a, y)) for x, y in zip(out, row)]
        return tuple(out)

    def codewords(self, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, ...]]:
        """Codewords for messages ``start..stop-1`` counted base ``q**m``.

        The first message coordinate is the most significant digit.
        """
        t = self.tower
        scaled = [[tuple(t.mul(a, y) for y in row) for a in t.elements()] for row in self.G]
        add = t.add
        zero = (0,) * self.n

        def gen() -> Iterator[tuple[int, ...]]:
            for msg in product(range(t.order), repeat=self.k):
                w = zero
                for i, a in enumerate(msg):
                    if a:
                        w = tuple(map(add, w, scaled[i][a]))
                yield w

        return islice(gen(), start, stop)

    def same_space(self, other: "RankCode") -> bool:
        if self.tower != other.tower or self.n != other.n or self.k != other.k:
            return False
        return linalg.rank(list(self.G) + list(other.G), self.tower) == self.k

    def format_generator(self) -> list[list[str]]:
        return [[self.tower.format(x) for x in row] for row in self.G]

    def __repr__(self) -> str:
        return f"RankCode(n={self.n}, k={self.k}, q={self.tower.q}, m={self.tower.m})"


def _check_cap(C: RankCode, cap: int) -> None:
    if C.size > cap:
        raise EnumerationTooLarge(f"codewords of [{C.n},{C.k}] code over F_{C.tower.order}", C.size, cap)


def weight_histogram(C: RankCode, start: int = 0, stop: int | None = None) -> list[int]:
    """Weight counts over one message range; ranges merge by addition."""
    hist = [0] * (C.n + 1)
    tw = C.tower
    for w in C.codewords(start, stop):
        hist[rank_weight(w, tw)] += 1
    return hist


def weight_distribution(C: RankCode, cap: int = DEFAULT_CODEWORD_CAP) -> WeightDistribution:
    _check_cap(C, cap)
    hist = weight_histogram(C)
    wd = WeightDistribution(tuple(hist))
    assert wd.total == C.size and wd[0] == 1
    assert wd.min_distance <= C.n - C.k + 1, "Singleton bound violated"
    return wd


def min_distance(C: RankCode, cap: int = DEFAULT_CODEWORD_CAP) -> int:
    return weight_distribution(C, cap).min_distance


def dual(C: RankCode) -> RankCode:
    """The orthogonal code under the standard (non-Hermitian) inner product."""
    H = linalg.null_space(C.G, C.tower, C.n)
    return RankCode(C.tower, H, allow_long=C.allow_long)


def defect(C: RankCode, wd: WeightDistribution | None = None, cap: int = DEFAULT_CODEWORD_CAP) -> int:
    """Rank defect ``n - k + 1 - d``."""
    d = (wd or weight_distribution(C, cap)).min_distance
    return C.n - C.k + 1 - d


def classify_defects(def_c: int, def_dual: int) -> str:
    if def_c == 0:
        return MRD
    if def_c == 1:
        return DUALLY_AMRD if def_dual == 1 else AMRD_ONLY
    return OTHER


def classify(C: RankCode, cap: int = DEFAULT_CODEWORD_CAP) -> str:
    """One of ``"MRD"``, ``"dually-AMRD"``, ``"AMRD-only"``, ``"other"``."""
    if C.allow_long:
        raise InvalidCode("classification requires n <= m (allow_long is set)")
    D = dual(C)
    _check_cap(C, cap)
    _check_cap(D, cap)
    return classify_defects(defect(C, cap=cap), defect(D, cap=cap))


def gabidulin(
    tower: FieldTower, points: Sequence[int], k: int, allow_long: bool = False
) -> RankCode:
    """Code with generator rows ``(g_1^{q^i}, ..., g_n^{q^i})`` for ``i = 0..k-1``."""
    n = len(points)
    if n > tower.m and not allow_long:
        raise DimensionTooLarge(f"n={n} exceeds m={tower.m}")
    if not 1 <= k <= n:
        raise DimensionTooLarge(f"need 1 <= k <= n, got k={k}, n={n}")
    if not tower.is_independent_over_subfield(list(points)):
        raise DependentEvaluationPoints("evaluation points are dependent over F_q")
    G = [[tower.frobenius(g, i) for g in points] for i in range(k)]
    return RankCode(tower, G, allow_long=allow_long)


def predicted_A_d(d: int, q: int, m: int) -> int:
    """``[2d, d+1]_q / [d, 1]_q * (q^m - 1)``, the minimum-weight count forced
    on a ``[2d, d, d]`` dually AMRD code with no words of weight ``d+1``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    num = gaussian_binomial(2 * d, d + 1, q)
    den = gaussian_binomial(d, 1, q)
    quo, rem = divmod(num, den)
    if rem:
        raise NonIntegralCount(num, den, "A_d block quotient")
    return quo * (q**m - 1)


def projective_weight_distribution(C: RankCode) -> WeightDistribution:
    """Weight distribution from one representative per F_{q^m}-line.

    Rank weight is invariant under nonzero scaling, so counting messages
    whose first nonzero coordinate is 1 and multiplying by ``q^m - 1``
    gives the same counts ``q^m - 1`` times faster.  Used as a search
    prefilter; :func:`weight_distribution` stays the reference.
    """
    t = C.tower
    hist = [0] * (C.n + 1)
    hist[0] = 1
    scaled = [[tuple(t.mul(a, y) for y in row) for a in t.elements()] for row in C.G]
    for lead in range(C.k):
        for tail in product(range(t.order), repeat=C.k - lead - 1):
            w = scaled[lead][1]
            for i, a in enumerate(tail, lead + 1):
                if a:
                    w = tuple(map(t.add, w, scaled[i][a]))
            hist[rank_weight(w, t)] += t.order - 1
    return WeightDistribution(tuple(hist))
