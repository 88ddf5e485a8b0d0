"""Minimum-weight supports as design blocks, and q-Steiner system checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from . import linalg
from .code import RankCode, rank_weight, weight_distribution, DEFAULT_CODEWORD_CAP
from .errors import BlockCountMismatch, HypothesisViolated, NonIntegralCount, TTooSmall
from .field import gf, is_prime, prime_factors
from .linalg import DEFAULT_ENUMERATION_CAP, Subspace
from .qcombinat import cyclotomic, gaussian_binomial, j_set, lemma_jab_check, cyclotomic_gcd_check
from .supports import supp

REPORT_CAP = 100


@dataclass(frozen=True)
class DesignBlocks:
    """A set of ``k_blk``-dimensional subspaces of F_q^n, in sorted canonical order."""

    q: int
    t: int
    k_blk: int
    n: int
    blocks: tuple[Subspace, ...]
    field: Any = field(compare=False, repr=False, default=None)

    def __post_init__(self) -> None:
        if len(set(self.blocks)) != len(self.blocks):
            raise ValueError("blocks are not pairwise distinct")
        for B in self.blocks:
            if B.dim != self.k_blk or B.ambient != self.n:
                raise ValueError(f"block {B} is not a {self.k_blk}-subspace of F_q^{self.n}")

    def with_t(self, t: int) -> "DesignBlocks":
        return DesignBlocks(self.q, t, self.k_blk, self.n, self.blocks, self.field)

    def without(self, index: int) -> "DesignBlocks":
        blocks = self.blocks[:index] + self.blocks[index + 1:]
        return DesignBlocks(self.q, self.t, self.k_blk, self.n, blocks, self.field)

    def __len__(self) -> int:
        return len(self.blocks)


def min_weight_supports(C: RankCode, cap: int = DEFAULT_CODEWORD_CAP) -> DesignBlocks:
    """The distinct supports of the minimum-weight codewords.

    Raises BlockCountMismatch unless ``|blocks| * (q^m - 1) == A_d``.
    """
    wd = weight_distribution(C, cap)
    d = wd.min_distance
    tw = C.tower
    seen: set[Subspace] = set()
    for w in C.codewords():
        if rank_weight(w, tw) == d:
            seen.add(supp(w, tw))
    if len(seen) * (tw.order - 1) != wd[d]:
        raise BlockCountMismatch(f"{len(seen)} supports but A_d/(q^m-1) = {wd[d]}/{tw.order - 1}")
    blocks = tuple(sorted(seen, key=lambda s: s.basis))
    return DesignBlocks(tw.q, d - 1, d, C.n, blocks, tw.base)


def block_count(t: int, k: int, n: int, q: int) -> int:
    """``[n t]_q / [k t]_q``, the block count of an ``S_q(t, k, n)``."""
    if not 0 <= t <= k <= n:
        raise ValueError(f"need t <= k <= n, got ({t}, {k}, {n})")
    num, den = gaussian_binomial(n, t, q), gaussian_binomial(k, t, q)
    quo, rem = divmod(num, den)
    if rem:
        raise NonIntegralCount(num, den, f"block count of S_{q}({t},{k},{n})")
    return quo


@dataclass
class SteinerReport:
    q: int
    t: int
    k: int
    n: int
    is_steiner: bool
    uncovered: list[Subspace]
    multiply_covered: list[tuple[Subspace, int]]
    uncovered_total: int
    multiply_covered_total: int
    expected_block_count: int | None
    actual_block_count: int
    degenerate: bool = False

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "t": self.t,
            "k": self.k,
            "n": self.n,
            "is_steiner": self.is_steiner,
            "degenerate": self.degenerate,
            "expected_block_count": self.expected_block_count,
            "actual_block_count": self.actual_block_count,
            "uncovered_total": self.uncovered_total,
            "multiply_covered_total": self.multiply_covered_total,
            "uncovered": [s.to_json() for s in self.uncovered],
            "multiply_covered": [{"subspace": s.to_json(), "count": c} for s, c in self.multiply_covered],
        }


def _t_subspaces_of_block(B: Subspace, t: int, fld: Any) -> list[Subspace]:
    out = []
    for S in linalg.enumerate_subspaces(B.dim, t, fld):
        rows = linalg.matmul(S.basis, B.basis, fld) if t else []
        out.append(linalg.row_space(rows, fld, B.ambient))
    return out


def verify_steiner(
    design: DesignBlocks, t: int | None = None, cap: int = DEFAULT_ENUMERATION_CAP
) -> SteinerReport:
    """Count, for every ``t``-subspace of F_q^n, how many blocks contain it.

    Coverage is tallied block by block (each block's own ``t``-subspaces),
    then every ``t``-subspace of the ambient space is looked up.
    """
    t = design.t if t is None else t
    fld = design.field if design.field is not None else gf(design.q)
    n, k = design.n, design.k_blk
    if not 0 <= t <= k:
        raise ValueError(f"need 0 <= t <= k={k}, got t={t}")
    stream = linalg.enumerate_subspaces(n, t, fld, cap)
    cover: Counter[Subspace] = Counter()
    for B in design.blocks:
        cover.update(_t_subspaces_of_block(B, t, fld))
    uncovered: list[Subspace] = []
    multi: list[tuple[Subspace, int]] = []
    n_unc = n_multi = 0
    for T in stream:
        c = cover.get(T, 0)
        if c == 0:
            n_unc += 1
            if len(uncovered) < REPORT_CAP:
                uncovered.append(T)
        elif c > 1:
            n_multi += 1
            if len(multi) < REPORT_CAP:
                multi.append((T, c))
    try:
        expected = block_count(t, k, n, design.q)
    except NonIntegralCount:
        expected = None
    actual = len(design.blocks)
    ok = n_unc == 0 and n_multi == 0 and expected == actual
    return SteinerReport(design.q, t, k, n, ok, uncovered, multi, n_unc, n_multi, expected, actual, degenerate=t == 0)


def derived_params(t: int, k: int, n: int) -> tuple[int, int, int]:
    """Parameters of the derived system ``S_q(t-1, k-1, n-1)``."""
    if t < 2:
        raise TTooSmall(f"derived design needs t >= 2, got t={t}")
    return t - 1, k - 1, n - 1


def derived_chain(t: int, k: int, n: int) -> list[tuple[int, int, int]]:
    """Iterate :func:`derived_params` down to ``t = 1``, starting triple included."""
    chain = [(t, k, n)]
    while chain[-1][0] >= 2:
        chain.append(derived_params(*chain[-1]))
    return chain


@dataclass(frozen=True)
class FeasibilityReport:
    d: int
    q: int
    d_plus_1_prime: bool
    d_even: bool
    block_count_integral: bool
    block_count: int | None

    @property
    def verdict(self) -> bool:
        return self.d_plus_1_prime and self.d_even and self.block_count_integral

    @property
    def reasons(self) -> list[str]:
        out = []
        if not self.d_plus_1_prime:
            out.append(f"d+1={self.d + 1} is not prime")
        if not self.d_even:
            out.append(f"d={self.d} is odd")
        if not self.block_count_integral:
            out.append(f"block count of S_{self.q}({self.d - 1},{self.d},{2 * self.d}) is not integral")
        return out

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "q": self.q,
            "d_plus_1_prime": self.d_plus_1_prime,
            "d_even": self.d_even,
            "block_count_integral": self.block_count_integral,
            "block_count": self.block_count,
            "verdict": self.verdict,
            "reasons": self.reasons,
        }


def feasibility(d: int, q: int) -> FeasibilityReport:
    """Necessary conditions for a ``[2d, d, d]`` dually AMRD code with ``A_{d+1} = 0``.

    A true verdict only means no known obstruction fires.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    try:
        bc: int | None = block_count(d - 1, d, 2 * d, q)
    except NonIntegralCount:
        bc = None
    return FeasibilityReport(d, q, is_prime(d + 1), d % 2 == 0, bc is not None, bc)


@dataclass(frozen=True)
class ObstructionWitness:
    """Numeric replay of why ``S_q(p-1, p, d+p)`` cannot exist when ``p | d+1 != p``."""

    d: int
    p: int
    q: int
    numerator: int  # [d+p, p-1]_q
    denominator: int  # [p, 1]_q = Phi_p(q)
    remainder: int
    j_set: tuple[int, ...]
    gcds: tuple[tuple[int, int], ...]  # (c, gcd(Phi_p(q), Phi_c(q))) for c in J
    multiples_of_p_excluded: tuple[int, ...]  # c <= d+p with p | c, none in J

    @property
    def non_integral(self) -> bool:
        return self.remainder != 0

    @property
    def consistent(self) -> bool:
        return self.non_integral and all(g == 1 for _, g in self.gcds)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "p": self.p,
            "q": self.q,
            "numerator": self.numerator,
            "denominator": self.denominator,
            "remainder": self.remainder,
            "j_set": list(self.j_set),
            "gcds": [{"c": c, "gcd": g} for c, g in self.gcds],
            "multiples_of_p_excluded": list(self.multiples_of_p_excluded),
            "non_integral": self.non_integral,
        }


def obstruction_witness(d: int, p: int, q: int = 2) -> ObstructionWitness:
    if not is_prime(p) or (d + 1) % p or p == d + 1:
        raise HypothesisViolated(f"need a prime p with p | d+1 and p != d+1, got d={d}, p={p}")
    a, b = d + p, p - 1
    num = gaussian_binomial(a, b, q)
    den = gaussian_binomial(p, 1, q)
    assert den == cyclotomic(p)(q)
    js = j_set(a, b).members
    gcds = tuple((c, cyclotomic_gcd_check(p, c, q).gcd) for c in js)
    excluded = tuple(c for c in range(p, a + 1, p) if lemma_jab_check(d, p, c).holds)
    return ObstructionWitness(d, p, q, num, den, num % den, js, gcds, excluded)


def prime_divisors_below(d: int) -> list[int]:
    """Primes ``p`` with ``p | d+1`` and ``p != d+1``."""
    return [p for p in prime_factors(d + 1) if p != d + 1]
