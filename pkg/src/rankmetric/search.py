"""Seeded random search for ``[2d, d, d]`` dually AMRD codes with ``A_{d+1} = 0``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import linalg
from .code import (
    DEFAULT_CODEWORD_CAP,
    DUALLY_AMRD,
    RankCode,
    _check_cap,
    classify,
    dual,
    projective_weight_distribution,
    weight_distribution,
)
from .field import FieldTower
from .rng import SplitMix64


def random_code(tower: FieldTower, n: int, k: int, rng: SplitMix64) -> RankCode:
    """Uniform random full-rank ``k x n`` generator, entries drawn row-major."""
    while True:
        G = [[rng.below(tower.order) for _ in range(n)] for _ in range(k)]
        if linalg.rank(G, tower) == k:
            return RankCode(tower, G)


@dataclass
class SearchResult:
    d: int
    trials: int
    seed: int
    hits: list[dict[str, Any]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"d": self.d, "trials": self.trials, "seed": self.seed, "hit_count": len(self.hits), "hits": self.hits}


def search(d: int, tower: FieldTower, trials: int, seed: int, cap: int = DEFAULT_CODEWORD_CAP) -> SearchResult:
    """Draw ``trials`` random ``[2d, d]`` codes and keep the distinct qualifying ones.

    Candidates pass a projective prefilter first; every hit is then
    re-verified with full enumeration and :func:`classify`.
    """
    n, k = 2 * d, d
    rng = SplitMix64(seed)
    result = SearchResult(d, trials, seed)
    seen: set[tuple[tuple[int, ...], ...]] = set()
    for trial in range(trials):
        C = random_code(tower, n, k, rng)
        _check_cap(C, cap)
        pw = projective_weight_distribution(C)
        if pw.min_distance != d or pw[d + 1] != 0:
            continue
        D = dual(C)
        if projective_weight_distribution(D).min_distance != d:
            continue
        R, _ = linalg.rref(C.G, tower)
        key = tuple(tuple(r) for r in R)
        if key in seen:
            continue
        wd = weight_distribution(C, cap)
        if classify(C, cap) != DUALLY_AMRD or wd[d + 1] != 0:  # pragma: no cover - prefilter is exact
            raise AssertionError("projective prefilter disagrees with full enumeration")
        seen.add(key)
        canon = RankCode(tower, key)
        result.hits.append(
            {
                "trial": trial,
                "generator": canon.format_generator(),
                "weight_distribution": wd.as_list(),
                "dual_weight_distribution": weight_distribution(D, cap).as_list(),
            }
        )
    return result
