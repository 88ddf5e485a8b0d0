"""Rank-metric code invariants, minimum-weight supports and q-Steiner systems."""

from .code import (
    RankCode,
    WeightDistribution,
    classify,
    defect,
    dual,
    gabidulin,
    min_distance,
    predicted_A_d,
    rank_weight,
    weight_distribution,
)
from .field import FieldTower, make_field
from .linalg import Subspace, enumerate_subspaces, row_space
from .qcombinat import cyclotomic, gaussian_binomial, j_set, verify_factorization
from .rmcfile import load_code, save_code
from .steiner import block_count, feasibility, min_weight_supports, verify_steiner
from .supports import generalized_weights, star_closure, supp

__version__ = "0.1.0"


def example_path():
    """Path of the bundled ``.rmc`` file for the [4,2,2] example code over F_16."""
    from importlib.resources import files

    return files(__name__) / "data" / "example_422.rmc"


__all__ = [
    "FieldTower",
    "RankCode",
    "Subspace",
    "WeightDistribution",
    "block_count",
    "classify",
    "cyclotomic",
    "defect",
    "dual",
    "enumerate_subspaces",
    "feasibility",
    "gabidulin",
    "gaussian_binomial",
    "generalized_weights",
    "j_set",
    "load_code",
    "make_field",
    "min_distance",
    "min_weight_supports",
    "example_path",
    "predicted_A_d",
    "rank_weight",
    "row_space",
    "save_code",
    "star_closure",
    "supp",
    "verify_factorization",
    "verify_steiner",
    "weight_distribution",
]
