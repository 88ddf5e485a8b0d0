from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from rankmetric import linalg
from rankmetric.code import RankCode, gabidulin, rank_weight
from rankmetric.errors import InvalidCode, NotABasis
from rankmetric.field import make_field
from rankmetric.linalg import contains, subspace_sum
from rankmetric.supports import (
    Subcode,
    combine_supports,
    expand,
    generalized_weights,
    star_closure,
    subcodes,
    supp,
    supp_subcode,
    wt_subcode,
)

from oracles import vector_set


def other_bases(F, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        cand = [rng.randrange(1, F.order) for _ in range(F.m)]
        if F.is_independent_over_subfield(cand):
            out.append(cand)
    return out


def union_support(C):
    """Sum of the supports of all codewords, computed word by word."""
    S = linalg.zero_subspace(C.n, C.tower.base)
    for w in C.codewords():
        S = subspace_sum(S, supp(w, C.tower))
    return S


def test_supp_examples(f16, example_code):
    z = f16.parse("z")
    assert supp((1, z, 0, 0), f16).basis == ((1, 0, 0, 0), (0, 1, 0, 0))
    assert supp(example_code.G[0], f16).basis == ((0, 1, 0, 0), (0, 0, 1, 0))
    assert supp((0, 0, 0, 0), f16).dim == 0
    assert supp((1, 1, 1, 1), f16).basis == ((1, 1, 1, 1),)


def test_expand_shape(f16):
    M = expand((1, 2, 4), f16)
    assert len(M) == 4 and all(len(r) == 3 for r in M)
    with pytest.raises(NotABasis):
        expand((1, 2), f16, [1, 2, 3, 4])


@pytest.mark.parametrize("p,e,m", [(2, 1, 4), (2, 2, 2), (3, 1, 2), (3, 2, 2)])
def test_supp_is_basis_independent(p, e, m):
    F = make_field(p, e, m)
    rng = random.Random(p + e + m)
    bases = other_bases(F, 3, m)
    for _ in range(60):
        v = [rng.randrange(F.order) for _ in range(m)]
        ref = supp(v, F)
        assert ref.dim == rank_weight(v, F)
        for B in bases:
            assert supp(v, F, B) == ref


def test_support_rules_exhaustive_f8():
    # scaling keeps the support, sums stay inside the sum of supports,
    # and dim supp equals the rank weight
    F = make_field(2, 1, 3)
    vecs = list(product(range(8), repeat=2))
    sup = {v: supp(v, F) for v in vecs}
    for v in vecs:
        assert sup[v].dim == rank_weight(v, F)
        for a in range(1, 8):
            assert sup[tuple(F.mul(a, x) for x in v)] == sup[v]
    for u in vecs:
        for v in vecs:
            s = tuple(F.add(x, y) for x, y in zip(u, v))
            assert contains(subspace_sum(sup[u], sup[v]), sup[s])


def test_star_closure_examples(f16, example_code):
    D = Subcode.of(example_code, [example_code.G[0]])
    S = star_closure(D)
    # (0, 1, w, 0) with w in F_4: twists span a 2-dimensional space
    assert S.basis == ((0, 1, 0, 0), (0, 0, 1, 0))
    assert S.parent is None
    assert star_closure(S).basis == S.basis
    G = Subcode(f16, ((1, 1, 1, 1),))
    assert star_closure(G).dim == 1  # already Frobenius invariant


def test_star_closure_trivial_extension():
    F = make_field(3, 1, 1)
    D = Subcode(F, ((1, 2, 0),))
    assert star_closure(D).basis == D.basis


def test_star_dimension_equals_weight_all_small_subcodes(f16, example_code):
    G3 = gabidulin(f16, f16.default_basis[:3], 2)
    for C in (example_code, G3):
        for r in (1, 2):
            for D in subcodes(C, r):
                assert star_closure(D).dim == wt_subcode(D)
                assert supp_subcode(D) == supp_subcode(star_closure(D))


def test_generalized_weights_example(example_code):
    gw = generalized_weights(example_code)
    assert gw.values == (2, 4)
    assert gw[1] == 2 and gw.strictly_increasing
    assert gw.subcodes_checked == 17 + 1


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 2), (4, 3)])
def test_generalized_weights_gabidulin(f16, n, k):
    C = gabidulin(f16, f16.default_basis[:n], k)
    gw = generalized_weights(C, cross_check=n < 4)
    assert gw.values == tuple(n - k + r for r in range(1, k + 1))


def test_last_generalized_weight_is_whole_support(f16, example_code):
    rng = random.Random(6)
    codes = [example_code]
    while len(codes) < 4:
        G = [[rng.choice([0, 0, 1, rng.randrange(16)]) for _ in range(4)] for _ in range(2)]
        if linalg.rank(G, f16) == 2:
            codes.append(RankCode(f16, G))
    for C in codes:
        gw = generalized_weights(C, cross_check=False)
        assert gw[C.k] == union_support(C).dim
        assert all(a <= b for a, b in zip(gw.values, gw.values[1:]))
        assert gw[1] == min(rank_weight(w, f16) for w in C.codewords(1))


def test_combine_supports_examples(f16):
    # beta = 1 gives (1, 1, 0, 0) of weight 1, so the first hit is beta = z
    assert combine_supports((1, 0, 0, 0), (0, 1, 0, 0), f16) == (1, 2, (1, 2, 0, 0))
    # alpha*u + u has support supp(u) only when alpha + 1 != 0
    a, b, w = combine_supports((1, 1, 0, 0), (1, 1, 0, 0), f16)
    assert (a, b) == (1, 0) and w == (1, 1, 0, 0)


def test_combine_supports_reaches_sum(f16):
    rng = random.Random(8)
    for _ in range(40):
        u = [rng.randrange(16) for _ in range(4)]
        v = [rng.randrange(16) for _ in range(4)]
        if not any(u) or not any(v):
            continue
        a, b, w = combine_supports(u, v, f16)
        assert w == tuple(f16.add(f16.mul(a, x), f16.mul(b, y)) for x, y in zip(u, v))
        assert supp(w, f16) == subspace_sum(supp(u, f16), supp(v, f16))
    with pytest.raises(ValueError):
        combine_supports((0, 0), (1, 0), f16)


def test_subcode_validation(f16, example_code):
    with pytest.raises(InvalidCode):
        Subcode(f16, ())
    with pytest.raises(InvalidCode):
        Subcode(f16, ((1, 0, 0, 0), (2, 0, 0, 0)))
    with pytest.raises(InvalidCode):
        Subcode.of(example_code, [[1, 1, 1, 1]])
    D = Subcode.of(example_code)
    assert D.dim == 2 and D.n == 4


def test_subcode_counts(example_code):
    assert sum(1 for _ in subcodes(example_code, 1)) == 17
    assert sum(1 for _ in subcodes(example_code, 2)) == 1
    assert vector_set(supp_subcode(Subcode.of(example_code))) == vector_set(union_support(example_code))


@settings(max_examples=150)
@given(st.lists(st.integers(0, 15), min_size=4, max_size=4), st.lists(st.integers(0, 15), min_size=4, max_size=4), st.integers(1, 15))
def test_support_properties(u, v, a):
    F = make_field(2, 1, 4, "z^4+z+1")
    su, sv = supp(u, F), supp(v, F)
    assert supp([F.mul(a, x) for x in u], F) == su
    s = [F.add(x, y) for x, y in zip(u, v)]
    assert contains(subspace_sum(su, sv), supp(s, F))
    assert su.dim == rank_weight(u, F)
