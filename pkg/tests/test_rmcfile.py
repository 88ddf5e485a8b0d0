from __future__ import annotations

import pytest

from rankmetric.code import gabidulin
from rankmetric.errors import ParseError
from rankmetric.field import make_field
from rankmetric.rmcfile import CodeFile, load_code, load_code_file, parse_rmc, save_code
from rankmetric.rng import SplitMix64


def test_bundled_example_loads(example_file, example_code):
    cf = load_code_file(example_file)
    assert (cf.p, cf.e, cf.m, cf.modulus) == (2, 1, 4, "z^4+z+1")
    assert cf.generator == (("0", "1", "z^5", "0"), ("1", "0", "0", "z^5"))
    C = load_code(example_file)
    assert C.G == example_code.G and C.tower == example_code.tower


def test_parse_defaults_and_comments():
    text = """
    # comment line
    p = 3   # trailing comment
    m = 2
    generator = [["1", "z"]]  # one row
    """
    cf = parse_rmc(text)
    assert cf.e == 1 and cf.modulus is None and cf.notation is None
    C = cf.to_code()
    assert C.tower.modulus == (1, 0, 1)
    assert C.G == ((1, 3),)


def test_integer_entries_and_notation():
    cf = parse_rmc('p = 2\nm = 3\nnotation = "gabidulin"\ngenerator = [[1, 2, "4"]]\n')
    assert cf.generator == (("1", "2", "4"),)
    assert cf.notation == "gabidulin"


def test_hash_inside_string_is_not_a_comment():
    cf = parse_rmc('p = 2\nm = 2\nnotation = "a#b"\ngenerator = [["1", "0"]]\n')
    assert cf.notation == "a#b"


def test_round_trip(tmp_path):
    F = make_field(3, 2, 2)
    C = gabidulin(F, F.default_basis, 1)
    path = tmp_path / "g.rmc"
    save_code(C, path)
    back = load_code(path)
    assert back.G == C.G and back.tower == C.tower
    assert parse_rmc(CodeFile.from_code(C, "x").dumps()).notation == "x"


@pytest.mark.parametrize(
    "text",
    [
        "p = 2\nm = 4\n",  # no generator
        "m = 4\ngenerator = [['1','0']]\n",  # no p
        "p = 2\nm = 4\ngenerator = [['1','0'],['1']]\n",  # ragged
        "p = 2\nm = 4\ngenerator = [['1','0']\n",  # unterminated
        "p = 2\nm = 4\ngenerator = []\n",
        "p = 2\nm = 4\nfoo = 1\ngenerator = [['1','0']]\n",
        "p = 2\np = 2\nm = 4\ngenerator = [['1','0']]\n",
        "p = two\nm = 4\ngenerator = [['1','0']]\n",
        "p = 2\nm = 4\ngenerator = [[1.5, 0]]\n",
        "p = 2\nm = 4\ngenerator ['1','0']\n",
        "p = 2\nm = 4\ngenerator = [['1','0']]]\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_rmc(text)


@pytest.mark.parametrize(
    "text",
    [
        "p = 4\nm = 2\ngenerator = [['1','0']]\n",  # not prime
        "p = 2\nm = 4\nmodulus = 'z^4+1'\ngenerator = [['1','0']]\n",  # reducible
        "p = 2\nm = 4\ngenerator = [['1','0','y']]\n",  # bad element
        "p = 2\nm = 4\ngenerator = [['1','0'],['1','0']]\n",  # dependent rows
        "p = 2\nm = 2\ngenerator = [['1','0','1']]\n",  # n > m
    ],
)
def test_semantic_errors_become_parse_errors(text):
    with pytest.raises(ParseError):
        parse_rmc(text).to_code()


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_code(tmp_path / "absent.rmc")


def test_splitmix64_reference_vectors():
    r = SplitMix64(1234567)
    assert [r.next_u64() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]
    r = SplitMix64(0)
    assert r.next_u64() == 0xE220A8397B1DCDAF


def test_splitmix64_below():
    r = SplitMix64(42)
    draws = [r.below(16) for _ in range(4000)]
    assert all(0 <= x < 16 for x in draws)
    assert all(150 < draws.count(v) < 350 for v in range(16))
    assert [SplitMix64(7).below(10) for _ in range(3)] == [SplitMix64(7).below(10)] * 3
    with pytest.raises(ValueError):
        r.below(0)
