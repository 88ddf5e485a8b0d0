"""Exact arithmetic in a finite field tower F_p <= F_q <= F_{q^m}.

The big field is realised as a single extension F_p[z]/(f) of degree
``e*m``; F_q is the fixed field of x -> x^q inside it.  Elements are plain
Python ints in ``[0, p**(e*m))`` whose base-``p`` digits (least significant
first) are the polynomial coefficients of the element, low degree first.
This integer order is the canonical element enumeration used everywhere.

Fields with at most ``TABLE_LIMIT`` elements get log/antilog and Zech
tables, so every operation is a couple of list lookups.  Larger fields fall
back to polynomial arithmetic.
"""

from __future__ import annotations

import re
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from . import linalg
from .errors import DegreeMismatch, NotABasis, NotPrime, ParseError, ReducibleModulus

TABLE_LIMIT = 1 << 16
MAX_ORDER = 1 << 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, e)`` with ``q == p**e``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    e = 0
    r = q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, e


# ----------------------------------------------------------------------
# Polynomials over F_p as coefficient lists, low degree first
# ----------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    r = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    qt = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = r[-1] * inv_lead % p
        s = len(r) - len(b)
        qt[s] = c
        for i, y in enumerate(b):
            r[s + i] = (r[s + i] - c * y) % p
        _trim(r)
    return _trim(qt), r


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    return _pdivmod(a, f, p)[1]


def _ppowmod(a: Sequence[int], k: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while k:
        if k & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        k >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _peval(f: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_p."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]

    def frob_power(k: int) -> list[int]:
        # x^(p^k) mod f
        r = x
        for _ in range(k):
            r = _ppowmod(r, p, f, p)
        return r

    for r in prime_factors(n):
        h = _psub(frob_power(n // r), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return not _psub(frob_power(n), x, p)


def least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``n`` over F_p.

    Coefficient tuples ``(c_0, ..., c_{n-1})`` are compared with ``c_0``
    most significant; the returned tuple includes the leading 1.
    """
    for low in product(range(p), repeat=n):
        f = list(low) + [1]
        if n > 1 and any(_peval(f, a, p) == 0 for a in range(p)):
            continue
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ----------------------------------------------------------------------
# Element syntax
# ----------------------------------------------------------------------

_TERM = re.compile(r"^(\d*)\*?(z(?:\^(\d+))?)?$")


def parse_poly(text: str, p: int) -> list[int]:
    """Parse ``POLY`` (terms like ``3z^2``, ``z``, ``2``) into F_p coefficients."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty polynomial")
    coeffs: list[int] = []
    for term in s.split("+"):
        mt = _TERM.match(term)
        if not term or not mt or (not mt.group(1) and not mt.group(2)):
            raise ParseError(f"bad term {term!r} in {text!r}")
        c = int(mt.group(1)) if mt.group(1) else 1
        if mt.group(2):
            deg = int(mt.group(3)) if mt.group(3) is not None else 1
        else:
            deg = 0
        if deg >= len(coeffs):
            coeffs.extend([0] * (deg + 1 - len(coeffs)))
        coeffs[deg] = (coeffs[deg] + c) % p
    return _trim(coeffs)


def format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if not c:
            continue
        if deg == 0:
            terms.append(str(c))
            continue
        mono = "z" if deg == 1 else f"z^{deg}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


# ----------------------------------------------------------------------
# Fields
# ----------------------------------------------------------------------

class PrimeField:
    """F_p with elements ``0..p-1``; used for coordinate linear algebra."""

    zero = 0
    one = 1

    def __init__(self, p: int) -> None:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.order = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self) -> list[int]:
        return list(range(self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class FieldTower:
    """The tower F_p <= F_q <= F_{q^m} with q = p**e.

    Immutable after construction.  ``base`` is the F_q subfield as a field
    object whose elements are the big-field encodings of its members.
    """

    zero = 0
    one = 1

    def __init__(self, p: int, e: int, m: int, modulus: Sequence[int]) -> None:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1 or m < 1:
            raise DegreeMismatch("e and m must be positive")
        n = e * m
        f = _trim([c % p for c in modulus])
        if len(f) - 1 != n:
            raise DegreeMismatch(f"modulus has degree {len(f) - 1}, expected {n}")
        if f[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if p**n > MAX_ORDER:
            raise DegreeMismatch(f"field of order {p}^{n} exceeds 2^64")
        if not is_irreducible(f, p):
            raise ReducibleModulus(f"{format_poly(f)} is reducible over F_{p}")
        self.p = p
        self.e = e
        self.m = m
        self.q = p**e
        self.degree = n
        self.order = p**n
        self.modulus = tuple(f)
        self.prime_field = PrimeField(p)
        self._tables = self.order <= TABLE_LIMIT
        if self._tables:
            self._build_tables()
        self.subfield_basis = self._find_subfield_basis()
        self.base = Subfield(self)
        self.default_basis = self._greedy_basis()

    # -- encoding ------------------------------------------------------

    def coeffs(self, x: int) -> list[int]:
        """Polynomial coefficients of ``x`` (length ``e*m``, low degree first)."""
        out = []
        for _ in range(self.degree):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        x = 0
        mult = 1
        for c in coeffs:
            x += (c % self.p) * mult
            mult *= self.p
        return x

    def _reduce(self, poly: Sequence[int]) -> int:
        return self.from_coeffs(_pmod(poly, self.modulus, self.p))

    def _poly_mul(self, a: int, b: int) -> int:
        return self._reduce(_pmul(_trim(self.coeffs(a)), _trim(self.coeffs(b)), self.p))

    def elements(self) -> range:
        return range(self.order)

    # -- tables --------------------------------------------------------

    def _build_tables(self) -> None:
        N = self.order
        if N == 2:
            self._gen = 1
        else:
            self._gen = self._find_primitive()
        exp = [0] * (2 * (N - 1))
        log = [0] * N
        x = 1
        for k in range(N - 1):
            exp[k] = x
            log[x] = k
            x = self._poly_mul(x, self._gen)
        exp[N - 1:] = exp[: N - 1]
        self._exp = exp
        self._log = log
        p = self.p
        # zech[k] = log(1 + g^k), or -1 when 1 + g^k == 0
        zech = [0] * (N - 1)
        for k in range(N - 1):
            y = exp[k]
            r = y % p
            s = y - r + (r + 1) % p
            zech[k] = log[s] if s else -1
        self._zech = zech
        self._neg_shift = 0 if p == 2 else (N - 1) // 2

    def _find_primitive(self) -> int:
        N = self.order
        factors = prime_factors(N - 1)
        for g in range(2, N):
            c = _trim(self.coeffs(g))
            if all(_ppowmod(c, (N - 1) // r, self.modulus, self.p) != [1] for r in factors):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    @property
    def primitive_element(self) -> int:
        if not self._tables:
            return self._find_primitive()
        return self._gen

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if self._tables:
            la = self._log[a]
            z = self._zech[(self._log[b] - la) % (self.order - 1)]
            return 0 if z < 0 else self._exp[la + z]
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.from_coeffs(x + y for x, y in zip(ca, cb))

    def neg(self, a: int) -> int:
        if self.p == 2 or not a:
            return a
        if self._tables:
            return self._exp[self._log[a] + self._neg_shift]
        return self.from_coeffs(-c for c in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._tables:
            return self._exp[self._log[a] + self._log[b]]
        return self._poly_mul(a, b)

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self._tables:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if not a:
            return 0
        if self._tables:
            return self._exp[self._log[a] * k % (self.order - 1)]
        k %= self.order - 1
        return self._reduce(_ppowmod(_trim(self.coeffs(a)), k, self.modulus, self.p))

    def log(self, a: int) -> int:
        """Discrete log to the primitive element (table fields only)."""
        return self._log[a]

    def frobenius(self, x: int, i: int = 1) -> int:
        """Return ``x**(q**i)`` by ``i`` successive q-th powers."""
        if i < 0:
            raise ValueError("frobenius exponent must be non-negative")
        for _ in range(i % self.m if self.m else i):
            x = self.pow(x, self.q)
        return x

    def is_in_subfield(self, x: int) -> bool:
        return self.pow(x, self.q) == x

    # -- subfield and bases --------------------------------------------

    def _find_subfield_basis(self) -> tuple[int, ...]:
        # F_q is the F_p-kernel of x -> x^q - x
        fp = self.prime_field
        rows = []
        for i in range(self.degree):
            zi = self.p**i
            rows.append(self.coeffs(self.sub(self.pow(zi, self.q), zi)))
        kernel = linalg.left_null_space(rows, fp)
        if len(kernel) != self.e:  # pragma: no cover - field theory guarantees this
            raise AssertionError("subfield has wrong F_p-dimension")
        return tuple(self.from_coeffs(r) for r in kernel)

    def _fp_vectors(self, elems: Sequence[int]) -> list[list[int]]:
        """F_p coordinates of ``s*b`` for each subfield basis element ``s``."""
        return [self.coeffs(self.mul(s, b)) for b in elems for s in self.subfield_basis]

    def is_independent_over_subfield(self, elems: Sequence[int]) -> bool:
        if len(elems) > self.m:
            return False
        return linalg.rank(self._fp_vectors(elems), self.prime_field) == self.e * len(elems)

    def _greedy_basis(self) -> tuple[int, ...]:
        kept: list[int] = []
        ech = _Echelon(self.p)
        for x in range(1, self.order):
            if ech.try_add(self._fp_vectors([x])):
                kept.append(x)
                if len(kept) == self.m:
                    break
        return tuple(kept)

    def basis(self, elems: Sequence[int] | None = None) -> "Basis":
        """An F_q-basis object for coordinate expansion (default basis if omitted)."""
        if elems is None:
            return self._default_basis_obj
        return Basis(self, elems)

    @cached_property
    def _default_basis_obj(self) -> "Basis":
        return Basis(self, self.default_basis)

    def coords_over_subfield(self, x: int, B: Sequence[int] | None = None) -> list[int]:
        """Coefficients ``a_j`` in F_q with ``x = sum a_j * b_j``."""
        return self.basis(B).coords(x)

    def subfield_elements(self) -> list[int]:
        return self.base.elements()

    # -- syntax --------------------------------------------------------

    def parse(self, text: str) -> int:
        """Parse ``INT | POLY | POW``; polynomial forms are reduced modulo the modulus."""
        s = text.strip()
        if re.fullmatch(r"\d+", s):
            v = int(s)
            if v >= self.order:
                raise ParseError(f"integer {v} out of range for field of order {self.order}")
            return v
        return self._reduce(parse_poly(s, self.p))

    def format(self, x: int) -> str:
        return format_poly(_trim(self.coeffs(x)))

    def modulus_str(self) -> str:
        return format_poly(self.modulus)

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, e={self.e}, m={self.m}, modulus={self.modulus_str()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldTower):
            return NotImplemented
        return (self.p, self.e, self.m, self.modulus) == (other.p, other.e, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.m, self.modulus))


class _Echelon:
    """Incremental row echelon form over F_p for independence tests."""

    def __init__(self, p: int) -> None:
        self.p = p
        self.rows: dict[int, list[int]] = {}  # pivot column -> row with 1 at pivot

    def _reduce(self, v: list[int]) -> list[int]:
        p = self.p
        v = list(v)
        for c, row in self.rows.items():
            f = v[c]
            if f:
                v = [(a - f * b) % p for a, b in zip(v, row)]
        return v

    def try_add(self, vecs: Sequence[Sequence[int]]) -> bool:
        """Add all of ``vecs`` if together they are independent of the current rows."""
        saved = dict(self.rows)
        for v in vecs:
            v = self._reduce(list(v))
            piv = next((i for i, a in enumerate(v) if a), None)
            if piv is None:
                self.rows = saved
                return False
            inv = pow(v[piv], self.p - 2, self.p)
            v = [a * inv % self.p for a in v]
            for c, row in self.rows.items():
                f = row[piv]
                if f:
                    self.rows[c] = [(a - f * b) % self.p for a, b in zip(row, v)]
            self.rows[piv] = v
        return True


class Subfield:
    """F_q viewed inside its tower; elements are big-field encodings."""

    zero = 0
    one = 1

    def __init__(self, tower: FieldTower) -> None:
        self.tower = tower
        self.order = tower.q
        self.p = tower.p
        self.add = tower.add
        self.sub = tower.sub
        self.neg = tower.neg
        self.mul = tower.mul
        self.inv = tower.inv

    @cached_property
    def _elements(self) -> list[int]:
        t = self.tower
        fp = range(t.p)
        out = set()
        for coeffs in product(fp, repeat=t.e):
            x = 0
            for c, s in zip(coeffs, t.subfield_basis):
                for _ in range(c):
                    x = t.add(x, s)
            out.add(x)
        return sorted(out)

    def elements(self) -> list[int]:
        return list(self._elements)

    def __repr__(self) -> str:
        return f"Subfield(q={self.order} in {self.tower!r})"


class Basis:
    """An ordered F_q-basis ``b_1..b_m`` of F_{q^m} with a cached coordinate solver."""

    def __init__(self, tower: FieldTower, elems: Sequence[int]) -> None:
        elems = tuple(elems)
        if len(elems) != tower.m or not tower.is_independent_over_subfield(elems):
            raise NotABasis(f"{[tower.format(b) for b in elems]} is not an F_{tower.q}-basis")
        self.tower = tower
        self.elements = elems
        fp = tower.prime_field
        # digits(x) = a . A  with rows of A = digits(s_l * b_j); solve via A^{-1}
        self._inverse = linalg.inverse(tower._fp_vectors(elems), fp)
        self._cache: dict[int, tuple[int, ...]] = {}

    def coords(self, x: int) -> list[int]:
        hit = self._cache.get(x)
        if hit is None:
            t = self.tower
            d = t.coeffs(x)
            a = [sum(d[i] * self._inverse[i][c] for i in range(t.degree)) % t.p for c in range(t.degree)]
            out = []
            for j in range(t.m):
                val = 0
                for ell, s in enumerate(t.subfield_basis):
                    for _ in range(a[j * t.e + ell]):
                        val = t.add(val, s)
                out.append(val)
            hit = tuple(out)
            if t._tables:
                self._cache[x] = hit
        return list(hit)

    def combine(self, coeffs: Sequence[int]) -> int:
        t = self.tower
        x = 0
        for a, b in zip(coeffs, self.elements):
            x = t.add(x, t.mul(a, b))
        return x


def make_field(p: int, e: int = 1, m: int = 1, modulus: Sequence[int] | str | None = None) -> FieldTower:
    """Build the tower F_p <= F_{p^e} <= F_{p^(e*m)}.

    ``modulus`` may be a coefficient sequence (low degree first) or a
    polynomial string in ``z``; by default the lexicographically least monic
    irreducible of degree ``e*m`` is used.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1 or m < 1:
        raise DegreeMismatch("e and m must be positive")
    if modulus is None:
        modulus = least_irreducible(p, e * m)
    elif isinstance(modulus, str):
        modulus = parse_poly(modulus, p)
    return FieldTower(p, e, m, modulus)


def gf(q: int) -> Subfield:
    """The field F_q as a stand-alone field object."""
    p, e = prime_power(q)
    return make_field(p, e, 1).base
