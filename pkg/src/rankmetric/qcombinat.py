"""Gaussian binomials, integer cyclotomic polynomials and the J-set checks.

All arithmetic is exact (Python ints).  Cyclotomic polynomials are obtained
from ``x^n - 1 = prod_{d | n} Phi_d(x)`` by exact division, never through
complex roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from threading import Lock
from typing import Sequence

from .errors import BOutOfRange, HypothesisViolated
from .field import is_prime


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, low degree first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x_power_minus_one(cls, n: int) -> "IntPolynomial":
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``x**k``."""
        return IntPolynomial((0,) * k + self.coeffs) if self.coeffs else self

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        if not divisor.coeffs or divisor.coeffs[-1] not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        r = list(self.coeffs)
        dl = len(divisor.coeffs)
        lead = divisor.coeffs[-1]
        qt = [0] * max(len(r) - dl + 1, 0)
        for s in range(len(r) - dl, -1, -1):
            c = r[s + dl - 1] * lead
            qt[s] = c
            if c:
                for i, y in enumerate(divisor.coeffs):
                    r[s + i] -= c * y
        return IntPolynomial(tuple(qt)), IntPolynomial(tuple(r))

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        qt, r = self.divmod_monic(divisor)
        if r.coeffs:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return qt

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ONE = IntPolynomial((1,))

_cyclo_lock = Lock()
_cyclo_memo: dict[int, IntPolynomial] = {}


def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, ``(x^n - 1) / prod_{d | n, d < n} Phi_d``."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    hit = _cyclo_memo.get(n)
    if hit is not None:
        return hit
    den = ONE
    for d in range(1, n):
        if n % d == 0:
            den = den * cyclotomic(d)
    phi = IntPolynomial.x_power_minus_one(n).exact_div(den)
    with _cyclo_lock:
        _cyclo_memo.setdefault(n, phi)
    return phi


def gaussian_binomial(a: int, b: int, q: int) -> int:
    """Number of ``b``-dimensional subspaces of F_q^a (0 when ``b > a``).

    Built up one factor at a time, each partial quotient being itself a
    Gaussian binomial, so every division is exact.
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    if b > a:
        return 0
    b = min(b, a - b)
    val = 1
    for i in range(1, b + 1):
        num = val * (q ** (a - i + 1) - 1)
        den = q**i - 1
        val, rem = divmod(num, den)
        assert rem == 0, "Gaussian binomial partial quotient not integral"
    return val


@lru_cache(maxsize=None)
def gaussian_binomial_poly(a: int, b: int) -> IntPolynomial:
    """The Gaussian binomial as a polynomial in ``q``."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    if b > a:
        return IntPolynomial(())
    b = min(b, a - b)
    val = ONE
    for i in range(1, b + 1):
        val = (val * IntPolynomial.x_power_minus_one(a - i + 1)).exact_div(IntPolynomial.x_power_minus_one(i))
    return val


def q_pascal(a: int, b: int, q: int) -> int:
    """Right-hand side of ``[a b] = [a-1 b-1] + q^b [a-1 b]`` (independent route)."""
    return gaussian_binomial(a - 1, b - 1, q) + q**b * gaussian_binomial(a - 1, b, q)


@dataclass(frozen=True)
class JSet:
    a: int
    b: int
    members: tuple[int, ...]

    def __contains__(self, j: object) -> bool:
        return j in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def j_set(a: int, b: int) -> JSet:
    """``{j in [a] : ((a-b) mod j) + (b mod j) >= j}``."""
    if not 0 < b < a:
        raise BOutOfRange(f"need 0 < b < a, got a={a}, b={b}")
    members = tuple(j for j in range(1, a + 1) if (a - b) % j + b % j >= j)
    return JSet(a, b, members)


@dataclass(frozen=True)
class FactorizationCertificate:
    a: int
    b: int
    q: int
    j_set: tuple[int, ...]
    phi_values: tuple[int, ...]
    product: int
    gaussian: int

    @property
    def holds(self) -> bool:
        return self.product == self.gaussian

    def __bool__(self) -> bool:
        return self.holds

    def render(self) -> str:
        factors = "·".join(f"Φ_{j}({self.q})" for j in self.j_set) or "1"
        values = "·".join(str(v) for v in self.phi_values) or "1"
        return f"[{self.a} {self.b}]_{self.q} = {factors} = {values} = {self.product}"


def verify_factorization(a: int, b: int, q: int) -> FactorizationCertificate:
    """Compare ``[a b]_q`` against ``prod_{j in J_{a,b}} Phi_j(q)``."""
    js = j_set(a, b)
    vals = tuple(cyclotomic(j)(q) for j in js)
    prod = 1
    for v in vals:
        prod *= v
    return FactorizationCertificate(a, b, q, js.members, vals, prod, gaussian_binomial(a, b, q))


def chen_exponent(a: int, b: int, j: int) -> int:
    """Exponent of Phi_j in ``[a b]``: ``floor(a/j) - floor(b/j) - floor((a-b)/j)``."""
    return a // j - b // j - (a - b) // j


@dataclass(frozen=True)
class JabCertificate:
    d: int
    p: int
    c: int
    residues: tuple[int, int]  # ((d+1) mod c, (p-1) mod c)
    in_j_set: bool

    @property
    def holds(self) -> bool:
        return not self.in_j_set

    def __bool__(self) -> bool:
        return self.holds


def lemma_jab_check(d: int, p: int, c: int) -> JabCertificate:
    """Check ``c not in J_{d+p, p-1}`` when the prime ``p`` divides both ``d+1`` and ``c``."""
    if not is_prime(p):
        raise HypothesisViolated(f"p={p} is not prime")
    if d < 1 or c < 1:
        raise HypothesisViolated("d and c must be positive")
    if (d + 1) % p or c % p:
        raise HypothesisViolated(f"p={p} must divide d+1={d + 1} and c={c}")
    residues = ((d + 1) % c, (p - 1) % c)
    in_j = c in j_set(d + p, p - 1)
    return JabCertificate(d, p, c, residues, in_j)


@dataclass(frozen=True)
class GcdCertificate:
    p: int
    c: int
    q: int
    phi_p: int
    phi_c: int
    gcd: int

    @property
    def holds(self) -> bool:
        return self.gcd == 1 or self.c % self.p == 0

    def __bool__(self) -> bool:
        return self.holds


def cyclotomic_gcd_check(p: int, c: int, q: int) -> GcdCertificate:
    """Check ``gcd(Phi_p(q), Phi_c(q)) > 1  =>  p | c``."""
    if not is_prime(p):
        raise HypothesisViolated(f"p={p} is not prime")
    if c < 1:
        raise HypothesisViolated("c must be positive")
    a, b = cyclotomic(p)(q), cyclotomic(c)(q)
    return GcdCertificate(p, c, q, a, b, gcd(a, b))


def divisor_product_identity(n: int) -> bool:
    """``prod_{d | n} Phi_d(x) == x^n - 1``."""
    prod = ONE
    for d in range(1, n + 1):
        if n % d == 0:
            prod = prod * cyclotomic(d)
    return prod == IntPolynomial.x_power_minus_one(n)


def product_of_phis(js: Sequence[int], q: int) -> int:
    out = 1
    for j in js:
        out *= cyclotomic(j)(q)
    return out
