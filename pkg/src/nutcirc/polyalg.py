"""Exact integer polynomial arithmetic.

Two representations are used throughout the package: a dense ascending
coefficient vector (``DensePoly``) for cyclotomic polynomials, quotients and
remainders, and a sparse exponent-to-coefficient map (``SparsePoly``) for the
lacunary six-term family polynomials and circulant eigenvalue polynomials.
Coefficients are arbitrary-precision integers everywhere; no operation in this
module ever rounds, so divisibility verdicts are exact.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .errors import ParameterError

TermSource = Union[Mapping[int, int], Iterable[tuple[int, int]]]


@dataclass(init=False, eq=True)
class DensePoly:
    """Integer polynomial as a coefficient tuple, ascending from x^0.

    Trailing zeros are trimmed on construction, so the last coefficient is
    nonzero unless the polynomial is zero (empty tuple). The zero polynomial
    has degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_xpow(self, k: int) -> "DensePoly":
        """Return p(x^k) for k >= 1."""
        if k < 1:
            raise ParameterError(f"compose_xpow needs k >= 1, got {k}")
        out = [0] * (len(self.coeffs) * k)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return DensePoly(out)

    def to_sparse(self) -> "SparsePoly":
        return SparsePoly((i, c) for i, c in enumerate(self.coeffs) if c != 0)

    def __add__(self, other: "DensePoly") -> "DensePoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DensePoly(out)

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + (-other)

    def __neg__(self) -> "DensePoly":
        return DensePoly(-c for c in self.coeffs)

    def __mul__(self, other: "Union[DensePoly, int]") -> "DensePoly":
        if isinstance(other, int):
            return DensePoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return DensePoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(other.coeffs):
                out[i + j] += c * d
        return DensePoly(out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"DensePoly({dense_to_text(self)!r})"


@dataclass(init=False, eq=True)
class SparsePoly:
    """Integer polynomial as a map from exponent to nonzero coefficient.

    Construction accepts a mapping or an iterable of (exponent, coefficient)
    pairs; coefficients landing on the same exponent are summed and zero
    coefficients are dropped, so the stored map never contains a zero.
    """

    terms: dict[int, int]

    def __init__(self, terms: TermSource = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise ParameterError(f"negative exponent {e} in sparse polynomial")
            acc[e] = acc.get(e, 0) + c
        self.terms = {e: c for e, c in acc.items() if c != 0}

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    def term_count(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, x: int) -> int:
        return sum(c * x**e for e, c in self.terms.items())

    def to_dense(self) -> DensePoly:
        if not self.terms:
            return DensePoly()
        out = [0] * (self.degree + 1)
        for e, c in self.terms.items():
            out[e] = c
        return DensePoly(out)

    def items_descending(self) -> Iterator[tuple[int, int]]:
        for e in sorted(self.terms, reverse=True):
            yield e, self.terms[e]

    def __repr__(self) -> str:
        return f"SparsePoly({sparse_to_text(self)!r})"


def dense_div_rem(a: DensePoly, b: DensePoly) -> tuple[DensePoly, DensePoly]:
    """Exact long division: a = q*b + r with deg r < deg b.

    The divisor must be nonzero and each elimination step must stay integral,
    which holds for every monic divisor. A non-monic divisor that would force
    a fractional quotient coefficient raises ParameterError.
    """
    if b.is_zero():
        raise ParameterError("division by the zero polynomial")
    ra = list(a.coeffs)
    bc = b.coeffs
    m = len(bc)
    if len(ra) < m:
        return DensePoly(), a
    lead = bc[-1]
    q = [0] * (len(ra) - m + 1)
    for i in range(len(ra) - m, -1, -1):
        c = ra[i + m - 1]
        if c == 0:
            continue
        t, frac = divmod(c, lead)
        if frac != 0:
            raise ParameterError(
                f"non-integral quotient step ({c} / {lead}); divisor must be monic"
            )
        q[i] = t
        for j in range(m):
            ra[i + j] -= t * bc[j]
    return DensePoly(q), DensePoly(ra[: m - 1])


def dense_divides(b: DensePoly, a: DensePoly) -> bool:
    """True iff b divides a exactly (b monic)."""
    return dense_div_rem(a, b)[1].is_zero()


@lru_cache(maxsize=None)
def prime_factorization(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...) with p ascending."""
    if n < 1:
        raise ParameterError(f"cannot factor {n}; need n >= 1")
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            e += 1
            n //= d
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factorization(n) == ((n, 1),)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n >= 1, ascending."""
    ds = [1]
    for p, e in prime_factorization(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return tuple(sorted(ds))


@lru_cache(maxsize=None)
def euler_phi(b: int) -> int:
    """Euler totient of b >= 1."""
    if b < 1:
        raise ParameterError(f"euler_phi needs b >= 1, got {b}")
    result = b
    for p, _ in prime_factorization(b):
        result -= result // p
    return result


# Cyclotomic polynomials are shared process-wide; the cache may be read and
# extended concurrently, so inserts happen under a lock.
_CYCLO_CACHE: dict[int, DensePoly] = {}
_CYCLO_LOCK = threading.Lock()


def cyclotomic(b: int) -> DensePoly:
    """The b-th cyclotomic polynomial: monic, integer, degree euler_phi(b).

    Computed by exact division of x^b - 1 by the product of all lower-index
    cyclotomic polynomials at divisors of b, and memoized process-wide.
    """
    if b < 1:
        raise ParameterError(f"cyclotomic needs b >= 1, got {b}")
    cached = _CYCLO_CACHE.get(b)
    if cached is not None:
        return cached
    quo = DensePoly([-1] + [0] * (b - 1) + [1])
    for d in divisors(b)[:-1]:
        quo, rem = dense_div_rem(quo, cyclotomic(d))
        assert rem.is_zero()
    with _CYCLO_LOCK:
        _CYCLO_CACHE.setdefault(b, quo)
    return quo


def reduce_mod_xb(p: SparsePoly, b: int) -> SparsePoly:
    """Reduce p modulo x^b - 1: every exponent is replaced by its residue mod b.

    Coefficients whose exponents collide are summed, so the result is
    congruent to p modulo x^b - 1 and has degree < b.
    """
    if b < 1:
        raise ParameterError(f"reduce_mod_xb needs b >= 1, got {b}")
    return SparsePoly((e % b, c) for e, c in p.terms.items())


def reduce_mod_signed(p: SparsePoly, q: int) -> SparsePoly:
    """Reduce p modulo x^q + 1: c*x^a maps to c*(-1)^(a//q) * x^(a mod q)."""
    if q < 1:
        raise ParameterError(f"reduce_mod_signed needs q >= 1, got {q}")
    return SparsePoly((e % q, -c if (e // q) % 2 else c) for e, c in p.terms.items())


# --- textual interchange format -------------------------------------------
#
# Sparse form: `exp:coeff` pairs joined by commas, exponents strictly
# descending (the zero polynomial is the literal "0").
# Dense form: comma-separated coefficients ascending from x^0.


def sparse_to_text(p: SparsePoly) -> str:
    if p.is_zero():
        return "0"
    return ",".join(f"{e}:{c}" for e, c in p.items_descending())


def sparse_from_text(text: str) -> SparsePoly:
    body = text.strip()
    if body == "0" or not body:
        return SparsePoly()
    pairs = []
    for chunk in body.split(","):
        try:
            e_str, c_str = chunk.split(":")
            pairs.append((int(e_str), int(c_str)))
        except ValueError:
            raise ParameterError(f"malformed sparse polynomial term {chunk!r}") from None
    return SparsePoly(pairs)


def dense_to_text(p: DensePoly) -> str:
    if p.is_zero():
        return "0"
    return ",".join(str(c) for c in p.coeffs)


def dense_from_text(text: str) -> DensePoly:
    body = text.strip()
    if not body:
        return DensePoly()
    try:
        return DensePoly(int(c) for c in body.split(","))
    except ValueError:
        raise ParameterError(f"malformed dense polynomial {text!r}") from None
