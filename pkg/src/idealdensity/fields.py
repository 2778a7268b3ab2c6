"""Number fields of degree 1 and 2 and the splitting of rational primes.

The supported fields are Q itself and quadratic fields Q(sqrt m) for a
squarefree integer m.  In degree <= 2 the splitting behaviour of every
rational prime is decided by the Kronecker symbol of the fundamental
discriminant, which keeps prime ideal construction exact and fast.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime

from .errors import (
    DegenerateM,
    NotFundamental,
    NotNegative,
    NotPrime,
    NotSquarefree,
    UnsupportedField,
)

#: Euler-Mascheroni constant, 20 digits.
EULER_GAMMA = 0.57721566490153286061


@dataclass(frozen=True)
class NumberField:
    """A number field of degree 1 (Q) or 2 (Q(sqrt m), m squarefree).

    ``unit_count`` is the number of roots of unity for imaginary quadratic
    fields and None where the unit group is infinite (Q and real quadratic).
    """

    kind: str                 # "rational" | "quadratic"
    m: int | None             # squarefree integer for quadratic fields
    degree: int
    discriminant: int
    unit_count: int | None

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    @property
    def is_imaginary_quadratic(self) -> bool:
        return self.kind == "quadratic" and self.m is not None and self.m < 0

    def label(self) -> str:
        if self.is_rational:
            return "Q"
        return f"Q(sqrt {self.m})"

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"NumberField({self.label()})"


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    """A prime ideal of O_K, identified by its rational prime and type.

    For a split prime there are two conjugate ideals above p, labelled by
    ``conjugate_index`` 0 and 1; index 0 is the ideal containing the root r
    of the splitting congruence x^2 = m (mod p) with 0 <= r <= p/2.  The
    ordering of the dataclass fields realizes the global tie-break
    (norm, p, conjugate_index).
    """

    norm: int
    p: int
    conjugate_index: int
    e: int                    # ramification index
    f: int                    # residue degree


def _squarefree(m: int) -> bool:
    return all(e == 1 for e in factorint(abs(m)).values())


def make_rational_field() -> NumberField:
    return NumberField(kind="rational", m=None, degree=1, discriminant=1,
                       unit_count=None)


def make_quadratic_field(m: int) -> NumberField:
    if m in (0, 1):
        raise DegenerateM(f"m={m} does not define a quadratic field")
    if not _squarefree(m):
        raise NotSquarefree(f"m={m} is not squarefree")
    disc = m if m % 4 == 1 else 4 * m
    units = None
    if m < 0:
        units = {-4: 4, -3: 6}.get(disc, 2)
    return NumberField(kind="quadratic", m=m, degree=2, discriminant=disc,
                       unit_count=units)


_FIELD_RE = re.compile(r"^\s*Q\s*\(\s*sqrt\s*(-?\d+)\s*\)\s*$")


def parse_field(text: str) -> NumberField:
    """Parse a field label: "Q" or "Q(sqrt m)" with integer m."""
    if text.strip() == "Q":
        return make_rational_field()
    match = _FIELD_RE.match(text)
    if not match:
        raise UnsupportedField(f"cannot parse field specification {text!r}")
    return make_quadratic_field(int(match.group(1)))


def _jacobi(a: int, n: int) -> int:
    # Jacobi symbol (a/n) for odd positive n.
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker_symbol(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for positive n.

    Completely multiplicative in n; for D = 0, 1 (mod 4) it is periodic
    with period dividing |D|.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    return result * _jacobi(D % n, n)


def _symbol_at_prime(D: int, p: int) -> int:
    # Fast Kronecker symbol at a prime: Euler's criterion for odd p.
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 == 1 else -1
    r = pow(D % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def split_prime(K: NumberField, p: int) -> list[tuple[PrimeIdeal, int]]:
    """Factor (p) in O_K; returns (prime ideal, exponent in (p)) pairs."""
    if p < 2 or not isprime(p):
        raise NotPrime(f"{p} is not a rational prime")
    if K.is_rational:
        return [(PrimeIdeal(norm=p, p=p, conjugate_index=0, e=1, f=1), 1)]
    s = _symbol_at_prime(K.discriminant, p)
    if s == 1:
        return [
            (PrimeIdeal(norm=p, p=p, conjugate_index=0, e=1, f=1), 1),
            (PrimeIdeal(norm=p, p=p, conjugate_index=1, e=1, f=1), 1),
        ]
    if s == -1:
        return [(PrimeIdeal(norm=p * p, p=p, conjugate_index=0, e=1, f=2), 1)]
    return [(PrimeIdeal(norm=p, p=p, conjugate_index=0, e=2, f=1), 2)]


def rational_primes_up_to(n: int) -> np.ndarray:
    """All rational primes <= n (numpy int64, ascending)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


@lru_cache(maxsize=16)
def primes_up_to_norm(K: NumberField, X: int) -> tuple[PrimeIdeal, ...]:
    """All prime ideals of O_K with norm <= X, sorted by (norm, p, index)."""
    if X < 1:
        raise ValueError("X must be >= 1")
    out: list[PrimeIdeal] = []
    if K.is_rational:
        for p in rational_primes_up_to(X):
            out.append(PrimeIdeal(norm=int(p), p=int(p), conjugate_index=0,
                                  e=1, f=1))
        return tuple(out)
    D = K.discriminant
    for p in rational_primes_up_to(X):
        p = int(p)
        s = _symbol_at_prime(D, p)
        if s == 1:
            out.append(PrimeIdeal(norm=p, p=p, conjugate_index=0, e=1, f=1))
            out.append(PrimeIdeal(norm=p, p=p, conjugate_index=1, e=1, f=1))
        elif s == 0:
            out.append(PrimeIdeal(norm=p, p=p, conjugate_index=0, e=2, f=1))
        elif p * p <= X:
            out.append(PrimeIdeal(norm=p * p, p=p, conjugate_index=0, e=1, f=2))
    out.sort()
    return tuple(out)


def first_prime_ideals(K: NumberField, k: int) -> tuple[PrimeIdeal, ...]:
    """The first k prime ideals in the deterministic global numbering."""
    if k == 0:
        return ()
    bound = 64
    while True:
        primes = primes_up_to_norm(K, bound)
        if len(primes) >= k:
            return primes[:k]
        bound *= 4


def is_fundamental_discriminant(D: int) -> bool:
    if D == 1 or D == 0:
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def class_number_imag_quadratic(D: int) -> int:
    """Class number h(D) by counting reduced binary quadratic forms.

    Reduced means |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
    """
    if D >= 0:
        raise NotNegative(f"D={D} must be negative")
    if not is_fundamental_discriminant(D):
        raise NotFundamental(f"D={D} is not a fundamental discriminant")
    h = 0
    for a in range(1, math.isqrt(-D // 3) + 1):
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            h += 1
    return h


def analytic_residue_imag_quadratic(K: NumberField) -> float:
    """Residue of zeta_K at s=1 via the class number formula: 2*pi*h/(w*sqrt|D|)."""
    if not K.is_imaginary_quadratic:
        raise UnsupportedField(
            "analytic residue formula implemented for imaginary quadratic "
            "fields only; use the empirical estimator otherwise")
    h = class_number_imag_quadratic(K.discriminant)
    w = K.unit_count
    return 2.0 * math.pi * h / (w * math.sqrt(abs(K.discriminant)))
