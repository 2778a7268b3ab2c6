"""Factored-representation arithmetic on integral ideals and norm counting.

Every nonzero integral ideal is stored as its sorted prime factorization,
so divisibility, gcd, lcm (= intersection) and norms are exact
exponent-vector operations.  Counting by norm is done twice, by a
multiplicative sieve and by exhaustive enumeration, so each route can
check the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint

from .errors import BoundTooSmall, EmptySet, FieldMismatch
from .fields import NumberField, PrimeIdeal, primes_up_to_norm, split_prime


@dataclass(frozen=True)
class Ideal:
    """A nonzero integral ideal as a sorted tuple of (prime ideal, exponent).

    The empty tuple is the unit ideal O_K (norm 1).
    """

    field: NumberField
    factors: tuple[tuple[PrimeIdeal, int], ...]
    norm: int

    def sort_key(self):
        return (self.norm, tuple((pr, e) for pr, e in self.factors))

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def max_exponent(self) -> int:
        return max((e for _, e in self.factors), default=0)

    def divisor_norms(self) -> list[int]:
        """Norms of all divisors (with multiplicity one per divisor)."""
        norms = [1]
        for pr, e in self.factors:
            powers = [pr.norm ** j for j in range(e + 1)]
            norms = [n * q for n in norms for q in powers]
        return norms

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        if not self.factors:
            return f"Ideal(O_{self.field.label()})"
        parts = "*".join(
            f"P({pr.p},{pr.conjugate_index})^{e}" if e > 1
            else f"P({pr.p},{pr.conjugate_index})"
            for pr, e in self.factors)
        return f"Ideal({parts}, norm={self.norm})"


def unit_ideal(K: NumberField) -> Ideal:
    return Ideal(field=K, factors=(), norm=1)


def make_ideal(K: NumberField, factors: Iterable[tuple[PrimeIdeal, int]]) -> Ideal:
    """Build an ideal from (prime, exponent) pairs; exponents must be >= 1."""
    fs = tuple(sorted((pr, int(e)) for pr, e in factors if e))
    if any(e < 0 for _, e in fs):
        raise ValueError("negative exponent")
    norm = 1
    for pr, e in fs:
        norm *= pr.norm ** e
    return Ideal(field=K, factors=fs, norm=norm)


def integer_ideal(K: NumberField, n: int) -> Ideal:
    """The ideal (n) of a rational field K=Q, from the factorization of n."""
    if not K.is_rational:
        raise FieldMismatch("integer_ideal is only defined over Q")
    if n < 1:
        raise ValueError("n must be a positive integer")
    factors = []
    for p, e in factorint(n).items():
        (pr, _), = split_prime(K, p)
        factors.append((pr, e))
    return make_ideal(K, factors)


def _check_same_field(a: Ideal, b: Ideal) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field.label()} vs {b.field.label()}")


def multiply(a: Ideal, b: Ideal) -> Ideal:
    """Product ideal: exponent-wise sum, norm multiplies."""
    _check_same_field(a, b)
    exps = dict(a.factors)
    for pr, e in b.factors:
        exps[pr] = exps.get(pr, 0) + e
    return make_ideal(a.field, exps.items())


def intersect(ideals: Sequence[Ideal]) -> Ideal:
    """Intersection = least common multiple: exponent-wise maximum."""
    ideals = list(ideals)
    if not ideals:
        raise EmptySet("intersection of an empty set of ideals")
    first = ideals[0]
    for other in ideals[1:]:
        _check_same_field(first, other)
    exps: dict[PrimeIdeal, int] = {}
    for ideal in ideals:
        for pr, e in ideal.factors:
            if exps.get(pr, 0) < e:
                exps[pr] = e
    return make_ideal(first.field, exps.items())


def gcd(a: Ideal, b: Ideal) -> Ideal:
    """Ideal sum a + b: exponent-wise minimum."""
    _check_same_field(a, b)
    exps_b = dict(b.factors)
    exps = {pr: min(e, exps_b[pr]) for pr, e in a.factors if pr in exps_b}
    return make_ideal(a.field, exps.items())


def divides(a: Ideal, b: Ideal) -> bool:
    """True iff a | b, i.e. b is contained in a as a set."""
    _check_same_field(a, b)
    exps_b = dict(b.factors)
    return all(exps_b.get(pr, 0) >= e for pr, e in a.factors)


def _prime_norm_list(K: NumberField, X: int) -> list[int]:
    # One entry per prime ideal of norm <= X, ascending.
    return [pr.norm for pr in primes_up_to_norm(K, X)]


@dataclass(frozen=True)
class NormCounter:
    """Exact per-norm ideal counts h(k) and cumulative counts H(x), k,x <= X."""

    field: NumberField
    X: int
    h: np.ndarray             # h[k], index 0 unused
    H: np.ndarray             # H[x] = sum_{k<=x} h[k], H[0] = 0

    def h_of(self, k: int) -> int:
        return int(self.h[k])

    def H_of(self, x: int) -> int:
        if x >= self.X:
            if x > self.X:
                raise ValueError(f"H({x}) not computed (bound {self.X})")
            return int(self.H[self.X])
        return int(self.H[x]) if x >= 0 else 0


@lru_cache(maxsize=8)
def count_ideals(K: NumberField, X: int) -> NormCounter:
    """Exact norm counts up to X by a multiplicative sieve.

    Convolves the geometric local factor of every prime ideal norm q into
    the count array in one ascending in-place pass per prime ideal.
    """
    if X < 1:
        raise ValueError("X must be >= 1")
    h = [0] * (X + 1)
    h[1] = 1
    for q in _prime_norm_list(K, X):
        lim = X // q
        idx = q
        for k in range(1, lim + 1):
            h[idx] += h[k]
            idx += q
    arr = np.array(h, dtype=np.int64)
    return NormCounter(field=K, X=X, h=arr, H=np.cumsum(arr))


def enumeration_norm_counts(K: NumberField, X: int) -> np.ndarray:
    """Per-norm ideal counts by exhaustive recursive enumeration.

    Independent of the multiplicative sieve; used to cross-check it.
    """
    qs = _prime_norm_list(K, X)
    counts = np.zeros(X + 1, dtype=np.int64)
    n_primes = len(qs)

    def rec(start: int, n: int) -> None:
        counts[n] += 1
        for j in range(start, n_primes):
            m = n * qs[j]
            if m > X:
                break
            while m <= X:
                rec(j + 1, m)
                m *= qs[j]

    rec(0, 1)
    return counts


def enumerate_ideals(K: NumberField, X: int) -> list[Ideal]:
    """Every ideal of norm <= X, in nondecreasing norm order.

    Ties are broken by lexicographic comparison of the factorizations
    under the global prime numbering.  Materializes the full list; meant
    for desk-scale bounds.
    """
    if X < 1:
        raise ValueError("X must be >= 1")
    primes = primes_up_to_norm(K, X)
    n_primes = len(primes)
    found: list[Ideal] = []
    stack: list[tuple[PrimeIdeal, int]] = []

    def rec(start: int, n: int) -> None:
        found.append(Ideal(field=K, factors=tuple(stack), norm=n))
        for j in range(start, n_primes):
            q = primes[j].norm
            m = n * q
            if m > X:
                break
            e = 1
            while m <= X:
                stack.append((primes[j], e))
                rec(j + 1, m)
                stack.pop()
                m *= q
                e += 1

    rec(0, 1)
    found.sort(key=Ideal.sort_key)
    return found


def multiples_count(a: Ideal, X: int, counter: NormCounter | None = None) -> int:
    """Number of ideals b with a | b and N(b) <= X.

    Dividing out a is a norm-dividing bijection, so this is H(floor(X/N(a))).
    """
    if X < 1:
        raise ValueError("X must be >= 1")
    bound = X // a.norm
    if bound < 1:
        return 0
    if counter is None or counter.X < bound:
        counter = count_ideals(a.field, X)
    return counter.H_of(bound)


def estimate_residue_constant(K: NumberField, X: int,
                              n_samples: int = 20) -> tuple[float, float]:
    """Empirical ideal-count constant: c_hat = H(X)/X with an error band.

    The band is kappa * X^(-1/d) with kappa fitted from the deviations
    |H(x)/x - c_hat| over sample points x in [X/10, X].
    """
    if X < 100:
        raise BoundTooSmall("estimate_residue_constant needs X >= 100")
    counter = count_ideals(K, X)
    c_hat = counter.H_of(X) / X
    xs = np.unique(np.geomspace(X // 10, X, n_samples).astype(np.int64))
    d = K.degree
    kappa = 0.0
    for x in xs:
        x = int(x)
        dev = abs(counter.H_of(x) / x - c_hat)
        kappa = max(kappa, dev * x ** (1.0 / d))
    return c_hat, kappa * X ** (-1.0 / d)


def gaussian_lattice_H(x: int) -> int:
    """Independent oracle for K=Q(sqrt -1): ideal count H(x) by lattice count.

    Counts nonzero Gaussian integers a+bi with a^2+b^2 <= x and divides by
    the 4 units.
    """
    total = 0
    for a in range(0, math.isqrt(x) + 1):
        b_max = math.isqrt(x - a * a)
        total += 2 * b_max if a == 0 else 2 * (2 * b_max + 1)
    return total // 4


def gaussian_lattice_counts(x: int) -> np.ndarray:
    """Per-norm Gaussian ideal counts up to x by lattice point counting."""
    counts = np.zeros(x + 1, dtype=np.int64)
    for a in range(0, math.isqrt(x) + 1):
        b_max = math.isqrt(x - a * a)
        bs = np.arange(0, b_max + 1)
        norms = a * a + bs * bs
        weights = np.full_like(bs, 4)
        if a == 0:
            weights[:] = 2
        else:
            weights[0] = 2
        np.add.at(counts, norms, weights)
    counts[0] = 0
    return counts // 4
