"""Densities of the set of multiples of an ideal family and its complement.

Implements the exact inclusion-exclusion density for finite families, the
limit sequence A_r, the multiplicative densities B_k over prime-ideal
prefixes, exact sieve counts of multiples, and empirical natural and
logarithmic density profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import DuplicateMembers, TooLarge
from .families import AFamily, ExplicitFamily, PrimePowerFamily, minimal_members
from .fields import NumberField, first_prime_ideals, primes_up_to_norm
from .ideals import Ideal, make_ideal
from .zeta import EulerProductState, partial_euler_product

#: Largest family block handled by exact inclusion-exclusion (2^cap subsets).
SUBSET_CAP = 20


def _member_list(A: AFamily | Sequence[Ideal], bound: int | None = None) -> list[Ideal]:
    if isinstance(A, AFamily):
        return A.members_up_to(bound if bound is not None else A.truncation)
    return list(A)


def _ie_over_block(members: list[Ideal]) -> Fraction:
    # Alternating sum over all nonempty subsets, intersections built
    # incrementally as exponent dictionaries.
    total = Fraction(0)

    def rec(start: int, exps: dict, norm: int, sign: int) -> None:
        nonlocal total
        for j in range(start, len(members)):
            new_exps = dict(exps)
            new_norm = norm
            for pr, e in members[j].factors:
                old = new_exps.get(pr, 0)
                if e > old:
                    new_exps[pr] = e
                    new_norm *= pr.norm ** (e - old)
            total += Fraction(sign, new_norm)
            rec(j + 1, new_exps, new_norm, -sign)

    rec(0, {}, 1, 1)
    return total


def _coprime_blocks(members: list[Ideal]) -> list[list[Ideal]]:
    # Union-find over shared prime support; independent blocks contribute
    # independently to the density of the union.
    parent = list(range(len(members)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_prime: dict = {}
    for i, m in enumerate(members):
        for pr, _ in m.factors:
            if pr in by_prime:
                parent[find(i)] = find(by_prime[pr])
            else:
                by_prime[pr] = i
    blocks: dict[int, list[Ideal]] = {}
    for i, m in enumerate(members):
        blocks.setdefault(find(i), []).append(m)
    return list(blocks.values())


def finite_ie_density(A: AFamily | Sequence[Ideal],
                      subset_cap: int = SUBSET_CAP) -> Fraction:
    """Exact density of M_A for a finite family, by inclusion-exclusion.

    Members that are multiples of other members are dropped first (M_A is
    unchanged), and members with pairwise disjoint prime support are
    factored into independent blocks, so the subset cap applies per block
    of mutually entangled members.
    """
    members = _member_list(A)
    if len(set(members)) != len(members):
        raise DuplicateMembers("family has repeated members")
    members = minimal_members(members)
    if not members:
        return Fraction(0)
    if any(m.is_unit for m in members):
        return Fraction(1)
    miss = Fraction(1)          # density of the complement V_A
    for block in _coprime_blocks(members):
        if len(block) > subset_cap:
            raise TooLarge(
                f"{len(block)} mutually entangled members exceed the "
                f"inclusion-exclusion cap {subset_cap}")
        miss *= 1 - _ie_over_block(block)
    return 1 - miss


def a_limit(A: AFamily | Sequence[Ideal], r_max: int,
            subset_cap: int = SUBSET_CAP) -> list[Fraction]:
    """The sequence A_r = dens(M_{a_1..a_r}), r = 1..r_max.

    Members are taken in nondecreasing norm order; the sequence is
    nondecreasing with upper bound 1.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    if isinstance(A, AFamily):
        bound = 64
        members = A.members_up_to(min(bound, A.truncation))
        while len(members) < r_max and bound < A.truncation:
            bound *= 8
            members = A.members_up_to(min(bound, A.truncation))
    else:
        members = sorted(A, key=Ideal.sort_key)
    members = members[:r_max]
    return [finite_ie_density(members[:r], subset_cap=subset_cap)
            for r in range(1, len(members) + 1)]


# ---------------------------------------------------------------------------
# Enumeration tables for quadratic fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _IdealTable:
    """All ideals of norm <= X with a stable order and an index by key.

    Keys are tuples of (prime position in the global numbering, exponent);
    ideals are sorted by (norm, key).
    """

    field: NumberField
    X: int
    primes: tuple
    prime_pos: dict
    keys: list
    norms: np.ndarray
    index: dict


@lru_cache(maxsize=4)
def _ideal_table(K: NumberField, X: int) -> _IdealTable:
    primes = primes_up_to_norm(K, X)
    prime_pos = {pr: i for i, pr in enumerate(primes)}
    qs = [pr.norm for pr in primes]
    n_primes = len(qs)
    entries: list[tuple[int, tuple]] = []
    stack: list[tuple[int, int]] = []

    def rec(start: int, n: int) -> None:
        entries.append((n, tuple(stack)))
        for j in range(start, n_primes):
            m = n * qs[j]
            if m > X:
                break
            e = 1
            while m <= X:
                stack.append((j, e))
                rec(j + 1, m)
                stack.pop()
                m *= qs[j]
                e += 1

    rec(0, 1)
    entries.sort()
    keys = [key for _, key in entries]
    norms = np.array([n for n, _ in entries], dtype=np.int64)
    index = {key: i for i, key in enumerate(keys)}
    return _IdealTable(field=K, X=X, primes=primes, prime_pos=prime_pos,
                       keys=keys, norms=norms, index=index)


def _table_key(table: _IdealTable, ideal: Ideal) -> tuple:
    return tuple((table.prime_pos[pr], e) for pr, e in ideal.factors)


def _ideal_from_key(table: _IdealTable, key: tuple) -> Ideal:
    return make_ideal(table.field, [(table.primes[j], e) for j, e in key])


def _merge_product(key_a: tuple, key_c: tuple) -> tuple:
    # Factorization of the product: exponents add; both keys are sorted by
    # prime position.
    out = []
    i = j = 0
    while i < len(key_a) and j < len(key_c):
        pa, ea = key_a[i]
        pc, ec = key_c[j]
        if pa == pc:
            out.append((pa, ea + ec))
            i += 1
            j += 1
        elif pa < pc:
            out.append(key_a[i])
            i += 1
        else:
            out.append(key_c[j])
            j += 1
    out.extend(key_a[i:])
    out.extend(key_c[j:])
    return tuple(out)


def _multiples_mask(K: NumberField, X: int, members: list[Ideal]) -> np.ndarray:
    """Boolean membership mask for M_A over the norm-ordered ideal table.

    For Q the table is just 1..X and multiples are marked by strided
    writes; for quadratic fields every multiple a*c is marked through the
    key index of the enumeration table.
    """
    if K.is_rational:
        mask = np.zeros(X, dtype=bool)       # position i <-> ideal (i+1)
        for a in members:
            n = a.norm
            if n <= X:
                mask[n - 1:: n] = True
        return mask
    table = _ideal_table(K, X)
    mask = np.zeros(len(table.keys), dtype=bool)
    keys = table.keys
    index = table.index
    for a in members:
        if a.norm > X:
            continue
        key_a = _table_key(table, a)
        limit = X // a.norm
        stop = int(np.searchsorted(table.norms, limit, side="right"))
        for i in range(stop):
            mask[index[_merge_product(key_a, keys[i])]] = True
    return mask


def sieve_multiples_density(A: AFamily | Sequence[Ideal], X: int,
                            K: NumberField | None = None) -> Fraction:
    """Exact share of ideals of norm <= X that are multiples of the family.

    Counts by marking every multiple during an enumeration pass; the
    result is the exact rational count / H(X).
    """
    if X < 1:
        raise ValueError("X must be >= 1")
    members = _member_list(A, bound=X)
    members = minimal_members(members)
    if K is None:
        if isinstance(A, AFamily):
            K = A.field
        elif members:
            K = members[0].field
        else:
            raise ValueError("empty member list needs an explicit field")
    if not members:
        return Fraction(0)
    mask = _multiples_mask(K, X, members)
    total = len(mask)
    return Fraction(int(mask.sum()), total)


# ---------------------------------------------------------------------------
# Restricted families and multiplicative density
# ---------------------------------------------------------------------------

def restrict_family(A: AFamily, k: int) -> ExplicitFamily:
    """Members of A supported entirely on the first k prime ideals.

    Rule-based families are truncated at the family's working norm bound,
    which keeps the restriction finite; the omitted members contribute at
    most the tail of sum 1/N(a).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    K = A.field
    allowed = set(first_prime_ideals(K, k))
    if isinstance(A, PrimePowerFamily):
        members = [make_ideal(K, [(pr, A.l)])
                   for pr in first_prime_ideals(K, k)
                   if pr.norm ** A.l <= A.truncation]
    else:
        members = [m for m in A.members_up_to(A.truncation)
                   if all(pr in allowed for pr, _ in m.factors)]
    return ExplicitFamily(field=K, members=tuple(members))


@dataclass(frozen=True)
class MultDensityState:
    """B_k = dens(M_{A'}) for the restriction A' to the first k primes."""

    k: int
    euler_product: EulerProductState
    b_k: Fraction
    restricted_members: tuple[Ideal, ...]


def multiplicative_density(A: AFamily, k: int,
                           subset_cap: int = SUBSET_CAP) -> MultDensityState:
    """Multiplicative density step B_k, computed as dens(M_{A'}).

    Falls back to the sieve count (at the family truncation bound) if the
    restricted family defeats exact inclusion-exclusion.
    """
    restricted = restrict_family(A, k)
    try:
        b_k = finite_ie_density(restricted, subset_cap=subset_cap)
    except TooLarge:
        b_k = sieve_multiples_density(restricted, X=A.truncation)
    pi_k = partial_euler_product(A.field, k=k)
    return MultDensityState(k=k, euler_product=pi_k, b_k=b_k,
                            restricted_members=restricted.members)


# ---------------------------------------------------------------------------
# Density profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DensityReport:
    """Sampled natural and logarithmic density ratios with tail estimates.

    Natural ratios are exact rationals (integer counts); logarithmic
    ratios are floating point.  The tail estimates d/D (natural) and
    delta/Delta (logarithmic) are min/max over the last half of the
    sample window.
    """

    field: NumberField
    X: int
    sample_points: tuple[int, ...]
    member_counts: tuple[int, ...]
    total_counts: tuple[int, ...]
    natural_ratios: tuple[Fraction, ...]
    log_ratios: tuple[float, ...]

    @property
    def tail_start(self) -> int:
        return len(self.sample_points) // 2

    @property
    def d_lower(self) -> Fraction:
        return min(self.natural_ratios[self.tail_start:])

    @property
    def d_upper(self) -> Fraction:
        return max(self.natural_ratios[self.tail_start:])

    @property
    def delta_lower(self) -> float:
        return min(self.log_ratios[self.tail_start:])

    @property
    def delta_upper(self) -> float:
        return max(self.log_ratios[self.tail_start:])

    def complement(self) -> "DensityReport":
        """Profile of the complement set; ratios satisfy M + V = 1 exactly.

        Counts are complemented against the totals; ratio arrays are
        complemented in place of a second harmonic-sum pass (exact
        rational harmonic sums are infeasible at desk scale).
        """
        return DensityReport(
            field=self.field, X=self.X, sample_points=self.sample_points,
            member_counts=tuple(t - m for m, t in
                                zip(self.member_counts, self.total_counts)),
            total_counts=self.total_counts,
            natural_ratios=tuple(1 - r for r in self.natural_ratios),
            log_ratios=tuple(1.0 - r for r in self.log_ratios))


def _sample_points(X: int, n_samples: int) -> np.ndarray:
    lo = min(10, X)
    xs = np.unique(np.rint(np.geomspace(lo, X, n_samples)).astype(np.int64))
    xs[-1] = X
    return xs


def density_profile(subject: AFamily | Callable[[Ideal], bool],
                    K: NumberField | None = None, X: int = 10**4,
                    n_samples: int = 24) -> DensityReport:
    """Single-pass natural and logarithmic density profile up to norm X.

    ``subject`` is either a family (profiling M_A) or an arbitrary
    membership predicate on ideals.  Counts are exact integers; harmonic
    sums are accumulated in floating point.
    """
    if X < 100:
        raise ValueError("X must be >= 100")
    if n_samples < 2:
        raise ValueError("n_samples must be >= 2")
    if isinstance(subject, AFamily):
        K = subject.field
    elif K is None:
        raise ValueError("a field is required with a bare predicate")

    if isinstance(subject, AFamily):
        members = minimal_members(subject.members_up_to(
            min(X, subject.truncation)))
        mask = _multiples_mask(K, X, members)
        if K.is_rational:
            norms = np.arange(1, X + 1, dtype=np.int64)
        else:
            norms = _ideal_table(K, X).norms
    elif K.is_rational:
        from .ideals import integer_ideal
        norms = np.arange(1, X + 1, dtype=np.int64)
        mask = np.fromiter((subject(integer_ideal(K, int(n))) for n in norms),
                           dtype=bool, count=len(norms))
    else:
        table = _ideal_table(K, X)
        norms = table.norms
        mask = np.fromiter(
            (subject(_ideal_from_key(table, key)) for key in table.keys),
            dtype=bool, count=len(table.keys))

    inv = 1.0 / norms
    cum_members = np.cumsum(mask)
    cum_total = np.arange(1, len(norms) + 1)
    cum_log_num = np.cumsum(np.where(mask, inv, 0.0))
    cum_log_den = np.cumsum(inv)

    xs = _sample_points(X, n_samples)
    pos = np.searchsorted(norms, xs, side="right") - 1
    member_counts = tuple(int(cum_members[i]) for i in pos)
    total_counts = tuple(int(cum_total[i]) for i in pos)
    natural = tuple(Fraction(m, t) for m, t in zip(member_counts, total_counts))
    log_ratios = tuple(float(cum_log_num[i] / cum_log_den[i]) for i in pos)
    return DensityReport(field=K, X=X, sample_points=tuple(int(x) for x in xs),
                         member_counts=member_counts, total_counts=total_counts,
                         natural_ratios=natural, log_ratios=log_ratios)


def check_density_inequality(report: DensityReport,
                             slack: float = 1e-3) -> tuple[bool, dict]:
    """Finite-sample check of d <= delta <= Delta <= D with declared slack.

    Returns (ok, margins); margins are delta - d and D - Delta, which the
    check requires to be >= -slack.
    """
    n_tail = len(report.sample_points) - report.tail_start
    if n_tail < 4:
        raise ValueError("need at least 4 tail samples")
    lower_margin = report.delta_lower - float(report.d_lower)
    upper_margin = float(report.d_upper) - report.delta_upper
    ok = lower_margin >= -slack and upper_margin >= -slack
    return ok, {"lower_margin": lower_margin, "upper_margin": upper_margin}
