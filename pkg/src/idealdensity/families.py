"""Families of ideals whose multiples define the sets studied here.

A family is either an explicit finite list of ideals, the rule "all l-th
powers of prime ideals", or the rule "all ideals with norm in a union of
intervals".  Rule-based families decide membership of any ideal straight
from its factorization and enumerate their members in nondecreasing norm
order with the global deterministic tie-break.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import FamilySpecError, FieldMismatch
from .fields import NumberField, parse_field, primes_up_to_norm, split_prime
from .ideals import Ideal, divides, enumerate_ideals, integer_ideal, make_ideal

#: Default truncation norm used to make rule-based families finite.
DEFAULT_TRUNCATION = 10**6


def _integer_root(n: int, k: int) -> int:
    """Largest r with r**k <= n."""
    if k == 1:
        return n
    r = int(round(n ** (1.0 / k)))
    while r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


class AFamily:
    """Base class; concrete families implement members and membership."""

    field: NumberField
    kind: str
    truncation: int

    def members_up_to(self, bound: int) -> list[Ideal]:
        raise NotImplementedError

    def is_multiple(self, b: Ideal) -> bool:
        """True iff b is a multiple of some family member."""
        raise NotImplementedError

    def _check_field(self, b: Ideal) -> None:
        if b.field != self.field:
            raise FieldMismatch(
                f"ideal over {b.field.label()}, family over {self.field.label()}")


@dataclass(frozen=True)
class ExplicitFamily(AFamily):
    field: NumberField
    members: tuple[Ideal, ...]
    kind: str = dataclass_field(default="explicit", init=False)
    truncation: int = dataclass_field(default=DEFAULT_TRUNCATION, init=False)

    def __post_init__(self):
        for m in self.members:
            if m.field != self.field:
                raise FieldMismatch("family member from a different field")
        ordered = tuple(sorted(self.members, key=Ideal.sort_key))
        object.__setattr__(self, "members", ordered)

    def members_up_to(self, bound: int) -> list[Ideal]:
        return [m for m in self.members if m.norm <= bound]

    def is_multiple(self, b: Ideal) -> bool:
        self._check_field(b)
        return any(divides(a, b) for a in self.members if a.norm <= b.norm)


@dataclass(frozen=True)
class PrimePowerFamily(AFamily):
    """All ideals p^l with p prime; l = 1 means all prime ideals."""

    field: NumberField
    l: int
    truncation: int = DEFAULT_TRUNCATION
    kind: str = dataclass_field(default="prime_powers", init=False)

    def __post_init__(self):
        if self.l < 1:
            raise FamilySpecError("prime_powers exponent must be >= 1")

    def members_up_to(self, bound: int) -> list[Ideal]:
        q_max = _integer_root(bound, self.l)
        if q_max < 2:
            return []
        return [make_ideal(self.field, [(pr, self.l)])
                for pr in primes_up_to_norm(self.field, q_max)]

    def is_multiple(self, b: Ideal) -> bool:
        self._check_field(b)
        return b.max_exponent() >= self.l


@dataclass(frozen=True)
class NormIntervalFamily(AFamily):
    """All ideals with norm in a union of half-open intervals (lo, hi]."""

    field: NumberField
    intervals: tuple[tuple[int, int], ...]
    truncation: int = DEFAULT_TRUNCATION
    kind: str = dataclass_field(default="norm_intervals", init=False)

    def __post_init__(self):
        ivs = tuple(sorted((int(lo), int(hi)) for lo, hi in self.intervals))
        if any(lo < 1 or hi <= lo for lo, hi in ivs):
            raise FamilySpecError("intervals must satisfy 1 <= lo < hi")
        object.__setattr__(self, "intervals", ivs)

    def _norm_in_intervals(self, n: int) -> bool:
        return any(lo < n <= hi for lo, hi in self.intervals)

    def members_up_to(self, bound: int) -> list[Ideal]:
        out: list[Ideal] = []
        for lo, hi in self.intervals:
            if lo >= bound:
                continue
            for ideal in enumerate_ideals(self.field, min(hi, bound)):
                if lo < ideal.norm:
                    out.append(ideal)
        out.sort(key=Ideal.sort_key)
        return out

    def is_multiple(self, b: Ideal) -> bool:
        self._check_field(b)
        return any(self._norm_in_intervals(n) for n in b.divisor_norms())


def minimal_members(members: list[Ideal]) -> list[Ideal]:
    """Drop members that are multiples of other members; M_A is unchanged."""
    ordered = sorted(members, key=Ideal.sort_key)
    kept: list[Ideal] = []
    for m in ordered:
        if not any(divides(a, m) for a in kept):
            kept.append(m)
    return kept


def _ideal_from_exponent_spec(K: NumberField, entries) -> Ideal:
    factors = []
    for entry in entries:
        try:
            p, conj, e = (int(v) for v in entry)
        except (TypeError, ValueError) as exc:
            raise FamilySpecError(f"bad factor entry {entry!r}") from exc
        if e < 1:
            raise FamilySpecError("exponents must be >= 1")
        above = split_prime(K, p)
        if conj >= len(above) or conj < 0:
            raise FamilySpecError(
                f"conjugate index {conj} invalid for p={p} in {K.label()}")
        factors.append((above[conj][0], e))
    return make_ideal(K, factors)


def parse_family(doc: dict, K: NumberField | None = None) -> AFamily:
    """Build a family from its JSON specification document.

    Keys: "field", "kind" in {explicit, prime_powers, norm_intervals} and a
    kind-specific payload ("members", "l", or "intervals").  Explicit
    members over Q are positive integers; over quadratic fields they are
    lists of (p, conjugate_index, exponent) triples.
    """
    if not isinstance(doc, dict):
        raise FamilySpecError("family specification must be a JSON object")
    if "field" in doc:
        doc_field = parse_field(doc["field"])
        if K is not None and doc_field != K:
            raise FamilySpecError(
                f"family field {doc_field.label()} does not match {K.label()}")
        K = doc_field
    if K is None:
        raise FamilySpecError("no field given")
    kind = doc.get("kind")
    truncation = int(doc.get("truncation", DEFAULT_TRUNCATION))
    if kind == "explicit":
        members = []
        for spec in doc.get("members", []):
            if isinstance(spec, int):
                if not K.is_rational:
                    raise FamilySpecError(
                        "integer members are only valid over Q; use "
                        "(p, conjugate_index, exponent) factor lists")
                members.append(integer_ideal(K, spec))
            else:
                members.append(_ideal_from_exponent_spec(K, spec))
        return ExplicitFamily(field=K, members=tuple(members))
    if kind == "prime_powers":
        if "l" not in doc:
            raise FamilySpecError("prime_powers needs key 'l'")
        return PrimePowerFamily(field=K, l=int(doc["l"]), truncation=truncation)
    if kind == "norm_intervals":
        if "intervals" not in doc:
            raise FamilySpecError("norm_intervals needs key 'intervals'")
        return NormIntervalFamily(
            field=K,
            intervals=tuple((int(lo), int(hi)) for lo, hi in doc["intervals"]),
            truncation=truncation)
    raise FamilySpecError(f"unknown family kind {kind!r}")
