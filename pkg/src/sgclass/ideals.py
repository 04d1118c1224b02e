"""Fractional ideals of a numerical semigroup, in windowed canonical form.

A fractional ideal Y of the monoid G is a set of integers with Y + G inside Y
that is bounded below and eventually contains every integer.  It is stored as
its minimum, a bitmap window of members, and the stable bound past which every
integer belongs.  The canonical stable bound is max(minimal generators) plus
the conductor, which makes structural equality coincide with set equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations

from .errors import MismatchError
from .semigroups import NumericalSemigroup


@dataclass(frozen=True)
class FractionalIdeal:
    monoid: NumericalSemigroup
    min: int
    stable_bound: int
    window_bits: int = field(repr=False)  # bit i set iff min + i is a member, for min + i < stable_bound
    min_generators: tuple[int, ...] = ()

    @property
    def window(self) -> tuple[int, ...]:
        """Members in [min, stable_bound), smallest first."""
        return tuple(self.min + i for i in range(self.stable_bound - self.min)
                     if (self.window_bits >> i) & 1)

    def contains(self, g: int) -> bool:
        if g >= self.stable_bound:
            return True
        if g < self.min:
            return False
        return bool((self.window_bits >> (g - self.min)) & 1)

    def shift(self, offset: int) -> "FractionalIdeal":
        return replace(
            self,
            min=self.min + offset,
            stable_bound=self.stable_bound + offset,
            min_generators=tuple(m + offset for m in self.min_generators),
        )

    @property
    def is_principal_shift(self) -> bool:
        return len(self.min_generators) == 1

    def text(self) -> str:
        gens = ",".join(str(m) for m in self.min_generators)
        return f"gens={gens}@sgp={self.monoid.text()}"

    def to_json(self) -> dict:
        return {
            "min": self.min,
            "generators": list(self.min_generators),
            "divisorial": is_divisorial(self),
            "invertible": is_t_invertible(self),
        }


def ideal_from_generators(monoid: NumericalSemigroup, gens) -> FractionalIdeal:
    """The fractional ideal generated by a finite nonempty set of integers."""
    cleaned = sorted({int(g) for g in gens})
    if not cleaned:
        raise ValueError("a fractional ideal needs at least one generator")
    return _canonical(monoid, cleaned)


def _canonical(monoid: NumericalSemigroup, gens: list[int]) -> FractionalIdeal:
    lo = gens[0]
    hi = gens[-1] + monoid.conductor
    maxgen = monoid.generators[-1]
    size = hi - lo + maxgen + 1
    gamma = monoid.member_bits(size)
    bits = 0
    for f in gens:
        bits |= gamma << (f - lo)
    bits |= ((1 << (size - (hi - lo))) - 1) << (hi - lo)
    bits &= (1 << size) - 1

    minimal = []
    for i in range(size):
        if not (bits >> i) & 1:
            continue
        for g in monoid.generators:
            j = i - g
            if j >= 0 and (bits >> j) & 1:
                break
        else:
            minimal.append(lo + i)
    stable = minimal[-1] + monoid.conductor
    wsize = stable - lo
    return FractionalIdeal(monoid, lo, stable, bits & ((1 << wsize) - 1), tuple(minimal))


def _canonical_from_membership(monoid: NumericalSemigroup, lo: int, hi: int, member) -> FractionalIdeal:
    """Canonicalize the set {g : member(g)} | [hi, oo); member must be exact below hi."""
    maxgen = monoid.generators[-1]

    def mem(g: int) -> bool:
        return g >= hi or (g >= lo and member(g))

    minimal = [w for w in range(lo, hi + maxgen + 1)
               if mem(w) and not any(mem(w - g) for g in monoid.generators)]
    return _canonical(monoid, minimal)


@lru_cache(maxsize=128)
def unit_ideal(monoid: NumericalSemigroup) -> FractionalIdeal:
    """The monoid itself, viewed as the ideal generated by 0."""
    return ideal_from_generators(monoid, [0])


def _require_same_monoid(y: FractionalIdeal, z: FractionalIdeal) -> NumericalSemigroup:
    if y.monoid != z.monoid:
        raise MismatchError("ideals live over different semigroups")
    return y.monoid


def minkowski_sum(y: FractionalIdeal, z: FractionalIdeal) -> FractionalIdeal:
    monoid = _require_same_monoid(y, z)
    sums = sorted({a + b for a in y.min_generators for b in z.min_generators})
    return _canonical(monoid, sums)


def colon(y: FractionalIdeal, z: FractionalIdeal) -> FractionalIdeal:
    """(y : z) = every g with g + z inside y."""
    monoid = _require_same_monoid(y, z)
    lo = y.min - z.min
    hi = y.stable_bound - z.min
    gens = z.min_generators
    return _canonical_from_membership(
        monoid, lo, hi, lambda g: all(y.contains(g + e) for e in gens))


def inverse(y: FractionalIdeal) -> FractionalIdeal:
    return colon(unit_ideal(y.monoid), y)


def v_closure(y: FractionalIdeal) -> FractionalIdeal:
    return inverse(inverse(y))


def t_closure(y: FractionalIdeal, definitional: bool = False) -> FractionalIdeal:
    """The t-closure; equals the v-closure for these finitely generated ideals.

    With ``definitional=True`` the union over v-closures of finitely generated
    subideals is computed literally, as a cross-check.  The subset lattice is
    exponential in the generator count, so that mode is capped.
    """
    if not definitional:
        return v_closure(y)
    gens = y.min_generators
    if len(gens) > 16:
        raise ValueError("definitional t-closure is capped at 16 generators")
    closures = []
    for r in range(1, len(gens) + 1):
        for subset in combinations(gens, r):
            closures.append(v_closure(_canonical(y.monoid, list(subset))))
    lo = min(c.min for c in closures)
    hi = min(c.stable_bound for c in closures)
    return _canonical_from_membership(
        y.monoid, lo, hi, lambda g: any(c.contains(g) for c in closures))


def is_divisorial(y: FractionalIdeal) -> bool:
    return v_closure(y) == y


def is_principal(y: FractionalIdeal) -> bool:
    return len(y.min_generators) == 1


def is_t_invertible(y: FractionalIdeal) -> bool:
    return v_closure(minkowski_sum(y, inverse(y))) == unit_ideal(y.monoid)


@dataclass(frozen=True)
class MonoidClass:
    """A divisorial-class representative: the v-closure shifted to minimum 0."""

    representative: FractionalIdeal
    invertible: bool


def class_reduce(y: FractionalIdeal) -> MonoidClass:
    v = v_closure(y)
    rep = v.shift(-v.min)
    return MonoidClass(rep, is_t_invertible(rep))


def _require_invertible(*classes: MonoidClass):
    for c in classes:
        if not c.invertible:
            raise ValueError("class arithmetic needs t-invertible representatives")


def class_mul(c1: MonoidClass, c2: MonoidClass) -> MonoidClass:
    _require_invertible(c1, c2)
    return class_reduce(minkowski_sum(c1.representative, c2.representative))


def class_inverse(c: MonoidClass) -> MonoidClass:
    _require_invertible(c)
    return class_reduce(inverse(c.representative))


def class_is_trivial(c: MonoidClass) -> bool:
    return c.representative == unit_ideal(c.representative.monoid)


def canonical_generator_sets(monoid: NumericalSemigroup, bound: int):
    """Yield every minimal generating set with generators in [0, bound].

    These are exactly the antichains of the divisibility order of the monoid:
    sets where no two elements differ by a nonzero member.  Order: smallest
    maximum first, then lexicographic, so the sweep is deterministic.
    """
    gap_set = set(monoid.gaps)
    for top in range(bound + 1):
        def extend(prefix: tuple[int, ...]):
            start = prefix[-1] + 1 if prefix else 0
            for e in range(start, top):
                if (top - e) in gap_set and all((e - p) in gap_set for p in prefix):
                    yield from extend(prefix + (e,))
            yield prefix + (top,)
        yield from extend(())


def search_nonprincipal_t_invertible(monoid: NumericalSemigroup, bound: int,
                                     progress=None) -> FractionalIdeal | None:
    """Sweep every canonical ideal with generators in [0, bound].

    Returns the first non-principal t-invertible ideal in the deterministic
    enumeration order, or None when the sweep is exhaustive and empty-handed.
    ``progress(examined, generators)`` is called periodically.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    examined = 0
    for gens in canonical_generator_sets(monoid, bound):
        ideal = _canonical(monoid, list(gens))
        examined += 1
        if progress is not None and examined % 250 == 0:
            progress(examined, gens)
        if is_principal(ideal):
            continue
        if is_t_invertible(ideal):
            return ideal
    if progress is not None:
        progress(examined, None)
    return None
