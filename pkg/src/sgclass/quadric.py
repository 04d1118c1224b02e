"""A graded ring where a finitely generated homogeneous ideal is invertible
while the ring itself is not integrally closed in degree zero.

The ambient ring is Q[x, 1/x, y, z] / (yz - x^2 + x).  Normal forms keep
monomials x^a y^b z^c with b*c = 0 (the relation rewrites yz to x^2 - x);
x-exponents may be negative because one of the six standard generators divides
by x.  The distinguished subring has full graded parts in every nonzero degree
but only Q + x(x-1)Q[x] in degree zero, which is what the membership test
enforces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


@dataclass(frozen=True)
class QuadricElement:
    """Normal-form element: sorted terms ((a, b, c), coeff) with b*c = 0."""

    terms: tuple[tuple[tuple[int, int, int], Fraction], ...]

    def __bool__(self):
        return bool(self.terms)

    def _lift(self, other) -> "QuadricElement":
        if isinstance(other, QuadricElement):
            return other
        return _element({(0, 0, 0): Fraction(other)})

    def __add__(self, other):
        o = self._lift(other)
        acc = dict(self.terms)
        for mono, coeff in o.terms:
            acc[mono] = acc.get(mono, Fraction(0)) + coeff
        return _element(acc)

    __radd__ = __add__

    def __neg__(self):
        return QuadricElement(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        acc: dict[tuple[int, int, int], Fraction] = {}
        for (a1, b1, c1), k1 in self.terms:
            for (a2, b2, c2), k2 in o.terms:
                _accumulate(acc, a1 + a2, b1 + b2, c1 + c2, k1 * k2)
        return _element(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = one()
        for _ in range(n):
            result = result * self
        return result

    def graded_components(self) -> dict[int, "QuadricElement"]:
        """Split by degree b - c."""
        split: dict[int, dict] = {}
        for (a, b, c), k in self.terms:
            split.setdefault(b - c, {})[(a, b, c)] = k
        return {d: _element(m) for d, m in sorted(split.items())}

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c), k in self.terms:
            factors = []
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("y" if b == 1 else f"y^{b}")
            if c:
                factors.append("z" if c == 1 else f"z^{c}")
            if not factors or abs(k) != 1:
                factors.insert(0, str(abs(k)))
            term = "*".join(factors)
            parts.append(f"-{term}" if k < 0 else f"+{term}")
        joined = "".join(parts)
        return joined[1:] if joined.startswith("+") else joined


def _accumulate(acc: dict, a: int, b: int, c: int, coeff: Fraction):
    m = min(b, c)
    if m == 0:
        key = (a, b, c)
        acc[key] = acc.get(key, Fraction(0)) + coeff
        return
    # (x^2 - x)^m = sum_k C(m,k) (-1)^(m-k) x^(m+k)
    for k in range(m + 1):
        key = (a + m + k, b - m, c - m)
        piece = coeff * comb(m, k) * (-1) ** (m - k)
        acc[key] = acc.get(key, Fraction(0)) + piece


def _element(mapping) -> QuadricElement:
    acc: dict[tuple[int, int, int], Fraction] = {}
    for (a, b, c), coeff in dict(mapping).items():
        _accumulate(acc, a, b, c, Fraction(coeff))
    terms = tuple(sorted((m, k) for m, k in acc.items() if k))
    return QuadricElement(terms)


def one() -> QuadricElement:
    return _element({(0, 0, 0): 1})


def x_pow(a: int, coeff=1) -> QuadricElement:
    return _element({(a, 0, 0): coeff})


def y_pow(b: int, coeff=1) -> QuadricElement:
    return _element({(0, b, 0): coeff})


def z_pow(c: int, coeff=1) -> QuadricElement:
    return _element({(0, 0, c): coeff})


def from_terms(entries) -> QuadricElement:
    """entries: iterable of ((a, b, c), coeff), rewritten into normal form."""
    acc: dict[tuple[int, int, int], Fraction] = {}
    for (a, b, c), coeff in entries:
        _accumulate(acc, a, b, c, Fraction(coeff))
    return _element(acc)


def in_subring(u: QuadricElement) -> bool:
    """Membership in the subring with degree-zero part Q + x(x-1)Q[x].

    Nonzero degrees only need polynomial x-exponents; the degree-zero
    polynomial p must additionally satisfy p(0) = p(1).
    """
    for degree, component in u.graded_components().items():
        if any(a < 0 for (a, _, _), _ in component.terms):
            return False
        if degree == 0:
            at_zero = sum((k for (a, _, _), k in component.terms if a == 0),
                          start=Fraction(0))
            at_one = sum((k for _, k in component.terms), start=Fraction(0))
            if at_zero != at_one:
                return False
    return True


def standard_generators() -> dict[str, QuadricElement]:
    """The six generators: an ideal triple and its inverse triple."""
    x, y, z = x_pow(1), y_pow(1), z_pow(1)
    return {
        "a": x * x * (x - 1),
        "b": x - y,
        "c": x * (x - 1) - x * y,
        "d": one() + z * x_pow(-1),
        "e": z + x - 1,
        "f": x - 1,
    }


def verify_unit_identity() -> dict:
    """Check that the combination of products below collapses to 1, that all
    nine cross products lie in the subring, and that x alone does not."""
    g = standard_generators()
    x = x_pow(1)
    be_cd = g["b"] * g["e"] - g["c"] * g["d"]
    bd = g["b"] * g["d"]
    bracket = be_cd * be_cd - bd * bd + 2 * bd
    combo = 16 * g["a"] * g["f"] - (4 * x * (x - 1) - 1) * bracket
    checks = [{
        "name": "unit combination normal form",
        "status": "pass" if combo == one() else "fail",
        "detail": combo.text(),
    }]
    for iname in ("a", "b", "c"):
        for jname in ("d", "e", "f"):
            product = g[iname] * g[jname]
            ok = in_subring(product)
            checks.append({
                "name": f"product {iname}*{jname} in subring",
                "status": "pass" if ok else "fail",
                "detail": product.text(),
            })
    checks.append({
        "name": "x outside subring",
        "status": "pass" if not in_subring(x) else "fail",
        "detail": x.text(),
    })
    return {
        "operation": "unit_identity",
        "identity_value": combo.text(),
        "checks": checks,
        "ok": all(c["status"] == "pass" for c in checks),
    }
