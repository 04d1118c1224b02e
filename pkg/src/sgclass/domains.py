"""Coefficient rings: Q, Z, and imaginary quadratic orders.

Quadratic orders are Z[w] with w = sqrt(d) for squarefree d < 0, or
w = (1+sqrt(d))/2 for the maximal order when d = 1 mod 4.  Fractional ideals
are full rank-2 lattices closed under multiplication by w, stored as a
rational scale times an integer basis [a, b+c*w] in upper-triangular normal
form: a, c > 0, c | a, c | b, 0 <= b < a.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

from .errors import CapabilityError, MismatchError, ParseError


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        while n % f == 0:
            n //= f
        f += 1
    return True


@dataclass(frozen=True)
class CoefficientDomain:
    """One of Q, Z, or an imaginary quadratic order."""

    kind: str                 # "Q" | "Z" | "quadratic"
    d: int | None = None      # squarefree negative radicand
    maximal: bool | None = None

    def __post_init__(self):
        if self.kind in ("Q", "Z"):
            if self.d is not None or self.maximal is not None:
                raise ValueError("rational kinds take no radicand")
            return
        if self.kind != "quadratic":
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.d is None or self.d >= 0 or not _is_squarefree(self.d):
            raise ValueError("the radicand must be a squarefree negative integer")
        if self.maximal is None:
            raise ValueError("quadratic orders must state maximality")

    @staticmethod
    def rationals() -> "CoefficientDomain":
        return CoefficientDomain("Q")

    @staticmethod
    def integers() -> "CoefficientDomain":
        return CoefficientDomain("Z")

    @staticmethod
    def z_sqrt(d: int) -> "CoefficientDomain":
        """Z[sqrt(d)]; maximal exactly when d is not 1 mod 4."""
        return CoefficientDomain("quadratic", d, d % 4 != 1)

    @staticmethod
    def maximal_order(d: int) -> "CoefficientDomain":
        """The full ring of integers of Q(sqrt(d))."""
        return CoefficientDomain("quadratic", d, True)

    @property
    def half_basis(self) -> bool:
        """True when w = (1+sqrt(d))/2 rather than sqrt(d)."""
        return self.kind == "quadratic" and self.maximal and self.d % 4 == 1

    @property
    def omega_trace(self) -> int:
        return 1 if self.half_basis else 0

    @property
    def omega_norm(self) -> int:
        return (1 - self.d) // 4 if self.half_basis else -self.d

    @property
    def discriminant(self) -> int:
        if self.kind != "quadratic":
            raise CapabilityError("only quadratic orders have a discriminant")
        return self.d if self.half_basis else 4 * self.d

    def is_integrally_closed(self) -> bool:
        return True if self.kind in ("Q", "Z") else bool(self.maximal)

    def element(self, x, y=0) -> "QuadElement":
        if self.kind != "quadratic":
            raise CapabilityError("element(x, y) needs a quadratic order")
        return QuadElement(self, Fraction(x), Fraction(y))

    def coerce(self, value):
        """Bring a raw value into the quotient field of this domain."""
        if self.kind == "quadratic":
            if isinstance(value, QuadElement):
                if value.domain != self:
                    raise MismatchError("element belongs to a different order")
                return value
            return QuadElement(self, Fraction(value), Fraction(0))
        if isinstance(value, QuadElement):
            raise MismatchError("quadratic element in a rational domain")
        return Fraction(value)

    def is_integral_element(self, value) -> bool:
        """Membership of a quotient-field element in the ring itself."""
        v = self.coerce(value)
        if self.kind == "Q":
            return True
        if self.kind == "Z":
            return v.denominator == 1
        return v.x.denominator == 1 and v.y.denominator == 1

    def text(self) -> str:
        if self.kind in ("Q", "Z"):
            return self.kind
        if self.half_basis:
            return f"O[sqrt({self.d})]"
        return f"Z[sqrt({self.d})]"


@dataclass(frozen=True)
class QuadElement:
    """x + y*w with rational x, y, in the quotient field of a quadratic order."""

    domain: CoefficientDomain
    x: Fraction
    y: Fraction

    def _lift(self, other) -> "QuadElement":
        return self.domain.coerce(other)

    def __add__(self, other):
        o = self._lift(other)
        return QuadElement(self.domain, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(self.domain, -self.x, -self.y)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        t, n = self.domain.omega_trace, self.domain.omega_norm
        yy = self.y * o.y
        return QuadElement(
            self.domain,
            self.x * o.x - n * yy,
            self.x * o.y + self.y * o.x + t * yy,
        )

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.x or self.y)

    def conjugate(self) -> "QuadElement":
        t = self.domain.omega_trace
        return QuadElement(self.domain, self.x + t * self.y, -self.y)

    def norm(self) -> Fraction:
        t, n = self.domain.omega_trace, self.domain.omega_norm
        return self.x * self.x + t * self.x * self.y + n * self.y * self.y

    def text(self) -> str:
        if not self.y:
            return str(self.x)
        ytext = "w" if self.y == 1 else ("-w" if self.y == -1 else f"{self.y}*w")
        if not self.x:
            return ytext
        sep = "+" if self.y > 0 else ""
        return f"{self.x}{sep}{ytext}"


# Lattice plumbing.  A full-rank lattice in Q^2 (coordinates: coefficient of 1,
# coefficient of w) is reduced to (scale, a, b, c) with basis scale*(a, 0) and
# scale*(b, c); the scale is the unique positive rational making the integer
# triple primitive against it, so the representation is canonical.

def _hnf_int(vectors: list[tuple[int, int]]) -> tuple[int, int, int]:
    b = c = 0
    xs: list[int] = []
    for x, y in vectors:
        if y == 0:
            xs.append(x)
        elif c == 0:
            b, c = x, y
        else:
            g, s, t = _egcd(c, y)
            xs.append((y // g) * b - (c // g) * x)
            b, c = s * b + t * x, g
    if c < 0:
        b, c = -b, -c
    a = 0
    for x in xs:
        a = gcd(a, x)
    if c == 0 or a == 0:
        raise ValueError("module does not have full rank")
    return a, b % a, c


def _hnf_rational(vectors) -> tuple[Fraction, int, int, int]:
    vs = [(Fraction(x), Fraction(y)) for x, y in vectors if x or y]
    if not vs:
        raise ValueError("the zero module is not a fractional ideal")
    den = 1
    for x, y in vs:
        den = lcm(den, x.denominator, y.denominator)
    a, b, c = _hnf_int([(int(x * den), int(y * den)) for x, y in vs])
    g = gcd(gcd(a, b), c)
    k = gcd(den, g)
    return Fraction(k, den), a // k, b // k, c // k


def _in_triple(a: int, b: int, c: int, x: Fraction, y: Fraction) -> bool:
    k = y / c
    if k.denominator != 1:
        return False
    return ((x - k * b) / a).denominator == 1


def _omega_closed(domain: CoefficientDomain, a: int, b: int, c: int) -> bool:
    t, n = domain.omega_trace, domain.omega_norm
    return (_in_triple(a, b, c, Fraction(0), Fraction(a))
            and _in_triple(a, b, c, Fraction(-c * n), Fraction(b + c * t)))


@dataclass(frozen=True)
class CoeffIdeal:
    """A nonzero fractional ideal of a coefficient domain.

    Over Q the only one is the unit ideal; over Z it is a positive rational
    generator; over a quadratic order it is scale * [a, b+c*w].
    """

    domain: CoefficientDomain
    gen: Fraction | None = None
    scale: Fraction | None = None
    a: int | None = None
    b: int | None = None
    c: int | None = None

    def basis_vectors(self) -> list[tuple[Fraction, Fraction]]:
        if self.domain.kind == "quadratic":
            return [(self.scale * self.a, Fraction(0)),
                    (self.scale * self.b, self.scale * self.c)]
        return [(Fraction(1) if self.gen is None else Fraction(self.gen), Fraction(0))]

    def basis_elements(self) -> list:
        if self.domain.kind == "quadratic":
            return [self.domain.element(x, y) for x, y in self.basis_vectors()]
        return [Fraction(1) if self.gen is None else Fraction(self.gen)]

    def contains(self, value) -> bool:
        v = self.domain.coerce(value)
        if self.domain.kind == "Q":
            return True
        if self.domain.kind == "Z":
            return (v / self.gen).denominator == 1
        if not v:
            return True
        return _in_triple(self.a, self.b, self.c, v.x / self.scale, v.y / self.scale)

    def norm(self) -> Fraction:
        if self.domain.kind == "Q":
            return Fraction(1)
        if self.domain.kind == "Z":
            return Fraction(self.gen)
        return self.scale * self.scale * self.a * self.c

    def is_unit(self) -> bool:
        return self == unit_ideal(self.domain)

    def text(self) -> str:
        if self.domain.kind == "Q":
            return "(1)"
        if self.domain.kind == "Z":
            return f"({self.gen})"
        prefix = "" if self.scale == 1 else f"{self.scale}*"
        w = "w" if self.c == 1 else f"{self.c}*w"
        return f"{prefix}[{self.a}, {self.b}+{w}]"

    def to_json(self) -> dict:
        if self.domain.kind == "quadratic":
            return {"scale": str(self.scale), "a": self.a, "b": self.b, "c": self.c}
        scale = "1" if self.domain.kind == "Q" else str(self.gen)
        return {"scale": scale, "a": 1, "b": 0, "c": 1}


def unit_ideal(domain: CoefficientDomain) -> CoeffIdeal:
    if domain.kind == "Q":
        return CoeffIdeal(domain)
    if domain.kind == "Z":
        return CoeffIdeal(domain, gen=Fraction(1))
    return CoeffIdeal(domain, scale=Fraction(1), a=1, b=0, c=1)


def _from_lattice(domain: CoefficientDomain, vectors) -> CoeffIdeal:
    scale, a, b, c = _hnf_rational(vectors)
    if not _omega_closed(domain, a, b, c):
        raise ValueError("module is not closed under multiplication by w")
    return CoeffIdeal(domain, scale=scale, a=a, b=b, c=c)


def _gcd_fractions(values: list[Fraction]) -> Fraction:
    den = 1
    for v in values:
        den = lcm(den, v.denominator)
    num = 0
    for v in values:
        num = gcd(num, int(v * den))
    return Fraction(num, den)


def ideal_from_generators(domain: CoefficientDomain, gens) -> CoeffIdeal:
    """The fractional ideal generated by finitely many elements, not all zero."""
    if domain.kind == "quadratic":
        elems = [domain.coerce(g) for g in gens]
        elems = [e for e in elems if e]
        if not elems:
            raise ValueError("at least one nonzero generator is required")
        vectors = []
        for e in elems:
            we = e * domain.element(0, 1)
            vectors.append((e.x, e.y))
            vectors.append((we.x, we.y))
        return _from_lattice(domain, vectors)
    values = [Fraction(g) for g in gens if g]
    if not values:
        raise ValueError("at least one nonzero generator is required")
    if domain.kind == "Q":
        return unit_ideal(domain)
    return CoeffIdeal(domain, gen=_gcd_fractions(values))


def _require_same_domain(i: CoeffIdeal, j: CoeffIdeal) -> CoefficientDomain:
    if i.domain != j.domain:
        raise MismatchError("ideals live over different domains")
    return i.domain


def mul(i: CoeffIdeal, j: CoeffIdeal) -> CoeffIdeal:
    domain = _require_same_domain(i, j)
    if domain.kind == "Q":
        return i
    if domain.kind == "Z":
        return CoeffIdeal(domain, gen=i.gen * j.gen)
    vectors = []
    for e in i.basis_elements():
        for f in j.basis_elements():
            p = e * f
            vectors.append((p.x, p.y))
    return _from_lattice(domain, vectors)


def add(i: CoeffIdeal, j: CoeffIdeal) -> CoeffIdeal:
    domain = _require_same_domain(i, j)
    if domain.kind == "Q":
        return i
    if domain.kind == "Z":
        return CoeffIdeal(domain, gen=_gcd_fractions([i.gen, j.gen]))
    return _from_lattice(domain, i.basis_vectors() + j.basis_vectors())


def power(i: CoeffIdeal, k: int) -> CoeffIdeal:
    if k < 0:
        raise ValueError("negative powers go through inverse()")
    result = unit_ideal(i.domain)
    for _ in range(k):
        result = mul(result, i)
    return result


# 2x2 rational matrices as ((m00, m01), (m10, m11)) acting on column vectors.

def _mat_inv(m):
    (p, q), (r, s) = m
    det = p * s - q * r
    if not det:
        raise ValueError("singular matrix")
    return ((s / det, -q / det), (-r / det, p / det))


def _mat_apply(m, v):
    (p, q), (r, s) = m
    return (p * v[0] + q * v[1], r * v[0] + s * v[1])


def _dual_basis(b1, b2):
    # rows of the inverse-transpose of the basis matrix [b1; b2]
    (p, q), (r, s) = (b1, b2)
    det = p * s - q * r
    if not det:
        raise ValueError("degenerate lattice")
    return (s / det, -r / det), (-q / det, p / det)


def _lattice_intersection(basis1, basis2):
    d1 = _dual_basis(*basis1)
    d2 = _dual_basis(*basis2)
    scale, a, b, c = _hnf_rational([*d1, *d2])
    sum_basis = ((scale * a, Fraction(0)), (scale * b, scale * c))
    return _dual_basis(*sum_basis)


def colon(i: CoeffIdeal, j: CoeffIdeal) -> CoeffIdeal:
    """(i : j) = every field element x with x*j inside i."""
    domain = _require_same_domain(i, j)
    if domain.kind == "Q":
        return i
    if domain.kind == "Z":
        return CoeffIdeal(domain, gen=i.gen / j.gen)
    target = [tuple(map(Fraction, v)) for v in i.basis_vectors()]
    lattices = []
    for beta in j.basis_elements():
        wbeta = beta * domain.element(0, 1)
        m = ((beta.x, wbeta.x), (beta.y, wbeta.y))
        minv = _mat_inv(m)
        lattices.append(tuple(_mat_apply(minv, v) for v in target))
    basis = lattices[0]
    for other in lattices[1:]:
        basis = _lattice_intersection(basis, other)
    return _from_lattice(domain, basis)


def inverse(i: CoeffIdeal) -> CoeffIdeal:
    return colon(unit_ideal(i.domain), i)


def v_closure(i: CoeffIdeal) -> CoeffIdeal:
    return inverse(inverse(i))


def is_divisorial(i: CoeffIdeal) -> bool:
    return v_closure(i) == i


def is_t_invertible(i: CoeffIdeal) -> bool:
    return v_closure(mul(i, inverse(i))) == unit_ideal(i.domain)


def is_principal(i: CoeffIdeal):
    """A generator when the ideal is principal, else None.

    For quadratic orders this is a finite norm-equation sweep: the ideal is
    principal exactly when it contains an element whose norm equals the ideal
    norm.
    """
    if i.domain.kind == "Q":
        return Fraction(1)
    if i.domain.kind == "Z":
        return Fraction(i.gen)
    domain = i.domain
    t, n = domain.omega_trace, domain.omega_norm
    a, b, c = i.a, i.b, i.c
    target = a * c
    disc = t * t - 4 * n
    # X = u*a + v*b, Y = v*c; norm X^2 + t*X*Y + n*Y^2 = a*c bounds Y^2 <= 4*a*c/|disc|
    vmax = isqrt(4 * a * c // (-disc)) // c
    for v in range(0, vmax + 1):
        yy = v * c
        dx = 4 * target - (-disc) * yy * yy
        if dx < 0:
            continue
        root = isqrt(dx)
        if root * root != dx:
            continue
        for sign in (1, -1) if root else (1,):
            num = -t * yy + sign * root
            if num % 2:
                continue
            xx = num // 2
            if (xx - v * b) % a:
                continue
            return domain.element(Fraction(xx) * i.scale, Fraction(yy) * i.scale)
    return None


@dataclass(frozen=True)
class QuadForm:
    """A positive definite integral binary quadratic form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.discriminant >= 0:
            raise ValueError("the form must be positive definite")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if b < 0 and (abs(b) == a or a == c):
            return False
        return True

    def reduced(self) -> "QuadForm":
        d = self.discriminant
        a, b, c = self.a, self.b, self.c
        while True:
            if not (-a < b <= a):
                q = -((a - b) // (2 * a))
                b -= 2 * a * q
                c = (b * b - d) // (4 * a)
            if a > c:
                a, b, c = c, -b, a
                continue
            if a == c and b < 0:
                b = -b
            return QuadForm(a, b, c)

    def inverse(self) -> "QuadForm":
        return QuadForm(self.a, -self.b, self.c).reduced()

    def text(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def identity_form(disc: int) -> QuadForm:
    k = disc % 2
    return QuadForm(1, k, (k * k - disc) // 4)


def reduced_forms(disc: int) -> list[QuadForm]:
    """All reduced positive definite forms of the given negative discriminant."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError("discriminant must be negative and 0 or 1 mod 4")
    forms = []
    for a in range(1, isqrt(-disc // 3) + 1):
        for b in range(-a, a + 1):
            if (b - disc) % 2:
                continue
            if (b * b - disc) % (4 * a):
                continue
            c = (b * b - disc) // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            forms.append(QuadForm(a, b, c))
    return sorted(forms, key=lambda f: (f.a, f.b, f.c))


def domain_for_discriminant(disc: int) -> CoefficientDomain:
    if disc >= 0:
        raise ValueError("discriminant must be negative")
    if disc % 4 == 1:
        domain = CoefficientDomain.maximal_order(disc)
    elif disc % 4 == 0:
        d = disc // 4
        if d % 4 == 1 or not _is_squarefree(d):
            raise CapabilityError(f"{disc} is not a fundamental discriminant")
        domain = CoefficientDomain.z_sqrt(d)
    else:
        raise ValueError("discriminant must be 0 or 1 mod 4")
    if domain.discriminant != disc:
        raise CapabilityError(f"{disc} is not a fundamental discriminant")
    return domain


def form_to_ideal(domain: CoefficientDomain, form: QuadForm) -> CoeffIdeal:
    """The lattice [a, (-b+sqrt(disc))/2] as an ideal of the order."""
    if domain.kind != "quadratic" or form.discriminant != domain.discriminant:
        raise MismatchError("form discriminant does not match the order")
    t = domain.omega_trace
    bt = -(form.b + t) // 2
    return _from_lattice(domain, [(Fraction(form.a), Fraction(0)),
                                  (Fraction(bt % form.a), Fraction(1))])


def ideal_to_form(i: CoeffIdeal) -> QuadForm:
    """The reduced form of the norm quadratic on an oriented ideal basis."""
    domain = i.domain
    if domain.kind != "quadratic":
        raise CapabilityError("forms need a quadratic order")
    t, n = domain.omega_trace, domain.omega_norm
    a, b, c = i.a, i.b, i.c
    fa = a // c
    fb = -(2 * (b // c) + t)
    fc = (b * b + t * b * c + n * c * c) // (a * c)
    return QuadForm(fa, fb, fc).reduced()


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Gaussian composition, computed through the ideal product."""
    if f.discriminant != g.discriminant:
        raise MismatchError("forms have different discriminants")
    domain = domain_for_discriminant(f.discriminant)
    product = mul(form_to_ideal(domain, f), form_to_ideal(domain, g))
    return ideal_to_form(product)


def form_power(f: QuadForm, k: int) -> QuadForm:
    result = identity_form(f.discriminant)
    base = f if k >= 0 else f.inverse()
    for _ in range(abs(k)):
        result = compose(result, base)
    return result


@dataclass(frozen=True)
class ClassGroup:
    domain: CoefficientDomain
    forms: tuple[QuadForm, ...]
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.forms)

    @property
    def identity_index(self) -> int:
        return self.forms.index(identity_form(self.domain.discriminant))

    def index_of(self, form: QuadForm) -> int:
        return self.forms.index(form.reduced())

    def element_order(self, index: int) -> int:
        e = self.identity_index
        k, current = 1, index
        while current != e:
            current = self.table[current][index]
            k += 1
        return k

    def structure(self) -> str:
        h = self.order
        if h == 1:
            return "trivial"
        orders = [self.element_order(i) for i in range(h)]
        if max(orders) == h:
            return f"Z/{h}Z"
        exponent = 1
        for o in orders:
            exponent = lcm(exponent, o)
        return f"abelian of order {h} with exponent {exponent}"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "structure": self.structure(),
            "forms": [f.text() for f in self.forms],
            "table": [list(row) for row in self.table],
        }


def class_group(domain: CoefficientDomain) -> ClassGroup:
    """The form class group of a maximal imaginary quadratic order."""
    if domain.kind != "quadratic":
        raise CapabilityError("class groups are computed for quadratic orders only")
    if not domain.maximal:
        raise CapabilityError("class groups are computed for maximal orders only")
    forms = tuple(reduced_forms(domain.discriminant))
    index = {f: i for i, f in enumerate(forms)}
    table = tuple(
        tuple(index[compose(f, g)] for g in forms) for f in forms
    )
    return ClassGroup(domain, forms, table)


def describe_class_group(domain: CoefficientDomain) -> str:
    if domain.kind in ("Q", "Z"):
        return "trivial"
    return class_group(domain).structure()


def parse_domain(text: str) -> CoefficientDomain:
    """Parse ``Q``, ``Z``, ``Z[sqrt(-5)]``, or ``O[sqrt(-3)]``."""
    text = text.strip()
    if text == "Q":
        return CoefficientDomain.rationals()
    if text == "Z":
        return CoefficientDomain.integers()
    for prefix, factory in (("Z[sqrt(", CoefficientDomain.z_sqrt),
                            ("O[sqrt(", CoefficientDomain.maximal_order)):
        if text.startswith(prefix) and text.endswith(")]"):
            try:
                d = int(text[len(prefix):-2])
            except ValueError as exc:
                raise ParseError(f"bad radicand in {text!r}") from exc
            try:
                return factory(d)
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown domain {text!r}")
