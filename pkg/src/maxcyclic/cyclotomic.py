"""Exact arithmetic in Q[v]/(phi_l), its integral subring Z[v]/(phi_l), and Z/p.

Elements of the cyclotomic field are stored densely as coefficient tuples in
ascending powers of zeta, always reduced modulo the cyclotomic polynomial, so
equality is plain tuple equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_ell(ell: int) -> None:
    if not isinstance(ell, int) or ell < 3 or ell % 2 == 0:
        raise ValueError(f"ell must be an odd integer >= 3, got {ell!r}")


# -- integer polynomials as coefficient lists, ascending powers ---------------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b):
    """Long division of polynomials with rational coefficients."""
    a = [Fraction(x) for x in _poly_trim(a)]
    b = _poly_trim(b)
    if not b:
        raise ZeroDivisionError("division by zero")
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for k, bk in enumerate(b):
            a[shift + k] -= c * bk
        a = _poly_trim(a)
    return [_norm(x) for x in q], [_norm(x) for x in a]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(ell: int) -> tuple[int, ...]:
    """Integer coefficients of phi_ell, ascending powers."""
    num = [-1] + [0] * (ell - 1) + [1]
    for d in range(1, ell):
        if ell % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


class CyclotomicField:
    """The field K = Q[v]/(phi_ell) with zeta the image of v."""

    def __init__(self, ell: int):
        check_ell(ell)
        self.ell = ell
        self.phi = cyclotomic_polynomial(ell)
        self.degree = len(self.phi) - 1
        d = self.degree
        # zeta^k reduced, for every k a product of two reduced elements can reach
        self._rewrite = {}
        cur = [0] * (d - 1) + [1]  # zeta^(d-1)
        for k in range(d, 2 * d - 1):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * p for c, p in zip(cur, self.phi[:d])]
            self._rewrite[k] = tuple(cur)
        self.zero = CycloElem(self, (0,) * d)
        self.one = self.power(0)
        self.zeta = self.power(1)

    def __repr__(self):
        return f"CyclotomicField({self.ell})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.ell == self.ell

    def __hash__(self):
        return hash(("cyclotomic", self.ell))

    def reduce(self, coeffs) -> CycloElem:
        """Reduce an arbitrary-length coefficient list modulo phi_ell."""
        d = self.degree
        coeffs = list(coeffs)
        if len(coeffs) > 2 * d - 1:
            # fold with zeta^ell = 1 first
            folded = [0] * self.ell
            for k, c in enumerate(coeffs):
                folded[k % self.ell] += c
            coeffs = folded
            if len(coeffs) > 2 * d - 1:
                _, coeffs = _poly_divmod(coeffs, self.phi)
        out = coeffs[:d]
        out += [0] * (d - len(out))
        rewrite = self._rewrite
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                for j, r in enumerate(rewrite[k]):
                    if r:
                        out[j] += c * r
        return CycloElem(self, tuple([_norm(c) for c in out]))

    def __call__(self, value) -> CycloElem:
        if isinstance(value, CycloElem):
            return value
        if isinstance(value, Rational):
            return CycloElem(self, (_norm(Fraction(value)),) + (0,) * (self.degree - 1))
        return self.reduce(value)

    @lru_cache(maxsize=None)
    def power(self, k: int) -> CycloElem:
        """zeta**k for any integer k."""
        k %= self.ell
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        return self.reduce(coeffs)

    @lru_cache(maxsize=None)
    def qint(self, r: int) -> CycloElem:
        """Quantum integer [r] = (zeta^r - zeta^-r) / (zeta - zeta^-1)."""
        r %= self.ell
        coeffs = [0] * self.ell
        for k in range(r):
            coeffs[(r - 1 - 2 * k) % self.ell] += 1
        return self.reduce(coeffs)

    def from_laurent(self, poly: LaurentPoly) -> CycloElem:
        coeffs = [0] * self.ell
        for e, c in poly.terms.items():
            coeffs[e % self.ell] += c
        return self.reduce(coeffs)


class CycloElem:
    """An element of Q[v]/(phi_ell) in canonical reduced form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> CycloElem:
        if type(other) is CycloElem:
            if other.field is not self.field and other.field.ell != self.field.ell:
                raise ValueError("elements of different cyclotomic fields")
            return other
        return self.field(other)

    def __add__(self, other):
        other = self._coerce(other)
        return CycloElem(self.field, tuple([_norm(a + b) for a, b in zip(self.coeffs, other.coeffs)]))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return CycloElem(self.field, tuple([_norm(a - b) for a, b in zip(self.coeffs, other.coeffs)]))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CycloElem(self.field, tuple([-a for a in self.coeffs]))

    def __mul__(self, other):
        if type(other) is int:
            return CycloElem(self.field, tuple([a * other for a in self.coeffs]))
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self.field.reduce(prod)

    __rmul__ = __mul__

    def inv(self) -> CycloElem:
        """Multiplicative inverse by the extended Euclidean algorithm in Q[v]."""
        if not self:
            raise ZeroDivisionError("division by zero")
        old_r, r = list(self.field.phi), _poly_trim(self.coeffs)
        old_t, t = [], [1]
        while r:
            q, rem = _poly_divmod(old_r, r)
            old_r, r = r, rem
            old_t, t = t, _poly_sub(old_t, _poly_mul(q, t))
        # old_r is a nonzero constant since phi_ell is irreducible
        c = Fraction(old_r[0])
        return self.field.reduce([_norm(Fraction(x) / c) for x in old_t])

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        acc, base = self.field.one, self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def __eq__(self, other):
        if type(other) is CycloElem:
            return other.field.ell == self.field.ell and other.coeffs == self.coeffs
        if isinstance(other, Rational):
            return self.coeffs == self.field(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field.ell, self.coeffs))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_json(self) -> list:
        return [c if isinstance(c, int) else f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return " + ".join(terms) or "0"


class PrimeField:
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = PrimeFieldElem(0, p)
        self.one = PrimeFieldElem(1, p)

    def __call__(self, value: int) -> PrimeFieldElem:
        return PrimeFieldElem(value, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class PrimeFieldElem:
    __slots__ = ("residue", "p")

    def __init__(self, value: int, p: int):
        self.residue = value % p
        self.p = p

    def _val(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise ValueError("elements of different prime fields")
            return other.residue
        return other

    def __add__(self, other):
        return PrimeFieldElem(self.residue + self._val(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElem(self.residue - self._val(other), self.p)

    def __rsub__(self, other):
        return PrimeFieldElem(self._val(other) - self.residue, self.p)

    def __neg__(self):
        return PrimeFieldElem(-self.residue, self.p)

    def __mul__(self, other):
        return PrimeFieldElem(self.residue * self._val(other), self.p)

    __rmul__ = __mul__

    def inv(self):
        if not self.residue:
            raise ZeroDivisionError("division by zero")
        return PrimeFieldElem(pow(self.residue, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * PrimeFieldElem(self._val(other), self.p).inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return PrimeFieldElem(pow(self.residue, k, self.p), self.p)

    def __bool__(self):
        return self.residue != 0

    def is_zero(self):
        return self.residue == 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return other.p == self.p and other.residue == self.residue
        if isinstance(other, int):
            return (other - self.residue) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.residue))

    def to_json(self) -> int:
        return self.residue

    def __repr__(self):
        return f"{self.residue} (mod {self.p})"


class LaurentPoly:
    """Finitely supported integer Laurent polynomial in v."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls({e: c})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return " + ".join(f"{c}v^{e}" for e, c in sorted(self.terms.items())) or "0"

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient; raises ArithmeticError if ``other`` does not divide."""
        if not other:
            raise ZeroDivisionError("division by zero")
        rem = dict(self.terms)
        top_d = max(other.terms)
        lead = other.terms[top_d]
        low_d = min(other.terms)
        quot = {}
        while rem:
            top = max(rem)
            if top - top_d < min(rem) - low_d:
                break
            c = rem[top]
            if c % lead:
                raise ArithmeticError("inexact Laurent division")
            q = c // lead
            shift = top - top_d
            quot[shift] = q
            for e, b in other.terms.items():
                k = e + shift
                v = rem.get(k, 0) - q * b
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        if rem:
            raise ArithmeticError("inexact Laurent division")
        return LaurentPoly(quot)


def laurent_qint(r: int) -> LaurentPoly:
    """[r] in Z[v, v^-1], i.e. v^(r-1) + v^(r-3) + ... + v^(1-r)."""
    if r < 0:
        return -laurent_qint(-r)
    return LaurentPoly({r - 1 - 2 * k: 1 for k in range(r)})


def laurent_qbinom(a: int, r: int) -> LaurentPoly:
    num = LaurentPoly.monomial(0)
    den = LaurentPoly.monomial(0)
    for s in range(r):
        num = num * laurent_qint(a - s)
    for s in range(1, r + 1):
        den = den * laurent_qint(s)
    return num.divexact(den)


@lru_cache(maxsize=None)
def cyclotomic_field(ell: int) -> CyclotomicField:
    return CyclotomicField(ell)


def qint(r: int, ell: int) -> CycloElem:
    return cyclotomic_field(ell).qint(r)


def qbinom(a: int, r: int, ell: int) -> CycloElem:
    """Quantum binomial, computed in the Laurent ring and then reduced mod phi_ell."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return cyclotomic_field(ell).from_laurent(laurent_qbinom(a, r))


def specialize_v1(x: CycloElem, p: int) -> PrimeFieldElem:
    """Image of an element of Z[v]/(phi_p) under v -> 1, reduced mod p."""
    if not is_prime(x.field.ell):
        raise ValueError("specialization requires prime ell")
    if x.field.ell != p:
        raise ValueError(f"element lives at ell={x.field.ell}, not p={p}")
    if not x.is_integral():
        raise ValueError("not in B")
    return PrimeFieldElem(sum(x.coeffs), p)
