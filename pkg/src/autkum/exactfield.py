"""Exact arithmetic over small odd prime fields, their finite extensions,
and the rational function field F_p(t).

All values are immutable and every operation is a pure function, so values
can be shared freely between threads.  Characteristic 2 is rejected at
construction everywhere, not special-cased.
"""

from __future__ import annotations

import itertools
import re

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidPrime,
    NotLaurent,
    TooLarge,
    ZeroInverse,
)

# Largest finite-field cardinality that enumeration-based helpers accept.
ENUMERATION_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate at desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_odd_prime(p) -> None:
    if not isinstance(p, int) or isinstance(p, bool) or p == 2 or not is_prime(p):
        raise InvalidPrime(f"odd prime required, got {p!r}")


class PrimeFieldElem:
    """Residue in [0, p) with exact arithmetic modulo an odd prime p.

    Plain ints mix freely with elements (they are reduced mod p); elements
    of different moduli never do.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise FieldMismatch(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem(-self.value, self.p)

    def inv(self) -> "PrimeFieldElem":
        if self.value == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return PrimeFieldElem(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * PrimeFieldElem(v, self.p).inv()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(v, self.p) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return PrimeFieldElem(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"F{self.p}({self.value})"

    @property
    def is_zero(self) -> bool:
        return self.value == 0


class PrimeField:
    """Descriptor for the prime field F_p, p an odd prime."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        require_odd_prime(p)
        self.p = p

    @property
    def order(self) -> int:
        return self.p

    @property
    def char(self) -> int:
        return self.p

    def elem(self, v) -> PrimeFieldElem:
        if isinstance(v, PrimeFieldElem):
            if v.p != self.p:
                raise FieldMismatch(f"element of F{v.p} handed to F{self.p}")
            return v
        return PrimeFieldElem(v, self.p)

    def zero(self) -> PrimeFieldElem:
        return PrimeFieldElem(0, self.p)

    def one(self) -> PrimeFieldElem:
        return PrimeFieldElem(1, self.p)

    def elements(self):
        return (PrimeFieldElem(i, self.p) for i in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class Poly:
    """Dense polynomial over F_p; coefficients by ascending exponent, no
    trailing zeros (the zero polynomial has an empty tuple)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, p):
        return cls(p)

    @classmethod
    def one(cls, p):
        return cls(p, (1,))

    @classmethod
    def t(cls, p):
        return cls(p, (0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other: "Poly"):
        if other.p != self.p:
            raise FieldMismatch(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly(self.p, (other,))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return Poly(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly(self.p, (other,))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.p, tuple(c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % self.p
        return Poly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = pow(other.leading, p - 2, p)
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - db - 1, -1, -1):
            c = (rem[i + db] * lead_inv) % p
            if c:
                quot[i] = c
                for k, b in enumerate(other.coeffs):
                    rem[i + k] = (rem[i + k] - c * b) % p
        return Poly(p, quot), Poly(p, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self * pow(self.leading, self.p - 2, self.p)

    @staticmethod
    def gcd(a: "Poly", b: "Poly") -> "Poly":
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def shift(self, k: int) -> "Poly":
        """Multiply by t**k, k >= 0."""
        if self.is_zero:
            return self
        return Poly(self.p, (0,) * k + self.coeffs)

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def eval_at(self, x):
        """Horner evaluation at any element supporting * and int +."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Poly(self.p, (other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"Poly_{self.p}[{poly_text(self)}]"


def poly_text(poly: Poly) -> str:
    """Ascending-exponent textual form, e.g. '2 + t^2'."""
    if poly.is_zero:
        return "0"
    return " + ".join(
        _term_text(c, e) for e, c in enumerate(poly.coeffs) if c
    )


def _term_text(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    t = "t" if e == 1 else f"t^{e}"
    return t if c == 1 else f"{c}*{t}"


class RatFunc:
    """Element of F_p(t) in canonical form: monic denominator, numerator
    and denominator coprime, zero represented as 0/1.

    Canonical form makes equality componentwise, and the constructor
    normalizes, so normalization is idempotent by construction.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one(num.p)
        if num.p != den.p:
            raise FieldMismatch(f"mixed moduli {num.p} and {den.p}")
        if den.is_zero:
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero:
            num, den = Poly.zero(num.p), Poly.one(num.p)
        else:
            g = Poly.gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead_inv = pow(den.leading, den.p - 2, den.p)
            num, den = num * lead_inv, den * lead_inv
        self.num = num
        self.den = den

    @classmethod
    def t(cls, p: int) -> "RatFunc":
        return cls(Poly.t(p))

    @classmethod
    def from_int(cls, p: int, v: int) -> "RatFunc":
        return cls(Poly(p, (v,)))

    @classmethod
    def zero(cls, p: int) -> "RatFunc":
        return cls(Poly.zero(p))

    @classmethod
    def one(cls, p: int) -> "RatFunc":
        return cls(Poly.one(p))

    @property
    def p(self) -> int:
        return self.num.p

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.p != self.p:
                raise FieldMismatch(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return RatFunc.from_int(self.p, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroInverse("0 has no multiplicative inverse")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        base, acc = self, RatFunc.one(self.p)
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (RatFunc, int)) else None
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs, self.p))

    def __repr__(self):
        return ratfunc_text(self)


def ratfunc_normalize(num: Poly, den: Poly) -> RatFunc:
    """Canonical form of num/den (monic denominator, coprime parts)."""
    return RatFunc(num, den)


def field_ops(x, y=None, op: str = "add"):
    """Uniform dispatcher over the binary and unary field operations.

    op is one of add, sub, mul, inv, neg; inv and neg ignore y.
    """
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inv()
    if op == "neg":
        return -x
    raise ValueError(f"unknown op {op!r}")


class LaurentVector:
    """Exact coefficients of a Laurent polynomial sum(c_e * t**e) over a
    window lo..hi of exponents.  Zero is the window (0, 0) with coeffs (0,).
    """

    __slots__ = ("p", "lo", "coeffs")

    def __init__(self, p: int, lo: int, coeffs):
        cs = [c % p for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            lo, cs = 0, [0]
        else:
            lo, cs = lo + start, cs[start:end]
        self.p = p
        self.lo = lo
        self.coeffs = tuple(cs)

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def window(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def reconstruct(self) -> RatFunc:
        """Inverse of laurent_coeffs; exact round trip."""
        if self.is_zero:
            return RatFunc.zero(self.p)
        num = Poly(self.p, self.coeffs)
        if self.lo >= 0:
            return RatFunc(num.shift(self.lo))
        return RatFunc(num, Poly.one(self.p).shift(-self.lo))

    def __eq__(self, other):
        if not isinstance(other, LaurentVector):
            return NotImplemented
        return (self.p, self.lo, self.coeffs) == (other.p, other.lo, other.coeffs)

    def __hash__(self):
        return hash((self.p, self.lo, self.coeffs))

    def __repr__(self):
        return f"Laurent_{self.p}{self.window}{self.coeffs}"


def laurent_coeffs(r: RatFunc) -> LaurentVector:
    """Exponent-indexed coefficients of a Laurent polynomial, minimal window.

    The denominator must be a power of t; anything else raises NotLaurent.
    """
    den = r.den
    k = den.degree
    if den.coeffs != (0,) * k + (1,):
        raise NotLaurent(f"denominator {poly_text(den)} is not a power of t")
    if r.is_zero:
        return LaurentVector(r.p, 0, (0,))
    return LaurentVector(r.p, -k, r.num.coeffs)


class ExtField:
    """Descriptor for F_{p**n}, n >= 2, as F_p[g]/(modulus).

    The modulus is the lexicographically least monic irreducible of degree
    n over F_p, comparing non-leading coefficient tuples from the highest
    degree down, so the field is reproducible across runs.
    """

    __slots__ = ("p", "n", "modulus", "_inv_cache")

    def __init__(self, p: int, n: int):
        require_odd_prime(p)
        if n < 2:
            raise ValueError("ExtField needs n >= 2; use PrimeField for n = 1")
        if p**n > ENUMERATION_LIMIT:
            raise TooLarge(f"{p}**{n} exceeds the enumeration guard {ENUMERATION_LIMIT}")
        self.p = p
        self.n = n
        self.modulus = self._least_irreducible(p, n)
        self._inv_cache: dict = {}

    @staticmethod
    def _least_irreducible(p: int, n: int) -> tuple[int, ...]:
        for code in range(p**n):
            desc = [(code // p**k) % p for k in reversed(range(n))]
            coeffs = tuple(reversed(desc)) + (1,)
            if ExtField._is_irreducible(p, coeffs):
                return coeffs
        raise InternalError(f"no irreducible monic of degree {n} over F_{p}")  # pragma: no cover

    @staticmethod
    def _is_irreducible(p: int, coeffs: tuple[int, ...]) -> bool:
        poly = Poly(p, coeffs)
        n = poly.degree
        for d in range(1, n // 2 + 1):
            for code in range(p**d):
                dcs = [(code // p**k) % p for k in range(d)]
                divisor = Poly(p, tuple(dcs) + (1,))
                if (poly % divisor).is_zero:
                    return False
        return True

    @property
    def order(self) -> int:
        return self.p**self.n

    @property
    def char(self) -> int:
        return self.p

    def elem(self, v) -> "ExtFieldElem":
        if isinstance(v, ExtFieldElem):
            if v.field != self:
                raise FieldMismatch("element of a different extension field")
            return v
        if isinstance(v, PrimeFieldElem):
            if v.p != self.p:
                raise FieldMismatch(f"mixed characteristics {v.p} and {self.p}")
            v = v.value
        if isinstance(v, int):
            return ExtFieldElem(self, (v,) + (0,) * (self.n - 1))
        coeffs = tuple(int(c) % self.p for c in v)
        if len(coeffs) != self.n:
            raise ValueError(f"need {self.n} coordinates, got {len(coeffs)}")
        return ExtFieldElem(self, coeffs)

    def zero(self) -> "ExtFieldElem":
        return self.elem(0)

    def one(self) -> "ExtFieldElem":
        return self.elem(1)

    def gen(self) -> "ExtFieldElem":
        return ExtFieldElem(self, (0, 1) + (0,) * (self.n - 2))

    def elements(self):
        """All elements, coefficient tuples (c0, ..., c_{n-1}) in
        lexicographic order with c0 most significant."""
        for coeffs in itertools.product(range(self.p), repeat=self.n):
            yield ExtFieldElem(self, coeffs)

    def _mul_raw(self, a: tuple, b: tuple) -> tuple:
        p, n, mod = self.p, self.n, self.modulus
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for k in range(n):
                    prod[i - n + k] = (prod[i - n + k] - c * mod[k]) % p
        return tuple(prod[:n])

    def _inv_raw(self, a: tuple) -> tuple:
        if not any(a):
            raise ZeroInverse("0 has no multiplicative inverse")
        cached = self._inv_cache.get(a)
        if cached is not None:
            return cached
        p = self.p
        r0, r1 = Poly(p, self.modulus), Poly(p, a)
        t0, t1 = Poly.zero(p), Poly.one(p)
        while not r1.is_zero:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, t0 - q * t1
        inv = t0 * pow(r0.leading, p - 2, p)
        out = (inv % Poly(p, self.modulus)).coeffs
        out = out + (0,) * (self.n - len(out))
        self._inv_cache[a] = out
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other.n == self.n
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtField", self.p, self.n, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.n}; g: {poly_text(Poly(self.p, self.modulus))} = 0)"


class ExtFieldElem:
    """Element of an ExtField, stored as coordinates in the power basis of
    the adjoined generator g."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = tuple(c % field.p for c in coeffs)

    def _coerce(self, other):
        if isinstance(other, ExtFieldElem):
            if other.field != self.field:
                raise FieldMismatch("elements of different extension fields")
            return other.coeffs
        if isinstance(other, int):
            return (other % self.field.p,) + (0,) * (self.field.n - 1)
        if isinstance(other, PrimeFieldElem):
            if other.p != self.field.p:
                raise FieldMismatch(f"mixed characteristics {other.p} and {self.field.p}")
            return (other.value,) + (0,) * (self.field.n - 1)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        p = self.field.p
        return ExtFieldElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, v)))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        p = self.field.p
        return ExtFieldElem(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, v)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ExtFieldElem(self.field, self.field._mul_raw(self.coeffs, v))

    __rmul__ = __mul__

    def __neg__(self):
        return ExtFieldElem(self.field, tuple(-c for c in self.coeffs))

    def inv(self) -> "ExtFieldElem":
        return ExtFieldElem(self.field, self.field._inv_raw(self.coeffs))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * ExtFieldElem(self.field, v).inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        acc = self.field.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def in_prime_subfield(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, ExtFieldElem):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, PrimeFieldElem)):
            v = self._coerce(other)
            return self.coeffs == v
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.n))

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c:
                g = "" if e == 0 else ("g" if e == 1 else f"g^{e}")
                parts.append(str(c) if e == 0 else (g if c == 1 else f"{c}*{g}"))
        return " + ".join(parts)


def ext_field_build(p: int, n: int):
    """Deterministic field descriptor for F_{p**n}; the prime field itself
    when n = 1."""
    require_odd_prime(p)
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"degree must be a positive integer, got {n!r}")
    if p**n > ENUMERATION_LIMIT:
        raise TooLarge(f"{p}**{n} exceeds the enumeration guard {ENUMERATION_LIMIT}")
    if n == 1:
        return PrimeField(p)
    return ExtField(p, n)


class FunctionField:
    """Descriptor for the rational function field F_p(t)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        require_odd_prime(p)
        self.p = p

    @property
    def order(self):
        return None

    @property
    def char(self) -> int:
        return self.p

    def t(self) -> RatFunc:
        return RatFunc.t(self.p)

    def elem(self, v) -> RatFunc:
        if isinstance(v, RatFunc):
            if v.p != self.p:
                raise FieldMismatch(f"mixed moduli {self.p} and {v.p}")
            return v
        if isinstance(v, PrimeFieldElem):
            if v.p != self.p:
                raise FieldMismatch(f"mixed moduli {self.p} and {v.p}")
            return RatFunc.from_int(self.p, v.value)
        if isinstance(v, int):
            return RatFunc.from_int(self.p, v)
        raise TypeError(f"cannot embed {v!r} into {self!r}")

    def zero(self) -> RatFunc:
        return RatFunc.zero(self.p)

    def one(self) -> RatFunc:
        return RatFunc.one(self.p)

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.p == self.p

    def __hash__(self):
        return hash(("FunctionField", self.p))

    def __repr__(self):
        return f"GF({self.p})(t)"


# Text grammar: terms "c", "t", "t^e", "c*t^e" (e any integer) joined by
# "+"; whitespace insignificant.  A single top-level "/" separates an
# optional denominator, each side optionally parenthesized.
_TERM_RE = re.compile(r"^(?:(\d+)\*?)?t(?:\^(-?\d+))?$|^(\d+)$")


def _strip_outer_parens(s: str) -> str:
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(s) - 1:
                    return s
        s = s[1:-1]
    return s


def _parse_term_sum(text: str, p: int) -> RatFunc:
    text = _strip_outer_parens(text)
    if not text:
        raise ValueError("empty term")
    total = RatFunc.zero(p)
    t = RatFunc.t(p)
    for term in text.split("+"):
        m = _TERM_RE.match(term)
        if m is None:
            raise ValueError(f"cannot parse term {term!r}")
        if m.group(3) is not None:
            total = total + int(m.group(3))
            continue
        c = int(m.group(1)) if m.group(1) else 1
        e = int(m.group(2)) if m.group(2) else 1
        total = total + c * t**e
    return total


def parse_ratfunc(text: str, p: int) -> RatFunc:
    """Parse the exact text grammar into canonical form."""
    require_odd_prime(p)
    s = "".join(text.split())
    depth = 0
    slash = None
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if slash is not None:
                raise ValueError("more than one top-level '/'")
            slash = i
    if slash is None:
        return _parse_term_sum(s, p)
    num = _parse_term_sum(s[:slash], p)
    den = _parse_term_sum(s[slash + 1 :], p)
    if den.is_zero:
        raise DivisionByZero("zero denominator in rational-function text")
    return num / den


def ratfunc_text(r: RatFunc) -> str:
    """Canonical serialization; round-trips through parse_ratfunc."""
    k = r.den.degree
    if r.den.coeffs == (0,) * k + (1,):
        v = laurent_coeffs(r)
        if v.is_zero:
            return "0"
        return " + ".join(
            _term_text(c, v.lo + i) for i, c in enumerate(v.coeffs) if c
        )
    num_s = poly_text(r.num)
    den_s = poly_text(r.den)
    if len(r.num.coeffs) - r.num.coeffs.count(0) > 1:
        num_s = f"({num_s})"
    if len(r.den.coeffs) - r.den.coeffs.count(0) > 1:
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"


def parse_laurent(text: str, p: int) -> LaurentVector:
    """Parse a Laurent polynomial in the text grammar."""
    return laurent_coeffs(parse_ratfunc(text, p))
