"""Legendre-form elliptic curves y^2 = x(x-1)(x-lam) over any supported
field: chord-tangent group law, 2-torsion, the coefficient criterion for
supersingularity, brute-force point counting, and the certificate that the
generic-parameter curve and a supersingular one cannot be isogenous.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import InternalError, NotFinite, NotOnCurve, TooLarge
from .exactfield import (
    ENUMERATION_LIMIT,
    FunctionField,
    Poly,
    PrimeField,
    PrimeFieldElem,
    RatFunc,
    ext_field_build,
    parse_ratfunc,
    ratfunc_text,
    require_odd_prime,
)


class LegendreCurve:
    """y^2 = x(x-1)(x-lam) with lam outside {0, 1}."""

    __slots__ = ("field", "lam")

    def __init__(self, field, lam):
        lam = field.elem(lam)
        if lam == 0 or lam == 1:
            raise ValueError("Legendre parameter must avoid 0 and 1")
        self.field = field
        self.lam = lam

    def rhs(self, x):
        return x * (x - 1) * (x - self.lam)

    def contains(self, point: "CurvePoint") -> bool:
        if point.is_infinity:
            return True
        return point.y * point.y == self.rhs(point.x)

    def __eq__(self, other):
        return (
            isinstance(other, LegendreCurve)
            and other.field == self.field
            and other.lam == self.lam
        )

    def __hash__(self):
        return hash((self.field, self.lam))

    def __repr__(self):
        return f"LegendreCurve({self.field!r}, lam={self.lam!r})"


class CurvePoint:
    """Affine point (x, y) or the point at infinity O."""

    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls):
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_infinity:
            return hash("O")
        return hash((self.x, self.y))

    def __repr__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x!r}, {self.y!r})"


def _add_unchecked(curve: LegendreCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    # Long Weierstrass shape y^2 = x^3 + a2 x^2 + a4 x with a2 = -(1+lam),
    # a4 = lam; doubling a 2-torsion point short-circuits to O so no
    # division by zero can occur.
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    lam = curve.lam
    if x1 == x2:
        if y1 != y2:
            return CurvePoint.infinity()
        if y1 == 0:
            return CurvePoint.infinity()
        num = 3 * (x1 * x1) - 2 * (x1 + x1 * lam) + lam
        m = num * (2 * y1).inv()
    else:
        m = (y2 - y1) * (x2 - x1).inv()
    x3 = m * m + 1 + lam - x1 - x2
    y3 = m * (x1 - x3) - y1
    return CurvePoint(x3, y3)


def point_add(curve: LegendreCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-tangent group law; O is the identity."""
    for pt in (P, Q):
        if not curve.contains(pt):
            raise NotOnCurve(f"{pt!r} does not satisfy the curve equation")
    return _add_unchecked(curve, P, Q)


def point_neg(point: CurvePoint) -> CurvePoint:
    if point.is_infinity:
        return point
    return CurvePoint(point.x, -point.y)


def point_mul(curve: LegendreCurve, k: int, P: CurvePoint) -> CurvePoint:
    if not curve.contains(P):
        raise NotOnCurve(f"{P!r} does not satisfy the curve equation")
    if k < 0:
        return point_mul(curve, -k, point_neg(P))
    acc = CurvePoint.infinity()
    base = P
    while k:
        if k & 1:
            acc = _add_unchecked(curve, acc, base)
        base = _add_unchecked(curve, base, base)
        k >>= 1
    return acc


def two_torsion(curve: LegendreCurve) -> frozenset:
    """The full 2-torsion {O, (0,0), (1,0), (lam,0)}."""
    field = curve.field
    zero = field.zero()
    return frozenset(
        {
            CurvePoint.infinity(),
            CurvePoint(zero, zero),
            CurvePoint(field.one(), zero),
            CurvePoint(curve.lam, zero),
        }
    )


def enumerate_points(curve: LegendreCurve) -> list[CurvePoint]:
    field = curve.field
    if field.order is None:
        raise NotFinite("point enumeration needs a finite base field")
    if field.order > ENUMERATION_LIMIT:
        raise TooLarge(f"field of size {field.order} exceeds the enumeration guard")
    roots: dict = {}
    for y in field.elements():
        roots.setdefault(y * y, y)
    points = [CurvePoint.infinity()]
    zero = field.zero()
    for x in field.elements():
        f = curve.rhs(x)
        if f == 0:
            points.append(CurvePoint(x, zero))
        elif f in roots:
            y = roots[f]
            points.append(CurvePoint(x, y))
            points.append(CurvePoint(x, -y))
    return points


def point_count(curve: LegendreCurve) -> int:
    """|affine solutions| + 1 over a finite base field."""
    return len(enumerate_points(curve))


def _bi_mul(a: list[Poly], b: list[Poly], p: int) -> list[Poly]:
    out = [Poly.zero(p) for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        if not ca.is_zero:
            for j, cb in enumerate(b):
                if not cb.is_zero:
                    out[i + j] = out[i + j] + ca * cb
    return out


@functools.lru_cache(maxsize=None)
def hasse_poly(p: int) -> Poly:
    """Coefficient of x^(p-1) in (x(x-1)(x-lam))^((p-1)/2), expanded as a
    polynomial in lam over F_p; its roots are the supersingular Legendre
    parameters and it has degree (p-1)/2."""
    require_odd_prime(p)
    m = (p - 1) // 2
    # x-coefficients of x^3 - (1+lam) x^2 + lam x, each a Poly in lam
    f = [Poly.zero(p), Poly(p, (0, 1)), Poly(p, (-1, -1)), Poly.one(p)]
    acc = [Poly.one(p)]
    for _ in range(m):
        acc = _bi_mul(acc, f, p)
    return acc[p - 1] if len(acc) > p - 1 else Poly.zero(p)


def is_ordinary_generic(p: int) -> tuple[bool, RatFunc]:
    """Certify that the curve with transcendental parameter t is ordinary.

    The witness is the coefficient polynomial evaluated at lam = t, a
    nonzero element of F_p(t) because a nonzero polynomial cannot vanish at
    a transcendental.
    """
    h = hasse_poly(p)
    witness = RatFunc(Poly(p, h.coeffs))
    return (not witness.is_zero, witness)


def find_supersingular_lambda(p: int):
    """Deterministic supersingular Legendre parameter: roots are searched
    in F_p in residue order first, then in F_{p**2} in lexicographic
    coordinate order; a root always exists in F_{p**2}."""
    h = hasse_poly(p)
    for a in range(2, p):
        if h.eval_int(a) == 0:
            return PrimeFieldElem(a, p)
    quad = ext_field_build(p, 2)
    for e in quad.elements():
        if e == 0 or e == 1:
            continue
        if h.eval_at(e).is_zero:
            return e
    raise InternalError(f"no supersingular parameter found for p={p}")  # pragma: no cover


@dataclass(frozen=True)
class NonIsogenyCert:
    """Evidence that the transcendental-parameter curve is ordinary while
    the curve with parameter lambda0 is supersingular; curves of different
    types admit no isogeny."""

    p: int
    ordinary_witness: RatFunc
    lambda0: object
    count_field_order: int
    supersingular_count: int

    @property
    def trace(self) -> int:
        return self.count_field_order + 1 - self.supersingular_count

    @property
    def valid(self) -> bool:
        if self.ordinary_witness.is_zero:
            return False
        if self.trace % self.p != 0:
            return False
        if self.count_field_order == self.p and self.supersingular_count != self.p + 1:
            return False
        return True


def non_isogeny_certificate(p: int) -> NonIsogenyCert:
    """Bundle the ordinariness witness with a supersingular point count.

    Supersingularity over F_q is witnessed by p dividing the Frobenius
    trace q + 1 - N; when lambda0 lies in the prime field the Hasse bound
    forces N = p + 1 exactly.
    """
    ordinary, witness = is_ordinary_generic(p)
    if not ordinary:
        raise InternalError("generic-parameter witness vanished")  # pragma: no cover
    lam0 = find_supersingular_lambda(p)
    if isinstance(lam0, PrimeFieldElem):
        field = PrimeField(p)
    else:
        field = lam0.field
    count = point_count(LegendreCurve(field, lam0))
    return NonIsogenyCert(
        p=p,
        ordinary_witness=witness,
        lambda0=lam0,
        count_field_order=field.order,
        supersingular_count=count,
    )


def hasse_bound_holds(q: int, count: int) -> bool:
    return (q + 1 - count) ** 2 <= 4 * q


def format_curve(curve: LegendreCurve) -> str:
    if isinstance(curve.field, FunctionField):
        lam_s = ratfunc_text(curve.lam)
    elif isinstance(curve.lam, PrimeFieldElem):
        lam_s = str(curve.lam.value)
    else:
        lam_s = repr(curve.lam)
    return f"legendre p={curve.field.char} lambda={lam_s}"


def parse_curve(text: str) -> LegendreCurve:
    """Parse 'legendre p=<p> lambda=<ratfunc-or-residue>'."""
    parts = text.split()
    if not parts or parts[0] != "legendre":
        raise ValueError(f"cannot parse curve descriptor {text!r}")
    kv = dict(part.split("=", 1) for part in parts[1:])
    p = int(kv["p"])
    lam_text = kv["lambda"]
    lam = parse_ratfunc(lam_text, p)
    if lam.den == Poly.one(p) and lam.num.degree <= 0:
        residue = lam.num.coeffs[0] if lam.num.coeffs else 0
        return LegendreCurve(PrimeField(p), residue)
    return LegendreCurve(FunctionField(p), lam)


def format_point(point: CurvePoint) -> str:
    if point.is_infinity:
        return "O"
    return f"({point.x!r},{point.y!r})"


def parse_point(curve: LegendreCurve, text: str) -> CurvePoint:
    """Parse '(x,y)' in the field's text grammar, or 'O'."""
    s = "".join(text.split())
    if s == "O":
        return CurvePoint.infinity()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"cannot parse point {text!r}")
    xs, ys = s[1:-1].split(",")
    p = curve.field.char
    if isinstance(curve.field, FunctionField):
        x, y = parse_ratfunc(xs, p), parse_ratfunc(ys, p)
    else:
        x = curve.field.elem(_residue(xs, p))
        y = curve.field.elem(_residue(ys, p))
    pt = CurvePoint(x, y)
    if not curve.contains(pt):
        raise NotOnCurve(f"{text!r} does not satisfy the curve equation")
    return pt


def _residue(s: str, p: int) -> int:
    r = parse_ratfunc(s, p)
    if r.den != Poly.one(p) or r.num.degree > 0:
        raise ValueError(f"expected a residue, got {s!r}")
    return r.num.coeffs[0] if r.num.coeffs else 0
