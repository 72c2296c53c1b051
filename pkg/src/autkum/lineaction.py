"""Affine transformations x -> a*x + b of the line over F_p(t): the model
for how fibration translations act on the distinguished rational curve.

Every map fixes the point at infinity, which is the marked point of the
configuration; multipliers at fixed points are computed in the chart
u = 1/x so that the differential at infinity is literally testable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import curvelattice
from .curvelattice import CurveConfig, Divisor, KodairaType, classify_fiber, check_section
from .errors import (
    IdentityMap,
    UnknownAction,
    UnknownGenerator,
    UnverifiedFibration,
)
from .exactfield import RatFunc, parse_ratfunc, ratfunc_text, require_odd_prime


class _InfinityPoint:
    __slots__ = ()

    def __repr__(self):
        return "inf"


INFINITY = _InfinityPoint()


def _as_ratfunc(p: int, v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    return RatFunc.from_int(p, v)


@dataclass(frozen=True)
class AffineMap:
    """x -> a*x + b with a nonzero, over F_p(t)."""

    a: RatFunc
    b: RatFunc

    def __post_init__(self):
        if self.a.p != self.b.p:
            raise ValueError("coefficients over different fields")
        if self.a.is_zero:
            raise ValueError("scaling coefficient must be nonzero")

    @property
    def p(self) -> int:
        return self.a.p

    @classmethod
    def identity(cls, p: int) -> "AffineMap":
        return cls(RatFunc.one(p), RatFunc.zero(p))

    def __call__(self, x: RatFunc) -> RatFunc:
        return self.a * x + self.b

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: (a1, b1) o (a2, b2) = (a1*a2, a1*b2 + b1)."""
        return AffineMap(self.a * other.a, self.a * other.b + self.b)

    __mul__ = compose

    def inverse(self) -> "AffineMap":
        ai = self.a.inv()
        return AffineMap(ai, -(ai * self.b))

    def power(self, n: int) -> "AffineMap":
        if n < 0:
            return self.inverse().power(-n)
        acc = AffineMap.identity(self.p)
        base = self
        while n:
            if n & 1:
                acc = acc.compose(base)
            base = base.compose(base)
            n >>= 1
        return acc

    @property
    def is_identity(self) -> bool:
        return self.a == 1 and self.b.is_zero

    @property
    def is_translation(self) -> bool:
        return self.a == 1

    def __repr__(self):
        return affine_text(self)


def affine(p: int, a, b) -> AffineMap:
    return AffineMap(_as_ratfunc(p, a), _as_ratfunc(p, b))


def scale_by_t(p: int) -> AffineMap:
    """The action x -> t*x of the first fibration translation."""
    return AffineMap(RatFunc.t(p), RatFunc.zero(p))


def shift_by_one(p: int) -> AffineMap:
    """The action x -> x + 1 of the second fibration translation."""
    return AffineMap(RatFunc.one(p), RatFunc.one(p))


def affine_group_ops(f: AffineMap, g: AffineMap | None = None, op: str = "compose", n: int | None = None) -> AffineMap:
    if op == "compose":
        return f.compose(g)
    if op == "invert":
        return f.inverse()
    if op == "power":
        if n is None:
            raise ValueError("power needs an exponent")
        return f.power(n)
    raise ValueError(f"unknown op {op!r}")


def affine_text(f: AffineMap) -> str:
    return f"a={ratfunc_text(f.a)}; b={ratfunc_text(f.b)}"


def parse_affine(text: str, p: int) -> AffineMap:
    parts = dict(
        chunk.split("=", 1) for chunk in "".join(text.split()).split(";") if chunk
    )
    return AffineMap(parse_ratfunc(parts["a"], p), parse_ratfunc(parts["b"], p))


_TOKEN_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


class GroupWord:
    """Freely reduced word in abstract generators with integer exponents."""

    __slots__ = ("entries",)

    def __init__(self, entries=()):
        stack: list[tuple[str, int]] = []
        for gid, e in entries:
            e = int(e)
            if e == 0:
                continue
            if stack and stack[-1][0] == gid:
                merged = stack[-1][1] + e
                stack.pop()
                if merged:
                    stack.append((gid, merged))
            else:
                stack.append((gid, e))
        self.entries = tuple(stack)

    @classmethod
    def identity(cls) -> "GroupWord":
        return cls()

    @classmethod
    def generator(cls, gid: str, e: int = 1) -> "GroupWord":
        return cls(((gid, e),))

    @classmethod
    def from_text(cls, text: str) -> "GroupWord":
        entries = []
        for token in text.split():
            m = _TOKEN_RE.match(token)
            if m is None:
                raise ValueError(f"cannot parse word token {token!r}")
            entries.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        return cls(entries)

    def to_text(self) -> str:
        if not self.entries:
            return "1"
        return " ".join(
            gid if e == 1 else f"{gid}^{e}" for gid, e in self.entries
        )

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.entries + other.entries)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((gid, -e) for gid, e in reversed(self.entries)))

    @property
    def is_identity(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"GroupWord[{self.to_text()}]"


def evaluate_word(word: GroupWord, generators, p: int | None = None) -> AffineMap:
    """Left-to-right composition of the bound generator powers."""
    if p is None:
        try:
            p = next(iter(generators.values())).p
        except StopIteration:
            raise ValueError("cannot infer the field from an empty binding") from None
    acc = AffineMap.identity(p)
    for gid, e in word.entries:
        g = generators.get(gid)
        if g is None:
            raise UnknownGenerator(f"no binding for generator {gid!r}")
        acc = acc.compose(g.power(e))
    return acc


def conjugate_generator(n: int, p: int) -> AffineMap:
    """The translation x -> x + t**n obtained by conjugating the unit
    translation with the n-th power of the scaling map."""
    require_odd_prime(p)
    return AffineMap(RatFunc.one(p), RatFunc.t(p) ** n)


@dataclass(frozen=True)
class FixedPoint:
    point: object
    multiplier: RatFunc
    parabolic: bool = False


def fixed_points(f: AffineMap) -> frozenset[FixedPoint]:
    """Fixed points with their multipliers.

    Infinity is always fixed, with multiplier 1/a read off in the chart
    u = 1/x.  A non-translation also fixes b/(1-a) with multiplier a.  A
    nontrivial translation fixes only infinity and is flagged parabolic.
    """
    if f.is_identity:
        raise IdentityMap("fixed-point analysis of the identity")
    if f.a == 1:
        return frozenset({FixedPoint(INFINITY, f.a.inv(), parabolic=True)})
    finite = f.b / (1 - f.a)
    return frozenset(
        {
            FixedPoint(INFINITY, f.a.inv()),
            FixedPoint(finite, f.a),
        }
    )


@dataclass(frozen=True)
class FibrationCert:
    """Outcome of checking one fibration: the fiber's Kodaira type plus the
    two section checks, over a fixed characteristic."""

    p: int
    fiber: Divisor
    fiber_type: KodairaType
    zero_section: str
    mw_section: str
    zero_ok: bool
    mw_ok: bool

    @property
    def verified(self) -> bool:
        return (
            self.fiber_type != curvelattice.NOT_A_FIBER
            and self.zero_ok
            and self.mw_ok
        )


def certify_fibration(
    cfg: CurveConfig, fiber: Divisor, zero_section: str, mw_section: str, p: int
) -> FibrationCert:
    """Run the lattice checks that gate the action table."""
    require_odd_prime(p)
    ktype = classify_fiber(cfg, fiber)
    if ktype == curvelattice.NOT_A_FIBER:
        zero_ok = mw_ok = False
    else:
        zero_ok = check_section(cfg, fiber, zero_section)
        mw_ok = check_section(cfg, fiber, mw_section)
    return FibrationCert(
        p=p,
        fiber=fiber,
        fiber_type=ktype,
        zero_section=cfg.resolve_label(zero_section),
        mw_section=cfg.resolve_label(mw_section),
        zero_ok=zero_ok,
        mw_ok=mw_ok,
    )


def _mw_table():
    return {
        ("I_8", "C31", "C41"): (curvelattice.i8_fiber_divisor(), scale_by_t),
        ("IV*", "C21", "C31"): (curvelattice.iv_star_fiber_divisor(), shift_by_one),
    }


def mw_action(cert: FibrationCert, section: str) -> AffineMap:
    """Action on the distinguished curve of the translation attached to a
    section, looked up from verified fibration data only.

    The zero section acts trivially; the tabulated entries are the scaling
    by t for the octagon fibration and the unit translation for the star
    fibration.  Anything unverified or untabulated is refused.
    """
    if not isinstance(cert, FibrationCert) or not cert.verified:
        raise UnverifiedFibration("action lookup requires a verified fibration record")
    if section == cert.zero_section:
        return AffineMap.identity(cert.p)
    key = (str(cert.fiber_type), cert.zero_section, section)
    entry = _mw_table().get(key)
    if entry is None:
        raise UnknownAction(f"no tabulated action for {key!r}")
    expected_fiber, builder = entry
    if cert.fiber != expected_fiber or section != cert.mw_section:
        raise UnknownAction(f"certificate does not match the tabulated fibration for {key!r}")
    return builder(cert.p)


@dataclass(frozen=True)
class DifferentialPair:
    """Eigenvalues of a diagonalized differential at the marked point: the
    first along the distinguished curve, the second along the transverse
    branch."""

    alpha1: object
    alpha2: object

    def __post_init__(self):
        for v in (self.alpha1, self.alpha2):
            if v == 0:
                raise ValueError("differential eigenvalues must be nonzero")

    def determinant(self):
        """Product of the two eigenvalues; the scalar by which the ambient
        2-form is stretched."""
        return self.alpha1 * self.alpha2

    def fixes_curve_tangent(self) -> bool:
        return self.alpha1 == 1

    def fixes_all_tangents(self) -> bool:
        return self.alpha1 == 1 and self.alpha2 == 1

    def is_scalar(self) -> bool:
        """Whether the differential is a scalar matrix, the condition for
        descending through both blow-ups."""
        return self.alpha1 == self.alpha2


def pair_calculus(pair: DifferentialPair, query: str):
    if query == "determinant":
        return pair.determinant()
    if query == "fixes_curve_tangent":
        return pair.fixes_curve_tangent()
    if query == "fixes_all_tangents":
        return pair.fixes_all_tangents()
    if query == "is_scalar":
        return pair.is_scalar()
    raise ValueError(f"unknown query {query!r}")
