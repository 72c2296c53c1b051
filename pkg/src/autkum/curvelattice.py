"""The 24-curve Kummer intersection configuration and its divisor calculus.

A CurveConfig is a purely combinatorial object: labelled smooth rational
curves, an integer Gram matrix of pairwise intersections, named points with
the curves through them, and a tracked canonical divisor.  Blow-ups return
new configurations; nothing is mutated in place.

Incidence convention for the standard configuration: the exceptional curve
Cij meets Fi and Ej, and nothing else.  This is the unique convention under
which the published octagon divisor is an 8-cycle and the star divisor an
E6-type star, and it is cross-validated by the section checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import networkx as nx
import numpy as np

from .errors import (
    ConfigMismatch,
    InvalidDivisor,
    LatticeParityError,
    NoSuchPoint,
    NotUnique,
    UnsupportedSurface,
)


class Divisor:
    """Formal integer combination of curve labels.

    Keys should be real labels; aliases such as "C" are resolved by the
    configuration at lookup time, not stored here.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        d = {}
        for label, c in items:
            c = int(c)
            if c:
                d[label] = d.get(label, 0) + c
                if not d[label]:
                    del d[label]
        self._coeffs = d

    def coeff(self, label: str) -> int:
        return self._coeffs.get(label, 0)

    def items(self):
        return self._coeffs.items()

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(sorted(self._coeffs))

    def __add__(self, other: "Divisor") -> "Divisor":
        out = dict(self._coeffs)
        for label, c in other._coeffs.items():
            out[label] = out.get(label, 0) + c
        return Divisor(out)

    def __neg__(self) -> "Divisor":
        return Divisor({label: -c for label, c in self._coeffs.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor({label: k * c for label, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return format_divisor(self)


def format_divisor(d: Divisor) -> str:
    if not d:
        return "0"
    parts = []
    for label in d.support:
        c = d.coeff(label)
        parts.append(label if c == 1 else f"{c}*{label}")
    return " + ".join(parts)


@dataclass(frozen=True)
class PointRec:
    """Named point: the set of curves through it and, for points on the
    distinguished curve, an exact affine coordinate ('inf' for infinity)."""

    through: frozenset[str]
    x_on_curve: str | None = None


@dataclass(frozen=True)
class NamedPoint:
    point: str


@dataclass(frozen=True)
class GenericOnCurve:
    label: str


@dataclass(frozen=True)
class GenericOnSurface:
    pass


@dataclass(frozen=True)
class KodairaType:
    """Singular-fiber type; family is one of I, I*, IV*, III*, II*, or
    NotAFiber, with index carrying n for I_n and m for I*_m."""

    family: str
    index: int | None = None

    def __str__(self):
        if self.family == "I":
            return f"I_{self.index}"
        if self.family == "I*":
            return f"I*_{self.index}"
        return self.family


NOT_A_FIBER = KodairaType("NotAFiber")


@dataclass(frozen=True, eq=False)
class CurveConfig:
    labels: tuple[str, ...]
    gram: np.ndarray
    points: dict[str, PointRec]
    canonical: Divisor
    fixed_locus: frozenset[str]
    label_aliases: dict[str, str]
    point_aliases: dict[str, str]
    history: tuple[tuple[str, frozenset[str]], ...] = ()

    def resolve_label(self, label: str) -> str:
        label = self.label_aliases.get(label, label)
        if label not in self._index():
            raise ConfigMismatch(f"unknown curve label {label!r}")
        return label

    def resolve_point(self, point: str) -> str:
        point = self.point_aliases.get(point, point)
        if point not in self.points:
            raise NoSuchPoint(f"unknown point {point!r}")
        return point

    def _index(self) -> dict[str, int]:
        idx = getattr(self, "_idx_cache", None)
        if idx is None:
            idx = {label: i for i, label in enumerate(self.labels)}
            object.__setattr__(self, "_idx_cache", idx)
        return idx

    def index(self, label: str) -> int:
        return self._index()[self.resolve_label(label)]

    def pairing(self, a: str, b: str) -> int:
        return int(self.gram[self.index(a), self.index(b)])

    def self_intersection(self, label: str) -> int:
        i = self.index(label)
        return int(self.gram[i, i])

    def vector(self, d: Divisor) -> np.ndarray:
        v = np.zeros(len(self.labels), dtype=np.int64)
        for label, c in d.items():
            v[self.index(label)] += c
        return v

    def size(self) -> int:
        return len(self.labels)


KUMMER_E = tuple(f"E{j}" for j in range(1, 5))
KUMMER_F = tuple(f"F{i}" for i in range(1, 5))
KUMMER_C = tuple(f"C{i}{j}" for i in range(1, 5) for j in range(1, 5))
KUMMER_LABELS = KUMMER_E + KUMMER_F + KUMMER_C


def kummer_config() -> CurveConfig:
    """The standard 24-curve configuration.

    The distinguished curve C is E1; the four marked points on it carry the
    coordinates inf, 0, 1, t, and P is the one at infinity.  The fixed
    locus consists of the eight curves E1..E4, F1..F4.
    """
    n = len(KUMMER_LABELS)
    idx = {label: i for i, label in enumerate(KUMMER_LABELS)}
    gram = np.full((n, n), 0, dtype=np.int64)
    np.fill_diagonal(gram, -2)
    for i in range(1, 5):
        for j in range(1, 5):
            c = idx[f"C{i}{j}"]
            for other in (idx[f"F{i}"], idx[f"E{j}"]):
                gram[c, other] = 1
                gram[other, c] = 1
    points: dict[str, PointRec] = {}
    coords = {1: "inf", 2: "0", 3: "1", 4: "t"}
    for i in range(1, 5):
        for j in range(1, 5):
            cij = f"C{i}{j}"
            x = coords[i] if j == 1 else None
            points[f"E{j}*{cij}"] = PointRec(frozenset({f"E{j}", cij}), x)
            points[f"F{i}*{cij}"] = PointRec(frozenset({f"F{i}", cij}))
    return CurveConfig(
        labels=KUMMER_LABELS,
        gram=gram,
        points=points,
        canonical=Divisor(),
        fixed_locus=frozenset(KUMMER_E + KUMMER_F),
        label_aliases={"C": "E1"},
        point_aliases={"P": "E1*C11"},
    )


def i8_fiber_divisor() -> Divisor:
    """The octagon of eight distinct curves forming the I_8 fiber."""
    return Divisor(
        {"E1": 1, "C11": 1, "F1": 1, "C12": 1, "E2": 1, "C22": 1, "F2": 1, "C21": 1}
    )


def iv_star_fiber_divisor() -> Divisor:
    """The E6-star fiber: central F1 with multiplicity 3, three arms."""
    return Divisor({"E1": 1, "C11": 2, "E2": 1, "C12": 2, "E3": 1, "C13": 2, "F1": 3})


def intersect(cfg: CurveConfig, d1: Divisor, d2: Divisor) -> int:
    """Bilinear intersection pairing through the Gram matrix."""
    v1 = cfg.vector(d1)
    v2 = cfg.vector(d2) if d2 is not d1 else v1
    return int(v1 @ cfg.gram @ v2)


def gram_rank(cfg: CurveConfig) -> int:
    """Exact rank of the Gram matrix over the rationals."""
    rows = [[Fraction(int(x)) for x in row] for row in cfg.gram]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [x / pivot for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rr_chi(cfg: CurveConfig, d: Divisor) -> int:
    """Euler characteristic 2 + D.D/2 on the unblown surface (trivial
    canonical class); refuses blown-up configurations.

    The unblown lattice is even, so an odd self-intersection can only mean
    a corrupted Gram matrix."""
    if cfg.canonical or cfg.history:
        raise UnsupportedSurface("Riemann-Roch shortcut needs a trivial canonical class")
    s = intersect(cfg, d, d)
    if s % 2 != 0:
        raise LatticeParityError(f"odd self-intersection {s} for {d!r}")
    return 2 + s // 2


def _ref_cycle(n: int) -> nx.Graph:
    g = nx.cycle_graph(n)
    nx.set_node_attributes(g, 1, "m")
    return g


def _ref_i_star(m: int) -> nx.Graph:
    g = nx.Graph()
    chain = [f"c{k}" for k in range(m + 1)]
    for node in chain:
        g.add_node(node, m=2)
    for a, b in zip(chain, chain[1:]):
        g.add_edge(a, b)
    for k, tip in enumerate(("f1", "f2", "f3", "f4")):
        g.add_node(tip, m=1)
        g.add_edge(tip, chain[0] if k < 2 else chain[-1])
    return g


def _ref_iv_star() -> nx.Graph:
    g = nx.Graph()
    g.add_node("c", m=3)
    for k in range(3):
        g.add_node(f"a{k}", m=2)
        g.add_node(f"t{k}", m=1)
        g.add_edge("c", f"a{k}")
        g.add_edge(f"a{k}", f"t{k}")
    return g


def _ref_iii_star() -> nx.Graph:
    g = nx.Graph()
    mults = [1, 2, 3, 4, 3, 2, 1]
    for k, m in enumerate(mults):
        g.add_node(f"n{k}", m=m)
    for k in range(len(mults) - 1):
        g.add_edge(f"n{k}", f"n{k + 1}")
    g.add_node("b", m=2)
    g.add_edge("b", "n3")
    return g


def _ref_ii_star() -> nx.Graph:
    g = nx.Graph()
    mults = [1, 2, 3, 4, 5, 6, 4, 2]
    for k, m in enumerate(mults):
        g.add_node(f"n{k}", m=m)
    for k in range(len(mults) - 1):
        g.add_edge(f"n{k}", f"n{k + 1}")
    g.add_node("b", m=3)
    g.add_edge("b", "n5")
    return g


def _gcd_all(values) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g


def classify_fiber(cfg: CurveConfig, d: Divisor) -> KodairaType:
    """Recognize the Kodaira type of an effective divisor on -2 curves.

    Returns NotAFiber unless the divisor pairs to zero with each of its
    components, has connected support, primitive multiplicities, and its
    weighted dual graph matches a cycle (I_n, n >= 3) or one of the
    extended Dynkin trees (I*_m, IV*, III*, II*).  Reduced small fibers
    need tangencies or double points that transverse -2 configurations
    cannot express, so they are never recognized.
    """
    for label, c in d.items():
        if c < 0:
            raise InvalidDivisor(f"negative coefficient {c} on {label}")
    support = [cfg.resolve_label(label) for label in d.support]
    if not support:
        return NOT_A_FIBER
    if any(cfg.self_intersection(label) != -2 for label in support):
        return NOT_A_FIBER
    for label in support:
        if intersect(cfg, d, Divisor({label: 1})) != 0:
            return NOT_A_FIBER
    mults = {label: d.coeff(label) for label in support}
    if _gcd_all(mults.values()) != 1:
        return NOT_A_FIBER
    graph = nx.Graph()
    for label in support:
        graph.add_node(label, m=mults[label])
    for i, a in enumerate(support):
        for b in support[i + 1 :]:
            k = cfg.pairing(a, b)
            if k > 1:
                return NOT_A_FIBER
            if k == 1:
                graph.add_edge(a, b)
    if not nx.is_connected(graph):
        return NOT_A_FIBER
    s = len(support)
    candidates: list[tuple[KodairaType, nx.Graph]] = []
    if s >= 3:
        candidates.append((KodairaType("I", s), _ref_cycle(s)))
    if s >= 5:
        candidates.append((KodairaType("I*", s - 5), _ref_i_star(s - 5)))
    if s == 7:
        candidates.append((KodairaType("IV*"), _ref_iv_star()))
    if s == 8:
        candidates.append((KodairaType("III*"), _ref_iii_star()))
    if s == 9:
        candidates.append((KodairaType("II*"), _ref_ii_star()))
    match = nx.algorithms.isomorphism.categorical_node_match("m", None)
    for ktype, ref in candidates:
        if nx.is_isomorphic(graph, ref, node_match=match):
            return ktype
    return NOT_A_FIBER


def check_section(cfg: CurveConfig, fiber: Divisor, section: str) -> bool:
    """A section meets the fiber once, is a -2 curve, and is not a fiber
    component."""
    ktype = classify_fiber(cfg, fiber)
    if ktype == NOT_A_FIBER:
        raise InvalidDivisor("section check against a divisor that is not a fiber")
    label = cfg.resolve_label(section)
    if label in {cfg.resolve_label(x) for x in fiber.support}:
        return False
    return (
        cfg.self_intersection(label) == -2
        and intersect(cfg, fiber, Divisor({label: 1})) == 1
    )


def blow_up(cfg: CurveConfig, at, name: str | None = None) -> CurveConfig:
    """Blow up one point; returns a new configuration.

    The exceptional curve gets self-intersection -1; every curve through
    the centre drops its self-intersection by one, meets the exceptional
    curve once, and separates from the other curves through the centre.
    The canonical divisor transforms as pullback plus the exceptional
    class.  Named points away from the centre survive on the proper
    transforms; each new intersection with the exceptional curve is named.
    """
    if isinstance(at, NamedPoint):
        pid = cfg.resolve_point(at.point)
        through = sorted(cfg.points[pid].through)
        removed = pid
    elif isinstance(at, GenericOnCurve):
        through = [cfg.resolve_label(at.label)]
        removed = None
    elif isinstance(at, GenericOnSurface):
        through = []
        removed = None
    else:
        raise TypeError(f"unsupported blow-up centre: {at!r}")

    exc = name or f"e{len(cfg.history) + 1}"
    if exc in cfg._index() or exc in cfg.label_aliases:
        raise ValueError(f"label {exc!r} already in use")

    n = cfg.size()
    gram = np.zeros((n + 1, n + 1), dtype=np.int64)
    gram[:n, :n] = cfg.gram
    gram[n, n] = -1
    for label in through:
        i = cfg.index(label)
        gram[i, i] -= 1
        gram[i, n] = gram[n, i] = 1
    for a_pos, a in enumerate(through):
        for b in through[a_pos + 1 :]:
            i, j = cfg.index(a), cfg.index(b)
            gram[i, j] -= 1
            gram[j, i] -= 1
            if gram[i, j] < 0:
                raise ConfigMismatch(
                    f"curves {a} and {b} do not actually meet at the centre"
                )

    points = {pid: rec for pid, rec in cfg.points.items() if pid != removed}
    for label in through:
        points[f"{exc}*{label}"] = PointRec(frozenset({exc, label}))
    point_aliases = {
        alias: target for alias, target in cfg.point_aliases.items() if target != removed
    }

    centre_mult = sum(cfg.canonical.coeff(label) for label in through)
    canonical = cfg.canonical + Divisor({exc: centre_mult + 1})

    return CurveConfig(
        labels=cfg.labels + (exc,),
        gram=gram,
        points=points,
        canonical=canonical,
        fixed_locus=cfg.fixed_locus,
        label_aliases=dict(cfg.label_aliases),
        point_aliases=point_aliases,
        history=cfg.history + ((exc, frozenset(through)),),
    )


def canonical_class(cfg: CurveConfig) -> Divisor:
    return cfg.canonical


def total_transform(cfg: CurveConfig, d: Divisor, step: int = -1) -> Divisor:
    """Pullback of a divisor from before the given blow-up step: the proper
    transforms keep their labels and the exceptional curve is added with
    the multiplicity of the centre."""
    if not cfg.history:
        raise UnsupportedSurface("no blow-up recorded")
    exc, through = cfg.history[step]
    mult = sum(d.coeff(label) for label in through)
    return d + Divisor({exc: mult})


def unique_fixed_component_through(cfg: CurveConfig, point) -> str:
    """The single fixed-locus curve through a named point."""
    pid = cfg.resolve_point(point.point if isinstance(point, NamedPoint) else point)
    comps = sorted(cfg.points[pid].through & cfg.fixed_locus)
    if len(comps) != 1:
        raise NotUnique(
            f"{len(comps)} fixed-locus components through {pid}: {comps}"
        )
    return comps[0]


def theta_class_action(cfg: CurveConfig) -> dict[str, str]:
    """Class action of the fixed-locus involution: the identity permutation
    on all 24 curves, exposed so the verifier can assert triviality."""
    if set(cfg.labels) != set(KUMMER_LABELS) or cfg.history:
        raise ConfigMismatch("class action is tabulated for the standard configuration")
    return {label: label for label in cfg.labels}


def minus_two_config(labels, edges) -> CurveConfig:
    """Ad-hoc configuration of -2 curves with transverse intersections;
    handy for building synthetic fibers."""
    labels = tuple(labels)
    idx = {label: i for i, label in enumerate(labels)}
    gram = np.zeros((len(labels), len(labels)), dtype=np.int64)
    np.fill_diagonal(gram, -2)
    points = {}
    for a, b in edges:
        gram[idx[a], idx[b]] += 1
        gram[idx[b], idx[a]] += 1
        points[f"{a}*{b}"] = PointRec(frozenset({a, b}))
    return CurveConfig(
        labels=labels,
        gram=gram,
        points=points,
        canonical=Divisor(),
        fixed_locus=frozenset(),
        label_aliases={},
        point_aliases={},
    )


def parse_divisor(text: str, cfg: CurveConfig) -> Divisor:
    """Parse 'C + 2*C11 + 3*F1' style text; aliases are resolved."""
    s = "".join(text.split())
    if not s or s == "0":
        return Divisor()
    out = []
    for term in s.split("+"):
        if "*" in term:
            k, label = term.split("*", 1)
            out.append((cfg.resolve_label(label), int(k)))
        else:
            out.append((cfg.resolve_label(term), 1))
    return Divisor(out)


def gram_csv(cfg: CurveConfig) -> str:
    """Gram matrix as CSV with a label header row and column."""
    lines = ["," + ",".join(cfg.labels)]
    for i, label in enumerate(cfg.labels):
        lines.append(label + "," + ",".join(str(int(x)) for x in cfg.gram[i]))
    return "\n".join(lines) + "\n"
