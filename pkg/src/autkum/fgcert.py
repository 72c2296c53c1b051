"""Finite-generation certificates.

Two independent mechanisms live here.  The first is linear algebra over
F_p: finitely generated subgroups of the additive group of a field of
characteristic p are exactly F_p-spans, so span dimensions, membership
tests and escape witnesses decide everything about translation subgroups.
The second is the Reidemeister-Schreier procedure for subgroups presented
as point stabilizers of permutation actions, with the Nielsen-Schreier
count as a cross-check oracle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import EmptyInput, FieldMismatch, InternalError, UnknownGenerator
from .exactfield import LaurentVector, require_odd_prime
from .lineaction import GroupWord


def _aligned_matrix(vectors: Sequence[LaurentVector], p: int):
    """Stack Laurent vectors over the union window; returns (matrix, lo, hi)."""
    for v in vectors:
        if v.p != p:
            raise FieldMismatch(f"vector over F_{v.p} in an F_{p} span computation")
    nonzero = [v for v in vectors if not v.is_zero]
    if not nonzero:
        return np.zeros((len(vectors), 1), dtype=np.int64), 0, 0
    lo = min(v.lo for v in nonzero)
    hi = max(v.hi for v in nonzero)
    mat = np.zeros((len(vectors), hi - lo + 1), dtype=np.int64)
    for r, v in enumerate(vectors):
        if not v.is_zero:
            mat[r, v.lo - lo : v.lo - lo + len(v.coeffs)] = v.coeffs
    return mat, lo, hi


def _rref_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Reduced row echelon form over F_p; returns the nonzero rows."""
    m = mat.copy() % p
    n_rows, n_cols = m.shape
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if m[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        r += 1
        if r == n_rows:
            break
    return m[:r]


@dataclass(frozen=True)
class SpanBasis:
    """Echelonized F_p-basis of the span of a finite Laurent set."""

    p: int
    lo: int
    hi: int
    rows: tuple[tuple[int, ...], ...]
    generators: tuple[LaurentVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.rows)


def span_basis(vectors: Sequence[LaurentVector], p: int) -> SpanBasis:
    require_odd_prime(p)
    vectors = tuple(vectors)
    mat, lo, hi = _aligned_matrix(vectors, p)
    rref = _rref_mod_p(mat, p)
    return SpanBasis(
        p=p,
        lo=lo,
        hi=hi,
        rows=tuple(tuple(int(x) for x in row) for row in rref),
        generators=vectors,
    )


def span_dimension(vectors: Sequence[LaurentVector], p: int) -> int:
    """Dimension of the F_p-span.  The additive subgroup generated by the
    set equals this span, because every element has additive order p."""
    return span_basis(vectors, p).dimension


def span_membership(v: LaurentVector, vectors: Sequence[LaurentVector], p: int) -> bool:
    """Whether v is an F_p-combination of the given vectors."""
    require_odd_prime(p)
    base = list(vectors)
    mat, _, _ = _aligned_matrix(base + [v], p)
    rank_with = len(_rref_mod_p(mat, p))
    rank_without = len(_rref_mod_p(mat[:-1], p)) if base else 0
    return rank_with == rank_without


def _power_vector(p: int, n: int) -> LaurentVector:
    return LaurentVector(p, n, (1,))


def escape_witness(vectors: Sequence[LaurentVector], p: int) -> int:
    """Least N >= 0 with t**N outside the span; always exists because the
    span is finite dimensional.  Termination bound: N <= hi + 1 where hi is
    the top of the span's window."""
    require_odd_prime(p)
    vectors = tuple(vectors)
    basis = span_basis(vectors, p)
    bound = max(basis.hi, -1) + 1
    for n in range(bound + 1):
        if not span_membership(_power_vector(p, n), vectors, p):
            return n
    raise InternalError("no escape exponent below the termination bound")  # pragma: no cover


@dataclass(frozen=True)
class NonFGCert:
    """Witness that the group generated by all powers of t cannot be
    finitely generated: the span of t**0..t**d grows by one at every
    depth, so no finite subset suffices."""

    p: int
    depth: int
    dims: tuple[int, ...]

    @property
    def valid(self) -> bool:
        return self.dims == tuple(range(1, self.depth + 2))


def non_fg_certificate(depth: int, p: int) -> NonFGCert:
    """Compute dim span{t**0..t**d} for each d <= depth by incremental
    exact elimination and assert the strict staircase d + 1."""
    require_odd_prime(p)
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    width = depth + 1
    basis: list[np.ndarray] = []
    pivots: list[int] = []
    dims = []
    for d in range(width):
        vec = np.zeros(width, dtype=np.int64)
        vec[d] = 1
        for piv, row in zip(pivots, basis):
            c = int(vec[piv])
            if c:
                vec = (vec - c * row) % p
        nz = np.nonzero(vec)[0]
        if len(nz):
            piv = int(nz[0])
            vec = (vec * pow(int(vec[piv]), -1, p)) % p
            pivots.append(piv)
            basis.append(vec)
        dims.append(len(basis))
    cert = NonFGCert(p=p, depth=depth, dims=tuple(dims))
    if not cert.valid:
        raise InternalError(f"span staircase broken: {cert.dims}")
    return cert


# ---------------------------------------------------------------------------
# Reidemeister-Schreier for stabilizers of permutation actions.


def _check_perm(perm: Sequence[int], m: int, gid: str) -> tuple[int, ...]:
    perm = tuple(int(x) for x in perm)
    if len(perm) != m or sorted(perm) != list(range(m)):
        raise ValueError(f"generator {gid!r} is not a permutation of 0..{m - 1}")
    return perm


def _pinv(perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, j in enumerate(perm):
        out[j] = i
    return tuple(out)


def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Apply a, then b."""
    return tuple(b[x] for x in a)


@dataclass(frozen=True)
class CosetTable:
    """Orbit of the base point as a coset space: coset 0 is the base, and
    each generator permutes the cosets."""

    generator_ids: tuple[str, ...]
    points: tuple[int, ...]
    forward: tuple[tuple[int, ...], ...]

    @property
    def n_cosets(self) -> int:
        return len(self.points)

    def transition(self, coset: int, gid: str, sign: int = 1) -> int:
        k = self.generator_ids.index(gid)
        perm = self.forward[k]
        if sign >= 0:
            return perm[coset]
        return perm.index(coset)


def _orbit_data(generators: Mapping[str, Sequence[int]], base: int):
    if not generators:
        raise EmptyInput("at least one generator is required")
    ids = tuple(generators)
    first = next(iter(generators.values()))
    m = len(first)
    perms = {gid: _check_perm(perm, m, gid) for gid, perm in generators.items()}
    invs = {gid: _pinv(perm) for gid, perm in perms.items()}
    if not (0 <= base < m):
        raise ValueError(f"base point {base} outside 0..{m - 1}")

    # Breadth-first transversal; edge order is each generator in the given
    # order, positive direction before inverse, so the transversal is
    # prefix-closed and reproducible.
    order = [base]
    index = {base: 0}
    words = [GroupWord.identity()]
    head = 0
    while head < len(order):
        point = order[head]
        for gid in ids:
            for sign, perm in ((1, perms[gid]), (-1, invs[gid])):
                target = perm[point]
                if target not in index:
                    index[target] = len(order)
                    order.append(target)
                    words.append(words[head] * GroupWord.generator(gid, sign))
        head += 1

    forward = tuple(
        tuple(index[perms[gid][pt]] for pt in order) for gid in ids
    )
    table = CosetTable(generator_ids=ids, points=tuple(order), forward=forward)
    return table, words, perms


def build_coset_table(generators: Mapping[str, Sequence[int]], base: int) -> CosetTable:
    return _orbit_data(generators, base)[0]


def schreier_generators(generators: Mapping[str, Sequence[int]], base: int) -> list[GroupWord]:
    """Generators of the stabilizer of the base point.

    For each coset representative r and generator g, the word
    r g (rg-bar)^(-1) stabilizes the base; the freely nontrivial ones are
    returned in (coset, generator) order.  On a free action of rank r with
    index n there are exactly 1 + n(r - 1) of them.
    """
    table, words, _ = _orbit_data(generators, base)
    out: list[GroupWord] = []
    seen = set()
    for c in range(table.n_cosets):
        for k, gid in enumerate(table.generator_ids):
            target = table.forward[k][c]
            u = words[c] * GroupWord.generator(gid) * words[target].inverse()
            if not u.is_identity and u not in seen:
                seen.add(u)
                out.append(u)
    return out


def nielsen_schreier_expected(rank: int, index: int) -> int:
    """Rank of an index-n subgroup of a free group of rank r: 1 + n(r-1)."""
    if rank < 1 or index < 1:
        raise ValueError("rank and index must be positive")
    return 1 + index * (rank - 1)


def word_permutation(word: GroupWord, generators: Mapping[str, Sequence[int]]) -> tuple[int, ...]:
    """Evaluate a word to a permutation, applying letters left to right."""
    if not generators:
        raise EmptyInput("at least one generator is required")
    m = len(next(iter(generators.values())))
    perms = {gid: _check_perm(perm, m, gid) for gid, perm in generators.items()}
    acc = tuple(range(m))
    for gid, e in word.entries:
        perm = perms.get(gid)
        if perm is None:
            raise UnknownGenerator(f"no binding for generator {gid!r}")
        if e < 0:
            perm, e = _pinv(perm), -e
        for _ in range(e):
            acc = _pmul(acc, perm)
    return acc


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutations(text: str, degree: int | None = None) -> dict[str, tuple[int, ...]]:
    """Parse 'a=(0 1); b=(0 1)(2 3)' into a generator-to-permutation map."""
    chunks = [chunk.strip() for chunk in text.split(";") if chunk.strip()]
    if not chunks:
        raise EmptyInput("no generators in the input text")
    raw: dict[str, list[list[int]]] = {}
    top = -1
    for chunk in chunks:
        if "=" not in chunk:
            raise ValueError(f"cannot parse generator assignment {chunk!r}")
        name, cycles_text = chunk.split("=", 1)
        cycles = []
        rest = cycles_text.strip()
        matched = "".join(_CYCLE_RE.findall(rest))
        stripped = re.sub(r"[\s(),]", "", rest)
        if re.sub(r"[\s,]", "", matched) != stripped:
            raise ValueError(f"cannot parse cycles {cycles_text!r}")
        for body in _CYCLE_RE.findall(rest):
            entries = [int(x) for x in re.split(r"[,\s]+", body.strip()) if x]
            if entries:
                cycles.append(entries)
                top = max(top, max(entries))
        raw[name.strip()] = cycles
    m = degree if degree is not None else top + 1
    m = max(m, 1)
    out = {}
    for name, cycles in raw.items():
        perm = list(range(m))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                perm[a] = b
        out[name] = _check_perm(perm, m, name)
    return out
