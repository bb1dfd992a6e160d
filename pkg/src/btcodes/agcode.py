"""One-point evaluation codes on superelliptic curves y^n = h(x) and their
block symmetries.

Points above each completely split x = beta form a block, listed in the
orbit order y0, zeta*y0, zeta^2*y0 under the automorphism y -> zeta*y, so
that automorphism acts on every block as a cyclic rotation.  Codes carry a
list of such block permutations; membership in the permutation group of the
code is tested by row-space reduction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .ff import FqElem, FqField, Poly, is_separable, splits_completely

POINT_CEILING = 2**16
DISTANCE_CEILING = 2**24
# codewords built per numpy batch during the distance search
_BATCH_WORDS = 2**16


class CeilingExceeded(ValueError):
    """The requested enumeration is larger than the configured ceiling."""


# ---------------------------------------------------------------------------
# Curves


@dataclass(frozen=True, eq=False)
class SuperCurve:
    field: FqField
    n: int
    h: Poly
    zeta: FqElem
    genus: int

    @property
    def m(self) -> int:
        return int(self.h.degree)

    @property
    def one_point(self) -> bool:
        """Whether the place at infinity is unique and rational."""
        return self.n == 1 or math.gcd(self.n, self.m) == 1

    def describe(self) -> dict:
        return {
            "field": self.field.spec(),
            "n": self.n,
            "h": [str(c) for c in self.h.coeffs],
            "m": self.m,
            "genus": self.genus,
            "zeta": str(self.zeta),
        }


def curve_genus(n: int, m: int) -> int:
    """Genus of y^n = h(x) for separable h of degree m and n in {1, 2, 3}."""
    if n == 1:
        return 0
    d = math.gcd(n, m)
    if n == 2:
        return (m - d) // 2
    if n == 3:
        return (m - 1) - (d - 1) // 2
    raise ValueError(f"n must be 1, 2 or 3, got {n}")


def primitive_root_of_unity(field: FqField, n: int) -> FqElem:
    """Smallest (index order) element of exact multiplicative order n."""
    if (field.q - 1) % n:
        raise ValueError(f"{n} does not divide q - 1 = {field.q - 1}")
    for z in field.nonzero():
        if z**n == field.one and all(z**k != field.one for k in range(1, n)):
            return z
    raise AssertionError("unreachable: F_q^* is cyclic")


def make_curve(field: FqField, n: int, h: Poly | None = None) -> SuperCurve:
    """The curve y^n = h(x); h must be monic, separable and split.

    For n = 1 the curve is the projective line and h defaults to x.
    """
    if n not in (1, 2, 3):
        raise ValueError(f"n must be 1, 2 or 3, got {n}")
    if h is None:
        if n != 1:
            raise ValueError("h is required for n = 2, 3")
        h = Poly.x(field)
    if h.field != field:
        raise ValueError("h is defined over a different field")
    if n > 1:
        if math.gcd(n, field.p) != 1:
            raise ValueError(f"n={n} is divisible by the characteristic {field.p}")
        if (field.q - 1) % n:
            raise ValueError(f"n={n} does not divide q - 1 = {field.q - 1}")
    if h.is_zero() or h.degree < 1:
        raise ValueError("h must have degree >= 1")
    if not h.is_monic():
        raise ValueError(f"h is not monic: {h}")
    if not is_separable(h):
        raise ValueError(f"h is not separable: {h}")
    if splits_completely(h) is None:
        raise ValueError(f"h does not split over F_{field.q}: {h}")
    zeta = primitive_root_of_unity(field, n)
    return SuperCurve(field, n, h, zeta, curve_genus(n, int(h.degree)))


@dataclass(frozen=True)
class PointSet:
    affine_points: tuple[tuple[FqElem, FqElem], ...]
    infinite_places: tuple[int, ...]  # degree of each place at infinity

    @property
    def n_rational(self) -> int:
        return len(self.affine_points) + sum(1 for d in self.infinite_places if d == 1)


def _nth_roots_table(field: FqField, n: int) -> dict[int, list[int]]:
    roots: dict[int, list[int]] = {}
    for y in range(field.q):
        roots.setdefault(field.ipow(y, n), []).append(y)
    return roots


def _hasse_weil_ok(n_points: int, q: int, genus: int) -> bool:
    # |N - (q + 1)| <= 2 g sqrt(q), squared
    return (n_points - q - 1) ** 2 <= 4 * genus * genus * q


def rational_points(curve: SuperCurve) -> PointSet:
    """All rational points; affine ones by exhaustive search in x then y."""
    f = curve.field
    if f.q > POINT_CEILING:
        raise CeilingExceeded(f"point enumeration refused for q={f.q}")
    pts = []
    if curve.n == 1:
        for b in range(f.q):
            pts.append((FqElem(f, b), FqElem(f, curve.h.eval_index(b))))
        inf = (1,)
    else:
        table = _nth_roots_table(f, curve.n)
        for b in range(f.q):
            for y in table.get(curve.h.eval_index(b), ()):
                pts.append((FqElem(f, b), FqElem(f, y)))
        # monic h: the leading coefficient is an n-th power, so all places at infinity are rational
        inf = (1,) * math.gcd(curve.n, curve.m)
        n_zero = sum(1 for _, y in pts if not y)
        if n_zero != curve.m:
            raise AssertionError(f"{n_zero} points with y = 0, expected {curve.m}")
    ps = PointSet(tuple(pts), inf)
    if not _hasse_weil_ok(ps.n_rational, f.q, curve.genus):
        raise AssertionError(f"Hasse-Weil violated: N={ps.n_rational}, q={f.q}, g={curve.genus}")
    return ps


def split_points(curve: SuperCurve) -> list[tuple[FqElem, list[FqElem]]]:
    """Each beta above which the curve has n distinct points, with those y-values.

    The y-values run y0, zeta*y0, ... where y0 is the smallest in index order.
    For n = 1 every beta qualifies with the single value h(beta).
    """
    f = curve.field
    out = []
    if curve.n == 1:
        for b in f.elements():
            out.append((b, [curve.h(b)]))
        return out
    table = _nth_roots_table(f, curve.n)
    for b in f.elements():
        v = curve.h(b)
        if not v:
            continue
        ys = table.get(v.value, [])
        if len(ys) == curve.n:
            y0 = FqElem(f, min(ys))
            out.append((b, [y0 * curve.zeta**k for k in range(curve.n)]))
    return out


def rr_basis(curve: SuperCurve, r: int) -> list[tuple[int, int]]:
    """Exponents (i, j) of the monomials x^i y^j spanning L(r * P_inf).

    The pole order of x^i y^j at the single place at infinity is n*i + m*j.
    """
    if r < 0:
        return []
    if not curve.one_point:
        raise ValueError(f"gcd(n, m) = gcd({curve.n}, {curve.m}) != 1: no single place at infinity")
    if curve.n == 1:
        return [(i, 0) for i in range(r + 1)]
    n, m = curve.n, curve.m
    return [(i, j) for j in range(n) for i in range((r - m * j) // n + 1) if m * j <= r]


# ---------------------------------------------------------------------------
# Linear algebra over F_q on index arrays


def _neg_inv(field: FqField) -> tuple[np.ndarray, np.ndarray]:
    neg = np.array([field.ineg(a) for a in range(field.q)], dtype=np.int32)
    inv = np.zeros(field.q, dtype=np.int32)
    for a in range(1, field.q):
        inv[a] = field.iinv(a)
    return neg, inv


def rref(field: FqField, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (zero rows dropped) and its pivot columns."""
    add, mul = field.tables()
    neg, inv = _neg_inv(field)
    a = np.array(mat, dtype=np.int32, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = mul[inv[a[r, c]], a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = add[a[i], mul[neg[a[i, c]], a[r]]]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def in_row_space(field: FqField, reduced: np.ndarray, pivots: Sequence[int], vec: np.ndarray) -> bool:
    """Membership of vec in the span of an RREF matrix."""
    add, mul = field.tables()
    acc = np.zeros_like(vec)
    for row, c in zip(reduced, pivots):
        if vec[c]:
            acc = add[acc, mul[vec[c], row]]
    return bool(np.array_equal(acc, vec))


# ---------------------------------------------------------------------------
# Codes


@dataclass(frozen=True)
class BlockPermutation:
    """One permutation per block, each on the local indices 0..size-1."""

    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for p in self.perms:
            if sorted(p) != list(range(len(p))):
                raise ValueError(f"{p} is not a permutation of 0..{len(p) - 1}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.perms)

    def global_map(self) -> list[int]:
        """Coordinate j moves to position global_map()[j]."""
        out = []
        off = 0
        for p in self.perms:
            out.extend(off + x for x in p)
            off += len(p)
        return out

    @classmethod
    def identity(cls, blocks: Sequence[int]) -> "BlockPermutation":
        return cls(tuple(tuple(range(b)) for b in blocks))

    @classmethod
    def rotation(cls, blocks: Sequence[int], step: int = 1) -> "BlockPermutation":
        return cls(tuple(tuple((x + step) % b for x in range(b)) for b in blocks))

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.perms]


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: FqField
    generator: np.ndarray  # k x n, element indices, full row rank, RREF
    block_structure: tuple[int, ...] | None = None
    provenance: dict = dc_field(default_factory=dict)
    symmetries: tuple[BlockPermutation, ...] = ()

    def __post_init__(self):
        g = self.generator
        if g.ndim != 2:
            raise ValueError("generator must be 2-d")
        if self.block_structure is not None:
            if any(b <= 0 for b in self.block_structure):
                raise ValueError("block sizes must be positive")
            if sum(self.block_structure) != g.shape[1]:
                raise ValueError(f"blocks {self.block_structure} do not sum to length {g.shape[1]}")
        for s in self.symmetries:
            if s.shape != self.block_structure:
                raise ValueError("symmetry shape does not match the block structure")
        g.setflags(write=False)

    @classmethod
    def from_rows(cls, field: FqField, rows, **kw) -> "LinearCode":
        length = kw.pop("length", None)
        mat = np.asarray(rows, dtype=np.int32)
        if mat.size == 0:
            mat = np.zeros((0, length or 0), dtype=np.int32)
        red, _ = rref(field, mat)
        return cls(field, red, **kw)

    @property
    def length(self) -> int:
        return int(self.generator.shape[1])

    @property
    def dimension(self) -> int:
        return int(self.generator.shape[0])

    def pivots(self) -> list[int]:
        return [int(np.nonzero(row)[0][0]) for row in self.generator]

    def contains(self, word) -> bool:
        return in_row_space(self.field, self.generator, self.pivots(), np.asarray(word, dtype=np.int32))

    def to_json(self) -> dict:
        return {
            "field": self.field.spec(),
            "length": self.length,
            "dimension": self.dimension,
            "generator": self.generator.tolist(),
            "block_structure": list(self.block_structure) if self.block_structure else None,
            "symmetries": [s.to_json() for s in self.symmetries],
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data: dict, field: FqField) -> "LinearCode":
        gen = np.asarray(data["generator"], dtype=np.int32).reshape(-1, data["length"])
        if gen.size and (gen.min() < 0 or gen.max() >= field.q):
            raise ValueError("generator entries must be element indices 0..q-1")
        blocks = tuple(data["block_structure"]) if data.get("block_structure") else None
        syms = tuple(BlockPermutation(tuple(tuple(p) for p in s)) for s in data.get("symmetries", ()))
        red, _ = rref(field, gen)
        if red.shape[0] != gen.shape[0]:
            raise ValueError("generator rows are linearly dependent")
        return cls(field, red, blocks, dict(data.get("provenance", {})), syms)


def eval_code(curve: SuperCurve, split_betas: Iterable[FqElem | int], r: int) -> LinearCode:
    """Evaluation code of L(r * P_inf) at every point above the given betas.

    Each beta contributes a block of n coordinates in orbit order, and the
    code carries the rotation induced by y -> zeta*y as its symmetry.
    """
    f = curve.field
    betas = [f(b) for b in split_betas]
    if not betas:
        raise ValueError("empty evaluation set")
    if len(set(betas)) != len(betas):
        raise ValueError("repeated beta in the evaluation set")
    fibres = dict(split_points(curve))
    cols: list[tuple[FqElem, FqElem]] = []
    for b in betas:
        if b not in fibres:
            raise ValueError(f"beta={b} is not completely split")
        cols.extend((b, y) for y in fibres[b])
    basis = rr_basis(curve, r)
    # the divisor G sits at infinity and every evaluation point is affine
    rows = [[((x**i) * (y**j)).value for x, y in cols] for i, j in basis]
    blocks = (curve.n,) * len(betas)
    prov = {
        "curve": curve.describe(),
        "deg_G": r,
        "genus": curve.genus,
        "betas": [str(b) for b in betas],
        "basis": [list(e) for e in basis],
    }
    code = LinearCode.from_rows(f, rows, length=len(cols), block_structure=blocks, provenance=prov,
                                symmetries=(BlockPermutation.rotation(blocks),))
    return code


def min_distance_bruteforce(code: LinearCode, ceiling: int = DISTANCE_CEILING) -> int:
    """Minimum weight over all nonzero codewords (0 for the zero code)."""
    q, k, n = code.field.q, code.dimension, code.length
    if k == 0:
        return 0
    if q**k > ceiling:
        raise CeilingExceeded(f"{q}^{k} codewords exceed the ceiling {ceiling}")
    add, mul = code.field.tables()
    g = code.generator
    # split rows: enumerate the first k1 as a table, loop over the rest
    k1 = max(1, min(k, int(math.log(_BATCH_WORDS, q))))
    table = np.zeros((1, n), dtype=np.int32)
    for row in g[:k1]:
        table = np.concatenate([add[table, mul[c, row]] for c in range(q)])
    best = n + 1
    nz_table = np.count_nonzero(table[1:], axis=1)
    if nz_table.size:
        best = int(nz_table.min())
    rest = g[k1:]
    for coeffs in itertools.product(range(q), repeat=k - k1):
        if not any(coeffs):
            continue
        off = np.zeros(n, dtype=np.int32)
        for c, row in zip(coeffs, rest):
            if c:
                off = add[off, mul[c, row]]
        w = int(np.count_nonzero(add[table, off], axis=1).min())
        if w < best:
            best = w
    return best


def apply_block_perm(code: LinearCode, perm: BlockPermutation) -> bool:
    """Whether the permutation maps the code into itself."""
    if code.block_structure is None:
        raise ValueError("code has no block structure")
    if perm.shape != code.block_structure:
        raise ValueError(f"permutation shape {perm.shape} does not match blocks {code.block_structure}")
    gmap = np.array(perm.global_map())
    piv = code.pivots()
    for row in code.generator:
        moved = np.empty_like(row)
        moved[gmap] = row
        if not in_row_space(code.field, code.generator, piv, moved):
            return False
    return True


@dataclass(frozen=True)
class BlockTransitivity:
    r_blocks: int
    block_sizes: tuple[int, ...]
    group_generators: tuple[BlockPermutation, ...]
    memberships: tuple[bool, ...]
    transitive_per_block: bool

    @property
    def ok(self) -> bool:
        return all(self.memberships) and self.transitive_per_block

    def to_json(self) -> dict:
        return {
            "r_blocks": self.r_blocks,
            "block_sizes": list(self.block_sizes),
            "group_generators": [g.to_json() for g in self.group_generators],
            "memberships": list(self.memberships),
            "transitive_per_block": self.transitive_per_block,
        }


def _orbit(start: int, gens: Sequence[Sequence[int]]) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def certify_block_transitive(code: LinearCode, generators: Sequence[BlockPermutation] | None = None) -> BlockTransitivity:
    """Check that the generators preserve the code and act transitively on every block."""
    if code.block_structure is None:
        raise ValueError("code has no block structure")
    gens = tuple(code.symmetries if generators is None else generators)
    members = tuple(apply_block_perm(code, g) for g in gens)
    transitive = True
    for b, size in enumerate(code.block_structure):
        local = [g.perms[b] for g in gens]
        if len(_orbit(0, local)) != size:
            transitive = False
            break
    return BlockTransitivity(len(code.block_structure), code.block_structure, gens, members, transitive)


def direct_sum(codes: Sequence[LinearCode]) -> LinearCode:
    """Block-diagonal sum; blocks and symmetries are concatenated."""
    if not codes:
        raise ValueError("direct sum of no codes")
    f = codes[0].field
    for c in codes:
        if c.field != f:
            raise ValueError("codes over different fields")
    n = sum(c.length for c in codes)
    k = sum(c.dimension for c in codes)
    gen = np.zeros((k, n), dtype=np.int32)
    blocks: list[int] = []
    r0 = c0 = 0
    for c in codes:
        gen[r0:r0 + c.dimension, c0:c0 + c.length] = c.generator
        blocks.extend(c.block_structure or (c.length,))
        r0 += c.dimension
        c0 += c.length
    syms = []
    for idx, c in enumerate(codes):
        for s in c.symmetries:
            parts = []
            for jdx, other in enumerate(codes):
                other_blocks = other.block_structure or (other.length,)
                if jdx == idx:
                    parts.extend(s.perms)
                else:
                    parts.extend(tuple(range(b)) for b in other_blocks)
            syms.append(BlockPermutation(tuple(parts)))
    prov = {"direct_sum": [c.provenance for c in codes]}
    return LinearCode.from_rows(f, gen, length=n, block_structure=tuple(blocks), provenance=prov, symmetries=tuple(syms))


def cyclic_code(field: FqField, n: int, g: Poly) -> LinearCode:
    """Cyclic code of length n generated by g, which must divide t^n - 1.

    It is a one-block code whose symmetry is the cyclic shift.
    """
    if g.field != field:
        raise ValueError("generator polynomial over a different field")
    xn1 = Poly(field, [-field.one] + [0] * (n - 1) + [1])
    if not (xn1 % g).is_zero():
        raise ValueError(f"{g} does not divide t^{n} - 1")
    k = n - int(g.degree)
    raw = list(g.raw)
    rows = [[0] * i + raw + [0] * (n - len(raw) - i) for i in range(k)]
    return LinearCode.from_rows(field, rows, length=n, block_structure=(n,),
                                provenance={"cyclic": {"n": n, "g": [str(c) for c in g.coeffs]}},
                                symmetries=(BlockPermutation.rotation((n,)),))
