"""Searches for superelliptic data y^n = h(x) that feed good block-transitive
codes over arbitrary (not necessarily square) finite fields.

The pieces: residue sets of h, the feasibility window linking deg h to the
number of completely splitting places, the field-size thresholds that
guarantee such places by Hasse-Weil, palindromic-root polynomials ``h_R``
over prime fields, closed-form Legendre products for ``h_R(p - j)``, and prime
searches along arithmetic progressions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .ff import (
    FqElem, FqField, Poly, is_nth_power, is_prime, is_separable, legendre,
    make_field, poly_from_roots, splits_completely,
)

SQUARE = "square"
CUBE = "cube"
KINDS = (SQUARE, CUBE)
_KIND_N = {SQUARE: 2, CUBE: 3}

PRIME_CEILING = 10**7
SEARCH_FIELD_CEILING = 2**10

# symbols (a/p) whose product is (h(p-j)/p) for h with roots -1, 2..5 and their inverses
HPJ_FACTORS = {
    2: (-1, 5, 11),
    3: (-1, 2, 5, 13),
    4: (-1, 2, 5, 13, 17),
    5: (-1, 11, 13),
    6: (-1, 2, 3, 5, 11, 13, 19, 31),
    7: (-1, 5, 29),
}
# the commonly quoted j = 7 reduction; it disagrees with the closed form (e.g. p = 47)
HPJ_FACTORS_PRINTED = {**HPJ_FACTORS, 7: (-1, 2, 29)}

PROGRESSION_MODULUS = 220
PROGRESSION_RESIDUES = frozenset({1, 9, 11, 19})


def eps(n: int, m: int) -> int:
    """1 if n divides m, else 0."""
    if n == 0:
        raise ValueError("eps(0, m) is undefined")
    return 1 if m % n == 0 else 0


def residue_set(h: Poly, n: int) -> list[FqElem]:
    """All beta with h(beta) a nonzero n-th power (n = 2 or 3), in element order."""
    if h.is_zero():
        raise ValueError("residue set of the zero polynomial")
    f = h.field
    out = []
    for b in f.elements():
        v = h(b)
        if v and is_nth_power(v, n):
            out.append(b)
    return out


def _window_ok(a: int, coef: int, w: int) -> bool:
    # 2*sqrt(coef * w) <= a, by squaring
    return a >= 0 and a * a >= 4 * coef * w


def feasible_odd(m: int, u: int) -> bool:
    """``2 sqrt(2u) <= m - (u + 2 + eps_2(m)) < 3u``."""
    if m < 1 or u < 1:
        return False
    a = m - (u + 2 + eps(2, m))
    return _window_ok(a, 2, u) and a < 3 * u


def feasible_even(m: int, v: int) -> bool:
    """``2 sqrt(3v) <= m - (v + 2 + eps_3(m)) < 2v - 1/2``."""
    if m < 1 or v < 1:
        return False
    a = m - (v + 2 + eps(3, m))
    return _window_ok(a, 3, v) and 2 * a < 4 * v - 1


def feasible(m: int, w: int, kind: str) -> bool:
    if kind == SQUARE:
        return feasible_odd(m, w)
    if kind == CUBE:
        return feasible_even(m, w)
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


@dataclass(frozen=True)
class Rates:
    ell: Fraction
    lambda_lower: Fraction
    blocks: int


def thm63_rates(m: int, w: int, kind: str) -> Rates:
    """ell and limit bound for a feasible (m, w) pair.

    square: ``lambda >= 4u/(m - 2 - eps_2(m))``, ``ell = 1 - (m - 2 - eps_2(m))/(4u)``;
    cube: ``lambda >= 6v/(2(m - eps_3(m)) - 3)``, ``ell = 1 - (2m - 3 - 2 eps_3(m))/(6v)``.
    """
    if not feasible(m, w, kind):
        raise ValueError(f"(m={m}, {'u' if kind == SQUARE else 'v'}={w}) is not feasible")
    if kind == SQUARE:
        c = Fraction(m - 2 - eps(2, m), 4 * w)
        return Rates(ell=1 - c, lambda_lower=1 / c, blocks=2 * w)
    c = Fraction(2 * m - 3 - 2 * eps(3, m), 6 * w)
    return Rates(ell=1 - c, lambda_lower=1 / c, blocks=3 * w)


def feasible_counts(m: int, kind: str) -> list[int]:
    """Every u (or v) satisfying the window for degree m."""
    return [w for w in range(1, m + 1) if feasible(m, w, kind)]


@dataclass(frozen=True)
class Threshold:
    kind: str
    w: int
    q_min: int
    m: int


def thm66_threshold(w: int, kind: str) -> Threshold:
    """Smallest field size for which Hasse-Weil guarantees enough split places.

    square (q odd, u >= 2): ``q >= 4(u+2)^2`` with degree m = 2u + 5.
    cube (q = 2^(2s), v >= 5): ``q >= 4(2v+5)^2`` if v = 0, 1 mod 3 and
    ``q >= 4(2v+4)^2`` if v = 2 mod 3, with degree m = 2v + 5.
    """
    if kind == SQUARE:
        if w < 2:
            raise ValueError(f"need u >= 2, got {w}")
        return Threshold(kind, w, 4 * (w + 2) ** 2, 2 * w + 5)
    if kind == CUBE:
        if w < 5:
            raise ValueError(f"need v >= 5, got {w}")
        base = 2 * w + 5 if w % 3 in (0, 1) else 2 * w + 4
        return Threshold(kind, w, 4 * base**2, 2 * w + 5)
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def hasse_weil_quadratic(x: int, m: int, u: int) -> int:
    """``x^2 - (m-1)x - (m-2u)``; nonnegative at x = sqrt(q) means the
    Hasse-Weil lower bound leaves at least 2u affine points off y = 0."""
    return x * x - (m - 1) * x - (m - 2 * u)


def hasse_weil_quadratic_cube(x: int, m: int) -> int:
    """``x^2 - 2(m-1)x - (2m-1)``, the cube-case analogue."""
    return x * x - 2 * (m - 1) * x - (2 * m - 1)


# ---------------------------------------------------------------------------
# Palindromic-root polynomials over prime fields


def build_h_Rn(R: Sequence["FqElem | int"], field: FqField | None = None) -> Poly:
    """``(t + 1) * prod_{a in R} (t - a)(t - 1/a)``.

    Each a must avoid 0 and +-1, the set R must not contain any inverse of its
    own elements, and all 2|R| + 1 roots must be distinct.
    """
    if field is None:
        if not R or not isinstance(R[0], FqElem):
            raise ValueError("pass field= when R holds plain integers")
        field = R[0].field
    elems = [field(a) for a in R]
    one = field.one
    roots = [-one]
    seen = set()
    for a in elems:
        if not a:
            raise ValueError("root set contains 0")
        if a == one or a == -one:
            raise ValueError(f"root set contains {a} = +-1")
        if a in seen:
            raise ValueError(f"root {a} repeated")
        seen.add(a)
    for a in elems:
        inv = a.inverse()
        if inv in seen:
            raise ValueError(f"inverse of {a} is {inv}, which lies in R")
        roots.extend((a, inv))
    if len(set(roots)) != len(roots):
        dup = next(r for r in roots if roots.count(r) > 1)
        raise ValueError(f"root {dup} occurs twice among a, 1/a and -1")
    h = poly_from_roots(roots, 1, field=field)
    assert h.degree == 2 * len(elems) + 1 and is_separable(h)
    return h


def default_R(n_roots: int) -> list[int]:
    return list(range(2, n_roots + 2))


def hpj_direct(p: int, j: int, n_roots: int = 4) -> int:
    """Legendre symbol of h(p - j) mod p, evaluating h over F_p."""
    F = make_field(p)
    h = build_h_Rn(default_R(n_roots), field=F)
    return legendre(int(h(p - j)), p)


def jacobi_product_hpj(p: int, j: int, n_roots: int = 4) -> int:
    """Closed form ``(1-j/p) prod_k (j+k/p)(k/p)(kj+1/p)`` for ``(h(p-j)/p)``, k = 2..n_roots+1."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    jmax = (p - 1) // (n_roots + 1)
    if not 2 <= j <= jmax:
        raise ValueError(f"j={j} outside 2..{jmax} for p={p}")
    sym = legendre(1 - j, p)
    for k in range(2, n_roots + 2):
        sym *= legendre(j + k, p) * legendre(k, p) * legendre(k * j + 1, p)
    return sym


def hpj_listed(p: int, j: int, table: dict = HPJ_FACTORS) -> int:
    """Product of the reduced symbols in ``table[j]`` (roots 2..5)."""
    sym = 1
    for a in table[j]:
        sym *= legendre(a, p)
    return sym


@dataclass(frozen=True)
class ProgressionPrime:
    p: int
    symbol: int  # (h(p-2)/p), evaluated directly
    claimed: bool  # the progression is one for which +1 is claimed

    @property
    def holds(self) -> bool:
        return self.symbol == 1


def find_progression_primes(
    modulus: int,
    residues: Iterable[int],
    count: int,
    ceiling: int = PRIME_CEILING,
) -> list[ProgressionPrime]:
    """First ``count`` primes ``modulus*k + r`` (k >= 1, r in residues), ascending.

    Each prime carries the directly computed symbol of h(p - 2) for the roots
    2..5.  Primes in a class 1, 9, 11, 19 mod 220 are marked ``claimed``;
    callers check ``holds`` themselves (the class 19 mod 220 does not hold,
    239 is the first counterexample).  Residues sharing a factor with the
    modulus hold at most one prime and are skipped.  Raises ``LookupError``
    if the ceiling is reached first.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if count < 0:
        raise ValueError("count must be >= 0")
    residues = sorted({r % modulus for r in residues})
    usable = [r for r in residues if math.gcd(r, modulus) == 1]
    if not usable:
        raise ValueError(f"no residue in {residues} is coprime to {modulus}")
    claimed = modulus % PROGRESSION_MODULUS == 0
    out: list[ProgressionPrime] = []
    k = 1
    while len(out) < count:
        for r in usable:
            n = modulus * k + r
            if n > ceiling:
                raise LookupError(f"ceiling {ceiling} reached after {len(out)} primes")
            if not is_prime(n):
                continue
            sym = hpj_direct(n, 2) if n >= 37 else 0
            out.append(ProgressionPrime(n, sym, claimed and n % PROGRESSION_MODULUS in PROGRESSION_RESIDUES))
            if len(out) == count:
                break
        k += 1
    return out


# ---------------------------------------------------------------------------
# Certificates


@dataclass(frozen=True)
class SearchCertificate:
    field: FqField
    h: Poly
    m: int
    kind: str
    w: int
    witness_set: tuple[FqElem, ...]
    ell: Fraction
    lambda_lower: Fraction

    def __post_init__(self):
        n = _KIND_N[self.kind]
        if len(self.witness_set) != self.w:
            raise ValueError("witness set size does not match w")
        for b in self.witness_set:
            v = self.h(b)
            if not v or not is_nth_power(v, n):
                raise ValueError(f"h({b}) is not a nonzero {self.kind}")
        if not feasible(self.m, self.w, self.kind):
            raise ValueError("certificate violates the feasibility window")

    @property
    def n(self) -> int:
        return _KIND_N[self.kind]

    def replay(self) -> bool:
        """Re-derive every claim from scratch."""
        n = self.n
        roots = splits_completely(self.h)
        return (
            self.h.is_monic()
            and is_separable(self.h)
            and roots is not None and len(roots) == self.m
            and all(self.h(b) and is_nth_power(self.h(b), n) for b in self.witness_set)
            and feasible(self.m, self.w, self.kind)
            and thm63_rates(self.m, self.w, self.kind) == Rates(self.ell, self.lambda_lower, n * self.w)
        )

    def to_json(self) -> dict:
        return {
            "field": self.field.spec(),
            "kind": self.kind,
            "m": self.m,
            "w": self.w,
            "blocks": self.n * self.w,
            "h": [str(c) for c in self.h.coeffs],
            "roots": [str(r) for r in splits_completely(self.h)],
            "witness_set": [str(b) for b in self.witness_set],
            "ell": str(self.ell),
            "lambda_lower": str(self.lambda_lower),
        }


def search_certificate(
    field: FqField,
    m_range: Iterable[int],
    kind: str,
    *,
    w: int | None = None,
    coprime: bool = False,
    max_candidates: int | None = None,
) -> SearchCertificate | None:
    """Deterministic scan for (h, witness set) meeting the feasibility window.

    Degrees are tried in increasing order; for each degree, root sets are
    enumerated as combinations in element order; the witness set is the
    shortest prefix of the residue set that is feasible.  ``w`` pins the
    witness size, ``coprime`` skips degrees sharing a factor with n (needed for
    one-point codes), and ``max_candidates`` caps the number of root sets tried.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    n = _KIND_N[kind]
    if field.q > SEARCH_FIELD_CEILING:
        raise ValueError(f"field of order {field.q} exceeds the search ceiling {SEARCH_FIELD_CEILING}")
    if (field.q - 1) % n:
        raise ValueError(f"{kind} search needs {n} | q - 1, q = {field.q}")
    elems = list(field.elements())
    tried = 0
    for m in sorted(set(m_range)):
        if m < 1 or m > field.q:
            continue
        if coprime and math.gcd(m, n) != 1:
            continue
        ws = [w] if w is not None else feasible_counts(m, kind)
        ws = [x for x in ws if feasible(m, x, kind) and x <= field.q - m]
        if not ws:
            continue
        for roots in itertools.combinations(elems, m):
            tried += 1
            if max_candidates is not None and tried > max_candidates:
                return None
            h = poly_from_roots(roots, 1, field=field)
            res = residue_set(h, n)
            for x in ws:
                if x <= len(res):
                    rates = thm63_rates(m, x, kind)
                    return SearchCertificate(
                        field=field, h=h, m=m, kind=kind, w=x,
                        witness_set=tuple(res[:x]), ell=rates.ell,
                        lambda_lower=rates.lambda_lower,
                    )
    return None
