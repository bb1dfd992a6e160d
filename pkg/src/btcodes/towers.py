"""Parameter arithmetic for codes built from towers of function fields.

Covers the Garcia-Stichtenoth tower statistics, the ``r_i`` schedule that
turns a sequence of function fields into a good code sequence, the
block-transitive construction over a Galois closure, and the explicit
length/dimension/distance tables for the wild (``F_{q^2}``, r = q^2 - q) and
tame (``F_{p^2}``, r = 2(p - 1)) families.

All table arithmetic is exact: lower bounds are Fractions and floors/ceilings
appear only in the admissible ``r_i`` interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .ff import is_prime, prime_power

HALF = Fraction(1, 2)

GS_ODD_VARIANTS = ("standard", "printed")


@dataclass(frozen=True)
class TowerStats:
    """Asymptotic statistics of a tower: splitting rate, genus and limit."""

    nu: Fraction
    gamma: Fraction | None  # None encodes an infinite genus
    q: int | None = None

    def __post_init__(self):
        if self.nu < 0:
            raise ValueError("splitting rate must be >= 0")
        if self.gamma is not None and self.gamma <= 0:
            raise ValueError("tower genus must be > 0")
        if self.q is not None and self.gamma is not None:
            if float(self.lam) > math.sqrt(self.q) - 1 + 1e-12:
                raise ValueError(f"limit {self.lam} exceeds the Drinfeld-Vladut bound for q={self.q}")

    @property
    def lam(self) -> Fraction:
        if self.gamma is None:
            return Fraction(0)
        return self.nu / self.gamma


# ---------------------------------------------------------------------------
# Garcia-Stichtenoth tower y^q + y = x^q / (x^(q-1) + 1) over F_{q^2}


@dataclass(frozen=True)
class GSStep:
    q: int
    i: int
    genus: int | float
    genus_exact: bool
    n_i: int
    n_rational_lower: int
    ratio_ok: bool
    variant: str


def gs_tower_step(q: int, i: int, odd_variant: str = "standard") -> GSStep:
    """Genus and rational-place lower bound of the i-th step (i >= 1).

    For odd i two genus formulas circulate: ``standard`` uses
    ``(q^((i+1)/2) - 1)(q^((i-1)/2) - 1)`` and ``printed`` uses the exponent
    ``(i-2)/2``, which is not an integer; the printed value is returned as a
    float (exact only when q is a square) and flagged via ``genus_exact``.
    """
    if i < 1:
        raise ValueError(f"tower step index must be >= 1, got {i}")
    if q <= 2 or prime_power(q) is None:
        raise ValueError(f"need a prime power q > 2, got {q}")
    if odd_variant not in GS_ODD_VARIANTS:
        raise ValueError(f"odd_variant must be one of {GS_ODD_VARIANTS}")
    n_i = q ** (i - 1) * (q * q - q)
    exact = True
    if i % 2 == 0:
        genus: int | float = (q ** (i // 2) - 1) ** 2
    elif odd_variant == "standard":
        genus = (q ** ((i + 1) // 2) - 1) * (q ** ((i - 1) // 2) - 1)
    else:
        r = math.isqrt(q)
        if r * r == q:
            genus = (q ** ((i + 1) // 2) - 1) * (Fraction(r) ** (i - 2) - 1)
            genus = int(genus) if genus.denominator == 1 else float(genus)
            exact = isinstance(genus, int)
        else:
            genus = (q ** ((i + 1) // 2) - 1) * (q ** ((i - 2) / 2) - 1)
            exact = False
    return GSStep(
        q=q, i=i, genus=genus, genus_exact=exact, n_i=n_i,
        n_rational_lower=n_i + 1,
        ratio_ok=n_i >= (q - 1) * genus,
        variant="even" if i % 2 == 0 else odd_variant,
    )


# ---------------------------------------------------------------------------
# r_i schedule for a single code in a good sequence


@dataclass(frozen=True)
class Schedule:
    r_i: int
    d_lower: int
    k_lower: int
    alpha: Fraction


def prop31_schedule(n_i: int, g_i: int, degG_i: int, delta: Fraction) -> Schedule | None:
    """Largest multiplier r_i with ``r_i * deg G_i / n_i <= 1 - delta``.

    Returns None when ``alpha = deg G_i / n_i >= 1 - delta`` (no room for G).
    The returned schedule carries the code bounds it implies:
    ``d >= n_i - r_i deg G_i`` and ``k >= r_i deg G_i + 1 - g_i``.
    """
    if degG_i < 1 or n_i < 1:
        raise ValueError("need deg G_i >= 1 and n_i >= 1")
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    alpha = Fraction(degG_i, n_i)
    if alpha >= 1 - delta:
        return None
    r_i = math.floor((1 - delta) * n_i / degG_i)
    scaled = Fraction(r_i * degG_i, n_i)
    assert 1 - delta >= scaled > 1 - delta - alpha
    return Schedule(r_i=r_i, d_lower=n_i - r_i * degG_i, k_lower=r_i * degG_i + 1 - g_i, alpha=alpha)


# ---------------------------------------------------------------------------
# Block-transitive codes over the Galois closure of a tower


@dataclass(frozen=True)
class Thm44Input:
    """Data of a tower feeding the block-transitive construction.

    g0: genus of F_0; t: number of rational places containing the ramification
    locus; r: number of completely splitting places used (the block count);
    epsilon: 1/2 for tame towers with Galois steps, 1 for 2-bounded ones;
    mu: absolute ramification index of the place carrying G.
    """

    g0: int
    t: int
    r: int
    epsilon: Fraction = Fraction(1)
    mu: int = 2
    delta: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if self.delta is not None:
            object.__setattr__(self, "delta", Fraction(self.delta))
        if self.epsilon not in (HALF, 1):
            raise ValueError(f"epsilon must be 1/2 or 1, got {self.epsilon}")
        if self.g0 < 0 or self.t < 1 or self.r < 1:
            raise ValueError("need g0 >= 0, t >= 1, r >= 1")
        if self.mu <= 1:
            raise ValueError(f"mu must be > 1, got {self.mu}")
        if self.delta is not None and not 0 < self.delta < 1:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")

    @property
    def genus_bound(self) -> Fraction:
        return closure_genus_bound(self.g0, self.epsilon, self.t)

    def admissible(self) -> bool:
        return 0 < self.genus_bound < self.r


@dataclass(frozen=True)
class EllLambda:
    ell: Fraction
    lambda_lower: Fraction


def closure_genus_bound(g0: int, epsilon: Fraction, t: int) -> Fraction:
    """Upper bound ``g0 - 1 + epsilon * t`` for the genus of the Galois closure tower."""
    return g0 - 1 + Fraction(epsilon) * t


def degG_bound(ext_degree: int, mu: int, i: int) -> Fraction:
    """Upper bound ``[F'_i : F_0] / mu^i`` for the degree of the places over the
    absolutely mu-ramified place."""
    if mu <= 1 or i < 0:
        raise ValueError("need mu > 1 and i >= 0")
    return Fraction(ext_degree, mu**i)


def thm44_ell(inp: Thm44Input) -> EllLambda:
    """ell and the lower bound for the limit of the Galois closure tower."""
    c = inp.genus_bound
    if not inp.admissible():
        raise ValueError(f"inadmissible input: need 0 < g0 - 1 + eps*t = {c} < r = {inp.r}")
    return EllLambda(ell=1 - c / inp.r, lambda_lower=Fraction(inp.r) / c)


@dataclass(frozen=True)
class RiInterval:
    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi


def ri_interval(delta: Fraction, mu: int, r: int, i: int, n_i: int, degG_i: Fraction) -> RiInterval:
    """Admissible multipliers ``ceil((1-delta-1/(mu^i r)) n_i/deg G_i) <= r_i <= floor((1-delta) n_i/deg G_i)``.

    r_i is a positive integer so the low end is clamped to 1.  ``deg G_i`` must
    respect its bound ``n_i / (r mu^i)``, which is what guarantees
    ``lo >= (1-delta) r mu^i - 1``; violating inputs raise.
    """
    delta = Fraction(delta)
    degG_i = Fraction(degG_i)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    if degG_i <= 0 or n_i <= 0 or r <= 0 or mu <= 1 or i < 0:
        raise ValueError("need positive n_i, deg G_i, r, i >= 0 and mu > 1")
    if degG_i > Fraction(n_i, r * mu**i):
        raise ValueError(f"deg G_i = {degG_i} exceeds its bound n_i/(r mu^i) = {Fraction(n_i, r * mu**i)}")
    ratio = n_i / degG_i
    lo = max(math.ceil((1 - delta - Fraction(1, mu**i * r)) * ratio), 1)
    hi = math.floor((1 - delta) * ratio)
    floor_bound = (1 - delta) * r * mu**i - 1
    assert lo >= floor_bound, (lo, floor_bound)
    return RiInterval(lo, hi)


# ---------------------------------------------------------------------------
# Explicit families


def mi_wild(q: int, i: int) -> int:
    """Degree of the i-th Galois closure step for the wild tower over F_{q^2}."""
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    if q <= 2:
        raise ValueError(f"wild family needs q > 2, got {q}")
    e = 2 * i - 1 if i <= 2 else 3 * i - 3
    if q % 2 == 0:
        e -= i // 2
    return q**e


def mi_tame(i: int) -> int:
    """Degree of the i-th Galois closure step for the tame tower over F_{p^2} (p >= 13)."""
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    if i <= 3:
        return 2**i
    if i <= 5:
        return 2 ** (2 * i - 3)
    return 2 ** (3 * i - 8)


@dataclass(frozen=True)
class ParamRow:
    i: int
    m_i: int
    n_i: int
    k_lower: Fraction
    d_lower: Fraction
    r_i_lo: int
    r_i_hi: int
    nontrivial_k: bool
    valid: bool
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.n_i % self.m_i:
            raise ValueError("n_i must be a multiple of m_i")


def thm44_row(inp: Thm44Input, i: int, m_i: int) -> ParamRow:
    """Code parameters at step i of the Galois closure, given its degree m_i.

    ``n_i = r m_i``, ``d >= delta n_i`` and
    ``k >= ((1-delta) r - mu^-i - (g0 - 1 + eps t)) m_i``, using the genus bound
    ``g(F'_i) <= (g0 - 1 + eps t) m_i + 1`` and ``deg G_i <= m_i / mu^i``.
    """
    if inp.delta is None:
        raise ValueError("thm44_row needs delta")
    thm44_ell(inp)  # admissibility
    delta, r, mu = inp.delta, inp.r, inp.mu
    n_i = r * m_i
    c = inp.genus_bound
    k_lower = ((1 - delta) * r - Fraction(1, mu**i) - c) * m_i
    d_lower = delta * n_i
    iv = ri_interval(delta, mu, r, i, n_i, degG_bound(m_i, mu, i))
    return ParamRow(
        i=i, m_i=m_i, n_i=n_i, k_lower=k_lower, d_lower=d_lower,
        r_i_lo=iv.lo, r_i_hi=iv.hi,
        nontrivial_k=delta < 1 - (c + Fraction(1, mu**i)) / r,
        valid=True,
    )


def wild_input(q: int, delta: Fraction) -> Thm44Input:
    return Thm44Input(g0=0, t=q + 1, r=q * q - q, epsilon=Fraction(1), mu=q, delta=delta)


def tame_input(p: int, delta: Fraction) -> Thm44Input:
    return Thm44Input(g0=0, t=6, r=2 * (p - 1), epsilon=HALF, mu=2, delta=delta)


def params_wild(q: int, i: int, delta: Fraction) -> ParamRow:
    """Row of the wild family over F_{q^2}: r = q^2 - q blocks of size m_i."""
    if q <= 2 or prime_power(q) is None:
        raise ValueError(f"need a prime power q > 2, got {q}")
    delta = Fraction(delta)
    if not 0 < delta < 1 - Fraction(1, q * q):
        raise ValueError(f"delta must lie in (0, 1 - q^-2), got {delta}")
    row = thm44_row(wild_input(q, delta), i, mi_wild(q, i))
    return ParamRow(**{**row.__dict__, "meta": {"family": "wild", "q": q, "field": q * q}})


def params_tame(p: int, i: int, delta: Fraction) -> ParamRow:
    """Row of the tame family over F_{p^2}: r = 2(p - 1) blocks of size m_i.

    The distance bound is established for ``2^i >= p`` only; earlier rows are
    reported with ``valid=False``.
    """
    if p < 13 or not is_prime(p):
        raise ValueError(f"tame family needs a prime p >= 13, got {p}")
    delta = Fraction(delta)
    if not 0 < delta < 1 - Fraction(1, p * p):
        raise ValueError(f"delta must lie in (0, 1 - p^-2), got {delta}")
    row = thm44_row(tame_input(p, delta), i, mi_tame(i))
    return ParamRow(**{**row.__dict__, "valid": 2**i >= p, "meta": {"family": "tame", "p": p, "field": p * p}})


def param_table(family: str, base: int, imax: int, delta: Fraction) -> list[ParamRow]:
    if family == "wild":
        return [params_wild(base, i, delta) for i in range(1, imax + 1)]
    if family == "tame":
        return [params_tame(base, i, delta) for i in range(1, imax + 1)]
    raise ValueError(f"family must be 'wild' or 'tame', got {family!r}")
