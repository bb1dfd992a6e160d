"""Asymptotic bounds for linear codes: GV, TVZ, Ihara-function estimates,
and the bounds obtained by restricting codes to a prime subfield.

Every quantity that is rational is returned as a :class:`fractions.Fraction`;
floats appear only where an entropy or a logarithm is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .ff import is_prime, prime_power

Number = Union[Fraction, float]

FLOAT_TOL = 1e-12
BISECT_TOL = 1e-9
DEFAULT_STEP = 1e-4

BOUND_KINDS = ("GV", "TVZ", "SERRE_LOWER", "DV_UPPER", "ZINK_CUBIC", "LINEAR")


@dataclass(frozen=True)
class LDeltaBound:
    """An (ell, delta) guarantee: rate >= ell - delta and relative distance >= delta."""

    ell: Fraction
    delta: Fraction

    def __post_init__(self):
        if not (0 < self.delta < self.ell < 1):
            raise ValueError(f"need 0 < delta < ell < 1, got ell={self.ell}, delta={self.delta}")

    @property
    def rate(self) -> Fraction:
        return self.ell - self.delta


@dataclass(frozen=True)
class BoundPoint:
    delta: Fraction
    value: Number
    bound_kind: str

    def __post_init__(self):
        if not 0 <= self.delta <= 1:
            raise ValueError(f"delta={self.delta} outside [0, 1]")


def entropy_q(x: float, q: int) -> float:
    """q-ary entropy H_q(x) on 0 <= x <= 1 - 1/q, with H_q(0) = 0."""
    if q < 2:
        raise ValueError(f"entropy needs q >= 2, got {q}")
    hi = 1 - 1 / q
    if x < 0 or x > hi + FLOAT_TOL:
        raise ValueError(f"entropy_q: x={x} outside [0, {hi}]")
    if x == 0:
        return 0.0
    x = min(float(x), hi)
    lq = math.log(q)
    val = x * math.log(q - 1) / lq - x * math.log(x) / lq
    if x < 1:
        val -= (1 - x) * math.log(1 - x) / lq
    return val


def gv_ell(delta: float, q: int, *, halved: bool = False) -> float:
    """The ell of the Gilbert-Varshamov line, ``delta + 1 - H_q(delta)``.

    ``halved=True`` evaluates the entropy at ``delta / 2`` instead.  That form
    is printed in some texts but it dominates the TVZ line for every q, so it
    is kept only for comparison.
    """
    hi = 1 - 1 / q
    if delta < 0 or delta > hi + FLOAT_TOL:
        raise ValueError(f"gv_ell: delta={delta} outside [0, {hi}]")
    arg = delta / 2 if halved else delta
    return float(delta) + 1 - entropy_q(arg, q)


@dataclass(frozen=True)
class IharaBounds:
    q: int
    serre_lower: float
    dv_upper: float
    square_exact: int | None
    zink_cubic: Fraction | None


def _exact_root(q: int, k: int) -> int | None:
    r = round(q ** (1 / k))
    for c in (r - 1, r, r + 1):
        if c > 0 and c**k == q:
            return c
    return None


def _check_prime_power(q: int) -> tuple[int, int]:
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    return pp


def ihara_bounds(q: int) -> IharaBounds:
    """Known estimates of Ihara's A(q): Serre's lower bound, the
    Drinfeld-Vladut upper bound, the exact value for squares and Zink's
    bound for cubes (the last two only when they apply)."""
    _check_prime_power(q)
    sq = _exact_root(q, 2)
    cb = _exact_root(q, 3)
    return IharaBounds(
        q=q,
        serre_lower=math.log2(q) / 96,
        dv_upper=math.sqrt(q) - 1,
        square_exact=sq - 1 if sq is not None else None,
        zink_cubic=Fraction(2 * (cb * cb - 1), cb + 2) if cb is not None else None,
    )


def tvz_ell(q: int) -> Fraction:
    """``1 - 1/(sqrt(q) - 1)`` for a square prime power q with sqrt(q) > 2."""
    _check_prime_power(q)
    r = _exact_root(q, 2)
    if r is None:
        raise ValueError(f"TVZ line needs a square field size, got {q}")
    if r <= 2:
        raise ValueError(f"TVZ line is trivial for q={q} (A(q) = {r - 1} <= 1)")
    return 1 - Fraction(1, r - 1)


def linear_value(ell: Number, delta: Number) -> Number:
    """Rate of an (ell, delta) line, clipped at zero."""
    v = ell - delta
    return v if v > 0 else v * 0


def ell_from_ihara(a: Number) -> Number | None:
    """``1 - 1/A`` when A > 1, else None (no asymptotically good line)."""
    if a <= 1:
        return None
    return 1 - 1 / a


def bound_ells(q: int) -> dict[str, Number]:
    """ell of every linear bound that applies over F_q."""
    ib = ihara_bounds(q)
    out: dict[str, Number] = {}
    if ib.square_exact is not None and ib.square_exact > 1:
        out["TVZ"] = tvz_ell(q)
    for kind, a in (("SERRE_LOWER", ib.serre_lower), ("DV_UPPER", ib.dv_upper), ("ZINK_CUBIC", ib.zink_cubic)):
        if a is None:
            continue
        ell = ell_from_ihara(a)
        if ell is not None:
            out[kind] = ell
    return out


def _grid(hi: float, step: float) -> list[Fraction]:
    n = int(math.floor(hi / step + FLOAT_TOL))
    step_f = Fraction(step).limit_denominator(10**9)
    pts = [step_f * i for i in range(n + 1)]
    top = Fraction(hi).limit_denominator(10**9)
    if pts[-1] < top:
        pts.append(top)
    return pts


def bound_curve(q: int, kinds: Iterable[str], step: float = 0.001, ells: Iterable[Fraction] = ()) -> list[BoundPoint]:
    """Sample bound curves on a delta grid over ``[0, 1 - 1/q]``.

    GV values are rates ``gv_ell(delta) - delta``; the linear kinds give
    ``max(ell - delta, 0)``.  Kinds that do not apply to q are skipped.
    Output is sorted by delta, then kind.
    """
    kinds = [k.upper() for k in kinds]
    for k in kinds:
        if k not in BOUND_KINDS:
            raise ValueError(f"unknown bound kind {k!r}; expected one of {BOUND_KINDS}")
    hi = 1 - 1 / q
    grid = _grid(hi, step)
    lines = bound_ells(q)
    series: list[tuple[str, object]] = []
    for k in kinds:
        if k == "GV":
            series.append(("GV", None))
        elif k == "LINEAR":
            for ell in ells:
                series.append((f"LINEAR({ell})", Fraction(ell)))
        elif k in lines:
            series.append((k, lines[k]))
    out = []
    for d in grid:
        for name, ell in series:
            if ell is None:
                val: Number = gv_ell(float(d), q) - float(d)
            elif isinstance(ell, Fraction):
                val = linear_value(ell, d)
            else:
                val = linear_value(ell, float(d))
            out.append(BoundPoint(d, val, name))
    return out


def _gap(delta: float, q: int, ell: Fraction) -> float:
    return (float(ell) - delta) - (gv_ell(delta, q) - delta)


def _bisect(lo: float, hi: float, q: int, ell: Fraction, tol: float) -> float:
    # invariant: sign(gap(lo)) != sign(gap(hi))
    glo = _gap(lo, q, ell)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        gm = _gap(mid, q, ell)
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return (lo + hi) / 2


def gv_tvz_crossing(q: int, step: float = DEFAULT_STEP, tol: float = BISECT_TOL) -> list[tuple[float, float]]:
    """Intervals of delta where the TVZ line lies strictly above the GV curve.

    The gap is concave in delta, so at most one interval comes back; an empty
    list means TVZ never wins on the grid.
    """
    ell = tvz_ell(q)
    hi = 1 - 1 / q
    n = int(math.floor(hi / step))
    xs = [i * step for i in range(n + 1)]
    if xs[-1] < hi:
        xs.append(hi)
    signs = [_gap(x, q, ell) > 0 for x in xs]
    intervals = []
    start = None
    for i, pos in enumerate(signs):
        if pos and start is None:
            start = xs[0] if i == 0 else _bisect(xs[i - 1], xs[i], q, ell, tol)
        elif not pos and start is not None:
            intervals.append((start, _bisect(xs[i - 1], xs[i], q, ell, tol)))
            start = None
    if start is not None:
        intervals.append((start, xs[-1]))
    return intervals


def max_tvz_gv_gap(q: int, step: float = DEFAULT_STEP) -> float:
    ell = tvz_ell(q)
    hi = 1 - 1 / q
    n = int(math.floor(hi / step))
    return max(_gap(i * step, q, ell) for i in range(n + 1))


def restrict_code_bound(n: int, k: int, d: int, s: int) -> tuple[int, int]:
    """Lower bounds ``(k', d')`` for the subfield subcode over F_p of an
    [n, k, d] code over F_{p^s}: ``k' >= s*k - (s-1)*n`` and ``d' >= d``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return s * k - (s - 1) * n, d


def manin_prime_bound(p: int, m: int, delta: Fraction) -> Fraction:
    """Lower bound for alpha_p(delta) obtained by restricting TVZ codes
    from F_{p^(2m)} down to F_p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    delta = Fraction(delta)
    return 1 - Fraction(2 * m, p**m - 1) - (2 * m - 1) * delta


def restriction_good(p: int, m: int) -> bool:
    """Whether TVZ-attaining codes over F_{p^(2m)} stay asymptotically good
    after restriction to F_p, i.e. ``0 < 1/(2m) - 1/(p^m - 1) < 1``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    x = Fraction(1, 2 * m) - Fraction(1, p**m - 1)
    return 0 < x < 1
