"""Exact arithmetic in finite fields F_{p^s} and in F_q[t].

Elements are stored as an integer index ``c0 + c1*p + ... + c_{s-1}*p^(s-1)``
where ``(c0, ..., c_{s-1})`` are the coordinates in the power basis
``1, a, ..., a^(s-1)``.  The index order is the canonical element order used
everywhere else in the package (it is what ``sorted`` gives you).

Multiplication in extension fields goes through discrete log tables built
once per field, so extension degrees are limited to ``q <= MAX_EXTENSION_ORDER``.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_EXTENSION_ORDER = 2**16
MAX_PRIME = 2**62
EXHAUSTIVE_LIMIT = 2**16

NEG_INF = float("-inf")

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, s)`` with ``q == p**s`` and p prime, or None."""
    if q < 2:
        return None
    for s in range(q.bit_length(), 0, -1):
        p = round(q ** (1.0 / s))
        for cand in (p - 1, p, p + 1):
            if cand >= 2 and cand**s == q and is_prime(cand):
                return cand, s
    return None


# ---------------------------------------------------------------------------
# Legendre / Jacobi symbols


def _jacobi_reciprocity(a: int, n: int) -> int:
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion ``a^((p-1)/2) mod p``."""
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p.

    Computed by the reciprocity recursion and cross-checked against Euler's
    criterion; a disagreement is an internal error.
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre: modulus {p} is not an odd prime")
    sym = _jacobi_reciprocity(a, p)
    if sym != legendre_euler(a, p):
        raise ArithmeticError(f"legendre({a}, {p}): reciprocity and Euler disagree")
    return sym


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"jacobi: modulus {n} must be odd and positive")
    return _jacobi_reciprocity(a, n)


# ---------------------------------------------------------------------------
# Fields


class FqField:
    """The finite field F_{p^s} = F_p[t]/(modulus).

    Use :func:`make_field` rather than calling this directly; it validates the
    modulus and picks a default one.
    """

    __slots__ = (
        "p", "s", "q", "modulus", "generator_name",
        "_digits", "_exp", "_log", "_key", "_add_table",
    )

    def __init__(self, p: int, s: int, modulus: tuple[int, ...] | None, generator_name: str = "a"):
        self.p = p
        self.s = s
        self.q = p**s
        # modulus coefficients low -> high, monic, length s+1; None for prime fields
        self.modulus = modulus
        self.generator_name = generator_name
        self._key = (p, s, modulus)
        self._digits: list[tuple[int, ...]] | None = None
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._add_table = None
        if s > 1:
            self._digits = [self._to_digits(i) for i in range(self.q)]
            self._build_log_tables()

    # -- identity ----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, FqField) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FqField({self.spec()})"

    def spec(self) -> str:
        """Textual spec ``p^s`` or ``p^s:c0,c1,...,cs`` accepted by :func:`parse_field`."""
        if self.s == 1:
            return f"{self.p}^1"
        return f"{self.p}^{self.s}:" + ",".join(str(c) for c in self.modulus)

    # -- digit/index conversion -------------------------------------------
    def _to_digits(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.s):
            idx, c = divmod(idx, self.p)
            out.append(c)
        return tuple(out)

    def _from_digits(self, digits: Sequence[int]) -> int:
        idx = 0
        for c in reversed(digits):
            idx = idx * self.p + c % self.p
        return idx

    def digits(self, idx: int) -> tuple[int, ...]:
        if self._digits is not None:
            return self._digits[idx]
        return (idx,)

    def _poly_mulmod(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, s, mod = self.p, self.s, self.modulus
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for k in range(2 * s - 2, s - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(s):
                    prod[k - s + j] -= c * mod[j]
        return tuple(c % p for c in prod[:s])

    def _build_log_tables(self) -> None:
        q = self.q
        order = q - 1
        for g in range(2, q) if q > 2 else range(1, 2):
            exp = [1] * order
            gd = self._digits[g]
            cur = self._digits[1]
            ok = True
            for k in range(1, order):
                cur = self._poly_mulmod(cur, gd)
                idx = self._from_digits(cur)
                if idx == 1:
                    ok = False
                    break
                exp[k] = idx
            if ok:
                log = [0] * q
                for k, v in enumerate(exp):
                    log[v] = k
                self._exp, self._log = exp, log
                return
        raise ArithmeticError("no primitive element found; modulus is not irreducible")

    # -- integer-level arithmetic (indices) --------------------------------
    def iadd(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._digits[a], self._digits[b]
        p = self.p
        return self._from_digits([(x + y) % p for x, y in zip(da, db)])

    def ineg(self, a: int) -> int:
        if self.s == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._from_digits([-x % self.p for x in self._digits[a]])

    def isub(self, a: int, b: int) -> int:
        return self.iadd(a, self.ineg(b))

    def imul(self, a: int, b: int) -> int:
        if self.s == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def iinv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.s == 1:
            return pow(a, -1, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def ipow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.iinv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.s == 1:
            return pow(a, e, self.p)
        return self._exp[self._log[a] * e % (self.q - 1)]

    def tables(self):
        """Addition and multiplication tables as numpy arrays (q x q).

        Only used for vectorised codeword enumeration; limited to q <= 1024.
        """
        import numpy as np

        if self._add_table is None:
            if self.q > 1024:
                raise ValueError(f"tables for q={self.q} exceed the 1024 limit")
            q = self.q
            add = np.empty((q, q), dtype=np.int32)
            mul = np.empty((q, q), dtype=np.int32)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.iadd(a, b)
                    mul[a, b] = self.imul(a, b)
            self._add_table = (add, mul)
        return self._add_table

    # -- element construction ---------------------------------------------
    def __call__(self, value: "int | Sequence[int] | FqElem | str") -> "FqElem":
        if isinstance(value, FqElem):
            value._check(self)
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, int):
            return FqElem(self, value % self.p)
        coeffs = list(value)
        if len(coeffs) > self.s:
            raise ValueError(f"{len(coeffs)} coordinates given for a degree-{self.s} field")
        coeffs += [0] * (self.s - len(coeffs))
        return FqElem(self, self._from_digits(coeffs))

    def element(self, idx: int) -> "FqElem":
        """Element with the given integer index (0 <= idx < q)."""
        if not 0 <= idx < self.q:
            raise ValueError(f"index {idx} outside 0..{self.q - 1}")
        return FqElem(self, idx)

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, 1)

    @property
    def gen(self) -> "FqElem":
        """Residue class of t (the display symbol ``generator_name``)."""
        return FqElem(self, self.p if self.s > 1 else 0)

    def elements(self) -> Iterator["FqElem"]:
        """All q elements in canonical (index) order."""
        if self.q > EXHAUSTIVE_LIMIT:
            raise ValueError(f"refusing to enumerate a field of order {self.q}")
        return (FqElem(self, i) for i in range(self.q))

    def nonzero(self) -> Iterator["FqElem"]:
        return (FqElem(self, i) for i in range(1, self.q))

    def primitive_element(self) -> "FqElem":
        if self.s > 1:
            return FqElem(self, self._exp[1] if self.q > 2 else 1)
        return FqElem(self, _primitive_root_mod(self.p))

    def format(self, idx: int) -> str:
        if self.s == 1:
            return str(idx)
        terms = []
        for k, c in enumerate(self._digits[idx]):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = self.generator_name if k == 1 else f"{self.generator_name}^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def parse(self, text: str) -> "FqElem":
        """Parse ``"c0 + c1*a + c2*a^2"`` style literals (terms in any order)."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty field element literal")
        g = re.escape(self.generator_name)
        term_re = re.compile(rf"^(-?\d*)\*?({g}(?:\^(\d+))?)?$")
        digits = [0] * self.s
        extra: list[int] = []
        for raw in re.split(r"\+(?=.)", text.replace("-", "+-")):
            if not raw:
                continue
            m = term_re.match(raw)
            if not m or (not m.group(1) and not m.group(2)) or m.group(1) == "-" and not m.group(2):
                raise ValueError(f"cannot parse field element term {raw!r}")
            coef_txt, mono, exp_txt = m.groups()
            if coef_txt in ("", "-"):
                coef = -1 if coef_txt == "-" else 1
            else:
                coef = int(coef_txt)
            k = 0 if mono is None else (int(exp_txt) if exp_txt else 1)
            if k and self.s == 1:
                raise ValueError(f"prime field F_{self.p} has no generator {self.generator_name!r}")
            if k < self.s:
                digits[k] += coef
            else:
                # higher powers are reduced through the modulus
                extra.append(self.imul(coef % self.p, self.ipow(self.p, k)))
        out = self._from_digits([d % self.p for d in digits])
        for v in extra:
            out = self.iadd(out, v)
        return FqElem(self, out)


def _primitive_root_mod(p: int) -> int:
    if p == 2:
        return 1
    n = p - 1
    factors = set()
    m, f = n, 2
    while f * f <= m:
        while m % f == 0:
            factors.add(f)
            m //= f
        f += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, n // f, p) != 1 for f in factors):
            return g
    raise ArithmeticError("unreachable: every prime has a primitive root")


class FqElem:
    """An element of an :class:`FqField`; immutable and hashable."""

    __slots__ = ("field", "value")

    def __init__(self, field: FqField, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def _check(self, field: FqField) -> None:
        if field is not self.field and field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {field!r}")

    def _coerce(self, other: "FqElem | int") -> int:
        if isinstance(other, FqElem):
            other._check(self.field)
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.iadd(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.isub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.isub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.imul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.imul(self.value, self.field.iinv(o)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.imul(o, self.field.iinv(self.value)))

    def __neg__(self):
        return FqElem(self.field, self.field.ineg(self.value))

    def __pow__(self, e: int):
        return FqElem(self.field, self.field.ipow(self.value, e))

    def inverse(self) -> "FqElem":
        return FqElem(self.field, self.field.iinv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FqElem):
            return self.value == other.value and self.field == other.field
        if isinstance(other, int):
            # integers embed in the prime subfield, whose indices are 0..p-1
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __lt__(self, other: "FqElem") -> bool:
        return self.value < other.value

    def __int__(self) -> int:
        if self.field.s > 1 and self.value >= self.field.p:
            raise TypeError(f"{self} is not in the prime subfield")
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"FqElem({self}, q={self.field.q})"


def is_nth_power(x: FqElem, n: int) -> bool:
    """True iff the nonzero x equals y**n for some y in its field (n in {2, 3})."""
    if n not in (2, 3):
        raise ValueError(f"only squares and cubes are supported, got n={n}")
    if not x:
        raise ValueError("is_nth_power is undefined for zero")
    q = x.field.q
    d = math.gcd(n, q - 1)
    if d == 1:
        return True
    return x.field.ipow(x.value, (q - 1) // d) == 1


# ---------------------------------------------------------------------------
# Polynomials


class Poly:
    """Dense univariate polynomial over an :class:`FqField`, low degree first."""

    __slots__ = ("field", "_c")

    def __init__(self, field: FqField, coeffs: Iterable["int | FqElem"] = ()):
        self.field = field
        c = []
        for v in coeffs:
            if isinstance(v, FqElem):
                v._check(field)
                c.append(v.value)
            else:
                c.append(field(v).value)
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, field: FqField, c: list[int]) -> "Poly":
        while c and c[-1] == 0:
            c.pop()
        out = cls.__new__(cls)
        out.field = field
        out._c = tuple(c)
        return out

    @classmethod
    def x(cls, field: FqField) -> "Poly":
        return cls._raw(field, [0, 1])

    @property
    def coeffs(self) -> tuple[FqElem, ...]:
        return tuple(FqElem(self.field, v) for v in self._c)

    @property
    def raw(self) -> tuple[int, ...]:
        """Coefficient indices, low degree first."""
        return self._c

    @property
    def degree(self) -> int | float:
        return len(self._c) - 1 if self._c else NEG_INF

    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> FqElem:
        if not self._c:
            raise ValueError("the zero polynomial has no leading coefficient")
        return FqElem(self.field, self._c[-1])

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def _other(self, other: "Poly | FqElem | int") -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other
        return Poly(self.field, [other])

    def __add__(self, other):
        o = self._other(other)
        f = self.field
        a, b = self._c, o._c
        n = max(len(a), len(b))
        return Poly._raw(f, [f.iadd(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Poly._raw(f, [f.ineg(v) for v in self._c])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        f = self.field
        if not self._c or not o._c:
            return Poly._raw(f, [])
        out = [0] * (len(self._c) + len(o._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(o._c):
                    if y:
                        out[i + j] = f.iadd(out[i + j], f.imul(x, y))
        return Poly._raw(f, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        result = Poly._raw(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._other(other)
        f = self.field
        if not o._c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = len(o._c) - 1
        inv_lead = f.iinv(o._c[-1])
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            coef = f.imul(c, inv_lead)
            quot[k - dq] = coef
            for j, y in enumerate(o._c):
                rem[k - dq + j] = f.isub(rem[k - dq + j], f.imul(coef, y))
        return Poly._raw(f, quot), Poly._raw(f, rem[:dq] if dq else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        result = Poly._raw(self.field, [1]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def derivative(self) -> "Poly":
        f = self.field
        return Poly._raw(f, [f.imul(v, k % f.p) for k, v in enumerate(self._c)][1:])

    def monic(self) -> "Poly":
        if not self._c:
            return self
        inv = self.field.iinv(self._c[-1])
        return Poly._raw(self.field, [self.field.imul(v, inv) for v in self._c])

    def __call__(self, x: "FqElem | int") -> FqElem:
        return poly_eval(self, x)

    def eval_index(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self._c):
            acc = f.iadd(f.imul(acc, x), c)
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.field, self._c))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            v = self._c[k]
            if not v:
                continue
            c = self.field.format(v)
            if self.field.s > 1 and " + " in c:
                c = f"({c})"
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(c)
            elif v == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self}, q={self.field.q})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_eval(h: Poly, x: "FqElem | int") -> FqElem:
    if isinstance(x, FqElem):
        x._check(h.field)
        xi = x.value
    else:
        xi = h.field(x).value
    return FqElem(h.field, h.eval_index(xi))


def poly_from_roots(roots: Iterable["FqElem | int"], leading: "FqElem | int" = 1, field: FqField | None = None) -> Poly:
    """``leading * prod (t - r)`` over the roots' field."""
    roots = list(roots)
    if field is None:
        elems = [r for r in roots if isinstance(r, FqElem)]
        if isinstance(leading, FqElem):
            elems.append(leading)
        if not elems:
            raise ValueError("cannot infer the field; pass field=")
        field = elems[0].field
    out = Poly(field, [leading])
    for r in roots:
        rv = field(r)
        out = out * Poly(field, [-rv, 1])
    return out


def is_separable(h: Poly) -> bool:
    """True iff gcd(h, h') is a nonzero constant."""
    if h.is_zero():
        return False
    return poly_gcd(h, h.derivative()).degree == 0


def roots_exhaustive(h: Poly) -> list[FqElem]:
    """Distinct roots of h in its field, by evaluation at every element."""
    f = h.field
    if f.q > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive root search refused for q={f.q}")
    return [FqElem(f, i) for i in range(f.q) if h.eval_index(i) == 0]


def splits_completely(h: Poly) -> list[FqElem] | None:
    """Roots of h with multiplicity if h is a product of linear factors, else None."""
    if h.is_zero():
        return None
    roots = []
    rest = h
    for r in roots_exhaustive(h):
        lin = Poly(h.field, [-r, 1])
        while True:
            quo, rem = divmod(rest, lin)
            if not rem.is_zero():
                break
            roots.append(r)
            rest = quo
    if rest.degree == 0:
        return roots
    return None


def is_irreducible(f: Poly) -> bool:
    """Ben-Or irreducibility test over the field of f (any degree >= 1)."""
    d = f.degree
    if d == NEG_INF or d < 1:
        return False
    if d == 1:
        return True
    f = f.monic()
    x = Poly.x(f.field)
    q = f.field.q
    xp = x
    for _ in range(1, d // 2 + 1):
        xp = xp.powmod(q, f)
        if poly_gcd(xp - x, f).degree != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Field construction


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FqField:
    return FqField(p, 1, None)


def _smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    base = _prime_field(p)
    # lexicographic in (c0, c1, ..., c_{s-1}) with c0 compared first
    for low in itertools.product(range(p), repeat=s):
        if low[0] == 0:
            continue
        cand = Poly(base, list(low) + [1])
        if is_irreducible(cand):
            return tuple(low) + (1,)
    raise ArithmeticError(f"no irreducible polynomial of degree {s} over F_{p}")


@lru_cache(maxsize=None)
def _make_field_cached(p: int, s: int, modulus: tuple[int, ...] | None, generator_name: str) -> FqField:
    return FqField(p, s, modulus, generator_name)


def make_field(p: int, s: int = 1, modulus: "Poly | Sequence[int] | None" = None, generator_name: str = "a") -> FqField:
    """Build F_{p^s}.

    ``modulus`` is a monic irreducible polynomial of degree s over F_p, given
    as a :class:`Poly` or as integer coefficients low degree first.  When it is
    omitted for s > 1, the smallest irreducible in the order that compares the
    constant term first is used.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if s < 1:
        raise ValueError(f"extension degree must be >= 1, got {s}")
    if p > MAX_PRIME:
        raise ValueError(f"prime {p} exceeds the supported range")
    if s > 1 and p**s > MAX_EXTENSION_ORDER:
        raise ValueError(f"extension field of order {p}^{s} exceeds {MAX_EXTENSION_ORDER}")
    if s == 1:
        if modulus is not None:
            mod = _modulus_tuple(p, modulus)
            if len(mod) != 2 or mod[1] != 1:
                raise ValueError("a prime-field modulus must be monic of degree 1")
        return _make_field_cached(p, 1, None, generator_name)
    if modulus is None:
        mod = _smallest_irreducible(p, s)
    else:
        mod = _modulus_tuple(p, modulus)
        if len(mod) - 1 != s:
            raise ValueError(f"modulus has degree {len(mod) - 1}, expected {s}")
        if mod[-1] != 1:
            raise ValueError("modulus must be monic")
        if not is_irreducible(Poly(_prime_field(p), list(mod))):
            raise ValueError(f"modulus {list(mod)} is reducible over F_{p}")
    return _make_field_cached(p, s, mod, generator_name)


def _modulus_tuple(p: int, modulus: "Poly | Sequence[int]") -> tuple[int, ...]:
    if isinstance(modulus, Poly):
        if modulus.field.q != p:
            raise ValueError("modulus must have coefficients in the prime field")
        c = list(modulus.raw)
    else:
        c = [int(v) % p for v in modulus]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def parse_field(spec: str, generator_name: str = "a") -> FqField:
    """Parse ``"q"``, ``"p^s"`` or ``"p^s:c0,c1,...,cs"`` (modulus low degree first)."""
    spec = spec.strip()
    body, _, mod_txt = spec.partition(":")
    if "^" in body:
        p_txt, s_txt = body.split("^", 1)
        p, s = int(p_txt), int(s_txt)
    else:
        pp = prime_power(int(body))
        if pp is None:
            raise ValueError(f"{body} is not a prime power")
        p, s = pp
    modulus = [int(c) for c in mod_txt.split(",")] if mod_txt else None
    return make_field(p, s, modulus, generator_name)


def parse_poly(field: FqField, text: str) -> Poly:
    """Comma-separated coefficient list, low degree first; entries are element literals."""
    parts = [t for t in text.split(",")]
    if not text.strip():
        return Poly(field, [])
    return Poly(field, [field.parse(t) for t in parts])
