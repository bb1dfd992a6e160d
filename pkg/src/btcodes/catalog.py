"""Worked instances used by the reproduction commands and tests: fields,
polynomials and values with published counterparts."""

from __future__ import annotations

from .ff import FqField, Poly, make_field, poly_from_roots

# F_25 = F_5[a]/(a^2 + 4a + 2), nine-root polynomial with square residues {1, 3, a+1, 3a+4}
F25_MODULUS = (2, 4, 1)
F25_ROOTS = ("2", "a", "a+3", "2a", "2a+1", "2a+2", "3a+1", "4a+1", "4a+3")
F25_SQUARES = ("1", "3", "a+1", "3a+4")

# F_64 = F_2[a]/(a^6 + a^4 + a^3 + a + 1), 21-root polynomial with 14 cube residues
F64_MODULUS = (1, 1, 0, 1, 1, 0, 1)
F64_ROOTS = (
    "0", "a^2", "a^2+a+1", "a^3", "a^3+1", "a^3+a^2+a", "a^4",
    "a^4+a", "a^4+a+1", "a^4+a^2+a+1", "a^4+a^3+a+1", "a^5", "a^5+a^2",
    "a^5+a^2+a", "a^5+a^3+1", "a^5+a^4+a^2+1", "a^5+a^4+a^2+a",
    "a^5+a^3+a^2+a", "a^5+a^4+a^3+1", "a^5+a^4+1", "a^5+a^4+a^2+a+1",
)
F64_CUBE_COUNT = 14

# (p, root set R, beta, h_R(beta), a square root of h_R(beta))
PRIME_FIELD_VALUES = (
    (13, (2, 3, 4, 5), 11, 3, 4),
    (17, (2, 3, 4, 5), 1, 13, 8),
    (19, (2, 3, 4, 6), 12, 4, 2),
    (23, (2, 3, 4, 5), 7, 3, 7),
)

# ell values printed alongside the two worked curves, with the (m, w, kind) they came from;
# the text keeps the unreduced form as displayed
PRINTED_ELLS = (
    ("f25-square", 9, 2, "square", "1/4"),
    ("f64-cube", 21, 8, "cube", "9/48"),
)

# field-size threshold table for the square case
THRESHOLD_TABLE = ((2, 64), (3, 100), (4, 144), (12, 784))


def f25() -> FqField:
    return make_field(5, 2, F25_MODULUS)


def f64() -> FqField:
    return make_field(2, 6, F64_MODULUS)


def f25_poly() -> Poly:
    F = f25()
    return poly_from_roots([F(r) for r in F25_ROOTS], field=F)


def f64_poly() -> Poly:
    F = f64()
    return poly_from_roots([F(r) for r in F64_ROOTS], field=F)
