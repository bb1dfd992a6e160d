import itertools

import pytest
from hypothesis import given, settings, strategies as st

from btcodes.ff import (
    FqElem, Poly, is_irreducible, is_nth_power, is_prime, is_separable, jacobi,
    legendre, legendre_euler, make_field, parse_field, parse_poly, poly_from_roots,
    poly_gcd, prime_power, splits_completely,
)

FIELD_PARAMS = [(2, 1), (7, 1), (2, 3), (3, 2), (5, 2), (2, 6), (3, 3), (13, 1)]
FIELDS = {pq: make_field(*pq) for pq in FIELD_PARAMS}


def naive_mul(p, modulus, a, b):
    """Schoolbook product of coefficient vectors reduced by a monic modulus."""
    s = len(modulus) - 1
    prod = [0] * (2 * s)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(2 * s - 1, s - 1, -1):
        c = prod[d]
        if c:
            for k in range(s + 1):
                prod[d - s + k] = (prod[d - s + k] - c * modulus[k]) % p
    return prod[:s]


def elems(field):
    return st.integers(0, field.q - 1).map(field.element)


field_and_three = st.sampled_from(FIELD_PARAMS).flatmap(
    lambda pq: st.tuples(st.just(FIELDS[pq]), elems(FIELDS[pq]), elems(FIELDS[pq]), elems(FIELDS[pq]))
)


@settings(max_examples=300, deadline=None)
@given(field_and_three)
def test_field_axioms(data):
    F, a, b, c = data
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero and a + F.zero == a and a * F.one == a
    if a:
        assert a * a.inverse() == F.one
        assert (a ** (F.q - 1)) == F.one
    assert a**F.q == a


@settings(max_examples=200, deadline=None)
@given(field_and_three)
def test_multiplication_matches_schoolbook(data):
    F, a, b, _ = data
    if F.s == 1:
        assert (a * b).value == a.value * b.value % F.p
    else:
        assert list((a * b).coeffs) == naive_mul(F.p, F.modulus, a.coeffs, b.coeffs)


@pytest.mark.parametrize("pq", FIELD_PARAMS)
def test_format_parse_roundtrip(pq):
    F = FIELDS[pq]
    for x in F.elements():
        assert F.parse(str(x)) == x


def test_parse_variants():
    F = make_field(5, 2, (2, 4, 1))
    assert F.parse("3*a+4") == F.parse("4+3a") == F((4, 3))
    assert F.parse("a^2+1") == F.gen**2 + 1
    assert F.parse("-a") == -F.gen
    assert str(F((4, 3))) == "4 + 3*a"


def test_example_moduli_are_irreducible():
    F25 = make_field(5, 2, (2, 4, 1))
    F64 = make_field(2, 6, (1, 1, 0, 1, 1, 0, 1))
    assert F25.q == 25 and F64.q == 64
    a = F25.gen
    assert a * a + 4 * a + 2 == 0
    b = F64.gen
    assert b**6 + b**4 + b**3 + b + 1 == 0


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        make_field(5, 2, (1, 2, 1))  # (t + 1)^2


def test_default_moduli_are_smallest_irreducible():
    assert make_field(5, 2).modulus == (1, 1, 1)
    assert make_field(2, 4).modulus == (1, 0, 0, 1, 1)
    # brute-force oracle: first monic irreducible in c0-first lexicographic order
    for p, s in [(3, 2), (2, 3), (3, 3), (7, 2)]:
        P = make_field(p)
        for cs in itertools.product(range(p), repeat=s):
            f = Poly(P, list(cs) + [1])
            if _no_factor(P, f):
                break
        assert make_field(p, s).modulus == tuple(cs) + (1,)


def _no_factor(P, f):
    d = int(f.degree)
    for k in range(1, d // 2 + 1):
        for cs in itertools.product(range(P.p), repeat=k):
            g = Poly(P, list(cs) + [1])
            if (f % g).is_zero():
                return False
    return True


def test_parse_field_specs():
    assert parse_field("25") == make_field(5, 2)
    assert parse_field("5^2:2,4,1").modulus == (2, 4, 1)
    assert parse_field("7").q == 7
    with pytest.raises(ValueError):
        parse_field("12")


def test_is_prime_and_prime_power():
    small = [n for n in range(2, 2000) if all(n % d for d in range(2, int(n**0.5) + 1))]
    assert [n for n in range(2000) if is_prime(n)] == small
    assert prime_power(64) == (2, 6) and prime_power(125) == (5, 3)
    assert prime_power(12) is None and prime_power(1) is None
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 37, 101, 229])
def test_legendre_matches_square_table(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(-p, 2 * p):
        want = 0 if a % p == 0 else (1 if a % p in squares else -1)
        assert legendre(a, p) == want == legendre_euler(a, p)


def test_legendre_small_values():
    assert legendre(2, 7) == 1
    assert jacobi(2, 15) == 1
    assert jacobi(2, 343) == 1
    with pytest.raises(ValueError):
        legendre(3, 9)
    with pytest.raises(ValueError):
        jacobi(3, 10)


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(1, 5000).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative(a, b, n):
    assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


@pytest.mark.parametrize("pq", [(7, 1), (13, 1), (5, 2), (2, 6), (3, 3), (2, 4)])
@pytest.mark.parametrize("n", [2, 3])
def test_is_nth_power_by_enumeration(pq, n):
    F = FIELDS.get(pq) or make_field(*pq)
    powers = {(y**n).value for y in F.nonzero()}
    for x in F.nonzero():
        assert is_nth_power(x, n) == (x.value in powers)


def test_is_nth_power_rejects_zero():
    F = make_field(7)
    with pytest.raises(ValueError):
        is_nth_power(F.zero, 2)


poly_coeffs = st.lists(st.integers(0, 24), max_size=7)


@settings(max_examples=200, deadline=None)
@given(poly_coeffs, poly_coeffs.filter(lambda c: any(c)))
def test_poly_divmod(a, b):
    F = FIELDS[(5, 2)]
    A = Poly(F, [F.element(x) for x in a])
    B = Poly(F, [F.element(x) for x in b])
    qt, rm = divmod(A, B)
    assert qt * B + rm == A
    assert rm.is_zero() or rm.degree < B.degree


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 63), min_size=1, max_size=8, unique=True))
def test_from_roots_splits(rs):
    F = FIELDS[(2, 6)]
    roots = [F.element(r) for r in rs]
    h = poly_from_roots(roots, field=F)
    assert h.is_monic() and h.degree == len(roots)
    assert sorted(splits_completely(h)) == sorted(roots)
    assert is_separable(h)
    assert all(h(r) == 0 for r in roots)


def test_repeated_root_not_separable():
    F = make_field(7)
    h = poly_from_roots([1, 1, 2], field=F)
    assert not is_separable(h)
    assert splits_completely(h) == [F(1), F(1), F(2)]


def test_gcd_and_derivative():
    F = make_field(7)
    a = poly_from_roots([1, 2, 3], field=F)
    b = poly_from_roots([2, 3, 4], field=F)
    assert poly_gcd(a, b) == poly_from_roots([2, 3], field=F)
    t = Poly.x(F)
    assert (t**7).derivative().is_zero()


@pytest.mark.parametrize("p,deg", [(2, 4), (3, 3), (5, 2)])
def test_irreducibility_against_factor_search(p, deg):
    P = make_field(p)
    for cs in itertools.product(range(p), repeat=deg):
        f = Poly(P, list(cs) + [1])
        assert is_irreducible(f) == _no_factor(P, f)


def test_field_mismatch():
    a = make_field(5, 2).one
    b = make_field(7).one
    with pytest.raises(ValueError):
        a + b


def test_parse_poly_low_degree_first():
    F = make_field(7)
    h = parse_poly(F, "1,0,1")
    assert h == Poly.x(F) ** 2 + 1
    assert str(h) == "t^2 + 1"


def test_int_equality_and_order():
    F = make_field(5, 2)
    assert F(3) == 3 and F(3) == 8
    assert isinstance(F.gen, FqElem) and F.gen != 0
    assert sorted(F.elements()) == list(F.elements())
