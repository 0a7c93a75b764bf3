"""Field arithmetic tests, including exhaustive axiom checks for small orders."""

import pytest

from mcwc.gf import FieldError, field_for_order, field_make, is_prime, prime_power


def brute_force_smallest_irreducible(p, k):
    """Independent modulus oracle: scan candidates and test by root/factor search."""

    def poly_eval(coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        return acc

    def divides(div, poly):
        # polynomial long division, little-endian, monic divisor
        r = list(poly)
        while len(r) >= len(div) and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < len(div):
                break
            lead = r[-1]
            shift = len(r) - len(div)
            for i, c in enumerate(div):
                r[shift + i] = (r[shift + i] - lead * c) % p
        return not any(r)

    def irreducible(poly):
        deg = len(poly) - 1
        for ddeg in range(1, deg // 2 + 1):
            for idx in range(p**ddeg):
                div = []
                t = idx
                for _ in range(ddeg):
                    div.append(t % p)
                    t //= p
                div.append(1)
                if divides(div, poly):
                    return False
        return True

    for idx in range(p**k):
        coeffs = []
        t = idx
        for _ in range(k):
            coeffs.append(t % p)
            t //= p
        poly = tuple(coeffs) + (1,)
        if irreducible(poly):
            return poly
    raise AssertionError


def test_modulus_gf2():
    assert field_make(2, 1).modulus == (0, 1)  # x


def test_modulus_gf4():
    # the only monic irreducible quadratic over GF(2) is x^2 + x + 1
    assert field_make(2, 2).modulus == (1, 1, 1)
    assert brute_force_smallest_irreducible(2, 2) == (1, 1, 1)


def test_modulus_gf9():
    expected = brute_force_smallest_irreducible(3, 2)
    assert expected == (1, 0, 1)  # x^2 + 1
    assert field_make(3, 2).modulus == expected


@pytest.mark.parametrize("p,k", [(2, 3), (2, 4), (3, 3), (5, 2), (7, 2)])
def test_modulus_matches_oracle(p, k):
    assert field_make(p, k).modulus == brute_force_smallest_irreducible(p, k)


def test_prime_field_mul():
    f = field_make(5, 1)
    assert f.mul((3,), (4,)) == (2,)


def test_gf4_generator_square():
    f = field_make(2, 2)
    x = (0, 1)
    assert f.mul(x, x) == (1, 1)  # x^2 = x + 1


def test_inverse_property():
    for q in (2, 3, 4, 5, 7, 8, 9):
        f = field_for_order(q)
        for a in f.elements():
            if a == f.zero():
                continue
            assert f.mul(a, f.inv(a)) == f.one()


def test_inverse_of_zero():
    f = field_make(3, 1)
    with pytest.raises(ZeroDivisionError):
        f.inv(f.zero())


def test_mixed_field_operand():
    f = field_make(2, 2)
    with pytest.raises(FieldError):
        f.add((0, 1), (1,))
    with pytest.raises(FieldError):
        f.mul((0, 3), (1, 0))


SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64]


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    f = field_for_order(q)
    els = f.elements()
    add = [[f.index(f.add(a, b)) for b in els] for a in els]
    mul = [[f.index(f.mul(a, b)) for b in els] for a in els]

    for a in range(q):
        for b in range(q):
            assert add[a][b] == add[b][a]
            assert mul[a][b] == mul[b][a]
    for a in range(q):
        for b in range(q):
            for c in range(q):
                assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
                assert add[add[a][b]][c] == add[a][add[b][c]]
                assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
    one = f.index(f.one())
    for a in range(1, q):
        assert any(mul[a][b] == one for b in range(1, q))


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_multiplicative_group_cyclic(q):
    f = field_for_order(q)
    found = False
    for a in f.elements():
        if a == f.zero():
            continue
        order = 1
        acc = a
        while acc != f.one():
            acc = f.mul(acc, a)
            order += 1
        if order == q - 1:
            found = True
            break
    assert found, f"GF({q}) has no element of order {q - 1}"


def test_errors():
    with pytest.raises(FieldError):
        field_make(4, 1)  # not prime
    with pytest.raises(FieldError):
        field_make(2, 0)
    with pytest.raises(FieldError):
        field_make(2, 13)  # exceeds default order cap
    with pytest.raises(FieldError):
        field_for_order(6)
    with pytest.raises(FieldError):
        field_for_order(12)


def test_prime_power_helper():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    assert prime_power(6) is None
    assert prime_power(1) is None
    assert is_prime(2) and is_prime(97) and not is_prime(91)


def test_canonical_element_order():
    f = field_make(3, 2)
    assert f.element(0) == (0, 0)
    assert f.element(1) == (1, 0)
    assert f.element(3) == (0, 1)
    assert [f.index(f.element(i)) for i in range(9)] == list(range(9))
