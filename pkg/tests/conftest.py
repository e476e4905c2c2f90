"""Shared builders for the test suite: matrices, ring elements, seeded data."""

from fractions import Fraction

import pytest

from starinv import GF, QQ, ExactMatrix, ZnElement, dagger


def M(rows, field=QQ):
    return ExactMatrix.from_rows(rows, field)


def z(value, n=6):
    return ZnElement(value % n, n)


def random_rational_matrix(rng, rows, cols):
    """Entries with numerators in [-9, 9] and denominators in [1, 9]."""
    ents = [
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rows * cols)
    ]
    return ExactMatrix(rows, cols, ents, QQ)


def random_singular_matrix(rng, n, r=None):
    """An n x n rational matrix of rank at most r (default: n - 1).

    Square random rational matrices are invertible almost surely, which makes
    every Peirce corner collapse; order-relation tests need genuine corners.
    """
    if r is None:
        r = n - 1
    left = random_rational_matrix(rng, n, r)
    right = random_rational_matrix(rng, r, n)
    return left * right


def random_inner_inverse(rng, a):
    """A random member of a{1} built from the corner form around dagger(a)."""
    d = dagger(a)
    m, n = a.shape
    p = a * d
    q = d * a
    eye_m = ExactMatrix.identity(m, a.field)
    eye_n = ExactMatrix.identity(n, a.field)
    u1 = random_rational_matrix(rng, n, m)
    u2 = random_rational_matrix(rng, n, m)
    u3 = random_rational_matrix(rng, n, m)
    k = d + q * u1 * (eye_m - p) + (eye_n - q) * u2 * p + (eye_n - q) * u3 * (eye_m - p)
    assert a * k * a == a
    return k


@pytest.fixture(scope="session")
def gf2():
    return GF(2)


@pytest.fixture(scope="session")
def gf3():
    return GF(3)
