"""Matrices attached to the Alexander polynomial of a 2-bridge knot.

Polynomials are normalized so that A(1) = 1.  A genus-1 knot is described by
a single integer ``b`` and a genus-2 knot by ``(a, b)``:

    genus 1:  A(z) = b + (1-2b) z + b z^2
    genus 2:  A(z) = a + (b-a) z + (1-2b) z^2 + (b-a) z^3 + a z^4
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .zmat import IntMatrix, determinant, inverse_unimodular, mat_mul, mat_pow


@dataclass(frozen=True)
class Genus1:
    b: int

    def __post_init__(self):
        if self.b == 0:
            raise ValueError("b = 0 gives A(z) = 1 (trivial knot); genus 1 needs b != 0")

    genus = 1

    def coefficients(self) -> tuple[int, ...]:
        b = self.b
        return (b, 1 - 2 * b, b)


@dataclass(frozen=True)
class Genus2:
    a: int
    b: int

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("a = 0 drops the degree below 4; use Genus1 instead")

    genus = 2

    def coefficients(self) -> tuple[int, ...]:
        a, b = self.a, self.b
        return (a, b - a, 1 - 2 * b, b - a, a)


AlexanderPoly = Union[Genus1, Genus2]


@dataclass(frozen=True)
class KnotRecord:
    name: str
    poly: AlexanderPoly
    slope: Optional[str] = None
    source: Optional[str] = None


def coefficients(poly: AlexanderPoly) -> tuple[int, ...]:
    return poly.coefficients()


def alexander_eval(poly: AlexanderPoly, z: int) -> int:
    value = 0
    for c in reversed(poly.coefficients()):
        value = value * z + c
    return value


def knot_determinant(poly: AlexanderPoly) -> int:
    """Signed A(-1); its absolute value is the knot determinant."""
    return alexander_eval(poly, -1)


def companion_u_v(coeffs: Sequence[int]) -> tuple[IntMatrix, IntMatrix]:
    """U and V for the relation U X_i + V X_{i+1} = 0 built from (a_0, ..., a_s)."""
    s = len(coeffs) - 1
    if s < 1 or coeffs[0] == 0 or coeffs[-1] == 0:
        raise ValueError(f"need degree >= 1 with nonzero end coefficients, got {tuple(coeffs)}")
    u = [[0] * s for _ in range(s)]
    for i in range(s - 1):
        u[i][i + 1] = -1
    u[s - 1] = list(coeffs[:s])
    v = [[1 if i == j else 0 for j in range(s)] for i in range(s)]
    v[s - 1][s - 1] = coeffs[s]
    return IntMatrix.from_rows(u), IntMatrix.from_rows(v)


def companion_U_V(poly: AlexanderPoly) -> tuple[IntMatrix, IntMatrix]:
    return companion_u_v(poly.coefficients())


def gamma_from_coefficients(coeffs: Sequence[int]) -> IntMatrix:
    u, v = companion_u_v(coeffs)
    # det(U+V) = A(1); must be a unit for an integral inverse
    return mat_mul(inverse_unimodular(u + v), u)


def gamma_matrix(poly: AlexanderPoly) -> IntMatrix:
    return gamma_from_coefficients(poly.coefficients())


def gamma_closed_form(a: int, b: int) -> IntMatrix:
    """Explicit genus-2 Gamma, written out entry by entry."""
    return IntMatrix.from_rows([
        [a, -1 + b, -b, -a],
        [a, b, -b, -a],
        [a, b, 1 - b, -a],
        [a, b, 1 - b, 1 - a],
    ])


def relation_matrix(gamma: IntMatrix, n: int) -> IntMatrix:
    """Gamma^n - (Gamma - I)^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    eye = IntMatrix.identity(gamma.rows)
    return mat_pow(gamma, n) - mat_pow(gamma - eye, n)


def b_matrix(poly: AlexanderPoly, n: int) -> IntMatrix:
    return relation_matrix(gamma_matrix(poly), n)


def circulant_presentation(poly: AlexanderPoly, n: int) -> IntMatrix:
    """A(T_n) for the n x n cyclic shift T_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = poly.coefficients()
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for power, c in enumerate(coeffs):
            rows[i][(i + power) % n] += c
    return IntMatrix.from_rows(rows)


def char_poly_gamma(a: int, b: int) -> tuple[int, ...]:
    """Characteristic polynomial of genus-2 Gamma, constant term first."""
    return (a, -(3 * a + b), 1 + 3 * a + b, -2, 1)


def char_poly_gamma_minus_identity(a: int, b: int) -> tuple[int, ...]:
    return (a, 3 * a + b, 1 + 3 * a + b, 2, 1)


def poly_at_matrix(coeffs: Sequence[int], m: IntMatrix) -> IntMatrix:
    """Horner evaluation of sum c_i m^i."""
    eye = IntMatrix.identity(m.rows)
    acc = IntMatrix.zeros(m.rows)
    for c in reversed(coeffs):
        acc = mat_mul(acc, m) + eye.scale(c)
    return acc


def det_u_plus_zv(poly: AlexanderPoly, z: int) -> int:
    u, v = companion_U_V(poly)
    return determinant(u + v.scale(z))
