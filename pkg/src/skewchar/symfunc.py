"""Symmetric polynomials on the doubled alphabet x1, x1^-1, ..., xn, xn^-1,
Weyl-ratio evaluation oracles for the non-skew characters, and the
lower-unitriangular inverse pair of e/h matrices used to dualize the
determinant formulas.
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .core import LaurentPoly, Partition, PolyMatrix


class CharacterFamily(Enum):
    GL = "schur"
    SP = "sp"
    SO_ODD = "so"
    O_EVEN = "o"


BC_FAMILIES = (CharacterFamily.SP, CharacterFamily.SO_ODD, CharacterFamily.O_EVEN)


class DegeneratePointError(ValueError):
    """The Weyl denominator determinant vanished; retry with another point."""


def doubled_letters(n):
    """Exponent vectors of the 2n letters x1, x1^-1, ..., xn, xn^-1."""
    letters = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        letters.append(tuple(e))
        e = [0] * n
        e[i] = -1
        letters.append(tuple(e))
    return letters


def plain_letters(n):
    letters = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        letters.append(tuple(e))
    return letters


@lru_cache(maxsize=None)
def _e_table(n, doubled):
    """e_0..e_N as a tuple, N = number of letters."""
    letters = doubled_letters(n) if doubled else plain_letters(n)
    table = [LaurentPoly.one(n)] + [LaurentPoly.zero(n)] * len(letters)
    for ell in letters:
        # process letters one at a time: e_k += e_{k-1} * letter
        for k in range(len(letters), 0, -1):
            table[k] = table[k] + table[k - 1].mul_monomial(ell)
    return tuple(table)


@lru_cache(maxsize=None)
def _h_table(n, rmax, doubled):
    """h_0..h_rmax as a tuple."""
    letters = doubled_letters(n) if doubled else plain_letters(n)
    table = [LaurentPoly.one(n)] + [LaurentPoly.zero(n)] * rmax
    for ell in letters:
        for k in range(1, rmax + 1):
            # with this letter available: h_k += h_{k-1}(same letters) * letter
            table[k] = table[k] + table[k - 1].mul_monomial(ell)
    return tuple(table)


def elementary_pm(r, n):
    """e_r of the doubled alphabet; 0 outside 0 <= r <= 2n."""
    if r < 0 or r > 2 * n:
        return LaurentPoly.zero(n)
    return _e_table(n, True)[r]


def complete_pm(r, n):
    """h_r of the doubled alphabet; 0 for r < 0, h_0 = 1."""
    if r < 0:
        return LaurentPoly.zero(n)
    return _h_table(n, max(r, 1), True)[r]


def elementary_plain(r, n):
    """e_r of x1..xn (used by the general-linear formulas)."""
    if r < 0 or r > n:
        return LaurentPoly.zero(n)
    return _e_table(n, False)[r]


def complete_plain(r, n):
    if r < 0:
        return LaurentPoly.zero(n)
    return _h_table(n, max(r, 1), False)[r]


def _rational_det(rows):
    """Exact determinant of a square matrix of Fractions by elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] * inv
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def weyl_eval(family, lam, point):
    """Exact value of the non-skew character at a point of nonzero rationals.

    For SO_ODD the character has half-integer exponents, so the caller's
    point is read as y with x = y^2: all exponents double and the ratio is
    evaluated in y.  Compare against character polynomials via p(y^2).
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    point = [Fraction(x) for x in point]
    n = len(point)
    if any(x == 0 for x in point):
        raise ValueError("zero coordinate")
    if lam.length() > n:
        raise ValueError("l(lambda) <= n fails: %d > %d" % (lam.length(), n))

    if family is CharacterFamily.GL:
        num = [[x ** (lam.part(j) + n - j) for j in range(1, n + 1)] for x in point]
        den = [[x ** (n - j) for j in range(1, n + 1)] for x in point]
        factor = Fraction(1)
    elif family is CharacterFamily.SP:
        num = [
            [
                x ** (lam.part(j) + n - j + 1) - x ** -(lam.part(j) + n - j + 1)
                for j in range(1, n + 1)
            ]
            for x in point
        ]
        den = [
            [x ** (n - j + 1) - x ** -(n - j + 1) for j in range(1, n + 1)]
            for x in point
        ]
        factor = Fraction(1)
    elif family is CharacterFamily.O_EVEN:
        num = [
            [
                x ** (lam.part(j) + n - j) + x ** -(lam.part(j) + n - j)
                for j in range(1, n + 1)
            ]
            for x in point
        ]
        den = [[x ** (n - j) + x ** -(n - j) for j in range(1, n + 1)] for x in point]
        factor = Fraction(2 if lam.part(n) != 0 else 1)
    elif family is CharacterFamily.SO_ODD:
        # exponents lam_j + n - j + 1/2 become odd integers after x = y^2
        num = [
            [
                y ** (2 * (lam.part(j) + n - j) + 1) - y ** -(2 * (lam.part(j) + n - j) + 1)
                for j in range(1, n + 1)
            ]
            for y in point
        ]
        den = [
            [y ** (2 * (n - j) + 1) - y ** -(2 * (n - j) + 1) for j in range(1, n + 1)]
            for y in point
        ]
        factor = Fraction(1)
    else:
        raise ValueError("unknown family %r" % (family,))

    d = _rational_det(den)
    if d == 0:
        raise DegeneratePointError("denominator determinant vanishes at %r" % (point,))
    return factor * _rational_det(num) / d


def build_E_matrix(N, m, k, t, n):
    """N x N lower-unitriangular matrix e_{i-j} + [j < m + ceil(k/2)] t e_{i+j-2m-k},
    entries over the doubled alphabet."""
    bound = m + -(-k // 2)
    rows = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            entry = elementary_pm(i - j, n)
            if j < bound and t:
                entry = entry + elementary_pm(i + j - 2 * m - k, n).scaled(t)
            row.append(entry)
        rows.append(row)
    return PolyMatrix(rows, n)


def build_H_matrix(N, m, k, t, n):
    """N x N lower-unitriangular inverse of build_E_matrix:
    (-1)^{i-j} (h_{i-j} - [i > m + floor(k/2)] (-1)^k t h_{2m-i-j+k})."""
    bound = m + (k // 2)
    sk = -1 if k & 1 else 1
    rows = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            entry = complete_pm(i - j, n)
            if i > bound and t:
                entry = entry - complete_pm(2 * m - i - j + k, n).scaled(sk * t)
            if (i - j) & 1:
                entry = -entry
            row.append(entry)
        rows.append(row)
    return PolyMatrix(rows, n)
