"""Exact arithmetic and linear algebra over prime fields Z_p."""

from functools import lru_cache

import numpy as np

from .errors import ModulusMismatch, SingularMatrix, ZeroInverse


@lru_cache(maxsize=None)
def is_prime(p):
    """Deterministic trial-division primality test."""
    if not isinstance(p, int) or isinstance(p, bool):
        return False
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeModulus:
    """A prime p in [2, 2^31 - 1], the context every field value carries."""

    __slots__ = ("p",)

    def __init__(self, p):
        if isinstance(p, bool) or not isinstance(p, int):
            raise ValueError(f"modulus must be an integer, got {p!r}")
        if p < 2 or p > 2**31 - 1:
            raise ValueError(f"modulus out of range: {p}")
        if not is_prime(p):
            raise ValueError(f"modulus must be prime: {p}")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeModulus) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeModulus", self.p))

    def __repr__(self):
        return f"PrimeModulus({self.p})"

    def scalar(self, value):
        return Scalar(value, self)


class Scalar:
    """An element of Z_p, always stored reduced to [0, p)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value, modulus):
        if isinstance(modulus, int):
            modulus = PrimeModulus(modulus)
        self.modulus = modulus
        self.value = int(value) % modulus.p

    @property
    def p(self):
        return self.modulus.p

    def _value_of(self, other):
        if isinstance(other, Scalar):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"mixed moduli {self.p} and {other.p}"
                )
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._value_of(other)
        if v is None:
            return NotImplemented
        return Scalar(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._value_of(other)
        if v is None:
            return NotImplemented
        return Scalar(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._value_of(other)
        if v is None:
            return NotImplemented
        return Scalar(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._value_of(other)
        if v is None:
            return NotImplemented
        return Scalar(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.value, self.modulus)

    def __pow__(self, exponent):
        if exponent < 0 and self.value == 0:
            raise ZeroInverse(f"0 has no inverse mod {self.p}")
        return Scalar(pow(self.value, exponent, self.p), self.modulus)

    def inverse(self):
        return scalar_inverse(self)

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and self.modulus == other.modulus
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Scalar({self.value}, mod {self.p})"


def scalar_inverse(a):
    """Multiplicative inverse in Z_p; zero has none."""
    if a.value == 0:
        raise ZeroInverse(f"0 has no inverse mod {a.p}")
    return Scalar(pow(a.value, -1, a.p), a.modulus)


class MatrixZp:
    """Dense matrix over Z_p backed by a reduced integer array."""

    __slots__ = ("modulus", "array")

    def __init__(self, modulus, rows):
        if isinstance(modulus, int):
            modulus = PrimeModulus(modulus)
        p = modulus.p
        data = []
        width = None
        for row in rows:
            cleaned = []
            for x in row:
                if isinstance(x, Scalar):
                    if x.modulus != modulus:
                        raise ModulusMismatch(
                            f"entry mod {x.p} in a matrix mod {p}"
                        )
                    cleaned.append(x.value)
                else:
                    cleaned.append(int(x) % p)
            if width is None:
                width = len(cleaned)
            elif len(cleaned) != width:
                raise ValueError("rows of unequal length")
            data.append(cleaned)
        if width is None:
            width = 0
        self.modulus = modulus
        self.array = np.array(data, dtype=np.int64).reshape(len(data), width)

    @property
    def p(self):
        return self.modulus.p

    @property
    def rows(self):
        return self.array.shape[0]

    @property
    def cols(self):
        return self.array.shape[1]

    def entry(self, i, j):
        return Scalar(int(self.array[i, j]), self.modulus)

    def transpose(self):
        return MatrixZp(self.modulus, self.array.T.tolist())

    def to_lists(self):
        return self.array.tolist()

    def matvec(self, values):
        vec = [v.value if isinstance(v, Scalar) else int(v) for v in values]
        if len(vec) != self.cols:
            raise ValueError(f"expected {self.cols} values, got {len(vec)}")
        prod = self.array @ np.array(vec, dtype=np.int64)
        return [int(x) % self.p for x in prod]

    def __eq__(self, other):
        return (
            isinstance(other, MatrixZp)
            and self.modulus == other.modulus
            and self.array.shape == other.array.shape
            and bool((self.array == other.array).all())
        )

    def __hash__(self):
        return hash((self.p, self.array.shape, tuple(self.array.ravel())))

    def __repr__(self):
        return f"MatrixZp(mod {self.p}, {self.array.tolist()})"


def rank(matrix):
    """Rank over Z_p by Gaussian elimination with first-nonzero pivoting."""
    a = matrix.array.copy()
    p = matrix.p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        for i in range(nrows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        r += 1
    return r


def solve(matrix, rhs):
    """Unique solution of M x = rhs for invertible square M over Z_p."""
    p = matrix.p
    m = matrix.rows
    if matrix.cols != m:
        raise SingularMatrix(f"matrix is {matrix.rows}x{matrix.cols}, not square")
    vec = []
    for v in rhs:
        if isinstance(v, Scalar):
            if v.modulus != matrix.modulus:
                raise ModulusMismatch(f"rhs mod {v.p} against matrix mod {p}")
            vec.append(v.value)
        else:
            vec.append(int(v) % p)
    if len(vec) != m:
        raise ValueError(f"rhs has length {len(vec)}, expected {m}")
    sol = modp_solve_columns(matrix.array.tolist(), [vec], p)[0]
    return [Scalar(x, matrix.modulus) for x in sol]


def inverse(matrix):
    """Matrix inverse over Z_p."""
    p = matrix.p
    m = matrix.rows
    if matrix.cols != m:
        raise SingularMatrix(f"matrix is {matrix.rows}x{matrix.cols}, not square")
    cols = [[int(i == j) for i in range(m)] for j in range(m)]
    sols = modp_solve_columns(matrix.array.tolist(), cols, p)
    inv_rows = [[sols[j][i] for j in range(m)] for i in range(m)]
    return MatrixZp(matrix.modulus, inv_rows)


def modp_solve_columns(rows, columns, p):
    """Solve A x = c over Z_p for each column c at once.

    A is given as a square list of integer rows.  Raises SingularMatrix
    when A has deficient rank.
    """
    m = len(rows)
    aug = [list(rows[i]) + [col[i] % p for col in columns] for i in range(m)]
    for c in range(m):
        piv = None
        for r in range(c, m):
            if aug[r][c] % p:
                piv = r
                break
        if piv is None:
            raise SingularMatrix(f"rank below {m}")
        if piv != c:
            aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, p)
        aug[c] = [x * inv % p for x in aug[c]]
        for r in range(m):
            if r != c and aug[r][c]:
                f = aug[r][c]
                row_c = aug[c]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], row_c)]
    return [[aug[i][m + k] for i in range(m)] for k in range(len(columns))]


def modp_row_rank(rows, p):
    """Rank of a list of integer rows over Z_p; pure-Python hot path."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        piv = None
        for i in range(r, len(work)):
            if work[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [x * inv % p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] % p:
                f = work[i][c]
                row_r = work[r]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], row_r)]
        r += 1
    return r


def gf2_row_rank(masks):
    """Rank over Z_2 of rows packed as integer bit masks."""
    pivots = {}
    r = 0
    for mask in masks:
        cur = mask
        while cur:
            hb = cur.bit_length() - 1
            other = pivots.get(hb)
            if other is None:
                pivots[hb] = cur
                r += 1
                break
            cur ^= other
    return r
