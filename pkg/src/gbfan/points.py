"""Finite point sets in Z_p^n and staircases of exponent vectors.

Points and exponent vectors share one representation, so a staircase can
be read as a set of monomials or as a set of data points without any
conversion.
"""

import itertools
from functools import lru_cache

from .errors import DimensionMismatch, EmptyStaircase
from .field import MatrixZp, gf2_row_rank, is_prime, modp_row_rank


@lru_cache(maxsize=None)
def _box(p, n):
    return tuple(itertools.product(range(p), repeat=n))


def box_points(p, n):
    """All points of Z_p^n in lexicographic order."""
    if not is_prime(p):
        raise ValueError(f"p must be prime: {p}")
    return list(_box(p, n))


@lru_cache(maxsize=None)
def _pow_table(p):
    # value ** exponent, exponents up to the cap p
    return tuple(tuple(pow(v, e, p) for e in range(p + 1)) for v in range(p))


def eval_monomial(point, exponents, p):
    """Value of x^exponents at a point, exactly over Z_p."""
    table = _pow_table(p)
    out = 1
    for v, e in zip(point, exponents):
        if e:
            out = out * (table[v][e] if e <= p else pow(v, e, p)) % p
            if not out:
                return 0
    return out


class PointSet:
    """Distinct points of Z_p^n, stored in canonical (lexicographic) order."""

    __slots__ = ("p", "n", "points")

    def __init__(self, p, n, points):
        if not is_prime(p):
            raise ValueError(f"p must be prime: {p}")
        if n < 0:
            raise ValueError(f"n must be nonnegative: {n}")
        seen = set()
        cleaned = []
        for v in points:
            t = tuple(int(c) for c in v)
            if len(t) != n:
                raise DimensionMismatch(
                    f"point {t} has {len(t)} coordinates, expected {n}"
                )
            if any(c < 0 or c >= p for c in t):
                raise ValueError(f"coordinates of {t} must lie in [0, {p})")
            if t in seen:
                raise ValueError(f"duplicate point {t}")
            seen.add(t)
            cleaned.append(t)
        self.p = p
        self.n = n
        self.points = tuple(sorted(cleaned))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, v):
        return tuple(v) in set(self.points)

    def __eq__(self, other):
        return (
            isinstance(other, PointSet)
            and self.p == other.p
            and self.n == other.n
            and self.points == other.points
        )

    def __hash__(self):
        return hash((self.p, self.n, self.points))

    def __repr__(self):
        return f"{type(self).__name__}(p={self.p}, n={self.n}, {list(self.points)})"

    def union(self, extra):
        pts = set(self.points)
        for v in extra:
            pts.add(tuple(int(c) for c in v))
        return PointSet(self.p, self.n, pts)

    def complement(self):
        """Points of the ambient box not in this set."""
        inside = set(self.points)
        return PointSet(
            self.p, self.n, [v for v in _box(self.p, self.n) if v not in inside]
        )

    def to_json(self):
        return {"p": self.p, "n": self.n, "points": [list(v) for v in self.points]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), int(data["n"]), data["points"])


class OrderIdealSet(PointSet):
    """A downward-closed set of exponent vectors inside [0, p)^n."""

    __slots__ = ()

    def __init__(self, p, n, members):
        super().__init__(p, n, members)
        inside = set(self.points)
        for v in self.points:
            for j, c in enumerate(v):
                if c and (*v[:j], c - 1, *v[j + 1 :]) not in inside:
                    raise ValueError(
                        f"{list(self.points)} is not downward closed at {v}"
                    )

    @property
    def members(self):
        return self.points


def is_staircase(points):
    """Whether a set, read as exponent vectors, is downward closed."""
    if isinstance(points, PointSet):
        pts = set(points.points)
    else:
        pts = {tuple(int(c) for c in v) for v in points}
    for v in pts:
        for j, c in enumerate(v):
            if c and (*v[:j], c - 1, *v[j + 1 :]) not in pts:
                return False
    return True


def _exponent_list(monomials):
    if isinstance(monomials, PointSet):
        return list(monomials.points)
    return [tuple(int(x) for x in u) for u in monomials]


def evaluation_matrix(monomials, points, p=None):
    """Matrix of monomial values: entry (i, j) is the j-th monomial at the i-th point.

    A PointSet argument contributes its canonical order; a plain sequence
    of points is used exactly in the order given.
    """
    mons = _exponent_list(monomials)
    if isinstance(points, PointSet):
        pts = list(points.points)
        p = points.p
    else:
        pts = [tuple(int(c) for c in v) for v in points]
        if p is None and isinstance(monomials, PointSet):
            p = monomials.p
    if p is None:
        raise ValueError("p is required when neither argument is a PointSet")
    dims = {len(u) for u in mons} | {len(v) for v in pts}
    if len(dims) > 1:
        raise DimensionMismatch(f"mixed ambient dimensions {sorted(dims)}")
    rows = [[eval_monomial(v, u, p) for u in mons] for v in pts]
    return MatrixZp(p, rows)


def is_basic(staircase, points):
    """Whether the monomials form a quotient basis for the ideal of the points.

    True exactly when the evaluation matrix is square and invertible.
    """
    mons = _exponent_list(staircase)
    pts = list(points.points)
    p = points.p
    if len(mons) != len(pts):
        return False
    if not mons:
        return True
    if p == 2:
        masks = [
            sum(
                1 << j
                for j, u in enumerate(mons)
                if eval_monomial(v, u, 2)
            )
            for v in pts
        ]
        return gf2_row_rank(masks) == len(pts)
    rows = [[eval_monomial(v, u, p) for u in mons] for v in pts]
    return modp_row_rank(rows, p) == len(pts)


def layer(staircase, j, i):
    """Slice of a staircase at value i of coordinate j, with j deleted."""
    if not 0 <= j < staircase.n:
        raise IndexError(f"coordinate {j} outside 0..{staircase.n - 1}")
    members = [u[:j] + u[j + 1 :] for u in staircase.points if u[j] == i]
    return OrderIdealSet(staircase.p, staircase.n - 1, members)


def height(staircase, j):
    """One plus the largest value of coordinate j across the staircase."""
    if not staircase.points:
        raise EmptyStaircase("height of an empty staircase")
    if not 0 <= j < staircase.n:
        raise IndexError(f"coordinate {j} outside 0..{staircase.n - 1}")
    return 1 + max(u[j] for u in staircase.points)


@lru_cache(maxsize=None)
def _order_ideal_tuples(p, n, m):
    box = _box(p, n)
    out = []
    chosen = []
    chosen_set = set()

    def extend(start):
        if len(chosen) == m:
            out.append(tuple(chosen))
            return
        # lexicographic prefixes of a staircase are staircases, so growing
        # past the last chosen element reaches every staircase exactly once
        for idx in range(start, len(box)):
            if len(box) - idx < m - len(chosen):
                break
            v = box[idx]
            ok = True
            for j, c in enumerate(v):
                if c and (*v[:j], c - 1, *v[j + 1 :]) not in chosen_set:
                    ok = False
                    break
            if ok:
                chosen.append(v)
                chosen_set.add(v)
                extend(idx + 1)
                chosen_set.discard(v)
                chosen.pop()

    extend(0)
    return tuple(out)


def enumerate_order_ideals(p, n, m):
    """All downward-closed m-subsets of [0, p)^n.

    Results are ordered lexicographically on their sorted member lists,
    each staircase appearing exactly once.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime: {p}")
    if not 1 <= m <= p**n:
        raise ValueError(f"m must lie in [1, {p**n}], got {m}")
    return [OrderIdealSet(p, n, members) for members in _order_ideal_tuples(p, n, m)]
