"""Linear shifts of point sets and shift-equivalence classification.

A linear shift acts coordinate-wise as x_i -> a_i x_i + b_i with every
a_i invertible, so it is a bijection of Z_p^n and an equivalence relation
on point sets of equal size.  Shifted point sets have the same number of
reduced Groebner bases, which the classification sweep exploits by
computing one fan per equivalence class.
"""

import itertools
import random
from dataclasses import dataclass
from math import comb

from .errors import BudgetExceeded, DimensionMismatch, ModulusMismatch
from .points import PointSet, box_points, enumerate_order_ideals
from .poly import Polynomial


class LinearShift:
    """Coordinate-wise map x_i -> a_i x_i + b_i with invertible a_i."""

    __slots__ = ("p", "a", "b")

    def __init__(self, p, a, b):
        a = tuple(int(x) % p for x in a)
        b = tuple(int(x) % p for x in b)
        if len(a) != len(b):
            raise DimensionMismatch(f"{len(a)} scales against {len(b)} offsets")
        if any(x == 0 for x in a):
            raise ValueError("every scale coefficient must be nonzero")
        self.p = p
        self.a = a
        self.b = b

    @property
    def n(self):
        return len(self.a)

    @classmethod
    def identity(cls, p, n):
        return cls(p, (1,) * n, (0,) * n)

    def apply_point(self, v):
        if len(v) != self.n:
            raise DimensionMismatch(f"point of length {len(v)}, shift of {self.n}")
        p = self.p
        return tuple((ai * vi + bi) % p for ai, bi, vi in zip(self.a, self.b, v))

    def coefficients(self):
        """Interleaved (a_1, b_1, ..., a_n, b_n), the canonical sort key."""
        out = []
        for ai, bi in zip(self.a, self.b):
            out.append(ai)
            out.append(bi)
        return tuple(out)

    def is_identity(self):
        return all(x == 1 for x in self.a) and all(x == 0 for x in self.b)

    def to_json(self):
        return {"a": list(self.a), "b": list(self.b)}

    def __eq__(self, other):
        return (
            isinstance(other, LinearShift)
            and self.p == other.p
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash((self.p, self.a, self.b))

    def __repr__(self):
        parts = []
        for ai, bi in zip(self.a, self.b):
            term = "x" if ai == 1 else f"{ai}x"
            parts.append(term if bi == 0 else f"{term}+{bi}")
        return f"LinearShift({', '.join(parts)} mod {self.p})"


def apply_shift(shift, points):
    """Image of a point set under a shift, canonically sorted."""
    if shift.p != points.p:
        raise ModulusMismatch(f"shift mod {shift.p} against points mod {points.p}")
    if shift.n != points.n:
        raise DimensionMismatch(f"shift on {shift.n} coordinates, points in {points.n}")
    return PointSet(points.p, points.n, [shift.apply_point(v) for v in points])


def invert_shift(shift):
    """The inverse shift: x_i -> a_i^{-1} x_i - a_i^{-1} b_i."""
    p = shift.p
    a_inv = [pow(ai, -1, p) for ai in shift.a]
    b_inv = [(-ai * bi) % p for ai, bi in zip(a_inv, shift.b)]
    return LinearShift(p, a_inv, b_inv)


def apply_shift_to_polynomial(shift, poly):
    """Substitute a_i x_i + b_i for each variable, expanded and reduced."""
    if shift.p != poly.p:
        raise ModulusMismatch(f"shift mod {shift.p} against polynomial mod {poly.p}")
    if shift.n != poly.n:
        raise DimensionMismatch(
            f"shift on {shift.n} coordinates, polynomial in {poly.n}"
        )
    p, n = poly.p, poly.n
    powers = {}

    def linear_power(i, e):
        got = powers.get((i, e))
        if got is None:
            affine = Polynomial(
                p, n, {tuple(int(j == i) for j in range(n)): shift.a[i], (0,) * n: shift.b[i]}
            )
            got = affine**e
            powers[(i, e)] = got
        return got

    out = Polynomial.zero(p, n)
    for exps, coeff in poly.terms.items():
        term = Polynomial.constant(p, n, coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * linear_power(i, e)
        out = out + term
    return out


def all_shifts(p, n):
    """Every linear shift of Z_p^n, ordered by coefficient tuple."""
    pairs = [(a, b) for a in range(1, p) for b in range(p)]
    for combo in itertools.product(pairs, repeat=n):
        yield LinearShift(p, [ab[0] for ab in combo], [ab[1] for ab in combo])


def detect_shift(source, target):
    """The shift mapping source onto target, or None.

    Per coordinate, the surviving scale/offset pairs are those carrying
    the coordinate multiset of the source onto that of the target; their
    product is scanned in coefficient order, so the returned shift has the
    lexicographically smallest (a_1, b_1, ..., a_n, b_n).
    """
    if source.p != target.p:
        raise ModulusMismatch(f"moduli {source.p} and {target.p}")
    if source.n != target.n:
        raise DimensionMismatch(f"dimensions {source.n} and {target.n}")
    if len(source) != len(target):
        return None
    p, n = source.p, source.n
    if len(source) == 0 or n == 0:
        return LinearShift.identity(p, n)
    target_set = set(target.points)
    candidates = []
    for j in range(n):
        src_col = sorted(v[j] for v in source)
        tgt_col = sorted(v[j] for v in target)
        pairs = [
            (a, b)
            for a in range(1, p)
            for b in range(p)
            if sorted((a * x + b) % p for x in src_col) == tgt_col
        ]
        if not pairs:
            return None
        candidates.append(pairs)
    for combo in itertools.product(*candidates):
        shift = LinearShift(p, [ab[0] for ab in combo], [ab[1] for ab in combo])
        if {shift.apply_point(v) for v in source} == target_set:
            return shift
    return None


def find_staircase_shift(points):
    """A staircase and the shift carrying it onto the points, or None.

    Every staircase of matching size is tried; among the successes the
    pair with the lexicographically smallest shift coefficients wins.
    """
    best = None
    for ideal in enumerate_order_ideals(points.p, points.n, len(points)):
        shift = detect_shift(ideal, points)
        if shift is not None and (
            best is None or shift.coefficients() < best[0].coefficients()
        ):
            best = (shift, ideal)
    return best


@dataclass(frozen=True)
class ShiftClass:
    representative: tuple
    size: int
    gb_count: int
    unique: bool

    def to_json(self):
        return {
            "rep": [list(v) for v in self.representative],
            "size": self.size,
            "gb_count": self.gb_count,
            "unique": self.unique,
        }


@dataclass(frozen=True)
class ClassificationReport:
    p: int
    n: int
    m: int
    total: int
    classes: tuple
    unique_sets: int
    unique_fraction: float
    mode: str = "exhaustive"
    seed: int | None = None

    def to_json(self):
        data = {
            "p": self.p,
            "n": self.n,
            "m": self.m,
            "total": self.total,
            "classes": [c.to_json() for c in self.classes],
            "unique_sets": self.unique_sets,
            "unique_fraction": self.unique_fraction,
        }
        if self.mode != "exhaustive":
            data["mode"] = self.mode
            data["seed"] = self.seed
        return data


def shift_orbit(p, n, points):
    """Every image of a point set under the shift group, canonically sorted."""
    pts = [tuple(int(c) for c in v) for v in points]
    return sorted(
        {tuple(sorted(shift.apply_point(v) for v in pts)) for shift in all_shifts(p, n)}
    )


def _unrank_combination(index, items, m):
    """The index-th m-combination of items in lexicographic order."""
    out = []
    start = 0
    remaining = m
    n_items = len(items)
    while remaining:
        for i in range(start, n_items):
            block = comb(n_items - i - 1, remaining - 1)
            if index < block:
                out.append(items[i])
                start = i + 1
                remaining -= 1
                break
            index -= block
    return tuple(out)


def classify(p, n, m, sample=None, seed=0, max_sets=20000, fan_budget=None):
    """Partition the m-subsets of Z_p^n into shift-equivalence classes.

    Each class is summarized by its lexicographically smallest member,
    its orbit size, and the number of reduced bases of that
    representative; shifted sets share that count, so one fan per class
    suffices.  With sample=k, k subsets are drawn without replacement
    using the seed and only the drawn sets are tallied.
    """
    from .groebner import all_reduced_gbs

    box = box_points(p, n)
    population = comb(len(box), m)
    if sample is None:
        if population > max_sets:
            raise BudgetExceeded(
                f"{population} subsets exceed the budget {max_sets}; "
                "raise max_sets or use sampling"
            )
        subsets = itertools.combinations(box, m)
        total = population
        mode = "exhaustive"
    else:
        if sample < 1:
            raise ValueError(f"sample size must be positive: {sample}")
        k = min(sample, population)
        rng = random.Random(seed)
        ranks = sorted(rng.sample(range(population), k))
        subsets = (_unrank_combination(r, box, m) for r in ranks)
        total = k
        mode = "sample"

    budget = fan_budget or {}
    shifts = list(all_shifts(p, n))
    class_of = {}
    classes = []
    unique_sets = 0
    for subset in subsets:
        entry = class_of.get(subset)
        if entry is None:
            orbit = {
                tuple(sorted(shift.apply_point(v) for v in subset))
                for shift in shifts
            }
            rep = min(orbit)  # orbit regenerable on demand via shift_orbit
            fan = all_reduced_gbs(PointSet(p, n, rep), **budget)
            entry = ShiftClass(
                representative=rep,
                size=len(orbit),
                gb_count=len(fan),
                unique=len(fan) == 1,
            )
            classes.append(entry)
            for member in orbit:
                class_of[member] = entry
        if entry.unique:
            unique_sets += 1

    classes.sort(key=lambda c: c.representative)
    return ClassificationReport(
        p=p,
        n=n,
        m=m,
        total=total,
        classes=tuple(classes),
        unique_sets=unique_sets,
        unique_fraction=unique_sets / total if total else 0.0,
        mode=mode,
        seed=seed if mode == "sample" else None,
    )
