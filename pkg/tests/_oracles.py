"""Brute-force oracles shared across the test modules.

Each oracle is deliberately independent of the library code path it
checks: subset filters instead of incremental enumeration, exhaustive
shift scans instead of pruned searches, and weight-grid sweeps instead of
staircase feasibility.
"""

import itertools

from gbfan import (
    LinearShift,
    PointSet,
    WeightOrder,
    bm_reduced_gb,
    box_points,
    monomial_box,
)


def brute_force_order_ideals(p, n, m):
    """All downward-closed m-subsets by filtering every m-subset."""
    box = box_points(p, n)
    out = []
    for subset in itertools.combinations(box, m):
        chosen = set(subset)
        closed = all(
            (*v[:j], c - 1, *v[j + 1 :]) in chosen
            for v in subset
            for j, c in enumerate(v)
            if c
        )
        if closed:
            out.append(tuple(sorted(subset)))
    return sorted(out)


def all_shift_list(p, n):
    pairs = [(a, b) for a in range(1, p) for b in range(p)]
    return [
        LinearShift(p, [ab[0] for ab in combo], [ab[1] for ab in combo])
        for combo in itertools.product(pairs, repeat=n)
    ]


def brute_force_detect(source, target):
    """First shift (by coefficient tuple) mapping source onto target."""
    if len(source) != len(target):
        return None
    tgt = set(target.points)
    for shift in all_shift_list(source.p, source.n):
        if {shift.apply_point(v) for v in source} == tgt:
            return shift
    return None


def brute_force_staircase_shift(points, staircases):
    """Smallest-coefficient (shift, staircase) with shift(staircase) = points."""
    tgt = set(points.points)
    best = None
    for ideal in staircases:
        for shift in all_shift_list(points.p, points.n):
            if {shift.apply_point(v) for v in ideal.points} == tgt:
                if best is None or shift.coefficients() < best[0].coefficients():
                    best = (shift, ideal)
    return best


def weight_grid_bases(points, grid_max=8):
    """Reduced bases over the weight grid {1..grid_max}^n with every lex
    tie-break, deduplicated by the total order induced on the monomial box."""
    p, n = points.p, points.n
    box = monomial_box(p, n)
    seen = {}
    for w in itertools.product(range(1, grid_max + 1), repeat=n):
        for perm in itertools.permutations(range(n)):
            keys = [
                (
                    sum(wi * e for wi, e in zip(w, u)),
                    tuple(u[i] for i in perm),
                )
                for u in box
            ]
            induced = tuple(sorted(range(len(box)), key=keys.__getitem__))
            if induced not in seen:
                seen[induced] = bm_reduced_gb(points, WeightOrder(w, tie=perm))
    return list(seen.values())


def weight_grid_sm_sets(points, grid_max=8):
    return {
        basis.standard_monomials.points
        for basis in weight_grid_bases(points, grid_max)
    }


def random_point_set(rng, p, n, max_size=None):
    box = box_points(p, n)
    cap = len(box) if max_size is None else min(max_size, len(box))
    size = rng.randint(1, cap)
    return PointSet(p, n, rng.sample(box, size))


def random_shift(rng, p, n):
    return LinearShift(
        p,
        [rng.randrange(1, p) for _ in range(n)],
        [rng.randrange(p) for _ in range(n)],
    )
