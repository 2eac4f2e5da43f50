import json
import random

import pytest

from gbfan import (
    BudgetExceeded,
    DimensionMismatch,
    GrevLexOrder,
    GrLexOrder,
    LexOrder,
    LinearShift,
    PointSet,
    Polynomial,
    WeightOrder,
    all_reduced_gbs,
    all_shifts,
    apply_shift,
    apply_shift_to_polynomial,
    box_points,
    classify,
    detect_shift,
    enumerate_order_ideals,
    find_staircase_shift,
    invert_shift,
    parse_polynomial,
)
from _oracles import (
    all_shift_list,
    brute_force_detect,
    brute_force_staircase_shift,
    random_point_set,
    random_shift,
)


def test_linear_shift_validation():
    with pytest.raises(ValueError):
        LinearShift(3, (0, 1), (0, 0))
    with pytest.raises(DimensionMismatch):
        LinearShift(3, (1, 1), (0,))
    shift = LinearShift(3, (4, 2), (3, 5))
    assert shift.a == (1, 2) and shift.b == (0, 2)
    assert shift.coefficients() == (1, 0, 2, 2)


def test_apply_shift_examples():
    phi = LinearShift(3, (2, 2), (0, 2))
    V1 = PointSet(3, 2, [(0, 0), (0, 1), (1, 0)])
    assert apply_shift(phi, V1).points == ((0, 1), (0, 2), (2, 2))

    plus_one = LinearShift(3, (1, 1), (1, 1))
    W = PointSet(3, 2, [(1, 1), (1, 2)])
    assert apply_shift(plus_one, W).points == ((2, 0), (2, 2))

    ident = LinearShift.identity(3, 2)
    assert apply_shift(ident, V1) == V1
    assert len(apply_shift(phi, V1)) == len(V1)  # bijection


def test_invert_shift_examples():
    phi = LinearShift(3, (2, 2), (0, 2))
    psi = invert_shift(phi)
    assert psi.a == (2, 2) and psi.b == (0, 2)
    for v in box_points(3, 2):
        assert psi.apply_point(phi.apply_point(v)) == v
    # characteristic 2: every shift is an involution
    for shift in all_shifts(2, 3):
        assert invert_shift(shift) == shift
        for v in box_points(2, 3):
            assert shift.apply_point(shift.apply_point(v)) == v
    ident = LinearShift.identity(5, 2)
    assert invert_shift(ident) == ident


def test_apply_shift_to_polynomial_examples():
    phi12 = LinearShift(2, (1, 1, 1, 1), (0, 0, 0, 1))
    x4 = Polynomial.variable(2, 4, 3)
    assert apply_shift_to_polynomial(phi12, x4) == parse_polynomial("x4 + 1", 2, 4)

    phi = LinearShift(3, (2,), (2,))
    x_sq = parse_polynomial("x1^2", 3, 1)
    moved = apply_shift_to_polynomial(phi, x_sq)
    assert moved == parse_polynomial("x1^2 + 2*x1 + 1", 3, 1)
    for v in range(3):
        assert moved.evaluate((v,)) == x_sq.evaluate(phi.apply_point((v,)))

    c = Polynomial.constant(3, 2, 2)
    assert apply_shift_to_polynomial(LinearShift(3, (2, 2), (1, 1)), c) == c


def test_detect_shift_examples():
    V1 = PointSet(3, 2, [(0, 0), (0, 1)])
    V2 = PointSet(3, 2, [(1, 1), (1, 2)])
    V3 = PointSet(3, 2, [(1, 1), (2, 2)])
    found = detect_shift(V1, V2)
    assert found == LinearShift(3, (1, 1), (1, 1))
    # exhaustive check over all 36 shifts: the alternative (x+1, 2x+2) maps
    # as well but loses lexicographically
    mapping = [
        s
        for s in all_shift_list(3, 2)
        if {s.apply_point(v) for v in V1} == set(V2.points)
    ]
    assert LinearShift(3, (1, 2), (1, 2)) in mapping
    assert min(s.coefficients() for s in mapping) == found.coefficients()
    assert detect_shift(V1, V3) is None
    assert detect_shift(V1, V1) == LinearShift.identity(3, 2)


def test_detect_shift_size_guard_and_direction():
    A = PointSet(3, 2, [(0, 0)])
    B = PointSet(3, 2, [(0, 0), (1, 1)])
    assert detect_shift(A, B) is None
    C1 = PointSet(2, 4, [(0, 0, 0, 0), (0, 1, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0)])
    C2 = PointSet(2, 4, [(0, 0, 0, 1), (0, 1, 0, 1), (1, 0, 0, 1), (1, 1, 0, 1)])
    phi = detect_shift(C1, C2)
    assert phi == LinearShift(2, (1, 1, 1, 1), (0, 0, 0, 1))
    assert apply_shift(phi, C1) == C2


def test_detect_shift_agrees_with_brute_force():
    rng = random.Random(17)
    for _ in range(120):
        p, n = rng.choice([(2, 2), (2, 3), (3, 2), (3, 3)])
        source = random_point_set(rng, p, n, max_size=5)
        if rng.random() < 0.5:
            target = apply_shift(random_shift(rng, p, n), source)
        else:
            target = random_point_set(rng, p, n, max_size=5)
        expected = brute_force_detect(source, target)
        got = detect_shift(source, target)
        assert got == expected


def test_shift_equivalence_relation():
    rng = random.Random(29)
    for _ in range(40):
        p, n = rng.choice([(2, 2), (3, 2)])
        V = random_point_set(rng, p, n, max_size=4)
        assert detect_shift(V, V) is not None
        W = apply_shift(random_shift(rng, p, n), V)
        U = apply_shift(random_shift(rng, p, n), W)
        assert detect_shift(V, W) is not None
        assert detect_shift(W, V) is not None  # symmetry
        assert detect_shift(V, U) is not None  # transitivity


def test_shift_count():
    assert len(list(all_shifts(2, 3))) == 8
    assert len(list(all_shifts(3, 2))) == 36


def test_leading_monomial_preserved_by_shifts():
    rng = random.Random(37)
    orders = {
        2: [LexOrder((1, 0)), GrLexOrder(), GrevLexOrder(), WeightOrder((2, 1))],
        3: [
            LexOrder((2, 0, 1)),
            GrLexOrder(),
            GrevLexOrder(),
            WeightOrder((1, 2, 3)),
        ],
    }
    for _ in range(120):
        p = rng.choice([2, 3, 5])
        n = rng.choice([2, 3])
        f = Polynomial(
            p,
            n,
            {
                tuple(rng.randint(0, p) for _ in range(n)): rng.randrange(p)
                for _ in range(rng.randint(1, 4))
            },
        )
        if not f:
            continue
        shift = random_shift(rng, p, n)
        g = apply_shift_to_polynomial(shift, f)
        for order in orders[n]:
            assert f.leading_exponent(order) == g.leading_exponent(order)


def test_find_staircase_shift_examples():
    W = PointSet(3, 2, [(0, 1), (0, 2), (2, 2)])
    found = find_staircase_shift(W)
    assert found is not None
    shift, ideal = found
    assert ideal.points == ((0, 0), (0, 1), (1, 0))
    assert apply_shift(shift, PointSet(3, 2, ideal.points)) == W
    # canonical choice validated exhaustively
    oracle = brute_force_staircase_shift(W, enumerate_order_ideals(3, 2, 3))
    assert shift == oracle[0] and ideal.points == oracle[1].points
    assert shift == LinearShift(3, (2, 2), (0, 2))

    U = PointSet(2, 3, [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)])
    assert find_staircase_shift(U) is None

    S = PointSet(3, 2, [(0, 0), (1, 0)])
    shift, ideal = find_staircase_shift(S)
    assert shift == LinearShift.identity(3, 2)
    assert ideal.points == S.points


def test_classify_singletons():
    report = classify(2, 3, 1)
    assert report.total == 8
    assert len(report.classes) == 1
    entry = report.classes[0]
    assert entry.size == 8 and entry.unique and entry.gb_count == 1
    assert report.unique_sets == 8 and report.unique_fraction == 1.0


def test_classify_matches_direct_fans():
    import itertools

    report = classify(2, 2, 2)
    by_member = {}
    for subset in itertools.combinations(box_points(2, 2), 2):
        fan = all_reduced_gbs(PointSet(2, 2, subset))
        by_member[subset] = len(fan)
    assert report.total == 6
    assert sum(c.size for c in report.classes) == 6
    for entry in report.classes:
        assert by_member[entry.representative] == entry.gb_count
    assert report.unique_sets == sum(
        1 for count in by_member.values() if count == 1
    )


def test_classify_class_members_share_gb_count():
    rng = random.Random(41)
    report = classify(2, 3, 3)
    for entry in rng.sample(list(report.classes), 3):
        V = PointSet(2, 3, entry.representative)
        for shift in rng.sample(all_shift_list(2, 3), 3):
            W = apply_shift(shift, V)
            assert len(all_reduced_gbs(W)) == entry.gb_count


def test_classify_sampling_reproducible():
    a = classify(2, 4, 5, sample=40, seed=9)
    b = classify(2, 4, 5, sample=40, seed=9)
    assert a == b
    assert a.total == 40 and a.mode == "sample" and a.seed == 9
    data = a.to_json()
    assert data["mode"] == "sample" and data["seed"] == 9
    c = classify(2, 4, 5, sample=40, seed=10)
    assert c.total == 40


def test_classify_budget():
    with pytest.raises(BudgetExceeded):
        classify(2, 4, 5, max_sets=100)


def test_shift_orbit_members():
    from gbfan import shift_orbit

    report = classify(2, 2, 2)
    orbits = [shift_orbit(2, 2, entry.representative) for entry in report.classes]
    assert [len(orbit) for orbit in orbits] == [entry.size for entry in report.classes]
    seen = [member for orbit in orbits for member in orbit]
    assert len(seen) == len(set(seen)) == report.total
    for orbit, entry in zip(orbits, report.classes):
        assert min(orbit) == entry.representative


def test_classification_report_json_schema():
    report = classify(2, 2, 2)
    data = report.to_json()
    assert set(data) == {
        "p",
        "n",
        "m",
        "total",
        "classes",
        "unique_sets",
        "unique_fraction",
    }
    assert json.dumps(data)
    first = data["classes"][0]
    assert set(first) == {"rep", "size", "gb_count", "unique"}
