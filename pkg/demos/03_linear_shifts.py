"""Linear shifts: moving data without moving its leading terms.

A linear shift rescales and translates each coordinate independently
(x_i -> a_i x_i + b_i, a_i nonzero).  Shifted data sets share leading-term
ideals, hence standard monomials and basis counts, and a basis of one set
transports to a basis of the other by substitution alone.
"""

from gbfan import (
    GrevLexOrder,
    PointSet,
    all_reduced_gbs,
    apply_shift,
    bm_reduced_gb,
    detect_shift,
    find_staircase_shift,
    format_polynomial,
    invert_shift,
    transport_gb,
)

names = ("x", "y")

# detecting a shift between two data sets
V1 = PointSet(3, 2, [(0, 0), (0, 1)])
V2 = PointSet(3, 2, [(1, 1), (1, 2)])
V3 = PointSet(3, 2, [(1, 1), (2, 2)])
print("V1 -> V2:", detect_shift(V1, V2))
print("V1 -> V3:", detect_shift(V1, V3))  # no shift exists

# a set that is secretly a shifted staircase
W = PointSet(3, 2, [(0, 1), (0, 2), (2, 2)])
shift, staircase = find_staircase_shift(W)
print("\n", W.points, "=", shift, "applied to", staircase.points)
assert apply_shift(shift, PointSet(3, 2, staircase.points)) == W
print("bases of the shifted set:", len(all_reduced_gbs(W)))

# transporting a basis along a shift instead of recomputing it
order = GrevLexOrder()
base = bm_reduced_gb(PointSet(3, 2, staircase.points), order)
moved = transport_gb(base, shift)
direct = bm_reduced_gb(W, order)
assert moved == direct
print("\ntransported basis:")
for g in moved.generators:
    print("  ", format_polynomial(g.poly, order, names))

# shifts compose and invert like the group they form
round_trip = transport_gb(moved, invert_shift(shift))
assert round_trip == base
