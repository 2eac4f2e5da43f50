"""One data set, two reduced bases, two competing models.

Three observations of a node z regulated by (x, y) over Z_3:

    (x, y) -> z:   (0,0) -> 0,   (1,0) -> 0,   (2,1) -> 1

The vanishing ideal of the inputs has two reduced Groebner bases, and each
standard-monomial basis fits the same data with a different polynomial.
"""

from gbfan import (
    DataSet,
    PointSet,
    WeightOrder,
    all_reduced_gbs,
    bm_reduced_gb,
    format_polynomial,
    model_select,
    universal_basis,
)

V = PointSet(3, 2, [(0, 0), (1, 0), (2, 1)])
names = ("x", "y")

# two weight orders, two different bases
for weights in [(1, 1), (1, 3)]:
    order = WeightOrder(weights)
    basis = bm_reduced_gb(V, order)
    print(f"weight {weights}:")
    print("  standard monomials:", basis.standard_monomials.points)
    for g in basis.generators:
        print("  ", format_polynomial(g.poly, order, names))

# the complete fan confirms there are exactly these two
fan = all_reduced_gbs(V)
print("\ndistinct reduced bases:", len(fan))

# the union of all bases, keeping each marked generator once
print("universal basis size:", len(universal_basis(V)))

# fitting the observed outputs over each quotient basis
data = DataSet(V, {0: (0, 0, 1)})
for entry in fan.entries:
    model = model_select(data, entry.standard_monomials, 0)
    print(
        "model over",
        entry.standard_monomials.points,
        "->  z =",
        format_polynomial(model, entry.basis.order, names),
    )

# one model says z is driven by y, the other says x: the data cannot
# distinguish the two regulatory structures
