"""A Boolean model of the lac operon, end to end.

Four variables: M (mRNA), L (internal lactose), Le (external lactose),
Ge (external glucose).  The Boolean update rules translate to polynomials
over Z_2, the state space splits into four components, and each component
is a shifted staircase, so each pins down exactly one basis.
"""

from gbfan import (
    DataSet,
    all_reduced_gbs,
    detect_shift,
    enumerate_models,
    format_polynomial,
    lac_boolean_model,
    lac_fds,
    state_space,
    transport_gb,
    weak_components,
)

names = ("M", "L", "Le", "Ge")
system = lac_fds()
print("update polynomials (OR -> x+y+xy, AND -> xy, NOT -> x+1):")
for name, f, rule in zip(names, system.components, lac_boolean_model()):
    print(f"  f_{name} = {format_polynomial(f, names=names)}")

graph = state_space(system)
print("\nfixed points:", ["".join(map(str, s)) for s in graph.fixed_points()])

components = weak_components(graph)
for i, comp in enumerate(components, start=1):
    print(f"C{i} =", "{" + ", ".join("".join(map(str, v)) for v in comp.points) + "}")

# C1 is a staircase; its single basis is tiny
fan1 = all_reduced_gbs(components[0])
g1 = fan1.entries[0].basis
print("\nG1 =", [format_polynomial(g.poly, g1.order, names) for g in g1.generators])
print("standard monomials:", g1.standard_monomials.points)

# C2..C4 are shifts of C1: their bases come from substitution, no
# interpolation needed
for i, comp in enumerate(components[1:], start=2):
    shift = detect_shift(components[0], comp)
    moved = transport_gb(g1, shift)
    gens = [format_polynomial(g.poly, moved.order, names) for g in moved.generators]
    print(f"G{i} = {gens}   via {shift}")

# each component's data selects exactly one model per coordinate, but that
# model is blind to the monomials outside the tiny staircase
data = DataSet.from_fds(system, components[0])
models = enumerate_models(data)
print("\nmodels fitted on C1 alone:")
for name, per_coord in zip(names, models.models):
    print(f"  f_{name} ~ {format_polynomial(per_coord[0], names=names)}")
