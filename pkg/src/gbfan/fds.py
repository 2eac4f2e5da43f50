"""Finite dynamical systems over Z_p and data-driven model selection.

Boolean networks translate to polynomial update functions over Z_2
(OR as x+y+xy, AND as xy, NOT as x+1), a system's state space is the
functional graph on Z_p^n, and a data set of input/output pairs selects
one interpolating model per quotient basis of its input ideal.
"""

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, DimensionMismatch, EmptyPointSet, NotBasic
from .groebner import _basic_staircase_count, all_reduced_gbs
from .field import modp_solve_columns
from .points import PointSet, box_points, eval_monomial, is_basic
from .poly import Polynomial, format_polynomial, parse_polynomial


class BooleanExpression:
    """Formula tree over indexed variables with NOT, AND, OR."""

    def evaluate(self, state):
        raise NotImplementedError

    def variables(self):
        raise NotImplementedError


class Var(BooleanExpression):
    __slots__ = ("index",)

    def __init__(self, index):
        if index < 0:
            raise IndexError(f"variable index must be nonnegative: {index}")
        self.index = index

    def evaluate(self, state):
        return int(bool(state[self.index]))

    def variables(self):
        return {self.index}

    def __repr__(self):
        return f"Var({self.index})"


class Not(BooleanExpression):
    __slots__ = ("expr",)

    def __init__(self, expr):
        self.expr = expr

    def evaluate(self, state):
        return 1 - self.expr.evaluate(state)

    def variables(self):
        return self.expr.variables()

    def __repr__(self):
        return f"Not({self.expr!r})"


class And(BooleanExpression):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def evaluate(self, state):
        return self.left.evaluate(state) & self.right.evaluate(state)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __repr__(self):
        return f"And({self.left!r}, {self.right!r})"


class Or(BooleanExpression):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def evaluate(self, state):
        return self.left.evaluate(state) | self.right.evaluate(state)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __repr__(self):
        return f"Or({self.left!r}, {self.right!r})"


def _squarefree(poly):
    # x^k and x agree on {0, 1}, so translated functions stay multilinear
    terms = {}
    for exps, coeff in poly.terms.items():
        key = tuple(min(e, 1) for e in exps)
        terms[key] = (terms.get(key, 0) + coeff) % poly.p
    return Polynomial(poly.p, poly.n, terms)


def boolean_to_poly(expr, n):
    """Translate a Boolean formula into a multilinear polynomial over Z_2."""
    if isinstance(expr, Var):
        if expr.index >= n:
            raise DimensionMismatch(f"variable {expr.index} outside ambient {n}")
        return Polynomial.variable(2, n, expr.index)
    if isinstance(expr, Not):
        return Polynomial.constant(2, n, 1) + boolean_to_poly(expr.expr, n)
    if isinstance(expr, And):
        left = boolean_to_poly(expr.left, n)
        right = boolean_to_poly(expr.right, n)
        return _squarefree(left * right)
    if isinstance(expr, Or):
        left = boolean_to_poly(expr.left, n)
        right = boolean_to_poly(expr.right, n)
        return _squarefree(left + right + left * right)
    raise TypeError(f"not a Boolean expression: {expr!r}")


class FiniteDynamicalSystem:
    """A map Z_p^n -> Z_p^n given by one update polynomial per coordinate."""

    __slots__ = ("p", "n", "components")

    def __init__(self, p, n, components):
        components = tuple(components)
        if len(components) != n:
            raise DimensionMismatch(f"{len(components)} update functions for n={n}")
        for f in components:
            if f.p != p or f.n != n:
                raise DimensionMismatch(
                    f"component over Z_{f.p}^{f.n} inside a system over Z_{p}^{n}"
                )
            for exps in f.terms:
                if any(e > p for e in exps):
                    raise ValueError(f"exponent above the cap {p} in {exps}")
        self.p = p
        self.n = n
        self.components = components

    def apply(self, state):
        v = tuple(int(c) for c in state)
        if len(v) != self.n:
            raise DimensionMismatch(f"state {v} has length {len(v)}, expected {self.n}")
        return tuple(f.evaluate(v) for f in self.components)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteDynamicalSystem)
            and self.p == other.p
            and self.n == other.n
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.p, self.n, self.components))

    def __repr__(self):
        funcs = ", ".join(format_polynomial(f) for f in self.components)
        return f"FiniteDynamicalSystem(mod {self.p}: {funcs})"

    def to_json(self):
        return {
            "p": self.p,
            "n": self.n,
            "functions": [format_polynomial(f) for f in self.components],
        }

    @classmethod
    def from_json(cls, data):
        p, n = int(data["p"]), int(data["n"])
        funcs = [parse_polynomial(text, p, n) for text in data["functions"]]
        return cls(p, n, funcs)


def apply_fds(system, state):
    """One synchronous update step."""
    return system.apply(state)


class StateSpaceGraph:
    """Functional graph of a system: every state has exactly one out-edge."""

    __slots__ = ("p", "n", "nodes", "images")

    def __init__(self, p, n, nodes, images):
        self.p = p
        self.n = n
        self.nodes = tuple(nodes)
        self.images = tuple(images)

    def successor(self, state):
        return self.images[self.nodes.index(tuple(state))]

    def edges(self):
        return list(zip(self.nodes, self.images))

    def fixed_points(self):
        return [a for a, b in zip(self.nodes, self.images) if a == b]

    def _label(self, state):
        return "".join(str(c) for c in state)

    def to_dot(self):
        lines = ["digraph state_space {"]
        for a, b in zip(self.nodes, self.images):
            lines.append(f'  "{self._label(a)}" -> "{self._label(b)}";')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self):
        return {
            "p": self.p,
            "n": self.n,
            "edges": [[list(a), list(b)] for a, b in zip(self.nodes, self.images)],
        }


def state_space(system, max_states=4096):
    """Evaluate the system at every state, in lexicographic node order."""
    count = system.p**system.n
    if count > max_states:
        raise BudgetExceeded(f"{count} states exceed the budget {max_states}")
    nodes = box_points(system.p, system.n)
    images = [system.apply(v) for v in nodes]
    return StateSpaceGraph(system.p, system.n, nodes, images)


def weak_components(graph):
    """Weakly connected components as canonical point sets."""
    index = {v: i for i, v in enumerate(graph.nodes)}
    parent = list(range(len(graph.nodes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in zip(graph.nodes, graph.images):
        ra, rb = find(index[a]), find(index[b])
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for v in graph.nodes:
        groups.setdefault(find(index[v]), []).append(v)
    comps = [PointSet(graph.p, graph.n, members) for members in groups.values()]
    comps.sort(key=lambda c: c.points)
    return comps


class DataSet:
    """Input points with one output sequence per observed coordinate.

    Outputs are aligned with the canonical order of the inputs; the JSON
    form keys coordinates 1-based to match the x1..xn naming while the
    API indexes them 0-based.
    """

    __slots__ = ("p", "n", "inputs", "outputs")

    def __init__(self, inputs, outputs):
        self.p = inputs.p
        self.n = inputs.n
        self.inputs = inputs
        tidy = {}
        for j, values in outputs.items():
            vals = tuple(int(x) % self.p for x in values)
            if len(vals) != len(inputs):
                raise DimensionMismatch(
                    f"{len(vals)} outputs for coordinate {j}, expected {len(inputs)}"
                )
            tidy[int(j)] = vals
        self.outputs = tidy

    @classmethod
    def from_pairs(cls, p, n, pairs):
        """Build from (input, output) tuples; outputs are full states."""
        pairs = [(tuple(a), tuple(b)) for a, b in pairs]
        inputs = PointSet(p, n, [a for a, _ in pairs])
        by_input = dict(pairs)
        width = len(next(iter(by_input.values()))) if pairs else 0
        outputs = {
            j: [by_input[v][j] for v in inputs.points] for j in range(width)
        }
        return cls(inputs, outputs)

    @classmethod
    def from_fds(cls, system, inputs):
        return cls.from_pairs(
            system.p, system.n, [(v, system.apply(v)) for v in inputs.points]
        )

    def coordinates(self):
        return sorted(self.outputs)

    def to_json(self):
        data = self.inputs.to_json()
        data["outputs"] = {
            str(j + 1): list(vals) for j, vals in sorted(self.outputs.items())
        }
        return data

    @classmethod
    def from_json(cls, data):
        inputs = PointSet.from_json(data)
        outputs = {int(k) - 1: v for k, v in data["outputs"].items()}
        return cls(inputs, outputs)


def model_select(dataset, staircase, coordinate):
    """The unique combination of staircase monomials matching the outputs.

    The staircase must be basic for the input points; the interpolant is
    solved exactly from the evaluation matrix.
    """
    if coordinate not in dataset.outputs:
        raise KeyError(f"no outputs for coordinate {coordinate}")
    mons = (
        list(staircase.points)
        if isinstance(staircase, PointSet)
        else [tuple(u) for u in staircase]
    )
    if not is_basic(mons, dataset.inputs):
        raise NotBasic(f"{mons} is not a quotient basis for the inputs")
    p = dataset.p
    rows = [[eval_monomial(v, u, p) for u in mons] for v in dataset.inputs.points]
    rhs = list(dataset.outputs[coordinate])
    coeffs = modp_solve_columns(rows, [rhs], p)[0]
    return Polynomial(p, dataset.n, dict(zip(mons, coeffs)))


@dataclass(frozen=True)
class ModelEnumeration:
    models: tuple
    counts: tuple
    total: int
    fan: object

    def to_json(self):
        return {
            "counts": list(self.counts),
            "total": self.total,
            "models": [
                [format_polynomial(f) for f in per_coord] for per_coord in self.models
            ],
        }


def enumerate_models(dataset, max_box=64, max_points=16):
    """All interpolating models across every quotient basis of the inputs.

    Per coordinate the distinct interpolants are collected in fan order;
    the total is the product of the per-coordinate counts.
    """
    fan = all_reduced_gbs(dataset.inputs, max_box=max_box, max_points=max_points)
    per_coordinate = []
    for j in dataset.coordinates():
        seen = []
        for entry in fan.entries:
            model = model_select(dataset, entry.standard_monomials, j)
            if model not in seen:
                seen.append(model)
        per_coordinate.append(tuple(seen))
    counts = tuple(len(models) for models in per_coordinate)
    total = 1
    for c in counts:
        total *= c
    return ModelEnumeration(
        models=tuple(per_coordinate), counts=counts, total=total, fan=fan
    )


def min_augmentation(points, k_max):
    """Fewest extra points forcing a unique reduced basis.

    Complement subsets are scanned by size and then lexicographically;
    the first subset whose union with the points leaves a single basic
    staircase wins.  Returns (k, witness) or None when k_max is exhausted.
    """
    if len(points) == 0:
        raise EmptyPointSet("empty point set")
    complement = points.complement().points
    for k in range(0, k_max + 1):
        for extra in itertools.combinations(complement, k):
            candidate = points.union(extra)
            if _basic_staircase_count(candidate, limit=2) == 1:
                return k, PointSet(points.p, points.n, extra)
    return None


# Four-variable Boolean model of the lac operon core: mRNA, internal
# lactose, external lactose, external glucose, in that variable order.
LAC_VARIABLES = ("M", "L", "Le", "Ge")

LAC_UPDATE_POLYNOMIALS = (
    "x2*x3*x4 + x2*x3 + x2*x4 + x3*x4 + x2 + x3",
    "x1*x3*x4 + x1*x3",
    "x3",
    "x4",
)


def lac_boolean_model():
    """The reduced four-variable Boolean update rules."""
    m, lac, lac_ext, glc_ext = Var(0), Var(1), Var(2), Var(3)
    return [
        And(Not(glc_ext), Or(lac, lac_ext)),
        And(m, And(lac_ext, Not(glc_ext))),
        lac_ext,
        glc_ext,
    ]


def lac_fds():
    """The lac operon model as a polynomial system over Z_2^4."""
    rules = lac_boolean_model()
    return FiniteDynamicalSystem(2, 4, [boolean_to_poly(e, 4) for e in rules])
