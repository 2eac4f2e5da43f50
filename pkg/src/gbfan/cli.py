"""Command-line interface over the library pipelines.

Every command is a thin adapter around one library call, printing JSON by
default (or text / DOT where it makes sense) with deterministic,
byte-for-byte reproducible output for identical inputs and seed.  Exit
codes: 0 success, 2 malformed input, 3 budget exceeded.
"""

import argparse
import json
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

from .errors import BudgetExceeded, GbfanError
from .fds import (
    DataSet,
    FiniteDynamicalSystem,
    enumerate_models,
    lac_fds,
    min_augmentation,
    model_select,
    state_space,
    weak_components,
)
from .groebner import all_reduced_gbs, bm_reduced_gb, transport_gb
from .points import PointSet
from .poly import (
    GrevLexOrder,
    GrLexOrder,
    LexOrder,
    WeightOrder,
    format_polynomial,
)
from .shifts import classify, detect_shift, find_staircase_shift

DEFAULT_SEED = 0


@dataclass(frozen=True)
class RunConfig:
    """Budgets, naming and output options shared by the commands."""

    p: int | None = None
    n: int | None = None
    max_box: int = 64
    max_points: int = 16
    max_sets: int = 20000
    max_augment: int = 8
    names: tuple | None = None
    format: str = "json"
    seed: int = DEFAULT_SEED
    threads: int = 1

    def __post_init__(self):
        for attr in ("max_box", "max_points", "max_sets", "max_augment", "threads"):
            if getattr(self, attr) < 1:
                raise ValueError(f"{attr} must be positive")
        if self.names is not None and len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")

    @classmethod
    def from_file(cls, path):
        data = json.loads(Path(path).read_text())
        if "names" in data and data["names"] is not None:
            data["names"] = tuple(data["names"])
        return cls(**data)


def parse_order_spec(spec, n):
    """Order grammar: lex:<perm> | grlex | grevlex | weight:<w,..>[:tie=<perm>]."""
    head, _, rest = spec.partition(":")
    if head == "grlex":
        return GrLexOrder()
    if head == "grevlex":
        return GrevLexOrder()
    if head == "lex":
        if not rest:
            return LexOrder()
        perm = [int(x) - 1 for x in rest.split(",")]
        if sorted(perm) != list(range(n)):
            raise ValueError(f"lex permutation must list 1..{n} once: {rest}")
        return LexOrder(perm)
    if head == "weight":
        if not rest:
            raise ValueError("weight order needs a weight vector")
        parts = rest.split(":")
        weights = [Fraction(x) for x in parts[0].split(",")]
        if len(weights) != n:
            raise ValueError(f"{len(weights)} weights for {n} variables")
        tie = None
        if len(parts) > 1:
            tie_part = parts[1]
            if not tie_part.startswith("tie="):
                raise ValueError(f"unrecognized order suffix: {tie_part}")
            tie = [int(x) - 1 for x in tie_part[4:].split(",")]
            if sorted(tie) != list(range(n)):
                raise ValueError(f"tie permutation must list 1..{n} once")
        return WeightOrder(weights, tie=tie)
    raise ValueError(f"unknown order spec: {spec}")


def load_point_set(path, p=None, n=None):
    """Point-set file: JSON with p/n/points, or CSV rows with --p/--n."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return PointSet.from_json(json.loads(text))
    if p is None or n is None:
        raise ValueError("CSV point files require --p and --n")
    points = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            points.append([int(c) for c in line.split(",")])
    return PointSet(p, n, points)


def _emit(payload, config):
    if config.format == "text" and isinstance(payload, str):
        print(payload)
    else:
        print(json.dumps(payload, indent=2))


def _gb_json(basis, names=None):
    return {
        "standard_monomials": [list(u) for u in basis.standard_monomials.points],
        "generators": [
            format_polynomial(g.poly, basis.order, names) for g in basis.generators
        ],
    }


def _gb_text(basis, names=None):
    lines = ["standard monomials: " + ", ".join(
        _format_monomial(u, names) for u in basis.standard_monomials.points
    )]
    lines.append("basis:")
    for g in basis.generators:
        lines.append("  " + format_polynomial(g.poly, basis.order, names))
    return "\n".join(lines)


def _format_monomial(exponents, names=None):
    factors = []
    for i, e in enumerate(exponents):
        if not e:
            continue
        name = names[i] if names else f"x{i + 1}"
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def cmd_gb(args, config):
    points = load_point_set(args.points, config.p, config.n)
    order = parse_order_spec(args.order, points.n)
    basis = bm_reduced_gb(points, order)
    if config.format == "text":
        _emit(_gb_text(basis, config.names), config)
    else:
        _emit(_gb_json(basis, config.names), config)
    return 0


def cmd_fan(args, config):
    points = load_point_set(args.points, config.p, config.n)
    fan = all_reduced_gbs(points, max_box=config.max_box, max_points=config.max_points)
    if config.format == "text":
        lines = [f"{len(fan)} reduced bases"]
        for entry in fan.entries:
            lines.append("witness weight " + ",".join(str(w) for w in entry.witness_weight))
            lines.append(_gb_text(entry.basis, config.names))
        _emit("\n".join(lines), config)
    else:
        _emit(fan.to_json(), config)
    return 0


def cmd_unique(args, config):
    points = load_point_set(args.points, config.p, config.n)
    fan = all_reduced_gbs(points, max_box=config.max_box, max_points=config.max_points)
    _emit({"unique": len(fan) == 1, "gb_count": len(fan)}, config)
    return 0


def cmd_staircase(args, config):
    points = load_point_set(args.points, config.p, config.n)
    found = find_staircase_shift(points)
    if found is None:
        _emit({"found": False}, config)
    else:
        shift, ideal = found
        _emit(
            {
                "found": True,
                "shift": shift.to_json(),
                "staircase": [list(u) for u in ideal.points],
            },
            config,
        )
    return 0


def cmd_shift(args, config):
    source = load_point_set(args.source, config.p, config.n)
    target = load_point_set(args.target, config.p, config.n)
    shift = detect_shift(source, target)
    if shift is None:
        _emit({"found": False}, config)
    else:
        _emit({"found": True, "shift": shift.to_json()}, config)
    return 0


def cmd_classify(args, config):
    report = classify(
        args.p,
        args.n,
        args.m,
        sample=args.sample,
        seed=config.seed,
        max_sets=config.max_sets,
        fan_budget={"max_box": config.max_box, "max_points": config.max_points},
    )
    _emit(report.to_json(), config)
    return 0


def _load_fds(path):
    return FiniteDynamicalSystem.from_json(json.loads(Path(path).read_text()))


def cmd_fds_state_space(args, config):
    system = _load_fds(args.fds)
    graph = state_space(system)
    if config.format == "dot":
        print(graph.to_dot())
    elif config.format == "text":
        lines = [
            "".join(str(c) for c in a) + " -> " + "".join(str(c) for c in b)
            for a, b in graph.edges()
        ]
        comps = weak_components(graph)
        lines.append(f"{len(comps)} weakly connected components")
        _emit("\n".join(lines), config)
    else:
        data = graph.to_json()
        data["components"] = [
            [list(v) for v in comp.points] for comp in weak_components(graph)
        ]
        _emit(data, config)
    return 0


def cmd_fds_select(args, config):
    dataset = DataSet.from_json(json.loads(Path(args.data).read_text()))
    order = parse_order_spec(args.order, dataset.n)
    basis = bm_reduced_gb(dataset.inputs, order)
    coords = (
        [args.coordinate - 1] if args.coordinate is not None else dataset.coordinates()
    )
    models = {
        str(j + 1): format_polynomial(
            model_select(dataset, basis.standard_monomials, j), basis.order, config.names
        )
        for j in coords
    }
    _emit(
        {
            "standard_monomials": [
                list(u) for u in basis.standard_monomials.points
            ],
            "models": models,
        },
        config,
    )
    return 0


def cmd_fds_models(args, config):
    dataset = DataSet.from_json(json.loads(Path(args.data).read_text()))
    result = enumerate_models(
        dataset, max_box=config.max_box, max_points=config.max_points
    )
    _emit(result.to_json(), config)
    return 0


def cmd_fds_augment(args, config):
    points = load_point_set(args.points, config.p, config.n)
    k_max = args.max_k if args.max_k is not None else config.max_augment
    found = min_augmentation(points, k_max)
    if found is None:
        _emit({"exhausted": True, "max_k": k_max}, config)
    else:
        k, witness = found
        _emit({"k": k, "witness": [list(v) for v in witness.points]}, config)
    return 0


def cmd_lac_demo(args, config):
    system = lac_fds()
    names = config.names or ("M", "L", "Le", "Ge")
    graph = state_space(system)
    components = weak_components(graph)
    bases = []
    shifts = []
    base = all_reduced_gbs(components[0])
    g1 = base.entries[0].basis
    bases.append(g1)
    for comp in components[1:]:
        shift = detect_shift(components[0], comp)
        shifts.append(shift)
        bases.append(transport_gb(g1, shift))
    payload = {
        "model": [format_polynomial(f, names=names) for f in system.components],
        "components": [[list(v) for v in comp.points] for comp in components],
        "bases": {
            f"G{i + 1}": [
                format_polynomial(g.poly, basis.order, names)
                for g in basis.generators
            ]
            for i, basis in enumerate(bases)
        },
        "shifts": {
            f"phi1{i + 2}": shift.to_json() for i, shift in enumerate(shifts)
        },
        "standard_monomials": [
            list(u) for u in g1.standard_monomials.points
        ],
    }
    if config.format == "text":
        lines = ["update functions:"]
        for name, f in zip(names, system.components):
            lines.append(f"  f_{name} = {format_polynomial(f, names=names)}")
        lines.append("components:")
        for i, comp in enumerate(components):
            states = ", ".join("".join(str(c) for c in v) for v in comp.points)
            lines.append(f"  C{i + 1} = {{{states}}}")
        for i, basis in enumerate(bases):
            gens = ", ".join(
                format_polynomial(g.poly, basis.order, names) for g in basis.generators
            )
            lines.append(f"G{i + 1} = {{{gens}}}")
        for i, shift in enumerate(shifts):
            lines.append(f"phi1{i + 2} = {shift!r}")
        _emit("\n".join(lines), config)
    else:
        _emit(payload, config)
    return 0


def _add_common(parser):
    parser.add_argument("--config", help="JSON file with RunConfig fields")
    parser.add_argument("--format", choices=["json", "text", "dot"], default=None)
    parser.add_argument("--names", help="comma-separated variable names for output")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--p", type=int, default=None, help="modulus for CSV input")
    parser.add_argument("--n", type=int, default=None, help="arity for CSV input")
    parser.add_argument("--max-box", type=int, default=None)
    parser.add_argument("--max-points", type=int, default=None)
    parser.add_argument("--max-sets", type=int, default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gbfan",
        description="Groebner bases of vanishing ideals over prime fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gb", help="reduced basis for one monomial order")
    sp.add_argument("points")
    sp.add_argument("--order", required=True)
    _add_common(sp)
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("fan", help="every reduced basis of the vanishing ideal")
    sp.add_argument("points")
    _add_common(sp)
    sp.set_defaults(func=cmd_fan)

    sp = sub.add_parser("unique", help="uniqueness of the reduced basis")
    sp.add_argument("points")
    _add_common(sp)
    sp.set_defaults(func=cmd_unique)

    sp = sub.add_parser("staircase", help="detect a shifted staircase")
    sp.add_argument("points")
    _add_common(sp)
    sp.set_defaults(func=cmd_staircase)

    sp = sub.add_parser("shift", help="detect a linear shift between two sets")
    sp.add_argument("source")
    sp.add_argument("target")
    _add_common(sp)
    sp.set_defaults(func=cmd_shift)

    sp = sub.add_parser("classify", help="shift-equivalence classification sweep")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--sample", type=int, default=None)
    sp.add_argument("--config", help="JSON file with RunConfig fields")
    sp.add_argument("--format", choices=["json", "text", "dot"], default=None)
    sp.add_argument("--names")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--max-box", type=int, default=None)
    sp.add_argument("--max-points", type=int, default=None)
    sp.add_argument("--max-sets", type=int, default=None)
    sp.set_defaults(func=cmd_classify)

    fds = sub.add_parser("fds", help="finite dynamical system pipelines")
    fds_sub = fds.add_subparsers(dest="fds_command", required=True)

    sp = fds_sub.add_parser("state-space", help="functional graph of a system")
    sp.add_argument("fds")
    _add_common(sp)
    sp.set_defaults(func=cmd_fds_state_space)

    sp = fds_sub.add_parser("select", help="interpolating model for one order")
    sp.add_argument("data")
    sp.add_argument("--order", required=True)
    sp.add_argument("--coordinate", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(func=cmd_fds_select)

    sp = fds_sub.add_parser("models", help="all interpolating models")
    sp.add_argument("data")
    _add_common(sp)
    sp.set_defaults(func=cmd_fds_models)

    sp = fds_sub.add_parser("augment", help="fewest points forcing uniqueness")
    sp.add_argument("points")
    sp.add_argument("--max-k", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(func=cmd_fds_augment)

    sp = sub.add_parser("lac-demo", help="end-to-end lac operon walkthrough")
    _add_common(sp)
    sp.set_defaults(func=cmd_lac_demo)

    return parser


def _build_config(args):
    config = RunConfig.from_file(args.config) if getattr(args, "config", None) else RunConfig()
    overrides = {}
    if getattr(args, "format", None):
        overrides["format"] = args.format
    if getattr(args, "names", None):
        overrides["names"] = tuple(args.names.split(","))
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "threads", None) is not None:
        overrides["threads"] = args.threads
    if getattr(args, "p", None) is not None and args.func is not cmd_classify:
        overrides["p"] = args.p
    if getattr(args, "n", None) is not None and args.func is not cmd_classify:
        overrides["n"] = args.n
    if getattr(args, "max_box", None) is not None:
        overrides["max_box"] = args.max_box
    if getattr(args, "max_points", None) is not None:
        overrides["max_points"] = args.max_points
    if getattr(args, "max_sets", None) is not None:
        overrides["max_sets"] = args.max_sets
    return replace(config, **overrides) if overrides else config


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _build_config(args)
        return args.func(args, config)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GbfanError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
