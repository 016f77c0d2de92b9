"""Command-line front end.

Exit codes: 0 success / SAT / no monochromatic solution, 1 monochromatic
solution found / UNSAT, 2 usage error, 3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .colorings import (
    MonoSolution,
    TableColoring,
    ValuationColoring,
    coloring_from_json,
    explain_obstruction,
    find_monochromatic_solution,
)
from .dimacs import export_dimacs
from .domains import IntegerInterval, RationalBox
from .equations import (
    LinearEquation,
    coefficient_valuation_profile,
    enumerate_solutions,
    make_Lk,
    make_Mk,
)
from .exactnum import check_prime, format_rational, parse_rational
from .regularity import (
    BudgetExceeded,
    default_budget,
    forbidden_ratios,
    min_colors,
    ratio_clique_lower_bound,
    search_coloring,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

COMMANDS = (
    "equation", "color", "solutions", "verify", "ratios",
    "clique", "search", "mincolors", "dimacs", "explain",
)


class UsageError(ValueError):
    pass


@dataclass
class CommandConfig:
    command: str
    family: Optional[str] = None
    k: Optional[int] = None
    coeffs: Optional[str] = None
    equation_file: Optional[str] = None
    p: int = 2
    colors: Optional[int] = None
    max: Optional[int] = None
    height: Optional[int] = None
    format: str = "text"
    symmetry: bool = True
    at_most_one: bool = False
    budget: Optional[int] = None
    jobs: int = 1
    coloring: str = "valuation"
    table: Optional[str] = None
    coloring_file: Optional[str] = None
    values: list = field(default_factory=list)
    allow_negative: bool = False
    output: Optional[str] = None

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command != "color":
            selectors = [self.family is not None, self.coeffs is not None,
                         self.equation_file is not None]
            if sum(selectors) != 1:
                raise UsageError("give exactly one of --family/--k, --coeffs, --equation-file")
            if self.family is not None and self.k is None:
                raise UsageError("--family needs --k")
            if self.family is None and self.k is not None:
                raise UsageError("--k needs --family")
        if self.budget is not None and self.budget <= 0:
            raise UsageError("--budget must be positive")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        if self.format not in ("text", "json"):
            raise UsageError("--format must be text or json")
        try:
            check_prime(self.p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


def build_equation(cfg: CommandConfig) -> LinearEquation:
    if cfg.family is not None:
        maker = {"L": make_Lk, "M": make_Mk}.get(cfg.family.upper())
        if maker is None:
            raise UsageError(f"unknown family {cfg.family!r}; use L or M")
        return maker(cfg.k)
    if cfg.coeffs is not None:
        parts = [s for s in cfg.coeffs.replace(" ", ",").split(",") if s]
        return LinearEquation(tuple(parse_rational(s) for s in parts), "custom")
    doc = json.loads(Path(cfg.equation_file).read_text())
    return LinearEquation.from_json(doc)


def build_domain(cfg: CommandConfig, allow_box: bool = True):
    if cfg.max is not None and cfg.height is not None:
        raise UsageError("give only one of --max and --height")
    if cfg.height is not None:
        if not allow_box:
            raise UsageError("this command works on integer intervals only (--max)")
        return RationalBox(cfg.height)
    if cfg.max is None:
        raise UsageError("--max (or --height) is required")
    return IntegerInterval(cfg.max)


def build_coloring(cfg: CommandConfig, default_colors: Optional[int] = None):
    if cfg.coloring_file is not None:
        return coloring_from_json(json.loads(Path(cfg.coloring_file).read_text()))
    if cfg.coloring == "table":
        if cfg.table is None:
            raise UsageError("--coloring table needs --table")
        entries = tuple(int(s) for s in cfg.table.replace(" ", ",").split(",") if s)
        return TableColoring(entries, cfg.colors)
    if cfg.coloring != "valuation":
        raise UsageError(f"unknown coloring {cfg.coloring!r}")
    k = cfg.colors if cfg.colors is not None else default_colors
    if k is None:
        raise UsageError("--colors is required for a valuation coloring")
    return ValuationColoring(k, cfg.p)


def _need_colors(cfg: CommandConfig) -> int:
    if cfg.colors is None:
        raise UsageError("--colors is required")
    if cfg.colors < 1:
        raise UsageError("--colors must be >= 1")
    return cfg.colors


def _dump(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _tuple_text(asg) -> str:
    return "(" + ", ".join(format_rational(v) for v in asg) + ")"


def _columns(rows, headers) -> str:
    widths = [max(len(str(r[i])) for r in [headers, *rows]) for i in range(len(headers))]
    lines = ["  ".join(str(c).rjust(w) for c, w in zip(row, widths)) for row in [headers, *rows]]
    return "\n".join(lines)


def run(cfg: CommandConfig) -> tuple[int, str]:
    """Execute one command; returns (exit code, output text)."""
    try:
        cfg.validate()
        return _dispatch(cfg)
    except BudgetExceeded as exc:
        if cfg.format == "json":
            return EXIT_BUDGET, _dump(exc.result.to_json())
        return EXIT_BUDGET, f"budget exceeded after {exc.result.nodes} nodes"
    except (ValueError, IndexError, OSError, KeyError) as exc:
        return EXIT_USAGE, f"error: {exc}"


def _dispatch(cfg: CommandConfig) -> tuple[int, str]:
    js = cfg.format == "json"
    if cfg.command == "color":
        coloring = build_coloring(cfg)
        if not cfg.values:
            raise UsageError("give at least one value to color")
        values = [parse_rational(v) for v in cfg.values]
        colors = [coloring.color(v) for v in values]
        if js:
            return EXIT_OK, _dump({
                "coloring": coloring.to_json(),
                "colors": [{"value": format_rational(v), "color": c} for v, c in zip(values, colors)],
            })
        rows = [(format_rational(v), c) for v, c in zip(values, colors)]
        return EXIT_OK, _columns(rows, ("value", "color"))

    eq = build_equation(cfg)
    family_k = cfg.k if cfg.family is not None else None

    if cfg.command == "equation":
        if js:
            return EXIT_OK, _dump(eq.to_json())
        profile = ", ".join(str(v) for v in coefficient_valuation_profile(eq, cfg.p))
        lines = [
            eq.label,
            f"homogeneous: {eq.homogeneous_form()}",
            f"two-sided:   {eq.two_sided_form()}",
            f"ord_{cfg.p} of coefficients: ({profile})",
        ]
        if eq.is_degenerate:
            lines.append("warning: coefficients sum to 0; constant tuples are solutions")
        return EXIT_OK, "\n".join(lines)

    if cfg.command == "solutions":
        domain = build_domain(cfg)
        sols = enumerate_solutions(eq, domain, jobs=cfg.jobs)
        if js:
            return EXIT_OK, _dump({
                "equation": eq.to_json(),
                "domain": domain.describe(),
                "count": len(sols),
                "solutions": [[format_rational(v) for v in s] for s in sols],
            })
        lines = [_tuple_text(s) for s in sols]
        lines.append(f"{len(sols)} solutions")
        return EXIT_OK, "\n".join(lines)

    if cfg.command == "verify":
        domain = build_domain(cfg)
        coloring = build_coloring(cfg, default_colors=family_k)
        w = find_monochromatic_solution(eq, coloring, domain, jobs=cfg.jobs)
        code = EXIT_NEGATIVE if isinstance(w, MonoSolution) else EXIT_OK
        if js:
            return code, _dump(w.to_json())
        if isinstance(w, MonoSolution):
            return code, f"monochromatic solution {_tuple_text(w.assignment)} in color {w.color}"
        return code, f"no monochromatic solution among {w.examined} examined"

    if cfg.command == "ratios":
        ratios = forbidden_ratios(eq, allow_negative=cfg.allow_negative)
        if js:
            return EXIT_OK, _dump([fr.to_json() for fr in ratios])
        rows = [(format_rational(fr.q), "{" + ",".join(map(str, sorted(fr.subset))) + "}")
                for fr in ratios]
        return EXIT_OK, _columns(rows, ("ratio", "subset"))

    if cfg.command == "clique":
        domain = build_domain(cfg, allow_box=False)
        size, clique = ratio_clique_lower_bound(eq, domain.N)
        if js:
            return EXIT_OK, _dump({"size": size, "clique": list(clique)})
        return EXIT_OK, f"clique of size {size}: {{{', '.join(map(str, clique))}}}"

    budget = cfg.budget if cfg.budget is not None else default_budget()

    if cfg.command == "search":
        domain = build_domain(cfg, allow_box=False)
        result = search_coloring(eq, _need_colors(cfg), domain.N,
                                 symmetry_breaking=cfg.symmetry, budget=budget, jobs=cfg.jobs)
        code = {"sat": EXIT_OK, "unsat": EXIT_NEGATIVE, "budget": EXIT_BUDGET}[result.status]
        if js:
            return code, _dump(result.to_json())
        if result.status == "sat":
            rows = [(v, c) for v, c in enumerate(result.table, start=1)]
            return code, "SAT\n" + _columns(rows, ("value", "color"))
        if result.status == "unsat":
            return code, "UNSAT"
        return code, f"budget exceeded after {result.nodes} nodes"

    if cfg.command == "mincolors":
        domain = build_domain(cfg, allow_box=False)
        j = min_colors(eq, domain.N, budget=budget, jobs=cfg.jobs)
        if js:
            return EXIT_OK, _dump({"equation": eq.label, "max": domain.N, "min_colors": j})
        return EXIT_OK, str(j)

    if cfg.command == "dimacs":
        domain = build_domain(cfg, allow_box=False)
        text = export_dimacs(eq, _need_colors(cfg), domain.N, at_most_one=cfg.at_most_one)
        if cfg.output:
            Path(cfg.output).write_text(text)
            return EXIT_OK, f"wrote {cfg.output}"
        return EXIT_OK, text.rstrip("\n")

    if cfg.command == "explain":
        if not cfg.values:
            raise UsageError("--values is required")
        values = [parse_rational(v) for v in cfg.values]
        k = cfg.colors if cfg.colors is not None else family_k
        if k is None:
            raise UsageError("--colors is required")
        ob = explain_obstruction(eq, values, k, cfg.p)
        if js:
            return EXIT_OK, _dump(ob.to_json())
        terms = ", ".join(str(t) for t in ob.term_valuations)
        lines = [f"term valuations: ({terms})",
                 f"colors: ({', '.join(map(str, ob.colors))})"]
        if ob.distinct:
            lines.append("term valuations pairwise distinct")
        else:
            lines.extend(f"collision: t_{i} = t_{j} = {ob.term_valuations[i]}"
                         for i, j in ob.collisions)
        lines.append(f"residual {format_rational(ob.residual)}, valuation {ob.residual_valuation}")
        if ob.certified:
            lines.append("monochromatic, so it cannot be a solution")
        elif not ob.monochromatic:
            lines.append("not monochromatic; the valuation argument does not apply")
        return EXIT_OK, "\n".join(lines)

    raise UsageError(f"unknown command {cfg.command!r}")


def _split_values(raw: Sequence[str]) -> list[str]:
    out = []
    for item in raw:
        out.extend(s for s in item.split(",") if s.strip())
    return out


def build_parser() -> argparse.ArgumentParser:
    eq_opts = argparse.ArgumentParser(add_help=False)
    g = eq_opts.add_argument_group("equation")
    g.add_argument("--family", choices=["L", "M"], help="equation family")
    g.add_argument("--k", type=int, help="family parameter (number of variables)")
    g.add_argument("--coeffs", help="explicit homogeneous coefficients, e.g. '-7/3,2,4/3'")
    g.add_argument("--equation-file", help="JSON equation document")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--p", type=int, default=2, help="prime for valuations")

    dom = argparse.ArgumentParser(add_help=False)
    dom.add_argument("--max", type=int, help="integer domain 1..MAX")
    dom.add_argument("--height", type=int, help="rational box of height H")

    col = argparse.ArgumentParser(add_help=False)
    col.add_argument("--coloring", choices=["valuation", "table"], default="valuation")
    col.add_argument("--colors", type=int)
    col.add_argument("--table", help="comma-separated colors of 1..N")
    col.add_argument("--coloring-file", help="JSON coloring document")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=int, help="node limit (default $RADOREG_BUDGET)")
    search.add_argument("--jobs", type=int, default=1, help="processes for solution enumeration")

    parser = argparse.ArgumentParser(prog="radoreg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("equation", parents=[eq_opts, common], help="print an equation")
    p = sub.add_parser("color", parents=[common, col], help="color values")
    p.add_argument("values", nargs="+")
    p = sub.add_parser("solutions", parents=[eq_opts, common, dom], help="list solutions")
    p.add_argument("--jobs", type=int, default=1)
    p = sub.add_parser("verify", parents=[eq_opts, common, dom, col],
                       help="look for a monochromatic solution")
    p.add_argument("--jobs", type=int, default=1)
    p = sub.add_parser("ratios", parents=[eq_opts, common], help="forbidden ratios")
    p.add_argument("--allow-negative", action="store_true")
    sub.add_parser("clique", parents=[eq_opts, common, dom], help="ratio clique lower bound")
    p = sub.add_parser("search", parents=[eq_opts, common, dom, search],
                       help="exhaustive coloring search")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--no-symmetry", dest="symmetry", action="store_false")
    sub.add_parser("mincolors", parents=[eq_opts, common, dom, search],
                   help="fewest colors on 1..MAX")
    p = sub.add_parser("dimacs", parents=[eq_opts, common, dom], help="export CNF")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--at-most-one", action="store_true")
    p.add_argument("-o", "--output")
    p = sub.add_parser("explain", parents=[eq_opts, common],
                       help="valuation obstruction for an assignment")
    p.add_argument("--values", nargs="+", required=True)
    p.add_argument("--colors", type=int)
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> CommandConfig:
    ns = vars(build_parser().parse_args(argv))
    if "values" in ns:
        ns["values"] = _split_values(ns["values"])
    known = CommandConfig.__dataclass_fields__
    return CommandConfig(**{k: v for k, v in ns.items() if k in known})


def main(argv: Optional[Sequence[str]] = None) -> int:
    cfg = parse_config(argv)
    code, text = run(cfg)
    stream = sys.stderr if code == EXIT_USAGE else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
