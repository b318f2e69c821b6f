"""
Command-line front end.

Exit codes: 0 success, 1 logical failure (verification failed, blocking
reproduction rows), 2 usage or input error, 3 search budget exhausted.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from pydantic import ValidationError

from config.settings import Settings, get_settings, set_current_settings
from src.exceptions import BudgetExhaustedError, InvalidParameterError, RvclabError
from src.harness import selector_names
from src.lab_client import RainbowLab
from src.logging_config import setup_logging
from src.models import ConstructionRule, FamilySpec, Graph, SolveStatus, Target

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_RULE_CORES = {
    ConstructionRule.PATH_RVCL: "path",
    ConstructionRule.CYCLE_RVC: "cycle",
    ConstructionRule.CYCLE_RVCL: "cycle",
    ConstructionRule.COMPLETE_RVC: "complete",
    ConstructionRule.COMPLETE_RVCL: "complete",
}


# ==================== Argument Types ====================

def parse_family(text: str) -> tuple[str, Optional[int]]:
    """
    Parse "family:order"; a bare "tree" takes its order from --edges.

    Raises:
        argparse.ArgumentTypeError: malformed text
    """
    name, _, order = text.partition(":")
    if name == "tree" and not order:
        return name, None
    if not order.isdigit():
        raise argparse.ArgumentTypeError(f"expected family:order, got {text!r}")
    return name, int(order)


def parse_edges(text: str) -> list[tuple[int, int]]:
    """Parse "1-2,1-3" into 1-based vertex pairs."""
    edges = []
    for chunk in filter(None, (part.strip() for part in text.split(","))):
        u, sep, v = chunk.partition("-")
        if not sep or not u.isdigit() or not v.isdigit():
            raise argparse.ArgumentTypeError(f"expected u-v pairs, got {chunk!r}")
        edges.append((int(u), int(v)))
    return edges


def parse_range(text: str) -> list[int]:
    """Parse "2..4", "3" or "2,3,5" into a list of integers."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            if low > high:
                raise ValueError
            return list(range(low, high + 1))
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b or a comma list, got {text!r}") from None


# ==================== Parser ====================

def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--env", default="dev", help="Settings profile (dev, ci)")
    parent.add_argument("--log-level", default=None, help="Override the logging level")
    parent.add_argument("--budget-nodes", type=int, default=None, help="Search node budget")
    parent.add_argument("--budget-seconds", type=float, default=None, help="Search wall-clock budget")
    parent.add_argument("--workers", type=int, default=None, help="Solver worker processes")
    parent.add_argument("--out", type=Path, default=None, help="Write the document here instead of stdout")
    return parent


def _family_options(parser: argparse.ArgumentParser, core_required: bool) -> None:
    parser.add_argument("--core", type=parse_family, required=core_required, help="path:m, cycle:m, complete:m, star:m or tree")
    parser.add_argument("--flare", type=parse_family, default=None, help="complete:n (default), path:n, cycle:n or star:n")
    parser.add_argument("--edges", type=parse_edges, default=None, help="Tree edges as 1-2,1-3,...")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="rvclab", description="Rainbow vertex and locating rainbow colorings of edge coronas.")
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", parents=[common], help="Write an edge corona as JSON or DOT")
    _family_options(construct, core_required=True)
    construct.add_argument("--format", choices=["json", "dot"], default="json")

    verify = commands.add_parser("verify", parents=[common], help="Check a coloring of a graph")
    verify.add_argument("--graph", type=Path, required=True)
    verify.add_argument("--coloring", type=Path, required=True)
    verify.add_argument("--target", choices=[t.value for t in Target], default=Target.RVCL.value)

    solve = commands.add_parser("solve", parents=[common], help="Exact rvc or rvcl")
    solve.add_argument("--graph", type=Path, default=None)
    _family_options(solve, core_required=False)
    solve.add_argument("--target", choices=[t.value for t in Target], default=Target.RVCL.value)
    solve.add_argument("--force", action="store_true", help="Solve above the size cap")
    solve.add_argument("--start-k", type=int, default=None, help="Start the ladder at this k")

    bounds = commands.add_parser("bounds", parents=[common], help="Certified bounds of a graph")
    bounds.add_argument("--graph", type=Path, default=None)
    _family_options(bounds, core_required=False)
    bounds.add_argument("--target", choices=[t.value for t in Target], default=Target.RVCL.value)

    predict = commands.add_parser("predict", parents=[common], help="Theorem value of a family")
    _family_options(predict, core_required=True)
    predict.add_argument("--target", choices=[t.value for t in Target], default=Target.RVCL.value)

    color = commands.add_parser("color", parents=[common], help="Run a constructive coloring")
    color.add_argument("--rule", choices=[r.value for r in ConstructionRule], required=True)
    color.add_argument("--m", type=int, default=None)
    color.add_argument("--n", type=int, required=True)
    _family_options(color, core_required=False)
    color.add_argument("--format", choices=["json", "dot"], default="json")

    reproduce = commands.add_parser("reproduce", parents=[common], help="Check theorems over a grid")
    reproduce.add_argument("--theorem", required=True, help=f"One of {', '.join(selector_names())}")
    reproduce.add_argument("--m", type=parse_range, default=None)
    reproduce.add_argument("--n", type=parse_range, default=None)
    reproduce.add_argument("--format", choices=["csv", "json"], default="csv")
    reproduce.add_argument("--force", action="store_true", help="Solve cells above the size caps")

    return parser


# ==================== Helpers ====================

def _settings_from(args: argparse.Namespace) -> Settings:
    overrides = {
        "log_level": args.log_level,
        "budget_nodes": args.budget_nodes,
        "budget_seconds": args.budget_seconds,
        "workers": args.workers,
    }
    settings = get_settings(args.env)
    updates = {key: value for key, value in overrides.items() if value is not None}
    if updates:
        settings = Settings(**{**settings.model_dump(), **updates})
    return settings


def _spec_from(args: argparse.Namespace, core: Optional[tuple[str, Optional[int]]] = None, n: Optional[int] = None) -> FamilySpec:
    core_name, m = core or args.core
    flare_name, flare_order = args.flare or ("complete", n)
    if flare_order is None:
        raise InvalidParameterError("flare order missing; use --flare family:n")
    if core_name == "tree":
        if not args.edges:
            raise InvalidParameterError("tree cores need --edges")
        m = len({v for edge in args.edges for v in edge})
    return FamilySpec.create(core_name, m, flare_order, flare=flare_name, tree_edges=args.edges if core_name == "tree" else None)


def _graph_from(args: argparse.Namespace, lab: RainbowLab) -> Graph:
    if args.graph is not None:
        return lab.graph.load(args.graph.read_text(encoding="utf-8"), str(args.graph))
    if args.core is None:
        raise InvalidParameterError("give --graph or --core")
    return lab.graph.construct(_spec_from(args))


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {args.out}")
    else:
        sys.stdout.write(text)


# ==================== Commands ====================

def cmd_construct(args: argparse.Namespace, lab: RainbowLab) -> int:
    g = lab.graph.construct(_spec_from(args))
    _emit(args, lab.graph.render(g, args.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, lab: RainbowLab) -> int:
    g = lab.graph.load(args.graph.read_text(encoding="utf-8"), str(args.graph))
    coloring = lab.verify.load_coloring(args.coloring.read_text(encoding="utf-8"), g, str(args.coloring))
    report = lab.verify.check(g, coloring, Target(args.target))
    _emit(args, lab.verify.render_report(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_solve(args: argparse.Namespace, lab: RainbowLab) -> int:
    g = _graph_from(args, lab)
    result = lab.solve.exact(g, Target(args.target), force=args.force, start_k=args.start_k)
    _emit(args, lab.solve.render_result(result))
    return EXIT_BUDGET if result.status == SolveStatus.BUDGET_EXHAUSTED else EXIT_OK


def cmd_bounds(args: argparse.Namespace, lab: RainbowLab) -> int:
    g = _graph_from(args, lab)
    _emit(args, lab.solve.render_bounds(lab.solve.bounds(g, Target(args.target))))
    return EXIT_OK


def cmd_predict(args: argparse.Namespace, lab: RainbowLab) -> int:
    prediction = lab.construction.predict(_spec_from(args), Target(args.target))
    _emit(args, lab.construction.render_prediction(prediction))
    return EXIT_OK


def cmd_color(args: argparse.Namespace, lab: RainbowLab) -> int:
    rule = ConstructionRule(args.rule)
    if rule in _RULE_CORES:
        if args.m is None:
            raise InvalidParameterError(f"{rule.value} needs --m")
        core = (_RULE_CORES[rule], args.m)
    elif args.core is not None:
        core = args.core
    elif args.edges:
        core = ("tree", None)
    else:
        if args.m is None:
            raise InvalidParameterError(f"{rule.value} needs --m or --core")
        core = ("star" if rule == ConstructionRule.TREE_RVC else "path", args.m)

    built = lab.construction.color(rule, _spec_from(args, core=core, n=args.n))
    if args.format == "dot":
        _emit(args, lab.graph.render(built.graph, "dot", built.coloring))
    else:
        _emit(args, lab.verify.render_coloring(built.coloring))
    return EXIT_OK if built.is_valid() else EXIT_FAILED


def cmd_reproduce(args: argparse.Namespace, lab: RainbowLab) -> int:
    rows = lab.reproduce.run(args.theorem, args.m, args.n, force=args.force)
    _emit(args, lab.reproduce.render(rows, args.format))
    return lab.reproduce.exit_code(rows)


COMMANDS: dict[str, Callable[[argparse.Namespace, RainbowLab], int]] = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "bounds": cmd_bounds,
    "predict": cmd_predict,
    "color": cmd_color,
    "reproduce": cmd_reproduce,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        settings = _settings_from(args)
    except ValidationError as exc:
        setup_logging()
        logger.error(f"Invalid settings: {exc}")
        return EXIT_USAGE
    set_current_settings(settings)
    setup_logging(settings.log_level, settings.log_file)

    try:
        return COMMANDS[args.command](args, RainbowLab(settings))
    except BudgetExhaustedError as exc:
        logger.error(str(exc))
        return EXIT_BUDGET
    except (RvclabError, ValueError, OSError) as exc:
        logger.error(f"{args.command}: {exc}")
        return EXIT_USAGE
