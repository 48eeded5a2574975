"""Command-line front end.

    edgebetti <command> --input <path> [--method auto|hochster|dual|forest]
              [--field gf2|gf:<p>|q] [--format table|json] [--cap <n>]
              [--random <N> --max-vertices <k> --seed <s>]

Exit status: 0 success, 1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .betti import (
    DEFAULT_VERTEX_CAP,
    BettiTable,
    betti_table,
    forest_pd,
    forest_top_betti,
)
from .complex import parse_complex
from .errors import EdgeBettiError, NotAForest
from .graph import Graph, is_forest, parse_graph, random_forest, random_graph
from .homology import GF2, QQ, GF3, FieldSpec, reduced_homology_dims
from .invariants import (
    CheckReport,
    cross_validate,
    field_independence_check,
    pg_polynomial,
    pivot_independence_check,
)

COMMANDS = ("betti", "pd", "top-betti", "pg", "homology", "check")
METHODS = ("auto", "hochster", "dual", "forest")


@dataclass
class CliConfig:
    command: str
    input: Path | None
    method: str = "auto"
    field: FieldSpec = GF2
    field_given: bool = False
    format: str = "table"
    cap: int = DEFAULT_VERTEX_CAP
    random: int | None = None
    max_vertices: int = 8
    seed: int = 0


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgebetti", description="Graded Betti numbers of edge ideals.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", type=Path)
    parser.add_argument("--method", choices=METHODS, default="auto")
    parser.add_argument("--field", type=_field_arg, default=None, help="gf2 (default), gf:<p> or q")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--cap", type=_positive, default=DEFAULT_VERTEX_CAP, help="vertex cap for brute-force methods")
    parser.add_argument("--random", type=_positive, default=None, help="check: size of a random corpus")
    parser.add_argument("--max-vertices", type=_positive, default=8)
    parser.add_argument("--seed", type=int, default=0)
    return parser


def parse_config(argv: Sequence[str], parser: argparse.ArgumentParser | None = None) -> CliConfig:
    parser = parser or build_parser()
    ns = parser.parse_args(argv)
    if ns.input is None and not (ns.command == "check" and ns.random):
        parser.error(f"argument --input is required for {ns.command}")
    return CliConfig(
        command=ns.command,
        input=ns.input,
        method=ns.method,
        field=ns.field or GF2,
        field_given=ns.field is not None,
        format=ns.format,
        cap=ns.cap,
        random=ns.random,
        max_vertices=ns.max_vertices,
        seed=ns.seed,
    )


def render_diagram(b: BettiTable) -> str:
    return b.diagram()


def _load_graph(cfg: CliConfig) -> Graph:
    return parse_graph(cfg.input.read_text(encoding="utf-8"))


def _table(cfg: CliConfig, g: Graph) -> BettiTable:
    if cfg.method == "forest":
        if not is_forest(g):
            raise NotAForest("--method forest needs a forest input; this graph has a cycle")
        if cfg.field_given:
            print("notice: --method forest ignores --field (forest tables do not depend on the field)", file=sys.stderr)
    return betti_table(g, cfg.field, cfg.method, cap=cfg.cap)


def _cmd_betti(cfg: CliConfig) -> str:
    b = _table(cfg, _load_graph(cfg))
    return b.dumps() if cfg.format == "json" else render_diagram(b)


def _pd_pair(cfg: CliConfig) -> tuple[int, int]:
    g = _load_graph(cfg)
    if cfg.method in ("auto", "forest") and is_forest(g):
        return forest_pd(g), forest_top_betti(g)
    b = _table(cfg, g)
    return b.pd, b.top_betti


def _cmd_pd(cfg: CliConfig) -> str:
    pd, _ = _pd_pair(cfg)
    return json.dumps({"pd": pd}) if cfg.format == "json" else str(pd)


def _cmd_top_betti(cfg: CliConfig) -> str:
    pd, top = _pd_pair(cfg)
    return json.dumps({"pd": pd, "top_betti": str(top)}) if cfg.format == "json" else str(top)


def _cmd_pg(cfg: CliConfig) -> str:
    poly = pg_polynomial(_load_graph(cfg))
    return json.dumps(poly.to_json()) if cfg.format == "json" else str(poly)


def _cmd_homology(cfg: CliConfig) -> str:
    c = parse_complex(cfg.input.read_text(encoding="utf-8"))
    prof = reduced_homology_dims(c, cfg.field)
    # VOID has dim -2, so its profile lists no degrees at all
    return json.dumps(prof.to_json(top=c.dim))


def _check_one(g: Graph, cfg: CliConfig) -> list[CheckReport]:
    reports = [cross_validate(g, cfg.field, cap=cfg.cap)]
    if is_forest(g):
        reports.append(field_independence_check(g, [GF2, GF3, QQ], cap=cfg.cap))
        reports.append(pivot_independence_check(g))
    return reports


def _cmd_check(cfg: CliConfig) -> tuple[str, bool]:
    reports = []
    if cfg.input is not None:
        reports += _check_one(_load_graph(cfg), cfg)
    if cfg.random:
        rng = random.Random(cfg.seed)
        for _ in range(cfg.random):
            n = rng.randint(1, cfg.max_vertices)
            if rng.random() < 0.5:
                g = random_forest(n, rng)
            else:
                g = random_graph(n, rng.uniform(0.2, 0.7), rng)
            reports += _check_one(g, cfg)
    ok = all(r.passed for r in reports)
    if cfg.format == "json":
        text = json.dumps({"passed": ok, "reports": [r.to_json() for r in reports]}, indent=2)
    else:
        passed = sum(r.passed for r in reports)
        text = "\n".join([r.format() for r in reports] + [f"{passed}/{len(reports)} checks passed"])
    return text, ok


def run(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if cfg.command == "check":
            text, ok = _cmd_check(cfg)
            print(text)
            return 0 if ok else 1
        handler = {
            "betti": _cmd_betti,
            "pd": _cmd_pd,
            "top-betti": _cmd_top_betti,
            "pg": _cmd_pg,
            "homology": _cmd_homology,
        }[cfg.command]
        print(handler(cfg))
    except (EdgeBettiError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
