"""Command-line pipeline: generate, validate, and sweep.

Exit codes: 0 success, 1 validation failure, 2 usage error.  Everything is
deterministic; slope perturbations only ever come from explicit config.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import diagram as diagram_mod
from . import export as export_mod
from .errors import ValidationError
from .link_template import LinkTemplate, build_template, template_problems
from .pants_path import build_path

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2

FORMATS = ("braid", "pd", "gauss", "dt", "svg")


def _error_json(kind: str, message: str, **extra) -> str:
    return json.dumps({"error": kind, "message": message, **extra}, sort_keys=True)


def _check_parameters(n: int, l: int) -> None:
    if l < 1:
        raise SystemExit2(f"need l >= 1, got {l}")
    if n < 4:
        raise SystemExit2(f"need n >= 4, got n={n}")
    if n % l != 0:
        raise SystemExit2(f"l={l} does not divide n={n}")


class SystemExit2(Exception):
    """Usage error carrying a message; mapped to exit code 2."""


def _load_slopes(t: LinkTemplate, args) -> diagram_mod.FillingSystem:
    base = diagram_mod.default_slopes(t)
    if args.slope is None and args.slope_file is None:
        return base
    if args.slope is not None and args.slope_file is not None:
        raise SystemExit2("--slope and --slope-file are mutually exclusive")
    if args.slope is not None:
        if args.slope == 0:
            raise SystemExit2("slope override must be nonzero")
        return diagram_mod.FillingSystem(
            s_q=args.slope,
            s_loops={loop: args.slope for loop in t.loops},
            range_lo=base.range_lo,
            range_hi=base.range_hi,
        )
    data = json.loads(Path(args.slope_file).read_text())
    by_step = {int(k): int(v) for k, v in data.get("loops", {}).items()}
    s_q = int(data.get("s_q", base.s_q))
    s_loops = {}
    for loop in t.loops:
        s_loops[loop] = by_step.get(loop.step, base.s_loops[loop])
    return diagram_mod.FillingSystem(
        s_q=s_q, s_loops=s_loops, range_lo=base.range_lo, range_hi=base.range_hi
    )


def _output_dir(args) -> Path:
    if args.out:
        return Path(args.out)
    env = os.environ.get("AGOL_LINKS_OUT")
    return Path(env) if env else Path.cwd() / "out"


def cmd_generate(args) -> int:
    _check_parameters(args.n, args.l)
    formats = [f.strip() for f in args.formats.split(",") if f.strip()]
    for fmt in formats:
        if fmt not in FORMATS:
            raise SystemExit2(f"unknown format {fmt!r}; choose from {','.join(FORMATS)}")

    template = build_template(args.n, args.l, extra_full_twists=args.extra_twists)
    filling = _load_slopes(template, args)
    filled = diagram_mod.fill(template, filling)
    census = diagram_mod.crossing_census(template, filling)
    if census != filled.crossing_total:
        print(_error_json("census_mismatch",
                          f"census {census} != word length {filled.crossing_total}"))
        return EXIT_VALIDATION
    report = diagram_mod.verify_bound(template, filling)
    path = build_path(args.n, args.l)

    out = _output_dir(args)
    out.mkdir(parents=True, exist_ok=True)
    (out / "template.json").write_text(
        json.dumps(template.to_json(), indent=2) + "\n"
    )
    artifacts = {"template": "template.json"}
    if "braid" in formats:
        (out / "diagram.braid").write_text(filled.to_braid_text(args.l))
        artifacts["braid"] = "diagram.braid"
    if "pd" in formats:
        (out / "diagram.pd").write_text(export_mod.to_pd(filled).to_text())
        artifacts["pd"] = "diagram.pd"
    if "gauss" in formats:
        (out / "diagram.gauss").write_text(export_mod.to_gauss(filled).to_text())
        artifacts["gauss"] = "diagram.gauss"
    if "dt" in formats:
        sequence = export_mod.to_dt(filled)  # raises on links
        (out / "diagram.dt").write_text(export_mod.dt_to_text(sequence))
        artifacts["dt"] = "diagram.dt"
    if "svg" in formats:
        (out / "diagram.svg").write_text(
            export_mod.render_svg(filled, template, expand_twists=args.expand_twists)
        )
        artifacts["svg"] = "diagram.svg"

    full_report = {
        "n": args.n,
        "l": args.l,
        "path_length": path.length,
        "loop_census": {str(j): c for j, c in sorted(template.width_census().items())},
        "slopes": {
            "range": list(report.slope_range),
            "s_q": filling.s_q,
            "uniform": len(set(filling.s_loops.values())) == 1,
        },
        "crossing_census": census,
        "bound": report.to_json(),
        "components": filled.component_count(),
        "bridge_upper_bound": diagram_mod.bridge_upper_bound(filled),
        "artifacts": artifacts,
    }
    (out / "report.json").write_text(json.dumps(full_report, indent=2) + "\n")
    print(json.dumps(full_report, indent=2))
    if not report.passed or filled.component_count() != args.l:
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        data = json.loads(Path(args.template).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(_error_json("unreadable", str(exc)))
        return EXIT_VALIDATION
    try:
        template = LinkTemplate.from_json(data)
    except ValidationError as exc:
        print(_error_json("schema", str(exc)))
        return EXIT_VALIDATION
    problems = template_problems(template)
    result = {
        "valid": not problems,
        "problems": [{"pointer": ptr, "message": msg} for ptr, msg in problems],
    }
    print(json.dumps(result, indent=2))
    return EXIT_OK if not problems else EXIT_VALIDATION


def cmd_sweep(args) -> int:
    try:
        lo, hi = (int(part) for part in args.sweep.split(":"))
    except ValueError:
        raise SystemExit2(f"bad sweep range {args.sweep!r}; expected nmin:nmax")
    if lo < 4 or hi < lo:
        raise SystemExit2(f"sweep range must satisfy 4 <= nmin <= nmax")
    rows = ["n\tl\tm\tcrossings\tbound\tmargin\tcomponents"]
    all_pass = True
    for n in range(lo, hi + 1):
        if args.l == "all":
            ls = [l for l in range(1, n + 1) if n % l == 0]
        else:
            l = int(args.l)
            if n % l != 0:
                continue
            ls = [l]
        for l in ls:
            template = build_template(n, l)
            filling = diagram_mod.default_slopes(template)
            report = diagram_mod.verify_bound(template, filling)
            all_pass = all_pass and report.passed
            rows.append(
                f"{n}\t{l}\t{(2 * n - l) * (n - 2)}\t{report.census}\t"
                f"{report.bound:.1f}\t{report.margin:.1f}\t{l}"
            )
    print("\n".join(rows))
    return EXIT_OK if all_pass else EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agol-links",
        description="Construct, validate, and export twisted-braid link diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build one (n, l) link and its artifacts")
    gen.add_argument("--n", type=int, required=True, help="strand / puncture count")
    gen.add_argument("--l", type=int, required=True, help="component count; divides n")
    gen.add_argument("--slope", type=int, default=None,
                     help="uniform slope override (nonzero integer)")
    gen.add_argument("--slope-file", default=None,
                     help='JSON {"s_q": s, "loops": {"<step>": s, ...}}')
    gen.add_argument("--extra-twists", type=int, default=2,
                     help="extra full twists in the monodromy block")
    gen.add_argument("--out", default=None,
                     help="output directory (default $AGOL_LINKS_OUT or ./out)")
    gen.add_argument("--formats", default="braid,pd,svg",
                     help=f"comma-separated subset of {','.join(FORMATS)}")
    gen.add_argument("--expand-twists", action="store_true",
                     help="draw individual crossings in the SVG when small enough")
    gen.set_defaults(func=cmd_generate)

    val = sub.add_parser("validate", help="re-check a persisted template")
    val.add_argument("template", help="path to template.json")
    val.set_defaults(func=cmd_validate)

    swp = sub.add_parser("sweep", help="tabulate censuses and margins over a range")
    swp.add_argument("--sweep", required=True, help="nmin:nmax")
    swp.add_argument("--l", default="all", help='component count or "all"')
    swp.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(_error_json("usage", str(exc)), file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(_error_json(type(exc).__name__, str(exc)))
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
