"""Command-line entry point.

Exit codes: 0 verified/pass, 1 falsified/fail, 2 inconclusive, 3 usage or
input error.  JSON output always uses sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    """Bad arguments or malformed input; mapped to exit code 3."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    output: str | None = None
    seed: int = 0
    emit_svg: str | None = None
    max_depth: int = 40
    min_width: float = 1e-8
    tolerances: dict = field(default_factory=dict)


# --- input helpers -------------------------------------------------------------------

def fixture_path(name: str) -> Path:
    return Path(str(resources.files("hexpack") / "data" / name))


def _resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    bundled = fixture_path(path if path.endswith(".json") else path + ".json")
    if bundled.exists():
        return bundled
    raise UsageError(f"{path}: no such file (and no bundled fixture of that name)")


def _load_json(path: str) -> dict:
    p = _resolve(path)
    try:
        doc = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"{p}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise UsageError(f"{p}: top level must be a JSON object")
    return doc


def _emit(doc: dict, output: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _write_svg(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)


# --- subcommands --------------------------------------------------------------------

def _cmd_verify(args) -> int:
    from . import certify
    from .interval import FALSIFIED, VERIFIED, Options

    if args.max_depth < 1 or args.min_width <= 0:
        raise UsageError("--max-depth must be positive and --min-width > 0")
    opts = Options(max_depth=args.max_depth, min_width=args.min_width)
    cert = certify.certify(args.id, opts, delta=args.delta)
    _emit(cert.to_dict(), args.output)
    return {VERIFIED: EXIT_OK, FALSIFIED: EXIT_FAIL}.get(cert.outcome, EXIT_INCONCLUSIVE)


def _packing(path: str):
    from . import geom2d

    doc = _load_json(path)
    if doc.get("dimension") != 2:
        raise UsageError(f"{path}: field \"dimension\" must be 2")
    pts = doc.get("points")
    if not isinstance(pts, list):
        raise UsageError(f"{path}: field \"points\" must be a list of [x, y] pairs")
    for k, row in enumerate(pts):
        if not (isinstance(row, list) and len(row) == 2 and all(isinstance(v, (int, float)) for v in row)):
            raise UsageError(f"{path}: points[{k}] must be a pair of numbers")
    try:
        return geom2d.Packing2.from_points(pts)
    except geom2d.PackingError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _cmd_cell(args) -> int:
    from . import geom2d, render

    packing = _packing(args.input)
    if not (0 <= args.center < len(packing.points)):
        raise UsageError(f"--center {args.center} is not a point index (0..{len(packing.points) - 1})")
    report = geom2d.certify_cell(packing.points[args.center], packing)
    _emit(report.to_json(), args.output)
    if args.emit_svg:
        _write_svg(render.cell_svg(args.center, packing), args.emit_svg)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_marchal(args) -> int:
    from . import marchal2d, render

    packing = _packing(args.input)
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    panels = [p for p in args.panels.split(",") if p]
    if any(p not in render.PANELS for p in panels):
        raise UsageError(f"--panels takes a comma list of {', '.join(render.PANELS)}")
    pts = packing.array()
    try:
        report = marchal2d.validate_partition(pts, n_samples=args.samples, seed=args.seed, perturb=args.perturb)
        cells = marchal2d.marchal_cells(pts, n_samples=min(args.samples, 200_000), seed=args.seed,
                                        perturb=args.perturb) if len(pts) else []
    except marchal2d.DegeneracyError as exc:
        _emit({"error": str(exc), "quadruple": list(exc.quadruple), "hint": "rerun with --perturb"}, args.output)
        return EXIT_INCONCLUSIVE
    doc = report.to_json()
    doc["census"] = {str(k): v for k, v in marchal2d.census(cells).items()}
    doc["seed"] = args.seed
    _emit(doc, args.output)
    if args.emit_svg:
        _write_svg(render.marchal_svg(pts, panels=panels, perturb=args.perturb), args.emit_svg)
    return EXIT_OK if report.passed else EXIT_FAIL


def _config(path: str, **kw):
    from .annulus import AnnulusConfig, ConfigError

    doc = _load_json(path)
    try:
        return AnnulusConfig.from_json(doc, **kw)
    except ConfigError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _cmd_lemma(args) -> int:
    from . import annulus

    cfg = _config(args.input)
    if cfg.dimension != 2:
        raise UsageError(f"{args.input}: lemma-l needs \"dimension\": 2")
    report = annulus.check_lemma_L_2d(cfg)
    _emit(report.to_json(), args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_l12(args) -> int:
    from . import annulus

    outer = annulus.FT_OUTER if args.norm_sum else annulus.ANNULUS_OUTER
    cfg = _config(args.input, outer=outer, check_separation=not args.no_separation)
    if cfg.dimension != 3:
        raise UsageError(f"{args.input}: l12 needs \"dimension\": 3")
    report = annulus.check_L12_config(cfg)
    doc = report.to_json()
    ok = report.passed
    if args.norm_sum:
        try:
            ft = annulus.ft_norm_sum(cfg)
        except annulus.ConfigError as exc:
            raise UsageError(str(exc)) from None
        doc["norm_sum"] = ft.to_json()
        ok &= ft.passed
    _emit(doc, args.output)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_dodec(args) -> int:
    from . import dodec3d

    c = dodec3d.solve_dodec_constants()
    a, b = dodec3d.dodec_constants_enclosure()
    t = dodec3d.t_dodec_interval()
    gap = c.identity_gap()
    doc = {"t_D": c.t_D, "a_D": c.a_D, "b_D": c.b_D, "area_CD": c.area_CD, "identity_gap": gap,
           "enclosures": {"t_D": [t.lo, t.hi], "a_D": [a.lo, a.hi], "b_D": [b.lo, b.hi]}}
    _emit(doc, args.output)
    return EXIT_OK if abs(gap) <= 1e-6 else EXIT_FAIL


def _cmd_contact(args) -> int:
    from . import contact

    try:
        g = contact.load_graph(args.graph)
    except FileNotFoundError:
        raise UsageError(f"{args.graph}: not a built-in graph (fcc, hcp, fthex) and no such file") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.graph}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except contact.GraphError as exc:
        raise UsageError(f"{args.graph}: {exc}") from None
    problems = g.validate(require_twelve=not args.any_size)
    if problems:
        raise UsageError(f"{args.graph}: " + "; ".join(problems))
    cert = contact.eliminate_hexagon(g)
    if cert.outcome == "not-applicable":
        cert = contact.check_feasibility(contact.build_angle_lp(g))
    doc = cert.to_json()
    doc["face_census"] = {str(k): v for k, v in g.face_census().items()}
    _emit(doc, args.output)
    return {contact.INCONCLUSIVE: EXIT_INCONCLUSIVE}.get(cert.outcome, EXIT_OK)


# --- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .certify import PROBLEM_IDS

    p = _Parser(prog="hexpack", description="Checks for planar and spatial packing inequalities.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(sp, seed=False):
        sp.add_argument("--output", "-o", help="write JSON here instead of stdout")
        if seed:
            sp.add_argument("--seed", type=int, default=0, help="random seed (default 0)")

    v = sub.add_parser("verify-ineq", help="interval certification of one inequality")
    v.add_argument("--id", required=True, choices=PROBLEM_IDS)
    v.add_argument("--max-depth", type=int, default=40, help="bisection depth limit (default 40)")
    v.add_argument("--min-width", type=float, default=1e-8, help="smallest cell width (default 1e-8)")
    v.add_argument("--delta", type=float, default=0.05, help="tight-point neighbourhood radius (default 0.05)")
    common(v)
    v.set_defaults(run=_cmd_verify)

    c = sub.add_parser("cell", help="truncated Voronoi cell report")
    c.add_argument("--input", required=True, help="packing JSON (path or bundled fixture name)")
    c.add_argument("--center", type=int, default=0, help="index of the cell centre (default 0)")
    c.add_argument("--emit-svg", help="also draw the cell to this SVG file")
    common(c)
    c.set_defaults(run=_cmd_cell)

    m = sub.add_parser("marchal", help="levels, Rogers simplices and Marchal cells by sampling")
    m.add_argument("--input", required=True, help="packing JSON (path or bundled fixture name)")
    m.add_argument("--samples", type=int, default=100_000, help="sample count (default 100000)")
    m.add_argument("--perturb", action="store_true", help="break cocircular ties by index")
    m.add_argument("--emit-svg", help="draw the panels to this SVG file")
    m.add_argument("--panels", default="levels,rogers,cells", help="comma list of panels to draw")
    common(m, seed=True)
    m.set_defaults(run=_cmd_marchal)

    lem = sub.add_parser("lemma-l", help="sum of L over a planar annulus configuration")
    lem.add_argument("--input", required=True)
    common(lem)
    lem.set_defaults(run=_cmd_lemma)

    l12 = sub.add_parser("l12", help="sum of L over a spatial configuration")
    l12.add_argument("--input", required=True)
    l12.add_argument("--norm-sum", action="store_true", help="13 points in the sqrt 8 annulus: also check the norm sum")
    l12.add_argument("--no-separation", action="store_true", help="skip the distance >= 2 check (norm profiles)")
    common(l12)
    l12.set_defaults(run=_cmd_l12)

    d = sub.add_parser("dodec", help="dodecahedral constants")
    common(d)
    d.set_defaults(run=_cmd_dodec)

    g = sub.add_parser("contact", help="eliminate or solve the angle program of a contact graph")
    g.add_argument("--graph", required=True, help="fcc, hcp, fthex or a graph JSON path")
    g.add_argument("--any-size", action="store_true", help="allow graphs with other than 12 vertices")
    common(g)
    g.set_defaults(run=_cmd_contact)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"hexpack {args.subcommand}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
