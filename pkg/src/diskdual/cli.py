"""Command-line batch interface.

Every verb is a thin adapter: parse flags, call the library, print one
canonical JSON document on stdout.  Diagnostics go to stderr only.  Exit
codes: 0 success, 1 usage or I/O problem, 2 verification failure, 3 numerical
validity error (non-finite data, aliasing, boundary proximity, ...).

Stochastic verbs require an explicit --seed; given identical flags the output
bytes are identical run to run.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import curves, duality, formats, growth, hardy, spectral
from .errors import NumericsError


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"expected 're,im', got {text!r}")


def _parse_int_grid(text: str) -> list[int]:
    if ":" in text:
        lo_text, hi_text = text.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
        if lo > hi:
            raise ValueError(f"empty grid {text!r}")
        return list(range(lo, hi + 1))
    return [int(p) for p in text.split(",")]


def _parse_radii(text: str) -> list[float]:
    return [float(p) for p in text.split(",")]


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _as_boundary(obj) -> spectral.BoundaryDistribution:
    if isinstance(obj, spectral.BoundaryDistribution):
        return obj
    if isinstance(obj, hardy.InteriorFunction):
        return hardy.trace_interior(obj)
    return hardy.trace_exterior(obj)


def _node_values(obj, curve: curves.CurveDescriptor, grid: curves.QuadratureGrid):
    if isinstance(obj, hardy.InteriorFunction):
        return curves.interior_node_values(obj, curve, grid)
    if isinstance(obj, hardy.ExteriorFunction):
        return curves.exterior_node_values(obj, curve, grid)
    return curves.boundary_node_values(obj, curve, grid)


def _cmd_gen(args) -> tuple[dict, int]:
    if args.family:
        spec = growth.GrowthFamilySpec(args.z0, args.gamma, args.n)
        obj = growth.growth_family_coeffs(spec)
    else:
        rng = np.random.default_rng(args.seed)
        size = args.n
        draw = lambda k: rng.standard_normal(k) + 1j * rng.standard_normal(k)
        if args.random == "boundary":
            obj = spectral.BoundaryDistribution(-size, draw(2 * size + 1))
        elif args.random == "interior":
            obj = hardy.InteriorFunction(draw(size + 1))
        else:
            obj = hardy.ExteriorFunction(draw(size))
    return formats.coefficients_to_doc(obj), 0


def _cmd_norm(args) -> tuple[dict, int]:
    obj = formats.read_coefficient_file(args.infile)
    f = _as_boundary(obj)
    value = spectral.sobolev_norm(f, args.sp)
    return {
        "kind": formats.coefficients_to_doc(obj)["kind"],
        "sobolev_index": float(args.sp),
        "sobolev_norm": value,
    }, 0


def _cmd_pair(args) -> tuple[dict, int]:
    obj_u = formats.read_coefficient_file(args.u)
    obj_v = formats.read_coefficient_file(args.v)
    fu, fv = _as_boundary(obj_u), _as_boundary(obj_v)
    doc = {
        "koethe": _pair(spectral.koethe_pairing(fu, fv)),
        "l2": _pair(spectral.l2_pairing(fu, fv)),
    }
    if args.curve is not None:
        curve = curves.CurveDescriptor.parse(args.curve)
        grid = curves.QuadratureGrid(args.m)
        quad = curves.pairing_quadrature(
            _node_values(obj_u, curve, grid), _node_values(obj_v, curve, grid), curve, grid
        )
        doc["koethe_quadrature"] = _pair(quad)
        doc["curve"] = args.curve
        doc["M"] = grid.m
    return doc, 0


def _cmd_cauchy(args) -> tuple[dict, int]:
    obj = formats.read_coefficient_file(args.infile)
    f = _as_boundary(obj)
    doc = {
        "point": _pair(args.at),
        "spectral": _pair(hardy.cauchy_transform(f, args.at)),
    }
    if args.curve is not None:
        curve = curves.CurveDescriptor.parse(args.curve)
        grid = curves.QuadratureGrid(args.m)
        quad = curves.cauchy_integral_quadrature(
            _node_values(obj, curve, grid), curve, grid, args.at
        )
        doc["quadrature"] = _pair(quad)
        doc["curve"] = args.curve
        doc["M"] = grid.m
    return doc, 0


def _cmd_project(args) -> tuple[dict, int]:
    f = _as_boundary(formats.read_coefficient_file(args.infile))
    u, v_plus = hardy.hardy_projections(f, args.boundary_index)
    return {
        "boundary_index": float(args.boundary_index),
        "interior": formats.coefficients_to_doc(u),
        "exterior": formats.coefficients_to_doc(v_plus),
        "jump_residual": hardy.jump_residual(f),
    }, 0


def _cmd_dualize(args) -> tuple[dict, int]:
    w = _as_boundary(formats.read_coefficient_file(args.w))
    v = duality.represent_functional(w, args.s)
    return formats.coefficients_to_doc(v), 0


def _cmd_verify(args) -> tuple[dict, int]:
    if args.suite == "duality":
        report = duality.verify_duality_isomorphism(args.s, args.trials, args.n, args.seed)
    else:
        report = duality.verify_scale_pairing(args.direction, args.n, args.seed)
    return report.to_doc(), 0 if report.passed else 2


def _cmd_growth(args) -> tuple[dict, int]:
    spec = growth.GrowthFamilySpec(args.z0, args.gamma, args.n)
    report = growth.build_growth_report(spec, args.s_grid, args.radii)
    return report.to_doc(), 0


def build_parser() -> _Parser:
    parser = _Parser(prog="diskdual", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="generate coefficient files")
    mode = gen.add_mutually_exclusive_group(required=True)
    mode.add_argument("--family", action="store_true",
                      help="boundary-singularity family (needs --gamma, --z0)")
    mode.add_argument("--random", choices=("boundary", "interior", "exterior"))
    gen.add_argument("--gamma", type=float, default=1.0)
    gen.add_argument("--z0", type=_parse_complex, default=complex(1.0, 0.0))
    gen.add_argument("--N", dest="n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=None)
    gen.set_defaults(handler=_cmd_gen)

    norm = sub.add_parser("norm", help="boundary Sobolev norm of a coefficient file")
    norm.add_argument("--in", dest="infile", required=True)
    norm.add_argument("--sp", type=float, required=True, help="boundary Sobolev index")
    norm.set_defaults(handler=_cmd_norm)

    pair = sub.add_parser("pair", help="both boundary pairings of two coefficient files")
    pair.add_argument("--u", required=True)
    pair.add_argument("--v", required=True)
    pair.add_argument("--curve", default=None, help="cross-check on a curve, e.g. ellipse:1.5,0.7")
    pair.add_argument("--M", dest="m", type=int, default=256)
    pair.set_defaults(handler=_cmd_pair)

    cauchy = sub.add_parser("cauchy", help="Cauchy transform at a point off the circle")
    cauchy.add_argument("--in", dest="infile", required=True)
    cauchy.add_argument("--at", type=_parse_complex, required=True, help="evaluation point re,im")
    cauchy.add_argument("--curve", default=None)
    cauchy.add_argument("--M", dest="m", type=int, default=256)
    cauchy.set_defaults(handler=_cmd_cauchy)

    project = sub.add_parser("project", help="Hardy split and jump residual")
    project.add_argument("--in", dest="infile", required=True)
    project.add_argument("--boundary-index", type=float, default=-0.5)
    project.set_defaults(handler=_cmd_project)

    dualize = sub.add_parser("dualize", help="exterior representative of a boundary functional")
    dualize.add_argument("--w", required=True)
    dualize.add_argument("--s", type=int, required=True)
    dualize.set_defaults(handler=_cmd_dualize)

    verify = sub.add_parser("verify", help="seeded verification suites")
    verify.add_argument("--suite", choices=("duality", "scale"), required=True)
    verify.add_argument("--s", type=int, default=0)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--N", dest="n", type=int, default=32)
    verify.add_argument("--seed", type=int, required=True)
    verify.add_argument("--direction", choices=duality.SCALE_DIRECTIONS,
                        default="interior-finite-order")
    verify.set_defaults(handler=_cmd_verify)

    grow = sub.add_parser("growth", help="growth exponent fit and scale placement")
    grow.add_argument("--gamma", type=float, required=True)
    grow.add_argument("--z0", type=_parse_complex, default=complex(1.0, 0.0))
    grow.add_argument("--N", dest="n", type=int, default=4096)
    grow.add_argument("--s-grid", dest="s_grid", type=_parse_int_grid, default=list(range(-4, 4)))
    grow.add_argument("--radii", type=_parse_radii, default=None)
    grow.set_defaults(handler=_cmd_growth)

    for p in (gen, norm, pair, cauchy, project, dualize, verify, grow):
        p.add_argument("--out", default=None, help="also write the document to this path")
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    if args.verb == "gen" and args.random is not None and args.seed is None:
        print("usage error: gen --random requires --seed", file=sys.stderr)
        return 1
    try:
        doc, code = args.handler(args)
    except NumericsError as exc:
        print(f"numerical validity error: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = formats.canonical_json(doc)
    sys.stdout.write(text)
    if args.out is not None:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    return code


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))
