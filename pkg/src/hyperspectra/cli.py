"""Command-line front end: build families, measure spectra, verify claims.

Exit codes for ``verify``: 0 when every assertion holds, 1 on a genuine
violation (a counter-instance file is written next to the report), 2 when
the parameters fall outside a claim's hypotheses or the run errors out
(unknown ids, malformed arguments, exhausted enumeration budget).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import read_json, write_json
from .enumeration import BudgetExceededError, DEFAULT_BUDGET
from .families import (
    caterpillar,
    cycle_with_pendant_path,
    cycle_with_pendants,
    fused_triangles,
    fused_triangles_two_sites,
    hyperstar,
    interlocking_cycles_example,
    loose_cycle,
    loose_path,
    theta_hypergraph,
    triple_fused_triangles,
)
from .formulas import (
    cycle_with_pendants_char_poly,
    cycle_with_pendants_root_bounds,
    dominant_root,
    fused_triangles_char_poly,
    fused_triangles_root_bounds,
    hyperstar_radius,
    hypertree_diameter_bound,
    hypertree_even_diameter_bound,
    loose_cycle_radius,
    loose_cycle_spectrum,
    loose_path_radius_bound,
    theta_radius_bound,
    triple_fused_triangles_char_poly,
    triple_fused_triangles_root_bound,
    unicyclic_radius_bounds,
    unicyclic_second_bound,
)
from .partitions import (
    coarsest_equitable_refinement,
    quotient_matrix,
    quotient_spectrum,
)
from .report import STATUS_FAIL, STATUS_PASS, emit_report, render_figures
from .spectral import char_poly, full_spectrum, spectral_radius
from .transforms import move_edges, release_edge, spread_edges
from .verify import DEFAULT_TOL, list_registry, verify

__all__ = ["main"]


def _print_json(data, out: str | None = None) -> None:
    text = json.dumps(data, indent=2, sort_keys=False) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_counts(text: str) -> dict[int, int]:
    """``"3:4,5:1"`` -> ``{3: 4, 5: 1}``."""
    counts: dict[int, int] = {}
    for chunk in text.split(","):
        pos, _, cnt = chunk.partition(":")
        counts[int(pos)] = int(cnt)
    return counts


def _parse_comp(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    m = args.m
    family = args.family
    if family == "path":
        h = loose_path(m, args.length)
    elif family == "cycle":
        h = loose_cycle(m, args.length)
    elif family == "star":
        h = hyperstar(m, args.k)
    elif family == "caterpillar":
        h = caterpillar(m, args.length, _parse_counts(args.pendants or ""))
    elif family == "bundled-cycle":
        h = cycle_with_pendants(m, args.length, _parse_counts(args.pendants or ""))
    elif family == "tailed-cycle":
        h = cycle_with_pendant_path(m, args.length, _parse_counts(args.pendants or ""))
    elif family == "fused-triangles":
        if args.side:
            h = fused_triangles_two_sites(m, args.center, args.side)
        else:
            h = fused_triangles(m, args.center)
    elif family == "theta":
        h = theta_hypergraph(m, _parse_comp(args.comp or "0,0,0,0"))
    elif family == "triple-triangles":
        h = triple_fused_triangles(m, _parse_comp(args.comp or "0,0,0,0,0,0,0"))
    elif family == "interlocked":
        h = interlocking_cycles_example(m)
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(f"unknown family {family!r}")
    h, _ = h.relabeled()
    if args.out:
        write_json(h, args.out)
    else:
        _print_json(h.to_dict())
    return 0


# ---------------------------------------------------------------------------
# measurements on a stored hypergraph
# ---------------------------------------------------------------------------


def _cmd_radius(args: argparse.Namespace) -> int:
    h = read_json(args.file)
    res = spectral_radius(h, tol=args.tol)
    _print_json(
        {
            "m": h.m,
            "k": h.k,
            "n": h.n,
            "radius": res.value,
            "residual": res.residual,
            "iterations": res.iterations,
        },
        args.out,
    )
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    h = read_json(args.file)
    _print_json(
        {"m": h.m, "k": h.k, "n": h.n, "eigenvalues": [float(x) for x in full_spectrum(h)]},
        args.out,
    )
    return 0


def _cmd_charpoly(args: argparse.Namespace) -> int:
    h = read_json(args.file)
    coeffs = char_poly(h)
    root = dominant_root(coeffs)
    _print_json(
        {
            "m": h.m,
            "k": h.k,
            "coefficients": coeffs,
            "dominant_root": root,
            "radius": root / (h.m - 1),
        },
        args.out,
    )
    return 0


def _cmd_quotient(args: argparse.Namespace) -> int:
    h = read_json(args.file)
    if args.parts:
        parts = [
            [int(v) for v in part.split(",")] for part in args.parts.split("|")
        ]
        parts = coarsest_equitable_refinement(h, parts)
    else:
        parts = coarsest_equitable_refinement(h)
    spectrum = quotient_spectrum(h, parts)
    _print_json(
        {
            "m": h.m,
            "k": h.k,
            "n": h.n,
            "parts": parts,
            "matrix": [[float(x) for x in row] for row in quotient_matrix(h, parts)],
            "eigenvalues": [float(x) for x in spectrum],
            "radius": float(max(spectrum)),
        },
        args.out,
    )
    return 0


# ---------------------------------------------------------------------------
# transform
# ---------------------------------------------------------------------------


def _parse_move(text: str) -> tuple[int, int]:
    edge, _, vertex = text.partition(":")
    return int(edge), int(vertex)


def _cmd_transform(args: argparse.Namespace) -> int:
    h = read_json(args.file)
    if args.kind == "move":
        result = move_edges(h, [_parse_move(mv) for mv in args.move], args.target)
    elif args.kind == "release":
        result = release_edge(h, args.edge, anchor=args.anchor)
    else:
        groups = []
        for spec_text in args.group:
            source_text, _, moves_text = spec_text.partition("=")
            groups.append(
                (int(source_text), [_parse_move(mv) for mv in moves_text.split(",")])
            )
        result = spread_edges(h, groups)
    payload = result.as_dict()
    payload.update({"m": result.hypergraph.m, "k": result.hypergraph.k,
                    "n": result.hypergraph.n})
    if args.out:
        write_json(result.hypergraph.relabeled()[0], args.out)
        payload["written"] = args.out
    _print_json(payload)
    return 0


# ---------------------------------------------------------------------------
# formula
# ---------------------------------------------------------------------------


def _poly_payload(coeffs: list[int], m: int) -> dict:
    root = dominant_root(coeffs)
    return {"coefficients": coeffs, "dominant_root": root, "radius": root / (m - 1)}


#: id -> (required parameter names, evaluator)
_FORMULAS: dict[str, tuple[tuple[str, ...], callable]] = {
    "star-radius": (("m", "k"), lambda a: {"radius": hyperstar_radius(a.m, a.k)}),
    "loose-path-bound": (("m",), lambda a: {"upper": loose_path_radius_bound(a.m)}),
    "loose-cycle-radius": (("m",), lambda a: {"radius": loose_cycle_radius(a.m)}),
    "loose-cycle-spectrum": (
        ("m", "l"),
        lambda a: {"eigenvalues": loose_cycle_spectrum(a.m, a.l)},
    ),
    "hypertree-bound": (
        ("m", "k", "d"),
        lambda a: {"upper": hypertree_diameter_bound(a.m, a.k, a.d)},
    ),
    "even-diameter-bound": (
        ("m", "k", "d"),
        lambda a: {"upper": hypertree_even_diameter_bound(a.m, a.k, a.d)},
    ),
    "unicyclic-bounds": (
        ("m", "k", "l"),
        lambda a: dict(zip(("lower", "upper"), unicyclic_radius_bounds(a.m, a.k, a.l))),
    ),
    "unicyclic-second-bound": (
        ("m", "k", "l"),
        lambda a: {"upper": unicyclic_second_bound(a.m, a.k, a.l)},
    ),
    "bundled-cycle-poly": (
        ("m", "k"),
        lambda a: _poly_payload(cycle_with_pendants_char_poly(a.m, a.k), a.m),
    ),
    "bundled-cycle-root-bounds": (
        ("m", "k"),
        lambda a: dict(
            zip(("lower", "upper"), cycle_with_pendants_root_bounds(a.m, a.k))
        ),
    ),
    "fused-triangles-poly": (
        ("m", "k"),
        lambda a: _poly_payload(fused_triangles_char_poly(a.m, a.k), a.m),
    ),
    "fused-triangles-root-bounds": (
        ("m", "k"),
        lambda a: dict(zip(("lower", "upper"), fused_triangles_root_bounds(a.m, a.k))),
    ),
    "theta-bound": (("m", "k"), lambda a: {"upper": theta_radius_bound(a.m, a.k)}),
    "triple-triangles-poly": (
        ("m", "k"),
        lambda a: _poly_payload(triple_fused_triangles_char_poly(a.m, a.k), a.m),
    ),
    "triple-triangles-root-bound": (
        ("m", "k"),
        lambda a: {"upper": triple_fused_triangles_root_bound(a.m, a.k)},
    ),
}


def _cmd_formula(args: argparse.Namespace) -> int:
    required, evaluate = _FORMULAS[args.id]
    missing = [name for name in required if getattr(args, name) is None]
    if missing:
        raise ValueError(
            f"formula {args.id!r} needs --{' --'.join(missing)}"
        )
    params = {name: getattr(args, name) for name in required}
    _print_json({"id": args.id, "params": params, **evaluate(args)}, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        for entry in list_registry():
            defaults = ", ".join(f"{k}={v}" for k, v in entry["defaults"].items())
            sys.stdout.write(f"{entry['theorem_id']}\n")
            sys.stdout.write(f"    {entry['summary']}\n")
            sys.stdout.write(f"    defaults: {defaults}\n")
        return 0
    if not args.theorem_id:
        raise ValueError("a theorem id is required (or use --list)")

    params: dict[str, int] = {}
    for name in ("m", "k", "d", "l"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    for item in args.param or []:
        key, _, value = item.partition("=")
        if not key or not value:
            raise ValueError(f"--param expects KEY=VALUE, got {item!r}")
        params[key] = int(value)

    report = verify(args.theorem_id, tol=args.tol, budget=args.budget, **params)

    text = emit_report(report, format=args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)

    if report.status == STATUS_FAIL and report.counterexample is not None:
        base = Path(args.out).parent if args.out else Path(".")
        ce_path = base / f"{report.theorem_id}.counterexample.json"
        ce_path.write_text(
            json.dumps(report.counterexample, indent=2) + "\n", encoding="utf-8"
        )
        sys.stderr.write(f"counter-instance written to {ce_path}\n")

    if args.figures:
        for path in render_figures(report, args.figures):
            sys.stderr.write(f"figure written to {path}\n")

    if report.status == STATUS_PASS:
        return 0
    if report.status == STATUS_FAIL:
        return 1
    return 2


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperspectra",
        description="Spectral radii of linear uniform hypergraphs: generators, "
        "eigensolvers, edge operations, and a registry of verified extremal claims.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="build a named family and emit its JSON form")
    gen.add_argument(
        "family",
        choices=[
            "path", "cycle", "star", "caterpillar", "bundled-cycle",
            "tailed-cycle", "fused-triangles", "theta", "triple-triangles",
            "interlocked",
        ],
    )
    gen.add_argument("--m", type=int, default=3, help="edge size (default 3)")
    gen.add_argument("--length", type=int, help="path/cycle length in edges")
    gen.add_argument("--k", type=int, help="edge count (star)")
    gen.add_argument("--pendants", help="bundle sizes as POS:CNT[,POS:CNT...]")
    gen.add_argument("--center", type=int, default=0, help="shared-junction bundle")
    gen.add_argument("--side", type=int, default=0, help="side-junction bundle")
    gen.add_argument("--comp", help="per-site bundle sizes as N,N,...")
    gen.add_argument("--out", help="write the hypergraph JSON here instead of stdout")
    gen.set_defaults(func=_cmd_gen)

    for name, fn, extra in (
        ("radius", _cmd_radius, True),
        ("spectrum", _cmd_spectrum, False),
        ("charpoly", _cmd_charpoly, False),
    ):
        cmd = sub.add_parser(name, help=f"{name} of a stored hypergraph")
        cmd.add_argument("file", help="hypergraph JSON file")
        if extra:
            cmd.add_argument("--tol", type=float, default=1e-12)
        cmd.add_argument("--out", help="write the JSON result here")
        cmd.set_defaults(func=fn)

    quo = sub.add_parser("quotient", help="equitable partition and its quotient")
    quo.add_argument("file", help="hypergraph JSON file")
    quo.add_argument(
        "--parts",
        help="seed partition, parts separated by | and vertices by , "
        "(refined to the coarsest equitable one; default: single part)",
    )
    quo.add_argument("--out", help="write the JSON result here")
    quo.set_defaults(func=_cmd_quotient)

    tr = sub.add_parser("transform", help="apply a certified edge operation")
    tr.add_argument("kind", choices=["move", "release", "spread"])
    tr.add_argument("file", help="hypergraph JSON file")
    tr.add_argument("--target", type=int, help="move: destination vertex")
    tr.add_argument(
        "--move", action="append", default=[],
        help="move/spread: EDGE:VERTEX pair to detach (repeatable)",
    )
    tr.add_argument("--edge", type=int, help="release: edge index to detach")
    tr.add_argument("--anchor", type=int, help="release: vertex kept in the edge")
    tr.add_argument(
        "--group", action="append", default=[],
        help="spread: SOURCE=EDGE:TARGET[,EDGE:TARGET...] (repeatable)",
    )
    tr.add_argument("--out", help="write the transformed hypergraph JSON here")
    tr.set_defaults(func=_cmd_transform)

    formula = sub.add_parser("formula", help="evaluate a closed-form value")
    formula.add_argument("id", choices=sorted(_FORMULAS))
    formula.add_argument("--m", type=int, help="edge size")
    formula.add_argument("--k", type=int, help="edge count")
    formula.add_argument("--d", type=int, help="diameter")
    formula.add_argument("--l", type=int, help="cycle length")
    formula.add_argument("--out", help="write the JSON result here")
    formula.set_defaults(func=_cmd_formula)

    ver = sub.add_parser(
        "verify",
        help="re-check a catalogued claim numerically",
        description="Exit code 0: all assertions hold.  1: a violation was "
        "found (counter-instance JSON written).  2: parameters outside the "
        "claim's hypotheses, or an error such as an exhausted budget.",
    )
    ver.add_argument("theorem_id", nargs="?", help="registry id (see --list)")
    ver.add_argument("--list", action="store_true", help="list the registry and exit")
    ver.add_argument("--m", type=int, help="edge size")
    ver.add_argument("--k", type=int, help="edge count")
    ver.add_argument("--d", type=int, help="diameter")
    ver.add_argument("--l", type=int, help="cycle length")
    ver.add_argument(
        "--param", action="append", default=[],
        help="extra claim parameter as KEY=VALUE (repeatable)",
    )
    ver.add_argument("--tol", type=float, default=DEFAULT_TOL,
                     help=f"strictness margin (default {DEFAULT_TOL:g})")
    ver.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                     help="candidate-evaluation budget")
    ver.add_argument("--out", help="write the report here instead of stdout")
    ver.add_argument("--format", choices=["json", "csv", "md"], default="json")
    ver.add_argument("--figures", help="directory for PNG charts of the report")
    ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
