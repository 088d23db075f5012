"""Command-line front end.

Subcommands map one-to-one onto the analysis layers: `analyze` (exact
flat bands of one labeling), `generic` (randomized unanimity decision),
`polytope` (generic support, vertical faces, witnesses), `verify-theorem`
(randomized dual-oracle sweep), and `bands` (numeric band sampling with
CSV output).  Reports are deterministic for a fixed input file, flag set,
and seed; `--json` switches the same report to machine-readable form.

Exit codes: 0 success / no flat band, 2 input error, 10 flat band found
(or, for the sweep, an oracle disagreement), 11 inconsistent random
trials (rerun with another seed).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .bands import (flat_energy_presence, numeric_flat_flags, sample_bands,
                    write_csv)
from .flatband import (FlatBandReport, flat_bands_of, generic_flat_band_decision)
from .floquet import FloquetMatrix, dispersion_polynomial
from .graph import (Labeling, find_support_zero_component, has_support_zero_domain)
from .graphio import (GraphFormatError, GraphSpec, graph_to_document,
                      load_graph_file, _rational_out)
from .laurent import LaurentPoly, format_poly
from .polytope import (facial_independence_witness, generic_support,
                       is_vertical_segment, vertical_faces)
from .sampling import (random_labeling, random_periodic_graph, rng_for,
                       tame_real_labeling)
from .unipoly import Coeffs

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_FLAT_BAND = 10
EXIT_INCONSISTENT = 11


# ---------------------------------------------------------------------------
# report plumbing


def format_unipoly(coeffs: Coeffs, var: str = "lam") -> str:
    if not coeffs:
        return "0"
    pieces = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if not c:
            continue
        if power == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = var if power == 1 else f"{var}^{power}"
        else:
            body = f"{abs(c)}*{var}" if power == 1 else f"{abs(c)}*{var}^{power}"
        pieces.append(("- " if c < 0 else "+ ") + body)
    head = pieces[0]
    head = "-" + head[2:] if head.startswith("- ") else head[2:]
    return " ".join([head] + pieces[1:])


def _render(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            label = str(key).replace("_", " ")
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{label}:")
                lines.extend(_render(item, indent + 1))
            else:
                shown = item if not isinstance(item, (dict, list)) else "(none)"
                lines.append(f"{pad}{label}: {shown}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, list) and not any(isinstance(x, (dict, list)) for x in item):
                lines.append(f"{pad}- [{', '.join(str(x) for x in item)}]")
            elif isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(_render(report)))


def _edge_label(spec_ids, edge) -> str:
    i, j, a = edge
    return f"{spec_ids[i]}~{spec_ids[j]}@{list(a)}"


def _graph_section(spec: GraphSpec) -> dict:
    return {
        "dimension": spec.graph.dimension,
        "orbits": list(spec.orbit_ids),
        "edge_classes": [_edge_label(spec.orbit_ids, e) for e in spec.graph.sorted_edges()],
    }


def _labeling_section(spec: GraphSpec, labeling: Labeling) -> dict:
    return {
        "potentials": {
            spec.orbit_ids[v]: _rational_out(labeling.potentials[v])
            for v in range(spec.graph.num_orbits)
        },
        "weights": {
            _edge_label(spec.orbit_ids, e): _rational_out(labeling.weights[e])
            for e in spec.graph.sorted_edges()
        },
    }


def _flatband_section(report: FlatBandReport) -> dict:
    return {
        "polynomial": format_unipoly(report.flatband_poly),
        "rational_roots": [
            {
                "energy": _rational_out(root),
                "multiplicity": mult,
                "divisibility_verified": ok,
            }
            for (root, mult), ok in zip(report.rational_roots, report.verified)
        ],
        "irreducible_factors": [
            {
                "polynomial": format_unipoly(factor.coefficients),
                "multiplicity": factor.multiplicity,
            }
            for factor in report.irreducible_factors
        ],
        "count_with_multiplicity": report.flat_band_count,
        "flat_band_found": report.has_flat_band,
    }


def resolve_labeling(spec: GraphSpec, mode: str, seed: int, tame: bool = False) -> Labeling:
    """Combine file labels with seeded random draws per the mode.

    ``given`` requires a fully labeled file; ``random`` ignores file
    labels entirely; ``auto`` keeps the given ones and fills the rest.
    Numeric commands pass ``tame`` to keep random labels in a range where
    dispersive bands stay visibly curved.
    """
    if mode == "given":
        return spec.labeling()
    rng = rng_for(seed, "labels")
    base = (tame_real_labeling if tame else random_labeling)(spec.graph, rng)
    if mode == "random":
        return base
    potentials = [
        spec.potentials.get(v, base.potentials[v])
        for v in range(spec.graph.num_orbits)
    ]
    weights = {
        edge: spec.weights.get(edge, base.weights[edge])
        for edge in spec.graph.edge_classes
    }
    return Labeling(spec.graph, potentials, weights)


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> int:
    spec = load_graph_file(args.file)
    labeling = resolve_labeling(spec, args.labels, args.seed)
    matrix = FloquetMatrix(spec.graph, labeling)
    report = flat_bands_of(spec.graph, labeling)
    exit_code = EXIT_FLAT_BAND if report.has_flat_band else EXIT_OK
    document = {
        "command": "analyze",
        "seed": args.seed,
        "labels_mode": args.labels,
        "graph": _graph_section(spec),
        "labeling": _labeling_section(spec, labeling),
        "floquet_matrix": [
            [format_poly(entry) for entry in row] for row in matrix.matrix.entries
        ],
        "dispersion": format_poly(matrix.dispersion()),
        "flat_bands": _flatband_section(report),
        "exit_code": exit_code,
    }
    emit(document, args.json)
    return exit_code


def cmd_generic(args) -> int:
    spec = load_graph_file(args.file)
    decision = generic_flat_band_decision(spec.graph, trials=args.trials, seed=args.seed)
    if not decision.consistent:
        exit_code = EXIT_INCONSISTENT
    elif decision.has_flat_band:
        exit_code = EXIT_FLAT_BAND
    else:
        exit_code = EXIT_OK
    document = {
        "command": "generic",
        "seed": args.seed,
        "trials": args.trials,
        "graph": _graph_section(spec),
        "per_trial_flat_band_counts": [r.flat_band_count for r in decision.reports],
        "consistent": decision.consistent,
        "generic_flat_band": decision.has_flat_band,
        "exit_code": exit_code,
    }
    emit(document, args.json)
    return exit_code


def cmd_polytope(args) -> int:
    spec = load_graph_file(args.file)
    graph = spec.graph
    estimate = generic_support(graph, trials=args.trials, seed=args.seed)
    points = sorted(estimate.points)
    vertical = is_vertical_segment(estimate.points)
    document = {
        "command": "polytope",
        "seed": args.seed,
        "trials": args.trials,
        "graph": _graph_section(spec),
        "generic_support": [list(p) for p in points],
        "vertical_segment": vertical,
    }
    if vertical:
        ladder = {(0,) * graph.dimension + (b,) for b in range(graph.num_orbits + 1)}
        document["vertical_segment_is_full_ladder"] = estimate.points == ladder
        document["faces"] = []
        document["notice"] = "support is a vertical segment; no proper vertical faces"
    elif graph.dimension > 2:
        document["faces"] = []
        document["notice"] = "face enumeration is limited to dimension <= 2; skipped"
    else:
        representative = random_labeling(graph, rng_for(args.seed, "facial"))
        rep_dispersion = dispersion_polynomial(graph, representative)
        faces = []
        for k, face in enumerate(vertical_faces(estimate.points)):
            witness = facial_independence_witness(
                graph, face.normal, rng_for(args.seed, "witness", k),
                support_points=estimate.points,
            )
            facial = LaurentPoly(
                graph.dimension,
                {key: rep_dispersion.coefficient(key) for key in face.members},
            )
            faces.append({
                "normal": list(face.normal.components),
                "min_value": face.min_value,
                "members": [list(p) for p in face.sorted_members()],
                "facial_polynomial": format_poly(facial),
                "independence_witness": (
                    spec.orbit_ids[witness] if witness is not None else None
                ),
            })
        document["faces"] = faces
        document["facial_note"] = "facial polynomials shown for one representative random labeling"
    document["exit_code"] = EXIT_OK
    emit(document, args.json)
    return EXIT_OK


def cmd_verify_theorem(args) -> int:
    dims = tuple(int(part) for part in args.dims.split(","))
    if not dims or any(d < 1 or d > 2 for d in dims):
        raise GraphFormatError("--dims must list dimensions within 1..2")
    if not 1 <= args.max_orbits <= 4:
        raise GraphFormatError("--max-orbits must be within 1..4")
    if not 0 <= args.max_edges <= 6:
        raise GraphFormatError("--max-edges must be within 0..6")

    both_flat = both_none = segment_agree = 0
    disagreements = []
    inconsistent = []
    ladder_failures = []
    for t in range(args.count):
        graph = random_periodic_graph(
            rng_for(args.seed, "graph", t),
            dims=dims, max_orbits=args.max_orbits, max_edges=args.max_edges,
        )
        combinatorial = find_support_zero_component(graph) is not None
        decision = generic_flat_band_decision(
            graph, trials=args.trials, seed=f"{args.seed}/alg/{t}"
        )
        serialized = graph_to_document(graph)
        if not decision.consistent:
            inconsistent.append({"trial": t, "graph": serialized})
        elif combinatorial != decision.has_flat_band:
            disagreements.append({
                "trial": t,
                "support_zero_component": combinatorial,
                "generic_flat_band": decision.has_flat_band,
                "graph": serialized,
            })
        elif decision.has_flat_band:
            both_flat += 1
        else:
            both_none += 1

        estimate = generic_support(graph, trials=args.trials, seed=f"{args.seed}/sup/{t}")
        segment = is_vertical_segment(estimate.points)
        whole_domain = has_support_zero_domain(graph)
        if segment != whole_domain:
            disagreements.append({
                "trial": t,
                "vertical_segment": segment,
                "support_zero_domain": whole_domain,
                "graph": serialized,
            })
        else:
            segment_agree += 1
            if segment:
                ladder = {
                    (0,) * graph.dimension + (b,)
                    for b in range(graph.num_orbits + 1)
                }
                if estimate.points != ladder:
                    ladder_failures.append({"trial": t, "graph": serialized})

    if disagreements or ladder_failures:
        exit_code = EXIT_FLAT_BAND
    elif inconsistent:
        exit_code = EXIT_INCONSISTENT
    else:
        exit_code = EXIT_OK
    document = {
        "command": "verify-theorem",
        "seed": args.seed,
        "count": args.count,
        "trials_per_graph": args.trials,
        "dims": list(dims),
        "max_orbits": args.max_orbits,
        "max_edges": args.max_edges,
        "oracle_agreement": {
            "both_flat_band": both_flat,
            "both_no_flat_band": both_none,
            "disagreements": disagreements,
            "inconsistent_trials": inconsistent,
        },
        "vertical_segment_agreement": {
            "agreeing": segment_agree,
            "ladder_failures": ladder_failures,
        },
        "exit_code": exit_code,
    }
    emit(document, args.json)
    return exit_code


def cmd_bands(args) -> int:
    spec = load_graph_file(args.file)
    labeling = resolve_labeling(spec, args.labels, args.seed, tame=True)
    sample = sample_bands(spec.graph, labeling, resolution=args.resolution)
    flags = numeric_flat_flags(sample, args.tol)
    exact = flat_bands_of(spec.graph, labeling)
    crosschecks = []
    for (root, multiplicity), verified in zip(exact.rational_roots, exact.verified):
        target = float(root)
        matching = [
            j + 1
            for j in range(spec.graph.num_orbits)
            if max(abs(row[j] - target) for row in sample.bands) < args.tol
        ]
        present = flat_energy_presence(sample, target, multiplicity, args.tol)
        crosschecks.append({
            "energy": _rational_out(root),
            "multiplicity": multiplicity,
            "matching_bands": matching,
            "present_at_every_grid_point": present,
            "consistent": present and verified,
        })
    document = {
        "command": "bands",
        "seed": args.seed,
        "labels_mode": args.labels,
        "resolution": args.resolution,
        "tolerance": args.tol,
        "graph": _graph_section(spec),
        "labeling": _labeling_section(spec, labeling),
        "grid_points": len(sample.grid),
        "band_flatness": [f"{x:.3e}" for x in sample.flatness],
        "numeric_flat_bands": flags,
        "exact_crosscheck": crosschecks,
        "exit_code": EXIT_OK,
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            write_csv(sample, handle)
        document["csv"] = args.out
    emit(document, args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flatbands",
        description="Exact flat-band analysis of periodic graph operators.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true",
                        help="emit the report as JSON instead of text")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="graph description (JSON)")
        p.add_argument("--seed", type=int, default=0,
                       help="base seed for every random draw (default 0)")

    p = sub.add_parser("analyze", help="exact flat bands of one labeling")
    add_common(p)
    p.add_argument("--labels", choices=("auto", "given", "random"), default="auto",
                   help="auto: keep file labels, randomize missing ones; "
                        "given: require a fully labeled file; "
                        "random: draw every label from the seed")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("generic", help="unanimous flat-band decision over random labelings")
    add_common(p)
    p.add_argument("--trials", type=int, default=5, help="number of labelings (default 5)")
    p.set_defaults(handler=cmd_generic)

    p = sub.add_parser("polytope", help="generic support, vertical faces, witnesses")
    add_common(p)
    p.add_argument("--trials", type=int, default=5,
                   help="labelings pooled into the generic support (default 5)")
    p.set_defaults(handler=cmd_polytope)

    p = sub.add_parser(
        "verify-theorem",
        help="random sweep comparing the combinatorial and algebraic flat-band oracles",
        description="Generates random periodic graphs (some intentionally "
                    "disconnected or edge-free) and checks that the "
                    "support-zero-component search agrees with the randomized "
                    "algebraic flat-band decision, plus the vertical-segment "
                    "equivalence for the whole fundamental domain.",
    )
    add_common(p, with_file=False)
    p.add_argument("--count", type=int, default=200, help="graphs to generate (default 200)")
    p.add_argument("--trials", type=int, default=5,
                   help="random labelings per graph and oracle (default 5)")
    p.add_argument("--dims", default="1,2", help="comma-separated dimensions (default 1,2)")
    p.add_argument("--max-orbits", type=int, default=4, help="orbit cap per graph (default 4)")
    p.add_argument("--max-edges", type=int, default=6, help="edge-class cap (default 6)")
    p.set_defaults(handler=cmd_verify_theorem)

    p = sub.add_parser("bands", help="numeric band functions on the momentum torus")
    add_common(p)
    p.add_argument("--labels", choices=("auto", "given", "random"), default="auto",
                   help="label handling as in analyze; random draws here use a "
                        "tame range suited to floating point")
    p.add_argument("--resolution", type=int, default=16,
                   help="grid points per torus axis (default 16)")
    p.add_argument("--tol", type=float, default=1e-8,
                   help="flatness tolerance for flagging bands (default 1e-8)")
    p.add_argument("--out", help="write the band grid to this CSV path")
    p.set_defaults(handler=cmd_bands)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GraphFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
