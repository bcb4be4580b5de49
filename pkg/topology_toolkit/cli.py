"""
Command-line front end.

    finite-topology gen octahedron -o octahedron.json
    finite-topology report octahedron.json --topology-count --limit 100000
    finite-topology verify energy --seed 7
    finite-topology homeo a.json b.json --max-refine 2
    finite-topology matrix fig1 --kind green --format csv --output-dir out

Every verb prints JSON with sorted keys. A SOURCE is a JSON file (facet
list or graph) or a registry key such as ``octahedron`` or ``cycle:5``.

Exit codes: 0 ok, 1 property failure, 2 parse or argument error,
3 budget or limit exceeded.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from topology_toolkit.complexes.constants import SCHEMA_VERSION
from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.config import ToolkitConfig
from topology_toolkit.energy.green import connection_matrix, green_matrix
from topology_toolkit.errors import (
    BudgetExceededError,
    ComplexParseError,
    TopologyLimitExceeded,
)
from topology_toolkit.graphs.graph import skeleton_graph, whitney_complex
from topology_toolkit.graphs.refinement import edge_refine, refine_times
from topology_toolkit.hodge.dynamics import (
    fixed_simplices,
    index_sum,
    lefschetz_number,
    simplex_map_from_vertex_map,
)
from topology_toolkit.hodge.exterior import betti, oriented
from topology_toolkit.hodge.interaction import wu_betti
from topology_toolkit.homeo.search import HomeomorphismChecker
from topology_toolkit.homeo.verdict import INCONCLUSIVE
from topology_toolkit.io.exporter import MatrixExporter, facets_json
from topology_toolkit.io.factory import ComplexFactory, ReaderFactory
from topology_toolkit.recognition.recognizer import Recognizer
from topology_toolkit.report import build_invariant_report
from topology_toolkit.verify import SUITES, VerificationRunner

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3

MATRIX_KINDS = ('connection', 'green', 'green2', 'dirac', 'hodge')


def load_complex(source: str, verbose: bool = False) -> SimplicialComplex:
    """
    A complex from a JSON file or a registry key.

    Raises
    ------
    ComplexParseError
        If the file does not hold a complex or the key is unknown.
    """
    path = Path(source)
    if path.exists():
        result = ReaderFactory.read(path, verbose=verbose)
        if not isinstance(result, SimplicialComplex):
            raise ComplexParseError(f"{source} does not describe a complex")
        return result
    try:
        return ComplexFactory.create(source)
    except ValueError as e:
        raise ComplexParseError(f"{source} is neither a file nor a registry key.\n{e}") from e


def _emit(data: Dict[str, Any]) -> None:
    data = {'schema_version': SCHEMA_VERSION, **data}
    print(json.dumps(data, sort_keys=True))


def _write_or_print(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)


# -- verbs ------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace, config: ToolkitConfig) -> int:
    try:
        G = ComplexFactory.create(args.name)
    except ValueError as e:
        raise ComplexParseError(str(e)) from e
    _write_or_print(facets_json(G), args.output)
    return EXIT_OK


def cmd_report(args: argparse.Namespace, config: ToolkitConfig) -> int:
    G = load_complex(args.source, args.verbose)
    report = build_invariant_report(
        G,
        name=args.source,
        wu3=args.wu3,
        with_wu_betti=args.wu_betti,
        topology_count=args.topology_count,
        limit=args.limit,
        config=config,
        verbose=args.verbose,
    )
    if args.format == 'csv':
        values = pd.Series({k: json.dumps(v) for k, v in report.values.items()}, name='value')
        sys.stdout.write(values.to_csv(index_label='invariant'))
    else:
        print(report.to_json())
    return EXIT_BUDGET_EXCEEDED if report.limit_exceeded else EXIT_OK


def cmd_verify(args: argparse.Namespace, config: ToolkitConfig) -> int:
    runner = VerificationRunner(config, seed=args.seed, verbose=args.verbose)
    report = runner.run(args.suite)
    if args.format == 'csv':
        sys.stdout.write(report.get_check_stats().to_csv(index=False))
    else:
        print(report.to_json())
    return EXIT_OK if report.all_passed else EXIT_PROPERTY_FAILURE


def cmd_homeo(args: argparse.Namespace, config: ToolkitConfig) -> int:
    G = load_complex(args.first, args.verbose)
    H = load_complex(args.second, args.verbose)
    overrides = {}
    if args.max_refine is not None:
        overrides['max_refinements'] = args.max_refine
    if args.budget is not None:
        overrides['node_budget'] = args.budget
    if overrides:
        config = config.merge({'homeo': overrides})
    verdict = HomeomorphismChecker(config, verbose=args.verbose).homeomorphic(G, H)
    _emit(verdict.to_dict())
    if verdict.result == INCONCLUSIVE and verdict.certificate.get('budget_exhausted'):
        return EXIT_BUDGET_EXCEEDED
    return EXIT_OK


def cmd_refine(args: argparse.Namespace, config: ToolkitConfig) -> int:
    G = load_complex(args.source, args.verbose)
    if args.edge:
        g = edge_refine(skeleton_graph(G), tuple(args.edge))
        refined = whitney_complex(g)
    else:
        refined = refine_times(G, args.times)
    _write_or_print(facets_json(refined), args.output)
    return EXIT_OK


def _matrix(G: SimplicialComplex, kind: str):
    if kind == 'connection':
        return connection_matrix(G).entries, None
    if kind == 'green':
        return green_matrix(G, 1).entries, None
    if kind == 'green2':
        return green_matrix(G, 2).entries, None
    O = oriented(G)
    d = O.exterior_derivative()
    dirac = d + d.T
    if kind == 'dirac':
        return dirac, None
    return dirac @ dirac, list(O.f)


def cmd_matrix(args: argparse.Namespace, config: ToolkitConfig) -> int:
    G = load_complex(args.source, args.verbose)
    matrix, blocks = _matrix(G, args.kind)
    index = [x.label() for x in G]
    extension = {'csv': 'csv', 'json': 'json', 'excel': 'xlsx'}[args.format]
    filename = args.filename or f"{args.kind}.{extension}"
    exporter = MatrixExporter(output_dir=args.output_dir, verbose=args.verbose)
    path = exporter.export(matrix, index, method=args.format, filename=filename, block_sizes=blocks)
    _emit({'kind': args.kind, 'path': str(path), 'size': len(index)})
    return EXIT_OK


def cmd_betti(args: argparse.Namespace, config: ToolkitConfig) -> int:
    G = load_complex(args.source, args.verbose)
    _emit({'betti': betti(G), 'euler': G.euler()})
    return EXIT_OK


def cmd_wubetti(args: argparse.Namespace, config: ToolkitConfig) -> int:
    G = load_complex(args.source, args.verbose)
    numbers = wu_betti(G, budget_seconds=args.budget, config=config, verbose=args.verbose)
    _emit({'wu_betti': numbers})
    return EXIT_OK


def cmd_lefschetz(args: argparse.Namespace, config: ToolkitConfig) -> int:
    G = load_complex(args.source, args.verbose)
    phi = ReaderFactory.read(args.map, verbose=args.verbose)
    if not isinstance(phi, dict):
        raise ComplexParseError(f"{args.map} does not hold a vertex map")
    f = simplex_map_from_vertex_map(G, G, phi)
    number = lefschetz_number(f, G)
    total = index_sum(f, G)
    _emit({
        'lefschetz_number': number,
        'index_sum': total,
        'fixed_simplices': [x.label() for x in fixed_simplices(f, G)],
        'agree': number == total,
    })
    return EXIT_OK if number == total else EXIT_PROPERTY_FAILURE


def cmd_recognize(args: argparse.Namespace, config: ToolkitConfig) -> int:
    G = load_complex(args.source, args.verbose)
    recognizer = Recognizer(config, verbose=args.verbose)
    with_boundary = recognizer.is_manifold_with_boundary(G)
    _emit({
        'contractible': recognizer.is_contractible(G),
        'sphere': recognizer.is_sphere(G),
        'ball': recognizer.is_ball(G),
        'manifold': recognizer.is_manifold(G),
        'manifold_with_boundary': None if with_boundary is None else with_boundary[0],
    })
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finite-topology",
        description="Finite topology on simplicial complexes: invariants, energy, homeomorphism.",
    )
    parser.add_argument("--preset", choices=["quick", "default", "exhaustive"], default="default",
                        help="Limits and budgets preset (default: default).")
    parser.add_argument("-v", "--verbose", action="store_true", help="Print progress lines.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="Write the facet list of a registry complex.")
    p.add_argument("name", help=f"Registry key: {', '.join(ComplexFactory.get_supported_keys())}")
    p.add_argument("-o", "--output", help="Output file (default: stdout).")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("report", help="Invariant report of a complex.")
    p.add_argument("source")
    p.add_argument("--wu3", action="store_true", help="Also compute the cubic Wu characteristic.")
    p.add_argument("--wu-betti", action="store_true", help="Also compute interaction Betti numbers.")
    p.add_argument("--topology-count", action="store_true", help="Count the open sets.")
    p.add_argument("--limit", type=int, metavar="N", help="Open-set enumeration limit.")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(handler=cmd_report)

    p = sub.add_parser("verify", help="Run a property suite.")
    p.add_argument("suite", choices=list(SUITES))
    p.add_argument("--seed", type=int, metavar="N", help="Seed of the random complexes.")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("homeo", help="Homeomorphism verdict for two complexes.")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--max-refine", type=int, metavar="N", help="Refinement depth of the search.")
    p.add_argument("--budget", type=int, metavar="N", help="Search node budget.")
    p.set_defaults(handler=cmd_homeo)

    p = sub.add_parser("refine", help="Barycentric or edge refinement.")
    p.add_argument("source")
    p.add_argument("--times", type=int, default=1, metavar="N", help="Barycentric refinements (default: 1).")
    p.add_argument("--edge", type=int, nargs=2, metavar=("A", "B"), help="Edge-refine the edge A-B instead.")
    p.add_argument("-o", "--output", help="Output file (default: stdout).")
    p.set_defaults(handler=cmd_refine)

    p = sub.add_parser("matrix", help="Export a simplex-indexed matrix.")
    p.add_argument("source")
    p.add_argument("--kind", choices=list(MATRIX_KINDS), default="connection")
    p.add_argument("--format", choices=["json", "csv", "excel"], default="json")
    p.add_argument("--output-dir", default=".")
    p.add_argument("--filename", help="Output file name (default: KIND.EXT).")
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("betti", help="Betti numbers.")
    p.add_argument("source")
    p.set_defaults(handler=cmd_betti)

    p = sub.add_parser("wubetti", help="Interaction (Wu) Betti numbers.")
    p.add_argument("source")
    p.add_argument("--budget", type=float, metavar="SECONDS", help="Time budget.")
    p.set_defaults(handler=cmd_wubetti)

    p = sub.add_parser("lefschetz", help="Lefschetz number of a vertex map.")
    p.add_argument("source")
    p.add_argument("map", help='Vertex-map file {"map": {"1": 2, ...}}.')
    p.set_defaults(handler=cmd_lefschetz)

    p = sub.add_parser("recognize", help="Sphere, ball and manifold verdicts.")
    p.add_argument("source")
    p.set_defaults(handler=cmd_recognize)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = ToolkitConfig.from_preset(args.preset)
    try:
        return args.handler(args, config)
    except (BudgetExceededError, TopologyLimitExceeded) as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_BUDGET_EXCEEDED
    except (ComplexParseError, ValueError) as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
