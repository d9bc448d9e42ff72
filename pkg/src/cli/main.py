import argparse
import json
import os
import sys
import traceback
from pathlib import Path
from typing import List, Optional

from analysis.convergence import ExperimentSpec
from cli.service import (
    bounds_command,
    converge_command,
    experiment_from_dict,
    gen_command,
    load_experiment,
    parse_sizes,
    resolve_source,
    spectrum_command,
    verify_command,
)
from config.config import Config
from families.spec import FamilyPairSpec, parse_family
from hypergraph.io import load_hypergraph
from utils.errors import HyperspecError, InvalidParameters
from utils.logger import Logger

logger = Logger.get_logger("cli")

OPERATOR_CHOICES = ["D", "A", "L", "K", "LH", "KH"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperspec",
        description="Spectra and spectral measures of oriented hypergraphs",
    )
    parser.add_argument("--tol", type=float, help="clustering tolerance (overrides HYPERSPEC_TOL)")
    parser.add_argument("--version", action="version", version=f"hyperspec {Config.VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="eigenvalues and multiplicities of one operator")
    spectrum.add_argument("--input", help="hypergraph JSON file")
    spectrum.add_argument("--family", help='family spec, e.g. "r_complete n=4 r=2" or JSON')
    spectrum.add_argument("--operator", required=True, choices=OPERATOR_CHOICES)
    spectrum.add_argument("--size", type=int, help="grow the family to this size")
    spectrum.add_argument("--check", action="store_true", help="also run the interval, multiplicity and trace checks")
    spectrum.add_argument("--out", help="write the JSON here instead of stdout")

    verify = sub.add_parser("verify", help="numeric spectrum against the closed form")
    verify.add_argument("--family", required=True)
    verify.add_argument("--operator", required=True, choices=OPERATOR_CHOICES)
    verify.add_argument("--size", type=int)

    converge = sub.add_parser("converge", help="sweep a family or family pair over sizes")
    converge.add_argument("--experiment", help="experiment JSON file")
    converge.add_argument("--family", help="family (mode class) or first family of a pair")
    converge.add_argument("--second", help="second family of a pair (modes weak_star, tv)")
    converge.add_argument("--operator", choices=OPERATOR_CHOICES)
    converge.add_argument("--sizes", help="a:b:step or comma list")
    converge.add_argument("--mode", choices=["class", "weak_star", "tv"], default="class")
    converge.add_argument("--epsilon", type=float, help="hat modulus epsilon for the weak-star bound")
    converge.add_argument("--seed", type=int)
    converge.add_argument("--format", choices=["json", "csv"], default="json")
    converge.add_argument("--out", help="path prefix; writes <out>.csv and <out>.json")

    bounds = sub.add_parser("bounds", help="perturbation bounds between two hypergraphs")
    bounds.add_argument("--first", required=True, help="hypergraph JSON file")
    bounds.add_argument("--second", required=True, help="hypergraph JSON file")
    bounds.add_argument("--check", action="store_true", help="exit 3 when a bound fails")

    gen = sub.add_parser("gen", help="emit a family member as hypergraph JSON")
    gen.add_argument("--family", required=True)
    gen.add_argument("--size", type=int)
    gen.add_argument("--out")
    return parser


def _emit(text: str, out: Optional[str] = None) -> None:
    if out:
        Path(out).write_text(text + ("" if text.endswith("\n") else "\n"))
        logger.info(f"[CLI] wrote {out}")
    else:
        sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))


def _experiment(args) -> ExperimentSpec:
    if args.experiment:
        return load_experiment(args.experiment)
    if not (args.family and args.operator and args.sizes):
        raise InvalidParameters("converge needs --experiment, or --family, --operator and --sizes")
    data = {
        "mode": args.mode,
        "operator": args.operator,
        "sizes": parse_sizes(args.sizes),
        "epsilon": args.epsilon,
        "seed": args.seed,
    }
    if args.second:
        data["pair"] = FamilyPairSpec(first=parse_family(args.family), second=parse_family(args.second))
    else:
        data["family"] = parse_family(args.family)
    return experiment_from_dict(data)


def run_command(args) -> int:
    if args.command == "spectrum":
        source = resolve_source(args.input, args.family)
        result = spectrum_command(source, args.operator, size=args.size, check=args.check)
        _emit(json.dumps(result), args.out)
        return 0
    if args.command == "verify":
        result = verify_command(parse_family(args.family), args.operator, size=args.size)
        _emit(json.dumps(result))
        return 0 if result["passed"] else 3
    if args.command == "converge":
        report = converge_command(_experiment(args))
        if args.out:
            Path(f"{args.out}.csv").write_text(report.to_csv())
            Path(f"{args.out}.json").write_text(report.to_json() + "\n")
            logger.info(f"[CLI] wrote {args.out}.csv and {args.out}.json")
        _emit(report.to_csv() if args.format == "csv" else report.to_json())
        return 0
    if args.command == "bounds":
        result = bounds_command(load_hypergraph(args.first), load_hypergraph(args.second))
        _emit(json.dumps(result))
        return 3 if args.check and not result["holds"] else 0
    result = gen_command(parse_family(args.family), size=args.size)
    _emit(result, args.out)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    previous_tol = os.environ.get("HYPERSPEC_TOL")
    try:
        if args.tol is not None:
            if args.tol <= 0.0:
                raise InvalidParameters("--tol must be positive")
            os.environ["HYPERSPEC_TOL"] = repr(args.tol)
        return run_command(args)
    except HyperspecError as e:
        logger.error(f"[CLI] {args.command} failed: {type(e).__name__}: {e}")
        sys.stdout.write(json.dumps(e.to_dict()) + "\n")
        return e.exit_code
    except Exception as e:
        logger.error(f"[CLI] unexpected error in {args.command}: {e}\n{traceback.format_exc()}")
        sys.stdout.write(json.dumps({"error": type(e).__name__, "detail": str(e)}) + "\n")
        return 1
    finally:
        if previous_tol is None:
            os.environ.pop("HYPERSPEC_TOL", None)
        else:
            os.environ["HYPERSPEC_TOL"] = previous_tol


if __name__ == "__main__":
    sys.exit(main())
