import argparse
import logging
import sys
from typing import List, Optional

from src.config import (DEFAULT_SEED, EXHAUSTIVE_SCHMID_MAX_P, EXIT_CHECK_FAILURE, EXIT_PASS, EXIT_RESOURCE_CAP,
                        EXIT_USAGE, MAX_BASIS_SIZE, SCHMID_SAMPLE_SIZE, setup_logging)
from src.data_loader import build_run_config, load_run_config, read_json_document
from src.field_arith import build_field
from src.groebner.buchberger import ResourceCapExceeded
from src.groebner.coinvariants import coinvariant_stats, hsop_bound_comparisons, hsop_bounds, top_degree_formula
from src.groebner.verification import verify_rep
from src.invariants.construction import hilbert_ideal_generators, prune_redundant, universal_basis
from src.invariants.zero_sum import schmid_sweep, schmid_zero_sum, zerosum_completion
from src.models import FormulaComparison, Report, RunConfig
from src.polynomials.orders import MonomialOrder, order_from_spec, sample_orders
from src.reporting import (basis_document, coinvariant_document, coinvariant_summary, generator_counts,
                           render_basis_text, render_coinvariants_text, render_report_text, render_sweep_text,
                           to_json, write_output)

logger = logging.getLogger(__name__)

def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, help="Path to a run config JSON file")
    common.add_argument("--json", action="store_true", help="Print JSON instead of tables")
    common.add_argument("--seed", type=int, help="Seed for sampled orders and zero-sum sampling")
    common.add_argument("--orders", type=int, help="Number of sampled monomial orders")
    common.add_argument("--out", type=str, help="Write the JSON result to this path")
    common.add_argument("--p", type=int, help="Odd modulus p of D_2p")
    common.add_argument("--r", type=int, help="Number of two-dimensional x/y blocks")
    common.add_argument("--s", type=int, help="Number of z/w blocks with trivial rho action")
    common.add_argument("--weights", type=_int_list, help="Comma-separated rho-weights a_1..a_r")
    common.add_argument("--hsop-degrees", dest="hsop_degrees", type=_int_list, help="Comma-separated hsop degrees")
    common.add_argument("--jobs", type=int, help="Worker processes for per-order verification")
    common.add_argument("--log_level", type=str, default="INFO",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], help="Logging level")

    parser = argparse.ArgumentParser(description="Universal Groebner bases of the D_2p Hilbert ideal over GF(2)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("basis", parents=[common], help="Print the universal basis and Hilbert-ideal generators")
    subparsers.add_parser("verify", parents=[common], help="Run the per-order verification suite")
    subparsers.add_parser("coinv", parents=[common], help="Coinvariant statistics and hsop bounds")
    subparsers.add_parser("field", parents=[common], help="Print the GF(2^k) descriptor for p")
    schmid = subparsers.add_parser("schmid", parents=[common], help="Zero-sum completions of repeated values")
    schmid.add_argument("--seq", type=_int_list, help="Comma-separated sequence over Z/p")
    schmid.add_argument("--pair", type=_int_list, help="1-based indices k1,k2 of an equal pair")
    schmid.add_argument("--exhaustive", action="store_true", help="Sweep all sequences of length p+1 (sampled above p=5)")
    schmid.add_argument("--require-pair", dest="require_pair", action="store_true",
                        help="Reject sequences shorter than p+1")
    schmid.add_argument("--samples", type=int, default=SCHMID_SAMPLE_SIZE, help="Sample size for sampled sweeps")
    return parser

def config_from_args(args: argparse.Namespace) -> RunConfig:
    overrides = {"p": args.p, "r": args.r, "s": args.s, "weights": args.weights, "seed": args.seed,
                 "sampled_orders": args.orders, "output": args.out, "hsop_degrees": args.hsop_degrees,
                 "jobs": args.jobs}
    if args.config:
        return load_run_config(args.config, overrides)
    return build_run_config({}, overrides)

def resolve_orders(config: RunConfig) -> List[MonomialOrder]:
    if config.orders:
        return [order_from_spec(spec, config.rep.nvars) for spec in config.orders]
    return sample_orders(config.rep, config.sampled_orders, config.seed)

def emit(args: argparse.Namespace, output: Optional[str], json_text: str, table_text: str) -> None:
    if output:
        write_output(json_text, output)
    print(json_text if args.json else table_text)

def cmd_basis(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    rep = config.rep
    full = universal_basis(rep)
    pruned = prune_redundant(full)
    hilbert = hilbert_ideal_generators(rep)
    names = rep.variable_names
    emit(args, config.output, to_json(basis_document(names, full, pruned, hilbert)),
         render_basis_text(names, full, pruned, hilbert))
    return EXIT_PASS

def cmd_verify(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    rep = config.rep
    field = build_field(rep.p)
    full = universal_basis(rep)
    orders = resolve_orders(config)
    verifications = verify_rep(rep, orders, max_basis_size=config.max_basis_size or MAX_BASIS_SIZE,
                               jobs=config.jobs)
    stats = coinvariant_stats(rep, orders[0])
    formulas = [FormulaComparison(name="top_degree", expected=top_degree_formula(rep), computed=stats.top_degree)]
    bounds = hsop_bound_comparisons(stats, config.hsop_degrees) if config.hsop_degrees else []
    report = Report.assemble(config=config, field=field,
                             generator_counts=generator_counts(full, prune_redundant(full), hilbert_ideal_generators(rep)),
                             verifications=verifications, coinvariants=coinvariant_summary(stats, rep.variable_names),
                             formulas=formulas, bounds=bounds)
    emit(args, config.output, to_json(report), render_report_text(report))
    if not report.passed:
        logger.error(f"Verification failed for {rep.label()}")
        return EXIT_CHECK_FAILURE
    return EXIT_PASS

def cmd_coinv(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    rep = config.rep
    order = resolve_orders(config)[0]
    stats = coinvariant_stats(rep, order)
    bounds = hsop_bounds(config.hsop_degrees) if config.hsop_degrees else None
    names = rep.variable_names
    emit(args, config.output, to_json(coinvariant_document(stats, names, bounds)),
         render_coinvariants_text(stats, names, bounds))
    if bounds is not None and (stats.top_degree > bounds.top_bound or stats.dimension > bounds.dim_bound):
        logger.error(f"Coinvariants of {rep.label()} exceed the hsop bounds {tuple(bounds)}")
        return EXIT_CHECK_FAILURE
    return EXIT_PASS

def cmd_field(args: argparse.Namespace) -> int:
    p = args.p
    if p is None and args.config:
        document = read_json_document(args.config)
        p = document.get("rep", document).get("p")
    if p is None:
        raise ValueError("field needs p (from --config or --p)")
    text = to_json(build_field(p))
    emit(args, args.out, text, text)
    return EXIT_PASS

def _render_witness(k1: int, k2: int, subset) -> str:
    indices = ",".join(str(i + 1) for i in subset)
    return f"pair ({k1 + 1},{k2 + 1}), subset {{{indices}}}"

def cmd_schmid(args: argparse.Namespace) -> int:
    p = args.p
    if p is None:
        raise ValueError("schmid needs --p")
    if args.exhaustive:
        exhaustive = p <= EXHAUSTIVE_SCHMID_MAX_P
        seed = args.seed if args.seed is not None else DEFAULT_SEED
        result = schmid_sweep(p, exhaustive=exhaustive, samples=args.samples, seed=seed)
        document = {"p": p, "exhaustive": exhaustive, "sequences_checked": result.sequences_checked,
                    "pairs_checked": result.pairs_checked, "failures": len(result.failures)}
        emit(args, args.out, to_json(document), render_sweep_text(result))
        return EXIT_PASS if result.passed else EXIT_CHECK_FAILURE
    if not args.seq:
        raise ValueError("schmid needs --seq or --exhaustive")
    seq = args.seq
    if args.pair:
        if len(args.pair) != 2:
            raise ValueError("--pair takes two 1-based indices")
        k1, k2 = args.pair[0] - 1, args.pair[1] - 1
        if not (0 <= k1 < len(seq) and 0 <= k2 < len(seq)):
            raise ValueError("--pair indices are out of range")
        subset = zerosum_completion(seq, k1, k2, p)
        document = {"p": p, "seq": seq, "k1": k1 + 1, "k2": k2 + 1,
                    "subset": None if subset is None else [i + 1 for i in subset]}
        text = f"pair ({k1 + 1},{k2 + 1}): no completion" if subset is None else _render_witness(k1, k2, subset)
    else:
        witness = schmid_zero_sum(seq, p, require_length=args.require_pair)
        document = {"p": p, "seq": seq, "k1": witness.k1 + 1, "k2": witness.k2 + 1,
                    "subset": [i + 1 for i in witness.subset]}
        text = _render_witness(*witness)
    emit(args, args.out, to_json(document), text)
    return EXIT_PASS

COMMANDS = {
    "basis": cmd_basis,
    "verify": cmd_verify,
    "coinv": cmd_coinv,
    "field": cmd_field,
    "schmid": cmd_schmid,
}

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    setup_logging(args.log_level)
    logger.info(f"Starting {args.command}")
    try:
        status = COMMANDS[args.command](args)
    except ResourceCapExceeded as e:
        logger.error(f"Resource cap exceeded: {e}")
        return EXIT_RESOURCE_CAP
    except (ValueError, FileNotFoundError) as e:
        logger.error(f"An error occurred during {args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logger.info(f"Finished {args.command} with exit status {status}")
    return status

if __name__ == "__main__":
    sys.exit(main())
