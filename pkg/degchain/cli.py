"""
Command-line front end.

Every command writes one JSON document (or, where available, CSV) to
stdout or ``--out``. Logging goes to stderr. Exit codes: 0 success, 1 usage
error, 2 infeasible degree sequence, 3 size cap exceeded, 4 failed
verification.
"""

import argparse
import logging
import sys
from collections import Counter
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, NoReturn

from .chains import ChainConfig, ChainKind, relabel_samples, sample
from .config import DEFAULT_LIMITS
from .errors import (
    CanonicalFormLimitError,
    DegchainError,
    InfeasibleSequenceError,
    NoConvergenceError,
    NonUniformStationaryError,
    NotLumpableError,
    StateSpaceTooLargeError,
    VerificationError,
)
from .exactlab import (
    FAMILIES,
    chain_matrix,
    check_lumpability,
    enumerate_states,
    iso_partition,
    mixing_time,
    mixing_time_lifted,
    project,
    spectral,
    stationary,
    verify_space,
)
from .exactlab.reports import (
    classes_payload,
    eigenvalues_to_csv,
    matrix_payload,
    mixing_payload,
    report_to_json,
    samples_to_csv,
    space_payload,
    spectral_payload,
    trace_to_csv,
    verification_payload,
)
from .graphcore import (
    BinaryMatrix,
    DegreeSequence,
    GraphKind,
    degrees_of,
    is_connected,
    load_degrees,
    load_matrix,
    realize,
    triangle_count,
    write_matrix,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_CAP = 3
EXIT_VERIFICATION = 4

FAMILY_ALIASES = {"5.1": "quadratic", "5.2": "binomial"}

Payload = dict[str, Any]


class UsageError(DegchainError):
    """
    Raised when command-line arguments are inconsistent.
    """


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _exit_code(error: DegchainError) -> int:
    if isinstance(error, InfeasibleSequenceError):
        return EXIT_INFEASIBLE
    if isinstance(error, (StateSpaceTooLargeError, CanonicalFormLimitError)):
        return EXIT_CAP
    if isinstance(
        error,
        (
            NotLumpableError,
            VerificationError,
            NonUniformStationaryError,
            NoConvergenceError,
        ),
    ):
        return EXIT_VERIFICATION
    return EXIT_USAGE


def _load_input(
    args: argparse.Namespace,
) -> tuple[DegreeSequence, BinaryMatrix | None]:
    """
    Degree sequence and, for ``--matrix`` inputs, the given state.
    """
    kind = GraphKind.parse(args.kind) if args.kind else None
    try:
        if args.matrix:
            state, file_kind = load_matrix(args.matrix)
            if kind is not None and kind is not file_kind:
                raise UsageError(
                    f"--kind {kind.value} contradicts matrix file kind "
                    f"{file_kind.value}"
                )
            return degrees_of(state, file_kind), state
        if args.degrees:
            k = load_degrees(args.degrees, default_kind=kind)
            if kind is not None and kind is not k.kind:
                raise UsageError(
                    f"--kind {kind.value} contradicts degree file kind "
                    f"{k.kind.value}"
                )
            return k, None
    except OSError as e:
        raise UsageError(f"cannot read input: {e}") from e
    raise UsageError("one of --degrees or --matrix is required")


def _chain(args: argparse.Namespace) -> ChainKind:
    return ChainKind(args.chain or ChainKind.SWITCH.value)


def _space(args: argparse.Namespace):
    k, _ = _load_input(args)
    return enumerate_states(k, cap=args.cap)


def _require_json(args: argparse.Namespace):
    if args.format != "json":
        raise UsageError(f"{args.command} only supports --format json")


def cmd_enumerate(args: argparse.Namespace) -> Payload:
    _require_json(args)
    space = _space(args)
    payload = space_payload(space)
    if args.full:
        payload["states"] = [state.to_bitstring() for state in space]
    return payload


def cmd_classes(args: argparse.Namespace) -> Payload:
    _require_json(args)
    space = _space(args)
    return classes_payload(space, iso_partition(space))


def cmd_matrix(args: argparse.Namespace) -> Payload:
    _require_json(args)
    space = _space(args)
    chain = _chain(args)
    P = chain_matrix(space, chain, exact=args.full)
    return {
        **space_payload(space),
        "chain": chain.value,
        "matrix": matrix_payload(P, full=args.full),
    }


def cmd_project(args: argparse.Namespace) -> Payload:
    _require_json(args)
    space = _space(args)
    chain = _chain(args)
    part = iso_partition(space)
    P = chain_matrix(space, chain, exact=args.full)
    deviation = check_lumpability(P, part)
    P_bar = project(P, part)
    pi_bar = stationary(P_bar, part)
    return {
        **classes_payload(space, part),
        "chain": chain.value,
        "stationary": pi_bar.weights.tolist(),
        "matrix": matrix_payload(P_bar, deviation, full=args.full),
    }


def _chain_and_stationary(args: argparse.Namespace, space):
    P = chain_matrix(space, _chain(args))
    if not args.projected:
        return P, stationary(P)
    part = iso_partition(space)
    P_bar = project(P, part)
    return P_bar, stationary(P_bar, part)


def cmd_mixing(args: argparse.Namespace) -> Payload | str:
    if args.projected and args.lifted:
        raise UsageError("--projected and --lifted exclude each other")
    space = _space(args)
    if args.lifted:
        P = chain_matrix(space, _chain(args))
        report = mixing_time_lifted(
            P, iso_partition(space), stationary(P), args.eps
        )
        variant = "lifted"
    else:
        P, pi = _chain_and_stationary(args, space)
        report = mixing_time(P, pi, args.eps)
        variant = "projected" if args.projected else "original"
    if args.format == "csv":
        return trace_to_csv(report)
    return {
        **space_payload(space),
        "chain": _chain(args).value,
        "variant": variant,
        **mixing_payload(report),
    }


def cmd_spectrum(args: argparse.Namespace) -> Payload | str:
    space = _space(args)
    P, pi = _chain_and_stationary(args, space)
    summary = spectral(P, pi)
    if args.format == "csv":
        return eigenvalues_to_csv(summary)
    return {
        **space_payload(space),
        "chain": _chain(args).value,
        "variant": "projected" if args.projected else "original",
        **spectral_payload(summary),
    }


def _sample_rows(states: Sequence[BinaryMatrix], kind: GraphKind):
    for index, state in enumerate(states):
        row: dict[str, Any] = {
            "replica": index,
            "state": state.to_bitstring(),
            "connected": int(is_connected(state, kind)),
        }
        if kind is GraphKind.UNDIRECTED:
            row["triangles"] = triangle_count(state)
        yield row


def _samples_output(
    args: argparse.Namespace,
    states: Sequence[BinaryMatrix],
    kind: GraphKind,
    payload: Payload,
) -> Payload | str:
    if args.format == "csv":
        return samples_to_csv(_sample_rows(states, kind))
    counts = Counter(state.to_bitstring() for state in states)
    return {
        **payload,
        "num_samples": len(states),
        "counts": dict(sorted(counts.items())),
    }


def cmd_sample(args: argparse.Namespace) -> Payload | str:
    k, _ = _load_input(args)
    cfg = ChainConfig(
        chain=_chain(args),
        steps=args.steps,
        preprocess=args.preprocess,
        seed=args.seed,
    )
    count = 1 if args.samples is None else args.samples
    states = list(sample(k, count, cfg, workers=args.workers))
    return _samples_output(
        args,
        states,
        k.kind,
        {
            "degrees": k.to_json_dict(),
            "chain": cfg.chain.value,
            "steps": cfg.steps,
            "preprocess": cfg.preprocess,
            "seed": cfg.seed,
        },
    )


def cmd_preprocess(args: argparse.Namespace) -> Payload | str:
    k, state = _load_input(args)
    start = realize(k) if state is None else state
    count = 1 if args.samples is None else args.samples
    if count < 0:
        raise UsageError(f"--samples must be non-negative, got {count}")
    states = list(relabel_samples([start] * count, k.kind, args.seed))
    return _samples_output(
        args,
        states,
        k.kind,
        {
            "degrees": k.to_json_dict(),
            "start": write_matrix(start, k.kind),
            "seed": args.seed,
        },
    )


def cmd_verify(args: argparse.Namespace) -> Payload:
    _require_json(args)
    space = _space(args)
    chains = (
        [ChainKind(args.chain)]
        if args.chain
        else [ChainKind.SWITCH, ChainKind.CURVEBALL]
    )
    report = verify_space(
        space,
        chains=chains,
        trials=10**4 if args.samples is None else args.samples,
        seed=args.seed,
    )
    args.exit_code = EXIT_OK if report.passed else EXIT_VERIFICATION
    return {**space_payload(space), **verification_payload(report)}


def cmd_family(args: argparse.Namespace) -> Payload:
    _require_json(args)
    name = FAMILY_ALIASES.get(args.family, args.family)
    k = FAMILIES[name](args.parameter)
    return k.to_json_dict()


COMMANDS: dict[str, Callable[[argparse.Namespace], Payload | str]] = {
    "enumerate": cmd_enumerate,
    "classes": cmd_classes,
    "matrix": cmd_matrix,
    "project": cmd_project,
    "mixing": cmd_mixing,
    "spectrum": cmd_spectrum,
    "sample": cmd_sample,
    "preprocess": cmd_preprocess,
    "verify": cmd_verify,
    "family": cmd_family,
}


def _shared_options() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    source = shared.add_mutually_exclusive_group()
    source.add_argument(
        "--degrees", type=Path, help="degree-sequence JSON file"
    )
    source.add_argument("--matrix", type=Path, help="matrix text file")
    shared.add_argument(
        "--kind",
        choices=[kind.value for kind in GraphKind],
        help="graph kind (defaults to the kind declared by the input)",
    )
    shared.add_argument(
        "--chain",
        choices=[chain.value for chain in ChainKind],
        help="chain to analyse or run (default: switch; verify: both)",
    )
    shared.add_argument(
        "--eps", type=float, default=0.001, help="mixing threshold"
    )
    shared.add_argument(
        "--steps", type=int, default=0, help="chain steps per sample"
    )
    shared.add_argument("--samples", type=int, help="number of samples")
    shared.add_argument(
        "--seed", type=int, default=0, help="unsigned 64-bit master seed"
    )
    shared.add_argument(
        "--preprocess",
        action="store_true",
        help="relabel within equal-degree groups before the first step",
    )
    shared.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_LIMITS.states,
        help="largest state space to enumerate",
    )
    shared.add_argument("--format", choices=["json", "csv"], default="json")
    shared.add_argument("--out", type=Path, help="output file")
    shared.add_argument(
        "--projected",
        action="store_true",
        help="analyse the chain projected on isomorphism classes",
    )
    shared.add_argument(
        "--lifted",
        action="store_true",
        help="start from the uniform distribution on each class",
    )
    shared.add_argument(
        "--full", action="store_true", help="include all states or entries"
    )
    shared.add_argument(
        "--workers", type=int, help="sample replicas in this many processes"
    )
    shared.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (repeat for more detail)",
    )
    return shared


def get_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="degchain",
        description=(
            "Sample graphs with fixed degrees and analyse the exact "
            "switch and Curveball chains on small state spaces."
        ),
    )
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=_Parser
    )
    shared = _shared_options()
    helps = {
        "enumerate": "count (and list) all states with given degrees",
        "classes": "partition the states into isomorphism classes",
        "matrix": "exact transition matrix of a chain",
        "project": "chain projected on isomorphism classes",
        "mixing": "mixing time from every start",
        "spectrum": "eigenvalues and spectral gap",
        "sample": "run independent seeded chain replicas",
        "preprocess": "relabel a state within equal-degree groups",
        "verify": "check chains, matrices and projections against each "
        "other",
        "family": "degree sequence of a parametrized family",
    }
    for name, help_text in helps.items():
        sub = subparsers.add_parser(name, parents=[shared], help=help_text)
        if name == "family":
            sub.add_argument(
                "family", choices=[*FAMILIES, *FAMILY_ALIASES]
            )
            sub.add_argument("parameter", type=int)
    return parser


def _configure_logging(verbosity: int):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _emit(output: Payload | str, out: Path | None):
    text = output if isinstance(output, str) else report_to_json(output)
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = get_parser().parse_args(argv)
    _configure_logging(args.verbose)
    args.exit_code = EXIT_OK
    try:
        output = COMMANDS[args.command](args)
        _emit(output, args.out)
    except DegchainError as e:
        logger.debug("command failed", exc_info=True)
        print(f"degchain: error: {e}", file=sys.stderr)
        return _exit_code(e)
    except (OSError, ValueError) as e:
        print(f"degchain: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return args.exit_code


if __name__ == "__main__":
    sys.exit(main())
