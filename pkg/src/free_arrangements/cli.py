"""Command-line front end.

Every verb reads an arrangement file (`-` for standard input), runs one
library operation and prints a table, or a JSON report with `--json`.
`free`, `indfree`, `heredfree`, `saito` and `oracle` exit with 0 on a
positive verdict and 1 on a negative one; usage and input errors exit
with 2.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Sequence

from tabulate import tabulate

from free_arrangements.arrangement import Arrangement, Restriction, Subspace
from free_arrangements.catalog import Family, FamilySpec, family, parse_arrangement_file, write_arrangement
from free_arrangements.configuration import Configuration, load
from free_arrangements.derivation import (
    Derivation,
    degreewise_dim_oracle,
    derivation_module,
    euler_derivation,
    hilbert_prediction,
    is_free,
    membership_test,
    saito_check,
)
from free_arrangements.errors import ArrangementError, DimensionError, FieldMismatchError
from free_arrangements.freeness import chain_verify, is_hereditarily_free, is_inductively_free
from free_arrangements.lattice import IntersectionLattice
from free_arrangements.module import minimal_generators
from free_arrangements.parsers import BasisFile, BasisParser
from free_arrangements.report import FreenessReport, HereditaryReport, InductiveChain
from free_arrangements.verdict import Verdict


logger: logging.Logger = logging.getLogger(__name__)


type Command = Callable[[argparse.Namespace, Configuration], Verdict]
"""A verb: runs with parsed arguments and settings, returns the verdict."""


def _emit(config: Configuration, data: Any, text: str) -> None:
    if config.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _arrangement_json(arrangement: Arrangement) -> dict[str, Any]:
    return {
        "field": arrangement.field.conductor,
        "dim": arrangement.dim,
        "hyperplanes": [str(h) for h in arrangement],
    }


def _input(args: argparse.Namespace) -> Arrangement:
    return parse_arrangement_file(getattr(args, "input_option", None) or args.input)


def _catalog(args: argparse.Namespace, config: Configuration) -> Verdict:
    spec: FamilySpec = FamilySpec(
        Family(args.family),
        n=args.n,
        r=args.r,
        p=args.p,
        l=args.l,
        count=args.count,
        seed=args.seed,
        conductor=args.conductor,
    )
    arrangement: Arrangement = family(spec)
    text: str = write_arrangement(arrangement)
    _emit(config, _arrangement_json(arrangement), text.rstrip("\n"))
    return Verdict.POSITIVE


def _lattice(args: argparse.Namespace, config: Configuration) -> Verdict:
    lattice: IntersectionLattice = IntersectionLattice(_input(args))
    rows: list[dict[str, Any]] = [{"rank": x.rank, "flat": str(x), "mobius": lattice.mobius[x]} for x in lattice]
    _emit(config, {"rank": lattice.rank, "flats": rows}, tabulate(rows, headers="keys"))
    return Verdict.POSITIVE


def _charpoly(args: argparse.Namespace, config: Configuration) -> Verdict:
    lattice: IntersectionLattice = IntersectionLattice(_input(args))
    poincare, characteristic = lattice.poincare(), lattice.characteristic()
    data: dict[str, Any] = {
        "poincare": list(poincare.coeffs),
        "characteristic": list(characteristic.coeffs),
        "factors": poincare.linear_factors(),
    }
    text: str = tabulate([("poincare", str(poincare)), ("characteristic", str(characteristic))])
    _emit(config, data, text)
    return Verdict.POSITIVE


def _restrict(args: argparse.Namespace, config: Configuration) -> Verdict:
    arrangement: Arrangement = _input(args)
    indices: list[int] = [int(i) for i in args.hyperplanes.split(",") if i.strip()] if args.hyperplanes else []
    flat: Subspace = arrangement.subspace_of(indices)
    restriction: Restriction = arrangement.restrict(flat)
    data: dict[str, Any] = _arrangement_json(restriction.arrangement)
    data["flat"] = str(flat)
    data["coordinates"] = [f"x{c + 1}" for c in restriction.coordinates]
    data["preimages"] = [list(p) for p in restriction.preimages]
    _emit(config, data, write_arrangement(restriction.arrangement).rstrip("\n"))
    return Verdict.POSITIVE


def _derivations(args: argparse.Namespace, config: Configuration) -> Verdict:
    arrangement: Arrangement = _input(args)
    generators: list[Derivation] = []
    if arrangement.dim:
        generators = [Derivation(g) for g in minimal_generators(derivation_module(arrangement))]
    rows: list[dict[str, Any]] = [{"degree": theta.pdeg, "derivation": str(theta)} for theta in generators]
    _emit(config, {"generators": rows}, tabulate(rows, headers="keys", showindex="always"))
    return Verdict.POSITIVE


def _exponents(args: argparse.Namespace, config: Configuration) -> Verdict:
    report: FreenessReport = is_free(_input(args))
    text: str = ", ".join(map(str, report.exponents)) if report.free else "not free"
    _emit(config, {"free": report.free, "exponents": report.to_json()["exponents"]}, text)
    return Verdict.POSITIVE


def _free(args: argparse.Namespace, config: Configuration) -> Verdict:
    arrangement: Arrangement = _input(args)
    report: FreenessReport = is_free(arrangement)
    if args.certificate and report.basis is not None:
        with open(args.certificate, "w") as f:
            f.write(BasisParser().format(arrangement.field, arrangement.dim, report.basis))
        logger.info(f"Wrote basis certificate to {args.certificate}")
    _emit(config, report.to_json(), report.to_string())
    return Verdict.of(report.free)


def _saito(args: argparse.Namespace, config: Configuration) -> Verdict:
    arrangement: Arrangement = _input(args)
    basis: BasisFile = BasisParser().parse_file(args.basis)
    if basis.field != arrangement.field:
        raise FieldMismatchError(f"basis over {basis.field} for an arrangement over {arrangement.field}")
    if basis.dim != arrangement.dim:
        raise DimensionError(f"basis in {basis.dim} variables for an arrangement in dimension {arrangement.dim}")
    accepted, constant = saito_check(basis.derivations, arrangement)
    data: dict[str, Any] = {"accepted": accepted, "saito_constant": str(constant) if constant is not None else None}
    text: str = f"accepted, c = {constant}" if accepted else "rejected"
    _emit(config, data, text)
    return Verdict.of(accepted)


def _indfree(args: argparse.Namespace, config: Configuration) -> Verdict:
    arrangement: Arrangement = _input(args)
    forms: list[str] = [str(h) for h in arrangement]
    if args.verify:
        chain: InductiveChain | None = InductiveChain.load(args.verify)
        accepted: bool = chain_verify(arrangement, chain, audit=config.audit)
        _emit(config, {"accepted": accepted, "audit": config.audit}, "accepted" if accepted else "rejected")
        return Verdict.of(accepted)

    chain = is_inductively_free(arrangement)
    if chain is None:
        _emit(config, {"inductively_free": False, "chain": None}, "not inductively free")
        return Verdict.NEGATIVE
    if config.audit and not chain_verify(arrangement, chain, audit=True):
        logger.error("Inductive chain fails its audit")
        return Verdict.NEGATIVE
    if args.certificate:
        chain.store(args.certificate)
        logger.info(f"Wrote chain certificate to {args.certificate}")
    _emit(config, {"inductively_free": True, "chain": chain.to_json()}, chain.to_string(forms))
    return Verdict.POSITIVE


def _heredfree(args: argparse.Namespace, config: Configuration) -> Verdict:
    report: HereditaryReport = is_hereditarily_free(
        _input(args), jobs=config.jobs, show_process=config.show_process
    )
    if args.certificate:
        report.store(args.certificate)
        logger.info(f"Wrote hereditary report to {args.certificate}")
    _emit(config, report.to_json(), report.to_string())
    return Verdict.of(report.free)


def _oracle(args: argparse.Namespace, config: Configuration) -> Verdict:
    arrangement: Arrangement = _input(args)
    if not arrangement.dim:
        raise DimensionError("the oracle needs dimension at least 1")
    report: FreenessReport = is_free(arrangement)
    euler: bool = membership_test(euler_derivation(arrangement.field, arrangement.dim), arrangement)
    rows: list[dict[str, Any]] = []
    for p in range(config.max_degree + 1):
        row: dict[str, Any] = {"degree": p, "oracle": degreewise_dim_oracle(arrangement, p)}
        if report.free:
            row["prediction"] = hilbert_prediction(report.exponents, arrangement.dim, p)
        rows.append(row)
    agree: bool = euler and all(row.get("prediction", row["oracle"]) == row["oracle"] for row in rows)
    data: dict[str, Any] = {"free": report.free, "euler_member": euler, "agree": agree, "degrees": rows}
    _emit(config, data, tabulate(rows, headers="keys"))
    return Verdict.of(agree)


def _parser() -> argparse.ArgumentParser:
    common: argparse.ArgumentParser = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=None, help="emit JSON reports")
    common.add_argument("--jobs", type=int, default=None, help="number of worker processes")
    common.add_argument("--progress", action="store_true", default=None, help="show progress bars on stderr")
    common.add_argument("--log-level", default=None, help="logging level, e.g. INFO or DEBUG")
    common.add_argument("--config", default=None, help="TOML file with a [free-arrangements] table")

    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="free-arrangements",
        description="Exact computations with free hyperplane arrangements.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name: str, command: Command, help: str, *, reads: bool = True) -> argparse.ArgumentParser:
        sub: argparse.ArgumentParser = verbs.add_parser(name, help=help, description=help, parents=[common])
        if reads:
            sub.add_argument("input", nargs="?", default="-", help="arrangement file, `-` for standard input")
        sub.set_defaults(command=command)
        return sub

    catalog = verb("catalog", _catalog, "write an arrangement of a known family", reads=False)
    catalog.add_argument("--family", required=True, choices=[f.value for f in Family])
    catalog.add_argument("--n", type=int, help="dimension for boolean, braid, coxeterB, coxeterD")
    catalog.add_argument("--r", type=int, help="order of the roots of unity for monomial")
    catalog.add_argument("--p", type=int, help="divisor of r for monomial")
    catalog.add_argument("--l", type=int, help="dimension for monomial and random")
    catalog.add_argument("--count", type=int, help="number of hyperplanes for random")
    catalog.add_argument("--seed", type=int, default=0, help="seed for random")
    catalog.add_argument("--conductor", type=int, default=1, help="field conductor for random")

    verb("lattice", _lattice, "list the flats of the intersection lattice with Möbius values")
    verb("charpoly", _charpoly, "print the Poincaré and characteristic polynomials")
    restrict = verb("restrict", _restrict, "restrict to the flat cut out by some hyperplanes")
    restrict.add_argument("--hyperplanes", default="", help="comma-separated 0-based hyperplane indices")
    verb("derivations", _derivations, "list minimal generators of the module of derivations")
    verb("exponents", _exponents, "print the exponents of a free arrangement")
    free = verb("free", _free, "decide freeness")
    free.add_argument("--certificate", default=None, help="write the basis to this file")
    saito = verb("saito", _saito, "check a basis with Saito's criterion")
    saito.add_argument("--basis", required=True, help="basis certificate file")
    saito.add_argument("--input", dest="input_option", default=None, help="arrangement file")
    indfree = verb("indfree", _indfree, "decide inductive freeness")
    indfree.add_argument("--verify", default=None, help="verify this chain certificate instead of searching")
    indfree.add_argument("--audit", action="store_true", default=None, help="recompute freeness at every step")
    indfree.add_argument("--certificate", default=None, help="write the chain to this file")
    heredfree = verb("heredfree", _heredfree, "decide hereditary freeness")
    heredfree.add_argument("--certificate", default=None, help="write the per-flat report to this file")
    oracle = verb("oracle", _oracle, "compare degreewise dimensions with the exponent prediction")
    oracle.add_argument("--max-degree", type=int, default=None, help="largest degree to compare")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line.

    Args:
        argv: Arguments without the program name; defaults to sys.argv.

    Returns:
        Exit status.

    """
    args: argparse.Namespace = _parser().parse_args(argv)
    try:
        config: Configuration = load(args.config) if args.config else Configuration()
        config = config.merge(
            jobs=args.jobs,
            audit=getattr(args, "audit", None),
            max_degree=getattr(args, "max_degree", None),
            show_process=args.progress,
            log_level=args.log_level,
            json=args.json,
        )
        logging.basicConfig(
            level=config.log_level.upper(),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )
        verdict: Verdict = args.command(args, config)
    except (ArrangementError, OSError, ValueError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"free-arrangements {args.verb}: {e}", file=sys.stderr)
        return Verdict.ERROR.exit_code
    return verdict.exit_code


def main() -> None:
    """Entry point of the `free-arrangements` script."""
    sys.exit(run())
