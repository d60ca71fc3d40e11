"""Command-line front end orchestrating the analyses over dataset files.

Exit codes: 0 success (verdicts included in the report), 1 negative
verdict of a check command under ``--assert``, 2 input errors, 3
resource limits.  ``MCA_BUDGET`` provides the solver budget when
``--budget`` is absent.  Identical argv and files produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import classification as classify_mod
from . import cone, dataio, supercharacter, toric
from .errors import CharmonoidError, ResourceLimit, SchemaError
from .lattice import DEFAULT_BUDGET, IntMatrix, lattice_is_full_unimodular

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _add_common(parser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--format",
        choices=["table", "json"],
        default=argparse.SUPPRESS if suppress else "table",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=default,
        help="solver node budget (default: MCA_BUDGET or 10^7)",
    )
    parser.add_argument(
        "--assert",
        dest="assert_mode",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="turn negative check verdicts into exit code 1",
    )
    parser.add_argument(
        "--report",
        dest="assert_mode",
        action="store_false",
        default=argparse.SUPPRESS if suppress else False,
        help="report verdicts with exit 0 (the default)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charmonoid",
        description="Exact analysis of monoids of induced linear characters",
    )
    _add_common(parser, suppress=False)
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed before it
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def dataset_command(name, help_text, multi=True):
        p = sub.add_parser(name, help=help_text, parents=[common])
        if multi:
            p.add_argument("datasets", nargs="+", type=Path)
        return p

    dataset_command("hilbert", "minimal generators of the dataset monoid")
    dataset_command("classify", "monomial / quasi / almost-monomial / factorial flags")
    dataset_command("normalize", "integral closure and the added Hilbert elements")
    dataset_command("toric", "Markov basis of the toric ideal")
    dataset_command("aramata", "minimal exponents for the regular-character shifts")

    p = dataset_command("super", "supercharacter-theoretic analysis")
    p.add_argument(
        "--theory",
        default="maximal",
        help="theory name: classical, maximal, or a name from the dataset",
    )

    p = sub.add_parser("quotient-check", help="restriction-to-quotient verification", parents=[common])
    p.add_argument("group", type=Path)
    p.add_argument("quotient", type=Path)
    p.add_argument(
        "--indices",
        help="comma-separated 1-based indices of the quotient irreducibles",
    )
    p.add_argument("--quotient-name", help="named quotient recorded in the dataset")

    p = sub.add_parser("product-check", help="direct-product verification", parents=[common])
    p.add_argument("left", type=Path)
    p.add_argument("right", type=Path)
    p.add_argument("product", type=Path)

    p = sub.add_parser("prop24", help="exhaustive small-rank unimodularity harness", parents=[common])
    p.add_argument("--r", type=int, default=4)
    p.add_argument("--bound", type=int, default=3)

    p = sub.add_parser("conjecture-sl2", help="SL(2,2^n) generator family check", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("datasets", nargs="+", type=Path)
    return parser


def _load(path: Path) -> dataio.GroupCharData:
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise SchemaError(str(path), f"cannot read file: {exc.strerror}") from None
    return dataio.parse_dataset(raw)


def _hilbert_bundle(data: dataio.GroupCharData) -> dict:
    hb = data.hilbert()
    return {
        "group": data.name,
        "rank": data.rank,
        "induced_rows": len(data.induced_rows),
        "hilbert_basis_size": len(hb.generators),
        "hilbert_basis": [dataio.render_monomial(g) for g in hb.generators],
        "unimodular": lattice_is_full_unimodular(IntMatrix.from_rows(hb.matrix_rows())),
    }


def _classify_bundle(data: dataio.GroupCharData) -> dict:
    hb = data.hilbert()
    report = classify_mod.classify(hb, data.degrees)
    return {
        "group": data.name,
        "hilbert_basis_size": report.hilbert_basis_size,
        "monomial": report.monomial,
        "quasi monomial": report.quasi_monomial,
        "almost monomial": report.almost_monomial,
        "factorial": report.factorial,
    }


def _normalize_bundle(data: dataio.GroupCharData) -> dict:
    hb = data.hilbert()
    result = cone.normalize(hb)
    return {
        "group": data.name,
        "full_lattice": lattice_is_full_unimodular(IntMatrix.from_rows(hb.matrix_rows())),
        "closure_basis_size": len(result.closure_hilbert_basis),
        "added": [dataio.render_monomial(v) for v in result.added],
        "normal": not result.added,
        "multiple_witnesses": {
            dataio.render_monomial(v): k
            for v, k in zip(result.closure_hilbert_basis, result.witnesses)
            if k > 1
        },
        "regular_shifts_in_closure": cone.contains_regular_shifts(hb, data.degrees),
    }


def _toric_bundle(data: dataio.GroupCharData, budget: int) -> dict:
    hb = data.hilbert()
    basis = toric.markov_basis(hb, budget)
    return {
        "group": data.name,
        "factorial": toric.is_factorial(hb),
        "relations": [dataio.render_binomial(b.plus, b.minus) for b in basis],
    }


def _aramata_bundle(data: dataio.GroupCharData, budget: int) -> dict:
    hb = data.hilbert()
    report = classify_mod.aramata(hb, data.degrees, budget)
    return {
        "group": data.name,
        "alpha": report.alpha,
        "alphas": list(report.alphas),
    }


def _super_bundle(data: dataio.GroupCharData, theory_name: str, budget: int) -> dict:
    degrees = data.degrees
    n_classes = len(data.classes) if data.classes is not None else None
    if theory_name == "classical":
        theory = supercharacter.classical_theory(degrees, n_classes)
    elif theory_name == "maximal":
        theory = supercharacter.maximal_theory(degrees, n_classes)
    else:
        theory = supercharacter.from_spec(data.supertheory(theory_name), degrees)
    hb = data.hilbert()
    validation = supercharacter.validate_supertheory(
        theory,
        degrees,
        class_sizes=data.classes,
        values=data.char_values,
    )
    sm = supercharacter.super_monoid(theory, hb, budget)
    quasi = supercharacter.c_quasi_monomial(theory, hb, budget)
    almost, _ = supercharacter.c_almost_monomial(theory, hb, budget)
    return {
        "group": data.name,
        "theory": theory.name,
        "blocks": [[j + 1 for j in b] for b in theory.blocks],
        "structural_ok": validation.structural_ok,
        "constancy_checked": validation.constancy_checked,
        "constancy_ok": validation.constancy_ok,
        "coefficient_generators": [list(c) for c in sm.coefficients.generators],
        "c quasi monomial": quasi is not None,
        "quasi_exponents": list(quasi) if quasi is not None else None,
        "c almost monomial": almost,
    }


def _per_dataset(command: str, args, budget: int):
    def build(path: Path) -> dict:
        data = _load(path)
        if command == "hilbert":
            return _hilbert_bundle(data)
        if command == "classify":
            return _classify_bundle(data)
        if command == "normalize":
            return _normalize_bundle(data)
        if command == "toric":
            return _toric_bundle(data, budget)
        if command == "aramata":
            return _aramata_bundle(data, budget)
        if command == "super":
            return _super_bundle(data, args.theory, budget)
        raise AssertionError(command)

    # per-file pipelines are independent; output order follows input order
    with ThreadPoolExecutor(max_workers=min(4, len(args.datasets))) as pool:
        return list(pool.map(build, args.datasets))


def run(argv) -> tuple[int, bytes]:
    """Execute one CLI invocation; returns (exit code, report bytes)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_INPUT if exc.code else EXIT_OK), b""
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get("MCA_BUDGET", DEFAULT_BUDGET))
    if budget < 1:
        return EXIT_INPUT, b"budget must be >= 1\n"
    verdicts: list[bool] = []
    try:
        if args.command in {"hilbert", "classify", "normalize", "toric", "aramata", "super"}:
            bundle = _per_dataset(args.command, args, budget)
        elif args.command == "quotient-check":
            g = _load(args.group)
            q = _load(args.quotient)
            if args.indices:
                indices = [int(x) - 1 for x in args.indices.split(",")]
            elif args.quotient_name:
                match = next(
                    (qi for qi in g.quotients if qi.name == args.quotient_name), None
                )
                if match is None:
                    return EXIT_INPUT, f"no quotient named {args.quotient_name!r}\n".encode()
                indices = list(match.kernel_indices)
            else:
                return EXIT_INPUT, b"quotient-check needs --indices or --quotient-name\n"
            verdict = classify_mod.quotient_check(g, indices, q)
            verdicts.append(verdict)
            bundle = {
                "group": g.name,
                "quotient": q.name,
                "indices": [i + 1 for i in indices],
                "monoids equal": verdict,
            }
        elif args.command == "product-check":
            a = _load(args.left)
            b = _load(args.right)
            ab = _load(args.product)
            verdict = classify_mod.product_check(a, b, ab)
            verdicts.append(verdict)
            bundle = {
                "left": a.name,
                "right": b.name,
                "product": ab.name,
                "monoids equal": verdict,
            }
        elif args.command == "prop24":
            violations = classify_mod.prop24_harness(args.r, args.bound)
            remark = classify_mod.remark_rank5_matrix()
            profile = classify_mod.matrix_am_profile(remark)
            verdicts.append(not violations)
            bundle = {
                "rank": args.r,
                "entry_bound": args.bound,
                "violations": [m.row_list() for m in violations],
                "rank5_example": {
                    "rows": remark.row_list(),
                    "det": profile["det"],
                    "almost_monomial_rows": profile["almost_monomial_rows"],
                    "permutation": profile["permutation"],
                },
            }
        elif args.command == "conjecture-sl2":
            bundle = []
            for path in args.datasets:
                data = _load(path)
                verdict = classify_mod.sl2_conjecture_check(args.n, data)
                verdicts.append(verdict)
                bundle.append(
                    {"group": data.name, "n": args.n, "monoids equal": verdict}
                )
        else:  # pragma: no cover
            raise AssertionError(args.command)
    except ResourceLimit as exc:
        return EXIT_RESOURCE, dataio.emit_report(
            {"error": "resource limit", "detail": str(exc)}, args.format
        )
    except (CharmonoidError, ValueError, KeyError) as exc:
        detail = str(exc) if not isinstance(exc, KeyError) else str(exc.args[0])
        return EXIT_INPUT, dataio.emit_report(
            {"error": type(exc).__name__, "detail": detail}, args.format
        )
    code = EXIT_OK
    if args.assert_mode and any(not v for v in verdicts):
        code = EXIT_VERDICT
    return code, dataio.emit_report(bundle, args.format)


def main() -> None:
    code, payload = run(sys.argv[1:])
    sys.stdout.buffer.write(payload)
    sys.exit(code)


if __name__ == "__main__":
    main()
