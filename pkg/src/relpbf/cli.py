"""Command-line entry point.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
3 input validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import colorlie, fock, freealg, hopf, pbf, realize
from .report import CheckResult, Report
from .uea import DEFAULT_WORD_CAP

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


def corpus_path(name: str) -> Path:
    return Path(str(resources.files("relpbf") / "corpus" / name))


def resolve_algebra_file(arg: str) -> Path:
    """A path as given, else a bundled corpus file (``corpus/x.json`` or ``x``)."""
    p = Path(arg)
    if p.exists():
        return p
    name = p.name if p.suffix == ".json" else p.name + ".json"
    bundled = corpus_path(name)
    if bundled.exists():
        return bundled
    raise FileNotFoundError(arg)


def cmd_identities(argv: list[str]) -> Report:
    rep = Report(argv)
    for r in freealg.verify_quadruple_identities():
        res = CheckResult(r.description, checked=1)
        if not r.passed:
            res.fail(("lhs - rhs",), r.difference.render(freealg.SYMBOL_NAMES))
        rep.add(res)
    return rep


def cmd_check_pbf(argv: list[str], m: int, n: int, with_oracle: bool, cutoff: int) -> Report:
    rep = Report(argv)
    p = pbf.build(m, n)
    rep.notes.append(f"algebra L(Z2xZ2)({m},{n}): dimension {p.dimension}")
    dim = CheckResult("dimension 2m+2n+m(2m+1)+n(2n-1)+4mn", checked=1)
    if p.dimension != pbf.expected_dimension(m, n):
        dim.fail((m, n), f"{p.dimension} != {pbf.expected_dimension(m, n)}")
    rep.add(dim)
    rep.add(colorlie.check_theta())
    for r in colorlie.check_all(p.exported):
        rep.add(r)
    rep.add(pbf.check_super_pattern(p))
    rep.add(pbf.check_factorization_independence(p))
    if with_oracle:
        fs = fock.FockSpace(m, n, cutoff)
        rep.notes.append(f"order-1 Fock oracle: cutoff {cutoff}, {fs.dimension} states")
        rep.add(fock.check_relations(fs))
        rep.add(fock.check_bracket_table(fs, p))
    return rep


def cmd_check_hopf(argv: list[str], m: int, n: int, max_len: int) -> Report:
    rep = Report(argv)
    p = pbf.build(m, n)
    rep.notes.append(f"U(L) of L(Z2xZ2)({m},{n}), normal words up to length {max_len}")
    for r in hopf.check_hopf_axioms(p.exported, max_len):
        rep.add(r)
    rep.add(hopf.check_primitive(p.exported))
    return rep


def cmd_realize(argv: list[str], s: realize.SuperAlgebraInput, mode: str, with_hopf: bool) -> Report:
    rep = Report(argv)
    j = realize.build_realization(s, mode)
    p = j.algebra
    rep.notes.append(f"{s.name or 'input'}: mode {mode}, target L(Z2xZ2)({p.m},{p.n})")
    for x, img in j.render(p.exported.basis).items():
        rep.notes.append(f"  J({x}) = {img}")
    rep.add(realize.check_grading(s, j))
    rep.add(realize.check_homomorphism(s, j, p))
    if with_hopf:
        for r in realize.check_hopf_compat(s, j, p):
            rep.add(r)
    return rep


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors always exit 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--timing", action="store_true", help="append elapsed time (stderr)")

    parser = _Parser(prog="relpbf", description="Exact checks for the relative parabose set.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("identities", parents=[common], help="quadruple-bracket identities in the free algebra")

    cp = sub.add_parser("check-pbf", parents=[common], help="build the algebra and run the axiom suite")
    cp.add_argument("--m", type=int, required=True)
    cp.add_argument("--n", type=int, required=True)
    cp.add_argument("--oracle", action="store_true", help="cross-check with order-1 Fock matrices")
    cp.add_argument("--cutoff", type=int, default=5, help="boson cutoff for the oracle (>= 3)")

    rp = sub.add_parser("realize", parents=[common], help="realize a Lie superalgebra from a JSON file")
    rp.add_argument("file", help="algebra JSON file, or the name of a bundled corpus file")
    rp.add_argument("--mode", choices=realize.MODES, default="mixed")
    rp.add_argument("--hopf", action="store_true", help="also check compatibility with the Hopf maps")

    hp = sub.add_parser("check-hopf", parents=[common], help="Hopf axioms on U(L) up to a word length")
    hp.add_argument("--m", type=int, required=True)
    hp.add_argument("--n", type=int, required=True)
    hp.add_argument("--max-len", type=int, default=2)
    return parser


def _emit(rep: Report, as_json: bool, out) -> None:
    out.write((rep.dumps() if as_json else rep.render_text()) + "\n")


def _input_failure(argv: list[str], message: str, records=(), as_json: bool = False, out=None) -> int:
    rep = Report(argv, list(records), [f"input validation failed: {message}"])
    if not rep.records:
        rep.add(CheckResult("input file", checked=1)).fail(("input",), message)
    _emit(rep, as_json, out)
    return EXIT_INPUT


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    echo = ["relpbf", *argv]
    start = time.perf_counter()

    if args.command in ("check-pbf", "check-hopf") and (args.m < 0 or args.n < 0 or args.m + args.n < 1):
        parser.error(f"need --m, --n >= 0 with m + n >= 1, got m={args.m}, n={args.n}")

    if args.command == "identities":
        rep = cmd_identities(echo)
    elif args.command == "check-pbf":
        if args.oracle and args.cutoff < 3:
            parser.error(f"--cutoff must be >= 3, got {args.cutoff}")
        rep = cmd_check_pbf(echo, args.m, args.n, args.oracle, args.cutoff)
    elif args.command == "check-hopf":
        if not 0 <= args.max_len <= DEFAULT_WORD_CAP:
            parser.error(f"--max-len must lie in [0, {DEFAULT_WORD_CAP}], got {args.max_len}")
        rep = cmd_check_hopf(echo, args.m, args.n, args.max_len)
    else:
        try:
            path = resolve_algebra_file(args.file)
            data = json.loads(path.read_text())
            s = realize.parse_input(data)
            validation = realize.validate_input(s)
            realize.target_dims(s, args.mode)
            if args.mode != "mixed" and s.odd_basis:
                raise realize.InputError(f"{args.mode} mode needs a purely even input")
        except FileNotFoundError:
            return _input_failure(echo, f"no such file: {args.file}", as_json=args.json, out=out)
        except (json.JSONDecodeError, KeyError, TypeError, realize.InputError) as exc:
            return _input_failure(echo, str(exc), as_json=args.json, out=out)
        if not all(r.passed for r in validation):
            return _input_failure(echo, "see records", validation, args.json, out)
        rep = cmd_realize(echo, s, args.mode, args.hopf)
        rep.records[:0] = validation

    _emit(rep, args.json, out)
    if args.timing:
        sys.stderr.write(f"elapsed: {time.perf_counter() - start:.3f} s\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
