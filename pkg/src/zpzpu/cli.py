"""Command-line front end.

Every verb reads a code-spec file (except cyclic-build, which takes the
generator polynomials directly), runs one library operation, and prints a
deterministic report.  Exit codes: 0 on success (including documented
discrepancies), 1 when a check labelled FAIL occurs, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import sys

from zpzpu import verify
from zpzpu.code import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    dual_oracle,
    min_distance,
    parity_check_formula,
    standard_form,
)
from zpzpu.cyclic import (
    CyclicGenerators,
    check_conditions,
    cyclic_from_generators,
    dual_cyclicity_check,
    is_cyclic,
    parse_fp_poly,
    presentation_of,
    format_fp_poly,
)
from zpzpu.gray import macwilliams_check, weight_enumerator
from zpzpu.ring import format_r_entry
from zpzpu.specfile import CodeSpecDocument, CodeSpecError, load_code_spec, print_code_spec
from zpzpu.words import Shape, format_word


class _Report:
    """Ordered key/value pairs rendered as text or line-delimited records."""

    def __init__(self) -> None:
        self.items: list[tuple[str, str]] = []

    def add(self, key: str, value: object) -> None:
        self.items.append((key, str(value)))

    def render(self, fmt: str) -> str:
        if fmt == "lines":
            return "".join(f"{k}={v}\n" for k, v in self.items)
        return "".join(f"{k}: {v}\n" for k, v in self.items)


def _load(path: str) -> CodeSpecDocument:
    try:
        return load_code_spec(path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)
    except CodeSpecError as exc:
        for d in exc.diagnostics:
            print(f"{path}: {d}", file=sys.stderr)
        raise SystemExit(2)


def cmd_reduce(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    sf = standard_form(doc.code())
    rep = _Report()
    rep.add("type", sf.code_type)
    rep.add("kappa", sf.kappa)
    rep.add("free-pivots", " ".join(str(j) for j in sf.free_pivots) or "-")
    rep.add("u-pivots", " ".join(str(j) for j in sf.u_pivots) or "-")
    rep.add("zp-pivots", " ".join(str(j) for j in sf.zp_pivots) or "-")
    for i, row in enumerate(sf.rows):
        rep.add(f"row{i}", format_word(row))
    for note in sf.notes:
        rep.add("note", note)
    print(rep.render(args.format), end="")
    return 0


def cmd_dual(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    code = doc.code()
    rep = _Report()
    if args.method in ("oracle", "both"):
        try:
            dual = dual_oracle(code, "both", args.budget)
        except BudgetExceeded as exc:
            rep.add("oracle", f"SKIPPED(budget): {exc}")
        else:
            sf = standard_form(dual)
            rep.add("dual-size", dual.size(args.budget))
            rep.add("dual-type", sf.code_type)
            for i, row in enumerate(sf.rows):
                rep.add(f"dual-row{i}", format_word(row))
    if args.method in ("formula", "both"):
        report = parity_check_formula(standard_form(code))
        for i, hrow in enumerate(report.h_rows):
            rep.add(f"formula-row{i}", hrow.format(code.shape.p))
        for ridx, col in report.ill_typed:
            rep.add(
                "ill-typed",
                f"formula row {ridx} has non-Z_p content at Z_p column {col}",
            )
        for hidx, gidx, ip in report.non_orthogonal:
            rep.add(
                "non-orthogonal",
                f"formula row {hidx} . generator {gidx} = {format_r_entry(ip)}",
            )
        for note in report.notes:
            rep.add("note", note)
    print(rep.render(args.format), end="")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    try:
        words = doc.code().codewords(args.budget)
    except BudgetExceeded as exc:
        print(f"SKIPPED(budget): {exc}")
        return 0
    rep = _Report()
    rep.add("size", len(words))
    shown = words if args.limit is None else words[: args.limit]
    for i, w in enumerate(shown):
        rep.add(f"word{i}", format_word(w))
    if len(shown) < len(words):
        rep.add("truncated", f"{len(words) - len(shown)} more words")
    print(rep.render(args.format), end="")
    return 0


def cmd_weights(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    weight = "gray" if args.weight == "gray" else "paper-cases"
    try:
        enum = weight_enumerator(doc.code(), weight, args.budget)
    except BudgetExceeded as exc:
        print(f"SKIPPED(budget): {exc}")
        return 0
    rep = _Report()
    rep.add("A", enum.coeff_line())
    rep.add("W", enum.polynomial())
    print(rep.render(args.format), end="")
    return 0


def cmd_macwilliams(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    try:
        report = macwilliams_check(doc.code(), args.budget)
    except BudgetExceeded as exc:
        print(f"SKIPPED(budget): {exc}")
        return 0
    rep = _Report()
    for clause in report.clauses:
        rep.add(clause.name, f"{'PASS' if clause.passed else 'MISMATCH'}: {clause.detail}")
    print(rep.render(args.format), end="")
    return 0


def cmd_distance(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    try:
        d = min_distance(doc.code(), "gray", args.budget)
    except BudgetExceeded as exc:
        print(f"SKIPPED(budget): {exc}")
        return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = _Report()
    rep.add("gray-distance", d)
    print(rep.render(args.format), end="")
    return 0


def cmd_cyclic_build(args: argparse.Namespace) -> int:
    try:
        shape = Shape(args.p, args.alpha, args.beta)
        gen = CyclicGenerators(
            shape=shape,
            f=parse_fp_poly(args.f, args.p),
            h1=parse_fp_poly(args.h1, args.p),
            g=parse_fp_poly(args.g, args.p),
            pp=parse_fp_poly(args.pp, args.p),
            q=parse_fp_poly(args.qq, args.p),
            h2=parse_fp_poly(args.h2, args.p),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    conditions = check_conditions(gen)
    try:
        code = cyclic_from_generators(gen, args.budget)
        words = code.codewords(args.budget)
    except BudgetExceeded as exc:
        print(f"SKIPPED(budget): {exc}")
        return 0
    sf = standard_form(code)
    rep = _Report()
    rep.add("category", conditions.category)
    for cond, outcome in conditions.results:
        rep.add("condition", f"{cond} -- {outcome}")
    rep.add("size", len(words))
    rep.add("type", sf.code_type)
    doc = CodeSpecDocument(shape, sf.rows)
    print(rep.render(args.format), end="")
    print(print_code_spec(doc), end="")
    return 0


def cmd_cyclic_check(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    code = doc.code()
    try:
        cyclic = is_cyclic(code, args.budget)
    except BudgetExceeded as exc:
        print(f"SKIPPED(budget): {exc}")
        return 0
    rep = _Report()
    rep.add("cyclic", "PASS" if cyclic else "FAIL")
    if cyclic:
        pres = presentation_of(code, args.budget)
        for name in ("f", "h1", "g", "pp", "q", "h2"):
            rep.add(name, format_fp_poly(getattr(pres, name)))
        rep.add(
            "dual-cyclic",
            "PASS" if dual_cyclicity_check(code, args.budget) else "FAIL",
        )
    print(rep.render(args.format), end="")
    return 0 if cyclic else 1


def cmd_verify(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    checks = verify.build_ledger(doc, args.budget)
    if args.format == "lines":
        print(verify.render_lines(checks), end="")
    else:
        print(verify.render_text(checks), end="")
    return 1 if verify.has_failure(checks) else 0


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps subparser defaults from clobbering a flag given before
    # the verb; main() fills in the real defaults after parsing.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--budget",
        type=int,
        default=argparse.SUPPRESS,
        help="word budget gating every enumeration (default 10^7)",
    )
    common.add_argument(
        "--format",
        choices=("text", "lines"),
        default=argparse.SUPPRESS,
        help="output style: human text or line-delimited key=value records",
    )
    parser = argparse.ArgumentParser(
        prog="zpzpu",
        description="Workbench for additive codes over Z_p^alpha x (Z_p + u Z_p)^beta, u^2 = 0.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def verb(name: str, func, help_text: str, file_arg: bool = True):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.set_defaults(func=func)
        if file_arg:
            sp.add_argument("file", help="code-spec file path")
        return sp

    verb("reduce", cmd_reduce, "row-reduce the generator matrix to standard form")

    sp = verb("dual", cmd_dual, "compute the dual code")
    sp.add_argument(
        "--method",
        choices=("oracle", "formula", "both"),
        default="oracle",
        help="oracle duals, the literal block-formula rows, or both",
    )

    sp = verb("enumerate", cmd_enumerate, "list all codewords")
    sp.add_argument("--limit", type=int, default=None, help="print at most N words")

    sp = verb("weights", cmd_weights, "weight enumerator of the code")
    sp.add_argument(
        "--weight",
        choices=("gray", "paper"),
        default="gray",
        help="Gray-image weight or the literal per-coordinate case formula",
    )

    verb("macwilliams", cmd_macwilliams, "evaluate the MacWilliams identities")
    verb("distance", cmd_distance, "minimum Gray distance")

    sp = verb(
        "cyclic-build",
        cmd_cyclic_build,
        "build an additive cyclic code from generator polynomials",
        file_arg=False,
    )
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--beta", type=int, required=True)
    sp.add_argument("--f", default="0", help="Z_p-block kernel generator")
    sp.add_argument("--h1", default="0", help="Z_p-block companion of g + u*pp")
    sp.add_argument("--g", default="0", help="unit part of the R-block generator")
    sp.add_argument("--pp", default="0", help="u part of the R-block generator")
    sp.add_argument("--qq", default="0", help="torsion generator (u*qq)")
    sp.add_argument("--h2", default="0", help="Z_p-block companion of u*qq")

    verb("cyclic-check", cmd_cyclic_check, "test shift-closure and recover generators")
    verb("verify", cmd_verify, "run the full verification ledger")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its codes.
        return int(exc.code or 0)
    if not hasattr(args, "budget"):
        args.budget = DEFAULT_BUDGET
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
