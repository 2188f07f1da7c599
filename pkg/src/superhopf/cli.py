"""Command-line front end (``superhopf``).

Exit codes: 0 success, 1 usage, 2 parse error, 3 degree guard, 4 suite failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import oracle, slambda, snsym, squsym, suites
from .combinatorics import (
    DottedComposition,
    SuperPartition,
    dotted_compositions,
    strong_coarsenings,
    superpartitions,
    weak_coarsenings,
)
from .expr import (
    SYM_BASES,
    Basis,
    ParseError,
    Value,
    basis_name,
    degree,
    evaluate,
    parse,
    parse_index,
    render_pretty,
    render_tensor_pretty,
    tensor_to_json,
    terms_of,
    to_json,
)
from .kernel import LinComb, fmt_coeff

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_GUARD, EXIT_SUITE = 0, 1, 2, 3, 4
DEFAULT_MAX_DEGREE = slambda.MAX_DEGREE
# sQSym/sNSym arithmetic is combinatorial and cheap; the Λ limit is set by the transition matrices
DEFAULT_MAX_DEGREE_QS = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# ----------------------------------------------------------------------------
# helpers


def _bases(node):
    if isinstance(node, Basis):
        yield node.name
    for child in ("arg", "left", "right"):
        if hasattr(node, child):
            yield from _bases(getattr(node, child))


def _load(text: str, args) -> Value:
    node = parse(text)
    limit = args.max_degree
    if limit is None:
        limit = DEFAULT_MAX_DEGREE if any(b in SYM_BASES for b in _bases(node)) else DEFAULT_MAX_DEGREE_QS
    if degree(node) > limit:
        raise slambda.DegreeGuardError(f"expression has degree n+m = {degree(node)} > --max-degree {limit}")
    return evaluate(node)


def _emit_value(v: Value, args):
    if v.kind == "num":
        _emit_scalar(v.data, args)
        return
    _emit_terms(terms_of(v), basis_name(v), args)


def _emit_terms(terms: LinComb, basis: str, args):
    if args.format == "json":
        print(json.dumps(to_json(terms, basis), ensure_ascii=False))
    else:
        print(render_pretty(terms, basis))


def _emit_tensor(t, left, right, args):
    if args.format == "json":
        print(json.dumps(tensor_to_json(t, left, right), ensure_ascii=False))
    else:
        print(render_tensor_pretty(t, left, right))


def _emit_scalar(c, args):
    if args.format == "json":
        print(json.dumps({"value": fmt_coeff(c)}))
    else:
        print(fmt_coeff(c))


def _need(v: Value, kinds, what):
    if v.kind not in kinds:
        raise UsageError(f"{what} is not defined for {v.kind} elements")


def _sp(text: str) -> SuperPartition:
    return parse_index("m", text)


# ----------------------------------------------------------------------------
# subcommands


def cmd_mul(args):
    v = _load(" * ".join(f"({e})" for e in args.exprs), args)
    _emit_value(v, args)


def cmd_comul(args):
    v = _load(args.expr, args)
    if v.kind == "qs":
        _emit_tensor(squsym.comul_M(v.data), "M", "M", args)
    elif v.kind == "ns":
        _emit_tensor(snsym.comul_H(v.data), "H", "H", args)
    elif v.kind == "sym":
        legs = args.legs or v.data.basis
        _emit_tensor(slambda.comul(v.data, legs=legs), legs, legs, args)
    else:
        raise UsageError("comul needs an algebra element")


def cmd_antipode(args):
    v = _load(args.expr, args)
    if v.kind == "qs":
        _emit_terms(squsym.antipode_M(v.data), "M", args)
    elif v.kind == "ns":
        _emit_terms(snsym.antipode_H(v.data), "H", args)
    elif v.kind == "sym":
        out = slambda.antipode(v.data)
        _emit_terms(out.terms, out.basis, args)
    else:
        raise UsageError("antipode needs an algebra element")


def cmd_omega(args):
    v = _load(args.expr, args)
    _need(v, ("sym",), "omega")
    out = slambda.omega(v.data)
    _emit_terms(out.terms, out.basis, args)


def cmd_pair(args):
    a, b = _load(args.left, args), _load(args.right, args)
    if a.kind == "qs" and b.kind == "ns":
        a, b = b, a
    if not (a.kind == "ns" and b.kind == "qs"):
        raise UsageError("pair takes one H expression and one M/L/Lb expression")
    _emit_scalar(snsym.pair(a.data, b.data), args)


def cmd_hall(args):
    a, b = _load(args.left, args), _load(args.right, args)
    _need(a, ("sym",), "hall")
    _need(b, ("sym",), "hall")
    _emit_scalar(slambda.hall_scalar(a.data, b.data), args)


def cmd_convert(args):
    text = args.expr
    if "[" not in text:
        if not args.source:
            raise UsageError("a bare index needs --from")
        text = f"{args.source}[{text}]"
    v = _load(text, args)
    if v.kind == "qs":
        if args.to != "M":
            raise UsageError("sQSym elements convert to M only")
        _emit_terms(v.data, "M", args)
        return
    _need(v, ("sym",), "convert")
    if args.source and args.source != v.data.basis and "[" in args.expr:
        raise UsageError(f"--from {args.source} disagrees with the expression basis {v.data.basis}")
    if args.to not in slambda.BASES:
        raise UsageError(f"unknown target basis {args.to!r}")
    out = slambda.convert(v.data, args.to)
    _emit_terms(out.terms, out.basis, args)


def _schur_guard(lam: SuperPartition):
    slambda._guard(lam.n, lam.m, slambda.MAX_MACDONALD_DEGREE)


def cmd_schur(args):
    lam = _sp(args.index)
    _schur_guard(lam)
    if args.dual:
        f = slambda.dual_schur_bar(lam) if args.bar else slambda.dual_schur(lam)
    else:
        f = slambda.schur_bar(lam) if args.bar else slambda.schur(lam)
    _emit_terms(f.terms, "m", args)


def cmd_skew(args):
    lam, om = _sp(args.outer), _sp(args.inner)
    _schur_guard(lam)
    fam = "sb" if args.bar else "s"
    _emit_terms(slambda.skew(fam, lam, om).terms, fam, args)


def cmd_lr(args):
    gam, om = _sp(args.left), _sp(args.right)
    slambda._guard(gam.n + om.n, gam.m + om.m, slambda.MAX_MACDONALD_DEGREE)
    fam = "sb" if args.bar else "s"
    _emit_terms(slambda.lr_coeffs(fam, gam, om), fam, args)


def cmd_enumerate(args):
    kind = args.kind
    if kind in ("superpartitions", "compositions"):
        if args.n is None or args.m is None:
            raise UsageError(f"enumerate {kind} needs --n and --m")
        limit = args.max_degree if args.max_degree is not None else DEFAULT_MAX_DEGREE
        if args.n + args.m > limit:
            raise slambda.DegreeGuardError(f"bidegree ({args.n}|{args.m}) exceeds --max-degree {limit}")
        items = superpartitions(args.n, args.m) if kind == "superpartitions" else dotted_compositions(args.n, args.m)
        items = [str(x) for x in items]
    else:
        if not args.index:
            raise UsageError(f"enumerate {kind} needs --index")
        alpha = parse_index("M", args.index)
        fn = weak_coarsenings if kind == "weak-coarsenings" else strong_coarsenings
        items = [str(x) for x in sorted(fn(alpha), key=DottedComposition.sort_key)]
    if args.format == "json":
        print(json.dumps({"kind": kind, "items": items}))
    else:
        for x in items:
            print(x)


def cmd_oracle(args):
    v = _load(args.expr, args)
    N = args.vars
    if v.kind == "qs":
        # M_α vanishes on fewer than ℓ(α) variables
        p = oracle.expand_lincomb(
            v.data, N, lambda a, n: oracle.expand_M(a, n) if len(a) <= n else oracle.SuperPolynomial(n))
    elif v.kind == "sym":
        terms = slambda.convert(v.data, "m").terms
        p = oracle.expand_lincomb(
            terms, N, lambda lam, n: oracle.expand_m(lam, n) if len(lam) <= n else oracle.SuperPolynomial(n))
    else:
        raise UsageError("oracle expands sQSym or Λ expressions")
    if args.format == "json":
        terms = [{"theta": [i + 1 for i in th], "exponents": list(ex), "coeff": fmt_coeff(c)}
                 for (th, ex), c in sorted(p.terms.items(), key=oracle._term_order)]
        print(json.dumps({"nvars": N, "terms": terms}))
    else:
        print(repr(p))


def cmd_check(args):
    cfg = suites.SuiteConfig(args.max_degree, args.seed, args.sample)
    checks = suites.run_suite(args.suite, cfg)
    ok = all(c.passed for c in checks)
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "passed": ok, "checks": [
            {"name": c.name, "passed": c.passed, "cases": c.cases,
             "counterexample": None if c.counterexample is None else str(c.counterexample)}
            for c in checks]}, ensure_ascii=False))
    else:
        for c in checks:
            print(c.line())
    return EXIT_OK if ok else EXIT_SUITE


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def flags(parser, suppress):
        def d(v):
            return argparse.SUPPRESS if suppress else v
        parser.add_argument("--format", choices=("pretty", "json"), default=d("pretty"))
        parser.add_argument("--max-degree", type=int, default=d(None))
        parser.add_argument("--seed", type=int, default=d(0))

    # global flags may come before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    flags(common, suppress=True)
    p = _Parser(prog="superhopf", description="Hopf algebras of (quasi)symmetric functions in superspace.")
    flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        sp_ = sub.add_parser(name, help=help_, parents=[common])
        sp_.set_defaults(func=fn)
        return sp_

    add("mul", cmd_mul, "product of expressions").add_argument("exprs", nargs="+")
    c = add("comul", cmd_comul, "coproduct")
    c.add_argument("expr")
    c.add_argument("--legs", choices=slambda.BASES, default=None, help="basis for the legs of a Λ coproduct")
    add("antipode", cmd_antipode, "antipode").add_argument("expr")
    add("omega", cmd_omega, "the involution ω on Λ").add_argument("expr")
    c = add("pair", cmd_pair, "pairing <H, M>")
    c.add_argument("left")
    c.add_argument("right")
    c = add("hall", cmd_hall, "Hall-type scalar product on Λ")
    c.add_argument("left")
    c.add_argument("right")
    c = add("convert", cmd_convert, "change of basis")
    c.add_argument("expr")
    c.add_argument("--from", dest="source", default=None)
    c.add_argument("--to", required=True)
    c = add("schur", cmd_schur, "Schur function in superspace, m-expansion")
    c.add_argument("index")
    c.add_argument("--bar", action="store_true")
    c.add_argument("--dual", action="store_true")
    c = add("skew", cmd_skew, "skew Schur function s_{Λ/Ω}")
    c.add_argument("outer")
    c.add_argument("inner")
    c.add_argument("--bar", action="store_true")
    c = add("lr", cmd_lr, "Littlewood-Richardson coefficients of s_Γ s_Ω")
    c.add_argument("left")
    c.add_argument("right")
    c.add_argument("--bar", action="store_true")
    c = add("enumerate", cmd_enumerate, "list combinatorial objects")
    c.add_argument("kind", choices=("superpartitions", "compositions", "weak-coarsenings", "strong-coarsenings"))
    c.add_argument("--n", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--index")
    c = add("oracle", cmd_oracle, "expand in explicit variables")
    c.add_argument("expr")
    c.add_argument("--vars", type=int, required=True)
    c = add("check", cmd_check, "run a property suite")
    c.add_argument("--suite", required=True, choices=tuple(suites.SUITES) + ("all",))
    c.add_argument("--sample", type=int, default=None, help="sample this many cases in the slow checks")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, argument errors exit through _Parser.error
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        code = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except slambda.DegreeGuardError as exc:
        print(f"degree guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
