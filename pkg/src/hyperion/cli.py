"""Command-line front end: ``hyperion <verb> ...`` and an interactive REPL."""

import argparse
import json
import re
import shlex
import sys
from importlib import resources
from fractions import Fraction

import mpmath

from . import __version__
from ._scan import format_fraction
from .audit import AXIOMS, run_audit
from .conway import add_dyadic, gonshor_exp_cut, mul_dyadic, negate
from .derivation import derive_k
from .errors import HyperionError, ParseError
from .hypercalc import (
    cmp_terms, format_term, hyperlog_of_atomic, is_atomic, ladder_chains, normalize, parse_term, to_series,
)
from .ordinal import format_ordinal, parse_ordinal, set_depth_guard
from .series import format_series, parse_series, series_to_json
from .signseq import bracket, format_signseq, from_dyadic, parse_signseq, to_dyadic

__all__ = ["main", "run", "repl", "build_parser", "load_schema", "SCHEMA_FOR_VERB"]

SCHEMA_FOR_VERB = {
    "ord": "ordinal", "seq": "number", "bracket": "number", "conway": "number", "exp-check": "exp_check",
    "series": "series", "diff": "series", "normalize": "term", "cmp": "order", "to-series": "series",
    "atomic": "atomic", "hyperlog": "series", "audit": "audit", "chains": "chains",
}


def load_schema(name):
    """The shipped JSON schema for one kind of ``--json`` output."""
    return json.loads(resources.files("hyperion").joinpath("schemas", f"{name}.schema.json").read_text())


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" through as an operand rather than an unknown flag
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    # argparse exits on bad usage; raise instead so the REPL survives
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--samples", type=int, default=argparse.SUPPRESS)
    p.add_argument("--depth-guard", type=int, default=argparse.SUPPRESS,
                   help="maximal ordinal nesting depth (env HYPERION_DEPTH_GUARD)")
    p.add_argument("--precision", type=int, default=argparse.SUPPRESS, help="decimal digits for numerics")
    return p


def build_parser():
    common = _common()
    parser = _Parser(prog="hyperion", parents=[common],
                     description="Exact ordinals, surreals, hyperseries and hyperlogarithms.")
    parser.add_argument("--version", action="version", version=f"hyperion {__version__}")
    sub = parser.add_subparsers(dest="verb", metavar="verb", parser_class=_Parser)
    sub.required = True

    def verb(name, help, aliases=()):
        return sub.add_parser(name, help=help, parents=[common], aliases=list(aliases))

    verb("ord", "normalize an ordinal expression").add_argument("expr", nargs="+")
    verb("seq", "parse a sign sequence or dyadic").add_argument("expr", nargs="+")
    p = verb("bracket", "simplest number in a cut {L | R}")
    p.add_argument("--left", default="", help="comma-separated left options")
    p.add_argument("--right", default="", help="comma-separated right options")
    p = verb("conway", "Conway arithmetic on finite sign sequences")
    p.add_argument("op", choices=["add", "mul", "neg", "exp-check"])
    p.add_argument("operands", nargs="*")
    p.add_argument("--a")
    p.add_argument("--depth", type=int, default=8)
    p = verb("exp-check", "Gonshor exponential cut around e^a")
    p.add_argument("a", nargs="?")
    p.add_argument("--a", dest="a_opt")
    p.add_argument("--depth", type=int, default=8)
    verb("series", "normalize a series").add_argument("expr", nargs="+")
    p = verb("diff", "derivative of a series")
    p.add_argument("expr", nargs="+")
    p.add_argument("--order", type=int, default=1)
    verb("normalize", "rewrite a term to normal form").add_argument("expr", nargs="+")
    p = verb("cmp", "compare two terms as x -> oo")
    p.add_argument("left")
    p.add_argument("right")
    verb("to-series", "series of a logarithmic term").add_argument("expr", nargs="+")
    for name, helptext in (("atomic", "atomicity of l[gamma] below a level"),
                           ("hyperlog", "hyperlogarithm of an atomic l[gamma]")):
        p = verb(name, helptext, aliases=("atomic?",) if name == "atomic" else ())
        p.add_argument("--gamma", required=True)
        p.add_argument("--beta", required=True)
    p = verb("audit", "sample an axiom and report failures")
    p.add_argument("--axiom", choices=AXIOMS, required=True)
    p.add_argument("--mu", default="1")
    p = verb("chains", "hyperexponential and hyperlogarithm ladders")
    p.add_argument("--nu-max", default="3")
    verb("repl", "interactive session")
    return parser


_DEFAULTS = {"json": False, "seed": 0, "samples": 200, "depth_guard": None, "precision": 50}


# -- value parsing ------------------------------------------------------------


def _number(text):
    """A sign sequence ``(+ - +)`` or a dyadic rational ``3/4``."""
    text = text.strip()
    if text.startswith("("):
        return parse_signseq(text)
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError("expected a sign sequence or a dyadic rational", text, 0) from None
    return from_dyadic(q)


def _options(text):
    return [_number(t) for t in text.split(",") if t.strip()]


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ParseError("expected a rational", str(text), 0) from None


def _number_out(s):
    out = {"seq": format_signseq(s)}
    if s.is_finite():
        out["value"] = format_fraction(to_dyadic(s))
    return out


def _joined(args):
    return " ".join(args.expr)


# -- verbs --------------------------------------------------------------------


def _exp_check(a, depth, precision):
    a = _rational(a)
    cut = gonshor_exp_cut(from_dyadic(a), depth)
    with mpmath.workdps(max(precision, 50)):
        ref = mpmath.exp(mpmath.mpf(a.numerator) / a.denominator)
        lo = mpmath.mpf(cut.lo.numerator) / cut.lo.denominator
        inside = lo < ref and (cut.hi is None or ref < mpmath.mpf(cut.hi.numerator) / cut.hi.denominator)
    return {
        "a": format_fraction(a), "depth": depth,
        "lo": format_fraction(cut.lo), "hi": None if cut.hi is None else format_fraction(cut.hi),
        "contains_exp": bool(inside),
    }


def _exp_text(d):
    hi = "oo" if d["hi"] is None else d["hi"]
    return f"{d['lo']} < exp({d['a']}) < {hi}  contains_exp={str(d['contains_exp']).lower()}"


def _do_conway(args, opts):
    if args.op == "exp-check":
        a = args.a if args.a is not None else (args.operands[0] if args.operands else None)
        if a is None:
            raise _UsageError("conway exp-check needs --a")
        d = _exp_check(a, args.depth, opts["precision"])
        return d, _exp_text(d)
    arity = 1 if args.op == "neg" else 2
    if len(args.operands) != arity:
        raise _UsageError(f"conway {args.op} takes {arity} operand(s)")
    xs = [_number(t) for t in args.operands]
    if args.op == "neg":
        r = negate(xs[0])
    elif args.op == "add":
        r = add_dyadic(*xs)
    else:
        r = mul_dyadic(*xs)
    d = _number_out(r)
    return d, d["seq"]


def _do_audit(args, opts):
    mu = parse_ordinal(args.mu)
    report = run_audit(args.axiom, mu, opts["samples"], opts["seed"])
    d = report.to_dict()
    if report.failures:
        lines = [f"{args.axiom} mu={d['mu']}: {len(report.failures)} failure(s) in {d['samples']} samples"]
        for f in report.failures[:10]:
            lines.append(f"  {json.dumps(f['instance'])}: {f['lhs']} vs {f['rhs']} [{f['verdict']}]")
    else:
        lines = [f"{args.axiom} mu={d['mu']}: ok ({d['samples']} samples, {d['unknowns']} unknown)"]
    return d, "\n".join(lines)


def _do_chains(args, opts):
    r = ladder_chains(parse_ordinal(args.nu_max))
    steps = [{"from": format_ordinal(lo), "to": format_ordinal(hi), "e": str(e), "l": str(l)}
             for lo, hi, e, l in r.steps]
    d = {"nu_max": format_ordinal(r.nu_max), "e_increasing": r.e_increasing,
         "l_decreasing": r.l_decreasing, "steps": steps, "unknowns": r.unknowns}
    lines = [f"E[w^{s['from']}](x) vs E[w^{s['to']}](x): {s['e']};  "
             f"L[w^{s['to']}](x) vs L[w^{s['from']}](x): {s['l']}" for s in steps]
    lines.append(f"E-chain increasing: {str(r.e_increasing).lower()}; "
                 f"L-chain decreasing: {str(r.l_decreasing).lower()}")
    return d, "\n".join(lines)


def _dispatch(args, opts):
    v = args.verb
    if v == "ord":
        s = format_ordinal(parse_ordinal(_joined(args)))
        return {"ordinal": s}, s
    if v == "seq":
        d = _number_out(_number(_joined(args)))
        return d, d["seq"]
    if v == "bracket":
        d = _number_out(bracket(_options(args.left), _options(args.right)))
        return d, d["seq"]
    if v == "conway":
        return _do_conway(args, opts)
    if v == "exp-check":
        a = args.a_opt if args.a_opt is not None else args.a
        if a is None:
            raise _UsageError("exp-check needs a value")
        d = _exp_check(a, args.depth, opts["precision"])
        return d, _exp_text(d)
    if v in ("series", "diff"):
        f = parse_series(_joined(args))
        if v == "diff":
            f = derive_k(f, args.order)
        return {"series": format_series(f), "terms": series_to_json(f)}, format_series(f)
    if v == "normalize":
        s = format_term(normalize(parse_term(_joined(args))))
        return {"term": s}, s
    if v == "cmp":
        o = str(cmp_terms(parse_term(args.left), parse_term(args.right)))
        return {"order": o}, o
    if v == "to-series":
        s = format_series(to_series(parse_term(_joined(args))))
        return {"series": s}, s
    if v in ("atomic", "atomic?"):
        ok = is_atomic(parse_ordinal(args.gamma), parse_ordinal(args.beta))
        return {"atomic": ok}, str(ok).lower()
    if v == "hyperlog":
        s = format_series(hyperlog_of_atomic(parse_ordinal(args.gamma), parse_ordinal(args.beta)))
        return {"series": s}, s
    if v == "audit":
        return _do_audit(args, opts)
    if v == "chains":
        return _do_chains(args, opts)
    raise _UsageError(f"unknown verb {v!r}")  # pragma: no cover


def _execute(argv, out, err, state):
    """Run one command line; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return 2
    opts = dict(state)
    for key in _DEFAULTS:
        if hasattr(args, key):
            opts[key] = getattr(args, key)
    if args.verb == "repl":
        return repl(sys.stdin, out, err, opts)
    try:
        if opts["depth_guard"] is not None:
            set_depth_guard(opts["depth_guard"])
        data, text = _dispatch(args, opts)
    except _UsageError as exc:
        print(exc, file=err)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except (HyperionError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    if opts["json"]:
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return 0


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    return _execute(list(sys.argv[1:] if argv is None else argv), out, err, _DEFAULTS)


_HELP = """verbs: ord, seq, bracket, conway, exp-check, series, diff, normalize, cmp,
       to-series, atomic, hyperlog, audit, chains
examples:
  ord w + 1 + w
  diff 3*l[1] + 2
  cmp L[w](x) L[1](x)
  hyperlog --gamma w*2 --beta w^2
commands: :help, :quit"""


def repl(inp=None, out=None, err=None, opts=None):
    """Read commands line by line; errors are reported and the loop continues."""
    inp, out, err = inp or sys.stdin, out or sys.stdout, err or sys.stderr
    opts = dict(opts or _DEFAULTS)
    interactive = hasattr(inp, "isatty") and inp.isatty()
    while True:
        if interactive:
            out.write("> ")
            out.flush()
        line = inp.readline()
        if not line:
            return 0
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in (":quit", ":q"):
            return 0
        if line in (":help", ":h"):
            print(_HELP, file=out)
            continue
        try:
            argv = shlex.split(line)
        except ValueError as exc:
            print(f"parse error: {exc}", file=err)
            continue
        if argv[0] == "repl":
            print("error: already in the repl", file=err)
            continue
        _execute(argv, out, err, opts)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
