"""``quiversat`` command line.

Every subcommand prints ``key = value`` lines in a fixed order (or one JSON
object per record with ``--format json-lines``).  Decision subcommands exit 0
for yes/member, 1 for no/non-member; usage and input errors exit 2.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .cone import cone_description, in_cone
from .lr import lr_positive, lr_saturation_table
from .oracle import brute_is_sub, lr_coefficient
from .quiver import QuiverError, euler_form, parse_quiver
from .schofield import SchofieldSession, hull_data
from .semiinvariant import (
    DEFAULT_BOUND,
    DEFAULT_TRIALS,
    Witness,
    generic_nonvanishing,
    saturation_witness,
)


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rationals(text: str) -> tuple:
    try:
        vals = tuple(Fraction(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")
    return tuple(int(v) if v.denominator == 1 else v for v in vals)


def _fmt(vec) -> str:
    return ",".join(str(x) for x in vec)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _load(args):
    try:
        text = Path(args.quiver).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.quiver}: {exc.strerror}")
    Q = parse_quiver(text)
    return Q, SchofieldSession(Q)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")


def cmd_euler(args):
    _need(args, "a", "b")
    Q, _ = _load(args)
    return 0, [[("euler", euler_form(Q, args.a, args.b))]]


def cmd_subdims(args):
    _need(args, "dim")
    Q, session = _load(args)
    subs = session.subdims(args.dim)
    return 0, [[("subdim", _fmt(a))] for a in subs] + [[("count", len(subs))]]


def cmd_check_sub(args):
    _need(args, "alpha", "dim")
    _, session = _load(args)
    ok = session.is_sub(args.alpha, args.dim)
    return int(not ok), [[("alpha", _fmt(args.alpha)), ("dim", _fmt(args.dim)), ("sub", _yes(ok))]]


def cmd_check_quot(args):
    _need(args, "dim", "beta")
    _, session = _load(args)
    ok = session.is_quot(args.dim, args.beta)
    return int(not ok), [[("dim", _fmt(args.dim)), ("beta", _fmt(args.beta)), ("quot", _yes(ok))]]


def cmd_cone(args):
    _need(args, "dim")
    Q, session = _load(args)
    if args.weight is None:
        desc = cone_description(session, args.dim)
        records = [[("equality", _fmt(desc.equality))]]
        records += [[("inequality", _fmt(b))] for b in desc.inequalities]
        return 0, records
    decision = in_cone(session, args.dim, args.weight)
    record = [("dim", _fmt(args.dim)), ("weight", _fmt(args.weight)), ("verdict", decision.verdict)]
    if decision.verdict == "violated-inequality":
        record.append(("violated_by", _fmt(decision.certificate)))
    elif decision.verdict == "violated-equality":
        record.append(("pairing", str(decision.certificate)))
    return int(not decision.member), [record]


def cmd_witness(args):
    _need(args, "dim", "weight")
    Q, session = _load(args)
    if any(isinstance(x, Fraction) for x in args.weight):
        raise UsageError("--weight must be integral for a witness")
    result = saturation_witness(session, args.dim, args.weight, args.trials, args.bound, args.seed)
    if isinstance(result, Witness):
        record = [tuple(line.split("=", 1)) for line in result.serialize().splitlines()]
        return 0, [[("status", "witness")] + record]
    record = [("status", result.reason)]
    if result.reason == "not-in-cone":
        record.append(("verdict", result.verdict))
        key = "violated_by" if result.verdict == "violated-inequality" else "pairing"
        cert = result.certificate
        record.append((key, _fmt(cert) if isinstance(cert, tuple) else str(cert)))
    else:
        record.append(("detail", result.detail))
    return 1, [record]


def cmd_semiinv(args):
    _need(args, "a", "b")
    _, session = _load(args)
    res = generic_nonvanishing(session, args.a, args.b, args.trials, args.bound, args.seed)
    record = [("A", _fmt(args.a)), ("B", _fmt(args.b)), ("nonzero", _yes(res.nonzero))]
    if res.nonzero:
        record.append(("det", str(res.det)))
    else:
        record.append(("false_zero_bound", str(res.false_zero_bound)))
    record += [("schofield_sub", _yes(res.schofield)), ("consistent", _yes(res.consistent))]
    return int(not res.nonzero), [record]


def cmd_oracle_sub(args):
    _need(args, "alpha", "dim")
    Q, session = _load(args)
    brute = brute_is_sub(Q, args.alpha, args.dim, args.p, args.ext)
    record = [
        ("alpha", _fmt(args.alpha)),
        ("dim", _fmt(args.dim)),
        ("field", f"F_{args.p}^{args.ext}"),
        ("brute_sub", _yes(brute)),
        ("schofield_sub", _yes(session.is_sub(args.alpha, args.dim))),
    ]
    return int(not brute), [record]


def cmd_hull(args):
    _need(args, "dim")
    Q, session = _load(args)
    hull = hull_data(session, args.dim)
    records = [[("order", " ".join(Q.order))]]
    records += [[(f"theta_{x}", _fmt(hull.theta[x]))] for x in Q.order]
    records += [[("T_row", _fmt(row))] for row in hull.t]
    records += [[("W_row", _fmt(row))] for row in hull.w]
    return 0, records


def cmd_lr(args):
    _need(args, "lam", "mu", "nu")
    lam, mu, nu = args.lam, args.mu, args.nu
    positive = lr_positive(lam, mu, nu)
    records = [[
        ("lam", _fmt(lam)), ("mu", _fmt(mu)), ("nu", _fmt(nu)),
        ("lr_positive", _yes(positive)),
        ("lr_coefficient", lr_coefficient(lam, mu, nu)),
    ]]
    if args.nmax is not None:
        records += [[("N", N), ("positive", _yes(ok))] for N, ok in lr_saturation_table(lam, mu, nu, args.nmax)]
    return int(not positive), records


COMMANDS = {
    "euler": cmd_euler,
    "subdims": cmd_subdims,
    "check-sub": cmd_check_sub,
    "check-quot": cmd_check_quot,
    "cone": cmd_cone,
    "witness": cmd_witness,
    "semiinv": cmd_semiinv,
    "oracle-sub": cmd_oracle_sub,
    "hull": cmd_hull,
    "lr": cmd_lr,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quiversat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name != "lr":
            p.add_argument("quiver", help="quiver file")
        p.add_argument("--dim", type=_ints)
        p.add_argument("--alpha", type=_ints)
        p.add_argument("--beta", type=_ints)
        p.add_argument("--weight", type=_rationals)
        p.add_argument("--a", type=_ints)
        p.add_argument("--b", type=_ints)
        p.add_argument("--lam", type=_ints)
        p.add_argument("--mu", type=_ints)
        p.add_argument("--nu", type=_ints)
        p.add_argument("--nmax", type=int)
        p.add_argument("--p", type=int, default=3, help="oracle base prime")
        p.add_argument("--ext", type=int, default=2, help="oracle search extension degree")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
        p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        p.add_argument("--format", choices=("plain", "json-lines"), default="plain")
    return parser


def render(records, fmt: str) -> str:
    lines = []
    for record in records:
        if fmt == "json-lines":
            lines.append(json.dumps(dict(record)))
        else:
            lines.extend(f"{k} = {v}" for k, v in record)
    return "".join(line + "\n" for line in lines)


_VECTOR_FLAGS = {"--dim", "--alpha", "--beta", "--weight", "--a", "--b", "--lam", "--mu", "--nu"}
_NEGATIVE = re.compile(r"-\d")


def _glue_negative_vectors(argv: list[str]) -> list[str]:
    # argparse reads "-1,1" as an option; "--weight=-1,1" is unambiguous
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VECTOR_FLAGS and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv) -> tuple[int, str, str]:
    """Returns ``(exit code, stdout text, stderr text)``."""
    try:
        args = build_parser().parse_args(_glue_negative_vectors(list(argv)))
        if args.command is None:
            raise UsageError(f"a subcommand is required: {', '.join(COMMANDS)}")
        code, records = COMMANDS[args.command](args)
    except (UsageError, QuiverError, ValueError, argparse.ArgumentTypeError) as exc:
        return 2, "", f"quiversat: error: {exc}\n"
    return code, render(records, args.format), ""


def main(argv=None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
