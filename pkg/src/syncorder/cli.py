"""Command-line interface.

Exit codes: 0 for yes/success, 1 for no, 2 for errors (bad input, failed
precondition).  Automata are read and written in the JSON automaton format.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, orderdecide, ordertype
from . import syncauto as sa
from .errors import SyncOrderError
from .logic import automaton_to_formula, compile_formula, default_names, format_formula, parse_formula
from .oracle import verify_against_brute_force
from .structured import normal_form, to_structured
from .upset import parse_upset

YES, NO, ERROR = 0, 1, 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def _write(A, out):
    if out:
        sa.save(A, out)
    else:
        print(sa.to_json(A))


def _verdict(args, value, witness=None, key="result"):
    if args.json:
        body = {key: bool(value)}
        if witness is not None:
            body["witness"] = witness
        _emit(body)
    return YES if value else NO


def cmd_member(args):
    R = sa.load(args.file)
    return _verdict(args, R.accepts((args.k, args.l)))


def cmd_check(args):
    R = sa.load(args.file)
    if args.property == "order":
        value = orderdecide.is_strict_order(R)
    elif args.property == "linear":
        value = orderdecide.is_linear(R)
    else:
        value = orderdecide.is_complete(R)
    return _verdict(args, value)


def cmd_chains(args):
    R = sa.load(args.file)
    asc = orderdecide.has_infinite_chain(R, "asc")
    desc = orderdecide.has_infinite_chain(R, "desc")
    _emit({
        "asc": asc.exists,
        "desc": desc.exists,
        "witness": {
            "asc": list(asc.witness) if asc.witness else None,
            "desc": list(desc.witness) if desc.witness else None,
        },
    })
    return YES


def cmd_antichains(args):
    R = sa.load(args.file)
    infinite = orderdecide.has_infinite_antichain(R)
    bound = None if infinite else orderdecide.antichain_bound(R)
    _emit({"infinite": infinite, "bound": bound})
    return YES


def cmd_extremal(args):
    R = sa.load(args.file)
    v = orderdecide.extremal_element(R, args.side)
    return _verdict(args, v.exists, v.witness, key="exists")


def cmd_type(args):
    R = sa.load(args.file)
    tau = ordertype.order_type(R)
    if args.json:
        _emit({"type": str(tau)})
    else:
        print(tau)
    return YES


def cmd_equiv(args):
    R, S = sa.load(args.first), sa.load(args.second)
    return _verdict(args, ordertype.equivalent_orders(R, S))


def cmd_op(args):
    name = args.operation
    operands = args.operands
    need = {
        "union": 2, "intersect": 2, "complement": 1, "inverse": 1, "compose": 2, "sum": 2,
        "scale": 3, "trace": 2, "complete-with": 2, "collapse": 1,
    }[name]
    if len(operands) != need:
        raise _Usage(f"op {name} takes {need} operand(s)")
    if name == "trace":
        result = algebra.natural_order_on(parse_upset(operands[0]), operands[1])
    elif name == "scale":
        result = algebra.scale(sa.load(operands[0]), int(operands[1]), int(operands[2]))
    elif name == "complete-with":
        result = algebra.complete_with(sa.load(operands[0]), operands[1])
    else:
        autos = [sa.load(f) for f in operands]
        fn = {
            "union": sa.union,
            "intersect": sa.intersection,
            "complement": sa.complement,
            "inverse": algebra.inverse,
            "compose": algebra.compose,
            "sum": algebra.sum_disjoint,
            "collapse": algebra.collapse_finite_complement,
        }[name]
        result = fn(*autos)
    _write(result, args.output)
    return YES


def _bindings(pairs):
    sets = {}
    for item in pairs or ():
        name, sep, literal = item.partition("=")
        if not sep or not name:
            raise _Usage(f"--let expects NAME=UPSET, got {item!r}")
        sets[name.strip()] = parse_upset(literal)
    return sets


def cmd_compile(args):
    f = parse_formula(args.formula, _bindings(args.let))
    variables = args.vars.split(",") if args.vars else None
    _write(compile_formula(f, variables), args.output)
    return YES


def cmd_to_formula(args):
    A = sa.load(args.file)
    print(format_formula(automaton_to_formula(A, default_names(A.arity))))
    return YES


def cmd_normalize(args):
    R = sa.load(args.file)
    nf = normal_form(R) if not args.raw else to_structured(R)
    sys.stdout.write(nf.dump())
    return YES


def cmd_export_dot(args):
    sys.stdout.write(sa.to_dot(sa.load(args.file)))
    return YES


def cmd_oracle(args):
    R = sa.load(args.file)
    report = verify_against_brute_force(R, args.max)
    print(report.to_json())
    return YES if report.ok() else NO


def build_parser():
    p = _Parser(prog="syncorder", description="Synchronous orders on the naturals.")
    p.add_argument("--json", action="store_true", help="print verdicts as JSON")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("member", help="is (k, l) in the relation")
    s.add_argument("file")
    s.add_argument("k", type=int)
    s.add_argument("l", type=int)
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("check", help="order / linear / complete")
    s.add_argument("property", choices=["order", "linear", "complete"])
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("chains", help="infinite ascending/descending chains")
    s.add_argument("file")
    s.set_defaults(func=cmd_chains)

    s = sub.add_parser("antichains", help="infinite antichains and the size bound")
    s.add_argument("file")
    s.set_defaults(func=cmd_antichains)

    s = sub.add_parser("extremal", help="maximal / minimal element")
    s.add_argument("side", choices=["max", "min"])
    s.add_argument("file")
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("type", help="reduced order type of a linear order")
    s.add_argument("file")
    s.set_defaults(func=cmd_type)

    s = sub.add_parser("equiv", help="do two linear orders have the same type")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("op", help="build a new relation")
    s.add_argument("operation", choices=[
        "union", "intersect", "complement", "inverse", "compose", "sum",
        "scale", "trace", "complete-with", "collapse",
    ])
    s.add_argument("operands", nargs="+")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_op)

    s = sub.add_parser("compile", help="formula to automaton")
    s.add_argument("formula")
    s.add_argument("--let", action="append", metavar="NAME=UPSET")
    s.add_argument("--vars", help="comma-separated coordinate order")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("to-formula", help="automaton to formula")
    s.add_argument("file")
    s.set_defaults(func=cmd_to_formula)

    s = sub.add_parser("normalize", help="debug dump of the normal form")
    s.add_argument("file")
    s.add_argument("--raw", action="store_true", help="dump the structured form before normalizing")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("export-dot", help="Graphviz rendering")
    s.add_argument("file")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("oracle", help="brute-force validation")
    s.add_argument("action", choices=["verify"])
    s.add_argument("file")
    s.add_argument("--max", type=int, default=50)
    s.set_defaults(func=cmd_oracle)
    return p


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _Usage as exc:
        print(f"syncorder: {exc}", file=sys.stderr)
    except (SyncOrderError, ValueError, OSError) as exc:
        print(f"syncorder: {type(exc).__name__}: {exc}", file=sys.stderr)
    return ERROR


def main():
    sys.exit(run())
