"""Command line entry point: ``latinq construct|check|spins|recover``.

Exit status: 0 when every reported verdict passes, 1 on a property or
verification failure, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

import numpy as np

from . import constructions as cons
from .core import CayleyTable, is_latin, parse_table, serialize_table
from .errors import QuandleError, TooLargeError
from .groups import quandle_isomorphic
from .properties import PASS, LAWS, Verdict, is_latin_quandle, is_quandle
from .representations import induced_groupoid, is_lipq, lambda_is_automorphism, phi_is_automorphism, rep_is_commutative
from .spins import check_lemma_3_3, check_spin_group, recover_group, spin_set, spins_coincide
from .translations import check_translation_identities, middle_arrays

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_N = 64


class UsageError(Exception):
    pass


def max_order() -> int:
    raw = os.environ.get("QUANDLE_MAX_N", str(DEFAULT_MAX_N))
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"QUANDLE_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("QUANDLE_MAX_N must be positive")
    return value


def _check_order(n: int) -> None:
    cap = max_order()
    if n > cap:
        raise UsageError(f"order {n} exceeds QUANDLE_MAX_N={cap}")


def _load(path: str) -> CayleyTable:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    t = parse_table(data)
    _check_order(t.n)
    return t


def _emit_table(t: CayleyTable, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(serialize_table(t))
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(serialize_table(t))


# -- construct ---------------------------------------------------------------

def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{args.kind} requires --{name}")
    if value < 1:
        raise UsageError(f"--{name} must be positive")
    return value


def _build(args) -> tuple[CayleyTable, str]:
    kind = args.kind
    if kind == "cyclic":
        n = _need(args, "n")
        _check_order(n)
        return cons.cyclic_group(n), f"cyclic group Z_{n}"
    if kind == "elementary-abelian":
        k = _need(args, "k")
        _check_order(3**k)
        return cons.elementary_abelian_3(k), f"elementary abelian group (Z_3)^{k}"
    if kind == "core-cyclic":
        n = _need(args, "n")
        _check_order(n)
        return cons.core(cons.cyclic_group(n), 0, args.side), f"{args.side} core of Z_{n}"
    if kind == "from-left":
        n = _need(args, "n")
        _check_order(n)
        return (cons.build_from_left_translations(cons.cyclic_group(n), 0),
                f"left-translation construction over Z_{n}")
    if kind == "from-right":
        n = _need(args, "n")
        _check_order(n)
        return (cons.build_from_right_translations(cons.cyclic_group(n), 0),
                f"right-translation construction over Z_{n}")
    if kind == "ipq":
        k = _need(args, "k")
        _check_order(3**k)
        return cons.build_ipq(cons.elementary_abelian_3(k), 0), f"IPQ over (Z_3)^{k}"
    raise UsageError(f"unknown construction {kind!r}")


def cmd_construct(args) -> int:
    t, label = _build(args)
    to_stdout = args.output is None or args.output == "-"
    _emit_table(t, args.output)
    info = sys.stderr if to_stdout else sys.stdout
    print(f"CONSTRUCT {args.kind} order {t.n}", file=info)
    print(f"# {label}", file=info)
    if not is_latin(t):
        print(f"warning: table is not latin (order {t.n})", file=sys.stderr)
    return EXIT_OK


# -- check -------------------------------------------------------------------

def _latin_verdict(t):
    for name in ("left-division", "right-division"):
        v = LAWS[name].check(t)
        if not v:
            return v
    return PASS


def _law(name):
    return lambda t: LAWS[name].check(t)


def _ip(t):
    v = LAWS["LIP"].check(t)
    return v if not v else LAWS["RIP"].check(t)


def _requires_latin(fn):
    def wrapped(t):
        if not is_latin(t):
            return Verdict(False, None, "precondition", ("precondition",))
        return fn(t)
    return wrapped


@_requires_latin
def _translation_identities(t):
    report = check_translation_identities(t)
    for k, name in enumerate(report, start=1):
        v = report.results[name]
        if not v:
            return Verdict(False, (k, *v.witness), None, ("identity", *v.variables))
    return PASS


def _matrix_verdict(ok: np.ndarray) -> Verdict:
    if ok.all():
        return PASS
    i, x = np.argwhere(~ok)[0]
    return Verdict(False, (int(i), int(x)), None, ("i", "x"))


@_requires_latin
def _left_coincidence(t):
    lam, _ = middle_arrays(t)
    return _matrix_verdict(t.cells == lam)


@_requires_latin
def _right_coincidence(t):
    _, phi = middle_arrays(t)
    return _matrix_verdict(t.cells.T == phi)


@_requires_latin
def _induced_lipq(t):
    return PASS if is_lipq(induced_groupoid(t)) else Verdict(False)


def _automorphism(fn, law):
    def check(t):
        if not is_latin_quandle(t) or not LAWS[law].check(t):
            return Verdict(False, None, "precondition", ("precondition",))
        return fn(t)
    return check


PROPS: dict[str, Callable[[CayleyTable], Verdict]] = {
    "latin": _latin_verdict,
    "quandle": is_quandle,
    "latin-quandle": is_latin_quandle,
    "commutative": _law("commutative"),
    "medial": _law("medial"),
    "lip": _law("LIP"),
    "rip": _law("RIP"),
    "ip": _ip,
    "cip": _law("CIP"),
    "translation-identities": _translation_identities,
    "left-coincidence": _left_coincidence,
    "right-coincidence": _right_coincidence,
    "middle-equal": _requires_latin(rep_is_commutative),
    "induced-lipq": _induced_lipq,
    "lambda-automorphism": _automorphism(lambda_is_automorphism, "RIP"),
    "phi-automorphism": _automorphism(phi_is_automorphism, "LIP"),
}
DEFAULT_PROPS = [
    "latin", "quandle", "latin-quandle", "commutative", "medial", "lip", "rip", "ip", "cip",
    "translation-identities", "left-coincidence", "right-coincidence", "middle-equal",
]
ALIASES = {
    "abelian": "medial",
    "lemma2.1": "translation-identities",
    "cor2.4": "left-coincidence",
    "cor2.5": "right-coincidence",
    "thm2.11": "induced-lipq",
    "thm2.12": "middle-equal",
    "thm2.16": "middle-equal",
}


def _select_props(spec: str) -> list[str]:
    names = []
    for raw in spec.split(","):
        name = raw.strip().lower()
        if not name:
            continue
        if name == "all":
            names.extend(DEFAULT_PROPS)
            continue
        name = ALIASES.get(name, name)
        if name not in PROPS:
            known = ", ".join(sorted([*PROPS, *ALIASES, "all"]))
            raise UsageError(f"unknown property {raw.strip()!r}; known: {known}")
        names.append(name)
    return list(dict.fromkeys(names))


def _witness_text(v: Verdict) -> str:
    if v.law == "precondition":
        return "precondition=failed"
    return v.describe()


def _line(tag: str, fields: list[str], v: Verdict, as_json: bool, **extra) -> str:
    if as_json:
        obj = {"kind": tag, "name": " ".join(fields), "pass": v.holds, **extra}
        if not v.holds:
            if v.law == "precondition":
                obj["precondition"] = "failed"
            elif v.witness is not None:
                obj["witness"] = dict(zip(v.variables, v.witness))
        return json.dumps(obj, sort_keys=True)
    parts = [tag, *fields, "PASS" if v.holds else "FAIL"]
    if not v.holds and (v.witness is not None or v.law == "precondition"):
        parts.append(_witness_text(v))
    return " ".join(parts)


def cmd_check(args) -> int:
    props = _select_props(args.props)
    t = _load(args.table)
    status = EXIT_OK
    for name in props:
        v = PROPS[name](t)
        print(_line("PROP", [name], v, args.json))
        if not v.holds:
            status = EXIT_FAIL
    return status


# -- spins -------------------------------------------------------------------

def cmd_spins(args) -> int:
    t = _load(args.table)
    if not is_latin(t):
        print("error: spins need a latin table", file=sys.stderr)
        return EXIT_FAIL
    sides = ["left", "right"] if args.side == "both" else [args.side]
    involutory = False
    if is_latin_quandle(t):
        v_lip, v_rip = LAWS["LIP"].check(t), LAWS["RIP"].check(t)
        involutory = bool(v_lip) or bool(v_rip)
    status = EXIT_OK
    notes = []
    exported = []

    def out(fields, v, **extra):
        nonlocal status
        print(_line("SPIN", fields, v, args.json, **extra))
        if not v.holds:
            status = EXIT_FAIL

    for side in sides:
        s = spin_set(t, side)
        g = check_spin_group(s)
        if args.json:
            print(json.dumps({"kind": "SPIN", "name": f"{side} size", "value": len(s)}, sort_keys=True))
        else:
            print(f"SPIN {side} size {len(s)}")
        for key in ("closure", "identity", "inverses", "commutative", "cyclic"):
            out([side, key], PASS if getattr(g, key) else Verdict(False))
        if g.is_group and g.commutative and not g.cyclic:
            notes.append(f"NOTE {side} spin group of order {g.order} is commutative but not cyclic")
        if involutory:
            report = check_lemma_3_3(t, side)
            for name, v in report.results.items():
                out([side, name], v)
        else:
            print(f"SPIN {side} lemma SKIP not-involutory" if not args.json else
                  json.dumps({"kind": "SPIN", "name": f"{side} lemma", "skipped": "not-involutory"}, sort_keys=True))
        exported.append((side, s))

    if args.coincide:
        out(["coincide"], spins_coincide(t))
    for note in notes:
        if not args.json:
            print(note)
    if args.export:
        with open(args.export, "w", encoding="utf-8", newline="\n") as fh:
            for side, s in exported:
                fh.write(f"# side={side} size={len(s)}\n")
                for p in s.members:
                    fh.write(" ".join(str(v) for v in p.map) + "\n")
    return status


# -- recover -----------------------------------------------------------------

def cmd_recover(args) -> int:
    t = _load(args.table)
    if not 0 <= args.base < t.n:
        raise UsageError(f"--base {args.base} outside 0..{t.n - 1}")
    against = _load(args.against) if args.against else None
    try:
        g = recover_group(t, args.side, args.base)
    except QuandleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    to_stdout = args.output is None or args.output == "-"
    _emit_table(g, args.output)
    info = sys.stderr if to_stdout else sys.stdout
    print(f"RECOVER {args.side} base {args.base} order {g.n}", file=info)
    status = EXIT_OK
    if against is not None:
        try:
            ok, f = quandle_isomorphic(g, against)
        except TooLargeError as exc:
            raise UsageError(str(exc)) from None
        if ok:
            print(f"RECOVER isomorphic PASS map={','.join(map(str, f))}", file=info)
        else:
            print("RECOVER isomorphic FAIL", file=info)
            status = EXIT_FAIL
    return status


# -- wiring ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latinq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a group or quandle table")
    p.add_argument("kind", choices=["cyclic", "elementary-abelian", "core-cyclic",
                                    "from-left", "from-right", "ipq"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="verify properties of a table")
    p.add_argument("table", nargs="?", default="-", help="table file, '-' for stdin")
    p.add_argument("--props", default="all", help="comma separated property names, or 'all'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spins", help="spin sets, spin groups and spin properties")
    p.add_argument("table", nargs="?", default="-")
    p.add_argument("--side", choices=["left", "right", "both"], default="right")
    p.add_argument("--coincide", action="store_true", help="also compare l- and r-spins")
    p.add_argument("--export", metavar="FILE", help="write every distinct spin as a line")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spins)

    p = sub.add_parser("recover", help="recover the group carried by the spins")
    p.add_argument("table", nargs="?", default="-")
    p.add_argument("--side", choices=["left", "right"], default="right")
    p.add_argument("--base", type=int, default=0)
    p.add_argument("--against", metavar="FILE", help="group table to test isomorphism against")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_recover)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"latinq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuandleError as exc:
        # parse errors and unmet construction preconditions
        print(f"latinq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"latinq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
