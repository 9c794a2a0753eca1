"""Command-line front end: ``braidcover <subcommand> ...``.

Exit codes: 0 success, 1 malformed input, 2 undefined result, 3 violated
precondition.  Every subcommand accepts ``--json``; the human form carries
the same values.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import cover, surgery
from .braid import BraidWord, closure_components, self_linking
from .errors import InputError, ParseError, PreconditionError, UndefinedResult
from .homology import branched_h1
from .obstructions import braidability_verdict, cpn_immersion_obstruction, d3_delta, embeddability_verdict

EXIT_INPUT, EXIT_UNDEFINED, EXIT_PRECONDITION = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _with_file(path: str, fn: Callable):
    """Run ``fn`` and prefix any parse error with the file name."""
    try:
        return fn(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _labeled(path: str):
    return _with_file(path, cover.loads)


def _diagram(path: str) -> surgery.SurgeryDiagram:
    return _with_file(path, surgery.loads)


def _rational(x: Fraction) -> str:
    return str(x)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _sublink(s) -> list[int]:
    return [i + 1 for i in sorted(s)]


def _sublink_key(s) -> str:
    return "{" + ",".join(map(str, _sublink(s))) + "}"


# --------------------------------------------------------------------------
# Subcommands: each returns (json payload, human text)
# --------------------------------------------------------------------------

def cmd_validate(args):
    lb, _ = _labeled(args.file)
    top, valid = cover.propagate_and_validate(lb)
    payload = {"valid": valid, "top_labels": [str(g) for g in top]}
    human = f"valid: {_bool(valid)}\ntop_labels: {' '.join(payload['top_labels'])}"
    return payload, human, (0 if valid else EXIT_INPUT)


def cmd_classify(args):
    lb, trace = _labeled(args.file)
    report = cover.classify_cover(lb)
    payload = report.to_json()
    payload["d3_delta"] = d3_delta(trace)
    human = "\n".join(
        [
            f"fold: {report.fold}",
            f"transitive: {_bool(report.transitive)}",
            f"simple: {_bool(report.simple)}",
            f"cyclic: {_bool(report.cyclic)}",
            f"components_of_branch_locus: {report.components_of_branch_locus}",
            "ramification: " + " ".join("[" + ",".join(map(str, r)) + "]" for r in report.ramification),
            "multiply_ramified: " + " ".join(_bool(m) for m in report.multiply_ramified),
            f"d3_delta: {payload['d3_delta']}",
        ]
    )
    return payload, human


def cmd_sl(args):
    source = args.braid
    if os.path.exists(source) or source == "-":
        braid = _labeled(source)[0].braid
    else:
        braid = BraidWord.parse(source)
    sl = self_linking(braid)
    return {"sl": sl}, str(sl)


def cmd_page(args):
    lb, _ = _labeled(args.file)
    s = cover.page_surface(lb)
    payload = s.to_json()
    human = "\n".join(f"{k}: {_bool(v) if isinstance(v, bool) else v}" for k, v in payload.items())
    return payload, human


def cmd_h1(args):
    lb, _ = _labeled(args.file)
    group = branched_h1(lb)
    return group.to_json(), str(group)


def cmd_move(args):
    lb, trace = _labeled(args.file)
    if args.op == "connect":
        if args.site is None:
            raise InputError("--op connect needs --site")
        out = cover.connect_move(lb, args.site, height=args.height)
        move = "connect"
    else:
        if args.component is None:
            raise InputError("--op stab needs --component")
        out = cover.stabilize_branch_locus(lb, args.component)
        move = "stab"
    text = cover.dumps(out, trace + (move,))
    payload = {
        "strands": out.strands,
        "fold": out.fold,
        "word": list(out.braid.letters),
        "labels": [str(g) for g in out.bottom_labels],
        "trace": list(trace + (move,)),
    }
    return payload, text.rstrip("\n")


def _surgery_payload(d: surgery.SurgeryDiagram):
    d3 = surgery.d3_invariant(d)
    c1 = surgery.c1_class(d)
    spins = surgery.characteristic_sublinks(d)
    gamma = {_sublink_key(s): surgery.gamma_invariant(d, s) for s in spins}
    payload = {
        "d3": _rational(d3),
        "c1": c1.to_json(),
        "spins": [_sublink(s) for s in spins],
        "gamma": {k: g.to_json() for k, g in gamma.items()},
    }
    lines = [
        f"d3: {payload['d3']}",
        f"H1: {c1.group()}",
        f"c1: {list(c1.canonical())} zero={_bool(c1.is_zero())}",
        "spins: " + " ".join(_sublink_key(s) for s in spins),
    ]
    lines += [f"gamma {k}: {list(g.canonical())} zero={_bool(g.is_zero())}" for k, g in gamma.items()]
    return payload, "\n".join(lines)


def cmd_surgery(args):
    return _surgery_payload(_diagram(args.file))


def cmd_contfrac(args):
    cf = surgery.continued_fraction(args.p, args.q)
    payload = {"continued_fraction": list(cf)}
    human = str(cf)
    if args.rolled_up:
        rolled = surgery.rolled_up_framings(cf)
        payload["rolled_up"] = rolled
        human += "\nrolled_up: [" + ", ".join(map(str, rolled)) + "]"
    return payload, human


def _verdict_payload(v):
    payload = {"status": v.status.value, "reasons": list(v.reasons)}
    return payload, f"{payload['status']} ({', '.join(payload['reasons'])})"


def cmd_obstruct(args):
    classes = [surgery.c1_class(_diagram(p)) for p in args.c1]
    if args.braid is None:
        if len(classes) != 1:
            raise InputError("without a braid file, give exactly one --c1 diagram")
        return _verdict_payload(embeddability_verdict(classes[0]))
    lb, _ = _labeled(args.braid)
    return _verdict_payload(braidability_verdict(lb, classes or None, invertible_locus=args.invertible))


def cmd_cp_immersion(args):
    v = cpn_immersion_obstruction(args.n)
    payload, human = _verdict_payload(v)
    payload["a2_coefficient"] = v.details["a2_coefficient"]
    return payload, f"{human}\na2_coefficient: {payload['a2_coefficient']}"


# --------------------------------------------------------------------------
# Entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidcover", description="Branched covers of braid closures and their contact invariants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "check the labels respect every crossing").add_argument("file")
    add("classify", cmd_classify, "transitive / simple / cyclic, ramification").add_argument("file")
    add("sl", cmd_sl, "self-linking number of the closure").add_argument(
        "braid", help="labeled-braid file, or braid text like 'B2: -1'"
    )
    add("page", cmd_page, "lifted page surface").add_argument("file")
    add("h1", cmd_h1, "first homology of the branched cover").add_argument("file")

    p = add("move", cmd_move, "apply a connect or stabilization move")
    p.add_argument("file", help="labeled-braid file, '-' for stdin")
    p.add_argument("--op", choices=("connect", "stab"), required=True)
    p.add_argument("--site", type=int, help="connect: left position of the adjacent pair")
    p.add_argument("--height", type=int, default=0, help="connect: letters below the insertion point")
    p.add_argument("--component", type=int, help="stab: 0-based branch-locus component")

    add("surgery", cmd_surgery, "d3, c1, spin structures and Gamma").add_argument("file")

    p = add("contfrac", cmd_contfrac, "continued fraction of -p/q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--rolled-up", action="store_true", help="also print rolled-up framings")

    p = add("obstruct", cmd_obstruct, "embeddability / braidability verdict")
    p.add_argument("braid", nargs="?", help="labeled-braid file (omit for a bare c1 verdict)")
    p.add_argument("--c1", nargs="+", default=[], metavar="SURGFILE", help="surgery diagram(s) giving c1, one per orientation")
    p.add_argument("--invertible", action="store_true", help="attest that the branch locus is invertible")

    add("cp-immersion", cmd_cp_immersion, "Pontryagin obstruction for CP^n").add_argument("n", type=int)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except UndefinedResult as exc:
        print(f"undefined: {exc}", file=stderr)
        return EXIT_UNDEFINED
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=stderr)
        return EXIT_PRECONDITION
    payload, human, *rest = result
    if args.json:
        stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stdout.write(human + "\n")
    return rest[0] if rest else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
