"""Command-line front end.

    lattica <command> [--expr TEXT | --file PATH] [flags]

Exit status: 0 on success or verified, 1 when a property is refuted,
2 on input errors.  Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import theorems
from .congruence import (
    Signature,
    all_congruences,
    fix_constants,
    oracle_limit,
)
from .corpus import Entry, standard_corpus
from .dsl import evaluate
from .errors import LatticaError
from .formats import dumps, loads, to_dot
from .involution import InvolutionStructure, classify, lattice_of
from .lattice import is_distributive, is_modular

EXIT_OK, EXIT_REFUTED, EXIT_INPUT = 0, 1, 2


def _load(args):
    if args.expr is not None and args.file is not None:
        raise LatticaError("give either --expr or --file, not both")
    if args.expr is not None:
        return evaluate(args.expr)
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                return loads(fh.read())
        except OSError as exc:
            raise LatticaError(f"cannot read {args.file}: {exc.strerror}") from exc
    raise LatticaError("one of --expr or --file is required")


@dataclass
class Report:
    """Everything a command produced, renderable as text or JSON.

    ``counts`` maps a label (signature, optionally with fixed constants) to
    the number of congruences; when ``listings`` has the same key its
    length equals the count.
    """

    summary: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    listings: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)
    body: str | None = None

    def text(self) -> str:
        if self.body is not None:
            return self.body
        out = []
        if self.summary:
            out.append(" ".join(f"{k}={v}" for k, v in self.summary.items()))
        for name, val in self.flags.items():
            out.append(f"{name}: {'yes' if val else 'no'}")
        for key, count in self.counts.items():
            out.append(f"{key}: {count}")
            out += [f"  {p}" for p in self.listings.get(key, ())]
        out += [r.line() for r in self.verdicts]
        return "".join(line + "\n" for line in out)

    def to_json(self) -> str:
        doc = {
            "summary": self.summary,
            "flags": self.flags,
            "counts": self.counts,
            "listings": self.listings,
            "verdicts": [
                {"theorem": r.theorem, "holds": r.holds, "instances": r.instances,
                 "witness": None if r.holds else str(r.witness)}
                for r in self.verdicts
            ],
        }
        return json.dumps(doc) + "\n"


def _summary(S):
    L = lattice_of(S)
    return {"n": L.n, "bottom": L.bottom, "top": L.top}


def _con_key(sig, fix):
    return sig.value if not fix else f"{sig.value}/fix{fix}"


def cmd_eval(args):
    return Report(body=dumps(_load(args))), EXIT_OK


def cmd_dot(args):
    return Report(body=to_dot(_load(args))), EXIT_OK


def cmd_con(args):
    S = _load(args)
    sig = Signature.parse(args.sig)
    C = all_congruences(S, sig)
    L = lattice_of(S)
    if args.fix == "0":
        C = fix_constants(C, [L.bottom])
    elif args.fix == "01":
        C = fix_constants(C, [L.bottom, L.top])
    key = _con_key(sig, args.fix)
    rep = Report(summary=_summary(S), counts={key: len(C)})
    if args.list:
        rep.listings[key] = [str(p) for p in C]
    return rep, EXIT_OK


def cmd_classify(args):
    S = _load(args)
    L = lattice_of(S)
    tax = classify(S)
    rep = Report(summary=_summary(S))
    rep.flags["modular"] = is_modular(L)
    rep.flags["distributive"] = is_distributive(L)
    rep.flags.update(tax.flags)
    sigs = [Signature.LAT]
    if isinstance(S, InvolutionStructure):
        sigs.append(Signature.ILAT)
        if S.brouwer is not None:
            sigs.append(Signature.BZ)
    for sig in sigs:
        rep.counts[sig.value] = len(all_congruences(S, sig))
    return rep, EXIT_OK


def cmd_verify(args):
    if args.theorem == "all":
        ids = list(theorems.REGISTRY)
    elif args.theorem in theorems.REGISTRY:
        ids = [args.theorem]
    else:
        known = ", ".join(theorems.REGISTRY)
        raise LatticaError(f"unknown theorem {args.theorem!r}; known: all, {known}")
    rep = Report(verdicts=[theorems.run(i) for i in ids])
    return rep, EXIT_OK if all(r.holds for r in rep.verdicts) else EXIT_REFUTED


def cmd_oracle_check(args):
    limit = args.max_n if args.max_n is not None else oracle_limit()
    if args.expr is not None or args.file is not None:
        entries = [Entry(args.expr or args.file, _load(args))]
        if entries[0].n > limit:
            raise LatticaError(f"{entries[0].n} elements exceeds --max-n {limit}")
    else:
        entries = [e for e in standard_corpus() if e.n <= limit]
    res = theorems.oracle_equivalence(entries, max_n=limit)
    rep = Report(summary={"structures": len(entries), "max_n": limit}, verdicts=[res])
    return rep, EXIT_OK if res.holds else EXIT_REFUTED


COMMANDS = {
    "eval": cmd_eval,
    "dot": cmd_dot,
    "con": cmd_con,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "oracle-check": cmd_oracle_check,
}


def run(argv) -> tuple:
    """Parse ``argv`` and execute; returns (Report, exit code).

    Input errors propagate as LatticaError; ``main`` maps them to exit 2.
    """
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lattica", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def source(p):
        g = p.add_argument_group("input")
        g.add_argument("--expr", help="construction expression, e.g. 'step(m(3), plain)'")
        g.add_argument("--file", help="JSON lattice document")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("eval", help="emit the JSON lattice document")
    source(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dot", help="Hasse diagram in Graphviz format")
    source(p)
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("con", help="count (and list) congruences")
    source(p)
    p.add_argument("--sig", default="lat", choices=[s.value for s in Signature])
    p.add_argument("--fix", choices=["0", "01"], help="require singleton classes at 0 (and 1)")
    p.add_argument("--list", action="store_true", help="print every congruence")
    p.set_defaults(func=cmd_con)

    p = sub.add_parser("classify", help="taxonomy report")
    source(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check registered identities on the shipped corpus")
    p.add_argument("theorem", help="theorem id or 'all'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-check", help="compare closure generation with brute force")
    source(p)
    p.add_argument("--max-n", type=int, default=None, help="oracle element cap")
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        rep, code = COMMANDS[args.command](args)
    except LatticaError as exc:
        print(f"lattica: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(rep.to_json() if getattr(args, "json", False) and rep.body is None else rep.text())
    for r in rep.verdicts:
        if not r.holds:
            print(f"lattica: {r.theorem} refuted; witness: {r.witness}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
