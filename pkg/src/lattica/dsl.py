"""Parser and evaluator for the construction language.

Grammar (LL(1))::

    expr  := NAME '(' args ')' | NAME
    args  := arg { ',' arg }
    arg   := expr | INT

Bare names are keywords: ``unit`` and the step variants ``plain``,
``kleene`` and ``double3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import constructions as C
from .errors import ConstructionError, InputError
from .involution import InvolutionStructure, lattice_of
from .lattice import dual


class ExprSyntaxError(InputError):
    def __init__(self, line, column, expected, found):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        self.found = found
        exp = " or ".join(repr(e) for e in self.expected)
        super().__init__(f"{line}:{column}: expected {exp}, found {found}")


class ExprError(InputError):
    """Well-formed expression with wrong arity or argument kinds."""


@dataclass(frozen=True)
class Int:
    value: int
    pos: tuple


@dataclass(frozen=True)
class Word:
    name: str
    pos: tuple


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: tuple


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),]))")


def _tokens(text):
    # (kind, value, line, column); columns are 1-based
    out = []
    pos = 0
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def where(offset):
        line = max(i for i, s in enumerate(line_starts) if s <= offset)
        return line + 1, offset - line_starts[line] + 1

    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            off = pos + len(rest) - len(rest.lstrip())
            if off < len(text):
                raise ExprSyntaxError(*where(off), ["name", "integer", "(", ")", ","],
                                      repr(text[off]))
            out.append(("end", None, *where(len(text))))
            return out
        kind = m.lastgroup
        value = m.group(kind)
        out.append((kind, value, *where(m.start(kind))))
        pos = m.end()


class _Parser:
    def __init__(self, text):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def _fail(self, expected):
        kind, value, line, col = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ExprSyntaxError(line, col, expected, found)

    def expect(self, punct):
        tok = self.peek()
        if tok[0] != "punct" or tok[1] != punct:
            self._fail([punct])
        self.i += 1

    def expr(self):
        kind, value, line, col = self.peek()
        if kind != "name":
            self._fail(["name"])
        self.i += 1
        nxt = self.peek()
        if nxt[0] == "punct" and nxt[1] == "(":
            self.i += 1
            args = [self.arg()]
            while True:
                tok = self.peek()
                if tok[0] == "punct" and tok[1] == ",":
                    self.i += 1
                    args.append(self.arg())
                elif tok[0] == "punct" and tok[1] == ")":
                    self.i += 1
                    return Call(value, tuple(args), (line, col))
                else:
                    self._fail([")", ","])
        return Word(value, (line, col))

    def arg(self):
        kind, value, line, col = self.peek()
        if kind == "int":
            self.i += 1
            return Int(int(value), (line, col))
        if kind == "name":
            return self.expr()
        self._fail(["name", "integer"])


def parse_expr(text: str):
    """Parse ``text`` into a ``Call``/``Word`` tree or raise ExprSyntaxError."""
    p = _Parser(text)
    tree = p.expr()
    if p.peek()[0] != "end":
        p._fail(["end of input"])
    return tree


# -- evaluation -------------------------------------------------------------

_VARIANTS = {v.value for v in C.Variant}


def _where(node):
    return f"{node.pos[0]}:{node.pos[1]}"


def _int_arg(node, low):
    if not isinstance(node, Int):
        raise ExprError(f"{_where(node)}: expected an integer")
    if node.value < low:
        raise ExprError(f"{_where(node)}: integer must be at least {low}")
    return node.value


def _variant_arg(node):
    if not isinstance(node, Word) or node.name not in _VARIANTS:
        raise ExprError(f"{_where(node)}: expected one of {sorted(_VARIANTS)}")
    return C.Variant(node.name)


def _struct_arg(node):
    if isinstance(node, Int) or (isinstance(node, Word) and node.name != "unit"):
        raise ExprError(f"{_where(node)}: expected a construction")
    if isinstance(node, Word):
        raise ExprError(f"{_where(node)}: 'unit' is only allowed as a sandwich filling")
    return evaluate(node)


def _arity(node, *counts):
    if len(node.args) not in counts:
        want = " or ".join(map(str, counts))
        raise ExprError(f"{_where(node)}: {node.name} takes {want} argument(s)")


def _dual(S):
    if isinstance(S, InvolutionStructure):
        # an involution stays an order-reversing involution of the dual
        return InvolutionStructure(dual(S.lattice), S.inv)
    return dual(S)


def evaluate(tree):
    """Build the structure an expression denotes.

    ``tower`` evaluates to its last member; ``osum`` yields a plain lattice.
    """
    if isinstance(tree, str):
        tree = parse_expr(tree)
    if not isinstance(tree, Call):
        raise ExprError(f"{_where(tree)}: expected a construction")
    name = tree.name
    args = tree.args
    try:
        if name == "chain":
            _arity(tree, 1)
            return C.reversed_chain(_int_arg(args[0], 1))
        if name == "bool":
            _arity(tree, 1)
            return C.boolean(_int_arg(args[0], 0))
        if name == "m":
            _arity(tree, 1)
            return C.m_lattice(_int_arg(args[0], 1))
        if name == "dual":
            _arity(tree, 1)
            return _dual(_struct_arg(args[0]))
        if name == "bound":
            _arity(tree, 1)
            return C.bound_B(_struct_arg(args[0])).result
        if name == "osum":
            _arity(tree, 2)
            return C.ordinal_sum(_struct_arg(args[0]), _struct_arg(args[1])).result
        if name == "hsum":
            if not args:
                raise ExprError(f"{_where(tree)}: hsum needs at least one argument")
            parts = [_struct_arg(a) for a in args]
            if not all(isinstance(p, InvolutionStructure) for p in parts):
                parts = [lattice_of(p) for p in parts]
            return C.horizontal_sum(parts).result
        if name == "sandwich":
            _arity(tree, 2)
            L = _struct_arg(args[0])
            if isinstance(args[1], Word) and args[1].name == "unit":
                K = None
            else:
                K = _struct_arg(args[1])
            return C.sandwich(L, K).result
        if name == "aol":
            _arity(tree, 1)
            return C.aol_sandwich(_struct_arg(args[0])).result
        if name == "step":
            _arity(tree, 2)
            return C.step(_struct_arg(args[0]), _variant_arg(args[1])).result
        if name == "tower":
            _arity(tree, 3)
            fam = C.tower(_struct_arg(args[0]), _int_arg(args[1], 0), _variant_arg(args[2]))
            return fam.members[-1]
    except ConstructionError as exc:
        raise ExprError(f"{_where(tree)}: {exc}") from exc
    raise ExprError(f"{_where(tree)}: unknown construction {name!r}")
