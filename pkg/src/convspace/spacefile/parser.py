"""Line-oriented space description format.

One statement per line, ``#`` starts a comment::

    poset C2 = {0 < 1}
    space S = alexandroff of C2
    space T = {x, y} opens {{}, {y}, {x, y}}
    space P = tensor S T D
    omega B = beta
    omega B' = coreflect B D'
    omega W = weak_scott of omega_plus_one
    net alt on E = seq (a, 2n)
    net t on S = tail {0, 1}
    query compare B' B expect finer

Names may contain primes.  Inside ``seq`` a residue written ``n``, ``3n`` or
``2n+1`` is a chain ramp; every other atom is a point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import ParseError, ResolveError
from ..omega.sets import Ramp

OPERATOR_NAMES = ("D", "D'", "I", "I'", "N", "N'", "1", "S")
ORDER_KINDS = ("alexandroff", "upper", "scott", "weak_scott")
FINITE_BUILTINS = ("sierpinski", "point")
OMEGA_BUILTINS = ("beta", "gamma", "delta", "E", "scott_omega_plus_one")
OMEGA_ORDERS = ("omega", "omega_plus_one")
EXPECTATIONS = ("true", "false", "pass", "fail", "equal", "finer", "coarser", "incomparable",
                "topological", "refuted", "undetermined")
COMMANDS = {
    "validate": 1, "coreflect": 2, "compare": 2, "product": 2, "tensor": 3, "exp": 3,
    "laws": 4, "cspace": 1, "sclass": 3, "suite": 0, "export": 2,
}

_TOKEN = re.compile(r"\s*(?:(?P<punct>[{}(),<=])|(?P<atom>[^\s{}(),<=#]+))")
_RAMP = re.compile(r"^(\d*)n(?:\+(\d+))?$")


@dataclass(frozen=True)
class Span:
    line: int
    column: int


@dataclass(frozen=True)
class Statement:
    kind: str            # poset, space, omega, net, query
    name: str | None
    form: str
    args: tuple
    expect: str | None = None
    span: Span = field(default=Span(0, 0), compare=False)


@dataclass(frozen=True)
class SpaceDoc:
    statements: tuple

    def of_kind(self, kind: str) -> list[Statement]:
        return [s for s in self.statements if s.kind == kind]

    @property
    def queries(self) -> list[Statement]:
        return self.of_kind("query")


class _Tokens:
    def __init__(self, text: str, line: int):
        self.line = line
        self.items = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(line, pos + 1, "a token", text[pos:pos + 1])
            kind = "punct" if m.group("punct") else "atom"
            value = m.group(kind)
            self.items.append((kind, value, m.start(kind) + 1))
            pos = m.end()
        self.i = 0
        self.end_col = len(text) + 1

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else (None, None, self.end_col)

    def at_end(self) -> bool:
        return self.i >= len(self.items)

    def next_atom(self, expected: str = "a name") -> str:
        kind, value, col = self.peek()
        if kind != "atom":
            raise ParseError(self.line, col, expected, value or "end of line")
        self.i += 1
        return value

    def expect(self, punct: str) -> None:
        kind, value, col = self.peek()
        if kind != "punct" or value != punct:
            raise ParseError(self.line, col, repr(punct), value or "end of line")
        self.i += 1

    def keyword(self, *choices: str) -> str:
        kind, value, col = self.peek()
        if kind != "atom" or value not in choices:
            raise ParseError(self.line, col, " or ".join(choices), value or "end of line")
        self.i += 1
        return value

    def accept(self, punct: str) -> bool:
        kind, value, _ = self.peek()
        if kind == "punct" and value == punct:
            self.i += 1
            return True
        return False

    def done(self) -> None:
        if not self.at_end():
            kind, value, col = self.peek()
            raise ParseError(self.line, col, "end of line", value)

    @property
    def column(self) -> int:
        return self.peek()[2]


def _atom_list(tk: _Tokens, open_="{", close="}") -> tuple:
    tk.expect(open_)
    out = []
    if tk.accept(close):
        return ()
    while True:
        out.append(tk.next_atom("an element"))
        if tk.accept(close):
            return tuple(out)
        tk.expect(",")


def _parse_poset_body(tk: _Tokens) -> tuple:
    tk.expect("{")
    elements: list[str] = []
    pairs: list[tuple] = []

    def note(x):
        if x not in elements:
            elements.append(x)

    if not tk.accept("}"):
        while True:
            prev = tk.next_atom("an element")
            note(prev)
            while tk.accept("<"):
                cur = tk.next_atom("an element")
                note(cur)
                pairs.append((prev, cur))
                prev = cur
            if tk.accept("}"):
                break
            tk.expect(",")
    return tuple(elements), tuple(pairs)


def _operator(tk: _Tokens) -> str:
    return tk.keyword(*OPERATOR_NAMES)


def _residue(atom: str):
    m = _RAMP.match(atom)
    if m:
        return Ramp(int(m.group(1) or 1), int(m.group(2) or 0))
    return atom


def _parse_line(text: str, line: int) -> Statement | None:
    tk = _Tokens(text, line)
    if tk.at_end():
        return None
    col = tk.column
    kind = tk.keyword("poset", "space", "omega", "net", "query")
    span = Span(line, col)
    if kind == "query":
        cmd = tk.keyword(*COMMANDS)
        args = []
        cols = []
        expect = None
        while not tk.at_end():
            cols.append(tk.column)
            atom = tk.next_atom("an argument")
            if atom == "expect":
                expect = tk.keyword(*EXPECTATIONS)
                break
            args.append(atom)
        tk.done()
        if len(args) != COMMANDS[cmd]:
            raise ParseError(line, tk.column, f"{COMMANDS[cmd]} argument(s) for {cmd}", " ".join(args))
        if cmd in ("coreflect", "tensor", "exp", "laws") and args[-1] not in OPERATOR_NAMES:
            raise ParseError(line, cols[len(args) - 1], "an operator name", args[-1])
        if cmd == "export" and args[1] not in ("dot", "json"):
            raise ParseError(line, cols[1], "dot or json", args[1])
        return Statement("query", None, cmd, tuple(args), expect, span)
    name = tk.next_atom("a name")
    if kind == "net":
        tk.keyword("on")
        space = tk.next_atom("a space name")
        tk.expect("=")
        form = tk.keyword("tail", "directed", "seq")
        if form == "seq":
            items = _atom_list(tk, "(", ")")
            if not items:
                raise ParseError(line, tk.column, "at least one residue")
            args = (space, tuple(_residue(a) for a in items))
        else:
            items = _atom_list(tk)
            if not items:
                raise ParseError(line, tk.column, "a nonempty set")
            args = (space, items)
        tk.done()
        return Statement("net", name, form, args, None, span)
    tk.expect("=")
    if kind == "poset":
        body = _parse_poset_body(tk)
        tk.done()
        return Statement("poset", name, "explicit", body, None, span)
    kind_, value, c = tk.peek()
    if kind == "space" and kind_ == "punct" and value == "{":
        ground = _atom_list(tk)
        tk.keyword("opens")
        tk.expect("{")
        opens = []
        if not tk.accept("}"):
            while True:
                opens.append(_atom_list(tk))
                if tk.accept("}"):
                    break
                tk.expect(",")
        tk.done()
        return Statement("space", name, "explicit", (ground, tuple(opens)), None, span)
    word = tk.next_atom("a definition")
    finite_kinds = ORDER_KINDS[:3]
    if (kind == "space" and word in finite_kinds) or (kind == "omega" and word in ORDER_KINDS):
        tk.keyword("of")
        base_col = tk.column
        base = tk.next_atom("an order name")
        if kind == "omega" and base not in OMEGA_ORDERS:
            raise ParseError(line, base_col, " or ".join(OMEGA_ORDERS), base)
        tk.done()
        return Statement(kind, name, "order", (word, base), None, span)
    if word == "coreflect":
        base = tk.next_atom("a space name")
        op = _operator(tk)
        tk.done()
        return Statement(kind, name, "coreflect", (base, op), None, span)
    if kind == "space" and word in ("product", "tensor", "exp"):
        a = tk.next_atom("a space name")
        b = tk.next_atom("a space name")
        args = (a, b) if word == "product" else (a, b, _operator(tk))
        tk.done()
        return Statement("space", name, word, args, None, span)
    builtins = FINITE_BUILTINS if kind == "space" else OMEGA_BUILTINS
    if word in builtins:
        tk.done()
        return Statement(kind, name, "builtin", (word,), None, span)
    raise ParseError(line, c, "a definition", word)


def parse(text: str, resolve: bool = True) -> SpaceDoc:
    statements = []
    for k, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        st = _parse_line(body, k)
        if st is not None:
            statements.append(st)
    doc = SpaceDoc(tuple(statements))
    if resolve:
        check_names(doc)
    return doc


def check_names(doc: SpaceDoc) -> None:
    """Names are unique and every reference points to an earlier declaration of the right sort."""
    sorts: dict[str, str] = {}

    def need(name, allowed, st):
        if sorts.get(name) not in allowed:
            raise ResolveError(name, st.span.line)

    for st in doc.statements:
        if st.kind != "query":
            if st.name in sorts:
                raise ParseError(st.span.line, st.span.column, "a fresh name", st.name)
        if st.kind == "space":
            if st.form == "order":
                need(st.args[1], ("poset",), st)
            elif st.form == "coreflect":
                need(st.args[0], ("space",), st)
            elif st.form in ("product", "tensor", "exp"):
                need(st.args[0], ("space",), st)
                need(st.args[1], ("space",), st)
        elif st.kind == "omega" and st.form == "coreflect":
            need(st.args[0], ("omega",), st)
        elif st.kind == "net":
            need(st.args[0], ("space", "omega"), st)
        elif st.kind == "query":
            a = st.args
            cmd = st.form
            if cmd in ("validate", "cspace", "coreflect"):
                need(a[0], ("space", "omega", "poset"), st)
            elif cmd == "compare":
                need(a[0], ("omega", "space"), st)
                need(a[1], ("omega", "space"), st)
            elif cmd in ("product", "tensor", "exp"):
                need(a[0], ("space",), st)
                need(a[1], ("space",), st)
            elif cmd == "laws":
                for x in a[:3]:
                    need(x, ("space",), st)
            elif cmd == "sclass":
                need(a[0], ("space", "omega"), st)
                need(a[1], ("net",), st)
            elif cmd == "export":
                need(a[0], ("space", "omega", "poset"), st)
        if st.kind != "query":
            sorts[st.name] = st.kind
