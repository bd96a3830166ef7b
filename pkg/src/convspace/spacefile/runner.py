"""Evaluate a parsed document: build the declared objects, then answer queries in order."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..category import (DEFAULT_MAX_SIZE, check_consistency, check_coreflection_universal,
                        check_exponential_law, check_idempotence, exponential, tensor)
from ..convergence import FiniteNet, converges as fin_converges, coreflect
from ..cspace import in_s_class, is_c_space
from ..errors import ConvSpaceError, ResolveError, Unsupported
from ..omega import (BUNDLED, Ramp, SchematicNet, SchematicSet, compare as omega_compare,
                     converges as omega_converges, coreflect_omega, omega, omega_plus_one,
                     order_topology_omega)
from ..omega.space import Handle
from ..order import build_poset
from ..topology import (FiniteTopology, is_finer, is_T0, make_topology, one_point, order_topology,
                        product, sierpinski)
from .export import label_text, to_dot, to_record
from .parser import SpaceDoc, Statement


@dataclass
class QueryResult:
    line: int
    query: str
    status: str  # pass, fail or error
    value: object
    detail: str = ""

    def as_dict(self) -> dict:
        return {"line": self.line, "query": self.query, "status": self.status,
                "value": self.value, "detail": self.detail}


def _atom_point(atom: str):
    return int(atom) if atom.isdigit() else atom


def _finite_compare(A: FiniteTopology, B: FiniteTopology):
    if A.ground != B.ground:
        raise Unsupported("finite spaces on different grounds")
    a, b = is_finer(A, B), is_finer(B, A)
    if a and b:
        return "equal", None
    # witness: a smallest nbhd open on one side only
    extra = next((A.nbhd[x] for x in range(A.n) if not B.is_open(A.nbhd[x])), None)
    if a:
        return "finer", A.labels(extra)
    if b:
        return "coarser", B.labels(next(B.nbhd[x] for x in range(B.n) if not A.is_open(B.nbhd[x])))
    return "incomparable", A.labels(extra)


def _describe(witness) -> str:
    if witness is None:
        return ""
    if isinstance(witness, SchematicSet):
        return witness.describe()
    if isinstance(witness, tuple) and witness and isinstance(witness[0], SchematicSet):
        return " / ".join(w.describe() for w in witness)
    return "{" + ", ".join(label_text(x) for x in witness) + "}"


class Runner:
    def __init__(self, max_size: int = DEFAULT_MAX_SIZE, seed: int = 0):
        self.max_size = max_size
        self.seed = seed
        self.env: dict = {}
        self.exports: list[str] = []

    # -- declarations --------------------------------------------------------------

    def declare(self, st: Statement) -> None:
        a = st.args
        if st.kind == "poset":
            obj = build_poset(a[0], a[1])
        elif st.kind == "space":
            obj = self._space(st)
        elif st.kind == "omega":
            obj = self._omega(st)
        else:
            obj = self._net(st)
        self.env[st.name] = obj

    def _get(self, name, line):
        if name not in self.env:
            raise ResolveError(name, line)
        return self.env[name]

    def _space(self, st: Statement) -> FiniteTopology:
        a = st.args
        if st.form == "explicit":
            return make_topology(a[0], a[1])
        if st.form == "order":
            return order_topology(self._get(a[1], st.span.line), a[0])
        if st.form == "builtin":
            return sierpinski() if a[0] == "sierpinski" else one_point()
        if st.form == "coreflect":
            return coreflect(self._get(a[0], st.span.line), a[1])
        X, Y = self._get(a[0], st.span.line), self._get(a[1], st.span.line)
        if st.form == "product":
            return product(X, Y)
        if st.form == "tensor":
            return tensor(X, Y, a[2])
        return exponential(X, Y, a[2], self.max_size)

    def _omega(self, st: Statement) -> Handle:
        a = st.args
        if st.form == "builtin":
            return BUNDLED[a[0]]()
        if st.form == "coreflect":
            return coreflect_omega(self._get(a[0], st.span.line), a[1])
        base = omega() if a[1] == "omega" else omega_plus_one()
        return order_topology_omega(base, a[0])

    def _net(self, st: Statement):
        space = self._get(st.args[0], st.span.line)
        items = st.args[1]
        if isinstance(space, FiniteTopology):
            if st.form == "seq":
                raise Unsupported("sequences need an omega space; use tail or directed")
            lookup = {label_text(x): i for i, x in enumerate(space.ground)}
            mask = 0
            for it in items:
                if it not in lookup:
                    raise ResolveError(it, st.span.line)
                mask |= 1 << lookup[it]
            return FiniteNet(st.form, mask)
        residues = []
        for it in items:
            if isinstance(it, Ramp):
                residues.append(it)
            elif isinstance(it, str) and it.endswith("..") and it[:-2].isdigit():
                residues.append(Ramp(1, int(it[:-2])))
            else:
                residues.append(_atom_point(it))
        if st.form == "directed":
            fixed = [r for r in residues if not isinstance(r, Ramp)]
            tails = [r.offset for r in residues if isinstance(r, Ramp)]
            return SchematicSet.of(fixed, min(tails) if tails else None)
        return SchematicNet(tuple(residues))

    # -- queries --------------------------------------------------------------------

    def _point(self, X, atom: str):
        if isinstance(X, FiniteTopology):
            lookup = {label_text(x): i for i, x in enumerate(X.ground)}
            if atom not in lookup:
                raise ResolveError(atom)
            return lookup[atom]
        return _atom_point(atom)

    def query(self, st: Statement):
        """Value and detail of one query."""
        cmd, a, line = st.form, st.args, st.span.line
        if cmd == "suite":
            from ..suite import run_suite
            records = run_suite(self.seed)
            failed = [r["id"] for r in records if r["verdict"] != "pass"]
            return ("pass" if not failed else "fail"), {"criteria": records}
        if cmd == "validate":
            X = self._get(a[0], line)
            if isinstance(X, FiniteTopology):
                return "true", "T0" if is_T0(X) else "not T0"
            return "true", type(X).__name__
        if cmd == "coreflect":
            X = self._get(a[0], line)
            if isinstance(X, FiniteTopology):
                R = coreflect(X, a[1])
                verdict, witness = _finite_compare(R, X)
            else:
                R = coreflect_omega(X, a[1])
                verdict, witness = omega_compare(R, X)
            return verdict, _describe(witness)
        if cmd == "compare":
            A, B = self._get(a[0], line), self._get(a[1], line)
            if isinstance(A, FiniteTopology) and isinstance(B, FiniteTopology):
                verdict, witness = _finite_compare(A, B)
            elif isinstance(A, Handle) and isinstance(B, Handle):
                verdict, witness = omega_compare(A, B)
            else:
                raise Unsupported("cannot compare a finite space with an omega space")
            return verdict, _describe(witness)
        if cmd in ("product", "tensor", "exp"):
            X, Y = self._get(a[0], line), self._get(a[1], line)
            if cmd == "product":
                T = product(X, Y)
            elif cmd == "tensor":
                T = tensor(X, Y, a[2])
            else:
                T = exponential(X, Y, a[2], self.max_size)
            return "true", to_record(T)
        if cmd == "laws":
            X, Y, Z = (self._get(n, line) for n in a[:3])
            which = a[3]
            reports = [check_idempotence(X, which, False),
                       check_consistency(X, Y, which, False),
                       check_coreflection_universal(Y, which, [X, Z], False)]
            if which in ("D", "D'"):
                reports.append(check_exponential_law(X, Y, Z, which, self.max_size, False))
            ok = all(r.passed for r in reports)
            return ("pass" if ok else "fail"), [r.as_dict() for r in reports]
        if cmd == "cspace":
            v = is_c_space(self._get(a[0], line))
            if v:
                return "true", ""
            nb = v.neighbourhood
            nb = nb.describe() if isinstance(nb, SchematicSet) else _describe(nb)
            return "false", f"point {label_text(v.point)}, neighbourhood {nb}"
        if cmd == "sclass":
            X, net = self._get(a[0], line), self._get(a[1], line)
            x = self._point(X, a[2])
            inside = in_s_class(X, net, x)
            conv = fin_converges(X, net, x) if isinstance(X, FiniteTopology) else omega_converges(X, net, x)
            return ("true" if inside else "false"), f"converges: {'true' if conv else 'false'}"
        if cmd == "export":
            obj = self._get(a[0], line)
            text = to_dot(obj, a[0]) if a[1] == "dot" else json.dumps(to_record(obj), ensure_ascii=False,
                                                                     sort_keys=True)
            self.exports.append(text)
            return "true", text
        raise Unsupported(cmd)

    def run(self, doc: SpaceDoc) -> list[QueryResult]:
        results = []
        for st in doc.statements:
            if st.kind != "query":
                try:
                    self.declare(st)
                except ConvSpaceError as exc:
                    results.append(QueryResult(st.span.line, f"{st.kind} {st.name}", "error", None,
                                               f"{type(exc).__name__}: {exc}"))
                    return results
                continue
            text = " ".join([st.form, *st.args])
            try:
                value, detail = self.query(st)
            except ConvSpaceError as exc:
                results.append(QueryResult(st.span.line, text, "error", None, f"{type(exc).__name__}: {exc}"))
                continue
            if st.expect is not None:
                status = "pass" if value == st.expect else "fail"
            else:
                status = "fail" if value == "fail" else "pass"
            results.append(QueryResult(st.span.line, text, status, value, detail))
        return results


def run(doc: SpaceDoc, max_size: int = DEFAULT_MAX_SIZE, seed: int = 0) -> list[QueryResult]:
    return Runner(max_size, seed).run(doc)
