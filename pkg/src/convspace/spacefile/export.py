"""Dot and JSON renderings, and canonical text for parsed documents."""

from __future__ import annotations

import json

from ..errors import Unsupported
from ..omega.sets import Ramp, SchematicSet
from ..omega.space import ConstraintTopology, CriticalTopology, OmegaSpace
from ..order import FinitePoset, bits
from ..topology import FiniteTopology, from_nbhds, make_topology, nbhds_from_family, specialization
from .parser import SpaceDoc, Statement


def label_text(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(label_text(y) for y in x) + ")"
    return str(x)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_edges(P: FinitePoset) -> list[tuple[int, int]]:
    """Covering pairs ``i < j`` with nothing strictly between."""
    edges = []
    for i in range(P.n):
        for j in range(P.n):
            if i == j or not P.leq[i, j] or P.leq[j, i]:
                continue
            between = any(P.leq[i, k] and P.leq[k, j] and not P.leq[k, i] and not P.leq[j, k]
                          for k in range(P.n) if k not in (i, j))
            if not between:
                edges.append((i, j))
    return edges


def to_dot(obj, name: str = "G") -> str:
    if isinstance(obj, FiniteTopology):
        P = specialization(obj)
    elif isinstance(obj, FinitePoset):
        P = obj
    else:
        raise Unsupported(f"no dot rendering for {type(obj).__name__}")
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for x in P.elements:
        lines.append(f"  {_quote(label_text(x))};")
    for i, j in hasse_edges(P):
        lines.append(f"  {_quote(label_text(P.elements[i]))} -> {_quote(label_text(P.elements[j]))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _set_json(S: SchematicSet) -> dict:
    return {"fin": sorted(S.fin), "chain": sorted(S.chain), "tail": S.tail}


def to_record(obj):
    """Plain data (lists, dicts, strings) for JSON output."""
    if isinstance(obj, FiniteTopology):
        opens = sorted(obj.opens(cap=max(obj.n, 12)), key=lambda u: (bin(u).count("1"), list(bits(u))))
        return {"ground": [label_text(x) for x in obj.ground],
                "opens": [[label_text(obj.ground[i]) for i in bits(u)] for u in opens]}
    if isinstance(obj, FinitePoset):
        return {"elements": [label_text(x) for x in obj.elements],
                "leq": [[label_text(a), label_text(b)] for a, b in obj.pairs()]}
    if isinstance(obj, (OmegaSpace, CriticalTopology, ConstraintTopology)):
        order = obj.order
        rec = {"name": obj.name, "fin": list(order.fin_labels), "chain_ordered": order.chain_ordered,
               "fin_order": [[a, b] for a, b in order.fin.pairs()],
               "below": {f: _set_json(order.below[f]) for f in order.fin_labels},
               "above": {f: _set_json(order.above[f]) for f in order.fin_labels}}
        if isinstance(obj, OmegaSpace):
            rec["templates"] = [{**_set_json(t.fixed), "param": t.param} for t in obj.templates]
        elif isinstance(obj, CriticalTopology):
            rec["critical"] = _set_json(obj.critical)
        else:
            rec["constraints"] = [{"trigger": _set_json(c.trigger), "required": _set_json(c.required),
                                   "needs_tail": c.needs_tail} for c in obj.constraints]
        return rec
    raise Unsupported(f"no JSON rendering for {type(obj).__name__}")


def to_json(obj) -> str:
    return json.dumps(to_record(obj), ensure_ascii=False, sort_keys=True)


def topology_from_json(text: str) -> FiniteTopology:
    rec = json.loads(text)
    ground = tuple(rec["ground"])
    index = {x: i for i, x in enumerate(ground)}
    fam = [sum(1 << index[x] for x in u) for u in rec["opens"]]
    return FiniteTopology(ground, nbhds_from_family(len(ground), fam))


# -- canonical text --------------------------------------------------------------

def _set_text(items) -> str:
    return "{" + ", ".join(items) + "}"


def _residue_text(r) -> str:
    if isinstance(r, Ramp):
        return (f"{r.step}n" if r.step != 1 else "n") + (f"+{r.offset}" if r.offset else "")
    return r


def _poset_text(elements, pairs) -> str:
    items = [f"{a} < {b}" for a, b in pairs]
    seen = []
    for a, b in pairs:
        for x in (a, b):
            if x not in seen:
                seen.append(x)
    rest = [x for x in elements if x not in seen]
    if seen + rest != list(elements):
        return _set_text(list(elements) + items)
    return _set_text(items + rest)


def format_statement(st: Statement) -> str:
    a = st.args
    if st.kind == "query":
        text = " ".join(["query", st.form, *a])
        return text + (f" expect {st.expect}" if st.expect else "")
    if st.kind == "poset":
        return f"poset {st.name} = {_poset_text(*a)}"
    if st.kind == "net":
        body = "(" + ", ".join(_residue_text(r) for r in a[1]) + ")" if st.form == "seq" else _set_text(a[1])
        return f"net {st.name} on {a[0]} = {st.form} {body}"
    head = f"{st.kind} {st.name} = "
    if st.form == "explicit":
        return head + _set_text(a[0]) + " opens {" + ", ".join(_set_text(u) for u in a[1]) + "}"
    if st.form == "order":
        return head + f"{a[0]} of {a[1]}"
    if st.form == "builtin":
        return head + a[0]
    return head + " ".join([st.form, *a])


def format_doc(doc: SpaceDoc) -> str:
    return "".join(format_statement(st) + "\n" for st in doc.statements)
