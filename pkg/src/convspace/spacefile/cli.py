"""``ccc run FILE``: evaluate a space description and report each query."""

from __future__ import annotations

import argparse
import json
import sys

from ..category import DEFAULT_MAX_SIZE
from ..errors import ParseError, ResolveError
from .export import to_dot, to_record
from .parser import parse
from .runner import Runner


def _format_text(r) -> str:
    value = r.value
    if isinstance(value, (dict, list)):
        value = json.dumps(value, ensure_ascii=False, sort_keys=True)
    head = f"{r.status.upper():5} line {r.line}: {r.query} -> {value}"
    detail = r.detail
    if isinstance(detail, (dict, list)):
        detail = json.dumps(detail, ensure_ascii=False, sort_keys=True)
    return head + (f"  [{detail}]" if detail else "")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ccc", description="Query finite and omega spaces described in a text file.")
    sub = ap.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="evaluate a space file")
    run.add_argument("file", help="space description, or - for standard input")
    run.add_argument("--suite", action="store_true", help="also run the reproduction suite")
    run.add_argument("--export", choices=("dot", "json"), help="print every declared finite space in this format")
    run.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--json", action="store_true", help="machine-readable report")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
    if args.suite:
        text += "\nquery suite\n"
    try:
        doc = parse(text)
    except (ParseError, ResolveError) as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2
    runner = Runner(args.max_size, args.seed)
    results = runner.run(doc)
    if args.json:
        print(json.dumps([r.as_dict() for r in results], ensure_ascii=False, sort_keys=True, indent=1))
    else:
        for r in results:
            print(_format_text(r))
    if args.export:
        for st in doc.statements:
            if st.kind in ("space", "poset") and st.name in runner.env:
                obj = runner.env[st.name]
                if args.export == "dot":
                    print(to_dot(obj, st.name), end="")
                else:
                    print(json.dumps({st.name: to_record(obj)}, ensure_ascii=False, sort_keys=True))
    return 0 if all(r.status == "pass" for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
