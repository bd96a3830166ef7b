"""Text format for spaces and queries, its evaluator and exporters."""

from .export import format_doc, to_dot, to_json, to_record, topology_from_json
from .parser import SpaceDoc, Statement, parse
from .runner import QueryResult, Runner, run
