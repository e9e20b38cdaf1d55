"""Definite-clause backward chaining with explainable proof trees.

The compiled core does the work; this wrapper turns its JSON payloads into
plain dicts so callers never touch serialized strings.
"""
import json as _json

from ._proslm import (
    Engine as _Engine,
    LexError,
    ParseError,
    canonicalize_program,
    parse_goals,
    solve_text as _solve_text,
)

__all__ = [
    "Engine",
    "LexError",
    "ParseError",
    "canonicalize_program",
    "parse_goals",
    "solve",
]


def solve(kb_text, goal, depth_limit=256, max_steps=100000, first_solution_only=True):
    """Solve ``goal`` against a program given as text.

    Returns a dict with ``truth``, ``answer`` (variable name to canonical
    term text), ``steps``, ``tree`` and ``rendered_tree``. On a resource
    cutoff ``resource_error`` is ``"depth"`` or ``"steps"`` and the tree is
    the partial proof.
    """
    return _json.loads(_solve_text(kb_text, goal, depth_limit, max_steps, first_solution_only))


class Engine(_Engine):
    """Full pipeline over a config file: KB, prompts, percepts, LLM client."""

    def ask(self, question):
        return _json.loads(self.ask_json(question))

    def validate(self, statement):
        return _json.loads(self.validate_json(statement))

    def query(self, goal):
        return _json.loads(self.query_json(goal))
