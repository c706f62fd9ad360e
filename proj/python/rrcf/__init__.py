"""Rogers-Ramanujan continued fraction evaluations at high precision.

Values come back as decimal strings (digits - guard significant digits);
structured results (candidates, certificates, bundles) come back as dicts.
"""

import json

from . import _core
from ._core import ConvergenceError, DomainError, MismatchError, PreconditionError

__all__ = [
    "ConvergenceError",
    "DomainError",
    "MismatchError",
    "PreconditionError",
    "catalog",
    "check_identities",
    "check_order25",
    "eval",
    "recognize",
    "recognize_field",
    "reproduce",
    "run_cli",
    "yi_recognize",
]


def eval(fn, arg, digits=300, guard=50):
    """fn(q) at q = exp(-pi sqrt(arg)); fn is R, R_cf, f, theta2, theta3,
    lambda_star, lambda, kleinJ, G, g or yi_s."""
    return _core.eval(fn, str(arg), digits, guard)


def recognize(value=None, *, fn=None, arg=None, degree=8, digits=300, guard=50):
    """Minimal polynomial of fn(arg), or of a decimal string carrying at least
    digits + guard significant digits (such results stay provisional)."""
    if fn is not None:
        text = _core.recognize_value(fn, str(arg), degree, digits, guard)
    else:
        text = _core.recognize_literal(str(value), degree, digits, guard)
    return json.loads(text)


def recognize_field(value, basis, denom_cap=10000, digits=300, guard=50):
    return json.loads(_core.recognize_field(str(value), list(basis), denom_cap, digits, guard))


def yi_recognize(n, digits=300, guard=50):
    return json.loads(_core.yi_recognize(str(n), digits, guard))


def reproduce(theorem_id, digits=300, guard=50):
    return json.loads(_core.reproduce(theorem_id, digits, guard))


def check_order25(n, digits=300, guard=50):
    return json.loads(_core.check_order25(int(n), digits, guard))


def check_identities(q, digits=200, guard=50):
    return json.loads(_core.check_identities(str(q), digits, guard))


def catalog():
    return json.loads(_core.catalog())


def run_cli(*args):
    """Runs the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
