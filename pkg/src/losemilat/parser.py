"""Text syntax for terms and constraints.

Grammar (whitespace is allowed between tokens)::

    variable   := "x" digits            (no leading zero, value >= 1)
    term       := variable { ["*"] variable }
    constraint := term ("=" | "<=") term

Digits are read greedily, so ``x12`` is the variable x12 and never x1*x2.
``t <= s`` is shorthand for ``t*s = t``.  Rendering always separates
variables with ``*``.
"""

from __future__ import annotations

import re

from .core import Equation, Term
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<var>x\d+)|(?P<star>\*)|(?P<rel><=|=)|(?P<bad>\S))")


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if kind == "bad":
            if value == "x":
                raise ParseError("variable 'x' needs an index", text, start)
            raise ParseError(f"unexpected character {value!r}", text, start)
        if kind == "var":
            digits = value[1:]
            if digits.startswith("0"):
                msg = "variable index 0" if int(digits) == 0 else "leading zero in variable index"
                raise ParseError(msg, text, start)
        out.append((kind, value, start))
        pos = m.end()
    return out


def _term(tokens, text, start, end):
    vars = []
    expect_var = True
    for kind, value, pos in tokens:
        if kind == "var":
            vars.append(int(value[1:]))
            expect_var = False
        elif kind == "star":
            if expect_var:
                raise ParseError("'*' must follow a variable", text, pos)
            expect_var = True
        else:  # pragma: no cover - relators are split off by the caller
            raise ParseError(f"unexpected {value!r}", text, pos)
    if not vars:
        raise ParseError("empty term", text, start)
    if expect_var:
        raise ParseError("term ends with '*'", text, end)
    return Term(vars)


def parse_term(text: str) -> Term:
    toks = _tokens(text)
    for kind, value, pos in toks:
        if kind == "rel":
            raise ParseError(f"relator {value!r} inside a term", text, pos)
    return _term(toks, text, 0, len(text))


def parse_constraint(text: str) -> Equation:
    """Parse ``t = s`` or ``t <= s`` into an equation.

    >>> render(parse_constraint("x1 <= x2"))
    'x1*x2 = x1'
    """
    toks = _tokens(text)
    rels = [i for i, tok in enumerate(toks) if tok[0] == "rel"]
    if not rels:
        raise ParseError("missing '=' or '<='", text, len(text))
    if len(rels) > 1:
        raise ParseError("only one relator per constraint", text, toks[rels[1]][2])
    i = rels[0]
    _, rel, rpos = toks[i]
    lhs = _term(toks[:i], text, 0, rpos)
    rhs = _term(toks[i + 1 :], text, rpos + len(rel), len(text))
    if rel == "<=":
        return Equation(lhs * rhs, lhs)
    return Equation(lhs, rhs)


def render_term(t: Term) -> str:
    return "*".join(f"x{v}" for v in t.key())


def render(obj) -> str:
    if isinstance(obj, Term):
        return render_term(obj)
    if isinstance(obj, Equation):
        return f"{render_term(obj.lhs)} = {render_term(obj.rhs)}"
    raise TypeError(f"cannot render {type(obj).__name__}")
