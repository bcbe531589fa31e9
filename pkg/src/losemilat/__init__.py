"""Equations and irreducible algebraic sets over finite linearly ordered semilattices."""

from .core import (
    Equation,
    Point,
    SemilatticeContext,
    Term,
    classify,
    eval_term,
    holds,
    ineq,
    meet,
)
from .parser import parse_constraint, parse_term, render

__version__ = "0.1.0"
