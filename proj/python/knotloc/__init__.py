"""Exact tools for Laurent polynomials, Seifert matrices, Alexander modules and
doubling operators.

Polynomials are strings such as ``"2t^2-5t+2"``; index sequences are
``"p:2t^2-5t+2;p:6t^2-13t+6"``. Knots and operators may be given by builtin
name or as JSON-style dicts; structured results come back as dicts.
"""

import json

from . import _knotloc
from ._knotloc import DomainError, InputError, KnotlocError, ParseError

__all__ = [
    "DomainError",
    "InputError",
    "KnotlocError",
    "ParseError",
    "Session",
    "factor",
    "gcd",
    "normalize",
    "parse_poly",
    "resultant",
    "standard_member",
    "strongly_coprime",
    "tuple_strongly_coprime",
]

parse_poly = _knotloc.parse_poly
normalize = _knotloc.normalize
gcd = _knotloc.gcd
resultant = _knotloc.resultant
standard_member = _knotloc.standard_member


def _ref(x):
    return x if isinstance(x, str) else json.dumps(x)


def factor(p):
    return json.loads(_knotloc.factor(p))


def strongly_coprime(p, q, bound=12):
    return json.loads(_knotloc.strongly_coprime(p, q, bound))


def tuple_strongly_coprime(P, Q, bound=12):
    return json.loads(_knotloc.tuple_strongly_coprime(P, Q, bound))


class Session:
    """Named knots and operators plus the search bound and output precision."""

    def __init__(self, bound=12, precision=30):
        self._s = _knotloc.Session(bound, precision)

    @property
    def bound(self):
        return self._s.bound

    @property
    def precision(self):
        return self._s.precision

    def load(self, doc):
        self._s.load(_ref(doc))

    def workspace(self):
        return json.loads(self._s.workspace())

    def add_knot(self, knot):
        return json.loads(self._s.add_knot(_ref(knot)))

    def add_operator(self, op):
        return json.loads(self._s.add_operator(_ref(op)))

    def knot(self, knot):
        return json.loads(self._s.knot(_ref(knot)))

    def alexander(self, knot):
        return self._s.alexander(_ref(knot))

    def signature_profile(self, knot, digits=12):
        return json.loads(self._s.signature_profile(_ref(knot), digits))

    def rho0(self, knot):
        return json.loads(self._s.rho0(_ref(knot)))

    def arf(self, knot):
        return self._s.arf(_ref(knot))

    def connected_sum(self, a, b, name=""):
        return json.loads(self._s.connected_sum(_ref(a), _ref(b), name))

    def mirror(self, knot, name=""):
        return json.loads(self._s.mirror(_ref(knot), name))

    def submodules(self, order):
        return json.loads(self._s.submodules(order))

    def localize(self, order, p, mode="strong"):
        return json.loads(self._s.localize(order, p, mode))

    def standard_operator(self, k, infection="trefoil"):
        return json.loads(self._s.standard_operator(k, _ref(infection)))

    def operator(self, op):
        return json.loads(self._s.operator(_ref(op)))

    def is_robust(self, op):
        return json.loads(self._s.is_robust(_ref(op)))

    def compose(self, ops, base):
        """Operators outermost first; returns an expression bundle."""
        return json.loads(self._s.compose([_ref(o) for o in ops], _ref(base)))

    def order_sequences(self, expr):
        return self._s.order_sequences(_ref(expr))

    def vanishing(self, expr, target):
        return json.loads(self._s.vanishing(_ref(expr), target))

    def survival(self, expr, target, assume=""):
        return json.loads(self._s.survival(_ref(expr), target, assume))

    def family(self, doc, assume=None):
        return json.loads(self._s.family(_ref(doc), assume))

    def injectivity(self, a, b):
        return json.loads(self._s.injectivity(_ref(a), _ref(b)))

    def tree(self, ops, depth):
        return json.loads(self._s.tree([_ref(o) for o in ops], depth))
