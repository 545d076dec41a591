"""Surface syntax for family expressions.

Grammar (heads case-insensitive, whitespace insignificant)::

    expr := atom | op
    atom := P(n) | C(n) | K(n) | E(n) | F(n) | D(q,n) | L(n) | G(m,n) | T(n) | O(n)
    op   := corona(expr,expr) | join(expr,expr) | cart(expr,expr)

``F(n)`` is shorthand for ``D(3,n)``. Syntax errors carry a 0-based offset.
"""

from __future__ import annotations

from . import families
from .families import FamilySpec

__all__ = ["ExprSyntaxError", "parse_expr", "pretty"]


class ExprSyntaxError(ValueError):
    """Syntax error with the 0-based offset of the offending character."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_ATOM_ARITY = {
    "p": 1, "c": 1, "k": 1, "e": 1, "f": 1, "l": 1, "t": 1, "o": 1,
    "d": 2, "g": 2,
}
_OPS = ("corona", "join", "cart")


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ExprSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ExprSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])

    def parse_name(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise ExprSyntaxError("expected a family or operator name", start)
        return self.text[start : self.pos].lower(), start

    def parse(self) -> FamilySpec:
        name, start = self.parse_name()
        if name in _OPS:
            self.expect("(")
            left = self.parse()
            self.expect(",")
            right = self.parse()
            self.expect(")")
            op = {"corona": families.Corona, "join": families.Join, "cart": families.Cart}
            return op[name](left, right)
        if name in _ATOM_ARITY:
            self.expect("(")
            first = self.parse_int()
            if _ATOM_ARITY[name] == 2:
                self.expect(",")
                second = self.parse_int()
                self.expect(")")
                return self._atom2(name, first, second)
            self.expect(")")
            return self._atom1(name, first)
        raise ExprSyntaxError(f"unknown name {name!r}", start)

    @staticmethod
    def _atom1(name: str, n: int) -> FamilySpec:
        table = {
            "p": families.Path,
            "c": families.Cycle,
            "k": families.Complete,
            "e": families.Empty,
            "l": families.Ladder,
            "t": families.TriChain,
            "o": families.OrthoChain,
        }
        if name == "f":
            return families.Friendship(3, n)
        return table[name](n)

    @staticmethod
    def _atom2(name: str, a: int, b: int) -> FamilySpec:
        if name == "d":
            return families.Friendship(a, b)
        return families.Grid(a, b)


def parse_expr(text: str) -> FamilySpec:
    """Parse a family expression; see module docstring for the grammar."""
    parser = _Parser(text)
    spec = parser.parse()
    parser.skip_ws()
    if parser.pos != len(text):
        raise ExprSyntaxError("unexpected trailing input", parser.pos)
    return spec


def pretty(spec: FamilySpec) -> str:
    """Canonical text for a spec; ``parse_expr(pretty(s)) == s``."""
    if isinstance(spec, families.Path):
        return f"P({spec.n})"
    if isinstance(spec, families.Cycle):
        return f"C({spec.n})"
    if isinstance(spec, families.Complete):
        return f"K({spec.n})"
    if isinstance(spec, families.Empty):
        return f"E({spec.n})"
    if isinstance(spec, families.Friendship):
        return f"F({spec.n})" if spec.q == 3 else f"D({spec.q},{spec.n})"
    if isinstance(spec, families.Ladder):
        return f"L({spec.n})"
    if isinstance(spec, families.Grid):
        return f"G({spec.m},{spec.n})"
    if isinstance(spec, families.TriChain):
        return f"T({spec.n})"
    if isinstance(spec, families.OrthoChain):
        return f"O({spec.n})"
    if isinstance(spec, families.Corona):
        return f"corona({pretty(spec.left)},{pretty(spec.right)})"
    if isinstance(spec, families.Join):
        return f"join({pretty(spec.left)},{pretty(spec.right)})"
    if isinstance(spec, families.Cart):
        return f"cart({pretty(spec.left)},{pretty(spec.right)})"
    raise TypeError(f"not a family spec: {spec!r}")
