"""Parser for one-token group expressions.

Grammar: atom := "C"<n> | "D"<n> | "S"<n> | "Q8" | "cayley:"<path>;
expr := atom ("x" atom)*, where "x" associates left and denotes the direct
product.  A "cayley:" path extends up to the next "x" that starts another
atom, so paths containing "x" right before an atom-shaped tail cannot be
used inside product expressions.
"""

from functools import reduce

from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    cyclic,
    dihedral,
    direct_product,
    load_cayley_table,
    quaternion8,
    symmetric,
)


class ParseError(ValueError):
    """Malformed group expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


def parse_group_spec(text: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Parse and build the group denoted by a spec like C6, D4xQ8, or cayley:g.tbl."""
    factors = [_build_atom(atom) for atom in _tokenize(text)]
    return reduce(lambda g1, g2: direct_product(g1, g2, cap=cap), factors)


def _tokenize(text: str) -> list[tuple[str, str | int | None, int]]:
    if not text:
        raise ParseError("empty group spec", 0)
    atoms = []
    pos = 0
    while True:
        start = pos
        if text.startswith("cayley:", pos):
            pos += len("cayley:")
            path_start = pos
            while pos < len(text) and not (text[pos] == "x" and _starts_atom(text, pos + 1)):
                pos += 1
            path = text[path_start:pos]
            if not path:
                raise ParseError("missing path after 'cayley:'", path_start)
            atoms.append(("cayley", path, start))
        elif text.startswith("Q8", pos):
            atoms.append(("Q8", None, start))
            pos += 2
        elif pos < len(text) and text[pos] in "CDS":
            letter = text[pos]
            pos += 1
            digits_start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if pos == digits_start:
                raise ParseError(f"expected a number after '{letter}'", digits_start)
            atoms.append((letter, int(text[digits_start:pos]), start))
        else:
            raise ParseError(f"expected a group atom, found {text[pos:pos + 8]!r}", pos)
        if pos == len(text):
            return atoms
        if text[pos] != "x":
            raise ParseError(f"expected 'x' between atoms, found {text[pos]!r}", pos)
        pos += 1
        if pos == len(text):
            raise ParseError("dangling 'x' at end of spec", pos)


def _starts_atom(text: str, pos: int) -> bool:
    if pos >= len(text):
        return False
    return text[pos] in "CDS" or text.startswith("Q8", pos) or text.startswith("cayley:", pos)


def _build_atom(atom: tuple[str, str | int | None, int]) -> FiniteGroup:
    kind, value, _ = atom
    if kind == "C":
        return cyclic(value)
    if kind == "D":
        return dihedral(value)
    if kind == "S":
        return symmetric(value)
    if kind == "Q8":
        return quaternion8()
    return load_cayley_table(value)
