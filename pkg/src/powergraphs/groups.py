"""Finite groups as dense Cayley tables on element indices 0..n-1."""

import itertools
from pathlib import Path

DEFAULT_ORDER_CAP = 10000


class CayleyTableError(ValueError):
    """A multiplication table violates one of the group axioms."""


class NotClosed(CayleyTableError):
    pass


class NotLatinSquare(CayleyTableError):
    pass


class NoIdentity(CayleyTableError):
    pass


class NotAssociative(CayleyTableError):
    pass


class InvalidOrder(ValueError):
    pass


class OrderOverflow(ValueError):
    pass


class FiniteGroup:
    """Finite group with elements 0..n-1 and a full multiplication table.

    The identity is auto-detected from the table and element orders are
    computed eagerly at construction.  Instances are never mutated after
    construction and are safe to share.  The constructor trusts its input;
    use group_from_cayley_table to validate an untrusted table.
    """

    def __init__(self, table: list[list[int]], name: str = "G",
                 element_names: list[str] | None = None):
        self.order = len(table)
        if self.order == 0:
            raise InvalidOrder("a group has at least one element")
        self.table = [list(row) for row in table]
        self.name = name
        if element_names is None:
            element_names = [str(i) for i in range(self.order)]
        if len(element_names) != self.order:
            raise ValueError(f"got {len(element_names)} element names for order {self.order}")
        self.element_names = list(element_names)
        self.identity = self._find_identity()
        self.element_orders = self._compute_orders()

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e][i] == i for i in range(n)) and \
               all(self.table[i][e] == i for i in range(n)):
                return e
        raise NoIdentity(f"no identity element in table of order {n}")

    def _compute_orders(self) -> list[int]:
        # x walks a, a*a, ...; in any Latin square with identity this
        # sequence returns to the identity, so the loop terminates even
        # before associativity has been checked.
        orders = []
        for a in range(self.order):
            x = a
            k = 1
            while x != self.identity:
                x = self.table[x][a]
                k += 1
            orders.append(k)
        return orders

    def _check_element(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise IndexError(f"element {a} out of range for group of order {self.order}")

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        self._check_element(a)
        self._check_element(b)
        return self.table[a][b]

    def element_order(self, a: int) -> int:
        """Least k >= 1 with a^k equal to the identity."""
        self._check_element(a)
        return self.element_orders[a]

    def power(self, a: int, k: int) -> int:
        """a^k for k >= 0, with a^0 the identity; k is reduced mod o(a)."""
        self._check_element(a)
        if k < 0:
            raise ValueError(f"exponent must be nonnegative, got {k}")
        k %= self.element_orders[a]
        x = self.identity
        for _ in range(k):
            x = self.table[x][a]
        return x

    def smallest_exponent(self, a: int, b: int) -> int | None:
        """Least t >= 1 with a^t = b, or None when b is not a power of a."""
        self._check_element(a)
        self._check_element(b)
        x = a
        for t in range(1, self.element_orders[a] + 1):
            if x == b:
                return t
            x = self.table[x][a]
        return None

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))

    def element_name(self, a: int) -> str:
        self._check_element(a)
        return self.element_names[a]


def group_from_cayley_table(table, name: str = "G",
                            element_names: list[str] | None = None) -> FiniteGroup:
    """Validate an untrusted multiplication table and build the group.

    Checks run in the order closure, Latin square, identity, associativity;
    error messages name the first violating cell.
    """
    rows = [list(row) for row in table]
    n = len(rows)
    if n == 0:
        raise InvalidOrder("table is empty")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"table is not square: row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise NotClosed(f"entry {v!r} at row {i}, column {j} is not an index in 0..{n - 1}")
    for i in range(n):
        seen: dict[int, int] = {}
        for j, v in enumerate(rows[i]):
            if v in seen:
                raise NotLatinSquare(f"row {i} repeats entry {v} at columns {seen[v]} and {j}")
            seen[v] = j
    for j in range(n):
        seen = {}
        for i in range(n):
            v = rows[i][j]
            if v in seen:
                raise NotLatinSquare(f"column {j} repeats entry {v} at rows {seen[v]} and {i}")
            seen[v] = i
    group = FiniteGroup(rows, name=name, element_names=element_names)
    for i in range(n):
        ti = rows[i]
        for j in range(n):
            tij = ti[j]
            tj = rows[j]
            for k in range(n):
                if rows[tij][k] != ti[tj[k]]:
                    raise NotAssociative(
                        f"({i}*{j})*{k} = {rows[tij][k]} but {i}*({j}*{k}) = {ti[tj[k]]}")
    return group


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group C_n under addition mod n."""
    if n < 1:
        raise InvalidOrder(f"cyclic group order must be >= 1, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, name=f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n.

    Indices 0..n-1 are the rotations r^i, indices n..2n-1 the reflections
    r^i*s, with s*r = r^-1*s.
    """
    if n < 1:
        raise InvalidOrder(f"dihedral parameter must be >= 1, got {n}")
    size = 2 * n
    table = [[0] * size for _ in range(size)]
    for a in range(n):
        for b in range(n):
            table[a][b] = (a + b) % n
            table[a][n + b] = n + (a + b) % n
            table[n + a][b] = n + (a - b) % n
            table[n + a][n + b] = (a - b) % n
    names = [f"r{i}" for i in range(n)] + [f"s{i}" for i in range(n)]
    return FiniteGroup(table, name=f"D{n}", element_names=names)


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters, n in [1, 5].

    Elements are the permutations of 0..n-1 in lexicographic order of their
    image tuples; the product p*q maps x to p[q[x]].
    """
    if not 1 <= n <= 5:
        raise InvalidOrder(f"symmetric group parameter must be in [1, 5], got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    names = ["".join(str(x) for x in p) for p in perms]
    return FiniteGroup(table, name=f"S{n}", element_names=names)


def quaternion8() -> FiniteGroup:
    """Quaternion group {1, -1, i, -i, j, -j, k, -k} of order 8."""
    # Element 2*axis + (0 if positive else 1), axes 1, i, j, k.
    def mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        sa, ta = a
        sb, tb = b
        if ta == 0:
            return (sa * sb, tb)
        if tb == 0:
            return (sa * sb, ta)
        if ta == tb:
            return (-sa * sb, 0)
        # i*j = k and cyclically; swapping the factors flips the sign.
        axis = 6 - ta - tb
        sign = 1 if (ta, tb) in ((1, 2), (2, 3), (3, 1)) else -1
        return (sign * sa * sb, axis)

    elements = [(s, t) for t in range(4) for s in (1, -1)]
    index = {e: x for x, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return FiniteGroup(table, name="Q8", element_names=names)


def pair_index(i: int, j: int, n2: int) -> int:
    """Encoding of the pair (i, j) as a single index, fixed as i*n2 + j."""
    return i * n2 + j


def pair_of_index(x: int, n2: int) -> tuple[int, int]:
    """Inverse of pair_index."""
    return divmod(x, n2)


def direct_product(g1: FiniteGroup, g2: FiniteGroup,
                   cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Direct product with componentwise multiplication.

    The pair (i, j) becomes index i*g2.order + j; power graphs and graph
    products built on the factors use the same encoding, so results can be
    compared by labeled equality.
    """
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    if n > cap:
        raise OrderOverflow(f"product order {n} exceeds cap {cap}")
    table = [[0] * n for _ in range(n)]
    for i1 in range(n1):
        for i2 in range(n2):
            row = table[pair_index(i1, i2, n2)]
            t1 = g1.table[i1]
            t2 = g2.table[i2]
            for j1 in range(n1):
                for j2 in range(n2):
                    row[pair_index(j1, j2, n2)] = pair_index(t1[j1], t2[j2], n2)
    names = [f"({a},{b})" for a in g1.element_names for b in g2.element_names]
    return FiniteGroup(table, name=f"{g1.name}x{g2.name}", element_names=names)


def load_cayley_table(path: str | Path, name: str | None = None) -> FiniteGroup:
    """Load and validate a group from a text Cayley table.

    Format: first line is n, then n lines of n whitespace-separated 0-based
    indices with row i column j holding i*j.  Lines starting with '#' are
    ignored.
    """
    path = Path(path)
    lines = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    if not lines:
        raise ValueError(f"{path}: no data lines")
    header_line, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise ValueError(f"{path}:{header_line}: expected group order, got {header!r}") from None
    if n < 1:
        raise InvalidOrder(f"{path}:{header_line}: order must be >= 1, got {n}")
    if len(lines) - 1 != n:
        raise ValueError(f"{path}: expected {n} table rows, got {len(lines) - 1}")
    rows = []
    for lineno, text in lines[1:]:
        tokens = text.split()
        if len(tokens) != n:
            raise ValueError(f"{path}:{lineno}: expected {n} entries, got {len(tokens)}")
        try:
            rows.append([int(tok) for tok in tokens])
        except ValueError:
            bad = next(tok for tok in tokens if not _is_int(tok))
            raise ValueError(f"{path}:{lineno}: invalid entry {bad!r}") from None
    return group_from_cayley_table(rows, name=name if name is not None else path.stem)


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True
