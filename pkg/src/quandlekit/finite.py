"""Finite self-distributive structures on index sets {0, ..., n-1}.

A binary operation is stored as an order-n lookup table where ``table[x][y]``
is x acting on y.  The module classifies tables against the shelf, spindle
and quandle axioms, builds the standard constructions (conjugation on a
group, the inverse operation, the group-plus-acted-set union), and
exhaustively enumerates small structures with optional isomorphism
filtering.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

Row = tuple[int, ...]
Table = tuple[Row, ...]

KINDS = ("shelf", "spindle", "quandle")

# Exhaustive-search guards: quandle rows are permutations fixing their own
# index ((n-1)! each), anything weaker explodes as n**(n*n).
MAX_ORDER = {"shelf": 3, "spindle": 3, "quandle": 5}


def _freeze_table(rows, order: int | None = None) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(table)
    if order is not None and order != n:
        raise ValueError(f"declared order {order} but table has {n} rows")
    if n < 1:
        raise ValueError("table must have at least one row")
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"entry {v} at row {i} outside [0, {n})")
    return table


@dataclass(frozen=True)
class MagmaTable:
    """A finite binary operation: ``table[x][y]`` is x acting on y."""

    order: int
    table: Table

    @classmethod
    def from_rows(cls, rows) -> "MagmaTable":
        table = _freeze_table(rows)
        return cls(order=len(table), table=table)

    def __post_init__(self):
        object.__setattr__(self, "table", _freeze_table(self.table, self.order))

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, obj) -> "MagmaTable":
        if not isinstance(obj, dict) or "table" not in obj:
            raise ValueError("table JSON must be an object with a 'table' key")
        table = _freeze_table(obj["table"], obj.get("order"))
        return cls(order=len(table), table=table)


@dataclass(frozen=True)
class StructureReport:
    """Axiom flags plus the first lexicographic witness per violated axiom.

    Witnesses: self-distributivity -> (x, y, z); idempotency -> (x, x);
    bijectivity -> (x, y) where y is the first column repeating a value
    already seen in row x.
    """

    is_shelf: bool
    is_spindle: bool
    is_quandle: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]

    def to_json(self) -> dict:
        return {
            "is_shelf": self.is_shelf,
            "is_spindle": self.is_spindle,
            "is_quandle": self.is_quandle,
            "violations": [[name, list(w)] for name, w in self.violations],
        }


def _first_distributivity_violation(t: Table, n: int):
    for x in range(n):
        tx = t[x]
        for y in range(n):
            ty = t[y]
            txy = t[tx[y]]
            for z in range(n):
                if tx[ty[z]] != txy[tx[z]]:
                    return (x, y, z)
    return None


def _first_idempotency_violation(t: Table, n: int):
    for x in range(n):
        if t[x][x] != x:
            return (x, x)
    return None


def _first_bijectivity_violation(t: Table, n: int):
    for x in range(n):
        seen = set()
        for y in range(n):
            v = t[x][y]
            if v in seen:
                return (x, y)
            seen.add(v)
    return None


def classify(m: MagmaTable) -> StructureReport:
    """Exhaustively check the shelf, spindle and quandle axioms."""
    t, n = m.table, m.order
    violations = []
    sd = _first_distributivity_violation(t, n)
    if sd is not None:
        violations.append(("self-distributivity", sd))
    idem = _first_idempotency_violation(t, n)
    if idem is not None:
        violations.append(("idempotency", idem))
    bij = _first_bijectivity_violation(t, n)
    if bij is not None:
        violations.append(("bijectivity", bij))
    is_shelf = sd is None
    is_spindle = is_shelf and idem is None
    is_quandle = is_spindle and bij is None
    return StructureReport(is_shelf, is_spindle, is_quandle, tuple(violations))


def inverse_operation(m: MagmaTable) -> MagmaTable:
    """The operation undoing each left translation of a quandle.

    Row x of the result is the inverse of the permutation row x of the
    input, so acting and un-acting by the same element cancel both ways.
    """
    n = m.order
    inv_rows = [[0] * n for _ in range(n)]
    for x in range(n):
        row = m.table[x]
        if len(set(row)) != n:
            raise ValueError(f"row {x} is not a bijection; table is not a quandle")
        for y in range(n):
            inv_rows[x][row[y]] = y
    return MagmaTable.from_rows(inv_rows)


@dataclass(frozen=True)
class GroupTable:
    """A finite group as a Cayley table, fully validated at construction."""

    order: int
    table: Table
    identity: int
    inverse: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows) -> "GroupTable":
        table = _freeze_table(rows)
        n = len(table)
        identity = None
        for e in range(n):
            if all(table[e][y] == y and table[y][e] == y for y in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        inverse = []
        for x in range(n):
            found = None
            for y in range(n):
                if table[x][y] == identity and table[y][x] == identity:
                    found = y
                    break
            if found is None:
                raise ValueError(f"element {x} has no inverse")
            inverse.append(found)
        return cls(order=n, table=table, identity=identity, inverse=tuple(inverse))

    def __post_init__(self):
        t, n = self.table, self.order
        _freeze_table(t, n)
        e = self.identity
        for y in range(n):
            if t[e][y] != y or t[y][e] != y:
                raise ValueError(f"identity law fails at {y}")
        for x in range(n):
            ix = self.inverse[x]
            if t[x][ix] != e or t[ix][x] != e:
                raise ValueError(f"inverse law fails at {x}")
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise ValueError(f"associativity fails at ({a}, {b}, {c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "table": [list(r) for r in self.table],
            "identity": self.identity,
        }

    @classmethod
    def from_json(cls, obj) -> "GroupTable":
        if not isinstance(obj, dict) or "table" not in obj:
            raise ValueError("group JSON must be an object with a 'table' key")
        g = cls.from_rows(_freeze_table(obj["table"], obj.get("order")))
        if "identity" in obj and int(obj["identity"]) != g.identity:
            raise ValueError(
                f"declared identity {obj['identity']} but table identity is {g.identity}"
            )
        return g


def cyclic_group(n: int) -> GroupTable:
    return GroupTable.from_rows([[(i + j) % n for j in range(n)] for i in range(n)])


def dihedral_group(n: int) -> GroupTable:
    """Symmetries of the regular n-gon, order 2n; indices 0..n-1 are the
    rotations r**i, n..2n-1 the reflections s*r**i."""
    if n < 1:
        raise ValueError("dihedral order parameter must be >= 1")

    def mul(a, b):
        ra, ia = divmod(a, n)
        rb, ib = divmod(b, n)
        if ra == 0 and rb == 0:
            return (ia + ib) % n
        if ra == 0:
            return n + (ib - ia) % n
        if rb == 0:
            return n + (ia + ib) % n
        return (ib - ia) % n

    return GroupTable.from_rows([[mul(a, b) for b in range(2 * n)] for a in range(2 * n)])


def symmetric_group(n: int) -> GroupTable:
    """All permutations of n points in lexicographic order, composed so that
    the right factor applies first."""
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    rows = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms]
        for p in perms
    ]
    return GroupTable.from_rows(rows)


def quaternion_group() -> GroupTable:
    """The eight unit quaternions; index = 2*unit + (1 if negative) with
    units ordered 1, i, j, k."""
    unit_mul = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }
    rows = []
    for a in range(8):
        ua, sa = a // 2, -1 if a % 2 else 1
        row = []
        for b in range(8):
            ub, sb = b // 2, -1 if b % 2 else 1
            uc, sc = unit_mul[(ua, ub)]
            row.append(2 * uc + (1 if sa * sb * sc < 0 else 0))
        rows.append(row)
    return GroupTable.from_rows(rows)


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    m = h.order
    size = g.order * m
    rows = [
        [g.table[a // m][b // m] * m + h.table[a % m][b % m] for b in range(size)]
        for a in range(size)
    ]
    return GroupTable.from_rows(rows)


def conjugation_quandle(g: GroupTable) -> MagmaTable:
    """The group itself with x acting on y as x*y*x^-1."""
    n = g.order
    rows = [
        [g.table[g.table[x][y]][g.inverse[x]] for y in range(n)]
        for x in range(n)
    ]
    return MagmaTable.from_rows(rows)


def prenoether_holds(m: MagmaTable) -> tuple[bool, tuple[int, int] | None]:
    """Whether "x fixes y" and "y fixes x" are equivalent for every pair.

    Returns (True, None) or (False, first lexicographic witness pair).
    """
    t, n = m.table, m.order
    for x in range(n):
        for y in range(n):
            if (t[x][y] == y) != (t[y][x] == x):
                return False, (x, y)
    return True, None


@dataclass(frozen=True)
class UnionQuandleSpec:
    """A group together with a validated action on an m-point set.

    ``action[g][p]`` is the image of point p under group element g; the
    identity and compatibility laws are checked exactly at construction.
    """

    group: GroupTable
    set_size: int
    action: Table

    def __post_init__(self):
        # set_size 0 is the degenerate union: just the conjugation quandle.
        if self.set_size < 0:
            raise ValueError("set_size must be >= 0")
        n, m = self.group.order, self.set_size
        act = tuple(tuple(int(v) for v in row) for row in self.action)
        object.__setattr__(self, "action", act)
        if len(act) != n or any(len(row) != m for row in act):
            raise ValueError(f"action must be a {n}x{m} table")
        for row in act:
            for v in row:
                if not 0 <= v < m:
                    raise ValueError(f"action value {v} outside [0, {m})")
        e = self.group.identity
        for p in range(m):
            if act[e][p] != p:
                raise ValueError(f"identity must act trivially; moves point {p}")
        for g in range(n):
            for h in range(n):
                gh = self.group.table[g][h]
                for p in range(m):
                    if act[gh][p] != act[g][act[h][p]]:
                        raise ValueError(f"action law fails at (g={g}, h={h}, p={p})")


def union_quandle(spec: UnionQuandleSpec) -> MagmaTable:
    """Quandle on group-elements-plus-points: group elements act on the group
    by conjugation and on the points by the given action; points act
    trivially.  Indices [0, n) are the group, [n, n+m) the points.
    """
    g = spec.group
    n, m = g.order, spec.set_size
    size = n + m
    conj = conjugation_quandle(g)
    rows = []
    for x in range(size):
        row = []
        for y in range(size):
            if x >= n:
                row.append(y)
            elif y < n:
                row.append(conj.table[x][y])
            else:
                row.append(n + spec.action[x][y - n])
        rows.append(row)
    return MagmaTable.from_rows(rows)


def relabel_table(table: Table, perm: Row) -> Table:
    """Transport the operation along the relabeling old -> perm[old]."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        px = perm[x]
        for y in range(n):
            out[px][perm[y]] = perm[table[x][y]]
    return tuple(tuple(r) for r in out)


def canonical_form(m: MagmaTable) -> Table:
    """Lexicographically least table among all relabelings."""
    return min(relabel_table(m.table, p) for p in permutations(range(m.order)))


def _row_candidates(order: int, kind: str, i: int) -> list[Row]:
    if kind == "quandle":
        return [p for p in permutations(range(order)) if p[i] == i]
    if kind == "spindle":
        rest = product(range(order), repeat=order - 1)
        return [r[:i] + (i,) + r[i:] for r in rest]
    return list(product(range(order), repeat=order))


def _partial_distributive(rows: list[Row], k: int, n: int) -> bool:
    # Triple (x, y, z) is decidable once rows x, y and rows[x][y] exist; each
    # is checked exactly once, at the stage where its last row appears.
    for x in range(k + 1):
        rx = rows[x]
        for y in range(k + 1):
            v = rx[y]
            if v > k or max(x, y, v) != k:
                continue
            ry = rows[y]
            rv = rows[v]
            for z in range(n):
                if rx[ry[z]] != rv[rx[z]]:
                    return False
    return True


def enumerate_tables(order: int, kind: str, up_to_iso: bool = False) -> list[MagmaTable]:
    """All order-n shelves, spindles or quandles, in lexicographic order.

    With ``up_to_iso`` the list holds one representative per isomorphism
    class: the lexicographically least table of the class.  Search is a
    row-by-row backtracker that checks every self-distributivity triple as
    soon as its three participating rows are placed.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if order < 1:
        raise ValueError("order must be >= 1")
    if order > MAX_ORDER[kind]:
        raise ValueError(
            f"enumeration of {kind}s is limited to order <= {MAX_ORDER[kind]}"
        )
    candidates = [_row_candidates(order, kind, i) for i in range(order)]
    found: list[Table] = []
    rows: list[Row] = []

    def descend(k: int) -> None:
        if k == order:
            found.append(tuple(rows))
            return
        for cand in candidates[k]:
            rows.append(cand)
            if _partial_distributive(rows, k, order):
                descend(k + 1)
            rows.pop()

    descend(0)
    if up_to_iso:
        reps = sorted({canonical_form(MagmaTable.from_rows(t)) for t in found})
        return [MagmaTable.from_rows(t) for t in reps]
    return [MagmaTable.from_rows(t) for t in found]
