"""Finite groups as validated multiplication tables.

Convention: the identity has index 0 and the basis order is fixed by the
input table, which keeps every derived file format deterministic.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from itertools import product

from .algebra import InvalidDataError


class FiniteGroup:
    __slots__ = ("order", "table", "identity", "inverse", "label", "_cache")

    def __init__(self, table, label=""):
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if n == 0:
            raise InvalidDataError("empty multiplication table")
        rng = set(range(n))
        for row in table:
            if len(row) != n or set(row) != rng:
                raise InvalidDataError("table is not a Latin square (row defect)")
        for j in range(n):
            if {table[i][j] for i in range(n)} != rng:
                raise InvalidDataError("table is not a Latin square (column defect)")
        identity = None
        for e in range(n):
            if all(table[e][x] == x and table[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise InvalidDataError("no identity element")
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise InvalidDataError(
                            "multiplication is not associative at (%d, %d, %d)" % (a, b, c))
        inverse = [None] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == identity and table[b][a] == identity:
                    inverse[a] = b
                    break
            if inverse[a] is None:
                raise InvalidDataError("element %d has no inverse" % a)
        self.order = n
        self.table = table
        self.identity = identity
        self.inverse = tuple(inverse)
        self.label = label
        self._cache = {}

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse[a], -k)
        x = self.identity
        for _ in range(k):
            x = self.table[x][a]
        return x

    def element_order(self, a: int) -> int:
        orders = self._cache.get("orders")
        if orders is None:
            orders = [None] * self.order
            for g in range(self.order):
                x = g
                k = 1
                while x != self.identity:
                    x = self.table[x][g]
                    k += 1
                orders[g] = k
            self._cache["orders"] = orders
        return orders[a]

    def exponent(self) -> int:
        exp = 1
        for g in range(self.order):
            exp = math.lcm(exp, self.element_order(g))
        return exp

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    def generating_sequence(self):
        """A small generating list found greedily by closing subgroups."""
        gens = []
        closure = {self.identity}
        while len(closure) < self.order:
            g = next(x for x in range(self.order) if x not in closure)
            gens.append(g)
            closure = self._close(closure | {g})
        return gens

    def _close(self, seed):
        elems = set(seed)
        frontier = list(elems)
        while frontier:
            fresh = []
            for a in frontier:
                for b in list(elems):
                    for c in (self.table[a][b], self.table[b][a]):
                        if c not in elems:
                            elems.add(c)
                            fresh.append(c)
            frontier = fresh
        return elems

    def __repr__(self):
        return "FiniteGroup(%r, order=%d)" % (self.label, self.order)


def group_from_table(table, label="") -> FiniteGroup:
    """Validate a multiplication table and reindex so the identity is 0."""
    g = FiniteGroup(table, label)
    if g.identity == 0:
        return g
    n = g.order
    perm = [g.identity] + [x for x in range(n) if x != g.identity]
    pos = {x: i for i, x in enumerate(perm)}
    table2 = [[pos[g.table[perm[i]][perm[j]]] for j in range(n)] for i in range(n)]
    return FiniteGroup(table2, label)


def _perm_group(perms, label) -> FiniteGroup:
    """Group of permutation tuples, sorted so the identity lands at index 0."""
    perms = sorted(set(perms))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = [[0] * n for _ in range(n)]
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i][j] = index[tuple(p[q[k]] for k in range(len(q)))]
    return group_from_table(table, label)


def _perm_closure(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[k]] for k in range(n))
                if q not in elems:
                    elems.add(q)
                    fresh.append(q)
        frontier = fresh
    return elems


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidDataError("cyclic group order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return group_from_table(table, "Z%d" % n)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 4:
        raise InvalidDataError("symmetric groups supported up to n=4")
    from itertools import permutations

    return _perm_group(permutations(range(n)), "S%d" % n)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon (order 2n)."""
    # the vertex permutation action is only faithful from n = 3 on
    if n < 3:
        raise InvalidDataError("dihedral requires n >= 3")
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return _perm_group(_perm_closure([rot, ref]), "D%d" % n)


def quaternion8() -> FiniteGroup:
    """The eight unit quaternions {±1, ±i, ±j, ±k}."""
    # element = (sign, axis) with axes 0:1, 1:i, 2:j, 3:k
    axis_mult = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
        (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }
    elems = [(s, a) for a in range(4) for s in (1, -1)]
    elems.sort(key=lambda e: (e[1] != 0, e[1], e[0] < 0))
    index = {e: i for i, e in enumerate(elems)}
    table = [[0] * 8 for _ in range(8)]
    for i, (s1, a1) in enumerate(elems):
        for j, (s2, a2) in enumerate(elems):
            s3, a3 = axis_mult[(a1, a2)]
            table[i][j] = index[(s1 * s2 * s3, a3)]
    return group_from_table(table, "Q8")


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    n, m = a.order, b.order
    table = [[0] * (n * m) for _ in range(n * m)]
    for (i1, j1) in product(range(n), range(m)):
        for (i2, j2) in product(range(n), range(m)):
            table[i1 * m + j1][i2 * m + j2] = a.table[i1][i2] * m + b.table[j1][j2]
    label = "%sx%s" % (a.label or "?", b.label or "?")
    return group_from_table(table, label)


def klein4() -> FiniteGroup:
    g = direct_product(cyclic(2), cyclic(2))
    g.label = "K4"
    return g


_NAME_RE = re.compile(r"^([A-Za-z]+)(\d*)$")


@lru_cache(maxsize=None)
def named_group(name: str) -> FiniteGroup:
    """Catalog lookup: Zn/Cn, Sn (n<=4), Dn (order 2n), Q8, K4, and x-products."""
    text = name.strip()
    if "x" in text or "X" in text:
        parts = re.split("[xX]", text)
        groups = [named_group(p) for p in parts]
        out = groups[0]
        for g in groups[1:]:
            out = direct_product(out, g)
        return out
    m = _NAME_RE.match(text)
    if not m:
        raise InvalidDataError("unknown group name %r" % name)
    kind = m.group(1).upper()
    num = int(m.group(2)) if m.group(2) else None
    if kind in ("Z", "C") and num is not None:
        return cyclic(num)
    if kind == "S" and num is not None:
        return symmetric(num)
    if kind == "D" and num is not None:
        return dihedral(num)
    if kind == "Q" and num == 8:
        return quaternion8()
    if (kind == "K" and num == 4) or kind == "KLEIN":
        return klein4()
    if kind == "TRIVIAL" or (kind in ("Z", "C") and num == 1):
        return cyclic(1)
    raise InvalidDataError("unknown group name %r" % name)


CATALOG = ("Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "K4", "S3", "S4", "D4", "Q8")
