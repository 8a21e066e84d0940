"""Finite bounded lattices as explicit order relations.

Elements are the integers ``0..n-1``.  The order is stored as packed bit
rows: ``up[x]`` has bit ``y`` set iff ``x <= y`` and ``down[x]`` has bit
``y`` set iff ``y <= x``.  Join and meet tables are computed once when the
lattice is validated; everything downstream is table lookups.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CyclicOrder, InputError, NotALattice, Unbounded


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """An immutable finite lattice.

    Build one with :func:`from_cover_relation` or :func:`from_leq`; the
    constructor expects already-closed up-sets and validates them.
    """

    __slots__ = ("n", "up", "down", "join", "meet", "bottom", "top", "labels",
                 "_flat", "_covers")

    def __init__(self, up: Sequence[int], labels: Sequence[str] | None = None):
        n = len(up)
        if n < 1:
            raise InputError("a lattice needs at least one element")
        up = tuple(up)
        down = [0] * n
        for x in range(n):
            if not (up[x] >> x) & 1:
                raise InputError(f"order is not reflexive at {x}")
            for y in bits(up[x]):
                if y >= n:
                    raise InputError(f"element {y} out of range")
                down[y] |= 1 << x
        for x in range(n):
            for y in bits(up[x]):
                if y != x and (up[y] >> x) & 1:
                    raise InputError(f"order is not antisymmetric at {(x, y)}")
                if up[y] & ~up[x]:
                    raise InputError(f"order is not transitive at {(x, y)}")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise InputError("labels must name every element")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", tuple(down))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_flat", None)
        object.__setattr__(self, "_covers", None)

        full = (1 << n) - 1
        bottoms = [x for x in range(n) if up[x] == full]
        tops = [x for x in range(n) if down[x] == full]
        if len(bottoms) != 1:
            minimal = [x for x in range(n) if down[x] == 1 << x]
            raise Unbounded("bottom", minimal)
        if len(tops) != 1:
            maximal = [x for x in range(n) if up[x] == 1 << x]
            raise Unbounded("top", maximal)
        object.__setattr__(self, "bottom", bottoms[0])
        object.__setattr__(self, "top", tops[0])

        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for x in range(n):
            join[x][x] = meet[x][x] = x
            for y in range(x + 1, n):
                join[x][y] = join[y][x] = _extremum(x, y, up[x] & up[y], down, "upper")
                meet[x][y] = meet[y][x] = _extremum(x, y, down[x] & down[y], up, "lower")
        object.__setattr__(self, "join", tuple(tuple(r) for r in join))
        object.__setattr__(self, "meet", tuple(tuple(r) for r in meet))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteLattice is immutable")

    def leq(self, x: int, y: int) -> bool:
        return bool((self.up[x] >> y) & 1)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.up == other.up

    def __hash__(self) -> int:
        return hash(self.up)

    def __repr__(self) -> str:
        return f"FiniteLattice(n={self.n}, covers={self.covers()})"

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def covers(self) -> tuple[tuple[int, int], ...]:
        """The cover (Hasse) relation, sorted lexicographically."""
        if self._covers is None:
            out = []
            for x in range(self.n):
                above = self.up[x] & ~(1 << x)
                for y in bits(above):
                    # y covers x iff nothing strictly between them
                    if (self.down[y] & above) == 1 << y:
                        out.append((x, y))
            object.__setattr__(self, "_covers", tuple(out))
        return self._covers

    def flat_tables(self) -> tuple[array, array]:
        """Join and meet as flat ``array('i')`` buffers for the kernels."""
        if self._flat is None:
            join = array("i", [v for row in self.join for v in row])
            meet = array("i", [v for row in self.meet for v in row])
            object.__setattr__(self, "_flat", (join, meet))
        return self._flat

    def upset(self, x: int) -> frozenset[int]:
        return frozenset(bits(self.up[x]))

    def downset(self, x: int) -> frozenset[int]:
        return frozenset(bits(self.down[x]))

    def is_chain(self) -> bool:
        return all(self.up[x] | self.down[x] == (1 << self.n) - 1 for x in range(self.n))


def _extremum(x, y, bounds, other_side, kind):
    # the unique element of `bounds` with nothing else of `bounds` on its far side
    found = [u for u in bits(bounds) if other_side[u] & bounds == 1 << u]
    if len(found) != 1:
        raise NotALattice((x, y), found, kind)
    return found[0]


def from_cover_relation(n: int, covers, labels=None) -> FiniteLattice:
    """Lattice whose order is the reflexive-transitive closure of ``covers``.

    >>> from_cover_relation(3, [(0, 1), (1, 2)]).join[0][2]
    2
    """
    if n < 1:
        raise InputError("a lattice needs at least one element")
    succ = [set() for _ in range(n)]
    indeg = [0] * n
    for pair in covers:
        x, y = pair
        if not (0 <= x < n and 0 <= y < n):
            raise InputError(f"cover {(x, y)} out of range for n={n}")
        if x == y:
            raise CyclicOrder(x)
        if y not in succ[x]:
            succ[x].add(y)
            indeg[y] += 1
    queue = [x for x in range(n) if indeg[x] == 0]
    topo = []
    while queue:
        x = queue.pop()
        topo.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    if len(topo) != n:
        raise CyclicOrder(min(x for x in range(n) if indeg[x] > 0))
    up = [0] * n
    for x in reversed(topo):
        mask = 1 << x
        for y in succ[x]:
            mask |= up[y]
        up[x] = mask
    return FiniteLattice(up, labels)


def from_leq(n: int, leq, labels=None) -> FiniteLattice:
    """Lattice from an order predicate ``leq(x, y)`` or an n-by-n matrix."""
    pred = leq if callable(leq) else (lambda x, y: bool(leq[x][y]))
    up = []
    for x in range(n):
        mask = 0
        for y in range(n):
            if pred(x, y):
                mask |= 1 << y
        up.append(mask)
    return FiniteLattice(up, labels)


def relabel(L: FiniteLattice, perm: Sequence[int]) -> FiniteLattice:
    """Copy of ``L`` in which element ``x`` becomes ``perm[x]``."""
    n = L.n
    if sorted(perm) != list(range(n)):
        raise InputError("relabelling must be a permutation")
    up = [0] * n
    for x in range(n):
        mask = 0
        for y in bits(L.up[x]):
            mask |= 1 << perm[y]
        up[perm[x]] = mask
    labels = None
    if L.labels:
        new = [""] * n
        for x in range(n):
            new[perm[x]] = L.labels[x]
        labels = new
    return FiniteLattice(up, labels)


def dual(L: FiniteLattice) -> FiniteLattice:
    """The order dual on the same element universe."""
    return FiniteLattice(L.down, L.labels)


@dataclass(frozen=True)
class SubsetFamily:
    """A family of element subsets of ``ground`` (filters or ideals)."""

    ground: FiniteLattice
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members, key=lambda s: (len(s), sorted(s))))

    def __contains__(self, item):
        return frozenset(item) in self.members


def _closed_family(L: FiniteLattice, side, op, exhaustive: bool) -> SubsetFamily:
    if not exhaustive:
        return SubsetFamily(L, frozenset(frozenset(bits(side[x])) for x in range(L.n)))
    if L.n > 20:
        raise InputError("exhaustive subset search is capped at 20 elements")
    found = set()
    for mask in range(1, 1 << L.n):
        members = list(bits(mask))
        if any(side[x] & ~mask for x in members):
            continue
        if all((mask >> op[x][y]) & 1 for x in members for y in members if x < y):
            found.add(frozenset(members))
    return SubsetFamily(L, frozenset(found))


def filters(L: FiniteLattice, exhaustive: bool = False) -> SubsetFamily:
    """Filters of ``L``.

    In a finite lattice every filter is the principal filter of its meet,
    so by default the n principal filters are returned directly.  With
    ``exhaustive=True`` every nonempty subset is tested for being up-closed
    and meet-closed instead.
    """
    return _closed_family(L, L.up, L.meet, exhaustive)


def ideals(L: FiniteLattice, exhaustive: bool = False) -> SubsetFamily:
    return _closed_family(L, L.down, L.join, exhaustive)


def distributivity_witness(L: FiniteLattice):
    """First triple (x, y, z) with x∧(y∨z) != (x∧y)∨(x∧z), or None."""
    j, m = L.join, L.meet
    for x in range(L.n):
        for y in range(L.n):
            for z in range(L.n):
                if m[x][j[y][z]] != j[m[x][y]][m[x][z]]:
                    return (x, y, z)
    return None


def modularity_witness(L: FiniteLattice):
    """First triple (x, y, z) with x <= z and x∨(y∧z) != (x∨y)∧z, or None."""
    j, m = L.join, L.meet
    for x in range(L.n):
        for z in bits(L.up[x]):
            for y in range(L.n):
                if j[x][m[y][z]] != m[j[x][y]][z]:
                    return (x, y, z)
    return None


def is_distributive(L: FiniteLattice) -> bool:
    return distributivity_witness(L) is None


def is_modular(L: FiniteLattice) -> bool:
    return modularity_witness(L) is None


def _invariants(L: FiniteLattice):
    covers = L.covers()
    upper = [0] * L.n
    lower = [0] * L.n
    for x, y in covers:
        upper[x] += 1
        lower[y] += 1
    return [
        (bin(L.up[x]).count("1"), bin(L.down[x]).count("1"), upper[x], lower[x])
        for x in range(L.n)
    ]


def isomorphisms(L1: FiniteLattice, L2: FiniteLattice, unary=()):
    """Yield every order isomorphism L1 -> L2 in lexicographic order.

    ``unary`` is a sequence of ``(f1, f2)`` self-maps that must also be
    preserved: ``phi(f1[x]) == f2[phi(x)]``.  An order isomorphism between
    lattices preserves joins and meets, so no table check is needed.
    """
    n = L1.n
    if n != L2.n:
        return
    inv1 = _invariants(L1)
    inv2 = _invariants(L2)
    if sorted(inv1) != sorted(inv2):
        return
    cands = [[c for c in range(n) if inv2[c] == inv1[x]] for x in range(n)]
    up1, up2 = L1.up, L2.up
    phi = [-1] * n

    def consistent(x, c):
        for y in range(x):
            fy = phi[y]
            if ((up1[x] >> y) & 1) != ((up2[c] >> fy) & 1):
                return False
            if ((up1[y] >> x) & 1) != ((up2[fy] >> c) & 1):
                return False
        for f1, f2 in unary:
            t = f1[x]
            if t < x and phi[t] != f2[c]:
                return False
            if t == x and f2[c] != c:
                return False
            for y in range(x):
                if f1[y] == x and f2[phi[y]] != c:
                    return False
        return True

    def extend(x, used):
        if x == n:
            yield tuple(phi)
            return
        for c in cands[x]:
            if (used >> c) & 1 or not consistent(x, c):
                continue
            phi[x] = c
            yield from extend(x + 1, used | (1 << c))
        phi[x] = -1

    yield from extend(0, 0)


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice, unary=()):
    """Lexicographically least isomorphism as a tuple, or ``None``."""
    return next(isomorphisms(L1, L2, unary), None)
