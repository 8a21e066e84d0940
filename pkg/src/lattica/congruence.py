"""Congruence lattices under the lattice, involution and Brouwer signatures."""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from . import kernels
from .errors import InputError, NotSubalgebra, SignatureMismatch, TooLarge
from .involution import InvolutionStructure, lattice_of
from .lattice import FiniteLattice, from_leq, is_isomorphic
from .partition import Partition, join_partitions

DEFAULT_ORACLE_LIMIT = 8


class Signature(Enum):
    LAT = "lat"
    BLAT = "blat"
    ILAT = "ilat"
    BILAT = "bilat"
    BZ = "bz"

    @property
    def uses_involution(self) -> bool:
        return self in (Signature.ILAT, Signature.BILAT, Signature.BZ)

    @property
    def uses_brouwer(self) -> bool:
        return self is Signature.BZ

    @property
    def has_constants(self) -> bool:
        return self in (Signature.BLAT, Signature.BILAT, Signature.BZ)

    @classmethod
    def parse(cls, text) -> "Signature":
        if isinstance(text, Signature):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise InputError(f"unknown signature {text!r}") from None


def unary_maps(S, sig: Signature) -> tuple:
    """The unary operations of ``sig`` on ``S``; raises if one is missing."""
    sig = Signature.parse(sig)
    maps = []
    if sig.uses_involution:
        if not isinstance(S, InvolutionStructure):
            raise SignatureMismatch(f"signature {sig.value} needs an involution")
        maps.append(S.inv)
    if sig.uses_brouwer:
        if S.brouwer is None:
            raise SignatureMismatch("signature bz needs a Brouwer complement")
        maps.append(S.brouwer)
    return tuple(maps)


def _tables(S, sig):
    L = lattice_of(S)
    join, meet = L.flat_tables()
    unary = array("i", [v for f in unary_maps(S, sig) for v in f])
    return L, join, meet, unary


@dataclass(frozen=True)
class CongruenceSet:
    """Congruences of ``structure`` under ``signature``, sorted by
    (number of blocks, blocks).  ``fixed`` lists constants whose classes
    were required to be singletons."""

    structure: object
    signature: Signature
    members: tuple
    fixed: tuple = ()
    _index: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", frozenset(self.members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, p):
        return p in self._index

    def as_set(self) -> frozenset:
        return self._index

    def refinement_matrix(self):
        return [[p <= q for q in self.members] for p in self.members]

    def to_lattice(self) -> FiniteLattice:
        """The refinement order of the members as a FiniteLattice."""
        ms = self.members
        return from_leq(len(ms), lambda i, j: ms[i] <= ms[j])


def _make_set(S, sig, members, fixed=()) -> CongruenceSet:
    ordered = tuple(sorted(set(members), key=Partition.sort_key))
    return CongruenceSet(S, sig, ordered, tuple(fixed))


def principal_congruence(S, sig, a: int, b: int) -> Partition:
    """Least congruence of ``S`` (under ``sig``) identifying ``a`` and ``b``."""
    return congruence_generated(S, sig, [(a, b)])


def congruence_generated(S, sig, pairs) -> Partition:
    L, join, meet, unary = _tables(S, Signature.parse(sig))
    for a, b in pairs:
        if not (0 <= a < L.n and 0 <= b < L.n):
            raise InputError(f"pair {(a, b)} out of range")
    return Partition._trusted(kernels.principal_closure(L.n, join, meet, unary, list(pairs)))


@lru_cache(maxsize=512)
def _all_congruences(S, sig):
    L = lattice_of(S)
    # every congruence is a join of principal congruences of covering pairs
    gens = []
    seen = set()
    for a, b in L.covers():
        g = principal_congruence(S, sig, a, b)
        if g not in seen:
            seen.add(g)
            gens.append(g)
    bottom = Partition.identity(L.n)
    found = {bottom}
    queue = [bottom]
    while queue:
        theta = queue.pop()
        mask = theta.pair_mask
        for g in gens:
            if g.pair_mask & ~mask == 0:
                continue
            j = join_partitions(theta, g)
            if j not in found:
                found.add(j)
                queue.append(j)
    return _make_set(S, sig, found)


def all_congruences(S, sig=Signature.LAT) -> CongruenceSet:
    """Every congruence of ``S`` as the join-closure of principal congruences."""
    sig = Signature.parse(sig)
    unary_maps(S, sig)
    return _all_congruences(S, sig)


def oracle_limit() -> int:
    raw = os.environ.get("LATTICA_ORACLE_MAX")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InputError(f"LATTICA_ORACLE_MAX must be an integer, got {raw!r}") from None
    return DEFAULT_ORACLE_LIMIT


def brute_force_congruences(S, sig=Signature.LAT, limit: int | None = None) -> CongruenceSet:
    """Oracle: test every partition of the universe for compatibility."""
    sig = Signature.parse(sig)
    if limit is None:
        limit = oracle_limit()
    L, join, meet, unary = _tables(S, sig)
    if L.n > limit:
        raise TooLarge(L.n, limit)
    found = kernels.compatible_partitions(L.n, join, meet, unary)
    return _make_set(S, sig, (Partition._trusted(lab) for lab in found))


def is_congruence(S, sig, p: Partition) -> bool:
    L, join, meet, unary = _tables(S, Signature.parse(sig))
    if p.n != L.n:
        return False
    return bool(kernels.is_compatible(p.labels, L.n, join, meet, unary))


def involution_image(p: Partition, inv) -> Partition:
    """θ' = {(x', y') : (x, y) in θ}."""
    labels = [0] * p.n
    for x in range(p.n):
        labels[inv[x]] = p.labels[x]
    return Partition(labels)


def fix_constants(C: CongruenceSet, constants) -> CongruenceSet:
    """Members in which every listed constant forms a singleton class."""
    constants = tuple(constants)
    keep = []
    for p in C.members:
        counts = {}
        for lab in p.labels:
            counts[lab] = counts.get(lab, 0) + 1
        if all(counts[p.labels[c]] == 1 for c in constants):
            keep.append(p)
    return CongruenceSet(C.structure, C.signature, tuple(keep),
                         tuple(sorted(set(C.fixed) | set(constants))))


def subalgebra_witness(S, sig, subset):
    """First operation application leading out of ``subset``, or None."""
    sig = Signature.parse(sig)
    L = lattice_of(S)
    members = sorted(set(subset))
    inside = set(members)
    if not members:
        return ("empty",)
    if sig.has_constants:
        for name, c in (("0", L.bottom), ("1", L.top)):
            if c not in inside:
                return ("constant", name)
    for x in members:
        for y in members:
            if L.join[x][y] not in inside:
                return ("join", x, y)
            if L.meet[x][y] not in inside:
                return ("meet", x, y)
    names = ["'", "~"]
    for name, f in zip(names, unary_maps(S, sig)):
        for x in members:
            if f[x] not in inside:
                return (name, x)
    return None


def restrict_to_subuniverse(p: Partition, subset, S=None, sig=Signature.LAT) -> Partition:
    """θ ∩ S² as a partition of ``sorted(subset)`` (position i is the i-th element).

    When the ambient structure ``S`` is given, ``subset`` must be closed under
    the operations of ``sig``.
    """
    members = sorted(set(subset))
    if S is not None:
        w = subalgebra_witness(S, sig, members)
        if w is not None:
            raise NotSubalgebra(w)
    return Partition(p.labels[x] for x in members)


def is_simple(S, sig=Signature.LAT) -> bool:
    return len(all_congruences(S, sig)) <= 2


def is_0_regular(S) -> bool:
    """Con_0(L) = {Δ}: no nontrivial lattice congruence has a singleton 0-class."""
    L = lattice_of(S)
    fixed = fix_constants(all_congruences(L, Signature.LAT), [L.bottom])
    return len(fixed) == 1 and fixed.members[0].is_identity()


def conlattice_isomorphic(C1: CongruenceSet, C2: CongruenceSet) -> bool:
    if len(C1) != len(C2):
        return False
    return is_isomorphic(C1.to_lattice(), C2.to_lattice()) is not None
