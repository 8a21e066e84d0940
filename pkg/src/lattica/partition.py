"""Equivalences on ``0..n-1`` in canonical block form."""

from __future__ import annotations

from typing import Iterable

from . import kernels
from .errors import InputError


def canonical_labels(labels) -> tuple:
    """Renumber block labels in order of first appearance."""
    seen = {}
    return tuple(seen.setdefault(lab, len(seen)) for lab in labels)


class Partition:
    """An equivalence stored as a restricted growth string.

    ``labels[x]`` is the index of the block of ``x``; blocks are numbered by
    their least element, so equal equivalences have equal labels.  ``p <= q``
    means ``p`` refines ``q``.
    """

    __slots__ = ("labels", "_hash", "_mask")

    def __init__(self, labels: Iterable[int]):
        self.labels = canonical_labels(labels)
        self._hash = hash(self.labels)
        self._mask = None

    @classmethod
    def _trusted(cls, labels: tuple) -> "Partition":
        p = cls.__new__(cls)
        p.labels = labels
        p._hash = hash(labels)
        p._mask = None
        return p

    @classmethod
    def from_blocks(cls, blocks, n: int | None = None) -> "Partition":
        blocks = [list(b) for b in blocks if len(b)]
        if n is None:
            n = sum(len(b) for b in blocks)
        labels = [-1] * n
        for i, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < n or labels[x] != -1:
                    raise InputError(f"blocks do not partition range({n})")
                labels[x] = i
        if -1 in labels:
            raise InputError(f"blocks do not cover range({n})")
        return cls(labels)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls._trusted(tuple(range(n)))

    @classmethod
    def total(cls, n: int) -> "Partition":
        return cls._trusted((0,) * n)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of ``str``: ``"0 1|2"`` is the blocks {0, 1} and {2}."""
        blocks = [[int(tok) for tok in part.split()] for part in text.split("|")]
        return cls.from_blocks(blocks)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_blocks(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    @property
    def blocks(self) -> tuple:
        out = [[] for _ in range(self.num_blocks)]
        for x, lab in enumerate(self.labels):
            out[lab].append(x)
        return tuple(tuple(b) for b in out)

    def block_of(self, x: int) -> tuple:
        lab = self.labels[x]
        return tuple(y for y, m in enumerate(self.labels) if m == lab)

    def related(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    @property
    def pair_mask(self) -> int:
        """Bit ``x * n + y`` set for every related pair; refinement is a mask test."""
        if self._mask is None:
            n = self.n
            mask = 0
            for block in self.blocks:
                for x in block:
                    for y in block:
                        mask |= 1 << (x * n + y)
            self._mask = mask
        return self._mask

    def is_identity(self) -> bool:
        return self.num_blocks == self.n

    def is_total(self) -> bool:
        return self.num_blocks <= 1

    def sort_key(self):
        return (self.num_blocks, self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self) -> int:
        return self._hash

    def __le__(self, other: "Partition") -> bool:
        return self.pair_mask & ~other.pair_mask == 0

    def __ge__(self, other: "Partition") -> bool:
        return other <= self

    def __lt__(self, other: "Partition") -> bool:
        return self != other and self <= other

    def __gt__(self, other: "Partition") -> bool:
        return other < self

    def __or__(self, other: "Partition") -> "Partition":
        return join_partitions(self, other)

    def __and__(self, other: "Partition") -> "Partition":
        return meet_partitions(self, other)

    def __str__(self) -> str:
        return "|".join(" ".join(map(str, b)) for b in self.blocks)

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"


def join_partitions(p: Partition, q: Partition) -> Partition:
    """Transitive closure of the union of two equivalences."""
    if p.n != q.n:
        raise InputError("partitions live on different universes")
    return Partition._trusted(kernels.join_labels(p.labels, q.labels))


def meet_partitions(p: Partition, q: Partition) -> Partition:
    if p.n != q.n:
        raise InputError("partitions live on different universes")
    return Partition(zip(p.labels, q.labels))


def embed_partition(p: Partition, embedding, n: int) -> Partition:
    """Image of ``p`` under an injective map into ``range(n)``; other points stay singletons.

    This is ``eq(X/p ∪ {{x} | x outside the image})``.
    """
    labels = list(range(p.n, p.n + n))
    for x, lab in enumerate(p.labels):
        labels[embedding[x]] = lab
    return Partition(labels)


def glue_partitions(parts, n: int) -> Partition:
    """Smallest equivalence on ``range(n)`` containing each embedded partition.

    ``parts`` is a sequence of ``(partition, embedding)``; embeddings may
    overlap, in which case blocks sharing an image point fuse.
    """
    result = Partition.identity(n)
    for p, emb in parts:
        result = join_partitions(result, embed_partition(p, emb, n))
    return result
