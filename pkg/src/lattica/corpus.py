"""The fixed test corpus shipped with the tool.

Small named structures plus seeded random cover-generated lattices.  Random
lattices get the lexicographically first order-reversing involution when
they have one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import constructions as C
from .errors import InputError
from .involution import InvolutionStructure, find_involutions, lattice_of, validate_involution
from .lattice import from_cover_relation, is_isomorphic

DEFAULT_SEED = 20160518


@dataclass(frozen=True)
class Entry:
    name: str
    structure: object

    @property
    def lattice(self):
        return lattice_of(self.structure)

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def has_involution(self) -> bool:
        return isinstance(self.structure, InvolutionStructure)


def n5() -> InvolutionStructure:
    """N5 = {0 < a < c < 1, 0 < b < 1} as 0, 1=a, 2=c, 3=b, 4=top; a' = c, b' = b."""
    L = from_cover_relation(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
    return validate_involution(L, (4, 2, 1, 3, 0))


def m3_fixed() -> InvolutionStructure:
    """M3 with every midpoint fixed by the involution."""
    return C.horizontal_sum([C.reversed_chain(3)] * 3).result


def m4_swap() -> InvolutionStructure:
    """M4 as two glued Boolean squares, midpoints swapped in pairs."""
    return C.horizontal_sum([C.boolean(2), C.boolean(2)]).result


def m5_mixed() -> InvolutionStructure:
    return C.horizontal_sum([C.boolean(2), C.boolean(2), C.reversed_chain(3)]).result


def random_lattice(rng: random.Random, n: int, density: float = 0.35):
    """Rejection-sample a lattice: random DAG on the interior, then bounds."""
    if n < 1:
        raise InputError("n must be positive")
    if n <= 2:
        return from_cover_relation(n, [(0, 1)] if n == 2 else [])
    while True:
        inner = range(1, n - 1)
        covers = [(0, x) for x in inner] + [(x, n - 1) for x in inner]
        covers += [(x, y) for x in inner for y in inner if x < y and rng.random() < density]
        try:
            return from_cover_relation(n, covers)
        except InputError:
            continue


def with_first_involution(L):
    inv = next(find_involutions(L), None)
    return L if inv is None else validate_involution(L, inv)


def standard_corpus(seed: int = DEFAULT_SEED, random_count: int = 25, max_random_n: int = 7):
    """Chains 1..6, L2^2, L2^3, M3..M5, N5, B(L2^2) and pairwise non-isomorphic
    random lattices with 4..max_random_n elements."""
    out = [Entry(f"L{n}", C.reversed_chain(n)) for n in range(1, 7)]
    out.append(Entry("L2^2", C.boolean(2)))
    out.append(Entry("L2^3", C.boolean(3)))
    out.append(Entry("M3", m3_fixed()))
    out.append(Entry("M4", m4_swap()))
    out.append(Entry("M5", m5_mixed()))
    out.append(Entry("N5", n5()))
    out.append(Entry("B(L2^2)", C.bound_B(C.boolean(2)).result))
    rng = random.Random(seed)
    drawn = []
    while len(drawn) < random_count:
        L = random_lattice(rng, rng.randint(4, max_random_n))
        # at most 2 + 5 + 15 + 53 lattices exist with 4..7 elements; skip repeats
        if any(is_isomorphic(L, M) is not None for M in drawn):
            continue
        drawn.append(L)
        out.append(Entry(f"rand{len(drawn) - 1:02d}", with_first_involution(L)))
    return out


def pbz_corpus(corpus=None):
    """PBZ*-lattices with trivial and with non-trivial Brouwer complements."""
    from .involution import is_pseudo_kleene, trivial_brouwer

    corpus = standard_corpus() if corpus is None else corpus
    out = []
    for e in corpus:
        S = e.structure
        if isinstance(S, InvolutionStructure) and e.n <= 7 and is_pseudo_kleene(S):
            out.append(Entry(f"aol({e.name})", C.aol_sandwich(S).result))
    for k in (1, 2, 3):
        B = C.boolean(k)
        out.append(Entry(f"L2^{k}+ortho", B.with_brouwer(B.inv)))
    M = m4_swap()
    out.append(Entry("M4+ortho", M.with_brouwer(M.inv)))
    for name, L in (("L2^2", C.boolean(2).lattice), ("M3", C.m_lattice(3))):
        S = C.sandwich(L).result
        out.append(Entry(f"{name}+dual", S.with_brouwer(trivial_brouwer(S.lattice))))
    return out
