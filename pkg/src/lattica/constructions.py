"""Lattice constructions with fixed element numbering.

Numbering contracts (relied on by golden files and by the tower):

* ``chain(n)``: ``0 < 1 < ... < n-1``.
* ``boolean(k)``: element ``x`` is the subset of ``range(k)`` with bitmask
  ``x``; the involution is complementation.
* ``m_lattice(k)``: bottom 0, top 1, midpoints ``2..k+1``.
* ``ordinal_sum(L, M)``: ``L`` keeps ``0..|L|-1``; the non-bottom elements of
  ``M`` follow in index order, ``M``'s bottom being ``L``'s top.
* ``horizontal_sum(Ls)``: shared bottom 0 and top 1, then the interior of
  each summand in summand order and index order.
* ``bound_B(L)``: ``L`` keeps its indices, new bottom ``n``, new top ``n+1``.
* ``step(M)``: ``M`` keeps its indices, then new bottom ``n``, new top
  ``n+1``, and the two glued-in atoms ``a = n+2`` and ``b = n+3``.
* ``sandwich(L, K)``: ``ordinal_sum(ordinal_sum(L, K), dual(L))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .congruence import (
    Signature,
    all_congruences,
    is_congruence,
    subalgebra_witness,
    unary_maps,
)
from .errors import (
    ConditionSViolated,
    ConstructionError,
    NotACongruence,
    NotPseudoKleene,
    TrivialSeed,
    TrivialSummand,
)
from .involution import (
    InvolutionStructure,
    Verdict,
    PASS,
    is_pseudo_kleene,
    lattice_of,
    reversal,
    trivial_brouwer,
    validate_involution,
)
from .lattice import FiniteLattice, bits, dual, from_leq, relabel
from .partition import Partition, embed_partition, glue_partitions


class Variant(Enum):
    PLAIN = "plain"
    KLEENE = "kleene"
    DOUBLE3 = "double3"

    @classmethod
    def parse(cls, text) -> "Variant":
        if isinstance(text, Variant):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise ConstructionError(f"unknown step variant {text!r}") from None


@dataclass(frozen=True)
class SumWitness:
    """A constructed structure with the maps placing each part inside it.

    ``identified`` lists the result elements onto which several summand
    elements were glued.
    """

    result: object
    embeddings: tuple
    identified: tuple = ()

    @property
    def lattice(self) -> FiniteLattice:
        return lattice_of(self.result)


def _with_inv(L, inv):
    return L if inv is None else validate_involution(L, inv)


# -- basic families ---------------------------------------------------------

def chain(n: int) -> FiniteLattice:
    if n < 1:
        raise ConstructionError("chain length must be at least 1")
    return FiniteLattice([((1 << n) - 1) ^ ((1 << x) - 1) for x in range(n)])


def reversed_chain(n: int) -> InvolutionStructure:
    """The n-element chain with its order-reversing involution."""
    return validate_involution(chain(n), reversal(n))


def boolean(k: int) -> InvolutionStructure:
    if k < 0:
        raise ConstructionError("Boolean exponent must be non-negative")
    size = 1 << k
    L = from_leq(size, lambda x, y: x & y == x)
    return validate_involution(L, tuple((size - 1) ^ x for x in range(size)))


def m_lattice(k: int) -> FiniteLattice:
    if k < 1:
        raise ConstructionError("M_k needs at least one midpoint")
    return from_leq(k + 2, lambda x, y: x == y or x == 0 or y == 1)


# -- sums -------------------------------------------------------------------

def ordinal_sum(L, M) -> SumWitness:
    """Stack ``M`` on top of ``L``, gluing L's top to M's bottom."""
    L = lattice_of(L)
    M = lattice_of(M)
    n = L.n + M.n - 1
    emb_L = tuple(range(L.n))
    emb_M = [0] * M.n
    nxt = L.n
    for x in range(M.n):
        if x == M.bottom:
            emb_M[x] = L.top
        else:
            emb_M[x] = nxt
            nxt += 1
    emb_M = tuple(emb_M)
    m_part = 0
    for x in range(M.n):
        if x != M.bottom:
            m_part |= 1 << emb_M[x]
    up = [0] * n
    for x in range(L.n):
        mask = 0
        for y in bits(L.up[x]):
            mask |= 1 << y
        up[x] = mask | m_part
    for x in range(M.n):
        mask = 0
        for y in bits(M.up[x]):
            mask |= 1 << emb_M[y]
        up[emb_M[x]] = mask
    return SumWitness(FiniteLattice(up), (emb_L, emb_M), (L.top,))


def glue_from_witness(W: SumWitness, parts) -> Partition:
    """Union of the summand partitions transported into the sum."""
    return glue_partitions(list(zip(parts, W.embeddings)), W.lattice.n)


def congruence_osum(alpha: Partition, beta: Partition, W: SumWitness) -> Partition:
    """α ⊕ β: classes of α and β, with L's top class fused to M's bottom class."""
    n_l = len(W.embeddings[0])
    n_m = len(W.embeddings[1])
    if alpha.n != n_l or beta.n != n_m:
        raise NotACongruence("partition sizes do not match the summands")
    result = glue_from_witness(W, [alpha, beta])
    if not is_congruence(W.result, Signature.LAT, result):
        raise NotACongruence(f"{alpha} ⊕ {beta} is not a congruence")
    return result


def horizontal_sum(Ls) -> SumWitness:
    """Glue nontrivial bounded (involution) lattices at bottoms and tops."""
    Ls = list(Ls)
    if not Ls:
        raise ConstructionError("horizontal sum of an empty family")
    with_inv = [isinstance(S, InvolutionStructure) for S in Ls]
    if any(with_inv) and not all(with_inv):
        raise ConstructionError("mixing lattices with and without involution")
    lats = [lattice_of(S) for S in Ls]
    for i, L in enumerate(lats):
        if L.n < 2:
            raise TrivialSummand(f"summand {i} is trivial")
    n = 2 + sum(L.n - 2 for L in lats)
    embs = []
    owner = [None, None]
    nxt = 2
    for i, L in enumerate(lats):
        emb = [0] * L.n
        for x in range(L.n):
            if x == L.bottom:
                emb[x] = 0
            elif x == L.top:
                emb[x] = 1
            else:
                emb[x] = nxt
                owner.append((i, x))
                nxt += 1
        embs.append(tuple(emb))

    def leq(u, v):
        if u == v or u == 0 or v == 1:
            return True
        if u == 1 or v == 0:
            return False
        (i, x), (j, y) = owner[u], owner[v]
        return i == j and lats[i].leq(x, y)

    result = from_leq(n, leq)
    if all(with_inv):
        inv = [0] * n
        for S, emb in zip(Ls, embs):
            for x in range(S.n):
                inv[emb[x]] = emb[S.inv[x]]
        result = validate_involution(result, inv)
    return SumWitness(result, tuple(embs), (0, 1))


def bound_B(S) -> SumWitness:
    """Adjoin a new bottom (index n) and a new top (index n+1)."""
    L = lattice_of(S)
    n = L.n
    full = (1 << (n + 2)) - 1
    up = [L.up[x] | (1 << (n + 1)) for x in range(n)]
    up.append(full)
    up.append(1 << (n + 1))
    result = FiniteLattice(up)
    if isinstance(S, InvolutionStructure):
        result = validate_involution(result, tuple(S.inv) + (n + 1, n))
    return SumWitness(result, (tuple(range(n)),))


def sandwich(L, K=None) -> SumWitness:
    """L ⊕ K ⊕ L^d with the involution swapping L and its dual copy.

    ``K=None`` stands for the one-element algebra, giving L ⊕ L^d.  The
    dual copy reuses L's indices, so each x in L is sent to its copy and
    back; K keeps its own involution.
    """
    L = lattice_of(L)
    if K is None:
        K = InvolutionStructure(chain(1), (0,))
    if not isinstance(K, InvolutionStructure):
        raise ConstructionError("the middle of a sandwich needs an involution")
    lower = ordinal_sum(L, K.lattice)
    whole = ordinal_sum(lower.lattice, dual(L))
    emb_L = whole.embeddings[0][: L.n]
    emb_K = tuple(whole.embeddings[0][lower.embeddings[1][x]] for x in range(K.n))
    emb_D = whole.embeddings[1]
    n = whole.lattice.n
    inv = [None] * n
    for x in range(L.n):
        inv[emb_L[x]] = emb_D[x]
        inv[emb_D[x]] = emb_L[x]
    for x in range(K.n):
        inv[emb_K[x]] = emb_K[K.inv[x]]
    result = validate_involution(whole.lattice, inv)
    glued = tuple(sorted({emb_L[L.top], emb_D[L.top]}))
    return SumWitness(result, (emb_L, emb_K, emb_D), glued)


def aol_sandwich(K: InvolutionStructure) -> SumWitness:
    """ℒ2 ⊕ K ⊕ ℒ2 with the trivial Brouwer complement."""
    if not isinstance(K, InvolutionStructure):
        raise ConstructionError("aol needs a pseudo-Kleene algebra")
    v = is_pseudo_kleene(K)
    if not v:
        raise NotPseudoKleene(v.witness)
    W = sandwich(chain(2), K)
    S = W.result
    return SumWitness(S.with_brouwer(trivial_brouwer(S.lattice)), W.embeddings, W.identified)


# -- the inductive step and tower -------------------------------------------

def _chain3_fixed() -> InvolutionStructure:
    return reversed_chain(3)


def step(M, variant=Variant.PLAIN) -> SumWitness:
    """B(M) ⊞ ℒ2² with ``M`` keeping its indices.

    KLEENE: the new atoms are swapped by the involution (a' = b).
    DOUBLE3: ℒ3 ⊞ B(M) ⊞ ℒ3, each new atom fixed (a' = a, b' = b).
    PLAIN: lattice only.
    """
    variant = Variant.parse(variant)
    if variant is Variant.PLAIN:
        M = lattice_of(M)
    elif not isinstance(M, InvolutionStructure):
        raise ConstructionError(f"variant {variant.value} needs an involution lattice")
    n = lattice_of(M).n
    B = bound_B(M).result
    if variant is Variant.PLAIN:
        W = horizontal_sum([B, boolean(2).lattice])
    elif variant is Variant.KLEENE:
        W = horizontal_sum([B, boolean(2)])
    else:
        W = horizontal_sum([_chain3_fixed(), B, _chain3_fixed()])
    if variant is Variant.DOUBLE3:
        emb_B = W.embeddings[1]
        atoms = (W.embeddings[0][1], W.embeddings[2][1])
    else:
        emb_B = W.embeddings[0]
        atoms = (W.embeddings[1][1], W.embeddings[1][2])
    perm = [0] * (n + 4)
    for x in range(n + 2):
        perm[emb_B[x]] = x
    perm[atoms[0]] = n + 2
    perm[atoms[1]] = n + 3
    lat = relabel(lattice_of(W.result), perm)
    if isinstance(W.result, InvolutionStructure):
        inv = [0] * (n + 4)
        for x in range(n + 4):
            inv[perm[x]] = perm[W.result.inv[x]]
        result = validate_involution(lat, inv)
    else:
        result = lat
    square = (n, n + 2, n + 3, n + 1)
    return SumWitness(result, (tuple(range(n)), square))


@dataclass(frozen=True)
class TowerFamily:
    """Members L_2, L_3, ... over one growing universe (indices preserved)."""

    members: tuple
    seed: object = None
    variant: Variant | None = None
    sizes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        object.__setattr__(self, "sizes", tuple(lattice_of(m).n for m in self.members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


def tower(seed, k: int, variant=Variant.PLAIN) -> TowerFamily:
    """The seed followed by ``k`` successive steps."""
    variant = Variant.parse(variant)
    if lattice_of(seed).n < 2:
        raise TrivialSeed("tower seed must be nontrivial")
    if k < 0:
        raise ConstructionError("number of steps must be non-negative")
    if variant is Variant.PLAIN:
        seed = lattice_of(seed)
    members = [seed]
    for _ in range(k):
        members.append(step(members[-1], variant).result)
    return TowerFamily(members, seed, variant)


def _agrees(small, big, sig):
    """Operations of ``big`` restricted to ``small``'s universe equal small's."""
    Ls, Lb = lattice_of(small), lattice_of(big)
    for x in range(Ls.n):
        for y in range(Ls.n):
            if Ls.join[x][y] != Lb.join[x][y] or Ls.meet[x][y] != Lb.meet[x][y]:
                return ("operation differs", x, y)
    if sig.has_constants and (Ls.bottom != Lb.bottom or Ls.top != Lb.top):
        return ("constants differ",)
    for name, fs, fb in zip(["'", "~"], unary_maps(small, sig), unary_maps(big, sig)):
        for x in range(Ls.n):
            if fs[x] != fb[x]:
                return (f"{name} differs", x)
    return None


def check_condition_s(F, sig=Signature.LAT) -> Verdict:
    """Each earlier member is a proper subalgebra of each later one."""
    sig = Signature.parse(sig)
    members = list(F)
    for j, big in enumerate(members):
        nb = lattice_of(big).n
        for i in range(j):
            small = members[i]
            ns = lattice_of(small).n
            if ns >= nb:
                return Verdict(False, (i, j), "not proper")
            w = subalgebra_witness(big, sig, range(ns))
            if w is not None:
                return Verdict(False, (i, j) + w, "not closed")
            w = _agrees(small, big, sig)
            if w is not None:
                return Verdict(False, (i, j) + w, "not a subalgebra")
    return PASS


def expected_condition_c(F, j: int) -> frozenset:
    """{Δ, ∇} ∪ {collapse member i to one class : i < j} for member ``j``."""
    members = list(F)
    n = lattice_of(members[j]).n
    want = {Partition.identity(n), Partition.total(n)}
    for i in range(j):
        ni = lattice_of(members[i]).n
        want.add(Partition([0] * ni + list(range(1, n - ni + 1))))
    return frozenset(want)


def check_condition_c(F, sig=Signature.LAT) -> Verdict:
    """Each member's congruences are Δ, ∇ and the collapses of earlier members."""
    sig = Signature.parse(sig)
    s = check_condition_s(F, sig)
    if not s:
        raise ConditionSViolated(s.witness)
    members = list(F)
    for j, S in enumerate(members):
        got = all_congruences(S, sig).as_set()
        want = expected_condition_c(members, j)
        if got != want:
            extra = sorted(got - want, key=Partition.sort_key)
            missing = sorted(want - got, key=Partition.sort_key)
            bad = extra[0] if extra else missing[0]
            return Verdict(False, (j, str(bad)), "unexpected" if extra else "missing")
    return PASS


# -- congruence transfer formulas -------------------------------------------

def bound_con01_formula(L_congruences, W: SumWitness):
    """eq(L/θ ∪ {{0},{1}}) for each θ, the predicted Con_01(B(L))."""
    n = W.lattice.n
    return frozenset(embed_partition(t, W.embeddings[0], n) for t in L_congruences)


def step_formula(M_congruences, W: SumWitness):
    """eq(M/θ ∪ {{0},{a},{b},{1}}) for each θ, plus ∇."""
    n = W.lattice.n
    out = {embed_partition(t, W.embeddings[0], n) for t in M_congruences}
    out.add(Partition.total(n))
    return frozenset(out)


def hsum_square_formula(L_con01, W: SumWitness):
    """eq(L/α ∪ {{a},{b}}) for each α, plus ∇, in L ⊞ ℒ2²."""
    n = W.lattice.n
    out = {embed_partition(a, W.embeddings[0], n) for a in L_con01}
    out.add(Partition.total(n))
    return frozenset(out)


def sandwich_formula(L_congruences, K_congruences, W: SumWitness):
    """α ⊕ β ⊕ α' for every α, β."""
    return frozenset(
        glue_from_witness(W, [a, b, a]) for a in L_congruences for b in K_congruences
    )


def aol_formula(K_congruences, W: SumWitness):
    """eq(K/β ∪ {{0},{1}}) for each β, plus ∇, in ℒ2 ⊕ K ⊕ ℒ2."""
    n = W.lattice.n
    out = {embed_partition(b, W.embeddings[1], n) for b in K_congruences}
    out.add(Partition.total(n))
    return frozenset(out)
