"""Registry of structural identities checked on finite instances.

Each check returns a ``Result``; a failing result carries the first
counterexample found.  Identifiers are stable: the CLI, the docs and the
acceptance suite all use them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from . import constructions as C
from .congruence import (
    Signature,
    all_congruences,
    brute_force_congruences,
    fix_constants,
    involution_image,
    is_0_regular,
    is_simple,
    oracle_limit,
)
from .corpus import m4_swap, pbz_corpus, standard_corpus
from .involution import (
    is_antiortholattice,
    is_pbz_star,
    is_pseudo_kleene,
    trivial_brouwer,
)
from .lattice import filters
from .partition import Partition

LAT, ILAT, BZ = Signature.LAT, Signature.ILAT, Signature.BZ


@dataclass
class Result:
    theorem: str
    holds: bool
    instances: int
    witness: object = None

    def line(self) -> str:
        mark = "PASS" if self.holds else "FAIL"
        tail = f"; witness: {self.witness}" if not self.holds else ""
        return f"[{mark}] {self.theorem} ({self.instances} instances){tail}"


class _Tally:
    def __init__(self, theorem):
        self.theorem = theorem
        self.count = 0
        self.witness = None

    def check(self, ok, witness):
        self.count += 1
        if not ok and self.witness is None:
            self.witness = witness
        return ok

    def result(self) -> Result:
        return Result(self.theorem, self.witness is None, self.count, self.witness)


def _sset(C_):
    return C_.as_set()


def _lattices(corpus, max_n=None):
    return [e for e in corpus if max_n is None or e.n <= max_n]


# -- checks -----------------------------------------------------------------

def oracle_equivalence(corpus=None, max_n=None) -> Result:
    """all_congruences equals the brute-force oracle (LAT, ILAT, BZ where present)."""
    corpus = standard_corpus() if corpus is None else corpus
    limit = oracle_limit() if max_n is None else max_n
    t = _Tally("oracle-equivalence")
    for e in corpus:
        if e.n > limit:
            continue
        sigs = [LAT]
        if e.has_involution:
            sigs.append(ILAT)
            if e.structure.brouwer is not None:
                sigs.append(BZ)
        for sig in sigs:
            fast = _sset(all_congruences(e.structure, sig))
            slow = _sset(brute_force_congruences(e.structure, sig, limit=limit))
            t.check(fast == slow, (e.name, sig.value, len(fast), len(slow)))
    return t.result()


def osum_pairs(corpus, count=20, seed=7, max_n=7):
    small = _lattices(corpus, max_n)
    rng = random.Random(seed)
    return [(rng.choice(small), rng.choice(small)) for _ in range(count)]


def osum_con_product(pairs=None) -> Result:
    """(α, β) ↦ α ⊕ β is an order isomorphism Con(L) × Con(M) → Con(L ⊕ M)."""
    pairs = osum_pairs(standard_corpus()) if pairs is None else pairs
    t = _Tally("osum-con-product")
    for eL, eM in pairs:
        W = C.ordinal_sum(eL.lattice, eM.lattice)
        conL = all_congruences(eL.lattice).members
        conM = all_congruences(eM.lattice).members
        target = _sset(all_congruences(W.result))
        image = {}
        for a, b in product(conL, conM):
            image[(a, b)] = C.congruence_osum(a, b, W)
        name = (eL.name, eM.name)
        if not t.check(len(set(image.values())) == len(image), name + ("not injective",)):
            continue
        if not t.check(set(image.values()) == target, name + ("not onto",)):
            continue
        t.check(len(target) == len(conL) * len(conM), name + ("count",))
        keys = list(image)
        masks = [image[k].pair_mask for k in keys]
        lm = {a: a.pair_mask for a in conL}
        mm = {b: b.pair_mask for b in conM}
        ok = True
        for i, (a1, b1) in enumerate(keys):
            for j, (a2, b2) in enumerate(keys):
                src = (lm[a1] & ~lm[a2] == 0) and (mm[b1] & ~mm[b2] == 0)
                dst = masks[i] & ~masks[j] == 0
                if src != dst:
                    ok = False
                    break
            if not ok:
                break
        t.check(ok, name + ("order",))
    return t.result()


def step_law(corpus=None) -> Result:
    """Con(B(M) ⊞ ℒ2²) = {eq(M/θ ∪ {{0},{a},{b},{1}})} ∪ {∇}; likewise Con_I."""
    corpus = standard_corpus() if corpus is None else corpus
    t = _Tally("bM-square-plus-one")
    for e in corpus:
        W = C.step(e.lattice, C.Variant.PLAIN)
        conM = all_congruences(e.lattice)
        got = _sset(all_congruences(W.result))
        t.check(got == C.step_formula(conM, W), (e.name, "plain", "set"))
        t.check(len(got) == len(conM) + 1, (e.name, "plain", "count"))
        if not e.has_involution:
            continue
        conI = all_congruences(e.structure, ILAT)
        for variant in (C.Variant.KLEENE, C.Variant.DOUBLE3):
            W = C.step(e.structure, variant)
            gotL = _sset(all_congruences(W.result, LAT))
            t.check(gotL == C.step_formula(conM, W), (e.name, variant.value, "lat set"))
            gotI = _sset(all_congruences(W.result, ILAT))
            t.check(gotI == C.step_formula(conI, W), (e.name, variant.value, "ilat set"))
            t.check(len(gotI) == len(conI) + 1, (e.name, variant.value, "ilat count"))
    return t.result()


def tower_count(seed=None, k=8, variant=C.Variant.PLAIN, sig=LAT) -> Result:
    """|Con(L_{2+i})| = 2 + i, |L_{2+i}| = |seed| + 4i, conditions (s) and (c)."""
    seed = C.m_lattice(3) if seed is None else seed
    t = _Tally("tower-count")
    F = C.tower(seed, k, variant)
    n0 = F.sizes[0]
    for i, S in enumerate(F):
        t.check(F.sizes[i] == n0 + 4 * i, ("size", i, F.sizes[i]))
        t.check(len(all_congruences(S, sig)) == 2 + i, ("count", i))
    for kk in range(1, k + 1):
        prefix = C.tower(seed, kk, variant)
        t.check(prefix.members == F.members[: kk + 1], ("prefix", kk))
    t.check(bool(C.check_condition_s(F, sig)), ("condition s", C.check_condition_s(F, sig)))
    t.check(bool(C.check_condition_c(F, sig)), ("condition c", C.check_condition_c(F, sig)))
    return t.result()


def pk_preserved(seed=None, k=8) -> Result:
    """Kleene-variant tower from M4 with swap: every member pseudo-Kleene, Con_I = Con."""
    seed = m4_swap() if seed is None else seed
    t = _Tally("pk-preserved")
    F = C.tower(seed, k, C.Variant.KLEENE)
    for i, S in enumerate(F):
        t.check(bool(is_pseudo_kleene(S)), ("not pseudo-Kleene", i))
        conL = all_congruences(S, LAT)
        conI = all_congruences(S, ILAT)
        t.check(_sset(conL) == _sset(conI), ("Con_I != Con", i))
        t.check(len(conI) == 2 + i, ("count", i, len(conI)))
    for sig in (LAT, ILAT):
        t.check(bool(C.check_condition_s(F, sig)), ("condition s", sig.value))
        t.check(bool(C.check_condition_c(F, sig)), ("condition c", sig.value))
    return t.result()


def aol_conbz(corpus=None, max_n=7) -> Result:
    """ℒ2 ⊕ K ⊕ ℒ2 with trivial ~: antiortholattice, Con_BZ = Con_I0 ∪ {∇}, count +1."""
    corpus = standard_corpus() if corpus is None else corpus
    t = _Tally("aol-conbz")
    for e in corpus:
        K = e.structure
        if not e.has_involution or e.n > max_n or not is_pseudo_kleene(K):
            continue
        W = C.aol_sandwich(K)
        A = W.result
        t.check(bool(is_antiortholattice(A)), (e.name, "not an antiortholattice"))
        n = A.lattice.n
        conBZ = _sset(all_congruences(A, BZ))
        conI_A = all_congruences(A, ILAT)
        fixed0 = _sset(fix_constants(conI_A, [A.lattice.bottom])) | {Partition.total(n)}
        t.check(conBZ == fixed0, (e.name, "Con_BZ != Con_I0 + ∇"))
        conI_K = all_congruences(K, ILAT)
        t.check(conBZ == C.aol_formula(conI_K, W), (e.name, "formula"))
        t.check(len(conBZ) == len(conI_K) + 1, (e.name, "count"))
    return t.result()


def aol_trivial_brouwer(structures=None) -> Result:
    """Among PBZ*-lattices, antiortholattice ⇔ the Brouwer complement is trivial."""
    structures = pbz_corpus() if structures is None else structures
    t = _Tally("aol-trivial-brouwer")
    for e in structures:
        S = e.structure
        if not is_pbz_star(S):
            continue
        trivial = S.brouwer == trivial_brouwer(S.lattice)
        t.check(bool(is_antiortholattice(S)) == trivial, (e.name,))
    return t.result()


def lld_simple(lattices=None) -> Result:
    """For 0-regular nontrivial L, L ⊕ L^d with trivial ~ is a simple antiortholattice."""
    if lattices is None:
        lattices = [("L2^2", C.boolean(2).lattice), ("M3", C.m_lattice(3))]
    t = _Tally("lld-simple")
    for name, L in lattices:
        t.check(is_0_regular(L), (name, "not 0-regular"))
        S = C.sandwich(L).result
        A = S.with_brouwer(trivial_brouwer(S.lattice))
        t.check(bool(is_antiortholattice(A)), (name, "not an antiortholattice"))
        t.check(is_simple(A, BZ), (name, "not simple", len(all_congruences(A, BZ))))
    return t.result()


def _square_variants():
    return [
        ("lat", None),
        ("boolean", lambda: [C.boolean(2)]),
        ("double3", lambda: [C.reversed_chain(3), C.reversed_chain(3)]),
    ]


def hsum_square_con(corpus=None) -> Result:
    """Con(L ⊞ ℒ2²) = {eq(L/α ∪ {{a},{b}}) : α ∈ Con_01(L)} ∪ {∇}; Con_I with Con_I0."""
    corpus = standard_corpus() if corpus is None else corpus
    t = _Tally("hsum-square-con")
    for e in corpus:
        if e.n <= 2:
            continue
        L = e.lattice
        con01 = fix_constants(all_congruences(L), [L.bottom, L.top])
        W = C.horizontal_sum([L, C.boolean(2).lattice])
        got = _sset(all_congruences(W.result))
        t.check(got == C.hsum_square_formula(con01, W), (e.name, "lat"))
        if not e.has_involution:
            continue
        conI0 = fix_constants(all_congruences(e.structure, ILAT), [L.bottom])
        for name, square in _square_variants()[1:]:
            W = C.horizontal_sum([e.structure] + square())
            got = _sset(all_congruences(W.result, ILAT))
            t.check(got == C.hsum_square_formula(conI0, W), (e.name, name))
    return t.result()


def sandwich_con(corpus=None, count=15, seed=11, max_n=5) -> Result:
    """Con_I(L ⊕ K ⊕ L^d) = {α ⊕ β ⊕ α'}; Con_I(L ⊕ L^d) ≅ Con(L)."""
    corpus = standard_corpus() if corpus is None else corpus
    t = _Tally("sandwich-con")
    lats = _lattices(corpus, max_n)
    kleene = [e for e in lats if e.has_involution]
    rng = random.Random(seed)
    for _ in range(count):
        eL, eK = rng.choice(lats), rng.choice(kleene)
        W = C.sandwich(eL.lattice, eK.structure)
        got = _sset(all_congruences(W.result, ILAT))
        conL = all_congruences(eL.lattice).members
        conK = all_congruences(eK.structure, ILAT).members
        want = C.sandwich_formula(conL, conK, W)
        t.check(got == want, (eL.name, eK.name))
        t.check(len(got) == len(conL) * len(conK), (eL.name, eK.name, "count"))
        if eK.has_involution and bool(is_pseudo_kleene(eK.structure)):
            t.check(bool(is_pseudo_kleene(W.result)), (eL.name, eK.name, "(k)"))
    for e in lats:
        W = C.sandwich(e.lattice)
        got = all_congruences(W.result, ILAT)
        conL = all_congruences(e.lattice)
        t.check(len(got) == len(conL), (e.name, "L+L^d count"))
        t.check(bool(is_pseudo_kleene(W.result)), (e.name, "L+L^d (k)"))
    return t.result()


def filt_counts(corpus=None, pairs=None, exhaustive_max=12) -> Result:
    """Filter counts under ⊕, B and the step; |Filt(L)| = |L|."""
    corpus = standard_corpus() if corpus is None else corpus
    pairs = osum_pairs(corpus) if pairs is None else pairs
    t = _Tally("filt-counts")

    def count(L):
        return len(filters(L, exhaustive=L.n <= exhaustive_max))

    for e in corpus:
        L = e.lattice
        fl = count(L)
        t.check(fl == L.n, (e.name, "|Filt| != |L|"))
        t.check(count(C.bound_B(L).lattice) == fl + 2, (e.name, "B"))
        t.check(count(C.step(L).lattice) == fl + 4, (e.name, "step"))
    for eL, eM in pairs:
        W = C.ordinal_sum(eL.lattice, eM.lattice)
        t.check(count(W.lattice) == count(eL.lattice) + count(eM.lattice) - 1,
                (eL.name, eM.name, "osum"))
    return t.result()


def convex_partitions(n):
    """Partitions of the chain 0 < ... < n-1 into intervals, one per cut set."""
    out = set()
    for cuts in range(1 << max(n - 1, 0)):
        labels = []
        lab = 0
        for x in range(n):
            if x and (cuts >> (x - 1)) & 1:
                lab += 1
            labels.append(lab)
        out.add(Partition(labels))
    return frozenset(out)


def chain_convex(max_n=12, max_m=6) -> Result:
    """Con(ℒn) is the set of interval partitions; |Con_I(ℒm ⊕ ℒm^d)| = 2^(m-1)."""
    t = _Tally("chain-convex")
    for n in range(1, max_n + 1):
        got = _sset(all_congruences(C.chain(n)))
        want = convex_partitions(n)
        t.check(got == want, (n, "convex"))
        t.check(len(got) == 2 ** (n - 1), (n, "count"))
    for m in range(1, max_m + 1):
        S = C.sandwich(C.chain(m)).result
        got = all_congruences(S, ILAT)
        t.check(len(got) == 2 ** (m - 1) == len(all_congruences(C.chain(m))), (m, "Con_I"))
    return t.result()


def finite_bound(corpus=None) -> Result:
    """|Con(L)| <= 2^(|L|-1) with equality exactly for chains."""
    corpus = standard_corpus() if corpus is None else corpus
    t = _Tally("finite-bound")
    for e in corpus:
        c = len(all_congruences(e.lattice))
        bound = 2 ** (e.n - 1)
        t.check(c <= bound, (e.name, c, bound))
        t.check((c == bound) == e.lattice.is_chain(), (e.name, "equality", c, bound))
    return t.result()


def mn_simple(max_m=8, max_k=3) -> Result:
    """M_n is simple for n = 3..8; ℒ2^k has 2^k congruences."""
    t = _Tally("mn-simple")
    for m in range(3, max_m + 1):
        t.check(is_simple(C.m_lattice(m)), ("M", m))
        t.check(is_simple(C.horizontal_sum([C.chain(3)] * m).result), ("hsum L3", m))
    for k in range(1, max_k + 1):
        t.check(len(all_congruences(C.boolean(k).lattice)) == 2 ** k, ("L2^", k))
    return t.result()


def coni01_equals_coni0(corpus=None) -> Result:
    """In a bounded involution lattice, fixing 0 already fixes 1."""
    corpus = standard_corpus() if corpus is None else corpus
    t = _Tally("coni01-equals-coni0")
    for e in corpus:
        if not e.has_involution:
            continue
        L = e.lattice
        conI = all_congruences(e.structure, ILAT)
        a = _sset(fix_constants(conI, [L.bottom, L.top]))
        b = _sset(fix_constants(conI, [L.bottom]))
        t.check(a == b, (e.name,))
    return t.result()


def conilat_filter(corpus=None) -> Result:
    """Con_I(A) = {θ ∈ Con(A) : θ' = θ}, computed independently on both sides."""
    corpus = standard_corpus() if corpus is None else corpus
    t = _Tally("conilat-filter")
    for e in corpus:
        if not e.has_involution:
            continue
        S = e.structure
        con = all_congruences(S, LAT)
        symmetric = {p for p in con if involution_image(p, S.inv) == p}
        t.check(_sset(all_congruences(S, ILAT)) == symmetric, (e.name,))
    return t.result()


def signature_monotone(corpus=None) -> Result:
    """Con_BZ ⊆ Con_I ⊆ Con as bounded sublattices."""
    corpus = (standard_corpus() + pbz_corpus()) if corpus is None else corpus
    t = _Tally("signature-monotone")
    for e in corpus:
        chainsets = [all_congruences(e.structure, LAT)]
        if e.has_involution:
            chainsets.append(all_congruences(e.structure, ILAT))
            if e.structure.brouwer is not None:
                chainsets.append(all_congruences(e.structure, BZ))
        n = e.n
        for big, small in zip(chainsets, chainsets[1:]):
            s, b = _sset(small), _sset(big)
            t.check(s <= b, (e.name, small.signature.value, "subset"))
            t.check({Partition.identity(n), Partition.total(n)} <= s, (e.name, "bounds"))
            closed = all((p | q) in s and (p & q) in s for p in s for q in s)
            t.check(closed, (e.name, small.signature.value, "sublattice"))
    return t.result()


@dataclass(frozen=True)
class Theorem:
    id: str
    title: str
    check: object


REGISTRY = {
    th.id: th
    for th in [
        Theorem("oracle-equivalence", "closure generation agrees with brute force", oracle_equivalence),
        Theorem("osum-con-product", "Con(L ⊕ M) ≅ Con(L) × Con(M)", osum_con_product),
        Theorem("bM-square-plus-one", "|Con(B(M) ⊞ ℒ2²)| = |Con(M)| + 1", step_law),
        Theorem("tower-count", "tower members have 2, 3, 4, ... congruences", tower_count),
        Theorem("pk-preserved", "Kleene towers stay pseudo-Kleene with Con_I = Con", pk_preserved),
        Theorem("aol-conbz", "Con_BZ(ℒ2 ⊕ K ⊕ ℒ2) = Con_I0 ∪ {∇}", aol_conbz),
        Theorem("aol-trivial-brouwer", "antiortholattices are the PBZ* with trivial ~", aol_trivial_brouwer),
        Theorem("lld-simple", "L ⊕ L^d is a simple antiortholattice for 0-regular L", lld_simple),
        Theorem("hsum-square-con", "Con(L ⊞ ℒ2²) from Con_01(L)", hsum_square_con),
        Theorem("sandwich-con", "Con_I(L ⊕ K ⊕ L^d) = {α ⊕ β ⊕ α'}", sandwich_con),
        Theorem("filt-counts", "filter counts of ⊕, B and the step", filt_counts),
        Theorem("chain-convex", "chain congruences are interval partitions", chain_convex),
        Theorem("finite-bound", "|Con(L)| <= 2^(|L|-1), equality iff chain", finite_bound),
        Theorem("mn-simple", "M_n simple, ℒ2^k has 2^k congruences", mn_simple),
        Theorem("coni01-equals-coni0", "Con_I01 = Con_I0", coni01_equals_coni0),
        Theorem("conilat-filter", "Con_I = {θ ∈ Con : θ' = θ}", conilat_filter),
        Theorem("signature-monotone", "Con_BZ ⊆ Con_I ⊆ Con as sublattices", signature_monotone),
    ]
}


def run(theorem_id: str) -> Result:
    return REGISTRY[theorem_id].check()


def run_all():
    return [REGISTRY[k].check() for k in REGISTRY]
