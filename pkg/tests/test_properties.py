"""Property tests over seeded random lattices and partitions."""

import random
from itertools import product

from hypothesis import given, settings, strategies as st

from lattica import (
    Partition,
    Signature,
    all_congruences,
    brute_force_congruences,
    dual,
    involution_image,
    is_isomorphic,
    ordinal_sum,
    sandwich,
    step,
)
from lattica.corpus import random_lattice, with_first_involution
from lattica.involution import InvolutionStructure, is_pseudo_kleene
from lattica.lattice import relabel
from lattica.partition import join_partitions, meet_partitions

from oracles import canon, compatible

settings.register_profile("lattica", max_examples=60, deadline=None)
settings.load_profile("lattica")


@st.composite
def lattices(draw, min_n=1, max_n=8):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_n, max_n))
    return random_lattice(random.Random(seed), n)


@st.composite
def partitions(draw, n):
    labels = []
    for i in range(n):
        labels.append(draw(st.integers(0, max(labels, default=-1) + 1)))
    return Partition(labels)


@given(lattices())
def test_lattice_laws(L):
    J, M, r = L.join, L.meet, range(L.n)
    for x, y in product(r, r):
        assert J[x][y] == J[y][x] and M[x][y] == M[y][x]
        assert J[x][M[x][y]] == x and M[x][J[x][y]] == x
        assert L.leq(x, y) == (J[x][y] == y)
    for x, y, z in product(r, r, r):
        assert J[J[x][y]][z] == J[x][J[y][z]]
        assert M[M[x][y]][z] == M[x][M[y][z]]


@given(lattices(), st.randoms(use_true_random=False))
def test_isomorphism_equivalence(L, rnd):
    p = list(range(L.n))
    rnd.shuffle(p)
    q = list(range(L.n))
    rnd.shuffle(q)
    A = relabel(L, p)
    B = relabel(A, q)
    assert is_isomorphic(L, L) is not None
    f = is_isomorphic(L, A)
    assert f is not None
    assert is_isomorphic(A, L) is not None
    assert is_isomorphic(L, B) is not None
    for x, y in product(range(L.n), repeat=2):
        assert f[L.join[x][y]] == A.join[f[x]][f[y]]


@given(lattices())
def test_double_dual(L):
    assert dual(dual(L)) == L


@given(lattices(max_n=7))
def test_closure_matches_oracle(L):
    S = with_first_involution(L)
    assert all_congruences(S).as_set() == brute_force_congruences(S).as_set()
    if isinstance(S, InvolutionStructure):
        assert all_congruences(S, Signature.ILAT).as_set() == \
            brute_force_congruences(S, Signature.ILAT).as_set()


@given(lattices(max_n=7), st.data())
def test_join_of_congruences_is_congruence(L, data):
    C = list(all_congruences(L))
    p = data.draw(st.sampled_from(C))
    q = data.draw(st.sampled_from(C))
    j = join_partitions(p, q)
    (jt, mt) = ({(x, y): L.join[x][y] for x in range(L.n) for y in range(L.n)},
                {(x, y): L.meet[x][y] for x in range(L.n) for y in range(L.n)})
    assert compatible([list(b) for b in j.blocks], L.n, (jt, mt))
    assert j in all_congruences(L) and meet_partitions(p, q) in all_congruences(L)


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(partitions(n), partitions(n))))
def test_partition_join_is_least_upper_bound(pq):
    p, q = pq
    j, m = p | q, p & q
    assert p <= j and q <= j and m <= p and m <= q
    # oracle: connected components of the union relation, by repeated merging
    comps = [{x} for x in range(p.n)]
    merged = True
    while merged:
        merged = False
        for a in range(len(comps)):
            for b in range(a + 1, len(comps)):
                if any(p.related(x, y) or q.related(x, y) for x in comps[a] for y in comps[b]):
                    comps[a] |= comps.pop(b)
                    merged = True
                    break
            if merged:
                break
    assert j.blocks == canon(comps)
    for x in range(p.n):
        for y in range(p.n):
            assert m.related(x, y) == (p.related(x, y) and q.related(x, y))


@given(st.integers(1, 9).flatmap(partitions))
def test_partition_text_round_trip(p):
    assert Partition.parse(str(p)) == p
    assert canon(p.blocks) == p.blocks


@given(lattices(min_n=2, max_n=7), st.data())
def test_involution_image_twice(L, data):
    S = with_first_involution(L)
    if not isinstance(S, InvolutionStructure):
        return
    p = data.draw(partitions(L.n))
    assert involution_image(involution_image(p, S.inv), S.inv) == p


@given(lattices(max_n=5), lattices(max_n=5))
def test_ordinal_sum_count_multiplies(L, M):
    W = ordinal_sum(L, M)
    assert len(all_congruences(W.result)) == len(all_congruences(L)) * len(all_congruences(M))


@given(lattices(max_n=6))
def test_step_adds_one(M):
    assert len(all_congruences(step(M).result)) == len(all_congruences(M)) + 1


@given(lattices(max_n=6))
def test_sandwich_pseudo_kleene_and_con(L):
    S = sandwich(L).result
    assert is_pseudo_kleene(S)
    assert len(all_congruences(S, Signature.ILAT)) == len(all_congruences(L))
