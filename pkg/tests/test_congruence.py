import pytest

from lattica import (
    Partition,
    Signature,
    all_congruences,
    boolean,
    brute_force_congruences,
    chain,
    conlattice_isomorphic,
    fix_constants,
    horizontal_sum,
    involution_image,
    is_0_regular,
    is_simple,
    join_partitions,
    m_lattice,
    principal_congruence,
    restrict_to_subuniverse,
    reversed_chain,
)
from lattica.congruence import congruence_generated, is_congruence, oracle_limit
from lattica.corpus import m5_mixed, standard_corpus
from lattica.errors import NotSubalgebra, SignatureMismatch, TooLarge
from lattica.partition import meet_partitions

from oracles import congruences as oracle_congruences

LAT, ILAT, BZ = Signature.LAT, Signature.ILAT, Signature.BZ


def _blocks(C):
    return {p.blocks for p in C}


# -- partitions -------------------------------------------------------------

def test_partition_canonical_form():
    p = Partition.from_blocks([[2], [1, 0]])
    assert p.blocks == ((0, 1), (2,))
    assert str(p) == "0 1|2"
    assert Partition.parse("0 1|2") == p


def test_partition_join_examples():
    p = Partition.parse("0 1|2")
    assert join_partitions(p, Partition.identity(3)) == p
    assert join_partitions(p, Partition.parse("0|1 2")).is_total


def test_partition_meet_and_order():
    p, q = Partition.parse("0 1|2|3"), Partition.parse("0|1 2|3")
    assert meet_partitions(p, q).is_identity
    assert p & q <= p <= (p | q)
    assert not p <= q


# -- principal congruences --------------------------------------------------

def test_principal_congruence_chain():
    p = principal_congruence(chain(3), LAT, 0, 1)
    # oracle: least compatible partition relating 0 and 1
    cands = [c for c in oracle_congruences(3, chain(3).covers())
             if any(0 in b and 1 in b for b in c)]
    finest = max(cands, key=len)
    assert p.blocks == finest == ((0, 1), (2,))


def test_principal_congruence_m3_total():
    M = m_lattice(3)
    for a in range(5):
        for b in range(a + 1, 5):
            assert principal_congruence(M, LAT, a, b).is_total


def test_principal_congruence_diagonal():
    for e in standard_corpus()[:12]:
        assert principal_congruence(e.structure, LAT, 0, 0).is_identity


def test_congruence_generated_joins_principals():
    S = chain(5)
    g = congruence_generated(S, LAT, [(0, 1), (3, 4)])
    assert g == principal_congruence(S, LAT, 0, 1) | principal_congruence(S, LAT, 3, 4)


# -- enumeration ------------------------------------------------------------

def test_all_congruences_examples():
    assert len(all_congruences(chain(3))) == 4
    assert _blocks(all_congruences(m_lattice(3))) == {((0, 1, 2, 3, 4),), tuple((x,) for x in range(5))}
    B = boolean(2)
    assert all_congruences(B, ILAT).as_set() == all_congruences(B, LAT).as_set()
    assert len(all_congruences(B, ILAT)) == 4


@pytest.mark.parametrize("n, count", [(2, 2), (4, 8)])
def test_brute_force_chains(n, count):
    assert len(brute_force_congruences(chain(n))) == count


def test_brute_force_square():
    assert len(brute_force_congruences(boolean(2).lattice)) == 4


def test_brute_force_cap():
    assert oracle_limit() >= 8
    with pytest.raises(TooLarge):
        brute_force_congruences(chain(9), LAT, limit=8)


def test_oracle_limit_env(monkeypatch):
    monkeypatch.setenv("LATTICA_ORACLE_MAX", "9")
    assert oracle_limit() == 9
    assert len(brute_force_congruences(chain(9))) == 256


def test_against_independent_oracle():
    for e in standard_corpus():
        if e.n > 7:
            continue
        L = e.lattice
        want = oracle_congruences(L.n, L.covers())
        assert _blocks(all_congruences(e.structure, LAT)) == want, e.name
        if e.has_involution:
            want_i = oracle_congruences(L.n, L.covers(), [e.structure.inv])
            assert _blocks(all_congruences(e.structure, ILAT)) == want_i, e.name


def test_sorted_output():
    C = list(all_congruences(chain(4)))
    assert C == sorted(C, key=Partition.sort_key)
    assert C[0].is_total and C[-1].is_identity


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        all_congruences(chain(3), ILAT)
    with pytest.raises(SignatureMismatch):
        all_congruences(boolean(2), BZ)


# -- involution image, constants, restriction --------------------------------

def test_involution_image_examples():
    B = boolean(2)
    n = 4
    assert involution_image(Partition.identity(n), B.inv).is_identity
    assert involution_image(Partition.total(n), B.inv).is_total
    theta = Partition.from_blocks([[0, 1], [2, 3]])
    assert involution_image(theta, B.inv) == theta
    for p in all_congruences(B):
        assert involution_image(involution_image(p, B.inv), B.inv) == p


def test_fix_constants_examples():
    C = all_congruences(chain(3))
    fixed = fix_constants(C, [0, 2])
    assert [str(p) for p in fixed] == ["0|1|2"]
    assert fix_constants(C, []).as_set() == C.as_set()


def test_fix_constants_sublattice():
    for e in standard_corpus()[:14]:
        C = all_congruences(e.structure)
        F = fix_constants(C, [e.lattice.bottom]).as_set()
        assert Partition.identity(e.n) in F
        for p in F:
            for q in F:
                assert (p | q) in F and (p & q) in F


def test_restrict_examples():
    S = horizontal_sum([chain(3), boolean(2).lattice]).result  # ≅ M3
    universe = range(5)
    assert restrict_to_subuniverse(Partition.total(5), universe, S).is_total
    assert restrict_to_subuniverse(Partition.identity(5), universe, S).is_identity
    for p in all_congruences(S):
        if not p.is_total:
            assert restrict_to_subuniverse(p, universe, S).is_identity


def test_restrict_to_sublattice_of_chain():
    L = chain(5)
    p = Partition.parse("0 1|2 3|4")
    r = restrict_to_subuniverse(p, [1, 2, 3], L)
    assert str(r) == "0|1 2"


def test_restrict_rejects_non_subalgebra():
    B = boolean(2).lattice
    with pytest.raises(NotSubalgebra):
        restrict_to_subuniverse(Partition.identity(4), [1, 2], B)


# -- simplicity, 0-regularity, Con lattices ----------------------------------

def test_is_simple_examples():
    assert is_simple(m5_mixed().lattice)
    assert not is_simple(chain(3))
    assert is_simple(chain(1))


def test_is_0_regular_examples():
    assert is_0_regular(boolean(2).lattice)
    assert not is_0_regular(chain(3))
    assert is_0_regular(m_lattice(3))


def test_conlattice_isomorphic_examples():
    C3 = all_congruences(chain(3))
    sq = all_congruences(boolean(2).lattice)
    assert conlattice_isomorphic(C3, sq)
    CM = all_congruences(m_lattice(3))
    assert conlattice_isomorphic(CM, all_congruences(chain(2)))
    assert conlattice_isomorphic(CM, CM)
    assert not conlattice_isomorphic(C3, all_congruences(chain(4)))


def test_conilat_is_fixed_points_of_image():
    for e in standard_corpus():
        if not e.has_involution:
            continue
        inv = e.structure.inv
        want = {p for p in all_congruences(e.structure, LAT) if involution_image(p, inv) == p}
        assert all_congruences(e.structure, ILAT).as_set() == want


def test_is_congruence_agrees():
    S = reversed_chain(4)
    for p in all_congruences(S, LAT):
        assert is_congruence(S, LAT, p)
    assert not is_congruence(S, LAT, Partition.parse("0 2|1|3"))
