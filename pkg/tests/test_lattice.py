import pytest

from lattica import (
    FiniteLattice,
    boolean,
    chain,
    dual,
    filters,
    from_cover_relation,
    ideals,
    is_distributive,
    is_isomorphic,
    is_modular,
    m_lattice,
)
from lattica.corpus import n5, standard_corpus
from lattica.errors import CyclicOrder, NotALattice, Unbounded
from lattica.lattice import from_leq, modularity_witness, relabel

from oracles import filters_exhaustive, iso_exists, lattice_ops, order_from_covers

HEXAGON = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]


def test_chain_from_covers():
    L = from_cover_relation(3, [(0, 1), (1, 2)])
    assert L.is_chain()
    assert (L.bottom, L.top) == (0, 2)
    assert L.join[0][2] == 2 and L.meet[0][2] == 0


def test_diamond_from_covers():
    L = from_cover_relation(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert L.join[1][2] == 3 and L.meet[1][2] == 0
    assert is_isomorphic(L, boolean(2).lattice) is not None


def test_hexagon_not_a_lattice():
    # oracle: first pair without a unique least upper bound
    _, bad = lattice_ops(6, order_from_covers(6, HEXAGON))
    assert bad is not None
    with pytest.raises(NotALattice) as exc:
        from_cover_relation(6, HEXAGON)
    assert set(exc.value.pair) == {1, 2}
    assert set(exc.value.bounds) == {3, 4}


def test_cycle_rejected():
    with pytest.raises(CyclicOrder):
        from_cover_relation(3, [(0, 1), (1, 2), (2, 0)])


def test_unbounded_rejected():
    with pytest.raises(Unbounded):
        from_cover_relation(3, [(0, 2)])


def test_trivial_lattice_allowed():
    L = from_cover_relation(1, [])
    assert L.bottom == L.top == 0


def test_dual_of_chain_is_chain():
    assert is_isomorphic(chain(3), dual(chain(3))) is not None


def test_double_dual_is_identity():
    for e in standard_corpus():
        assert dual(dual(e.lattice)) == e.lattice


def test_dual_of_n5_swaps_bounds():
    N = n5().lattice
    D = dual(N)
    assert (D.bottom, D.top) == (N.top, N.bottom)
    f = is_isomorphic(N, D)
    assert f is not None
    assert f[N.bottom] == D.bottom


def test_filters_of_chain():
    fam = filters(chain(3))
    assert sorted(map(sorted, fam)) == [[0, 1, 2], [1, 2], [2]]


def test_filters_of_square_exhaustive():
    B = boolean(2).lattice
    assert len(filters_exhaustive(4, B.covers())) == 4
    assert len(filters(B, exhaustive=True)) == 4


def test_ideals_are_filters_of_dual():
    for e in standard_corpus()[:14]:
        L = e.lattice
        assert set(ideals(L)) == set(filters(dual(L)))


def test_filters_all_principal():
    for e in standard_corpus():
        L = e.lattice
        fam = filters(L, exhaustive=True)
        assert len(fam) == L.n
        assert set(fam) == {L.upset(a) for a in range(L.n)}
        assert set(fam) == set(filters_exhaustive(L.n, L.covers()))


def test_distributivity_and_modularity():
    assert is_distributive(boolean(2).lattice)
    M3 = m_lattice(3)
    assert is_modular(M3) and not is_distributive(M3)
    N = n5().lattice
    assert not is_modular(N)
    x, y, z = modularity_witness(N)
    # modular law x <= z => x ∨ (y ∧ z) = (x ∨ y) ∧ z fails at the witness
    assert N.leq(x, z)
    assert N.join[x][N.meet[y][z]] != N.meet[N.join[x][y]][z]


@pytest.mark.parametrize("L1, L2", [
    (lambda: m_lattice(3), lambda: chain(5)),
    (lambda: boolean(2).lattice, lambda: chain(4)),
])
def test_non_isomorphic_pairs(L1, L2):
    a, b = L1(), L2()
    assert not iso_exists(a.n, a.covers(), b.n, b.covers())
    assert is_isomorphic(a, b) is None


def test_isomorphism_preserves_operations():
    L = boolean(2).lattice
    P = relabel(L, (3, 1, 2, 0))
    f = is_isomorphic(L, P)
    assert f is not None
    for x in range(4):
        for y in range(4):
            assert f[L.join[x][y]] == P.join[f[x]][f[y]]
            assert f[L.meet[x][y]] == P.meet[f[x]][f[y]]


def test_isomorphism_is_lexicographically_least():
    # the 3-chain has exactly one automorphism
    assert is_isomorphic(chain(3), chain(3)) == (0, 1, 2)
    # the square has two; the identity is least
    assert is_isomorphic(boolean(2).lattice, boolean(2).lattice) == (0, 1, 2, 3)


def test_from_leq_matches_covers():
    L = from_leq(4, lambda x, y: x & y == x)
    assert L == boolean(2).lattice


def test_immutable():
    L = chain(2)
    with pytest.raises(AttributeError):
        L.n = 5
    assert isinstance(L, FiniteLattice)
