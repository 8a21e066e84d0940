from array import array

import pytest

from lattica import boolean, chain, m_lattice
from lattica import kernels
from lattica._pykernels import restricted_growth_strings
from lattica.corpus import standard_corpus

from oracles import canon, compatible, set_partitions, lattice_ops, order_from_covers

BACKENDS = kernels.available_backends()

# Bell numbers 0..8
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


@pytest.fixture(params=sorted(BACKENDS))
def impl(request):
    return BACKENDS[request.param]


def _tables(L, maps=()):
    join, meet = L.flat_tables()
    return join, meet, array("i", [v for f in maps for v in f])


def _blocks(labels):
    groups = {}
    for x, lab in enumerate(labels):
        groups.setdefault(lab, []).append(x)
    return canon(groups.values())


def test_selected_backend_is_known():
    assert kernels.BACKEND in BACKENDS


@pytest.mark.parametrize("n", range(1, 9))
def test_rgs_counts_bell(n):
    seen = list(restricted_growth_strings(n))
    assert len(seen) == len(set(seen)) == BELL[n]


def test_principal_closure_chain(impl):
    L = chain(3)
    j, m, u = _tables(L)
    assert tuple(impl.principal_closure(3, j, m, u, [(0, 1)])) == (0, 0, 1)


def test_principal_closure_diagonal(impl):
    L = m_lattice(3)
    j, m, u = _tables(L)
    assert tuple(impl.principal_closure(5, j, m, u, [(2, 2)])) == (0, 1, 2, 3, 4)
    assert tuple(impl.principal_closure(5, j, m, u, [(2, 3)])) == (0,) * 5


def test_join_labels(impl):
    p = array("i", [0, 0, 1])
    q = array("i", [0, 1, 1])
    assert tuple(impl.join_labels(p, q)) == (0, 0, 0)
    assert tuple(impl.join_labels(p, array("i", [0, 1, 2]))) == (0, 0, 1)


def test_compatible_partitions_match_naive(impl):
    for e in standard_corpus():
        if e.n > 7:
            continue
        L = e.lattice
        maps = [e.structure.inv] if e.has_involution else []
        j, m, u = _tables(L, maps)
        got = {_blocks(lab) for lab in impl.compatible_partitions(L.n, j, m, u)}
        (jd, md), _ = lattice_ops(L.n, order_from_covers(L.n, L.covers()))
        want = {canon(p) for p in set_partitions(range(L.n)) if compatible(p, L.n, (jd, md), maps)}
        assert got == want, e.name


def test_backends_agree():
    if len(BACKENDS) < 2:
        pytest.skip("compiled backend not built")
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for e in standard_corpus():
        L = e.lattice
        maps = [e.structure.inv] if e.has_involution else []
        j, m, u = _tables(L, maps)
        for a, b in L.covers():
            pairs = [(a, b)]
            assert tuple(py.principal_closure(L.n, j, m, u, pairs)) == \
                tuple(cy.principal_closure(L.n, j, m, u, pairs))
        if L.n <= 7:
            assert list(map(tuple, py.compatible_partitions(L.n, j, m, u))) == \
                list(map(tuple, cy.compatible_partitions(L.n, j, m, u)))


def test_is_compatible(impl):
    L = boolean(2).lattice
    j, m, u = _tables(L)
    assert impl.is_compatible(array("i", [0, 0, 1, 1]), 4, j, m, u)
    assert not impl.is_compatible(array("i", [0, 0, 1, 2]), 4, j, m, u)
