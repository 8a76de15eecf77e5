import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hochsmash.catalog import catalog_group
from hochsmash.errors import NonInvertibleGenerator, OrderExceeded
from hochsmash.exactmath import CyclotomicNumber
from hochsmash.groups import (
    close_group,
    double,
    fixed_space,
    moving_space,
    reynolds_projector,
)
from hochsmash.linalg import Matrix, kernel_basis, restrict

z4 = CyclotomicNumber.zeta(4)


def perm_matrix(p):
    n = len(p)
    return Matrix.from_rows([[1 if p[j] == i else 0 for j in range(n)] for i in range(n)], 1)


def q8_by_hand():
    # +-1, +-i, +-j, +-k with i = diag(z, -z), j = [[0, 1], [-1, 0]]
    one = Matrix.identity(2, 4)
    i = Matrix.diag([z4, -z4], 4)
    j = Matrix.from_rows([[0, 1], [-1, 0]], 4)
    k = i * j
    return {x.key() for u in (one, i, j, k) for x in (u, -u)}


def test_closure_examples():
    assert close_group([Matrix.from_rows([[-1]], 1)]).order == 2
    gens = [Matrix.diag([z4, -z4], 4), Matrix.from_rows([[0, 1], [-1, 0]], 4)]
    Q = close_group(gens)
    assert {g.key() for g in Q.elements} == q8_by_hand()
    S = close_group([perm_matrix((1, 0, 2)), perm_matrix((1, 2, 0))])
    from itertools import permutations

    assert {g.key() for g in S.elements} == {perm_matrix(p).key() for p in permutations(range(3))}


def test_closure_is_deterministic():
    a = catalog_group("bt24")
    gens = [a.elements[i] for i in a.generators]
    b = close_group(list(reversed(gens)))
    assert [g.key() for g in a.elements] == [g.key() for g in b.elements]


def test_closure_errors():
    with pytest.raises(OrderExceeded):
        close_group([Matrix.from_rows([[2]], 1)], max_order=50)
    with pytest.raises(NonInvertibleGenerator):
        close_group([Matrix.from_rows([[1, 1], [1, 1]], 1)])


def test_class_examples():
    assert len(catalog_group("trivial-2").classes()) == 1
    K = catalog_group("klein")
    assert len(K.classes()) == 4 and all(len(c.centralizer) == 4 for c in K.classes())
    sizes = sorted(c.size for c in catalog_group("q8").classes())
    assert sizes == [1, 1, 2, 2, 2]
    assert catalog_group("q8").classes()[0].members == (0,)


def test_determinant_character():
    dc = catalog_group("c2-line").determinant_character()
    assert dc.dets == (1, -1) and not dc.in_sl and dc.sl_kernel == (0,)
    assert catalog_group("q8").determinant_character().in_sl
    assert len(catalog_group("s3-perm").determinant_character().sl_kernel) == 3


def test_fixed_and_moving_examples():
    I = Matrix.identity(2, 1)
    assert fixed_space(I).dim == 2 and moving_space(I).dim == 0
    g = Matrix.diag([1, -1], 1)
    assert fixed_space(g).basis == Matrix.from_columns([[1, 0]], 2, 1)
    assert moving_space(g).basis.cols == 1 and not moving_space(g).basis[0, 0]
    assert fixed_space(-I).dim == 0 and moving_space(-I).dim == 2


def test_double():
    T = double(catalog_group("trivial-1"))
    assert T.order == 1 and T.dim == 2
    C = double(catalog_group("c2-line"))
    assert {g.key() for g in C.elements} == {Matrix.identity(2, 1).key(), (-Matrix.identity(2, 1)).key()}


def test_structural_invariants(group):
    n = group.order
    seen = set()
    for c in group.classes():
        assert c.size * len(c.centralizer) == n
        assert not seen & set(c.members)
        seen |= set(c.members)
        g = group.elements[c.rep]
        pi = reynolds_projector(g)
        assert pi * pi == pi and g * pi == pi
        F, M = fixed_space(g), moving_space(g)
        assert F.dim + M.dim == group.dim
        if M.dim:
            gm = restrict(g, M.basis)
            assert kernel_basis(gm - Matrix.identity(M.dim, group.order_m)).cols == 0
        for h in c.centralizer:
            restrict(group.elements[h], F.basis)
            restrict(group.elements[h], M.basis)
    assert seen == set(range(n))
    assert double(group).determinant_character().in_sl


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["q8", "bt24", "s3-sumzero", "c4-sl2"]), st.data())
def test_group_law(name, data):
    G = catalog_group(name)
    a, b, c = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == 0
    assert G.elements[G.mul(a, b)] == G.elements[a] * G.elements[b]
