from itertools import product

import pytest

from hochsmash.catalog import catalog_group
from hochsmash.closedform import (
    COHOMOLOGY,
    HOMOLOGY,
    cohomology_series_direct,
    cohomology_series_via_duality,
    duality_check,
    homology_series,
    invariant_molien,
    rational_form,
    twisted_homology_series,
)
from hochsmash.exactmath import laurent_expand
from hochsmash.groups import double

N = 6


def monomial_invariant_count(weights, modulus, degree):
    # monomials x^a y^b (one exponent per weight) fixed by a diagonal cyclic generator
    return sum(
        1 for exps in product(range(degree + 1), repeat=len(weights))
        if sum(exps) == degree and sum(w * e for w, e in zip(weights, exps)) % modulus == 0
    )


def test_trivial_line():
    G = catalog_group("trivial-1")
    H = homology_series(G, N)
    assert H.rows() == [[1] * (N + 1), [0] + [1] * N]
    C = cohomology_series_direct(G, N)
    assert C.offset == -1
    assert C.rows() == [[0] + [1] * (N + 1), [1] * (N + 2)]
    assert twisted_homology_series(G, N).rows() == H.rows()


def test_c2_line_tables():
    G = catalog_group("c2-line")
    assert homology_series(G, 4).rows() == [[2, 0, 1, 0, 1], [0, 0, 1, 0, 1]]
    C = cohomology_series_direct(G, 4, per_class=True)
    assert [C[n].window(0, 4) for n in (0, 1)] == [[1, 0, 1, 0, 1]] * 2
    assert all(s.is_zero() for s in C.per_class[1])
    # x^D (x) det^-1 is invariant exactly when (-1)^D * (-1)^-1 = 1, i.e. D odd
    odd = [D % 2 for D in range(5)]
    assert twisted_homology_series(G, 4).row(0) == odd


def test_c3_line_nontrivial_classes_vanish_in_cohomology():
    C = cohomology_series_direct(catalog_group("c3-line"), N, per_class=True)
    reps = sorted(C.per_class)
    assert not all(s.is_zero() for s in C.per_class[reps[0]])
    for rep in reps[1:]:
        assert all(s.is_zero() for s in C.per_class[rep])


def test_molien_examples():
    assert invariant_molien(catalog_group("trivial-2"), N).window(0, N) == list(range(1, N + 2))
    assert invariant_molien(catalog_group("c2-line"), N).window(0, N) == [1, 0, 1, 0, 1, 0, 1]
    c4 = invariant_molien(catalog_group("c4-sl2"), 8)
    assert c4[4] == 3
    assert c4.window(0, 8) == [monomial_invariant_count((1, 3), 4, D) for D in range(9)]
    c3 = invariant_molien(catalog_group("c3-sl2"), 8)
    assert c3.window(0, 8) == [monomial_invariant_count((1, 2), 3, D) for D in range(9)]


def test_q8_molien_against_known_series():
    # invariants of Q8 in SL(2) have generators in degrees 4, 4, 6 with a relation in degree 12
    M = invariant_molien(catalog_group("q8"), 12)
    assert M.window(0, 12) == [1, 0, 0, 0, 2, 0, 1, 0, 3, 0, 2, 0, 4]


def test_homology_h0_counts_classes(group):
    assert homology_series(group, 0).row(0)[0] == len(group.classes())


def test_sl_groups_twisted_equals_plain(group):
    if group.determinant_character().in_sl:
        assert twisted_homology_series(group, N).rows() == homology_series(group, N).rows()


def test_duality_route_is_shift_of_direct_route(group):
    direct = cohomology_series_direct(group, N, per_class=True)
    dual = cohomology_series_via_duality(group, N, per_class=True)
    from hochsmash.groups import fixed_space

    for c in group.classes():
        k = fixed_space(group.elements[c.rep]).dim
        for n in range(group.dim + 1):
            lhs = dual.per_class[c.rep][n]
            rhs = direct.per_class[c.rep][n].shift(k)
            assert lhs == rhs


def test_duality_examples():
    r = duality_check(catalog_group("trivial-1"), N)
    assert r.twisted_ok and r.untwisted_ok
    r = duality_check(catalog_group("q8"), 8)
    assert r.untwisted_ok and r.in_sl
    r = duality_check(catalog_group("c2-line"), N)
    assert r.twisted_ok and r.untwisted_match[0] is False and not r.in_sl
    assert r.first_untwisted_mismatch[0] == 0
    with pytest.raises(ValueError):
        duality_check(catalog_group("q8"), 1)


def test_doubled_groups_satisfy_untwisted_duality():
    for name in ("c2-line", "s3-sumzero", "klein", "c3-line"):
        assert duality_check(double(catalog_group(name)), N).untwisted_ok


def test_cohomology_classes_outside_sl_kernel_vanish():
    G = catalog_group("s3-sumzero")
    C = cohomology_series_direct(G, N, per_class=True)
    dets = G.determinant_character().dets
    for rep, series in C.per_class.items():
        if dets[rep] != 1:
            assert all(s.is_zero() for s in series)


@pytest.mark.parametrize("name", ["c2-line", "trivial-2", "c4-sl2", "s3-sumzero"])
@pytest.mark.parametrize("side", [HOMOLOGY, COHOMOLOGY])
def test_rational_form_expands_to_series(name, side):
    G = catalog_group(name)
    table = (homology_series if side == HOMOLOGY else cohomology_series_direct)(G, 10)
    for n in range(G.dim + 1):
        f = rational_form(G, side, n)
        assert laurent_expand(f, table.offset, 10) == table[n]


def test_rational_form_c2():
    f = rational_form(catalog_group("c2-line"), HOMOLOGY, 0)
    assert str(f.num) and f.den.degree == 2


def test_negative_truncation():
    with pytest.raises(ValueError):
        homology_series(catalog_group("c2-line"), -1)
