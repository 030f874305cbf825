from math import comb

import pytest

from bbwspin.bbw import (
    ACYCLIC,
    BundleExpr,
    GradedRepList,
    SpaceParams,
    cohomology,
    cohomology_gr,
    cohomology_ogr_hom_spinors,
    cohomology_ogr_schur_spinor,
    dual_spinor_relabel,
    hom_spinors_closed_form,
    schur_spinor_closed_form,
    schur_spinor_generic,
)
from bbwspin.diagrams import YoungDiagram, enumerate_diagrams, expand_horizontal
from bbwspin.weyl import RepLabel, dim_gl

from oracles import bfs_dominantize, brute_inversions

Y = YoungDiagram
S = RepLabel.half_spinor
K = RepLabel.trivial()


def params(N_values=(6, 7, 8, 9, 10)):
    for N in N_values:
        for k in range(1, (N - 2) // 2 + 1):
            yield SpaceParams(N, k)


def test_space_params():
    sp = SpaceParams(8, 2)
    assert (sp.n, sp.odd, str(sp.lie_type), sp.genus) == (4, False, "D4", 3)
    assert str(SpaceParams(7, 2).lie_type) == "B3"
    assert SpaceParams(7, 2).genus is None


def test_graded_rep_list_merges():
    g = GradedRepList(((1, K, 1), (0, S(1), 1), (1, K, 2)))
    assert g.entries == ((0, S(1), 1), (1, K, 3))
    assert g.degrees == [0, 1]
    assert not ACYCLIC


@pytest.mark.parametrize("sign", [1, -1])
def test_schur_spinor_empty_shape_is_global_sections(sign):
    for sp in params((6, 8, 10)):
        assert cohomology_ogr_schur_spinor(sp, Y(), sign) == GradedRepList(((0, S(sign), 1),))


def test_schur_spinor_one_row_expansion():
    for sp in params((6, 8, 10)):
        gap = sp.N - 2 * sp.k
        got = cohomology_ogr_schur_spinor(sp, Y((gap + 1,)), 1)
        assert got == GradedRepList(((gap, S(-1), 1),))


def test_schur_spinor_single_box_acyclic():
    for sp in params():
        assert cohomology_ogr_schur_spinor(sp, Y((1,))) == ACYCLIC


def test_schur_spinor_type_b_label_unsigned():
    sp = SpaceParams(9, 2)
    assert cohomology_ogr_schur_spinor(sp, Y()) == GradedRepList(((0, S(0), 1),))


def test_generic_matches_closed_form_everywhere():
    for sp in params():
        for beta in enumerate_diagrams(sp.N - sp.k, sp.k):
            for sign in (1, -1):
                generic = schur_spinor_generic(sp, beta, sign)
                assert generic == schur_spinor_closed_form(sp, beta, sign)
                assert len(generic.degrees) <= 1


def test_generic_matches_bfs_oracle_small():
    # the weight of Sigma^beta U (x) S plus rho, dominantized by BFS
    for sp in (SpaceParams(6, 1), SpaceParams(7, 2), SpaceParams(8, 2)):
        fam = sp.lie_type.family
        rho2 = [2 * (sp.n - i) + (1 if sp.odd else 0) for i in range(1, sp.n + 1)]
        for beta in enumerate_diagrams(sp.N - sp.k, sp.k):
            b = beta.padded(sp.k)
            w = [-2 * b[sp.k - 1 - i] + 1 for i in range(sp.k)] + [1] * (sp.n - sp.k)
            res = bfs_dominantize(fam, tuple(x + r for x, r in zip(w, rho2)))
            got = schur_spinor_generic(sp, beta)
            if res is None:
                assert got == ACYCLIC
            else:
                assert got.degrees == [res[1]]


def test_degree_formula_for_symmetric_expansions():
    for sp in params((6, 8, 10)):
        gap = sp.N - 2 * sp.k
        for nu in enumerate_diagrams(sp.k, sp.k, symmetric_only=True):
            s = nu.diag_length
            beta = expand_horizontal(nu, gap)
            got = cohomology_ogr_schur_spinor(sp, beta, 1)
            assert got == GradedRepList(((s * gap + (nu.size - s) // 2, S((-1) ** s), 1),))


def test_schur_spinor_rejects_bad_input():
    with pytest.raises(ValueError):
        cohomology_ogr_schur_spinor(SpaceParams(5, 2), Y())
    with pytest.raises(ValueError):
        cohomology_ogr_schur_spinor(SpaceParams(6, 1), Y((1, 1)))
    with pytest.raises(ValueError):
        cohomology_ogr_schur_spinor(SpaceParams(6, 1), Y((6,)))
    with pytest.raises(ValueError):
        cohomology_ogr_schur_spinor(SpaceParams(6, 1), Y(), 0)


def test_hom_spinors_examples():
    sp = SpaceParams(8, 1)
    assert cohomology_ogr_hom_spinors(sp, Y(), 1, 1) == GradedRepList(((0, K, 1),))
    assert cohomology_ogr_hom_spinors(sp, Y((1,)), 1, -1) == GradedRepList(((1, K, 1),))
    for s1 in (1, -1):
        for s2 in (1, -1):
            assert cohomology_ogr_hom_spinors(SpaceParams(10, 2), Y((1, 1)), s1, s2) == ACYCLIC


@pytest.mark.parametrize("N", [7, 8, 9, 10, 11, 12])
def test_hom_spinors_survivors(N):
    for k in range(1, (N - 3) // 2 + 1):
        sp = SpaceParams(N, k)
        survivors = set()
        for beta in enumerate_diagrams(k + 1, k):
            if beta.width > beta.height + 1:
                continue
            for s1 in (1, -1):
                for s2 in (1, -1):
                    got = cohomology_ogr_hom_spinors(sp, beta, s1, s2)
                    assert got == hom_spinors_closed_form(sp, beta, s1, s2)
                    if got:
                        survivors.add(beta)
                        (t, label, mult), = got.entries
                        assert (label, mult, t) == (K, 1, beta.width)
                        if not sp.odd:
                            assert (-1) ** t == s1 * s2
        assert survivors == {Y(), Y((1,)), Y((2,))}


def test_hom_spinors_rejects_bad_input():
    with pytest.raises(ValueError):
        cohomology_ogr_hom_spinors(SpaceParams(6, 2), Y())
    with pytest.raises(ValueError):
        cohomology_ogr_hom_spinors(SpaceParams(8, 1), Y((3,)))
    with pytest.raises(ValueError):
        cohomology_ogr_hom_spinors(SpaceParams(8, 1), Y((1, 1)))


def test_cohomology_gr_examples():
    assert cohomology_gr(6, 2, Y(), 0) == GradedRepList(((0, K, 1),))
    assert cohomology_gr(6, 2, Y(), -1) == ACYCLIC
    with pytest.raises(ValueError):
        cohomology_gr(6, 2, Y((1,) * 5))


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_cohomology_gr_projective_space(N):
    # Gr(1, N) is P^(N-1); H^*(O(d)) is classical
    for d in range(-N - 3, 4):
        got = cohomology_gr(N, 1, Y(), d)
        if d >= 0:
            (deg, label, _), = got.entries
            assert deg == 0 and _dim(label, N) == comb(N - 1 + d, d)
        elif d > -N:
            assert got == ACYCLIC
        else:
            (deg, label, _), = got.entries
            assert deg == N - 1 and _dim(label, N) == comb(-d - 1, N - 1)


def _dim(label, N):
    if label == K:
        return 1
    return dim_gl(c // 2 for c in label.weight.doubled)


def test_cohomology_gr_plucker_sections():
    for N in range(3, 8):
        for k in range(1, N):
            (deg, label, _), = cohomology_gr(N, k, Y(), 1).entries
            assert deg == 0 and _dim(label, N) == comb(N, k)


def test_cohomology_gr_matches_brute_force():
    for N, k in ((5, 2), (6, 2), (6, 3)):
        for gamma in enumerate_diagrams(3, N - k):
            for d in (-2, -1, 0, 1):
                w = [d] * k + list(gamma.padded(N - k))
                shifted = [x + N - 1 - i for i, x in enumerate(w)]
                got = cohomology_gr(N, k, gamma, d)
                if len(set(shifted)) < N:
                    assert got == ACYCLIC
                else:
                    _, length = brute_inversions(shifted)
                    assert got.degrees == [length]


def test_dual_spinor_relabel_examples():
    assert dual_spinor_relabel(SpaceParams(6, 1), 1) == (1, -1)
    assert dual_spinor_relabel(SpaceParams(8, 1), 1) == (-1, -1)
    assert dual_spinor_relabel(SpaceParams(8, 1), 1, branching=True) == (0, -1)
    with pytest.raises(ValueError):
        dual_spinor_relabel(SpaceParams(7, 1), 1)


def test_cohomology_dispatch():
    sp = SpaceParams(8, 2)
    bundle = BundleExpr("U", Y((5,)), spinor_right=1)
    assert cohomology(bundle, "ogr", 8, 2) == cohomology_ogr_schur_spinor(sp, Y((5,)), 1)
    hom = BundleExpr("U", Y((1,)), spinor_left=(True, 1), spinor_right=-1)
    assert cohomology(hom, "ogr", 9, 2) == GradedRepList(((1, K, 1),))
    gr = BundleExpr("Uperp", Y(), twist=-1)
    assert cohomology(gr, "gr", 6, 2) == ACYCLIC
    with pytest.raises(ValueError):
        cohomology(gr, "ogr", 6, 2)
    with pytest.raises(ValueError):
        BundleExpr("V", Y())
