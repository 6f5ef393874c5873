from itertools import combinations

import numpy as np
import pytest

from modkit import catalog
from modkit.catalog import MetricGroup, cyclic_pointed, deligne_product, metric_group_pointed
from modkit.errors import GradingInconsistent
from modkit.structure import (
    Subcat,
    SubcatClass,
    adjoint_subcategory,
    centralizer,
    classify_subcategory,
    generated,
    invariant_factors,
    invertibles,
    is_fermion,
    is_mnsd,
    is_modular,
    lattice,
    pointed_lattice,
    pointed_subcategory,
    subcat_fpdim,
    subcat_fpdim_float,
    trivial,
    universal_grading,
    whole,
)


def float_centralizer(md, K):
    """Brute force: Y centralizes K when |s_XY - d_X d_Y| is tiny for all X in K."""
    S = md.s_float
    d = S[0].real
    return [y for y in range(md.rank) if all(abs(S[x, y] - d[x] * d[y]) < 1e-9 for x in K)]


def is_fusion_closed(md, members):
    N = md.fusion.N
    ms = set(members)
    return all(set(np.nonzero(N[a, b])[0]) <= ms for a in ms for b in ms)


@pytest.mark.parametrize("name", ["semion", "toric", "ising"])
def test_centralizer_matches_float_oracle_on_every_subcategory(name):
    md = catalog.preset(name)
    for K in lattice(md):
        assert list(centralizer(md, K).members) == float_centralizer(md, K)


def test_centralizer_oracle_on_corpus_sample(corpus):
    for md in corpus[::41]:
        for K in lattice(md, limit=20):
            assert list(centralizer(md, K).members) == float_centralizer(md, K), md.name


@pytest.mark.parametrize("name", ["toric", "ising", "semion"])
def test_lattice_equals_powerset_filter(name):
    md = catalog.preset(name)
    n = md.rank
    brute = {
        (0,) + c
        for r in range(n)
        for c in combinations(range(1, n), r)
        if is_fusion_closed(md, (0,) + c)
    }
    assert {K.members for K in lattice(md)} == brute


def test_lattice_powerset_on_product():
    md = deligne_product(catalog.semion(), catalog.toric_code())
    brute = {
        (0,) + c
        for r in range(md.rank)
        for c in combinations(range(1, md.rank), r)
        if is_fusion_closed(md, (0,) + c)
    }
    assert {K.members for K in lattice(md)} == brute


def test_generated_and_basic_subcats(ising):
    sg = ising.labels.index("sigma")
    f = ising.labels.index("f")
    assert generated(ising, [sg]) == whole(ising)
    assert generated(ising, [f]).labels() == ["1", "f"]
    assert trivial(ising).is_trivial()
    assert adjoint_subcategory(ising).labels() == ["1", "f"]
    assert pointed_subcategory(ising).labels() == ["1", "f"]


@pytest.mark.parametrize(
    "orders,expected",
    [
        ([], ()),
        ([1], ()),
        ([1, 2], (2,)),
        ([1, 2, 2, 2], (2, 2)),
        ([1, 2, 4, 4, 2, 4, 4, 2], (2, 4)),
        ([1] + [3] * 8, (3, 3)),
        ([1, 2, 3, 3, 6, 6], (6,)),
        ([1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6], (2, 6)),
    ],
)
def test_invariant_factors(orders, expected):
    assert invariant_factors(orders) == expected


def test_invertibles_group_structure(toric):
    grp = invertibles(toric)
    assert grp.order == 4 and grp.invariant_factors == (2, 2)
    assert grp.describe() == "Z2 x Z2"
    e, m, em = (toric.labels.index(x) for x in ("e", "m", "em"))
    assert grp.mul(e, m) == em
    z4 = invertibles(metric_group_pointed(MetricGroup.cyclic(4, 1)))
    assert z4.invariant_factors == (4,)
    assert invertibles(catalog.trivial()).describe() == "trivial"


def test_universal_grading_of_ising(ising):
    gr = universal_grading(ising)
    assert gr.size == 2
    assert sorted(ising.labels[i] for i in gr.trivial_component()) == ["1", "f"]
    assert [len(c) for c in gr.components] == [2, 1]


def test_universal_grading_pointed_is_whole_group():
    md = cyclic_pointed(15, 2)
    gr = universal_grading(md)
    assert gr.size == 15
    assert all(len(c) == 1 for c in gr.components)
    assert sorted(len(gr.subgroup_of_order(m)) for m in (1, 3, 5, 15)) == [1, 3, 5, 15]


def test_grading_check_rejects_bad_assignment(ising):
    from dataclasses import replace

    from modkit.structure import _check_grading

    gr = universal_grading(ising)
    broken = replace(gr, components=(gr.components[0][:1], gr.components[0][1:] + gr.components[1]))
    with pytest.raises(GradingInconsistent):
        _check_grading(ising, broken)


def test_classification(semion, toric, ising):
    assert classify_subcategory(semion, whole(semion)) is SubcatClass.MODULAR
    e, em = toric.labels.index("e"), toric.labels.index("em")
    assert classify_subcategory(toric, generated(toric, [e])) is SubcatClass.SYMMETRIC_TANNAKIAN
    assert classify_subcategory(toric, generated(toric, [em])) is SubcatClass.SYMMETRIC_SUPER_TANNAKIAN
    f = ising.labels.index("f")
    assert classify_subcategory(ising, generated(ising, [f])) is SubcatClass.SYMMETRIC_SUPER_TANNAKIAN
    assert is_fermion(ising, f) and is_fermion(toric, em) and not is_fermion(toric, e)
    # the unit is both symmetric and modular
    assert classify_subcategory(ising, trivial(ising)) is SubcatClass.SYMMETRIC_TANNAKIAN
    assert is_modular(ising, trivial(ising))


def test_degenerate_subcategory():
    md = deligne_product(catalog.toric_code(), catalog.semion())
    e = md.labels.index("(e,1)")
    s = md.labels.index("(1,1)")
    K = generated(md, [e, s])
    assert classify_subcategory(md, K) is SubcatClass.DEGENERATE


def test_fpdims_and_mnsd(ising):
    assert subcat_fpdim(ising, whole(ising)) == 4
    assert abs(subcat_fpdim_float(ising, whole(ising)) - 4) < 1e-12
    assert is_mnsd(cyclic_pointed(7, 1))
    assert not is_mnsd(ising)


def test_pointed_lattice_is_subgroup_lattice():
    md = metric_group_pointed(MetricGroup((3, 3), ("1/3", "1/3")))
    sizes = sorted(len(K) for K in pointed_lattice(md))
    assert sizes == [1, 3, 3, 3, 3, 9]


def test_subcat_algebra(toric):
    e, m = toric.labels.index("e"), toric.labels.index("m")
    A, B = generated(toric, [e]), generated(toric, [m])
    assert (A & B).is_trivial()
    assert A <= whole(toric) and not A <= B
    assert len(Subcat(toric, [0, e])) == 2 and e in A
    assert hash(A) == hash(generated(toric, [e]))
