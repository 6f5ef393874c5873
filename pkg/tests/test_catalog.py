from fractions import Fraction

import pytest

from modkit import catalog
from modkit.catalog import MetricGroup, deligne_product, metric_group_pointed, standard_corpus
from modkit.cyclo import zeta
from modkit.errors import DegenerateForm, IllDefinedForm


def test_presets_load():
    for name in catalog.PRESETS:
        md = catalog.preset(name)
        assert md.rank in (1, 2, 3, 4)
    with pytest.raises(ValueError):
        catalog.preset("fibonacci")


def test_semion_twists():
    assert catalog.semion().theta[1] == zeta(4)
    assert catalog.antisemion().theta[1] == zeta(4, 3)


def test_toric_from_group_matches_fixture(toric):
    from modkit.theorems import isomorphic

    assert isomorphic(metric_group_pointed(catalog.toric_code_group()), toric)


def test_metric_group_forms():
    mg = MetricGroup.cyclic(5, 2)
    assert mg.q((1,)) == Fraction(2, 5) and mg.q((3,)) == Fraction(3, 5)
    assert mg.b((1,), (1,)) == Fraction(4, 5)
    assert MetricGroup.cyclic(4, 1).q((1,)) == Fraction(1, 8)
    mg.check()


def test_metric_group_errors():
    with pytest.raises(IllDefinedForm):
        MetricGroup((3,), (Fraction(1, 2),)).check()
    with pytest.raises(DegenerateForm):
        MetricGroup((5,), (Fraction(0),)).check()
    with pytest.raises(DegenerateForm):
        MetricGroup((2, 2), (0, 0)).check()
    with pytest.raises(ValueError):
        MetricGroup((2, 2), (0,))


def test_deligne_product_layout(semion, ising):
    P = deligne_product(semion, ising)
    assert P.rank == 6 and P.D2 == 8
    assert P.labels[4] == "(1,f)" and P.name == "semion x Ising"
    assert P.theta[5] == semion.theta[1] * ising.theta[2]


def test_standard_corpus_small():
    c = standard_corpus(5)
    names = [md.name for md in c]
    assert names[:5] == ["trivial", "semion", "antisemion", "toric code", "Ising"]
    assert "Z5[a=2]" in names and "Z5[a=2] x semion" in names
    assert "Z3xZ3[1,2]" in names
    assert len(set(names)) == len(names)
    with pytest.raises(ValueError):
        standard_corpus(0)


def test_standard_corpus_shape(corpus):
    assert len(corpus) >= 60
    assert max(md.rank for md in corpus) <= 50
