import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modkit import catalog
from modkit.cyclo import zeta
from modkit.errors import NotSymmetric
from modkit.mdio import (
    BadConductor,
    DuplicateEntry,
    IndexOutOfRange,
    MdParseError,
    MdSyntaxError,
    MissingEntry,
    dump,
    load,
    parse,
    parse_text,
    serialize,
)
from modkit.moddata import from_matrices

SEMION = """\
mdfile v1
name "semion"   # trailing comment
rank 2
conductor 4
label 1 "s"
S 0 0 = 1
S 0 1 = 1
S 1 1 = -1
T 0 = 1
T 1 = z
"""


def test_parse_semion():
    f = parse(SEMION)
    assert f.rank == 2 and f.conductor == 4 and f.labels == ["0", "s"]
    md = parse_text(SEMION)
    assert md.theta[1] ** 2 == -1
    assert md.name == "semion"


def test_rank_one_file_is_five_lines(rank1):
    bare = from_matrices([[1]], [1])
    assert serialize(bare) == "mdfile v1\nrank 1\nconductor 1\nS 0 0 = 1\nT 0 = 1\n"
    # metadata adds one line each
    assert len(serialize(rank1).splitlines()) == 6


def test_conductor_eight_semion():
    text = SEMION.replace("conductor 4", "conductor 8").replace("T 1 = z", "T 1 = z^2")
    md = parse_text(text)
    assert md.theta[1] == zeta(4)
    assert md == parse_text(SEMION)
    assert "conductor 4" in serialize(md)


def test_full_matrix_and_mirror_fill():
    text = SEMION.replace("S 0 1 = 1", "S 1 0 = 1")
    assert parse_text(text) == parse_text(SEMION)
    both = SEMION.replace("S 0 1 = 1", "S 0 1 = 1\nS 1 0 = 1")
    assert parse_text(both) == parse_text(SEMION)


def test_hash_inside_string_is_not_a_comment():
    text = SEMION.replace('name "semion"', 'name "a # b"')
    assert parse_text(text).name == "a # b"


def test_asymmetric_full_matrix_fails_validation():
    text = SEMION.replace("S 0 1 = 1", "S 0 1 = 1\nS 1 0 = -1")
    with pytest.raises(NotSymmetric):
        parse_text(text)


@pytest.mark.parametrize(
    "mutate,cls,line",
    [
        (lambda t: t.replace("mdfile v1", "mdfile v2"), MdSyntaxError, 1),
        (lambda t: t.replace("conductor 4", "conductor four"), BadConductor, 4),
        (lambda t: t.replace("T 1 = z", "T 1 = z +"), MdSyntaxError, 10),
        (lambda t: t.replace("T 1 = z\n", ""), MissingEntry, 10),
        (lambda t: t.replace("S 1 1 = -1", "S 1 1 = -1\nS 1 1 = -1"), DuplicateEntry, 9),
        (lambda t: t.replace("label 1", "label 7"), IndexOutOfRange, 5),
        (lambda t: t.replace("rank 2", "rank 2\nrank 2"), DuplicateEntry, 4),
        (lambda t: t + "bogus line\n", MdSyntaxError, 11),
        (lambda t: "", MdSyntaxError, 1),
    ],
)
def test_error_lines(mutate, cls, line):
    with pytest.raises(cls) as info:
        parse(mutate(SEMION))
    assert info.value.line == line
    assert isinstance(info.value, MdParseError)
    assert f"line {line}" in str(info.value)


def test_missing_entry_reports_position():
    with pytest.raises(MissingEntry) as info:
        parse(SEMION.replace("S 1 1 = -1\n", ""))
    assert (info.value.i, info.value.j) == (1, 1)


def test_dump_and_load(tmp_path, ising):
    path = tmp_path / "ising.md"
    dump(ising, path)
    assert load(path) == ising
    assert path.read_text() == serialize(ising)


def test_fixture_text_is_canonical(ising, toric):
    for md in (ising, toric):
        assert serialize(parse_text(serialize(md))) == serialize(md)
    assert "conductor 16" in serialize(ising)
    assert "conductor 2" in serialize(toric)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7, 9, 11]), st.integers(1, 10), st.sampled_from(["semion", "antisemion", None]))
def test_round_trip_property(n, a, tail):
    from math import gcd

    a = a % n or 1
    if gcd(a, n) != 1:
        a = 1
    md = catalog.cyclic_pointed(n, a)
    if tail:
        md = catalog.deligne_product(md, catalog.preset(tail))
    text = serialize(md)
    assert parse_text(text) == md
    assert serialize(parse_text(text)) == text
