import math

import pytest
from hypothesis import given, strategies as st

from zetakit.errors import CapExceeded, MalformedToken, ShapeViolation
from zetakit.paths import (
    ballot,
    count_paths,
    east_counts,
    enumerate_paths,
    lattice,
    parse_path,
    path_from_json,
    path_to_json,
    render_path,
    rises,
    segment,
    sign_of,
    signed_ballot,
    signed_lattice,
    strip_signs,
    valleys,
)


def test_parse_golden_square():
    p = parse_path("NEEEENNNNNEE", lattice(6, 6))
    assert len(p.steps) == 12
    assert sign_of(p) == 1
    assert render_path(p) == "NEEEENNNNNEE"


def test_parse_golden_signed():
    p = parse_path("E-EENNNNNE", signed_lattice(5))
    assert sign_of(p) == -1
    assert p.sign_pos == 0
    assert render_path(p) == "E-EENNNNNE"


def test_parse_ballot_prefix_violation():
    with pytest.raises(ShapeViolation):
        parse_path("EN", ballot(2))


def test_parse_bad_token():
    with pytest.raises(MalformedToken):
        parse_path("NXE", lattice(1, 1))


def test_parse_shape_errors():
    with pytest.raises(ShapeViolation):
        parse_path("NNEE", lattice(3, 1))
    with pytest.raises(ShapeViolation):
        # a leading East step of a signed kind must carry a sign
        parse_path("EENNNNNE", signed_lattice(4))
    with pytest.raises(ShapeViolation):
        # the sign may only sit on the leading East step
        parse_path("NE-NN", signed_lattice(3))
    with pytest.raises(ShapeViolation):
        parse_path("NNE", signed_ballot(2))


def test_rises_golden():
    assert rises(parse_path("NEEEENNNNNEE", lattice(6, 6))) == [2, 3, 4, 5]
    assert rises(parse_path("NNNNEENENEEE", lattice(6, 6))) == [1, 2, 3]
    assert rises(parse_path("NENENE", lattice(3, 3))) == []


def test_valleys_golden():
    assert valleys(parse_path("NNENENNENENE", ballot(12))) == [
        (1, 3), (2, 4), (3, 6), (4, 7), (5, 8)]
    assert valleys(parse_path("NENNNE", ballot(6))) == [(1, 2), (2, 5)]
    assert valleys(parse_path("NNNN", ballot(4))) == []
    # no trailing convention for lattice kinds
    assert valleys(parse_path("NNNNEENENEEE", lattice(6, 6))) == [(2, 5), (3, 6)]


def test_east_counts_golden():
    assert east_counts(parse_path("NEEEENNNNNEE", lattice(6, 6))) == (0, 4, 4, 4, 4, 4)
    assert east_counts(parse_path("E+NNENENEENN", signed_lattice(6))) == (1, 1, 2, 3, 5, 5)
    assert east_counts(parse_path("NNNN", lattice(0, 4))) == (0, 0, 0, 0)


def test_segment_golden():
    mu = (2, 1, 0, -1, -2, 1)
    assert segment("right_to_left", -1, 0, mu) == "EN"
    assert segment("left_to_right", 1, 1, mu) == "ENN"
    assert segment("left_to_right", 1, 4, mu) == ""


def test_enumerate_signed_small():
    got = [render_path(p) for p in enumerate_paths(signed_lattice(2))]
    assert got == ["E+NN", "E-NN", "NEN", "NNE"]
    got = [render_path(p) for p in enumerate_paths(signed_ballot(2))]
    assert got == ["NEN", "NNE+", "NNE-", "NNN"]


@pytest.mark.parametrize("n", range(1, 9))
def test_counts_match_binomials(n):
    assert count_paths(lattice(n, n)) == math.comb(2 * n, n)
    assert count_paths(ballot(2 * n)) == math.comb(2 * n, n)
    assert count_paths(lattice(n - 1, n)) == math.comb(2 * n - 1, n - 1)
    assert count_paths(ballot(2 * n - 1)) == math.comb(2 * n - 1, n - 1)


@pytest.mark.parametrize("kind", [
    lattice(3, 3), lattice(2, 3), ballot(6), ballot(7),
    signed_lattice(3), signed_ballot(3),
])
def test_enumeration_complete_and_sorted(kind):
    seen = [render_path(p) for p in enumerate_paths(kind)]
    assert len(seen) == len(set(seen)) == count_paths(kind)
    assert seen == sorted(seen)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_paths(lattice(20, 20), cap=100))


@pytest.mark.parametrize("kind", [
    lattice(4, 4), ballot(8), signed_lattice(4), signed_ballot(4),
])
def test_parse_render_roundtrip(kind):
    for p in enumerate_paths(kind):
        assert parse_path(render_path(p), kind) == p
        assert path_from_json(path_to_json(p)) == p


@pytest.mark.parametrize("n", range(2, 7))
def test_valley_invariants(n):
    for p in enumerate_paths(ballot(2 * n)):
        vs = valleys(p)
        k = sum(1 for s in p.steps if s == "E")
        m = len(p.steps) - k
        assert len(vs) <= k + 1
        for i, j in vs:
            assert 1 <= i <= k
            assert i < j <= m + 1
        assert [v[0] for v in vs] == sorted({v[0] for v in vs})


def test_east_counts_weakly_increasing():
    for p in enumerate_paths(lattice(4, 4)):
        pi = east_counts(p)
        assert all(a <= b for a, b in zip(pi, pi[1:]))
        assert pi[-1] <= 4


def test_strip_signs_kinds():
    p = parse_path("E-EENNNNNE", signed_lattice(5))
    q = strip_signs(p)
    assert q.kind == lattice(4, 5)
    assert sign_of(q) == 1
    b = parse_path("NNE-", signed_ballot(2))
    assert strip_signs(b).kind == ballot(3)


@given(st.integers(min_value=1, max_value=6), st.data())
def test_signed_counts_agree(n, data):
    # the two signed families are equinumerous rank by rank
    assert count_paths(signed_lattice(n + 1)) == count_paths(signed_ballot(n + 1))
    k = data.draw(st.integers(min_value=0, max_value=n))
    assert count_paths(lattice(k, n)) == math.comb(n + k, k)
