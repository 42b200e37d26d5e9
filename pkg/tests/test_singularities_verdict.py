"""Singular points, blowups, the decision rule and rationality witnesses."""

import dataclasses
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sextic.analysis import singularity_profile
from sextic.errors import PreconditionViolation
from sextic.families import (
    LOCAL_RING,
    TABLE_ROWS,
    an_model,
    disguised_an,
    gorenstein_member,
    rank_le1_member,
    table_member,
)
from sextic.normal_form import normalize
from sextic.singularities import (
    CA2,
    CD2,
    CE2,
    An,
    CAx2,
    HalfQuotient,
    SingularityRecord,
    Smooth,
    WorseGorenstein,
    blowup_chain,
    blowup_transform,
    build_profile,
    classify_An,
    exceptional_cubed,
    is_worse_than_moderate,
    kind_from_tjurina,
    tjurina_number,
)
from sextic.verdict import Flags, NonRational, Rational, Undetermined, build_witness, decide, verify_witness
from sextic.wps import validate

BOTH = Flags(True, True)


def test_labels_and_moderation():
    assert HalfQuotient().label() == "1/2(1,1,1)"
    assert CA2(True, 2).label() == "cA/2 moderate aw=2"
    assert CA2(False, None).label() == "cA/2 non-moderate"
    assert An(3).label() == "A3"
    assert not is_worse_than_moderate(HalfQuotient())
    assert not is_worse_than_moderate(CA2(True, 3))
    for kind in (CA2(False, None), CAx2(), CD2(), CE2()):
        assert is_worse_than_moderate(kind)


@pytest.mark.parametrize("row", TABLE_ROWS, ids=lambda r: r.name)
@pytest.mark.parametrize("seed", range(2))
def test_table_rows(row, seed):
    X = validate(table_member(random.Random(seed), row))
    nf = normalize(X)
    profile = singularity_profile(X, nf)
    ng = build_profile(profile.non_gorenstein, ())
    assert ng.multiset() == row.expected


# -- Gorenstein points ------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_an_models(n):
    assert classify_An(an_model(n)) == An(n)
    assert tjurina_number(an_model(n)) == n


@given(st.integers(0, 10**6), st.integers(1, 6))
def test_disguised_an(seed, n):
    f = disguised_an(random.Random(seed), n)
    assert classify_An(f) == An(n)


def test_beyond_the_jet_order():
    u, v, w, s = LOCAL_RING.gens()
    assert classify_An(u * u + v * v + w * w + s**20) == WorseGorenstein("undetermined-beyond-A15")
    assert classify_An(u * u + v * v + w * w + s**12) == An(11)
    assert classify_An(u * u + v**3 + w**3 + s**3) == WorseGorenstein("corank 3")


def test_tjurina_fallback():
    assert kind_from_tjurina(1) == An(1)
    assert kind_from_tjurina(2) == An(2)
    assert isinstance(kind_from_tjurina(3), WorseGorenstein)


@pytest.mark.parametrize("types", [(1,), (2,), (1, 1), (1, 2), (2, 2), (1, 1, 1)])
def test_gorenstein_members(types):
    X = validate(gorenstein_member(random.Random(7), types))
    profile = singularity_profile(X, normalize(X))
    assert sorted(r.kind.n for r in profile.gorenstein for _ in range(r.count)) == sorted(types)
    assert all(r.tjurina == r.kind.n for r in profile.gorenstein)
    assert isinstance(decide(profile, BOTH), NonRational)


def test_a3_point_is_undetermined():
    X = validate(gorenstein_member(random.Random(3), (3,)))
    verdict = decide(singularity_profile(X, normalize(X)), BOTH)
    assert isinstance(verdict, Undetermined)
    assert "Gorenstein point of type A3" in verdict.reasons


# -- decision rule -----------------------------------------------------------------

KINDS_NG = [HalfQuotient(), CA2(True, 2), CA2(True, 3), CA2(False, None), CAx2(), CD2(), CE2()]
KINDS_G = [An(1), An(2), An(3), WorseGorenstein("corank 2")]
ng_records = st.lists(st.sampled_from(KINDS_NG), max_size=3).map(
    lambda ks: [SingularityRecord(None, k, False) for k in ks]
)
g_records = st.lists(
    st.tuples(st.sampled_from(KINDS_G), st.integers(1, 3)), max_size=4
).map(lambda ks: [SingularityRecord(None, k, True, c) for k, c in ks])
flags = st.builds(Flags, st.booleans(), st.booleans())


@given(ng_records, g_records, flags, st.randoms(use_true_random=False))
def test_decide_is_order_independent(ng, g, fl, r):
    a = decide(build_profile(ng, g), fl)
    ng2, g2 = ng[:], g[:]
    r.shuffle(ng2)
    r.shuffle(g2)
    b = decide(build_profile(ng2, g2), fl)
    assert a == b
    assert decide(build_profile(ng, g), fl) == a


@given(ng_records, g_records, flags)
def test_decide_rules(ng, g, fl):
    profile = build_profile(ng, g)
    v = decide(profile, fl)
    if any(is_worse_than_moderate(r.kind) for r in ng):
        assert isinstance(v, Rational)
    elif isinstance(v, NonRational):
        assert fl.terminal and fl.q_factorial
        assert profile.all_nodes_or_cusps and profile.gorenstein_count <= 4
    else:
        assert isinstance(v, Undetermined) and v.reasons


# -- witnesses ---------------------------------------------------------------------


@given(st.integers(0, 10**6))
def test_witness_verifies(seed):
    X = validate(rank_le1_member(random.Random(seed)))
    w = build_witness(normalize(X))
    assert verify_witness(w, X)


@given(st.integers(0, 10**6))
def test_perturbed_witness_fails(seed):
    X = validate(rank_le1_member(random.Random(seed)))
    w = build_witness(normalize(X))
    bad = dataclasses.replace(w, numerator=w.numerator + w.ring.one())
    assert not verify_witness(bad, X)
    doubled = {**w.change, "x3": w.change["x3"] * 2}
    assert not verify_witness(dataclasses.replace(w, change=doubled), X)


def test_no_witness_for_moderate_point():
    X = validate(table_member(random.Random(0), TABLE_ROWS[1]))
    with pytest.raises(PreconditionViolation):
        build_witness(normalize(X))


# -- blowups -----------------------------------------------------------------------


def test_exceptional_cubed():
    assert exceptional_cubed(2, 1) == 4
    assert exceptional_cubed(3, 1) == Q(9, 2)
    with pytest.raises(PreconditionViolation):
        exceptional_cubed(4, 2)


def test_blowup_transforms():
    r = blowup_transform(CA2(True, 2))
    assert r.singular() == (HalfQuotient(),) and r.e_cubed == 4
    assert blowup_transform(CA2(True, 3)).singular() == (CA2(True, 2),)
    assert blowup_transform(An(1)).singular() == () and blowup_transform(An(1)).e_cubed == 2
    assert blowup_chain(An(5)) == [An(5), An(3), An(1), Smooth()]
    with pytest.raises(PreconditionViolation):
        blowup_transform(CD2())
