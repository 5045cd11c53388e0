import math

import pytest

from virtsym.presentations import (FAMILY_KINDS, Presentation, RangeError,
                                   family, make_presentation, same_relator_set,
                                   tietze_eliminate)
from virtsym.quotients import hom_count, parse_target
from virtsym.words import GenSym, parse_word, relator_canonical, word


def test_symmetric_2_is_single_involution():
    p = family("symmetric", 2)
    assert [str(g) for g in p.generators] == ["tau1"]
    assert [str(r) for r in p.relators] == ["tau1 tau1"]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_virtual_family_generator_counts(n):
    assert len(family("virtual_twin", n).generators) == 2 * (n - 1)
    assert len(family("virtual_triplet", n).generators) == 2 * (n - 1)
    assert len(family("virtual_braid", n).generators) == 2 * (n - 1)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_reduced_families_have_n_generators(n):
    assert len(family("virtual_twin_reduced", n).generators) == n
    assert len(family("virtual_triplet_reduced", n).generators) == n


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_pair_family_counts(n):
    pvl = family("pvl", n)
    assert len(pvl.generators) == n * (n - 1) // 2
    assert len(pvl.relators) == math.comb(n, 3)
    raag = family("pvt_raag", n)
    assert len(raag.generators) == n * (n - 1) // 2
    assert len(raag.relators) == 3 * math.comb(n, 4)


def test_pvl_3_single_relator():
    p = family("pvl", 3)
    assert [str(g) for g in p.generators] == ["k1_2", "k1_3", "k2_3"]
    expect = relator_canonical(parse_word("k1_2 k1_3 k2_3 k1_2^-1 k1_3^-1 k2_3^-1"))
    assert list(p.relators) == [expect]


def test_triplet_has_no_far_commutation():
    p = family("triplet", 5)
    y1, y3 = GenSym("y", 1), GenSym("y", 3)
    comm = relator_canonical(parse_word("y1 y3 y1^-1 y3^-1"))
    assert comm not in p.relators


def test_virtual_twin_keeps_both_mixed_far_commutations():
    p = family("virtual_twin", 4)
    r13 = relator_canonical(parse_word("s1 rho3 s1^-1 rho3^-1"))
    r31 = relator_canonical(parse_word("s3 rho1 s3^-1 rho1^-1"))
    assert r13 in p.relators and r31 in p.relators


def test_braid_schema_deduplicates_mirror_instances():
    p = family("symmetric", 3)
    braids = [r for r in p.relators if len(r) == 6]
    assert len(braids) == 1


def test_reduced_twin_long_relator_as_printed():
    p = family("virtual_twin_reduced", 4)
    long = relator_canonical(parse_word("s1 rho2 rho1 rho3 rho2") ** 4)
    assert long in p.relators
    p3 = family("virtual_twin_reduced", 3)
    assert relator_canonical(parse_word("rho1 rho2") ** 3) in p3.relators
    assert len(p3.relators) == 4


def test_reduced_triplet_long_relator_as_printed():
    for n in (3, 4, 5):
        p = family("virtual_triplet_reduced", n)
        long = relator_canonical(parse_word("y1 rho1 rho2 y1 rho2 rho1") ** 3)
        assert long in p.relators


def test_commutator_families_small_n():
    assert [str(g) for g in family("vt_commutator", 2).generators] == ["w"]
    assert family("vt_commutator", 2).relators == ()
    p3 = family("vt_commutator", 3)
    assert [str(g) for g in p3.generators] == ["x2", "z", "w"]
    assert sorted(str(r) for r in p3.relators) == ["x2 x2 x2", "z z z"]
    q3 = family("vl_commutator", 3)
    assert [str(g) for g in q3.generators] == ["alpha2", "beta", "delta"]


def test_vt_commutator_4_full_relator_list():
    p = family("vt_commutator", 4)
    expected = [
        "x2 x2 x2",
        "x3 x3",
        "z z z",
        parse_word("x2 x3^-1") ** 3,
        parse_word("x3 w") ** 2,
        parse_word("z w^-1 x3^-1") ** 3,
        parse_word("z w^-1 x3^-1 z^-1 x2 x3 x2^-1") ** 2,
        parse_word("w z^-1 x3 w z w^-1 x2^-1 x3^-1 x2") ** 2,
    ]
    want = {relator_canonical(parse_word(e) if isinstance(e, str) else e)
            for e in expected}
    assert set(p.relators) == want


def test_vl_commutator_4_tail_relators():
    p = family("vl_commutator", 4)
    tail1 = relator_canonical(parse_word("alpha2^-1 beta") ** 3)
    tail2 = relator_canonical(parse_word("delta beta delta^-1 alpha2^-1") ** 3)
    assert tail1 in p.relators and tail2 in p.relators


@pytest.mark.parametrize("kind,n", [("braid", 1), ("virtual_twin_reduced", 2),
                                    ("virtual_triplet_reduced", 2), ("pvl", 1)])
def test_range_errors(kind, n):
    with pytest.raises(RangeError):
        family(kind, n)


def test_unknown_family():
    with pytest.raises(ValueError):
        family("nonsense", 3)


def test_tietze_substitution_example():
    x, z, w = GenSym("x", 2), GenSym("z"), GenSym("w")
    p = make_presentation("t", [x, z, w],
                          [parse_word("x2 w z^-1"), parse_word("z z z")])
    out = tietze_eliminate(p, "auto")
    assert set(out.generators) == {x, w}
    assert list(out.relators) == [relator_canonical(parse_word("x2 w") ** 3)]


def test_tietze_single_letter_relator():
    a, b = GenSym("a"), GenSym("b")
    p = make_presentation("t", [a, b], [word(a), word(b, b, b)])
    out = tietze_eliminate(p, "auto")
    assert set(out.generators) == {b}
    assert list(out.relators) == [parse_word("b b b")]


def test_tietze_cascades_to_trivial_group():
    a, b = GenSym("a"), GenSym("b")
    p = make_presentation("t", [a, b], [word(a), word(a, b, a)])
    out = tietze_eliminate(p, "auto")
    assert out.generators == () and out.relators == ()


def test_tietze_explicit_not_eliminable():
    a, b = GenSym("a"), GenSym("b")
    p = make_presentation("t", [a, b], [word(a, a)])
    with pytest.raises(ValueError):
        tietze_eliminate(p, [a])


def test_tietze_preserves_hom_counts():
    x, z, w = GenSym("x", 2), GenSym("z"), GenSym("w")
    p = make_presentation("t", [x, z, w],
                          [parse_word("x2 w z^-1"), parse_word("z z z")])
    q = tietze_eliminate(p, "auto")
    s3 = parse_target("S3")
    assert hom_count(p, s3) == hom_count(q, s3)


def test_same_relator_set_identity():
    p = family("pvl", 3)
    assert same_relator_set(p, p, {g: g for g in p.generators})


def test_same_relator_set_pvl_swap():
    p = family("pvl", 3)
    k12, k13, k23 = p.generators
    rename = {k12: k23, k13: k13, k23: k12}
    assert same_relator_set(p, p, rename)


def test_same_relator_set_distinguishes_twin_and_triplet():
    p, q = family("twin", 3), family("triplet", 3)
    rename = dict(zip(p.generators, q.generators))
    assert not same_relator_set(p, q, rename)


def test_same_relator_set_requires_bijection():
    p = family("twin", 3)
    with pytest.raises(ValueError):
        same_relator_set(p, p, {p.generators[0]: p.generators[0]})


def test_presentation_json_round_trip():
    for kind in FAMILY_KINDS:
        p = family(kind, 4)
        q = Presentation.from_json(p.to_json())
        assert q.generators == p.generators
        assert q.relators == p.relators


def test_relators_are_canonical_and_unique():
    for kind in FAMILY_KINDS:
        p = family(kind, 5)
        assert len(set(p.relators)) == len(p.relators)
        for r in p.relators:
            assert relator_canonical(r) == r
            assert len(r) > 0
