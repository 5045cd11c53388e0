import itertools

import pytest

from virtsym.permutations import Permutation
from virtsym.presentations import family, make_presentation
from virtsym.quotients import (BudgetExceeded, QuotientMap, check_homomorphism,
                               hom_count, parity_image, parse_target,
                               perm_index, symmetric_group, symmetric_image)
from virtsym.schreier import kappa_defining_word
from virtsym.words import GenSym, parse_word


def test_symmetric_group_table_basics():
    s4 = symmetric_group(4)
    assert s4.size == 24
    assert s4.labels[0] == (1, 2, 3, 4)
    for a in (3, 17):
        assert s4.mul(a, s4.inv(a)) == 0
    # associativity spot check
    assert s4.mul(s4.mul(5, 7), 11) == s4.mul(5, s4.mul(7, 11))


def test_parse_target():
    assert parse_target("S3").size == 6
    assert parse_target("Z2xZ2").size == 4
    assert parse_target("Z2xZ2xZ2").size == 8
    with pytest.raises(ValueError):
        parse_target("Q8")


@pytest.mark.parametrize("kind", ["symmetric", "braid", "twin", "triplet",
                                  "virtual_braid", "virtual_twin",
                                  "virtual_triplet"])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_symmetric_image_is_homomorphism(kind, n):
    ok, failing = check_homomorphism(symmetric_image(family(kind, n), n))
    assert ok, [str(r) for r in failing]


def test_parity_image_kernel_examples():
    p = family("virtual_twin", 3)
    par = parity_image(p)
    assert par.eval(parse_word("rho1 s1") ** 2) == 0
    assert par.eval(parse_word("s1")) == par.target.index[(1, 0)]
    assert par.eval(parse_word("rho2")) == par.target.index[(0, 1)]


def test_eval_permutation_examples():
    p = family("virtual_triplet", 3)
    pi = symmetric_image(p, 3)
    got = pi.eval(parse_word("y1 rho2 y1"))
    assert pi.target.labels[got] == Permutation.from_cycles(3, [(1, 3)]).images
    assert pi.eval(kappa_defining_word(3, 1, 2)) == 0
    assert pi.eval(kappa_defining_word(3, 1, 3)) == 0


def test_eval_unassigned_symbol_errors():
    p = family("twin", 3)
    pi = symmetric_image(p, 3)
    with pytest.raises(KeyError):
        pi.eval(parse_word("rho1"))


def test_check_homomorphism_reports_failing_relator():
    p = family("twin", 3)
    s3 = parse_target("S3")
    three_cycle = perm_index(s3, Permutation.from_cycles(3, [(1, 2, 3)]))
    m = QuotientMap(p, s3, {g: three_cycle for g in p.generators})
    ok, failing = m.check()
    assert not ok
    assert parse_word("s1 s1") in failing


def test_vl2_any_involution_pair_works():
    p = family("virtual_triplet", 2)
    s3 = parse_target("S3")
    assignment = {GenSym("y", 1): perm_index(s3, Permutation.from_cycles(3, [(1, 2)])),
                  GenSym("rho", 1): perm_index(s3, Permutation.from_cycles(3, [(1, 3)]))}
    ok, _ = QuotientMap(p, s3, assignment).check()
    assert ok


def test_hom_count_vt2_matches_brute_force():
    p = family("virtual_twin", 2)
    s3 = parse_target("S3")
    assert hom_count(p, s3) == 16
    brute = sum(1 for a in range(6) for b in range(6)
                if s3.mul(a, a) == 0 and s3.mul(b, b) == 0)
    assert brute == 16


def test_hom_count_trivial_presentation():
    p = make_presentation("trivial", [], [])
    assert hom_count(p, parse_target("S4")) == 1


def test_hom_count_no_relators():
    p = make_presentation("free", [GenSym("a"), GenSym("b")], [])
    assert hom_count(p, parse_target("S3")) == 36


def test_hom_count_budget():
    p = family("virtual_twin", 5)
    with pytest.raises(BudgetExceeded):
        hom_count(p, parse_target("S4"), budget=10 ** 6)


def test_hom_count_backends_agree():
    p = family("virtual_twin", 3)
    s4 = parse_target("S4")
    counts = {hom_count(p, s4, backend="numpy"),
              hom_count(p, s4, backend="numba"),
              hom_count(p, s4, jobs=3),
              hom_count(p, s4, backend="numpy", jobs=2)}
    assert len(counts) == 1


def test_eval_is_homomorphic():
    import random
    p = family("virtual_twin", 3)
    pi = symmetric_image(p, 3)
    rng = random.Random(4)
    gens = list(p.generators)
    for _ in range(50):
        u = parse_word(" ".join(str(rng.choice(gens)) for _ in range(5)))
        v = parse_word(" ".join(str(rng.choice(gens)) for _ in range(5)))
        assert pi.eval(u * v) == pi.target.mul(pi.eval(u), pi.eval(v))
        assert pi.eval(~u) == pi.target.inv(pi.eval(u))


def test_hom_count_small_oracle_against_full_enumeration():
    p = family("triplet", 3)
    s3 = parse_target("S3")
    gens = list(p.generators)
    brute = 0
    for assign in itertools.product(range(6), repeat=len(gens)):
        m = QuotientMap(p, s3, dict(zip(gens, assign)))
        if m.check()[0]:
            brute += 1
    assert hom_count(p, s3) == brute
