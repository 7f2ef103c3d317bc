import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lcdbch.cosets import (BudgetExceeded, CosetParams, NotCovered, all_leaders, closed_delta,
                           closed_odd_delta, corollary1_smallest_gap, coset, exception_set,
                           is_leader, lambda_scaling_check, largest_leaders,
                           leader_range_classify, lemma1_is_leader, lemma1_is_leader_literal,
                           m2_leader_intervals, ord, sieve, sieve_mod)

P4 = CosetParams(4, 2, 1)
P41 = CosetParams(3, 4, 2)
P61 = CosetParams(3, 5, 4)


def test_params_validation():
    assert CosetParams(5, 5, 6).n == 521
    assert (CosetParams(9, 2).p, CosetParams(9, 2).s) == (3, 2)
    with pytest.raises(ValueError):
        CosetParams(5, 2, 4)  # 4 does not divide 6
    with pytest.raises(ValueError):
        CosetParams(6, 2, 1)  # not a prime power
    with pytest.raises(ValueError):
        CosetParams(4, 0, 1)


def test_coset_examples():
    c = coset(P4, 0)
    assert (c.elements, c.leader, c.size) == ((0,), 0, 1)
    c = coset(P4, 1)
    assert (c.elements, c.leader, c.size) == ((1, 4, 13, 16), 1, 4)
    c = coset(P41, 4)
    assert (c.elements, c.leader, c.size) == ((4, 5, 12, 15, 26, 29, 36, 37), 4, 8)


def test_ord_examples():
    assert ord(17, 4) == 4
    assert ord(1, 7) == 1
    assert ord(61, 3) == 10


def test_is_leader_examples():
    assert is_leader(P4, 0) and is_leader(P61, 0)
    assert not is_leader(P4, 7)
    assert not is_leader(P41, 5)


def test_all_leaders_examples():
    assert [a for a, _ in all_leaders(P4)] == [0, 1, 2, 3, 6]
    assert [a for a, _ in all_leaders(CosetParams(2, 2, 1))] == [0, 1]
    assert sieve_mod(1, 3).leaders().tolist() == [0]


def test_largest_leaders_examples():
    assert largest_leaders(P4, 1) == [(6, 4)]
    assert largest_leaders(CosetParams(8, 2, 1), 1)[0][0] == 28
    assert [a for a, _ in largest_leaders(CosetParams(2, 6, 1), 3)] == [13, 11, 7]
    with pytest.raises(ValueError):
        largest_leaders(P4, 6)


def test_sieve_budget():
    with pytest.raises(BudgetExceeded):
        sieve(CosetParams(3, 9, 1), budget=1000)


def test_sieve_chunk_independent():
    a = sieve_mod(1042, 5)
    b = sieve_mod(1042, 5, chunk=37)
    assert np.array_equal(a.leader_of, b.leader_of) and np.array_equal(a.size_of, b.size_of)


@pytest.mark.parametrize("params", [CosetParams(q, m, lam) for q, m, lam in
                                    [(4, 2, 1), (3, 4, 2), (3, 5, 4), (5, 3, 2), (5, 5, 6),
                                     (7, 3, 4), (8, 3, 9), (2, 6, 1), (9, 3, 5)]])
def test_oracle_self_consistency_and_negation_closure(params):
    n, q = params.n, params.q
    t = sieve(params)
    for s in range(n):
        c = coset(params, s)
        assert t.leader_of[s] == min(c.elements) == c.leader
        assert t.size_of[s] == c.size
        assert coset(params, c.leader) == c
        assert (n - s) % n in c.elements or all((n - y) % n in coset(params, (n - s) % n).elements
                                               for y in c.elements)
        neg = coset(params, (n - s) % n)
        assert set(neg.elements) == {(n - y) % n for y in c.elements}
    assert ord(n, q) == 2 * params.m or n <= 2
    assert all((2 * params.m) % int(t.size_of[s]) == 0 for s in range(1, n))


def test_ord_is_2m_in_scope():
    for q in (2, 3, 4, 5, 7, 8, 9, 11):
        for m in range(1, 8):
            for lam in range(1, q + 1):
                if (q + 1) % lam or (q ** m + 1) % lam or (q ** m + 1) // lam > 10 ** 6:
                    continue
                n = (q ** m + 1) // lam
                if n > 2:
                    assert ord(n, q) == 2 * m, (q, m, lam)


@pytest.mark.parametrize("q,m,a,want", [(3, 4, 41, True), (3, 4, 42, False), (4, 2, 7, False)])
def test_leader_criterion_examples(q, m, a, want):
    assert lemma1_is_leader(q, m, a) is want
    assert lemma1_is_leader_literal(q, m, a) is want


@pytest.mark.parametrize("q,m", [(2, 5), (3, 4), (4, 3), (5, 3)])
def test_leader_criterion_fast_matches_literal_and_oracle(q, m):
    t = sieve_mod(q ** m + 1, q)
    for a in range(q ** m + 1):
        f = lemma1_is_leader(q, m, a)
        assert f == lemma1_is_leader_literal(q, m, a) == t.is_leader(a), a


@pytest.mark.parametrize("q,m,lam,a,want", [(3, 5, 4, 1, True), (3, 5, 4, 10, True),
                                             (5, 3, 2, 12, False)])
def test_scaling_examples(q, m, lam, a, want):
    r = lambda_scaling_check(q, m, lam, a)
    assert (r.leader_mod_n, r.leader_mod_full) == (want, want) and r.agree


def test_scaling_12_mod_63_is_not_a_leader():
    # 12 * 5^5 = 3 (mod 63) and 24 * 5^5 = 6 (mod 126)
    assert 3 in coset(CosetParams(5, 3, 2), 12).elements
    assert 6 in coset(CosetParams(5, 3, 1), 24).elements


def test_scaling_rejects_even_q():
    with pytest.raises(ValueError):
        lambda_scaling_check(4, 2, 5, 1)


@pytest.mark.parametrize("q,m,lam,i,value,size", [(7, 2, 1, 3, 17, None), (9, 2, 1, 3, 31, None),
                                                  (2, 6, 1, 2, 11, 12), (4, 2, 1, 1, 6, 4),
                                                  (8, 2, 1, 1, 28, None), (3, 5, 4, 1, 10, 10),
                                                  (3, 5, 4, 2, 8, 10)])
def test_closed_delta_examples(q, m, lam, i, value, size):
    r = closed_delta(q, m, lam, i)
    assert r.value == value
    if size is not None:
        assert r.coset_size == size


def test_closed_delta_not_covered():
    with pytest.raises(NotCovered):
        closed_delta(3, 6, 2, 3)
    with pytest.raises(ValueError):
        closed_delta(4, 2, 1, 0)


@pytest.mark.parametrize("q,m,lam", [(2, 6, 1), (4, 6, 1), (3, 6, 1), (3, 6, 2), (5, 2, 1),
                                     (7, 2, 1), (9, 2, 1), (3, 5, 4), (7, 5, 2), (2, 10, 1)])
def test_closed_delta_matches_sieve(q, m, lam):
    P = CosetParams(q, m, lam)
    t = sieve(P)
    desc = t.leaders()[::-1]
    i = 1
    while True:
        try:
            r = closed_delta(q, m, lam, i)
        except NotCovered:
            break
        assert (r.value, r.coset_size) == (int(desc[i - 1]), t.size(int(desc[i - 1])))
        i += 1
    assert i > 1


@pytest.mark.parametrize("q,m", [(3, 2), (5, 2), (3, 6), (7, 2), (5, 4), (3, 10)])
def test_closed_odd_delta(q, m):
    if (q ** m) % 4 != 1:
        pytest.skip("needs q^m = 1 mod 4")
    P = CosetParams(q, m, 1)
    t = sieve(P)
    odd = [int(a) for a in t.leaders()[::-1] if a % 2]
    for i in (1, 2):
        r = closed_odd_delta(q, m, i)
        assert (r.value, r.coset_size) == (odd[i - 1], t.size(odd[i - 1]))


def test_m2_intervals_examples():
    assert m2_leader_intervals(4).intervals == ((1, 3), (6, 6))
    assert m2_leader_intervals(4).singletons == ()
    r = m2_leader_intervals(3)
    assert (r.intervals, r.singletons) == (((1, 2),), (5,))
    assert m2_leader_intervals(2).intervals == ((1, 1),)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32])
def test_m2_intervals_match_sieve(q):
    t = sieve(CosetParams(q, 2, 1))
    want = [(int(a), t.size(int(a))) for a in t.leaders() if a]
    assert m2_leader_intervals(q).leaders() == want


def test_exception_set_examples():
    T = exception_set(5, 5, 3, "T")
    assert T.parts == {"T1": (41, 42, 43), "T2": (67,), "T3": (58,)}
    X = exception_set(3, 4, 2, "X")
    assert X.parts == {"X1": (10,), "X2": (), "X3": (), "X4": (5,), "X5": (10, 11, 13)}
    Y = exception_set(3, 5, 4, "Y")
    assert set(Y.members) == {11, 13, 14}
    assert {i for i in Y.parts["Y1"] if i % 3} == {13, 14} and Y.parts["Y2"] == (11,)
    t = sieve(P61)
    assert t.is_leader(10) and not any(t.is_leader(i) for i in (11, 13, 14))


def test_printed_y_set_misses_a_non_leader():
    # the literal q = 3 description of Y1 drops one element for odd t
    full = set(exception_set(3, 7, 4, "Y").members)
    printed = set(exception_set(3, 7, 4, "Y", printed=True).members)
    t = sieve(CosetParams(3, 7, 4))
    assert 41 in full - printed and not t.is_leader(41)


@pytest.mark.parametrize("q,m,lam,fam", [(5, 5, 3, "T"), (3, 4, 2, "X"), (3, 5, 4, "Y"),
                                         (5, 4, 2, "X"), (7, 5, 2, "T"), (5, 5, 6, "single")])
def test_exception_sets_exact_against_oracle(q, m, lam, fam):
    ex = exception_set(q, m, lam, fam)
    t = sieve(CosetParams(q, m, lam))
    for i in ex.window():
        if i in ex:
            assert not t.is_leader(i) or ex.claim != "non-leader"
        else:
            assert t.is_leader(i) and t.size(i) == ex.sizes.get(i, 2 * m), (i, fam)


def test_exception_set_not_covered():
    with pytest.raises(NotCovered):
        exception_set(4, 2, 1, "T")


@pytest.mark.parametrize("q,m,lam,i,status,size", [(5, 5, 3, 41, "non-leader", None),
                                                   (5, 5, 6, 21, "non-leader", None),
                                                   (3, 5, 4, 10, "leader", 10)])
def test_classifier_examples(q, m, lam, i, status, size):
    c = leader_range_classify(q, m, lam, i)
    assert c.status == status and c.size == size


def test_classifier_outside():
    assert leader_range_classify(4, 2, 1, 10 ** 6).status == "outside-covered-range"


@pytest.mark.parametrize("q,m,lam,want", [(5, 5, 3, 41), (5, 5, 2, 61), (3, 7, 2, 40)])
def test_smallest_gap_examples(q, m, lam, want):
    g = corollary1_smallest_gap(q, m, lam)
    assert g == want
    t = sieve(CosetParams(q, m, lam))
    assert g % q and not t.is_leader(g)
    assert all(t.is_leader(i) for i in range(1, g) if i % q)


def test_smallest_gap_domain():
    with pytest.raises(NotCovered):
        corollary1_smallest_gap(5, 4, 2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(3, 3, 2), (5, 3, 3), (7, 3, 8), (4, 3, 5), (3, 5, 4), (2, 7, 3)]),
       st.integers(0, 10 ** 6))
def test_coset_is_orbit(pql, s):
    P = CosetParams(*pql)
    s %= P.n
    c = coset(P, s)
    assert all((y * P.q) % P.n in c.elements for y in c.elements)
    assert s in c


def test_range_classifier_sweep():
    from lcdbch.cli.suites import classifier_suite
    res = classifier_suite(10 ** 5)
    assert res.checks > 10 ** 6 and res.ok, res.mismatches
