from math import gcd

import pytest

from slword import (
    RING, FieldTarget, IntegersMod, PrimeField, Side, Verdict, classify_field, classify_ring,
    count_formula, enumerate_class, extend_field, extend_ring, parse_word,
)
from slword.classify import in_A, in_Abar
from slword.errors import BudgetExceeded, NotAField, NotPrimePower
from slword.ring import ExtensionField
from slword.sl2 import Mat2, generator, mat_mul
from slword.words import Word, pi, walk

import oracles

IN_A, IN_C = Verdict.IN_A, Verdict.IN_C

FIELDS = [PrimeField(2), PrimeField(3), ExtensionField(2, (1, 1, 1)), PrimeField(5)]


def fmt(words):
    return [str(w) for w in words]


# -- examples ---------------------------------------------------------------

def test_classify_field_examples(F3):
    w = parse_word("22102", F3)
    assert classify_field(w, 0).verdict is IN_C
    assert classify_field(w, 1).verdict is IN_C
    lab = classify_field(w, 2)
    assert lab.verdict is IN_A and lab.name == "A_2"
    for r in range(3):
        for a in range(3):
            expect = IN_A if a == r else IN_C
            assert classify_field(Word(F3, [a]), r).verdict is expect
        assert classify_field(Word(F3), r).verdict is IN_C


def test_classify_field_rejects_composite(Z6):
    with pytest.raises(NotAField):
        classify_field(parse_word("12", Z6), 0)
    # prime moduli are fields
    assert classify_field(parse_word("11", IntegersMod(5)), 0).verdict is IN_A


def test_classify_ring_examples(Z6):
    assert classify_ring(parse_word("121", Z6)).verdict is IN_A
    assert classify_ring(Word(Z6)).verdict is IN_C
    lab = classify_ring(parse_word("00", Z6))
    assert lab.verdict is IN_C and lab.witness.rows() == [[5, 0], [0, 5]]
    assert lab.name == "Cbar"


def test_label_witness_invariant(Z6, F3):
    for w, M in walk(F3, 4):
        for r in range(3):
            lab = classify_field(w, r)
            assert lab.witness == M
            _, b, _, d = M.codes
            assert (lab.verdict is IN_A) == (b != 0 and d == b * r % 3)
    for w, M in walk(Z6, 3):
        lab = classify_ring(w)
        _, b, _, d = M.codes
        assert (lab.verdict is IN_A) == (gcd(b, 6) == 1 and d == 0)


def test_extend_field_examples(F3):
    a = extend_field(parse_word("2", F3), 0, Side.RIGHT)
    assert a == F3(2)
    assert (0 - 2) * pow(2 - 0, -1, 3) % 3 == 2
    assert classify_field(parse_word("22", F3), 0).verdict is IN_A
    assert fmt(enumerate_class(F3, FieldTarget(F3(0)), 2, IN_A)) == ["11", "22"]

    b = extend_field(parse_word("22102", F3), 2, Side.LEFT)
    assert b == F3(1)
    assert classify_field(parse_word("122102", F3), 2).verdict is IN_A
    assert extend_field(parse_word("0", F3), 0, Side.LEFT) is None


def test_extend_ring_examples(Z6):
    assert extend_ring(parse_word("1", Z6), Side.LEFT) == Z6(1)
    lab = classify_ring(parse_word("11", Z6))
    assert lab.verdict is IN_A and lab.witness.rows() == [[5, 1], [5, 0]]
    assert extend_ring(parse_word("2", Z6), "left") is None
    assert extend_ring(parse_word("121", Z6), "right") is None


def test_count_formula_examples():
    assert count_formula(3, 0)[0] == 0
    assert count_formula(3, 2) == (2, 7)
    assert (9 - 1) // 4 == 2
    assert count_formula(2, 3) == (3, 5)
    F2 = PrimeField(2)
    assert len(enumerate_class(F2, FieldTarget(F2(0)), 3, IN_A)) == 3
    assert len(enumerate_class(F2, FieldTarget(F2(0)), 3, IN_C)) == 5
    with pytest.raises(NotPrimePower):
        count_formula(6, 2)


def test_enumerate_examples(F3, Z6):
    # d-entry of pi(ab) is ab - 1
    brute = [(a, b) for a in range(3) for b in range(3) if (a * b - 1) % 3 == 0]
    assert brute == [(1, 1), (2, 2)]
    assert fmt(enumerate_class(F3, FieldTarget(F3(0)), 2, IN_A)) == ["11", "22"]
    brute = [(a, b) for a in range(6) for b in range(6) if (a * b - 1) % 6 == 0 and gcd(b, 6) == 1]
    assert brute == [(1, 1), (5, 5)]
    assert fmt(enumerate_class(Z6, RING, 2, IN_A)) == ["11", "55"]
    for ring, target in ((F3, FieldTarget(F3(1))), (Z6, RING)):
        assert enumerate_class(ring, target, 0, IN_A) == []


def test_enumerate_budget(Z6):
    with pytest.raises(BudgetExceeded):
        enumerate_class(Z6, RING, 5, IN_A, budget=1000)
    assert len(enumerate_class(Z6, RING, 3, IN_A, budget=216)) > 0


def test_enumerate_budget_env(monkeypatch, Z6):
    monkeypatch.setenv("SLWORD_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        enumerate_class(Z6, RING, 2, IN_A)


# -- field-side properties --------------------------------------------------

@pytest.mark.parametrize("ring", FIELDS, ids=str)
def test_cardinality_and_recurrence(ring):
    q = ring.cardinality
    ops = oracles.gf4_ops() if q == 4 else oracles.mod_ops(q)
    for r in range(q):
        counts = []
        for l in range(7):
            words = enumerate_class(ring, FieldTarget(ring(r)), l, IN_A)
            # brute-force oracle on the same length
            if l <= 4:
                brute = [w for w in oracles.words(q, l) if oracles.in_A_field(w, r, q, ops)]
                assert [w.codes for w in words] == brute
            counts.append(len(words))
            assert counts[-1] == count_formula(q, l)[0]
        for l in range(6):
            assert counts[l + 1] + counts[l] == q**l


@pytest.mark.parametrize("ring", FIELDS, ids=str)
def test_right_insertion_dichotomy(ring):
    q = ring.cardinality
    gens = [generator(c, ring) for c in range(q)]
    for r in range(q):
        for l in range(5 if q == 5 else 6):
            for w, M in walk(ring, l):
                hits = [a for a in range(q) if in_A(mat_mul(M, gens[a]), r)]
                if in_A(M, r):
                    assert hits == []
                    assert extend_field(w, r, Side.RIGHT) is None
                else:
                    assert len(hits) == 1
                    assert extend_field(w, r, Side.RIGHT).code == hits[0]


@pytest.mark.parametrize("ring", FIELDS, ids=str)
def test_left_insertion(ring):
    q = ring.cardinality
    gens = [generator(c, ring) for c in range(q)]
    for r in range(q):
        for l in range(5):
            for w, M in walk(ring, l):
                hits = [a for a in range(q) if in_A(mat_mul(gens[a], M), r)]
                got = extend_field(w, r, Side.LEFT)
                d = M.codes[3]
                if in_A(M, r):
                    if r == 0:
                        # bottom-right of pi(alpha w) is -b != 0
                        assert hits == [] and got is None
                    else:
                        assert hits == [ring.add(r, ring.inverse(r))]
                        assert got.code == hits[0]
                elif d == 0:
                    assert hits == [] and got is None
                else:
                    assert len(hits) == 1 and got.code == hits[0]


@pytest.mark.parametrize("ring", FIELDS, ids=str)
def test_deletion(ring):
    q = ring.cardinality
    for r in range(1, q):
        key = ring.add(r, ring.inverse(r))
        for l in range(1, 6):
            for w, M in walk(ring, l):
                if not in_A(M, r):
                    continue
                assert classify_field(w[:-1], r).verdict is IN_C
                tail_in = classify_field(w[1:], r).verdict is IN_A
                assert tail_in == (w.codes[0] == key)


# -- ring-side properties ---------------------------------------------------

@pytest.mark.parametrize("N", range(2, 9))
def test_abar_insertion_deletion_reversal(N):
    R = IntegersMod(N)
    gens = [generator(c, R) for c in range(N)]
    for l in range(6):
        for w, M in walk(R, l):
            member = in_Abar(M)
            assert member == oracles.in_abar_mod(w.codes, N)
            assert in_Abar(pi(w.reversed())) == member
            if member:
                assert not any(in_Abar(mat_mul(g, M)) or in_Abar(mat_mul(M, g)) for g in gens)
                assert classify_ring(w[1:]).verdict is IN_C
                assert classify_ring(w[:-1]).verdict is IN_C
                assert extend_ring(w, Side.LEFT) is None and extend_ring(w, Side.RIGHT) is None
            elif l <= 4:
                left = [a for a in range(N) if in_Abar(mat_mul(gens[a], M))]
                right = [a for a in range(N) if in_Abar(mat_mul(M, gens[a]))]
                d = M.codes[3]
                if gcd(d, N) == 1:
                    assert len(left) == 1 and len(right) == 1
                    assert extend_ring(w, Side.LEFT).code == left[0]
                    assert extend_ring(w, Side.RIGHT).code == right[0]
                else:
                    assert left == [] and right == []
                    assert extend_ring(w, Side.LEFT) is None
                    assert extend_ring(w, Side.RIGHT) is None


@pytest.mark.parametrize("N", range(2, 7))
def test_gcd_divides_b_iff_coprime(N):
    for (a, b), (c, d) in oracles.sl2_elements(N):
        g = gcd(d, N)
        assert (b % g == 0) == (g == 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_prime_modulus_coherence(p):
    R, F = IntegersMod(p), PrimeField(p)
    for l in range(6):
        for w, _ in walk(R, l):
            assert classify_ring(w).verdict is classify_field(Word(F, w.codes), 0).verdict
            assert classify_field(w, 0).verdict is classify_ring(w).verdict


def test_mat2_label():
    R = IntegersMod(6)
    M = Mat2(R, 4, 1, 5, 0)
    assert in_Abar(M)
