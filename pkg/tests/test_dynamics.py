import pytest

from slword import IntegersMod, orbit, parse_word, periodic_t, predecessor, successor
from slword.classify import in_Abar
from slword.dynamics import all_orbits, cyclic_subwords
from slword.errors import NotInAbar
from slword.sl2 import Mat2, identity, mat_order, mat_pow
from slword.wordsearch import sl2_size
from slword.words import Word, pi, walk

import oracles


def strs(ws):
    return [str(w) for w in ws]


def abar_words(N, l):
    return [w for w, M in walk(IntegersMod(N), l) if in_Abar(M)]


def test_successor_examples(Z6):
    assert str(successor(parse_word("121", Z6))) == "212"
    assert pi(parse_word("121", Z6)).rows() == [[4, 1], [5, 0]]
    assert str(successor(parse_word("234", Z6))) == "343"
    assert (-3 * pow(5, -1, 6)) % 6 == 3
    assert str(successor(parse_word("0", Z6))) == "0"
    with pytest.raises(NotInAbar):
        successor(parse_word("12", Z6))
    with pytest.raises(NotInAbar):
        successor(Word(Z6))


def test_predecessor_examples(Z6):
    assert str(predecessor(parse_word("212", Z6))) == "121"
    assert str(predecessor(parse_word("343", Z6))) == "234"
    assert str(predecessor(parse_word("0", Z6))) == "0"


@pytest.mark.parametrize("N", range(2, 7))
def test_predecessor_formula_against_brute_force(N):
    # every prepend candidate tried; exactly one stays in Abar and it is -a*b
    for l in range(1, 4):
        for w in abar_words(N, l):
            cands = [a for a in range(N) if oracles.in_abar_mod((a,) + w.codes[:-1], N)]
            (a, b), _ = pi(w).rows()
            assert cands == [(-a * b) % N]
            assert predecessor(w).codes == (cands[0],) + w.codes[:-1]
            succ = [a for a in range(N) if oracles.in_abar_mod(w.codes[1:] + (a,), N)]
            assert successor(w).codes == w.codes[1:] + (succ[0],) and len(succ) == 1


@pytest.mark.parametrize("N", range(2, 7))
def test_successor_bijection(N):
    for l in range(1, 5):
        for w in abar_words(N, l):
            s = successor(w)
            assert s.codes[:-1] == w.codes[1:]
            assert oracles.in_abar_mod(s.codes, N)
            assert predecessor(s) == w
            assert successor(predecessor(w)) == w


def test_orbit_examples(Z6):
    o = orbit(parse_word("121", Z6))
    assert o.period == 2 and strs(o.cycle) == ["121", "212"] and str(o.period_word) == "12"
    o = orbit(parse_word("234", Z6))
    assert o.period == 4 and strs(o.cycle) == ["234", "343", "432", "323"]
    assert str(o.period_word) == "2343"
    o = orbit(parse_word("0", Z6))
    assert o.period == 1 and strs(o.cycle) == ["0"] and str(o.period_word) == "0"


@pytest.mark.parametrize("N", range(2, 7))
def test_orbit_period_independent_of_representative(N):
    R = IntegersMod(N)
    for l in range(1, 5):
        covered = set()
        for o in all_orbits(R, l):
            assert len(set(o.cycle)) == o.period
            covered.update(o.cycle)
            for u in o.cycle:
                assert orbit(u).period == o.period
                assert len(u) == l and oracles.in_abar_mod(u.codes, N)
        assert covered == set(abar_words(N, l))


def test_periodic_examples(Z6):
    pa = periodic_t(parse_word("2343", Z6))
    assert pa.t == 1 and strs(pa.subwords) == ["234", "343", "432", "323"]
    pa = periodic_t(parse_word("0", Z6))
    assert (pa.t, pa.t_prime) == (2, 4)
    assert mat_order(pi(parse_word("0", Z6))) == 4


def test_periodic_12_by_scan(Z6):
    pw = parse_word("12", Z6)
    # independent scan of t with the definition-based oracle
    t = 1
    while not all(oracles.in_abar_mod(u.codes, 6) for u in cyclic_subwords(pw, 2 * t - 1)):
        t += 1
    assert t >= 2
    assert periodic_t(pw).t == t == 2


def test_periodic_longer_windows(Z6):
    subs = strs(cyclic_subwords(parse_word("2343", Z6), 7))
    assert subs == ["2343234", "3432343", "4323432", "3234323"]
    assert strs(cyclic_subwords(parse_word("2343", Z6), 11)) == [
        "23432343234", "34323432343", "43234323432", "32343234323"]


def _period_words(N, maxl=4):
    R = IntegersMod(N)
    seen = set()
    for l in range(1, maxl + 1):
        for o in all_orbits(R, l):
            seen.add(o.period_word)
    return sorted(seen, key=lambda w: (len(w), w.codes))


@pytest.mark.parametrize("N", range(2, 7))
def test_periodic_t_properties(N):
    size = sl2_size(N)
    for pw in _period_words(N):
        pa = periodic_t(pw)
        s = len(pw)
        assert 1 <= pa.t <= pa.t_prime <= size
        for k in (1, 2, 3):
            assert all(oracles.in_abar_mod(u.codes, N) for u in cyclic_subwords(pw, k * pa.t * s - 1))
        if pa.t > 1:
            prev = cyclic_subwords(pw, (pa.t - 1) * s - 1)
            assert not all(u.codes and oracles.in_abar_mod(u.codes, N) for u in prev)
        # rotations share the order t'
        for i in range(s):
            rot = Word(pw.ring, pw.codes[i:] + pw.codes[:i])
            assert mat_order(pi(rot)) == pa.t_prime
        # pi of a length t's window is I; dropping its last letter beta gives [[beta,-1],[1,0]]
        for u in cyclic_subwords(pw, pa.t_prime * s):
            assert pi(u) == identity(pw.ring)
            beta = u.codes[-1]
            assert pi(u[:-1]) == Mat2(pw.ring, beta, N - 1, 1, 0)
        assert mat_pow(pi(pw), pa.t_prime) == identity(pw.ring)
