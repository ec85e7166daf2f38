"""
Prime words and successor orbits
================================

Every word in Abar splits uniquely as p1 d1 p2 ... dn p(n+1) with prime
blocks p.  Dropping the first letter of an Abar word and appending the one
letter that restores membership walks around a finite cycle.
"""

from slword import IntegersMod, factorize, orbit, parse_word, periodic_t
from slword.dynamics import all_orbits

Z6 = IntegersMod(6)
for text in ("000", "121", "0000000"):
    print(f"{text:8} -> {factorize(parse_word(text, Z6))}")

print()
for o in all_orbits(Z6, 3):
    print(f"s={o.period}  period word {o.period_word}  cycle {' '.join(map(str, o.cycle))}")

print()
for text in ("2343", "12", "0", "0105"):
    pa = periodic_t(parse_word(text, Z6))
    print(f"period word {text:5} s={pa.s} t={pa.t} t'={pa.t_prime}")
