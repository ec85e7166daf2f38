"""
Words over Z/NZ
===============

Z/NZ need not be a field, so only the r = 0 class survives: a word lies
in Abar when the image has d = 0 and b a unit.  No closed count is known
for composite N, so we count by enumeration.
"""

from slword import RING, IntegersMod, Side, classify_ring, enumerate_class, extend_ring, parse_word

Z6 = IntegersMod(6)
print("Abar^2 over Z/6Z:", [str(w) for w in enumerate_class(Z6, RING, 2)])

for N in (4, 6, 8, 9, 10):
    R = IntegersMod(N)
    counts = [len(enumerate_class(R, RING, l)) for l in range(6)]
    print(f"N={N:2}  |Abar^l|, l=0..5: {counts}")

# a word in Cbar extends on either side exactly when gcd(d, N) = 1
for text in ("1", "2", "13"):
    w = parse_word(text, Z6)
    d = classify_ring(w).witness.codes[3]
    print(f"{text}: d={d} left={extend_ring(w, Side.LEFT)} right={extend_ring(w, Side.RIGHT)}")
