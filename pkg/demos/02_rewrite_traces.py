"""
Rewrite traces
==============

The rewrite rules decide membership without ever forming the matrix.
Over a field they always finish; over Z/NZ a zero-divisor prefix can stop
them, and the answer is then Unknown.
"""

from slword import IntegersMod, PrimeField, classify_by_rewrite_field, classify_by_rewrite_ring, parse_word

F3 = PrimeField(3)
for r in range(3):
    label, trace = classify_by_rewrite_field(parse_word("22102", F3), r)
    print(f"-- r = {r}")
    for line in trace.lines():
        print("  ", line)

Z6 = IntegersMod(6)
for text in ("1111", "031", "1231"):
    verdict, trace = classify_by_rewrite_ring(parse_word(text, Z6))
    print(f"-- {text} over Z/6Z")
    for line in trace.lines():
        print("  ", line)
