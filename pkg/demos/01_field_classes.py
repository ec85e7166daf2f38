"""
Classifying words over a finite field
=====================================

Each letter a maps to the matrix [[0, 1], [-1, a]], and a word maps to the
product.  Over F_q the image decides whether the word sits in A_r or C_r.
"""

from slword import FieldTarget, PrimeField, classify_field, count_formula, enumerate_class, parse_word
from slword.ring import ExtensionField

F3 = PrimeField(3)
w = parse_word("22102", F3)

# one word, three different targets r
for r in range(3):
    label = classify_field(w, r)
    print(f"r={r}: {label.name:4} pi = {label.witness.rows()}")

# how many words of each length fall in A_0, by enumeration and by formula
print()
print(" l  enumerated  formula")
for l in range(7):
    n = len(enumerate_class(F3, FieldTarget(F3(0)), l))
    print(f"{l:2}  {n:10}  {count_formula(3, l)[0]:7}")

# GF(4) built from x^2 + x + 1; letters are codes 0..3
GF4 = ExtensionField(2, (1, 1, 1))
print()
print("GF(4) |A_r^4| for r = 0..3:",
      [len(enumerate_class(GF4, FieldTarget(GF4(r)), 4)) for r in range(4)],
      "formula:", count_formula(4, 4)[0])
