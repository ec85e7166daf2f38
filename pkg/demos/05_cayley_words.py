"""
Writing every matrix as a word
==============================

The generators reach all of SL_2(Z/NZ).  A breadth-first search from the
identity finds, for each element, its shortest word (ties broken
lexicographically) and shows how far the group spreads out.
"""

from slword import IntegersMod, Mat2, cayley_cover, find_word, sl2_size

for N in range(2, 13):
    rep = cayley_cover(N)
    print(f"N={N:2} |SL2|={rep.group_size:5} formula={sl2_size(N):5} "
          f"diameter={rep.max_word_length} per-length={list(rep.per_length_counts)}")

Z6 = IntegersMod(6)
for entries in ((5, 5, 0, 5), (1, 1, 0, 1), (1, 0, 1, 1), (5, 0, 0, 5)):
    M = Mat2(Z6, *entries)
    print(f"{M.rows()} = pi({find_word(M)})")
