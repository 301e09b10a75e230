#!/usr/bin/env python3
"""Weight multiplicities: Kostka log-concavity along root directions,
the Kostant partition function, and truncated highest-weight characters.

Run:  python demos/weight_multiplicities_walk.py
"""

from lorentzpoly import (
    corpus,
    format_terms,
    kostant_partition,
    kostka,
    lorentzian_certify,
    root_direction_violations,
    schur,
    verma_truncated_normalized,
)

print("=" * 72)
print("1. Walking a weight diagram along a root direction")
print("=" * 72)

lam = (4, 2)
print(f"shape {lam}: multiplicities along mu + t(e1 - e2), "
      f"starting at mu = (0, 6):")
row = []
for t in range(0, 7):
    mu = (t, 6 - t)
    row.append(kostka(lam, mu))
print(f"  {row}")
squares = [row[k] ** 2 >= row[k - 1] * row[k + 1] for k in range(1, len(row) - 1)]
print(f"  log-concave at every interior point? {all(squares)}")

table = schur(lam, 3)
print(f"full three-variable table has {len(table.terms)} weights; "
      f"violations anywhere: {root_direction_violations(table)}\n")

print("=" * 72)
print("2. The Kostant partition function counts negative-root expressions")
print("=" * 72)

for v in ((-1, 0, 1), (-2, 1, 1), (-1, -1, 2), (-2, 0, 2)):
    print(f"p{v} = {kostant_partition(v)}")
print("(e.g. e3 - e1 is a root itself and also (e2 - e1) + (e3 - e2))\n")

print("=" * 72)
print("3. Truncated characters of universal highest-weight modules")
print("=" * 72)

for delta in ((1, 1), (1, 1, 1), (2, 1, 0)):
    h = verma_truncated_normalized(delta)
    print(f"delta = {delta}: {format_terms(h)}")
    print(f"  -> {lorentzian_certify(h).verdict}")
print()

print("=" * 72)
print("4. A bundled irreducible sl4 character display also certifies")
print("=" * 72)

character = corpus.load("normalized-character-sl4.poly")
print(format_terms(character))
print(f"-> {lorentzian_certify(character).verdict}")
