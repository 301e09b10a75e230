#!/usr/bin/env python3
"""Tour of the divided-difference families: Schubert, dual Schubert,
Grothendieck, key, and degree polynomials, with desk-scale sweeps.

Run:  python demos/schubert_families_tour.py
"""

from lorentzpoly import (
    Permutation,
    SweepBounds,
    SweepSpec,
    avoids_pattern,
    degree_polynomial,
    format_terms,
    grothendieck,
    homogeneous_grothendieck,
    key_polynomial,
    lehmer_code,
    lorentzian_certify,
    normalize,
    run_sweep,
    schubert,
    schubert_dual,
)

print("=" * 72)
print("1. Schubert polynomials from the staircase monomial")
print("=" * 72)

for line in ((3, 2, 1), (1, 3, 2), (2, 3, 1)):
    w = Permutation(line)
    print(f"S_{''.join(map(str, line))} = {format_terms(schubert(w))}"
          f"   (length {w.length()}, code {lehmer_code(w)})")
print()

print("=" * 72)
print("2. The reflected-normalized (dual) construction always certifies")
print("=" * 72)

for line in ((1, 2, 3), (2, 1, 3), (3, 1, 2)):
    w = Permutation(line)
    dual = schubert_dual(w)
    print(f"dual of {''.join(map(str, line))}: {format_terms(dual)}"
          f" -> {lorentzian_certify(dual).verdict}")
print()

print("=" * 72)
print("3. Two quartic permutations whose Schubert polynomials refuse")
print("=" * 72)

for text in ("1423", "1432"):
    w = Permutation.from_string(text)
    cert = lorentzian_certify(schubert(w))
    print(f"S_{text}: {cert.verdict}, witness {cert.failure.to_dict()}")
    print(f"  avoids 1423 and 1432? "
          f"{avoids_pattern(w, Permutation.from_string('1423')) and avoids_pattern(w, Permutation.from_string('1432'))}")
print("(pattern-avoiding permutations are exactly the ones whose raw")
print(" Schubert polynomials are expected to certify before normalizing)\n")

print("=" * 72)
print("4. Grothendieck polynomials: signed components and homogenization")
print("=" * 72)

w = Permutation((1, 3, 2))
g = grothendieck(w)
print(f"G_132 = {format_terms(g)}")
for k in range(0, g.total_degree() - w.length() + 1):
    component = g.homogeneous_component(w.length() + k)
    signed = normalize(component) * ((-1) ** k)
    print(f"  (-1)^{k} N(component {k}) = {format_terms(signed)}"
          f" -> {lorentzian_certify(signed).verdict}")
homog = homogeneous_grothendieck(w)
print(f"homogenized (z last): {format_terms(homog)}"
      f" -> N(.) {lorentzian_certify(normalize(homog)).verdict}\n")

print("=" * 72)
print("5. Key polynomials interpolate monomials and Schur polynomials")
print("=" * 72)

for mu in ((2, 1), (0, 1), (0, 2), (1, 0, 2)):
    print(f"key{mu} = {format_terms(key_polynomial(mu))}")
print()

print("=" * 72)
print("6. Degree polynomials from saturated Bruhat chains")
print("=" * 72)

for line in ((2, 1), (3, 2, 1), (2, 3, 1)):
    d = degree_polynomial(Permutation(line))
    print(f"D_{''.join(map(str, line))} = {format_terms(d)}"
          f" -> {lorentzian_certify(d).verdict}")
print()

print("=" * 72)
print("7. Desk-scale sweeps")
print("=" * 72)

for spec in (
    SweepSpec("schubert", "certify", SweepBounds(n=4)),
    SweepSpec("schubert", "support_only", SweepBounds(n=5)),
    SweepSpec("schubert", "inequality", SweepBounds(n=4)),
    SweepSpec("grothendieck", "certify", SweepBounds(n=4)),
    SweepSpec("degree", "certify", SweepBounds(n=4)),
):
    print("; ".join(run_sweep(spec).to_text().splitlines()[0:3]))
