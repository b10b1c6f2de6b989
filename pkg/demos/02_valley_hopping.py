#!/usr/bin/env python3
# Valley-hopping: letters hop over their smaller neighbours, toggling
# double ascents and double descents while valleys and peaks sit still.

from cyclestat import (
    orbit,
    orbit_exc_polynomial,
    parse_permutation,
    phi,
    psi,
    stat_counts,
    to_cycle_form,
    x_factorize,
)

# The word-level action. Around x = 7 the word factors as
# w1 w2 x w4 w5 with w2, w4 the maximal runs of smaller letters.
word = (8, 3, 4, 2, 7, 9, 1, 5, 6)
f = x_factorize(word, 7)
print("factorization around 7:", f.w1, f.w2, (7,), f.w4, f.w5, "->", f.kind)

p = parse_permutation("834279156")
print("phi_{6,7,8}:", p, "->", phi(p, {6, 7, 8}))
print("applied twice:", phi(phi(p, {6, 7, 8}), {6, 7, 8}), "(involution)")

# The cycle-level action works through the parenthesis-erased word and
# preserves the cycle type.
q = parse_permutation("(5,2,3)(8)(9,7,6,4,1)")
print()
print("psi_{3,7}:", to_cycle_form(q), "->", to_cycle_form(psi(q, {3, 7})))

# Orbits: only cyclic double ascents/descents can move, so the orbit of
# a permutation with d of them has 2^d members, and exactly one member
# has no cyclic double ascent at all.
r = parse_permutation("(5,2,1)(6)(8)(11,9,10,4,3,7)")
rep = orbit(r, collect_members=True)
c = stat_counts(r)
print()
print(f"orbit of {to_cycle_form(r)}:")
print(f"  size {rep.size} = 2^(n - fix - 2 cval) = 2^({r.n} - {c.fix} - {2 * c.cval})")
print(f"  representative (no double ascents): {to_cycle_form(rep.representative)}")

# Summing t^exc over one orbit always gives t^cval (1+t)^(n-fix-2cval).
print("  sum of t^exc over the orbit:", orbit_exc_polynomial(r))
