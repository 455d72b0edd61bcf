#!/usr/bin/env python3
"""Alternating sign matrices and their domain-wall six-vertex pictures."""

from sixvertex.algebra import VarTable, format_polynomial
from sixvertex.asm import (
    asm_generating_function,
    asm_statistics,
    asm_to_sixvertex,
    enumerate_asm,
    vertex_type_counts,
    weighted_configuration_sum,
)

three = enumerate_asm(3)
print(len(three), "ASMs of size 3")
for a in three:
    s = asm_statistics(a)
    print(a, f"   nu={s.nu} mu={s.mu} rho={s.rho}", sep="\n")
    print()

# the one with a -1 in the middle, drawn as vertex types
center = [a for a in three if asm_statistics(a).mu][0]
c = asm_to_sixvertex(center)
for row in c.grid():
    print(" ".join(row))
print("type counts:", vertex_type_counts(c))

print("Z_ASM(3) =", format_polynomial(asm_generating_function(3)))

# x = u - 1, y = u, z = 1 collapses the generating function to a power of u
t = VarTable(["x", "y", "z", "u"])
u = t.var("u")
for n in range(1, 5):
    specialized = asm_generating_function(n, t).subs({"x": u - 1, "y": u, "z": 1})
    print(f"n={n}:", format_polynomial(specialized))

# the same count from vertex weights: sum over configurations = (2v)^(n(n+1)/2)
print("weighted sum n=3:", format_polynomial(weighted_configuration_sum(3)))
