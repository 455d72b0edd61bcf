#!/usr/bin/env python3
"""A short tour of the t = -1 lattice: rows, wavefunctions, scalar products."""

from fractions import Fraction

from sixvertex.algebra import exact_div, format_polynomial
from sixvertex.lattice import (
    TILDE,
    LatticeConfig,
    StateVector,
    apply_row,
    check_eigenstate,
    create_state,
    dwbpf,
    element_in_z,
    scalar_product_identity,
    wavefunction_closed,
)
from sixvertex.symfunc import beta_pair_product

# one site, one creation row: B(v)|0> = 2v|1>
cfg = LatticeConfig.create(1, ["v"])
print("B(v)|0> on one site:", {k: format_polynomial(a) for k, a in apply_row("B", "v", StateVector.vacuum(cfg), cfg)})

# a single-row element on five sites, written in z
cfg5 = LatticeConfig.create(5, ["z"], normalization=TILDE)
q = element_in_z("B", (1, 0, 0, 1, 1), (0, 0, 1, 1, 0), "z", cfg5)
print("<10011|B|00110> =", format_polynomial(q.num), "/", format_polynomial(q.den))

# wavefunctions: contract two rows on four sites and compare with the closed form
zs = ["z1", "z2"]
cfg4 = LatticeConfig.create(4, zs, normalization=TILDE)
state = create_state([cfg4.var(z) for z in zs], cfg4)
pairs = beta_pair_product([cfg4.var(z) for z in zs], cfg4.beta, cfg4.table)
for occ, amp in state:
    same = amp == wavefunction_closed(occ, zs, cfg4)
    rest = exact_div(amp, pairs)  # beta drops out after this division
    print(" ", "".join(map(str, occ)), "closed form" if same else "MISMATCH", " quotient:", format_polynomial(rest))

# two-particle scalar product against its determinant
us, vs = ["u1", "u2"], ["v1", "v2"]
print("scalar product identity, M=3 N=2:", scalar_product_identity(us, vs, LatticeConfig.create(3, us + vs)).holds)

# domain wall: the homogeneous 3x3 value is (2v)^6
cfg3 = LatticeConfig.create(3, ["v"])
z = dwbpf(["v"] * 3, None, "direct", cfg3)
print("Z_3 =", format_polynomial(exact_div(z.num, z.den)))

# an on-shell state: 1/v - beta = 1 so (1/v - beta)^M = 1 for every M
for M in (2, 4):
    ok = check_eigenstate([Fraction(1, 2)], LatticeConfig.create(M, ["u"], beta=1)).holds
    print(f"eigenstate M={M}:", ok)
