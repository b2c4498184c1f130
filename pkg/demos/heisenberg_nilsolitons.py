"""Lorentzian metrics on the Heisenberg group: curvature, nilsolitons, Einstein extensions.

Run: python demos/heisenberg_nilsolitons.py
"""

from algsoliton import catalog
from algsoliton.exact import format_scalar
from algsoliton.extension import build_solvable_extension, einstein_analysis
from algsoliton.geometry import einstein_constant, is_flat
from algsoliton.soliton import solve_algebraic_soliton


def diag(m):
    return ", ".join(format_scalar(m[i, i]) for i in range(m.rows))


print("Three left-invariant Lorentzian metrics on H_3\n")
for tag in ("g1", "g2", "g3"):
    m = catalog.h3_metric(tag)
    s = solve_algebraic_soliton(m)
    print(f"{tag}: Ric diagonal ({diag(m.ricci.ric)}), flat={is_flat(m)}, Einstein={einstein_constant(m)}")
    print(f"    rc = {format_scalar(s.c)} Id + D with D diagonal ({diag(s.d)}) -> {s.kind.value}")

# g1 and g2 are nilsolitons but not Einstein. Extending by the soliton
# derivation adds a direction H with <H,H> = h, and one value of h makes
# the four-dimensional solvable metric Einstein.
m = catalog.h3_metric("g1")
ext = build_solvable_extension(m, solve_algebraic_soliton(m).d)
ric = ext.result.ricci.ric
print("\nExtension of g1, Ricci diagonal as functions of h:")
for i, name in enumerate(ext.result.algebra.basis_names):
    print(f"    Ric({name},{name}) = {format_scalar(ric[i, i])}")
analysis = einstein_analysis(ext)
for h, lam in analysis.solutions:
    print(f"Einstein exactly at h = {h} with constant {lam}")

print("\nHigher Heisenberg groups H_{2n+1}, center timelike")
print(" n   Ric(F_i,F_i)  Ric(F_N,F_N)   c     D^i_i   Einstein extension (a, lambda)")
for n in range(1, 6):
    m = catalog.heisenberg(n)
    s = solve_algebraic_soliton(m)
    ext = build_solvable_extension(m, s.d, "a")
    (a, lam), = einstein_analysis(ext).solutions
    r = m.ricci.ric
    print(f"{n:2d}   {format_scalar(r[0, 0]):>10}  {format_scalar(r[-1, -1]):>12}   "
          f"{format_scalar(s.c):>4}  {format_scalar(s.d[0, 0]):>6}   ({a}, {lam})")
# Each horizontal F_i brackets with exactly one partner, so its Ricci value
# cannot depend on n; the Einstein condition still reads a = -4 (D^i_i)^2.
