"""Rigid motions of the Euclidean and Minkowski planes.

Run: python demos/motion_groups.py
"""

from algsoliton import catalog
from algsoliton.exact import format_scalar
from algsoliton.extension import build_solvable_extension, einstein_parameter_solve
from algsoliton.liealg import classify_structure, derivation_basis
from algsoliton.soliton import solve_algebraic_soliton

for label, m in (("E(2)", catalog.euclidean_motion()), ("E(1,1)", catalog.minkowski_motion())):
    names = m.algebra.basis_names
    print(f"{label}: {classify_structure(m.algebra).value}, dim Der = {derivation_basis(m.algebra).dim}")
    g = m.connection.gamma
    for i in range(3):
        for j in range(3):
            if any(g[i][j]):
                terms = " + ".join(f"{format_scalar(c)} {names[k]}" for k, c in enumerate(g[i][j]) if c)
                print(f"    nabla_{names[i]} {names[j]} = {terms}")
    s = solve_algebraic_soliton(m)
    print(f"    Ric(F1,F1) = {m.ricci.ric[0, 0]}, rc = {s.c} Id + diag"
          f"({', '.join(format_scalar(s.d[i, i]) for i in range(3))}), {s.kind.value}")
    for h, lam in einstein_parameter_solve(build_solvable_extension(m, s.d)):
        print(f"    extension Einstein at h = {h}, lambda = {lam}")
