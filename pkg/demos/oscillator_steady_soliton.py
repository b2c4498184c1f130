"""The oscillator group: steady solvsolitons that never extend to Einstein metrics.

Run: python demos/oscillator_steady_soliton.py
"""

from fractions import Fraction

from algsoliton import catalog
from algsoliton.exact import format_scalar
from algsoliton.extension import build_solvable_extension, einstein_analysis
from algsoliton.soliton import solve_algebraic_soliton

for m_, lambdas in ((1, [1]), (2, [1, 2])):
    osc = catalog.oscillator(m_, lambdas, epsilon=0)
    s = solve_algebraic_soliton(osc)
    names = osc.algebra.basis_names
    nonzero = [(names[i], names[j], format_scalar(s.d[i, j]))
               for i in range(osc.dim) for j in range(osc.dim) if s.d[i, j]]
    print(f"m={m_}, lambdas={lambdas}: c = {s.c}, {s.kind.value}, tr D = {s.d.trace()}")
    for row, col, v in nonzero:
        print(f"    D {col} has {v} along {row}")
    ext = build_solvable_extension(osc, s.d)
    a = einstein_analysis(ext)
    q = ext.result.dim - 1
    print(f"    extension: Ric(Q,Q) = {ext.result.ricci.ric[q, q]}, Einstein parameters {a.solutions or 'none'}")

# Turning on <P,P> = epsilon destroys the soliton: the linear system for
# (c, D) becomes inconsistent.
for eps in ("1", "-1", "1/2"):
    osc = catalog.oscillator(1, [1], Fraction(eps))
    print(f"epsilon = {eps}: algebraic soliton -> {solve_algebraic_soliton(osc)}")
