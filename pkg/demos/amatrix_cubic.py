"""Solving for f from an A-matrix that reaches two levels down.

The recurrence t[n+1,k+1] = t[n,k] + t[n-1,k+1] + t[n+2,k+3] packs into
f/x = 1 + x f + f^3/x^2.  Fixed-point iteration still converges because
every term raises the x-adic order.
"""
from riordanpaths import RArray, render, solve_f_from_amatrix, verify_amatrix
from riordanpaths.characterization import cubic_spec

spec = cubic_spec(1)
for t in spec.terms():
    print(f"  {t.coeff} * x^{t.xpow} * f^{t.upow}")

f = solve_f_from_amatrix(spec, 14)
g = f.shift(-1)
print("g:", g.to_ints())
M = RArray.bell(g).matrix(8)
print(render(M))
print("recurrence holds on the matrix:", verify_amatrix(M, spec))
