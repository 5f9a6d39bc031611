"""Motzkin, Schroeder and Catalan numbers as Jacobi continued fractions,
plus the Hankel transforms those fractions predict."""
from riordanpaths import CFSpec, cf_eval, hankel, jfraction_extract
from riordanpaths.catalog import catalan, motzkin, schroeder

for name, build in (("Motzkin", motzkin), ("Schroeder", schroeder), ("Catalan", catalan)):
    g = build(21)
    spec = jfraction_extract(g, 10)
    print(f"{name}: b = {[int(v) for v in spec.b]}")
    print(f"{' ' * len(name)}  lam = {[int(v) for v in spec.lam]}")
    back = cf_eval(spec, 20, check=False)
    print(f"{' ' * len(name)}  round trip exact: {back == g.truncate(20)}")
    print(f"{' ' * len(name)}  Hankel: {hankel(g.to_ints(), 8)}")

# a constant fraction gives the (r, s) family
spec = CFSpec.periodic("jacobi", 2, 3, 1, 1, 10)
print("\nb = 2, 3, 3, ...; lam = 1, 1, ...:", cf_eval(spec, 12).to_ints())
