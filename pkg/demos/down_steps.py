"""Paths that may step down.  The step set {(1,1), (0,-1)} has no obvious
row-by-row recursion, but the DP oracle still counts it once a potential
functional is found, and the counts match the Bell matrix of c(x)."""
from riordanpaths import StepSpec, count_paths, find_potential, production_matrix, render
from riordanpaths.catalog import catalan_matrix

N = 8
spec = StepSpec("(1,1),(0,-1)")
pot = find_potential(spec)
print(f"potential {pot.alpha}*n {pot.beta:+d}*k increases along every step")

M = count_paths(spec, N)
print(render(M))
print("equals (c(x), x c(x)):", M == catalan_matrix(N).matrix(N))

P = production_matrix(catalan_matrix(N + 1).matrix(N + 1), N)
print("\nZ-sequence:", P.z)
print("A-sequence:", P.a)
