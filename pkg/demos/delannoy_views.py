"""The Delannoy triangle seen four ways: as a Riordan array, as a count of
lattice paths, rectified into the symmetric Delannoy square, and stretched."""
from riordanpaths import StepSpec, count_paths, ra_rectify, ra_stretch, render
from riordanpaths.catalog import delannoy

N = 7
R = delannoy(2 * N)

print("(1/(1-x), x(1+x)/(1-x)):")
print(render(R.matrix(N)))

paths = count_paths(StepSpec("(1,0),(1,1),(2,1)"), N)
print("\npaths with steps (1,0), (1,1), (2,1) agree:", paths == R.matrix(N))

square = ra_rectify(R, N)
print("\nrectified (entry (n, k) is the (n+k, k) entry of the triangle):")
print(render(square))
print("symmetric:", square.is_symmetric())

print("\nstretched (g, x f); its row sums are the diagonal sums of the triangle:")
S = ra_stretch(R).matrix(N)
print(render(S))
print("row sums:", S.row_sums())
