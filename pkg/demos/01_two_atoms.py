"""
Moments of a two-atom measure
=============================

Half the mass at -1 and half at 1. Its Cauchy transform is
phi(λ) = -λ/(λ²-1), and its moments are 1, 0, 1, 0, 1, ...
"""
from fractions import Fraction

from gnmoments import RationalFunction, Polynomial, classify, moments_of, solve
from gnmoments.nevanlinna import apply_lft, verify_solution

lam = Polynomial.x()
phi = RationalFunction(-lam, lam**2 - 1)

# the first five moments
s = moments_of(phi, 4)
print("moments:", [str(x) for x in s])

# S_2 is singular and positive semidefinite: a degenerate problem
c = classify(s)
print("category:", c.category.value, " inertia:", tuple(c.inertia), " normal indices:", c.normal_indices.indices)

# with no negative squares allowed the solution is unique
rep = solve(s=s, kappa=0)
print("kappa=0:", rep.status.value, rep.unique_solution)
print("verified:", verify_solution(s, 0, "MP", rep.unique_solution).passed)

# kappa >= nu_minus + nu0 = 1 opens a family; a parameter is admitted
# only when the solution it produces has exactly kappa negative squares
rep = solve(s=s, kappa=1)
W = rep.descriptor.W
print("kappa=1:", rep.status.value, " W =", W)
for tau in (RationalFunction(0), RationalFunction(Fraction(-1), lam), RationalFunction(3, lam - 2)):
    if rep.descriptor.admits(tau):
        sol = apply_lft(W, tau)
        print(f"  tau={tau}: phi={sol}  ->", verify_solution(s, 1, "MP", sol).status)
