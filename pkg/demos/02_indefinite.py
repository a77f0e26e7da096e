"""
Indefinite data
===============

A negative first moment cannot come from a positive measure, yet it is the
moment of a function with one negative square.
"""
from gnmoments import MomentSequence, RationalFunction, solve
from gnmoments.nevanlinna import apply_lft, kronecker_kappa

s = MomentSequence(["-1", "0"])
for kappa in (0, 1):
    rep = solve(s=s, kappa=kappa)
    print(f"s=(-1,0), kappa={kappa}: {rep.status.value} ({rep.reason.value})")

W = solve(s=s, kappa=1).descriptor.W
phi = apply_lft(W, RationalFunction(0))
print("W =", W, " tau=0 gives", phi, "with kappa", kronecker_kappa(phi))

# (0, 0, 1): S_1 = [[0, 0], [0, 1]] has no normal index at all
s = MomentSequence([0, 0, 1])
for kappa in (0, 1):
    rep = solve(s=s, kappa=kappa)
    print(f"s=(0,0,1), kappa={kappa}: {rep.status.value} ({rep.reason.value})")
d = solve(s=s, kappa=1).descriptor
print("W =", d.W, " tau=0 gives", apply_lft(d.W, RationalFunction(0)))
