"""
Schur steps and the resolvent matrix
====================================

Each step peels one normal index off the Hankel matrix. The composed
linear fractional map has constant determinant.
"""
from gnmoments import MomentSequence, pq_polynomials, resolvent, schur_chain
from gnmoments.serialize import chain_to_json

s = MomentSequence(["2", "1", "3", "-1", "4", "0", "5"])
chain = schur_chain(s)
print("moment scale:", chain.moment_scale)
for step in chain_to_json(chain):
    print(step)
print("residual:", [str(x) for x in chain.residual])

P, Q = pq_polynomials(chain)
for j, (p, q) in enumerate(zip(P, Q)):
    print(f"P~_{j} = {p.display():<24} Q~_{j} = {q.display()}")

for j in range(chain.N + 1):
    W = resolvent(chain, j)
    print(f"j={j}: det W = {W.det().display()}  (scale {W.scale})")
