"""
The random walk index is not a metric
-------------------------------------

RWI measures how well one clustering predicts the next step of a random
walk on a similarity graph, given the other clustering. Searching every
triple of clusterings of a four-node path turns up triangle violations.
"""

from graphvi import chain_graph, rwi
from graphvi.experiments import rwi_triangle_search

path = chain_graph(4)
w = rwi_triangle_search(path)
print(f"{w.violations} of {w.triples} triples violate the triangle inequality")
print("A =", w.a.labels.tolist())
print("B =", w.b.labels.tolist())
print("C =", w.c.labels.tolist())
print(f"rwi(A,B) + rwi(B,C) = {w.d_ab + w.d_bc:.6f} < rwi(A,C) = {w.d_ac:.6f}")

# Both short sides are zero: RWI vanishes between different clusterings.
# On this path, the previous node and A's label of the current node
# always pin down which node the walk is on.
print("rwi([0,0,1,1], singletons) =", rwi(path, [0, 0, 1, 1], [0, 1, 2, 3]))
