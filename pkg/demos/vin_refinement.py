"""
Neighbourhood refinement
------------------------

VIN splits every cluster by the multiset of labels each point sees in its
neighbourhood, then takes VI between the two refined clusterings.
"""

from graphvi import chain_adjacency, refine, signatures, vi, vin

adj = chain_adjacency(6)
c = [0, 0, 0, 1, 1, 1]
for i, s in enumerate(signatures(c, adj)):
    print(f"point {i}: label {s.central}, neighbours {s.neighbor_labels}")
print("refined labels:", refine(c, adj).labels.labels.tolist())

# Two clusterings that differ only in where one point moved
d = [0, 0, 1, 1, 1, 1]
print(f"vi = {vi(c, d):.6f}   vin = {vin(c, d, adj):.6f}")

# Different clusterings can share a refinement, so VIN is a pseudometric
path = chain_adjacency(4)
print("vin([0,0,1,1], [0,1,0,1]) on a path =", vin([0, 0, 1, 1], [0, 1, 0, 1], path))
