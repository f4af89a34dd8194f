"""Tour of the centrality metrics on a tiny hand-built graph.

A star graph makes the Distinctiveness idea visible: the center touches
many loosely connected leaves and scores high, while each leaf touches one
highly connected hub and scores low (or even negative for alpha > 1).
"""

import numpy as np

import netdistinct as nd

# star: node 0 is the hub, nodes 1..4 are leaves
g = nd.Graph(5, [0, 0, 0, 0], [1, 2, 3, 4])

print("degrees:  ", g.degrees)
print("strengths:", g.strengths)

for alpha in (0.5, 1.0, 2.0):
    print(f"\nalpha = {alpha}")
    for name, fn in [("d1", nd.d1), ("d2", nd.d2), ("d3", nd.d3),
                     ("d4", nd.d4), ("d5", nd.d5)]:
        print(f"  {name}: {np.round(fn(g, alpha).scores, 4)}")

# Beta and Gamma with the harmonized parameters
lam1 = nd.dominant_eigenvalue(g)
print(f"\ndominant eigenvalue: {lam1:.6f} (sqrt(4) for a 4-leaf star)")
gamma, beta = nd.harmonize(1.0, lam1)
print(f"harmonized at alpha=1: gamma={gamma}, beta={beta:.6f}")
print("beta centrality: ", np.round(nd.beta_centrality(g, beta).scores, 4))
print("gamma centrality:", np.round(nd.gamma_centrality(g, gamma).scores, 4))

# on unweighted graphs, gamma(-alpha) reproduces d5(alpha) exactly
print("\nd5(1.0)   :", nd.d5(g, 1.0).scores)
print("gamma(-1.0):", nd.gamma_centrality(g, -1.0).scores)
