"""Perfect colorings and quotient matrices, from the ground up.

A coloring of a graph is perfect (the partition is equitable) when every
vertex of color i has the same number of color-j neighbors, for all i, j.
Those counts form the quotient matrix S, and the defining identity is
M F = F S for the adjacency matrix M and the 0/1 color indicator F.
"""

import numpy as np

from pcolor import (
    Coloring,
    Multigraph,
    complete_graph,
    cycle_graph,
    lift_quotient_eigenvector,
    merge_colors,
    petersen,
    quotient_matrix,
    two_coloring_eigenfunction,
    verify_quotient,
)

# ------------------------------------------------------ a first example

# Alternating colors around an even cycle: every vertex sees two
# neighbors of the opposite color.
G = cycle_graph(6)
f = Coloring([0, 1, 0, 1, 0, 1])
S = quotient_matrix(G, f)
print("C_6 alternating quotient:", S.tolist())

# The same coloring idea fails on an odd cycle, and the checker says
# exactly where: two same-colored vertices with different neighbor
# profiles.
G5 = cycle_graph(5)
W = quotient_matrix(G5, Coloring([0, 1, 0, 1, 0]))
print("C_5 witness: vertices", W.u, "and", W.v,
      "see", W.profile_u, "vs", W.profile_v)

# ------------------------------------------------- the Petersen graph

# Distance classes from a vertex always give an equitable partition of
# a distance-regular graph.
P = petersen()
dist = [0] + [1 if P.adj[0, v] else 2 for v in range(1, 10)]
S = quotient_matrix(P, Coloring(dist))
print("Petersen distance partition quotient:")
print(np.array(S.tolist()))

# Row sums of the quotient reproduce the degree.
print("row sums:", S.row_sums().tolist(), "(Petersen is 3-regular)")

# verify_quotient checks a specific matrix rather than solving for one.
print("verifies [[0,3,0],[1,0,2],[0,1,2]]:",
      verify_quotient(P, Coloring(dist), [[0, 3, 0], [1, 0, 2], [0, 1, 2]]))

# ------------------------------------------------------- loops count once

# A loop contributes 1 to its vertex's degree and 1 to the diagonal.
L = Multigraph([[1, 2], [2, 0]])
print("degrees with a loop at vertex 0:", L.degrees().tolist())
print("1-vertex-per-color quotient:",
      quotient_matrix(L, Coloring([0, 1])).tolist())

# -------------------------------------------- spectra ride along for free

# Any eigenvector u of S lifts to an eigenvector F u of the adjacency
# matrix with the same eigenvalue.  For a 2-coloring of a regular graph
# the lifted eigenfunction and its eigenvalue come out in exact rationals.
f2 = Coloring.from_set(10, [0, 1, 2, 3])            # independent set of size 4
h, theta = two_coloring_eigenfunction(P, f2)
print("lifted eigenvalue:", theta)
print("M h equals theta h:", bool((P.adj @ h == theta * h).all()))

S2 = quotient_matrix(P, f2)
u = [3, -2]                                 # eigenvector of [[0,3],[2,1]]
check = np.array(S2.tolist()) @ u
print("quotient eigencheck S u:", check.tolist(), "vs theta u:",
      [theta * x for x in u])
lifted = lift_quotient_eigenvector(f2, u)
print("the lift is an adjacency eigenvector:",
      bool((P.adj @ lifted == theta * lifted).all()))

# --------------------------------------------------------- merging colors

# Coarsening a perfect coloring is only sometimes perfect.  Merging the
# distance classes of the Petersen partition breaks (distance-1 and
# distance-2 vertices see vertex 0 differently), and the witness shows it:
broken = merge_colors(Coloring(dist), [[0], [1, 2]])
W2 = quotient_matrix(P, broken)
print("bad merge witness:", W2.u, W2.v, W2.profile_u, W2.profile_v)

# whereas the 4 singleton classes of K_4 merge perfectly into pairs.
K4 = complete_graph(4)
merged = merge_colors(Coloring([0, 1, 2, 3]), [[0, 1], [2, 3]])
print("good merge quotient:", quotient_matrix(K4, merged).tolist())
