"""Hypergraph transversals and their forced quotient matrices.

An l-fold transversal of a hypergraph is a vertex set that meets every
hyperedge exactly l times.  For a k-uniform r-regular hypergraph the
indicator 2-coloring of such a set is always perfect on the vertex
multigraph (with incidence loops kept), with quotient
[[l r, (k-l) r], [l r, (k-l) r]], and conversely.
"""

import numpy as np

from pcolor import (
    Coloring,
    design_hypergraph,
    fano,
    incidence_bipartite,
    hypergraph_is_perfect,
    induce_edge_coloring,
    ksubsets,
    line_multigraph,
    m12,
    quotient_matrix,
    restrict_bipartite_coloring,
    transversal_quotient,
    triangle_hypergraph,
    verify_quotient,
    verify_transversal,
)

# ----------------------------------------------- matchings meet triangles

# Vertices of this hypergraph are the 6 edges of K_4; each of the 4
# triangles contributes a hyperedge (3-uniform, 2-regular).
H = triangle_hypergraph(4)
print("K_4 triangle hypergraph: %d vertices, %d hyperedges"
      % (H.n, len(H.edges)))

# A perfect matching of K_4 shares exactly one edge with every
# triangle, so it is a 1-fold transversal.
pairs = ksubsets(4, 2)
matching = [pairs.index((0, 1)), pairs.index((2, 3))]
print("matching {01, 23} is a 1-fold transversal:",
      verify_transversal(H, matching, 1))
print("three edges at a vertex are not:",
      verify_transversal(H, [0, 1, 2], 1))

# The forced quotient and its verification on the vertex multigraph.
S = transversal_quotient(k=3, r=2, l=1)
print("forced quotient:", S.tolist())
G = m12(incidence_bipartite(H), keep_loops=True)
f = Coloring.from_set(H.n, matching)
print("indicator coloring verifies it:", verify_quotient(G, f, S))

# The diagonal of the loop-keeping multigraph counts incident
# hyperedges, one loop each.
print("m12 diagonal (vertex degrees):", np.diag(G.adj).tolist())

# --------------------------------------- designs are transversals too

# In the hypergraph whose vertices are all 3-subsets of 7 points, with
# one hyperedge per pair (all 3-subsets through that pair), a 2-(7,3,1)
# design is precisely a vertex set meeting every hyperedge once.
HD = design_hypergraph(7, 3, 2)
triples = ksubsets(7, 3)
blocks = [triples.index(b) for b in fano().blocks]
print("design hypergraph: %d vertices, %d hyperedges, %d-uniform, %d-regular"
      % (HD.n, len(HD.edges), HD.uniform_size(), HD.regularity()))
print("Fano blocks form a 1-fold transversal:",
      verify_transversal(HD, blocks, 1))
print("its quotient:", transversal_quotient(k=5, r=3, l=1).tolist())

# ------------------------------------ colorings seen from the hyperedges

# A perfect vertex coloring also acts on hyperedges: color each
# hyperedge by its color composition.  Take the 10 edges of K_5 colored
# by membership in the pentagon 0-1-2-3-4-0.
H5 = triangle_hypergraph(5)
pairs5 = ksubsets(5, 2)
pentagon = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
f5 = Coloring.from_set(H5.n, [pairs5.index(tuple(sorted(e))) for e in pentagon])
rep = hypergraph_is_perfect(H5, f5)
print("pentagon indicator is perfect:", bool(rep))
print("composition tables:", rep.tables)

# The induced hyperedge coloring is perfect on the line multigraph.
g = induce_edge_coloring(H5, f5)
print("induced triangle colors:", g.assignment.tolist())
L = line_multigraph(H5)
print("induced coloring perfect on the line multigraph:",
      bool(quotient_matrix(L, g)))

# ------------------------------- two-part colorings restrict to one part

# Coloring vertices and hyperedges together (disjoint palettes) in the
# incidence bipartite graph and restricting to the vertex side verifies
# the product quotient S1 S2 on the loop-keeping vertex multigraph.
B = incidence_bipartite(H5)
both = Coloring(np.concatenate([f5.assignment, g.assignment + 2]))
restricted, product = restrict_bipartite_coloring(B, both)
print("restricted coloring equals the pentagon indicator:",
      restricted == f5)
print("product quotient S1 S2:", product.tolist())
