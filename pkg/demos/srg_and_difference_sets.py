"""Strongly regular graphs, difference sets, and the colorings they carry.

A connected regular graph is strongly regular when the number of common
neighbors of a pair depends only on whether the pair is adjacent.  The
same information can live in a group: a symmetric connection set D is a
partial difference set exactly when its Cayley graph is strongly
regular, and both objects carry characteristic perfect colorings of
auxiliary hypergraphs.
"""

import numpy as np

from pcolor import (
    AbelianGroup,
    Multigraph,
    cayley,
    cayley_srg_bridge,
    cycle_graph,
    design_to_coloring,
    difference_set_to_symmetric_design,
    grassmann,
    hypergraph_is_perfect,
    johnson_design_multigraph,
    pds_params_from_set,
    petersen,
    quotient_matrix,
    srg_gamma_coloring,
    triangle_hypergraph,
    verify_design,
    verify_srg,
)

# ------------------------------------------------- recognizing an SRG

print("Petersen:", verify_srg(petersen()))
print("Grassmann(4,2,2):", verify_srg(grassmann(4, 2, 2)))

# C_6 is regular but not strongly regular; the witness names a pair.
w = verify_srg(cycle_graph(6))
print("C_6:", w.reason, "at pair", w.witness)

# --------------------------------------- the adjacency-pair coloring

# Color the pairs of points (vertices of the triangle hypergraph) by
# adjacency in G.  For an SRG the coloring is perfect: all composition
# tables within a color agree.
P = petersen()
f = srg_gamma_coloring(P)
rep = hypergraph_is_perfect(triangle_hypergraph(P.n), f)
print("Petersen pair coloring perfect:", bool(rep))

# The converse direction fails on a short, fixed list of stragglers.
# The star K_{1,4} is irregular, hence rejected by verify_srg, yet its
# pair coloring is perfect anyway.
star = np.zeros((5, 5), dtype=np.int64)
star[0, 1:] = star[1:, 0] = 1
star = Multigraph(star)
print("star verdict:", verify_srg(star).reason)
print("star pair coloring perfect:",
      bool(hypergraph_is_perfect(triangle_hypergraph(5),
                                 srg_gamma_coloring(star))))

# So perfection of this coloring is slightly weaker than strong
# regularity: it also admits stars, complements of stars, and disjoint
# unions of equal cliques.

# ---------------------------------------------- Paley difference sets

# Quadratic residues mod a prime p = 1 mod 4 form a partial difference
# set; in Z_13 the residues give parameters (13, 6, 2, 3).
K = AbelianGroup([13])
residues = sorted({(x * x) % 13 for x in range(1, 13)})
D = [(r,) for r in residues]
print("Z_13 residues:", residues)
print("difference counts:", pds_params_from_set(K, D))

# The Cayley graph of the set is strongly regular with the same
# parameters, and the bridge checks both sides in one call.
print("Cayley graph:", verify_srg(cayley(K, D)))
bridge = cayley_srg_bridge(K, D)
print("bridge consistent:", bridge.consistent,
      "degenerate:", bridge.degenerate)

# A non-example: {1, -1} in Z_6 gives C_6, regular but not an SRG, and
# its difference counts fail too; the bridge agrees on the failure.
bad = cayley_srg_bridge(AbelianGroup([6]), [(1,), (5,)])
print("C_6 bridge: srg ok:", bool(bad.srg), "pds ok:", bool(bad.pds),
      "consistent:", bad.consistent)

# ------------------------------------- difference sets build designs

# When lambda = mu (a genuine difference set), the translates of D are
# the blocks of a symmetric 2-design.  {1,2,4} in Z_7 rebuilds the Fano
# plane.
K7 = AbelianGroup([7])
design = difference_set_to_symmetric_design(K7, [(1,), (2,), (4,)])
print("translates of {1,2,4} in Z_7 give a 2-(%d,%d,%d) design:"
      % (design.n, design.k, design.lam), verify_design(design))
print("blocks:", design.blocks)

# And that design hands back a perfect 2-coloring, closing the loop
# from group arithmetic to an equitable partition.
G = johnson_design_multigraph(7, 3, 2)
coloring = design_to_coloring(design, G)
print("membership coloring quotient:", quotient_matrix(G, coloring).tolist())
