"""Bent functions, their difference sets, and subspace colorings.

A Boolean function on an even number of variables is bent when all its
Walsh coefficients have absolute value 2^{n/2}, equivalently when its
sign autoconvolution is a scaled delta.  Bent functions sit at the
heart of several perfect colorings: their supports are difference sets,
and counting ones on 2-dimensional subspaces produces a perfect
4-coloring of the Grassmann graph that remembers the function exactly.
"""

from collections import Counter

import numpy as np

from pcolor import (
    AbelianGroup,
    BooleanFunction,
    Coloring,
    bent_delta_coloring,
    bent_to_difference_set,
    bent_to_grassmann_coloring,
    delta_hypergraph,
    grassmann,
    grassmann_coloring_to_bent,
    incidence_bipartite,
    infer_ones_count_labeling,
    int_to_vec,
    is_bent,
    m12,
    merged_two_coloring_matrix,
    merge_colors,
    pair_spectrum,
    quotient_matrix,
    theorem_avg_matrix,
    verify_pds,
    walsh_transform,
)
from pcolor.suites import maiorana_mcfarland

# --------------------------------------------------------- a bent function

# The inner-product construction x . y (+1 here, picking the heavier of
# the two complementary supports) is bent for every even n.
b = maiorana_mcfarland(4)
print("truth table:", "".join(map(str, b.tt.tolist())))
print("weight:", b.weight(), "  bent:", is_bent(b))
print("Walsh coefficients:", walsh_transform(b).tolist())

# Bentness fails for almost everything else, e.g. a single flipped bit.
flipped = BooleanFunction(np.concatenate([[1 - b.tt[0]], b.tt[1:]]))
print("one bit flipped still bent:", is_bent(flipped))

# The census on two variables: exactly 8 of the 16 functions are bent.
count = sum(is_bent(BooleanFunction([(i >> k) & 1 for k in range(4)]))
            for i in range(16))
print("bent functions on 2 variables:", count, "of 16")

# --------------------------------------------- the support is a difference set

# The support of a bent function is a (2^n, 2^{n-1} +- 2^{n/2-1}, ...)
# difference set in the elementary abelian group.
D, params = bent_to_difference_set(b)
print("difference set parameters:", params)
K = AbelianGroup([2, 2, 2, 2])
print("verifies as a PDS:",
      bool(verify_pds(K, [int_to_vec(x, 4) for x in D], params)))

# Restricted to nonzero vectors it is a perfect 2-coloring of the
# hypergraph whose hyperedges are the zero-sum triples.
f = bent_delta_coloring(b)
H = delta_hypergraph(4)
G = m12(incidence_bipartite(H), keep_loops=True)
print("delta coloring quotient (loops kept):",
      quotient_matrix(G, f).tolist())

# ------------------------------------------ ones counts on 2-d subspaces

# Count ones of b on each 2-dimensional subspace of GF(2)^4 (4 points
# each).  Only counts 0..3 occur for this b, and coloring subspaces by
# that count is a perfect 4-coloring of the Grassmann graph.
g = bent_to_grassmann_coloring(b)
print("subspaces per ones-count:", Counter(g.assignment.tolist()))
GG = grassmann(4, 2, 2)
S = quotient_matrix(GG, g)
print("4-coloring quotient:")
print(np.array(S.tolist()))

# That quotient is predicted exactly by an averaging argument.
print("matches the predicted matrix:", S.tolist() == theorem_avg_matrix(4).tolist())

# Behind the prediction sit the pair counts of (b(x), b(x+y)): for a
# bent function they are the same for every nonzero shift y.
spectra = {pair_spectrum(b, y).as_tuple() for y in range(1, 16)}
print("pair spectrum, constant over all shifts:", spectra)

# Merging counts {0,2} vs {1,3} coarsens it to a perfect 2-coloring.
merged = merge_colors(g, [[0, 2], [1, 3]])
print("merged quotient:", quotient_matrix(GG, merged).tolist(),
      "predicted:", merged_two_coloring_matrix(4).tolist())

# ----------------------------------------------- the coloring remembers b

# The ones-count 4-coloring determines the bent function: each nonzero
# vector lies in enough subspaces to average the counts back out.
back = grassmann_coloring_to_bent(g, 4)
print("recovered function equals b:", back == b)

# Even after scrambling the color names, the right relabeling can be
# inferred from the quotient matrix the ones-count coloring must satisfy.
shuffle = [2, 0, 3, 1]
scrambled = Coloring([shuffle[c] for c in g.assignment])
inferred = infer_ones_count_labeling(scrambled, 4)
print("inferred relabeling recovers the coloring:", inferred == g)
print("and the function:", grassmann_coloring_to_bent(inferred, 4) == b)
