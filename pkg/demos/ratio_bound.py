"""The ratio bound on sparse vertex sets, with exact certificates.

For an r-regular multigraph with least eigenvalue theta, any vertex set
in which every member has at most t neighbors inside the set has size at
most (t - theta) n / (r - theta).  When a set attains the bound, its
indicator 2-coloring is forced to be perfect with quotient
[[t, r-t], [t-theta, r-t+theta]], and the library verifies that too.
"""

from pcolor import (
    check_dh_extremal,
    delsarte_clique_bound,
    dh_bound,
    enumerate_subspaces,
    fano,
    grassmann,
    min_eigenvalue,
    petersen,
    spectrum,
    steiner_independence_check,
)
from pcolor.suites import find_spread

# ---------------------------------------------------- the Petersen graph

# Integer eigenvalues are reported exactly, so the bound is a Fraction.
P = petersen()
print("Petersen spectrum:", spectrum(P))
print("least eigenvalue:", min_eigenvalue(P))
print("independence bound (t=0):", dh_bound(P, 0))

# The 4 pairwise non-adjacent vertices 0..3 attain it, and the report
# carries the forced quotient matrix as a certificate.
rep = check_dh_extremal(P, [0, 1, 2, 3], t=0)
print("set of 4 is extremal:", rep.extremal,
      "quotient:", rep.quotient_if_extremal.tolist())

# t=1 allows one neighbor inside the set; the bound relaxes to 6.
print("bound with t=1:", dh_bound(P, 1))

# --------------------------------------- Steiner systems sit on the bound

# Blocks of a 2-(7,3,1) design pairwise share at most one point, so they
# are independent in the multigraph that joins 3-sets once per common
# pair.  The design having exactly 7 blocks is no accident: 7 is the
# ratio bound for that multigraph, and the check verifies extremality.
rep = steiner_independence_check(fano())
print("Fano blocks: bound", rep.bound, "attained:", rep.extremal)
print("forced quotient:", rep.quotient_if_extremal.tolist())

# ------------------------------------------- a spread of lines over GF(2)

# The 2-dimensional subspaces of GF(2)^4 form the Grassmann graph
# (adjacent when they meet in a line through the origin, here a point).
# A spread partitions the 15 nonzero vectors into 5 disjoint planes;
# those 5 vertices are independent and again attain the ratio bound.
G = grassmann(4, 2, 2)
lines = enumerate_subspaces(4, 2, 2)
spread = [lines.index(s) for s in find_spread(lines)]
print("Grassmann graph on", G.n, "subspaces, degree", G.degree())
print("spread found at vertices:", spread)
rep = check_dh_extremal(G, spread, t=0)
print("bound", rep.bound, "attained:", rep.extremal,
      "quotient:", rep.quotient_if_extremal.tolist())

# ------------------------------------------------------- clique version

# The same eigenvalue controls cliques from the other side: at most
# 1 - r/theta vertices are pairwise adjacent.
print("Petersen clique bound:", delsarte_clique_bound(P),
      "(triangles would need 3)")
print("Grassmann clique bound:", delsarte_clique_bound(G))
