"""Block designs, subspace designs, their quotient matrices, and Hadamard
matrices.

A t-(n,k,lambda) design is a collection of k-subsets (blocks) of an
n-set covering every t-subset exactly lambda times; equivalently its
block set is a lambda-fold transversal of the hypergraph whose
hyperedges group the k-subsets containing a fixed t-subset.  Stripping
loops from that transversal quotient gives, with R = C(k,t) and
K = C(n-t,k-t), the matrix

    [[(lambda-1) R, (K-lambda) R], [lambda R, (K-1-lambda) R]]

which the indicator coloring of a true design verifies on the multigraph
whose edge multiplicities are C(|u & v|, t) ("actual" form below).  A
widely quoted closed form replaces K-1 by C(n-k,k-t); it agrees only at
t = k-1 (and disagrees for the subspace analog even there), so both
variants are exposed together with a comparison report rather than
silently picking one.
"""

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .families import (Subspace, enumerate_subspaces, gaussian_binomial,
                       johnson_design_multigraph, ksubsets,
                       subspace_design_hypergraph)
from .hypergraphs import incidence_bipartite, m12
from .multigraph import Coloring, QuotientMatrix
from .spectral import check_dh_extremal


@dataclass
class BlockDesign:
    """Candidate t-(n,k,lambda) design; validity via verify_design."""

    n: int
    k: int
    t: int
    lam: int
    blocks: list

    def __post_init__(self):
        self.blocks = [tuple(sorted(int(v) for v in b)) for b in self.blocks]
        for b in self.blocks:
            if len(b) != self.k or len(set(b)) != self.k:
                raise ValueError("every block must have k distinct members")
            if b[0] < 0 or b[-1] >= self.n:
                raise ValueError("block member out of range")


@dataclass
class SubspaceDesign:
    """Candidate t-(n,k,lambda)_q subspace design."""

    n: int
    k: int
    t: int
    lam: int
    q: int
    subspaces: list

    def __post_init__(self):
        for s in self.subspaces:
            if not isinstance(s, Subspace) or s.k != self.k or s.n != self.n or s.q != self.q:
                raise ValueError("members must be k-subspaces of the same ambient space")


def design_violation(D):
    """First t-subset covered by the wrong number of blocks, or None.

    Returns (t_subset, count) for the lexicographically first violation.
    """
    masks = [sum(1 << v for v in b) for b in D.blocks]
    for T in itertools.combinations(range(D.n), D.t):
        tmask = sum(1 << v for v in T)
        count = sum((m & tmask) == tmask for m in masks)
        if count != D.lam:
            return T, count
    return None


def verify_design(D):
    """True iff every t-subset lies in exactly lambda blocks."""
    return design_violation(D) is None


def subspace_design_violation(D):
    """First t-subspace covered by the wrong number of members, or None.

    Returns (subspace, count) in canonical enumeration order.
    """
    for T in enumerate_subspaces(D.n, D.t, D.q):
        count = sum(U.contains(T) for U in D.subspaces)
        if count != D.lam:
            return T, count
    return None


def verify_subspace_design(D):
    """True iff every t-subspace lies in exactly lambda member subspaces."""
    return subspace_design_violation(D) is None


def _two_color_quotient(R, K, lam):
    if not 0 < lam <= K:
        raise ValueError("lambda must satisfy 0 < lambda <= max block count per t-set")
    if lam == K:
        # complement color class empty: the design is everything, one color
        return QuotientMatrix([[(lam - 1) * R]])
    return QuotientMatrix([[(lam - 1) * R, (K - lam) * R],
                           [lam * R, (K - 1 - lam) * R]])


def design_quotient_actual(n, k, t, lam):
    """Quotient a true t-(n,k,lambda) design's indicator verifies.

    R = C(k,t), K = C(n-t,k-t); on johnson_design_multigraph(n,k,t).
    Degenerate lambda = K (all blocks) returns the 1x1 monochromatic case.
    """
    if not 0 < t < k < n:
        raise ValueError("requires 0 < t < k < n")
    return _two_color_quotient(comb(k, t), comb(n - t, k - t), lam)


def design_quotient_reference(n, k, t, lam):
    """The commonly quoted closed form, kept verbatim for comparison.

    Valid only at t = k-1; for t < k-1 it disagrees with the brute-force
    quotient (see design_quotient_report).
    """
    if not 0 < t < k < n:
        raise ValueError("requires 0 < t < k < n")
    R = comb(k, t)
    C = comb(n - k, k - t)
    if lam == C + 1:
        return QuotientMatrix([[(lam - 1) * R]])
    return QuotientMatrix([[(lam - 1) * R, (C - lam + 1) * R],
                           [lam * R, (C - lam) * R]])


def subspace_design_quotient_actual(n, k, t, lam, q):
    """Quotient a true t-(n,k,lambda)_q design's indicator verifies.

    R = [k t]_q, K = [n-t k-t]_q; on the loopless m12 of the k-subspace
    hypergraph grouped by t-subspaces.
    """
    if not 0 < t < k < n:
        raise ValueError("requires 0 < t < k < n")
    return _two_color_quotient(gaussian_binomial(k, t, q),
                               gaussian_binomial(n - t, k - t, q), lam)


def subspace_design_quotient_reference(n, k, t, lam, q):
    """Subspace analog of the quoted closed form; disagrees with the
    brute-force quotient even at t = k-1 (see the spread example)."""
    if not 0 < t < k < n:
        raise ValueError("requires 0 < t < k < n")
    R = gaussian_binomial(k, t, q)
    C = gaussian_binomial(n - k, k - t, q)
    if lam == C + 1:
        return QuotientMatrix([[(lam - 1) * R]])
    return QuotientMatrix([[(lam - 1) * R, (C - lam + 1) * R],
                           [lam * R, (C - lam) * R]])


@dataclass
class QuotientComparison:
    """Side-by-side of the derived and the quoted quotient formulas."""

    actual: QuotientMatrix
    reference: QuotientMatrix
    agree: bool


def design_quotient_report(n, k, t, lam):
    a = design_quotient_actual(n, k, t, lam)
    r = design_quotient_reference(n, k, t, lam)
    return QuotientComparison(a, r, a == r)


def subspace_design_quotient_report(n, k, t, lam, q):
    a = subspace_design_quotient_actual(n, k, t, lam, q)
    r = subspace_design_quotient_reference(n, k, t, lam, q)
    return QuotientComparison(a, r, a == r)


def design_to_coloring(D, G=None):
    """Indicator coloring of the k-subset vertices: color 0 on blocks.

    The vertex order is the lexicographic k-subset order; pass G (the
    Johnson-type multigraph) only to cross-check the vertex count.
    A design containing every k-subset colors everything 0 (monochromatic);
    an empty design is an error.
    """
    if not D.blocks:
        raise ValueError("design has no blocks")
    verts = ksubsets(D.n, D.k)
    if G is not None and G.n != len(verts):
        raise ValueError("graph vertex count does not match C(n,k)")
    index = {u: i for i, u in enumerate(verts)}
    return Coloring.from_set(len(verts), [index[b] for b in set(D.blocks)])


def subspace_design_to_coloring(D, G=None):
    """Indicator coloring of the k-subspace vertices: color 0 on members."""
    if not D.subspaces:
        raise ValueError("design has no subspaces")
    verts = enumerate_subspaces(D.n, D.k, D.q)
    if G is not None and G.n != len(verts):
        raise ValueError("graph vertex count does not match the subspace count")
    index = {s.key(): i for i, s in enumerate(verts)}
    return Coloring.from_set(len(verts), [index[s.key()] for s in D.subspaces])


def steiner_independence_check(D):
    """Ratio-bound report for a lambda = 1 design's block set.

    Blocks of a Steiner-type design pairwise share fewer than t points
    (subspaces: dimension < t), so they form an independent set in the
    multiplicity-C(|u & v|, t) multigraph; a true design attains the
    ratio bound with t = 0 there.
    """
    if D.lam != 1:
        raise ValueError("independence check applies to lambda = 1 designs")
    if isinstance(D, SubspaceDesign):
        H = subspace_design_hypergraph(D.n, D.k, D.t, D.q)
        G = m12(incidence_bipartite(H), keep_loops=False)
        f = subspace_design_to_coloring(D)
    else:
        G = johnson_design_multigraph(D.n, D.k, D.t)
        f = design_to_coloring(D)
    return check_dh_extremal(G, np.flatnonzero(f.assignment == 0), t=0)


# ------------------------------------------------------------- Hadamard

class HadamardMatrix:
    """Square +-1 matrix; verify_hadamard checks H H^T = n I."""

    def __init__(self, mat):
        mat = np.asarray(mat, dtype=np.int64)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("matrix must be square")
        if not np.isin(mat, (-1, 1)).all():
            raise ValueError("entries must be +1 or -1")
        self.mat = mat
        self.order = mat.shape[0]

    def __repr__(self):
        return f"HadamardMatrix(order={self.order})"


def verify_hadamard(H):
    """True iff H H^T = n I (exact integer arithmetic)."""
    n = H.order
    return bool(np.array_equal(H.mat @ H.mat.T, n * np.eye(n, dtype=np.int64)))


def sylvester(order):
    """Tensor-power +-1 matrix of 2-power order."""
    if order < 1 or order & (order - 1):
        raise ValueError("order must be a power of 2")
    H = np.array([[1]], dtype=np.int64)
    while H.shape[0] < order:
        H = np.block([[H, H], [H, -H]])
    return HadamardMatrix(H)


def paley_hadamard(p):
    """Order p+1 matrix from quadratic residues of a prime p = 3 (mod 4)."""
    if p % 4 != 3:
        raise ValueError("prime must be congruent to 3 mod 4")
    squares = {(x * x) % p for x in range(1, p)}
    chi = np.array([0] + [1 if x in squares else -1 for x in range(1, p)], dtype=np.int64)
    Q = np.array([[chi[(j - i) % p] for j in range(p)] for i in range(p)], dtype=np.int64)
    S = np.zeros((p + 1, p + 1), dtype=np.int64)
    S[0, 1:] = 1
    S[1:, 0] = -1
    S[1:, 1:] = Q
    H = HadamardMatrix(S + np.eye(p + 1, dtype=np.int64))
    if not verify_hadamard(H):
        raise ValueError(f"{p} did not yield a valid matrix (is it prime?)")
    return H


def hadamard_to_design(H):
    """2-(4m+3, 2m+1, m) design from a Hadamard matrix of order 4m+4.

    Normalizes the first row and column to +1 (rows negated before
    columns), deletes them, and reads the rows of the remaining core as
    block indicators (+1 membership).  Order 4 (m = 0) is rejected as
    degenerate.
    """
    if not verify_hadamard(H):
        raise ValueError("matrix is not Hadamard")
    if H.order % 4 != 0:
        raise ValueError("order must be divisible by 4")
    if H.order == 4:
        raise ValueError("order 4 gives the degenerate m = 0 design")
    mat = H.mat.copy()
    for i in range(H.order):
        if mat[i, 0] == -1:
            mat[i] *= -1
    for j in range(H.order):
        if mat[0, j] == -1:
            mat[:, j] *= -1
    core = mat[1:, 1:]
    m = (H.order - 4) // 4
    blocks = [tuple(np.flatnonzero(row == 1)) for row in core]
    return BlockDesign(n=H.order - 1, k=2 * m + 1, t=2, lam=m, blocks=blocks)


def fano():
    """The 2-(7,3,1) design on points 0..6."""
    return BlockDesign(7, 3, 2, 1, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
                                    (1, 4, 6), (2, 3, 6), (2, 4, 5)])
