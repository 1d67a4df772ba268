"""Constructors for the graph and hypergraph families used throughout.

Canonical vertex orders are part of the public contract, so colorings can
be exchanged as plain integer arrays:

* k-subsets of {0..n-1}: lexicographic order of sorted tuples;
* k-subspaces of GF(q)^n: unique reduced-row-echelon basis, ordered
  lexicographically by the flattened basis matrix;
* GF(2)^n vectors <-> integers little-endian (bit j = coordinate j);
  the zero-sum triple hypergraph on nonzero vectors indexes vertex i as
  the vector i+1;
* abelian group elements: lexicographic tuples over the cyclic factors.
"""

import itertools
from math import comb

import numpy as np

from .hypergraphs import Hypergraph
from .multigraph import Multigraph


# ---------------------------------------------------------------- subsets

def ksubsets(n, k):
    """All k-subsets of {0..n-1} as sorted tuples, lexicographic."""
    return list(itertools.combinations(range(n), k))


def complete_graph(n):
    adj = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(adj, 0)
    return Multigraph(adj)


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    adj = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        adj[v, (v + 1) % n] = adj[(v + 1) % n, v] = 1
    return Multigraph(adj)


def path_graph(n):
    adj = np.zeros((n, n), dtype=np.int64)
    for v in range(n - 1):
        adj[v, v + 1] = adj[v + 1, v] = 1
    return Multigraph(adj)


def johnson(n, k):
    """Johnson graph: k-subsets adjacent when they share k-1 elements."""
    if not 0 < k <= n:
        raise ValueError("johnson requires 0 < k <= n")
    verts = ksubsets(n, k)
    masks = [sum(1 << v for v in u) for u in verts]
    m = len(verts)
    adj = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            if (masks[i] & masks[j]).bit_count() == k - 1:
                adj[i, j] = adj[j, i] = 1
    return Multigraph(adj)


def petersen():
    """Petersen graph: 2-subsets of a 5-set, adjacent when disjoint."""
    return johnson(5, 2).complement()


def design_hypergraph(n, k, t):
    """Hypergraph on all k-subsets with one hyperedge per t-subset.

    The hyperedge of a t-subset T consists of all k-subsets containing T;
    hyperedge size C(n-t, k-t), vertex degree C(k, t).
    """
    if not 0 < t < k < n:
        raise ValueError("design hypergraph requires 0 < t < k < n")
    verts = ksubsets(n, k)
    index = {u: i for i, u in enumerate(verts)}
    edges = []
    for T in itertools.combinations(range(n), t):
        rest = [v for v in range(n) if v not in T]
        edges.append(sorted(index[tuple(sorted(T + extra))]
                            for extra in itertools.combinations(rest, k - t)))
    return Hypergraph(len(verts), edges)


def johnson_design_multigraph(n, k, t):
    """Loopless multigraph on k-subsets with edge multiplicity C(|u & v|, t).

    Equals the loopless m12 of design_hypergraph(n, k, t): two blocks are
    joined once for every common t-subset.
    """
    if not 0 < t < k < n:
        raise ValueError("requires 0 < t < k < n")
    verts = ksubsets(n, k)
    masks = [sum(1 << v for v in u) for u in verts]
    m = len(verts)
    adj = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            s = (masks[i] & masks[j]).bit_count()
            if s >= t:
                adj[i, j] = adj[j, i] = comb(s, t)
    return Multigraph(adj)


# ------------------------------------------------------- GF(q) subspaces

def gaussian_binomial(m, t, q):
    """Gaussian binomial [m t]_q: the number of t-subspaces of GF(q)^m."""
    if t < 0 or t > m:
        return 0
    num = den = 1
    for i in range(t):
        num *= q ** (m - i) - 1
        den *= q ** (t - i) - 1
    assert num % den == 0
    return num // den


def _check_prime(q):
    if q < 2 or any(q % p == 0 for p in range(2, int(q ** 0.5) + 1)):
        raise ValueError(f"field order {q} must be prime")


def rref_gf(matrix, q):
    """Reduced row echelon form over GF(q), q prime.

    Returns (rref without zero rows, rank).
    """
    _check_prime(q)
    A = np.array(matrix, dtype=np.int64) % q
    if A.ndim != 2:
        raise ValueError("matrix expected")
    rows, cols = A.shape
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if A[r, col]), None)
        if pivot is None:
            continue
        A[[rank, pivot]] = A[[pivot, rank]]
        A[rank] = (A[rank] * pow(int(A[rank, col]), q - 2, q)) % q
        for r in range(rows):
            if r != rank and A[r, col]:
                A[r] = (A[r] - A[r, col] * A[rank]) % q
        rank += 1
        if rank == rows:
            break
    return A[:rank], rank


class Subspace:
    """k-dimensional subspace of GF(q)^n via its canonical RREF basis."""

    def __init__(self, basis, q, n=None, canonical=False):
        _check_prime(q)
        basis = np.array(basis, dtype=np.int64) % q
        if basis.ndim != 2:
            raise ValueError("basis must be a k x n matrix")
        if n is not None and basis.shape[1] != n:
            raise ValueError("ambient dimension mismatch")
        if not canonical:
            rows = basis.shape[0]
            basis, rank = rref_gf(basis, q)
            if rank != rows:
                raise ValueError("basis rows must be linearly independent")
        self.q = q
        self.n = basis.shape[1]
        self.basis = basis
        self.k = self.basis.shape[0]

    def key(self):
        """Flattened basis tuple; the canonical sort key."""
        return tuple(int(x) for x in self.basis.ravel())

    def vectors(self):
        """All q^k member vectors as tuples (including zero)."""
        out = []
        for coeffs in itertools.product(range(self.q), repeat=self.k):
            v = np.zeros(self.n, dtype=np.int64)
            for c, row in zip(coeffs, self.basis):
                v = (v + c * row) % self.q
            out.append(tuple(int(x) for x in v))
        return out

    def contains(self, other):
        """True iff `other` (a Subspace) is contained in this subspace."""
        stacked, rank = rref_gf(np.vstack([self.basis, other.basis]), self.q)
        return rank == self.k

    def intersection_dim(self, other):
        _, rank = rref_gf(np.vstack([self.basis, other.basis]), self.q)
        return self.k + other.k - rank

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.q == other.q
                and self.n == other.n and np.array_equal(self.basis, other.basis))

    def __hash__(self):
        return hash((self.q, self.n, self.key()))

    def __repr__(self):
        return f"Subspace(q={self.q}, basis={self.basis.tolist()})"


def enumerate_subspaces(n, k, q):
    """All k-subspaces of GF(q)^n, sorted by flattened RREF basis.

    RREF matrices are generated per pivot-column pattern: entry (i, j) is
    free when j is right of pivot i and not itself a pivot column.
    """
    _check_prime(q)
    if k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    if k == 0:
        return [Subspace(np.zeros((0, n), dtype=np.int64), q, canonical=True)]
    subspaces = []
    for pivots in itertools.combinations(range(n), k):
        free = [(i, j) for i in range(k) for j in range(n)
                if j > pivots[i] and j not in pivots]
        base = np.zeros((k, n), dtype=np.int64)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            mat = base.copy()
            for (i, j), val in zip(free, values):
                mat[i, j] = val
            subspaces.append(Subspace(mat, q, canonical=True))
    subspaces.sort(key=Subspace.key)
    return subspaces


def _projective_incidence(subspaces, q):
    """0/1 matrix: subspaces x projective points they contain.

    Points are nonzero vectors normalized so the first nonzero coordinate
    is 1; two subspaces meeting in dimension d share [d 1]_q points.
    """
    norm_index = {}
    rows = []
    for s in subspaces:
        row = set()
        for v in s.vectors():
            if not any(v):
                continue
            lead = next(x for x in v if x)
            inv = pow(int(lead), q - 2, q)
            norm = tuple((x * inv) % q for x in v)
            if norm not in norm_index:
                norm_index[norm] = len(norm_index)
            row.add(norm_index[norm])
        rows.append(row)
    M = np.zeros((len(subspaces), len(norm_index)), dtype=np.int64)
    for i, row in enumerate(rows):
        M[i, sorted(row)] = 1
    return M


def grassmann(n, k, q):
    """Grassmann graph: k-subspaces adjacent when meeting in dimension k-1."""
    subspaces = enumerate_subspaces(n, k, q)
    if k == 0 or k == n:
        return Multigraph(np.zeros((1, 1), dtype=np.int64))
    M = _projective_incidence(subspaces, q)
    common = M @ M.T
    target = gaussian_binomial(k - 1, 1, q)    # projective points of a (k-1)-space
    adj = (common == target).astype(np.int64)
    np.fill_diagonal(adj, 0)
    return Multigraph(adj)


def subspace_design_hypergraph(n, k, t, q):
    """Hypergraph on k-subspaces with one hyperedge per t-subspace.

    The hyperedge of a t-subspace T consists of all k-subspaces containing
    T; hyperedge size [n-t k-t]_q, vertex degree [k t]_q.
    """
    if not 0 < t < k < n:
        raise ValueError("requires 0 < t < k < n")
    verts = enumerate_subspaces(n, k, q)
    edges = []
    for T in enumerate_subspaces(n, t, q):
        edge = [i for i, U in enumerate(verts) if U.contains(T)]
        edges.append(edge)
    return Hypergraph(len(verts), edges)


# ------------------------------------------------ triple hypergraphs

def triangle_hypergraph(n):
    """3-uniform hypergraph: vertices are the edges of the complete graph
    on n points; each triangle contributes one hyperedge."""
    if n < 3:
        raise ValueError("needs n >= 3")
    pairs = ksubsets(n, 2)
    index = {p: i for i, p in enumerate(pairs)}
    edges = [sorted((index[(i, j)], index[(i, l)], index[(j, l)]))
             for i, j, l in itertools.combinations(range(n), 3)]
    return Hypergraph(len(pairs), edges)


def int_to_vec(x, n):
    """Little-endian bits of x as a GF(2)^n tuple (bit j = coordinate j)."""
    return tuple((x >> j) & 1 for j in range(n))


def vec_to_int(v):
    return sum((int(x) & 1) << j for j, x in enumerate(v))


def delta_hypergraph(n):
    """3-uniform hypergraph of zero-sum triples of nonzero GF(2)^n vectors.

    Vertex i is the vector i+1 (little-endian integer encoding); the
    hyperedges are the 2-dimensional subspaces minus the zero vector.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    top = 1 << n
    edges = []
    for a in range(1, top):
        for b in range(a + 1, top):
            c = a ^ b
            if c > b:
                edges.append((a - 1, b - 1, c - 1))
    return Hypergraph(top - 1, edges)


def delta_edge_to_subspace(edge, n):
    """Canonical 2-subspace for a zero-sum triple of vertex indices."""
    a, b = edge[0] + 1, edge[1] + 1
    return Subspace([int_to_vec(a, n), int_to_vec(b, n)], q=2)


# -------------------------------------------------------- abelian groups

class AbelianGroup:
    """Direct product of cyclic groups; elements are tuples, lex-ordered."""

    def __init__(self, orders):
        orders = tuple(int(m) for m in orders)
        if not orders or any(m < 2 for m in orders):
            raise ValueError("cyclic orders must all be at least 2")
        self.orders = orders
        self.elements = list(itertools.product(*[range(m) for m in orders]))
        self._index = {e: i for i, e in enumerate(self.elements)}

    @property
    def order(self):
        return len(self.elements)

    @property
    def zero(self):
        return (0,) * len(self.orders)

    def index(self, x):
        return self._index[tuple(x)]

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % m for a, m in zip(x, self.orders))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def coerce(self, elems):
        """Normalize an iterable of elements to in-group tuples."""
        out = []
        for e in elems:
            e = tuple(int(x) % m for x, m in zip(e, self.orders))
            if len(e) != len(self.orders):
                raise ValueError("element arity does not match the group")
            out.append(e)
        return out

    def __repr__(self):
        return f"AbelianGroup{self.orders}"


def cayley(K, A):
    """Cayley graph of an abelian group: x adjacent to x + a for a in A.

    Requires A = -A and 0 not in A, which makes the graph simple.
    """
    A = set(K.coerce(A))
    if K.zero in A:
        raise ValueError("connection set must not contain the identity")
    if any(K.neg(a) not in A for a in A):
        raise ValueError("connection set must be symmetric (A = -A)")
    v = K.order
    adj = np.zeros((v, v), dtype=np.int64)
    for i, x in enumerate(K.elements):
        for a in A:
            adj[i, K.index(K.add(x, a))] = 1
    return Multigraph(adj)
