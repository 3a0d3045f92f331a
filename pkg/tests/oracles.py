"""Independent brute-force oracles used to cross-check the library.

Everything here follows the definitions directly (all injections, all
subset pairs, all assignments); some oracles are vectorized with numpy for
the large acceptance sweeps but keep the definition-direct logic.
"""

from fractions import Fraction
from itertools import combinations, permutations, product

import numpy as np

from hptools import BipGraph, Graph, bits, find_uk_copy, mask_of


def naive_contains_induced(G: Graph, H: Graph):
    """All injections V(H) -> V(G), checked edge by edge."""
    for image in permutations(range(G.n), H.n):
        ok = True
        for a in range(H.n):
            for b in range(a):
                if (H.adj[a] >> b & 1) != (G.adj[image[a]] >> image[b] & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return image
    return None


def naive_uk_copy(G: Graph, k: int, parts=None) -> bool:
    """Scan every disjoint pair (A, B) with |B| = k, |A| = 2^k directly."""
    verts = range(G.n)
    b_pool = verts if parts is None else list(bits(parts[1]))
    for B in combinations(b_pool, k):
        Bmask = mask_of(B)
        a_pool = [v for v in (verts if parts is None else bits(parts[0]))
                  if not Bmask >> v & 1]
        for A in combinations(a_pool, 1 << k):
            traces = {G.adj[a] & Bmask for a in A}
            if len(traces) == 1 << k:
                return True
    return False


def numpy_count_uk_free(m: int, n: int, k: int, mode: str) -> int:
    """Enumerate all 2^(mn) cross patterns and test each per the definition,
    vectorized over the graphs.  Whole mode scans every k-subset of the
    m+n host vertices, mixed subsets included."""
    total = 1 << (m * n)
    g = np.arange(total, dtype=np.uint64)
    rowmask = np.uint64((1 << n) - 1)
    rows = [(g >> np.uint64(a * n)) & rowmask for a in range(m)]
    cols = []
    for b in range(n):
        col = np.zeros(total, dtype=np.uint64)
        for a in range(m):
            col |= ((rows[a] >> np.uint64(b)) & np.uint64(1)) << np.uint64(a)
        cols.append(col)

    def trace_code(v: int, subset: tuple[int, ...]):
        """Trace of host vertex v on the host-vertex subset, as a code."""
        code = np.zeros(total, dtype=np.uint64)
        for pos, s in enumerate(subset):
            if v < m and s >= m:           # A vertex against a B vertex
                bit = (rows[v] >> np.uint64(s - m)) & np.uint64(1)
            elif v >= m and s < m:         # B vertex against an A vertex
                bit = (cols[v - m] >> np.uint64(s)) & np.uint64(1)
            else:                          # same side: never adjacent
                continue
            code |= bit << np.uint64(pos)
        return code

    free = np.ones(total, dtype=bool)
    host = m + n
    if mode == "whole":
        subsets = combinations(range(host), k)
    else:
        subsets = combinations(range(m, host), k)
    for S in subsets:
        seen = np.zeros(total, dtype=np.uint64)
        pool = [v for v in range(host) if v not in S] if mode == "whole" \
            else [v for v in range(m) if v not in S]
        for v in pool:
            seen |= np.uint64(1) << trace_code(v, S)
        free &= seen != np.uint64((1 << (1 << k)) - 1)
    return int(free.sum())


def naive_epsilon_regular(G: Graph, A: int, B: int, eps) -> bool:
    """Double loop over every (X, Y) pair, exact rationals."""
    eps = Fraction(eps)
    a_verts = list(bits(A))
    b_verts = list(bits(B))
    a, b = len(a_verts), len(b_verts)
    e0 = sum((G.adj[v] & B).bit_count() for v in bits(A))
    d0 = Fraction(e0, a * b)
    for xb in range(1, 1 << a):
        X = mask_of(a_verts[i] for i in bits(xb))
        xs = X.bit_count()
        if xs < eps * a:
            continue
        for yb in range(1, 1 << b):
            Y = mask_of(b_verts[i] for i in bits(yb))
            ys = Y.bit_count()
            if ys < eps * b:
                continue
            e = sum((G.adj[v] & Y).bit_count() for v in bits(X))
            if abs(d0 - Fraction(e, xs * ys)) >= eps:
                return False
    return True


def numpy_regular_verdicts(side: int, eps: Fraction) -> np.ndarray:
    """Exact regularity verdicts for every bipartite graph on side+side,
    graphs indexed by their cross-edge bitmask (bit a*side+b)."""
    total = 1 << (side * side)
    g = np.arange(total, dtype=np.uint32)
    pop = np.zeros(total, dtype=np.uint8)
    for s in range(side * side):
        pop += ((g >> np.uint32(s)) & np.uint32(1)).astype(np.uint8)
    e0 = pop[g].astype(np.int64)
    verdict = np.ones(total, dtype=bool)
    en, ed = eps.numerator, eps.denominator
    for xb in range(1, 1 << side):
        xs = bin(xb).count("1")
        if xs * ed < en * side:
            continue
        for yb in range(1, 1 << side):
            ys = bin(yb).count("1")
            if ys * ed < en * side:
                continue
            mask = 0
            for a in range(side):
                if xb >> a & 1:
                    for b in range(side):
                        if yb >> b & 1:
                            mask |= 1 << (a * side + b)
            exy = pop[g & np.uint32(mask)].astype(np.int64)
            # | e0/(s^2) - exy/(xs*ys) | >= eps, all integer arithmetic
            lhs = np.abs(e0 * xs * ys - exy * side * side) * ed
            rhs = en * side * side * xs * ys
            verdict &= lhs < rhs
    return verdict


def brute_hrv(G: Graph, v) -> bool:
    """Every assignment of vertices to parts, checked directly."""
    r = len(v)
    for assign in product(range(r), repeat=G.n):
        ok = True
        for j in range(r):
            members = [u for u in range(G.n) if assign[u] == j]
            for x, y in combinations(members, 2):
                edge = bool(G.adj[x] >> y & 1)
                if edge != bool(v[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def brute_chi_c(forbidden, r_max: int) -> int:
    """max r such that some v in {0,1}^r excludes every forbidden graph,
    scanning all (r, v, partition) triples."""
    best = 0
    for r in range(1, r_max + 1):
        found = False
        for v in product((0, 1), repeat=r):
            if all(not brute_hrv(F, v) for F in forbidden):
                found = True
                break
        if found:
            best = r
    return best


def brute_max_far_subset(vectors, x: int) -> int:
    """Largest subset with pairwise hamming distance >= x, by subset scan."""
    sz = len(vectors)
    best = 0
    for sub in range(1 << sz):
        idx = [i for i in range(sz) if sub >> i & 1]
        if len(idx) <= best:
            continue
        if all((vectors[i] ^ vectors[j]).bit_count() >= x
               for i, j in combinations(idx, 2)):
            best = len(idx)
    return best


def nonshattering_by_inclusion_exclusion(a: int, n: int) -> int:
    """Count attachments missing at least one trace pattern."""
    from math import comb
    total = 1 << a
    return sum((-1) ** (j + 1) * comb(total, j) * (total - j) ** n
               for j in range(1, total + 1))
