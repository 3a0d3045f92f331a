"""U(k)-containment and exact counting for bipartite hosts, separated
subsets, and the sparsening (distinguishing-set / clone-class) machinery.

Freeness comes in two modes.  ``whole`` follows the one-graph definition:
no disjoint A, B anywhere in the host with G[A,B] = U(k).  ``cross`` is the
nondegenerate bipartite reading: the k-set lives in the designated B part
and its 2^k realizers in the A part.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DomainError, StepError
from .graphs import (Graph, bits, greedy_maximal_clique, k_submasks, mask_of,
                     max_clique, part_masks)
from .universal import TraceFamily, find_shattered, reverse_shatter, \
    aligned_reverse_shatter, shatters

# sides up to 64 so the distinguishing-set harness can run its published
# parameters (c=8, n=64); rows still fit one machine word
MAX_BIP_SIDE = 64
MAX_UK_HOST = 24
MAX_UK_LEVEL = 4
MAX_COUNT_CELLS = 25


@dataclass(frozen=True)
class BipGraph:
    """Bipartite graph with parts A (size m) and B (size n); only cross
    edges are representable.  ``rows[a]`` is a's B-neighbourhood bitmask."""

    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not (0 <= self.m <= MAX_BIP_SIDE and 0 <= self.n <= MAX_BIP_SIDE):
            raise DomainError(f"bipartite sides capped at {MAX_BIP_SIDE}")
        if len(self.rows) != self.m:
            raise DomainError("row count does not match m")
        full = (1 << self.n) - 1
        for row in self.rows:
            if row & ~full:
                raise DomainError("row has bits outside the B side")

    def cols(self) -> tuple[int, ...]:
        out = [0] * self.n
        for a, row in enumerate(self.rows):
            for b in bits(row):
                out[b] |= 1 << a
        return tuple(out)

    def to_graph(self) -> Graph:
        """The host graph on m + n vertices (A first, then B)."""
        adj = [0] * (self.m + self.n)
        for a, row in enumerate(self.rows):
            for b in bits(row):
                adj[a] |= 1 << (self.m + b)
                adj[self.m + b] |= 1 << a
        return Graph(self.m + self.n, tuple(adj))


def bipgraph_encode(bg: BipGraph) -> str:
    lines = [f"{bg.m} {bg.n}"]
    for row in bg.rows:
        lines.append("".join("1" if row >> b & 1 else "0" for b in range(bg.n)))
    return "\n".join(lines) + "\n"


def bipgraph_decode(text: str) -> BipGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("empty bipartite-graph input")
    try:
        m, n = map(int, lines[0].split())
    except ValueError as exc:
        raise DomainError(f"malformed header: {exc}") from exc
    if len(lines) != m + 1:
        raise DomainError(f"expected {m} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise DomainError(f"malformed row {ln!r}")
        rows.append(sum(1 << b for b, ch in enumerate(ln) if ch == "1"))
    return BipGraph(m, n, tuple(rows))


def random_bipgraph(m: int, n: int, p: float, seed=None) -> BipGraph:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    rows = tuple(sum(1 << b for b in range(n) if rng.random() < p) for _ in range(m))
    return BipGraph(m, n, rows)


# ---------------------------------------------------------------------------
# U(k) copies


def find_uk_copy(G: Graph, k: int, parts: tuple[int, int] | None = None):
    """First U(k) copy (A, B) in canonical order, or None.

    Whole-graph mode scans every k-subset B of V(G) (ascending mask order)
    and asks whether the remaining vertices realize all 2^k traces on B.
    Cross-only mode restricts B to ``parts[1]`` and the realizers to
    ``parts[0]``.
    """
    if G.n > MAX_UK_HOST:
        raise DomainError(f"exhaustive search capped at {MAX_UK_HOST} vertices")
    if not 1 <= k <= MAX_UK_LEVEL:
        raise DomainError(f"universal level capped at {MAX_UK_LEVEL}")
    if parts is not None:
        a_pool, b_pool = parts
        if a_pool & b_pool:
            raise DomainError("cross-only parts must be disjoint")
    else:
        a_pool = b_pool = G.vertex_mask
    need = 1 << k
    if G.n < need + k:
        return None
    for B in k_submasks(b_pool, k):
        pool = a_pool & ~B
        if pool.bit_count() < need:
            continue
        realizers: dict[int, int] = {}
        for a in bits(pool):
            tr = G.adj[a] & B
            if tr not in realizers:
                realizers[tr] = a
                if len(realizers) == need:
                    return mask_of(realizers.values()), B
    return None


def is_uk_free(G: Graph, k: int, parts=None) -> bool:
    return find_uk_copy(G, k, parts) is None


# ---------------------------------------------------------------------------
# exact counting of U(k)-free bipartite graphs


def _free_cross(rows, n: int, k: int, subsets) -> bool:
    """No k-subset of the B side realizes all 2^k traces among the rows."""
    need = 1 << k
    if len(rows) < need:
        return True
    for sub in subsets:
        seen = set()
        for row in rows:
            seen.add(row & sub)
            if len(seen) == need:
                return False
    return True


def _side_coverable(rows, other_count: int, k: int, subsets) -> bool:
    """Whole-graph helper: can some k-subset of this side have every trace
    pattern realized?  Nonempty patterns need realizers on the opposite
    side (rows); the empty pattern may also come from this side's leftover
    vertices."""
    if len(rows) < (1 << k) - 1:
        return False
    side_size = None
    for sub, npat in subsets:
        found = set()
        for row in rows:
            tr = row & sub
            if tr:
                found.add(tr)
        if len(found) == npat:
            if other_count > k:
                return True  # empty trace from a leftover same-side vertex
            if any(row & sub == 0 for row in rows):
                return True
    return False


def _free_whole(rows, cols, m: int, n: int, k: int, bsubs, asubs) -> bool:
    """Whole-graph U(k)-freeness of the bipartite host.

    A mixed k-set (meeting both sides) can never be fully traced: the
    all-of-S pattern would need a vertex adjacent to vertices of both
    sides, impossible across a bipartition.  So only pure one-side k-sets
    matter.
    """
    if _side_coverable(rows, n, k, bsubs):
        return False
    if _side_coverable(cols, m, k, asubs):
        return False
    return True


def _whole_subsets(side: int, k: int):
    return [(sub, (1 << k) - 1) for sub in k_submasks((1 << side) - 1, k)]


def count_uk_free_bipartite(m: int, n: int, k: int, mode: str = "whole") -> int:
    """Exact number of cross-edge patterns on A (size m) x B (size n) whose
    host is U(k)-free in the chosen mode.  Enumerates all 2^(mn) patterns;
    row-permutation symmetry is exploited through memoization only (the
    count itself is over labeled patterns)."""
    return count_uk_free_bipartite_range(m, n, k, mode, 0, 1 << (m * n))


def count_uk_free_bipartite_range(m: int, n: int, k: int, mode: str,
                                  start: int, stop: int) -> int:
    """Partial count over a sub-range of cross-edge bitmasks, so disjoint
    shards can be summed by independent workers."""
    if mode not in ("whole", "cross"):
        raise DomainError("mode must be 'whole' or 'cross'")
    if m * n > MAX_COUNT_CELLS:
        raise DomainError(f"enumeration capped at m*n <= {MAX_COUNT_CELLS}")
    if not 1 <= k <= MAX_UK_LEVEL:
        raise DomainError(f"universal level capped at {MAX_UK_LEVEL}")
    row_mask = (1 << n) - 1
    bsubs = list(k_submasks(row_mask, k))
    asubs_w = _whole_subsets(m, k)
    bsubs_w = _whole_subsets(n, k)
    memo: dict[tuple, bool] = {}
    count = 0
    for g in range(max(start, 0), min(stop, 1 << (m * n))):
        rows = tuple(sorted((g >> (a * n)) & row_mask for a in range(m)))
        free = memo.get(rows)
        if free is None:
            if mode == "cross":
                free = _free_cross(rows, n, k, bsubs)
            else:
                cols = [0] * n
                for a, row in enumerate(rows):
                    rr = row
                    while rr:
                        low = rr & -rr
                        cols[low.bit_length() - 1] |= 1 << a
                        rr ^= low
                free = _free_whole(rows, cols, m, n, k, bsubs_w, asubs_w)
            memo[rows] = free
        if free:
            count += 1
    return count


# ---------------------------------------------------------------------------
# trace counts against the Sauer ceiling


@dataclass(frozen=True)
class BlockTraceReport:
    block: int
    size: int
    trace_count: int
    sauer_ceiling: int
    loose_ceiling: int


def trace_count_check(bg: BipGraph, blocks, k: int, verify_free: bool = True):
    """Per-block distinct-trace counts of the A side, with the exact Sauer
    ceiling sum_{i<k} C(|B_j|, i) asserted and the looser k*C(|B_j|, k-1)
    ceiling reported alongside.

    The host must be U(k)-free in cross mode; a ceiling violation proves it
    is not, so either the upfront verification or the assertion raises.
    """
    blocks = list(blocks)
    union = 0
    for blk in blocks:
        if blk & ~((1 << bg.n) - 1):
            raise DomainError("block not contained in the B side")
        if blk & union:
            raise DomainError("blocks overlap")
        union |= blk
    if union != (1 << bg.n) - 1:
        raise DomainError("blocks do not cover the B side")
    if verify_free:
        bsubs = list(k_submasks((1 << bg.n) - 1, k))
        if not _free_cross(bg.rows, bg.n, k, bsubs):
            raise DomainError("host is not U(k)-free in cross mode")
    out = []
    for blk in blocks:
        size = blk.bit_count()
        traces = {row & blk for row in bg.rows}
        ceiling = sum(comb(size, i) for i in range(k))
        loose = k * comb(size, k - 1)
        if len(traces) > ceiling:
            raise DomainError(
                f"trace count {len(traces)} exceeds the Sauer ceiling {ceiling}; "
                "the host cannot be U(k)-free in cross mode")
        out.append(BlockTraceReport(blk, size, len(traces), ceiling, loose))
    return out


# ---------------------------------------------------------------------------
# non-shattering attachments and sparse bipartite counts


def count_nonshattering_attachments(a: int, n: int) -> tuple[int, int, int]:
    """Exact count of bipartite graphs on A (size a) + B (size n) in which
    no subset of B shatters A, together with two ceilings: the printed
    (2^a - 1)^n, which undercounts by the choice of missing trace, and the
    corrected 2^a * (2^a - 1)^n.  Only the corrected one is an upper bound
    at every scale (a=1, n=2 already has exact count 2 > 1)."""
    if not (1 <= a <= 3 and 1 <= n <= 6):
        raise DomainError("caps: a <= 3 and n <= 6")
    full = (1 << (1 << a)) - 1
    amask = (1 << a) - 1
    count = 0
    for g in range(1 << (a * n)):
        seen = 0
        for b in range(n):
            col = 0
            for i in range(a):
                if g >> (i * n + b) & 1:
                    col |= 1 << i
            seen |= 1 << (col & amask)
        if seen != full:
            count += 1
    printed = (2 ** a - 1) ** n
    corrected = 2 ** a * printed
    return count, printed, corrected


@dataclass(frozen=True)
class SparseCount:
    count: int
    bound_log2: float
    bound: float


def count_sparse_bipartite(n: int, delta: float) -> SparseCount:
    """Exact number of bipartite graphs on n + n with at most delta^2 n^2
    edges, next to the 2^(delta n^2) ceiling.  The ceiling is asymptotic
    and is reported, never asserted (it already fails at n=4, delta=1/4)."""
    if n > 5:
        raise DomainError("side size capped at 5")
    d = Fraction(delta)
    limit = int(d * d * n * n)  # floor; edge counts are integers
    cells = n * n
    count = sum(comb(cells, j) for j in range(min(limit, cells) + 1))
    bound_log2 = float(d * n * n)
    return SparseCount(count, bound_log2, 2.0 ** bound_log2)


# ---------------------------------------------------------------------------
# separated subsets (the distance Delta(u,v) = |Gamma(u) xor Gamma(v)|)


def _side_vectors(bg: BipGraph, side: str):
    if side == "A":
        return list(bg.rows)
    if side == "B":
        return list(bg.cols())
    raise DomainError("side must be 'A' or 'B'")


def separation_profile(bg: BipGraph, side: str = "A") -> list[list[int]]:
    """Pairwise distances Delta(u,v) on one side, as a full matrix."""
    vecs = _side_vectors(bg, side)
    return [[(x ^ y).bit_count() for y in vecs] for x in vecs]


@dataclass(frozen=True)
class SeparatedSet:
    vertices: int
    size: int
    exact: bool


def max_separated_subset(bg: BipGraph, side: str, x: int,
                         mode: str = "exact") -> SeparatedSet:
    """Largest subset of one side with all pairwise distances >= x.

    Exact mode solves maximum clique in the auxiliary graph joining far
    pairs (side size <= 20); greedy mode returns a maximal subset flagged
    as a lower bound.
    """
    vecs = _side_vectors(bg, side)
    sz = len(vecs)
    adj = [0] * sz
    for i in range(sz):
        for j in range(i):
            if (vecs[i] ^ vecs[j]).bit_count() >= x:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    if mode == "exact":
        if sz > 20:
            raise DomainError("exact mode capped at side size 20")
        best = max_clique(sz, adj)
        return SeparatedSet(best, best.bit_count(), True)
    if mode == "greedy":
        best = greedy_maximal_clique(sz, adj)
        return SeparatedSet(best, best.bit_count(), False)
    raise DomainError("mode must be 'exact' or 'greedy'")


def separated_subset_ceiling(n: int, x: int, k: int, m: int) -> float:
    """(n/x)^(k-1) * 3^k * (ln m)^(k-1): the separated-subset ceiling for a
    U(k)-free bipartite host.  Natural logarithm throughout."""
    return (n / x) ** (k - 1) * 3 ** k * math.log(m) ** (k - 1)


# ---------------------------------------------------------------------------
# sparsening: distinguishing sets


@dataclass(frozen=True)
class DistinguishingSet:
    X: int
    size: int
    attempts: int
    seed: int


def distinguishing_set(bg: BipGraph, u_sub: int, alpha: float, seed: int,
                       max_attempts: int = 1000) -> DistinguishingSet:
    """Random X of size ceil(p*n), p = 5 ln(c) / (alpha n), redrawn until
    the traces of ``u_sub`` on X are pairwise distinct.

    Deterministic given the seed.  When the target size reaches n the whole
    B side is used (a single deterministic attempt).
    """
    u_verts = list(bits(u_sub))
    c = len(u_verts)
    if c < 2:
        raise DomainError("need at least two vertices to distinguish")
    if any(v >= bg.m for v in u_verts):
        raise DomainError("u_sub not contained in the A side")
    n = bg.n
    alpha_f = Fraction(alpha)
    if alpha_f * n < 1:
        raise DomainError("vacuous separation: alpha * n < 1")
    thr = alpha_f * n
    rows = [bg.rows[v] for v in u_verts]
    for i in range(c):
        for j in range(i):
            if (rows[i] ^ rows[j]).bit_count() < thr:
                raise DomainError(
                    f"pair ({u_verts[j]},{u_verts[i]}) closer than alpha*n")
    size = math.ceil(5 * math.log(c) / float(alpha_f))
    if size >= n:
        X = (1 << n) - 1
        if len({row & X for row in rows}) == c:
            return DistinguishingSet(X, n, 1, seed)
        raise DomainError("even the full B side does not distinguish u_sub")
    if max_attempts < 1:
        raise DomainError("max_attempts must be positive")
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        X = mask_of(rng.sample(range(n), size))
        if len({row & X for row in rows}) == c:
            return DistinguishingSet(X, size, attempt, seed)
    raise DomainError(
        f"no distinguishing set of size {size} found in {max_attempts} attempts "
        f"(c={c}, n={n}, alpha={float(alpha_f):.4f})")


# ---------------------------------------------------------------------------
# sparsening: clone classes


@dataclass(frozen=True)
class SparseningParams:
    alpha: float
    t: int
    delta: float
    direction: str
    seed: int


@dataclass(frozen=True)
class SparseningOutput:
    """Core vertices B' plus, per part, trace-aligned classes.

    In direction ``to-core`` (the basic loop, per part) there are 2^t
    classes per part, all members of a class sharing a neighbourhood
    pattern on B', and every class transversal shatters B'.  Direction
    ``from-core`` flips via the aligned reverse construction: t classes
    per part, |B'| = 2^(rt), and B' shatters every transversal.
    """

    b_prime: int
    classes: tuple[tuple[int, ...], ...]
    params: SparseningParams
    condition_a: bool
    condition_b: bool


def _part_bipgraph(G: Graph, B_verts, working: int):
    cols = list(bits(working))
    index = {v: i for i, v in enumerate(cols)}
    rows = []
    for b in B_verts:
        row = 0
        for v in bits(G.adj[b] & working):
            row |= 1 << index[v]
        rows.append(row)
    return BipGraph(len(B_verts), len(cols), tuple(rows)), cols


def _sparsening_rounds(G: Graph, B_verts, part: int, t: int, rng,
                       max_rounds: int) -> list[tuple[int, int]]:
    """The basic loop on one part: distinguish, find a shattered 2^t-set,
    reverse-shatter, remove, repeat.  Returns (core_candidate, X) pairs."""
    c = len(B_verts)
    B_mask = mask_of(B_verts)
    working = part & ~B_mask
    rounds: list[tuple[int, int]] = []
    size_needed = 1 << t
    while len(rounds) < max_rounds and working.bit_count() >= size_needed:
        bip, cols = _part_bipgraph(G, B_verts, working)
        deltas = [(bip.rows[i] ^ bip.rows[j]).bit_count()
                  for i in range(c) for j in range(i)]
        dmin = min(deltas)
        if dmin == 0:
            break  # remaining window no longer separates the core candidates
        alpha_pass = Fraction(dmin, bip.n)
        try:
            ds = distinguishing_set(bip, (1 << c) - 1, alpha_pass,
                                    rng.randrange(1 << 30))
        except DomainError:
            break
        X_local = ds.X
        X_global = mask_of(cols[i] for i in bits(X_local))
        family = TraceFamily.from_graph(G, B_mask, X_global)
        X_star = find_shattered(family, size_needed)
        if X_star is None:
            break
        # realizers of every subset of X_star within the core candidates
        realizers = {}
        for b in B_verts:
            tr = G.adj[b] & X_star
            realizers.setdefault(tr, b)
        u_star = mask_of(realizers.values())
        core, X_used = reverse_shatter(G, u_star, X_star, t)
        rounds.append((core, X_used))
        working &= ~X_used
    return rounds


def _class_patterns(G: Graph, core: int, members: int):
    by_pattern: dict[int, int] = {}
    for v in bits(members):
        by_pattern.setdefault(G.adj[v] & core, 0)
        by_pattern[G.adj[v] & core] |= 1 << v
    return by_pattern


def extract_clone_classes(G: Graph, parts, B: int, alpha: float, t: int,
                          seed: int = 0, direction: str = "to-core",
                          max_rounds: int = 64) -> SparseningOutput:
    """Desk-scale clone-class pipeline over a pairwise-separated core set.

    Repeatedly (i) draws a distinguishing X inside a part, (ii) finds a
    shattered set of the traces on X by exhaustive search, (iii) flips it
    via the reverse construction and removes it.  Candidate cores repeated
    across rounds are pigeonholed into one core valid for every part, and
    the removed sets are regrouped into trace-aligned classes.

    ``to-core``: every class transversal shatters B' (2^t classes/part).
    ``from-core``: finishes with the aligned reverse construction so B'
    shatters every transversal (t classes/part, |B'| = 2^(rt)).

    Thresholds are desk-scale: the loop needs |B| >= 2^(2^t) distinct trace
    patterns (for ``from-core``, with t replaced by 2^(rt) internally); the
    tower-type constants of the source analysis are far out of reach and
    structured StepErrors name whichever stage starves.
    """
    if direction not in ("to-core", "from-core"):
        raise DomainError("direction must be 'to-core' or 'from-core'")
    pmasks = part_masks(parts)
    r = len(pmasks)
    n = G.n
    B_verts = list(bits(B))
    c = len(B_verts)
    alpha_f = Fraction(alpha)

    # separation precondition: every core pair far apart within every part
    for j, S in enumerate(pmasks):
        for i2 in range(c):
            for i1 in range(i2):
                d = ((G.adj[B_verts[i1]] ^ G.adj[B_verts[i2]]) & S).bit_count()
                if d < alpha_f * n:
                    raise DomainError(
                        f"core pair ({B_verts[i1]},{B_verts[i2]}) closer than "
                        f"alpha*n within part {j}")

    if t == 0:
        # degenerate convenience case: no structure requested
        classes = tuple((S & ~B,) for S in pmasks)
        dmin = min((m[0].bit_count() for m in classes), default=0)
        params = SparseningParams(float(alpha_f), 0, dmin / n if n else 0.0,
                                  direction, seed)
        return SparseningOutput(B, classes, params, True, True)

    t_inner = t if direction == "to-core" else 1 << (r * t)
    if c < 1 << (1 << t_inner):
        raise StepError("core-selection",
                        f"need |B| >= 2^(2^{t_inner}) = {1 << (1 << t_inner)} "
                        f"trace patterns, have {c}")

    rng = random.Random(seed)
    per_part = []
    for j in range(r):
        rounds = _sparsening_rounds(G, B_verts, pmasks[j], t_inner, rng, max_rounds)
        if not rounds:
            raise StepError("find-shattered",
                            f"no shattered 2^{t_inner}-set recovered in part {j}")
        per_part.append(rounds)

    # joint pigeonhole: one core present in every part's rounds
    candidates = set(core for core, _ in per_part[0])
    for rounds in per_part[1:]:
        candidates &= set(core for core, _ in rounds)
    if not candidates:
        raise StepError("pigeonhole", "no core candidate recurs in every part")
    occurrences = {cand: sum(1 for rounds in per_part for core, _ in rounds
                             if core == cand) for cand in candidates}
    top = max(occurrences.values())
    core = min(c2 for c2, occ in occurrences.items() if occ == top)

    inner_classes = []
    for j in range(r):
        merged: dict[int, int] = {}
        for cand, X_used in per_part[j]:
            if cand != core:
                continue
            for pattern, members in _class_patterns(G, core, X_used).items():
                merged[pattern] = merged.get(pattern, 0) | members
        if len(merged) != 1 << t_inner:
            raise StepError("pigeonhole",
                            f"part {j} classes cover {len(merged)} of "
                            f"{1 << t_inner} patterns on the core")
        inner_classes.append(tuple(merged[p] for p in sorted(merged)))

    if direction == "to-core":
        b_prime, classes = core, tuple(inner_classes)
    else:
        reps = []
        for j in range(r):
            reps.append(mask_of((cm & -cm).bit_length() - 1
                                for cm in inner_classes[j]))
        try:
            chosen, b_prime = aligned_reverse_shatter(G, reps, core, t)
        except DomainError as exc:
            raise StepError("aligned-reverse-shatter", str(exc)) from exc
        classes = []
        for j in range(r):
            keep = []
            for v in bits(chosen[j]):
                pattern = G.adj[v] & core
                for cm in inner_classes[j]:
                    if cm >> v & 1:
                        keep.append(cm)
                        break
            classes.append(tuple(keep))
        classes = tuple(classes)

    # conditions (a) and (b): every member of a class carries the class's
    # exact trace on B'; that single check covers every transversal at once.
    cond_a = cond_b = True
    for part_classes in classes:
        for cm in part_classes:
            patterns = {G.adj[v] & b_prime for v in bits(cm)}
            if len(patterns) != 1:
                cond_a = False
    if direction == "to-core":
        pattern_sets = []
        for part_classes in classes:
            pattern_sets.append({next(iter({G.adj[v] & b_prime for v in bits(cm)}))
                                 for cm in part_classes if cm})
        for ps in pattern_sets:
            if len(ps) != 1 << t:
                cond_b = False
    else:
        transversal = mask_of((cm & -cm).bit_length() - 1
                              for part_classes in classes for cm in part_classes)
        cond_b = shatters(G, b_prime, transversal) is not None

    dmin = min(cm.bit_count() for part_classes in classes for cm in part_classes)
    params = SparseningParams(float(alpha_f), t, dmin / n, direction, seed)
    return SparseningOutput(b_prime, classes, params, cond_a, cond_b)


# ---------------------------------------------------------------------------
# planted instances: the testing ground for the pipeline


def planted_clone_instance(r: int, t: int, copies: int):
    """Build a graph whose clone structure is planted by construction.

    The core is one vertex per subset of the 2^t trace patterns; each part
    holds ``copies`` vertices per pattern, adjacent to exactly the core
    vertices whose subset contains their pattern.  Returns (graph, parts,
    core_mask); the designated t-subset the pipeline should rediscover is
    the core's single-bit-of-pattern vertices.
    """
    npat = 1 << t
    csize = 1 << npat
    n = csize + r * npat * copies
    if n > 64:
        raise DomainError("planted instance does not fit in 64 vertices")
    adj = [0] * n
    labels = []
    offset = csize
    for _ in range(r):
        for j in range(npat):
            for _ in range(copies):
                x = offset
                for sigma in range(csize):
                    if sigma >> j & 1:
                        adj[x] |= 1 << sigma
                        adj[sigma] |= 1 << x
                offset += 1
    part_labels = [0] * csize
    per_part = npat * copies
    for i in range(r):
        part_labels += [i] * per_part
    # core vertices live in part 0 alongside its planted classes
    labels = tuple(part_labels)
    core = (1 << csize) - 1
    return Graph(n, tuple(adj)), labels, core
