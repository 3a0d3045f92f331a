"""Clone/bad-set machinery, the universal-packing algorithm, and the
decomposition certificate with its verifier.

Thresholds: the working cutoff is floor(alpha * n) with n = |V(G)|; a clone
pair differs by at most the cutoff, a bad pair by at least the cutoff, in
every part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .errors import DomainError, StepError
from .freeness import find_uk_copy
from .graphs import (Graph, bits, greedy_maximal_clique, induced_subgraph,
                     k_submasks, mask_of, max_clique, part_masks)
from .regularity import min_intra_edges_parts, toy_bbs_parts
from .universal import shatters, universal_layer_sizes

MAX_BAD_EXACT = 24
MAX_PACK_VERTICES = 40


def clone_cutoff(alpha, n: int) -> int:
    return int(Fraction(alpha) * n)


@dataclass(frozen=True)
class CloneParams:
    alpha: float
    k: int
    r: int
    eps_out: float

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise DomainError("alpha must lie in (0,1)")


def is_alpha_clone(G: Graph, u: int, v: int, A: int, alpha) -> bool:
    """|(Gamma(u) ^ Gamma(v)) & A| <= floor(alpha n), n = |V(G)|."""
    return ((G.adj[u] ^ G.adj[v]) & A).bit_count() <= clone_cutoff(alpha, G.n)


def _bad_pair(G: Graph, pmasks, u: int, v: int, cutoff: int) -> bool:
    x = G.adj[u] ^ G.adj[v]
    return all((x & S).bit_count() >= cutoff for S in pmasks)


@dataclass(frozen=True)
class BadSetResult:
    vertices: int
    size: int
    exact: bool


def max_bad_set(G: Graph, parts, alpha, mode: str = "exact",
                r: int | None = None) -> BadSetResult:
    """Largest vertex set pairwise far apart inside every part: maximum
    clique of the far-pair auxiliary graph (exact, n <= 24) or a greedy
    maximal set flagged as a lower bound.  An explicit ``r`` admits empty
    parts, which kill every bad pair once the cutoff is positive."""
    pmasks = part_masks(parts, r)
    cutoff = clone_cutoff(alpha, G.n)
    adj = [0] * G.n
    for u in range(G.n):
        for v in range(u):
            if _bad_pair(G, pmasks, u, v, cutoff):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    if mode == "exact":
        if G.n > MAX_BAD_EXACT:
            raise DomainError(f"exact mode capped at {MAX_BAD_EXACT} vertices")
        best = max_clique(G.n, adj) if G.n else 0
        return BadSetResult(best, best.bit_count(), True)
    if mode == "greedy":
        best = greedy_maximal_clique(G.n, adj) if G.n else 0
        return BadSetResult(best, best.bit_count(), False)
    raise DomainError("mode must be 'exact' or 'greedy'")


def clone_index(G: Graph, parts, B: int, alpha, v: int,
                r: int | None = None) -> int:
    """Smallest part index j such that v is an alpha-clone of some b in B
    with respect to S_j.  Errors when none exists (B not maximal)."""
    pmasks = part_masks(parts, r)
    cutoff = clone_cutoff(alpha, G.n)
    for j, S in enumerate(pmasks):
        for b in bits(B):
            if ((G.adj[v] ^ G.adj[b]) & S).bit_count() <= cutoff:
                return j
    raise DomainError(f"vertex {v} has no clone in B within any part "
                      "(the bad set is not maximal)")


@dataclass
class AdjustmentReport:
    labels: tuple[int, ...]
    sym_diffs: tuple[int, ...]
    is_adjustment: bool
    issues: list[str] = field(default_factory=list)


def alpha_adjust(G: Graph, parts, B: int, alpha,
                 r: int | None = None) -> AdjustmentReport:
    """Move every vertex to the first part where it clones a bad vertex
    (clone threshold 2*alpha, matching a maximal (2 alpha)-bad B), then
    report whether the result is an alpha-adjustment: every part moved by
    at most alpha*n, and every vertex a (3 alpha)-clone of some b in B with
    respect to its new part.  Violations are diagnosed, never asserted."""
    parts = tuple(parts)
    if r is None:
        r = max(parts) + 1 if parts else 0
    two_alpha = 2 * Fraction(alpha)
    labels = tuple(clone_index(G, parts, B, two_alpha, v, r) for v in range(G.n))
    old_masks = part_masks(parts, r)
    new_masks = part_masks(labels, r)
    n = G.n
    budget = clone_cutoff(alpha, n)
    sym = tuple((old_masks[j] ^ new_masks[j]).bit_count() for j in range(r))
    issues = []
    for j in range(r):
        if sym[j] > budget:
            issues.append(f"part {j} moved by {sym[j]} > alpha*n = {budget}")
    three_alpha = 3 * Fraction(alpha)
    cutoff3 = clone_cutoff(three_alpha, n)
    for j in range(r):
        for v in bits(new_masks[j]):
            if not any(((G.adj[v] ^ G.adj[b]) & new_masks[j]).bit_count() <= cutoff3
                       for b in bits(B)):
                issues.append(
                    f"vertex {v} is no (3 alpha)-clone of B within new part {j}")
    return AdjustmentReport(labels, sym, not issues, issues)


# ---------------------------------------------------------------------------
# the packing algorithm


@dataclass(frozen=True)
class PackingPiece:
    layers: tuple[int, ...]        # vertex mask per layer
    level: int                     # t: number of layers
    placement: tuple[int, ...]     # part index per layer

    @property
    def vertices(self) -> int:
        m = 0
        for layer in self.layers:
            m |= layer
        return m


@dataclass(frozen=True)
class PackingReport:
    pieces: tuple[PackingPiece, ...]
    residual: tuple[int, ...]
    k: int
    r: int

    def packed_mask(self) -> int:
        m = 0
        for p in self.pieces:
            m |= p.vertices
        return m


def _layer_chain_ok(G: Graph, layers) -> bool:
    """The defining chain: each layer shatters the union of earlier ones,
    with exactly one realizer per trace (sizes force the bijection)."""
    prefix = 0
    for i, layer in enumerate(layers):
        if i > 0:
            if layer.bit_count() != 1 << prefix.bit_count():
                return False
            if shatters(G, layer, prefix) is None:
                return False
        prefix |= layer
    return True


def _find_placed_copy(G: Graph, pmasks, X: int, k: int, t: int):
    """First (canonical order) placed generalized-universal copy of t levels
    avoiding X: layers sized per the construction, the shattering chain
    holding, layer j inside part i(j), with i(1) = i(2) and the rest
    pairwise-new parts.  Exhaustive backtracking over realizer choices."""
    r = len(pmasks)
    sizes = universal_layer_sizes(t, k)
    if len(sizes) < t:
        return None
    total = sum(sizes)
    avail_all = G.vertex_mask & ~X
    if total > avail_all.bit_count():
        return None

    def place(layers: list[int], used: int, placement: list[int]) -> bool:
        j = len(layers)
        if j == t:
            return True
        pool = pmasks[placement[j]] & ~X & ~used
        size = sizes[j]
        if pool.bit_count() < size:
            return False
        if j == 0:
            for first in k_submasks(pool, size):
                layers.append(first)
                if place(layers, used | first, placement):
                    return True
                layers.pop()
            return False
        prefix = 0
        for m in layers:
            prefix |= m
        need = 1 << prefix.bit_count()
        if size != need:
            return False
        classes: dict[int, list[int]] = {}
        for a in bits(pool):
            classes.setdefault(G.adj[a] & prefix, []).append(a)
        if len(classes) < need:
            return False
        ordered = sorted(classes)
        if len(ordered) != need:
            return False
        if j == t - 1:
            # last layer: any trace-complete choice works; take the lowest
            layer = mask_of(classes[tr][0] for tr in ordered)
            layers.append(layer)
            return True
        choice = [0] * need

        def pick(idx: int, acc: int) -> bool:
            if idx == need:
                layers.append(acc)
                if place(layers, used | acc, placement):
                    return True
                layers.pop()
                return False
            for a in classes[ordered[idx]]:
                choice[idx] = a
                if pick(idx + 1, acc | 1 << a):
                    return True
            return False

        return pick(0, 0)

    for p in range(r):
        tails = permutations([q for q in range(r) if q != p], t - 2) \
            if t >= 3 else [()]
        for tail in tails:
            placement = [p, p, *tail]
            layers: list[int] = []
            if place(layers, 0, placement):
                return PackingPiece(tuple(layers), t, tuple(placement))
    return None


def extract_universal_packing(G: Graph, parts, k: int,
                              r: int | None = None) -> PackingReport:
    """The packing loop: for t from r+1 down to 2, repeatedly take the first
    placeable t-level copy, remove its vertices, and continue.  Levels too
    large to fit simply contribute no pieces."""
    if G.n > MAX_PACK_VERTICES:
        raise DomainError(f"packing capped at {MAX_PACK_VERTICES} vertices")
    parts = tuple(parts)
    pmasks = part_masks(parts, r)
    r = len(pmasks)
    pieces = []
    X = 0
    t = r + 1
    while t >= 2:
        piece = _find_placed_copy(G, pmasks, X, k, t)
        if piece is None:
            t -= 1
            continue
        pieces.append(piece)
        X |= piece.vertices
    residual = tuple(S & ~X for S in pmasks)
    return PackingReport(tuple(pieces), residual, k, r)


def verify_packing_report(G: Graph, parts, report: PackingReport) -> list[str]:
    """Structural checks on a packing: piece disjointness, layer sizes and
    shattering chains, and the placement rules."""
    problems = []
    pmasks = part_masks(tuple(parts))
    seen = 0
    for idx, piece in enumerate(report.pieces):
        v = piece.vertices
        if v & seen:
            problems.append(f"piece {idx} overlaps earlier pieces")
        seen |= v
        sizes = universal_layer_sizes(piece.level, report.k)
        if [m.bit_count() for m in piece.layers] != sizes:
            problems.append(f"piece {idx} has wrong layer sizes")
            continue
        if not _layer_chain_ok(G, piece.layers):
            problems.append(f"piece {idx} fails its shattering chain")
        pl = piece.placement
        if len(pl) != piece.level or piece.level < 2:
            problems.append(f"piece {idx} placement malformed")
            continue
        if pl[0] != pl[1]:
            problems.append(f"piece {idx}: first two layers in different parts")
        rest = pl[1:]
        if len(set(rest)) != len(rest):
            problems.append(f"piece {idx}: repeated part beyond the first layer")
        for layer, part in zip(piece.layers, pl):
            if layer & ~pmasks[part]:
                problems.append(f"piece {idx}: a layer leaves its part")
    rising = [i for i in range(1, len(report.pieces))
              if report.pieces[i].level > report.pieces[i - 1].level]
    if rising:
        problems.append(f"piece levels increase at positions {rising}")
    return problems


def verify_packing_maximality(G: Graph, parts, report: PackingReport) -> bool:
    """No part disjoint from a piece can shatter it using vertices outside
    the earlier pieces, and no further placeable copy remains at any level.
    Both are invariants of the extraction loop; hand-built reports that
    under-pack fail here."""
    pmasks = part_masks(tuple(parts))
    used = 0
    for piece in report.pieces:
        used |= piece.vertices
        body = piece.vertices
        for j, S in enumerate(pmasks):
            if S & body:
                continue
            if shatters(G, S & ~used, body) is not None:
                return False
    X = report.packed_mask()
    for t in range(len(pmasks) + 1, 1, -1):
        if _find_placed_copy(G, pmasks, X, report.k, t) is not None:
            return False
    return True


# ---------------------------------------------------------------------------
# the decomposition


@dataclass(frozen=True)
class DecompositionCertificate:
    n: int
    r: int
    k: int
    exceptional: int               # the set A
    parts: tuple[int, ...]         # masks S_1..S_r after removing A
    bad_set: int
    adjusted_labels: tuple[int, ...]
    adjustment_ok: bool
    packing: PackingReport
    alpha: float
    eps_out: float
    budget: float
    budget_ok: bool


def default_parts(G: Graph, r: int) -> tuple[int, ...]:
    """Partition hint when none is supplied: the toy block-based partition
    at n <= 12, otherwise the minimum-intra-edge partition."""
    if G.n <= 12 and r <= 4:
        try:
            return toy_bbs_parts(G, r)
        except DomainError:
            pass
    return min_intra_edges_parts(G, r)


def decompose(G: Graph, r: int, k: int, alpha, parts_hint=None,
              eps_out: float = 0.5, bad_mode: str = "auto") -> DecompositionCertificate:
    """Full pipeline: maximal (2 alpha)-bad set, alpha-adjustment, universal
    packing, then A = B union packed and S_j = S'_j minus A.

    Each final part is verified U(k)-free before returning.  The |A| budget
    n^(1-eps_out) is reported, never asserted: it holds for almost all
    graphs of a property, not for every input.
    """
    if r < 1:
        raise DomainError("need at least one part")
    parts = tuple(parts_hint) if parts_hint is not None else default_parts(G, r)
    if len(parts) != G.n:
        raise DomainError("parts hint does not match the graph")
    if any(not 0 <= j < r for j in parts):
        raise DomainError("parts hint uses a label outside 0..r-1")
    if bad_mode == "auto":
        bad_mode = "exact" if G.n <= MAX_BAD_EXACT else "greedy"
    two_alpha = 2 * Fraction(alpha)
    bad = max_bad_set(G, parts, two_alpha, bad_mode, r)
    adj = alpha_adjust(G, parts, bad.vertices, alpha, r)
    packing = extract_universal_packing(G, adj.labels, k, r)
    A = bad.vertices | packing.packed_mask()
    new_masks = part_masks(adj.labels, r)
    final_parts = tuple(S & ~A for S in new_masks)
    for j, S in enumerate(final_parts):
        sub = induced_subgraph(G, S)
        if sub.n >= (1 << k) + k and find_uk_copy(sub, k) is not None:
            raise StepError("packing",
                            f"part {j} still contains a U({k}) copy after packing")
    budget = G.n ** (1 - eps_out)
    return DecompositionCertificate(
        n=G.n, r=r, k=k, exceptional=A, parts=final_parts,
        bad_set=bad.vertices, adjusted_labels=adj.labels,
        adjustment_ok=adj.is_adjustment, packing=packing,
        alpha=float(Fraction(alpha)), eps_out=eps_out, budget=budget,
        budget_ok=A.bit_count() <= budget)


def decomposition_failures(G: Graph, cert: DecompositionCertificate,
                           budget_eps: float | None = None) -> list[str]:
    problems = []
    union = cert.exceptional
    for j, S in enumerate(cert.parts):
        if S & union:
            problems.append(f"part {j} overlaps A or an earlier part")
        union |= S
    if union != G.vertex_mask:
        problems.append("certificate does not partition the vertex set")
    for j, S in enumerate(cert.parts):
        sub = induced_subgraph(G, S)
        if sub.n >= (1 << cert.k) + cert.k and find_uk_copy(sub, cert.k) is not None:
            problems.append(f"part {j} contains a U({cert.k}) copy")
    if budget_eps is not None:
        budget = G.n ** (1 - budget_eps)
        if cert.exceptional.bit_count() > budget:
            problems.append(
                f"|A| = {cert.exceptional.bit_count()} exceeds n^(1-eps) = {budget:.3f}")
    return problems


def verify_decomposition(G: Graph, cert: DecompositionCertificate,
                         budget_eps: float | None = None) -> bool:
    """Re-check partition validity, U(k)-freeness of every part, and (when
    ``budget_eps`` is given) the |A| budget."""
    return not decomposition_failures(G, cert, budget_eps)
