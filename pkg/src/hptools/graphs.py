"""Labeled simple graphs on at most 64 vertices, stored as per-vertex bit rows.

Conventions used throughout the package:

* vertices are ``0 .. n-1``; a vertex set is an ``int`` bitmask,
* ``adj[i]`` is the neighbourhood of vertex ``i`` as a bitmask,
* on n vertices, edge ``(u, v)`` with ``u < v`` occupies bit
  ``C(n,2) - C(v+1,2) + u`` of the *edge bitmask*: vertex v's backward
  row forms one block, earlier vertices' blocks more significant.
  Enumeration order is ascending edge bitmask, which coincides with
  growing the graph one vertex at a time,
* a partition of the vertex set into r parts is a tuple of part indices
  (``0``-based), one per vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError

MAX_VERTICES = 64

# ---------------------------------------------------------------------------
# bitmask helpers


def bits(mask: int):
    """Iterate over the set bit positions of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bottom_bits(mask: int, k: int) -> int:
    """The k lowest set bits of ``mask``."""
    out = 0
    for v in bits(mask):
        if k == 0:
            break
        out |= 1 << v
        k -= 1
    if k:
        raise DomainError(f"mask has fewer than requested bits ({k} missing)")
    return out


def k_submasks(mask: int, k: int):
    """All k-bit submasks of ``mask`` in colex (ascending numeric) order."""
    positions = list(bits(mask))
    g = len(positions)
    if k > g:
        return
    if k == 0:
        yield 0
        return
    c = (1 << k) - 1
    top = 1 << g
    while c < top:
        yield sum(1 << positions[i] for i in bits(c))
        # Gosper's hack: next integer with the same popcount
        u = c & -c
        v = c + u
        c = v + (((v ^ c) // u) >> 2)


def part_masks(labels, r: int | None = None) -> list[int]:
    """Convert a part-labeling tuple into per-part vertex masks."""
    if r is None:
        r = (max(labels) + 1) if labels else 0
    masks = [0] * r
    for v, j in enumerate(labels):
        if not 0 <= j < r:
            raise DomainError(f"part label {j} out of range for r={r}")
        masks[j] |= 1 << v
    return masks


# ---------------------------------------------------------------------------
# the Graph type


@dataclass(frozen=True)
class Graph:
    """Immutable labeled graph; ``adj[i]`` is the bit row of vertex i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise DomainError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise DomainError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"row {i} has bits outside [n]")
            if row >> i & 1:
                raise DomainError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for j in bits(self.adj[i]):
                if not self.adj[j] >> i & 1:
                    raise DomainError(f"adjacency not symmetric at ({i},{j})")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v]) if u < v]

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def graph_from_edges(n: int, edges) -> Graph:
    """Build a graph from an edge list; duplicate edges are accepted idempotently."""
    if not 0 <= n <= MAX_VERTICES:
        raise DomainError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge ({u},{v}) endpoint out of range")
        if u == v:
            raise DomainError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(G: Graph) -> Graph:
    full = G.vertex_mask
    return Graph(G.n, tuple((full & ~r) & ~(1 << i) for i, r in enumerate(G.adj)))


def induced_subgraph(G: Graph, S: int) -> Graph:
    """The subgraph induced by vertex mask S, relabeled by increasing index."""
    if S & ~G.vertex_mask:
        raise DomainError("vertex set not contained in the graph")
    verts = list(bits(S))
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in bits(G.adj[v] & S):
            adj[index[v]] |= 1 << index[u]
    return Graph(len(verts), tuple(adj))


# ---------------------------------------------------------------------------
# induced-subgraph search


def contains_induced(G: Graph, H: Graph):
    """Find an injective map phi with uv in E(H) iff phi(u)phi(v) in E(G).

    Exhaustive backtracking with degree pruning; returns the map as a tuple
    (phi[h] = image vertex) or None.  The first witness in the search order
    is returned, so results are deterministic.
    """
    if H.n > G.n:
        return None
    if H.n == 0:
        return ()
    # order pattern vertices: place high-degree, well-connected vertices early
    order = sorted(range(H.n), key=lambda h: -H.degree(h))
    placed: list[int] = []
    image = [-1] * H.n
    used = 0
    gdeg = [G.degree(v) for v in range(G.n)]
    gcodeg = [G.n - 1 - d for d in gdeg]
    hdeg = [H.degree(h) for h in range(H.n)]
    hcodeg = [H.n - 1 - d for d in hdeg]

    def bt(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        h = order[i]
        for g in range(G.n):
            if used >> g & 1:
                continue
            if gdeg[g] < hdeg[h] or gcodeg[g] < hcodeg[h]:
                continue
            row = G.adj[g]
            ok = True
            for h2 in placed:
                if (H.adj[h] >> h2 & 1) != (row >> image[h2] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[h] = g
            placed.append(h)
            used |= 1 << g
            if bt(i + 1):
                return True
            used &= ~(1 << g)
            placed.pop()
            image[h] = -1
        return False

    if bt(0):
        return tuple(image)
    return None


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.edge_count() != H.edge_count():
        return False
    return contains_induced(G, H) is not None


# ---------------------------------------------------------------------------
# labeled enumeration

MAX_ENUM_VERTICES = 8


def edge_block_base(n: int, v: int) -> int:
    """Bit position of edge (0, v) in the edge bitmask on n vertices."""
    return n * (n - 1) // 2 - v * (v + 1) // 2


def graph_from_edge_mask(n: int, emask: int) -> Graph:
    adj = [0] * n
    for v in range(1, n):
        base = edge_block_base(n, v)
        for u in range(v):
            if emask >> (base + u) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def edge_mask_of(G: Graph) -> int:
    emask = 0
    for v in range(1, G.n):
        base = edge_block_base(G.n, v)
        for u in range(v):
            if G.adj[v] >> u & 1:
                emask |= 1 << (base + u)
    return emask


def enumerate_labeled(n: int, predicate=None, start: int = 0, stop: int | None = None):
    """Stream every labeled graph on [n] passing ``predicate``, ascending edge
    bitmask.  ``start``/``stop`` restrict to a sub-range of edge bitmasks so
    disjoint shards can be consumed independently (each graph appears in
    exactly one shard).
    """
    if not 0 <= n <= MAX_ENUM_VERTICES:
        raise DomainError(f"full enumeration capped at n <= {MAX_ENUM_VERTICES}")
    total = 1 << (n * (n - 1) // 2)
    if stop is None or stop > total:
        stop = total
    for emask in range(max(start, 0), stop):
        G = graph_from_edge_mask(n, emask)
        if predicate is None or predicate(G):
            yield G


def random_graph(n: int, p: float, seed=None) -> Graph:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    adj = [0] * n
    for v in range(n):
        for u in range(v):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# graph6 and edge-list formats


def graph6_encode(G: Graph) -> bytes:
    """Encode per the published graph6 format (bit-exact, zero padding)."""
    n = G.n
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    bitstream = []
    for v in range(n):
        for u in range(v):
            bitstream.append(G.adj[v] >> u & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    data = bytearray()
    for i in range(0, len(bitstream), 6):
        val = 0
        for b in bitstream[i:i + 6]:
            val = val << 1 | b
        data.append(val + 63)
    return head + bytes(data)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if not data:
        raise DomainError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise DomainError("graph6 data contains out-of-range bytes")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise DomainError("graph6 order exceeds the 64-vertex cap")
        if len(data) < 4:
            raise DomainError("malformed graph6 header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise DomainError(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex cap")
    m = n * (n - 1) // 2
    expect = (m + 5) // 6
    if len(body) != expect:
        raise DomainError(f"graph6 bit vector truncated or overlong "
                          f"({len(body)} data bytes, expected {expect})")
    bitstream = []
    for c in body:
        val = c - 63
        for shift in range(5, -1, -1):
            bitstream.append(val >> shift & 1)
    if any(bitstream[m:]):
        raise DomainError("graph6 padding bits are not zero")
    adj = [0] * n
    k = 0
    for v in range(n):
        for u in range(v):
            if bitstream[k]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, tuple(adj))


def edgelist_encode(G: Graph) -> str:
    lines = [str(G.n)]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def edgelist_decode(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("empty edge-list input")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise DomainError(f"malformed edge-list input: {exc}") from exc
    return graph_from_edges(n, edges)


# ---------------------------------------------------------------------------
# exact maximum clique (used for bad sets and separated subsets)


def max_clique(n: int, adj) -> int:
    """Exact maximum clique of the graph given by bit rows; returns a mask.

    Branch and bound with a popcount bound; intended for n <= 24 auxiliary
    graphs, where it is comfortably fast.
    """
    best_mask = 0
    best_size = 0

    def expand(cand: int, cur: int, size: int):
        nonlocal best_mask, best_size
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            ncur = cur | 1 << v
            ncand = cand & adj[v]
            if size + 1 + ncand.bit_count() > best_size:
                if ncand:
                    expand(ncand, ncur, size + 1)
                elif size + 1 > best_size:
                    best_mask, best_size = ncur, size + 1

    if n == 0:
        return 0
    expand((1 << n) - 1, 0, 0)
    if best_size == 0:
        best_mask = 1  # isolated vertex is a clique of size 1
    return best_mask


def greedy_maximal_clique(n: int, adj) -> int:
    """Greedy maximal clique by ascending vertex index."""
    cur = 0
    for v in range(n):
        if cur & ~adj[v]:
            continue
        cur |= 1 << v
    return cur
