"""Hereditary properties given by finitely many forbidden induced subgraphs:
membership, exact speeds, mixed-partition classes H(r,v), and the colouring
number.

Only finite forbidden families are representable.  Whether a finite basis
captures the intended property is the caller's modeling choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, log2

from .errors import DomainError
from .graphs import (Graph, MAX_ENUM_VERTICES, contains_induced, enumerate_labeled,
                     graph6_decode, graph6_encode, is_isomorphic)

MAX_FORBIDDEN_ORDER = 10
MAX_PATTERN_LENGTH = 8


@dataclass(frozen=True)
class PropertySpec:
    """A minimal, isomorphism-deduplicated family of forbidden induced subgraphs."""

    forbidden: tuple[Graph, ...]

    @classmethod
    def from_graphs(cls, graphs) -> "PropertySpec":
        kept: list[Graph] = []
        for F in sorted(graphs, key=lambda g: (g.n, g.edge_count())):
            if not 1 <= F.n <= MAX_FORBIDDEN_ORDER:
                raise DomainError(
                    f"forbidden graphs must have 1..{MAX_FORBIDDEN_ORDER} vertices")
            if any(contains_induced(F, K) is not None for K in kept):
                continue  # redundant: some kept graph already forbids F's hosts
            kept.append(F)
        return cls(tuple(kept))

    def __post_init__(self):
        for i, F in enumerate(self.forbidden):
            for j, K in enumerate(self.forbidden):
                if i != j and contains_induced(F, K) is not None:
                    raise DomainError("forbidden family is not minimal")


def load_property(path) -> PropertySpec:
    """Read a PropertySpec file: one graph6 line per forbidden graph."""
    with open(path, "rb") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    return PropertySpec.from_graphs([graph6_decode(ln) for ln in lines])


def dump_property(spec: PropertySpec, path) -> None:
    with open(path, "wb") as fh:
        for F in spec.forbidden:
            fh.write(graph6_encode(F) + b"\n")


def is_member(spec: PropertySpec, G: Graph) -> bool:
    return all(contains_induced(G, F) is None for F in spec.forbidden)


# ---------------------------------------------------------------------------
# speeds


@dataclass(frozen=True)
class SpeedRow:
    n: int
    count: int
    entropy: float


def _entropy(n: int, count: int) -> float:
    if n < 2 or count <= 0:
        return 0.0
    return log2(count) / comb(n, 2)


def enumerate_property(spec: PropertySpec, n: int):
    """Stream the graphs of the property on [n] in canonical order.

    Row-building DFS: hereditary closure means a forbidden subgraph in a
    prefix kills every extension, so pruned branches lose nothing.  Emits
    exactly the graphs of ``enumerate_labeled(n, is_member)`` in the same
    ascending edge-bitmask order.
    """
    if not 0 <= n <= MAX_ENUM_VERTICES:
        raise DomainError(f"enumeration capped at n <= {MAX_ENUM_VERTICES}")
    forb = spec.forbidden
    min_forb = min((F.n for F in forb), default=1)
    rows = [0] * n

    def clean(v: int) -> bool:
        # does some forbidden graph appear induced in the prefix, touching v?
        if v + 1 < min_forb:
            return True
        for F in forb:
            if F.n <= v + 1 and _pinned_copy(rows, v + 1, F, v):
                return False
        return True

    def rec(v: int):
        if v == n:
            yield Graph(n, tuple(rows))
            return
        for row in range(1 << v):
            rows[v] = row
            for u in range(v):
                if row >> u & 1:
                    rows[u] |= 1 << v
            if clean(v):
                yield from rec(v + 1)
            for u in range(v):
                rows[u] &= ~(1 << v)
        rows[v] = 0

    if n == 0:
        if is_member(spec, Graph(0, ())):
            yield Graph(0, ())
        return
    yield from rec(0)


def _pinned_copy(rows, nv: int, H: Graph, pin: int) -> bool:
    """Is there an induced copy of H in the raw-row prefix whose image
    contains vertex ``pin``?  Works on the mutable row list directly so the
    enumeration DFS avoids per-node object churn."""
    hadj = H.adj
    image = [-1] * H.n
    for h_pin in range(H.n):
        order = [h_pin] + [h for h in range(H.n) if h != h_pin]
        used = 0

        def bt(i: int) -> bool:
            nonlocal used
            if i == len(order):
                return True
            h = order[i]
            hrow = hadj[h]
            candidates = (pin,) if i == 0 else range(nv)
            for g in candidates:
                if used >> g & 1:
                    continue
                grow = rows[g]
                ok = True
                for h2 in order[:i]:
                    if (hrow >> h2 & 1) != (grow >> image[h2] & 1):
                        ok = False
                        break
                if not ok:
                    continue
                image[h] = g
                used |= 1 << g
                if bt(i + 1):
                    return True
                used &= ~(1 << g)
                image[h] = -1
            return False

        if bt(0):
            return True
    return False


def speed(spec: PropertySpec, n: int) -> SpeedRow:
    """Exact |P_n| by filtered enumeration (pruned DFS fast path)."""
    count = sum(1 for _ in enumerate_property(spec, n))
    return SpeedRow(n, count, _entropy(n, count))


# ---------------------------------------------------------------------------
# mixed partitions H(r,v) and the colouring number


def hrv_member(G: Graph, v):
    """A partition of V(G) into len(v) parts, part j a clique iff v[j] = 1
    and independent otherwise, or None.  Exhaustive backtracking; empty
    parts are allowed.  Returns the part label of each vertex."""
    v = tuple(v)
    r = len(v)
    if not 1 <= r <= MAX_PATTERN_LENGTH:
        raise DomainError(f"pattern length must be 1..{MAX_PATTERN_LENGTH}")
    members = [0] * r
    assign = [-1] * G.n

    def bt(u: int) -> bool:
        if u == G.n:
            return True
        tried_fresh = set()
        for j in range(r):
            m = members[j]
            if m == 0:
                # fresh parts with the same pattern bit are interchangeable
                if v[j] in tried_fresh:
                    continue
                tried_fresh.add(v[j])
            elif v[j] == 1:
                if (G.adj[u] & m) != m:
                    continue
            else:
                if G.adj[u] & m:
                    continue
            members[j] |= 1 << u
            assign[u] = j
            if bt(u + 1):
                return True
            members[j] &= ~(1 << u)
            assign[u] = -1
        return False

    return tuple(assign) if bt(0) else None


def count_hrv(n: int, r: int, v) -> int:
    """Exact number of labeled graphs on [n] admitting an (r,v)-partition."""
    v = tuple(v)
    if len(v) != r:
        raise DomainError("pattern length must equal r")
    return sum(1 for _ in enumerate_labeled(n, lambda G: hrv_member(G, v) is not None))


@dataclass(frozen=True)
class ColouringNumber:
    value: int
    capped: bool
    degenerate: bool
    witness_v: tuple[int, ...] | None


def colouring_number(spec: PropertySpec, r_max: int = MAX_PATTERN_LENGTH) -> ColouringNumber:
    """Largest r <= r_max with H(r,v) inside the property for some v.

    H(r,v) is hereditary, so H(r,v) lies inside the property iff no
    forbidden graph admits an (r,v)-partition.  Only the number of ones in
    v matters, and feasibility is downward closed in r.
    """
    if not spec.forbidden:
        raise DomainError("unbounded colouring number (no forbidden graphs)")
    if r_max > MAX_PATTERN_LENGTH:
        raise DomainError(f"r_max capped at {MAX_PATTERN_LENGTH}")

    def witness_at(r: int):
        for ones in range(r + 1):
            v = (1,) * ones + (0,) * (r - ones)
            if all(hrv_member(F, v) is None for F in spec.forbidden):
                return v
        return None

    best_v = witness_at(1)
    if best_v is None:
        return ColouringNumber(0, False, True, None)
    value = 1
    for r in range(2, r_max + 1):
        v = witness_at(r)
        if v is None:
            return ColouringNumber(value, False, False, best_v)
        value, best_v = r, v
    return ColouringNumber(value, True, False, best_v)


def valid_hrv_patterns(spec: PropertySpec, r_max: int = MAX_PATTERN_LENGTH):
    """All (r, v) with H(r,v) inside the property, v up to permutation."""
    out = []
    for r in range(1, r_max + 1):
        any_at_r = False
        for ones in range(r + 1):
            v = (1,) * ones + (0,) * (r - ones)
            if all(hrv_member(F, v) is None for F in spec.forbidden):
                out.append((r, v))
                any_at_r = True
        if not any_at_r:
            break  # feasibility is downward closed in r
    return out


# ---------------------------------------------------------------------------
# the speed envelope of the structure theorem


def abt_bounds(n: int, r: int, eps: float) -> tuple[float, float]:
    """log2 envelope ((1-1/r) n^2/2, same + n^(2-eps)); pure arithmetic."""
    if r < 1:
        raise DomainError("r must be at least 1")
    if not 0 < eps <= 1:
        raise DomainError("eps must lie in (0, 1]")
    lower = (1 - 1 / r) * n * n / 2
    return lower, lower + n ** (2 - eps)
