"""Strong connectivity and exact vertex connectivity.

Vertex connectivity is computed from local connectivities: for every ordered
pair (u, v) with no arc u->v, the maximum number of internally disjoint u-v
paths equals the unit-capacity max flow in the vertex-split graph.  The
global value is the minimum over such pairs; a complete digraph has
connectivity n-1 by convention.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph, bits


@dataclass(frozen=True)
class ConnectivityReport:
    is_strong: bool
    vertex_connectivity: int
    witness_cut: tuple[int, ...] | None


def _reach_rows(rows, start_mask: int, alive: int) -> int:
    """Vertices of alive reachable from start_mask along rows, start included."""
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def _strong_rows(out_rows, in_rows, alive: int) -> bool:
    if alive == 0:
        return False
    start = alive & -alive
    if alive == start:
        return True
    return (_reach_rows(out_rows, start, alive) == alive
            and _reach_rows(in_rows, start, alive) == alive)


def is_strong(d: Digraph) -> bool:
    """True iff every vertex reaches every other.  Order 1 counts as strong."""
    return _strong_rows(d._out, d._in, (1 << d.n) - 1)


def _k_strong_rows(out_rows, in_rows, n: int, k: int) -> bool:
    # a digraph is k-strong iff n >= k+1 and no (k-1)-subset removal breaks
    # strongness; smaller removals are covered because n >= k+1 leaves room
    # to pad any breaking set up to size k-1
    if n < k + 1:
        return False
    full = (1 << n) - 1
    if k == 1:
        return _strong_rows(out_rows, in_rows, full)
    for cut in combinations(range(n), k - 1):
        alive = full
        for v in cut:
            alive &= ~(1 << v)
        if not _strong_rows(out_rows, in_rows, alive):
            return False
    return True


def is_k_strong(d: Digraph, k: int) -> bool:
    """True iff d has order >= k+1 and stays strong after removing any k-1
    vertices.  k must be >= 1."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if k - 1 <= 2:
        return _k_strong_rows(d._out, d._in, d.n, k)
    if d.n < k + 1:
        return False
    return vertex_connectivity(d).vertex_connectivity >= k


_BIG = 1 << 10


def _max_flow_pair(d: Digraph, s: int, t: int, abort_at: int):
    """Unit vertex-capacity max flow from s to t, no direct arc s->t assumed.

    Splits every vertex w (other than s, t) into w_in = w and w_out = w + n
    joined by a capacity-1 edge; arcs get effectively infinite capacity so a
    minimum cut consists of split edges only.  Augmentation stops once the
    flow reaches abort_at.  Returns (flow, residual).
    """
    n = d.n
    cap: list[dict[int, int]] = [{} for _ in range(2 * n)]

    def add(a, b, c):
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for w in range(n):
        if w != s and w != t:
            add(w, w + n, 1)
    for u in range(n):
        for w in bits(d.out_mask(u)):
            add(u + n, w, _BIG)
    source, sink = s + n, t
    flow = 0
    while flow < abort_at:
        parent = {source: -1}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return flow, cap


def _residual_cut(cap, d: Digraph, s: int, t: int) -> tuple[int, ...]:
    n = d.n
    seen = {s + n}
    queue = deque([s + n])
    while queue:
        a = queue.popleft()
        for b, c in cap[a].items():
            if c > 0 and b not in seen:
                seen.add(b)
                queue.append(b)
    return tuple(v for v in range(n)
                 if v not in (s, t) and v in seen and v + n not in seen)


def vertex_connectivity(d: Digraph) -> ConnectivityReport:
    """Exact vertex connectivity with a witness minimum cut.

    The witness is the lexicographically smallest cut over all minimizing
    pairs; minimum cuts are not unique in general.  Complete digraphs get
    connectivity n-1 and no witness.  Order must be at least 2.
    """
    n = d.n
    if n < 2:
        raise ValueError("vertex connectivity needs order >= 2")
    strong = is_strong(d)
    missing = [(u, v) for u in range(n) for v in range(n)
               if u != v and not d.has_arc(u, v)]
    if not missing:
        return ConnectivityReport(True, n - 1, None)
    if not strong:
        return ConnectivityReport(False, 0, ())
    best = n - 2
    for u, v in missing:
        flow, _ = _max_flow_pair(d, u, v, best)
        best = min(best, flow)
    cut: tuple[int, ...] | None = None
    for u, v in missing:
        flow, cap = _max_flow_pair(d, u, v, best + 1)
        if flow == best:
            cand = _residual_cut(cap, d, u, v)
            if cut is None or cand < cut:
                cut = cand
    return ConnectivityReport(True, best, cut)
