"""Exact cycle and path solvers via subset dynamic programming.

All solvers are Held-Karp style: states are (visited set, endpoint) pairs
anchored at a fixed start vertex, stored as one endpoint bitmask per visited
set.  Exact answers are practical up to order 24; beyond that the solvers
raise CapacityError instead of silently degrading.

Witnesses are deterministic.  hamiltonian_cycle and hamiltonian_path return
the lexicographically smallest witness sequence (the feasibility table is
built over the converse, then the sequence is grown forward greedily).  The
longest-cycle solvers reconstruct backward preferring the smallest-index
predecessor inside the numerically smallest optimal vertex set.
"""

from dataclasses import dataclass

from .digraph import Cycle, Digraph, Path, bits, validate_cycle, validate_path

SOLVER_CAP = 24


class CapacityError(ValueError):
    """Instance exceeds the exact-solver capacity."""


@dataclass(frozen=True)
class SolveResult:
    found: bool
    witness: Path | Cycle | None
    length: int | None
    explored: int


def _check_cap(n: int) -> None:
    if n > SOLVER_CAP:
        raise CapacityError(f"order {n} exceeds the exact-solver cap {SOLVER_CAP}")


def _table(in_rem: list[int], m: int) -> tuple[list[int], int]:
    """Endpoint table for paths from remapped vertex 0.

    in_rem[v] is the bitmask of in-neighbors of v in the remapped universe
    [0, m).  Entry t[r] (with r encoding visited vertices other than 0, so the
    visited set is (r << 1) | 1) is the bitmask of endpoints reachable by a
    path from 0 spanning exactly that set.  Also returns the number of
    expanded states.
    """
    full = (1 << m) - 1
    t = [0] * (1 << (m - 1))
    t[0] = 1
    explored = 0
    for r in range(len(t)):
        em = t[r]
        if not em:
            continue
        explored += 1
        s = (r << 1) | 1
        cand = full & ~s
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            if in_rem[v] & em:
                t[r | (b >> 1)] |= b
    return t, explored


def hamiltonian_cycle(d: Digraph) -> SolveResult:
    """Hamiltonian cycle, or not found.  Witness starts at vertex 0."""
    n = d.n
    _check_cap(n)
    if n < 2:
        return SolveResult(False, None, None, 0)
    # table over the converse: t[r] holds f iff d has a path f -> 0 spanning
    # the set; the converse's in-neighbors of v are d's out-neighbors
    t, explored = _table([d.out_mask(v) for v in range(n)], n)
    if not t[-1] & d.out_mask(0):
        return SolveResult(False, None, None, explored)
    full = (1 << n) - 1
    seq = [0]
    visited = 1
    cur = 0
    for _ in range(n - 1):
        tr = t[((full & ~visited) | 1) >> 1]
        nxt = -1
        for w in bits(d.out_mask(cur) & ~visited):
            if tr >> w & 1:
                nxt = w
                break
        assert nxt >= 0, "table invariant violated"
        seq.append(nxt)
        visited |= 1 << nxt
        cur = nxt
    return SolveResult(True, validate_cycle(d, seq), n, explored)


def hamiltonian_path(d: Digraph, u: int, v: int) -> SolveResult:
    """Hamiltonian path from u to v, or not found."""
    d._check_vertex(u)
    d._check_vertex(v)
    if u == v:
        raise ValueError("path endpoints must be distinct")
    n = d.n
    _check_cap(n)
    # anchor the converse table at v: t holds w iff d has a path w -> v
    order = [v] + [w for w in range(n) if w != v]
    pos = {w: i for i, w in enumerate(order)}
    conv_in = []
    for w in order:
        m = 0
        for x in bits(d.out_mask(w)):
            m |= 1 << pos[x]
        conv_in.append(m)
    t, explored = _table(conv_in, n)
    if not t[-1] >> pos[u] & 1:
        return SolveResult(False, None, None, explored)
    full = (1 << n) - 1
    seq = [u]
    visited = 1 << pos[u]
    cur = u
    for _ in range(n - 1):
        tr = t[((full & ~visited) | 1) >> 1]
        nxt = -1
        for w in bits(d.out_mask(cur)):
            i = pos[w]
            if visited >> i & 1 or not tr >> i & 1:
                continue
            nxt = w
            break
        assert nxt >= 0, "table invariant violated"
        seq.append(nxt)
        visited |= 1 << pos[nxt]
        cur = nxt
    return SolveResult(True, validate_path(d, seq), n - 1, explored)


def _backward_cycle(t, in_rem, best_r: int, close: int) -> list[int]:
    # walk back from the smallest closing endpoint inside the fixed set
    e = (close & -close).bit_length() - 1
    s = (best_r << 1) | 1
    rev = []
    cur = e
    while cur != 0:
        rev.append(cur)
        s &= ~(1 << cur)
        preds = t[s >> 1] & in_rem[cur]
        assert preds, "table invariant violated"
        cur = (preds & -preds).bit_length() - 1
    rev.append(0)
    rev.reverse()
    return rev


def longest_cycle_through(d: Digraph, z: int) -> SolveResult:
    """Maximum length of a cycle through z; length 0 when z lies on no cycle.

    The witness cycle starts at z.
    """
    d._check_vertex(z)
    n = d.n
    _check_cap(n)
    order = [z] + [w for w in range(n) if w != z]
    pos = {w: i for i, w in enumerate(order)}
    in_rem = []
    for w in order:
        m = 0
        for x in bits(d.in_mask(w)):
            m |= 1 << pos[x]
        in_rem.append(m)
    t, explored = _table(in_rem, n)
    best_len = 0
    best_r = -1
    best_close = 0
    for r in range(1, len(t)):
        close = t[r] & in_rem[0]
        if close:
            ln = r.bit_count() + 1
            if ln > best_len:
                best_len, best_r, best_close = ln, r, close
    if best_len == 0:
        return SolveResult(False, None, 0, explored)
    rem_seq = _backward_cycle(t, in_rem, best_r, best_close)
    seq = [order[i] for i in rem_seq]
    return SolveResult(True, validate_cycle(d, seq), best_len, explored)


def longest_cycle(d: Digraph) -> SolveResult:
    """Maximum cycle length overall; length 0 for acyclic digraphs.

    Runs the anchored DP once per candidate minimum cycle vertex, pruning
    anchors that cannot beat the current best.  The witness starts at its
    smallest vertex.
    """
    n = d.n
    _check_cap(n)
    best_len = 0
    best = None
    explored = 0
    for a in range(n):
        m = n - a
        if m < 2 or m <= best_len:
            break
        umask = (1 << m) - 1
        in_rem = [d.in_mask(a + i) >> a & umask for i in range(m)]
        t, ex = _table(in_rem, m)
        explored += ex
        im0 = in_rem[0]
        for r in range(1, len(t)):
            close = t[r] & im0
            if close:
                ln = r.bit_count() + 1
                if ln > best_len:
                    best_len = ln
                    best = (a, r, close, t, in_rem)
    if best is None:
        return SolveResult(False, None, 0, explored)
    a, r, close, t, in_rem = best
    seq = [a + i for i in _backward_cycle(t, in_rem, r, close)]
    return SolveResult(True, validate_cycle(d, seq), best_len, explored)


def has_cycle_of_length(d: Digraph, k: int) -> bool:
    """True iff d contains a cycle with exactly k arcs, 2 <= k <= n."""
    n = d.n
    _check_cap(n)
    if not isinstance(k, int) or not 2 <= k <= n:
        raise ValueError(f"cycle length {k!r} out of range [2, {n}]")
    for a in range(n):
        m = n - a
        if m < k:
            break
        umask = (1 << m) - 1
        in_rem = [d.in_mask(a + i) >> a & umask for i in range(m)]
        im0 = in_rem[0]
        t = [0] * (1 << (m - 1))
        t[0] = 1
        for r in range(len(t)):
            em = t[r]
            if not em:
                continue
            if r.bit_count() + 1 == k:
                if em & im0:
                    return True
                continue
            s = (r << 1) | 1
            cand = umask & ~s
            while cand:
                b = cand & -cand
                cand ^= b
                v = b.bit_length() - 1
                if in_rem[v] & em:
                    t[r | (b >> 1)] |= b
    return False


def insert_vertex(d: Digraph, path, x: int) -> int | None:
    """Smallest 0-based i with path[i] -> x and x -> path[i+1], else None.

    The sequence must be a path of d and x must lie outside it.
    """
    seq = path.vertices if isinstance(path, Path) else tuple(path)
    validate_path(d, seq)
    d._check_vertex(x)
    if x in seq:
        raise ValueError(f"vertex {x} lies on the path")
    for i in range(len(seq) - 1):
        if d.has_arc(seq[i], x) and d.has_arc(x, seq[i + 1]):
            return i
    return None
