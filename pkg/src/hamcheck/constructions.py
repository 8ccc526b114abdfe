"""Named example digraphs, the path/cycle reduction, and random generators.

The d8/d9/d9prime digraphs are the tightness witnesses for the main degree
condition: 2-strong, every vertex but z heavy (degree >= order), z of
degree 4, and no Hamiltonian cycle.

Randomness contract: every generator is a pure function of its parameters
and an integer seed, drawn from random.Random (CPython's Mersenne Twister,
whose integer draws are stable across versions).
"""

import random
from dataclasses import dataclass
from itertools import permutations

from .connectivity import _k_strong_rows
from .digraph import Digraph, bits, from_arcs


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    digraph: Digraph
    label_map: dict[str, int]


def _two_cycles(pairs):
    for a, b in pairs:
        yield a, b
        yield b, a


def build_d8() -> NamedConstruction:
    """Order 8: x1..x4 = 0..3, y1..y3 = 4..6, z = 7."""
    x1, x2, x3, x4, y1, y2, y3, z = range(8)
    ys = (y1, y2, y3)
    arcs = list(permutations(ys, 2))
    arcs += [(x4, y) for y in ys] + [(y, x1) for y in ys]
    arcs += list(_two_cycles((x2, y) for y in ys))
    arcs += list(_two_cycles([(x1, x2), (x2, x3), (x3, x4), (x1, x3), (x3, z), (x4, x2)]))
    arcs += [(x4, x1), (x4, z), (z, x1)]
    labels = {"x1": x1, "x2": x2, "x3": x3, "x4": x4,
              "y1": y1, "y2": y2, "y3": y3, "z": z}
    return NamedConstruction("d8", from_arcs(8, arcs), labels)


def build_d9() -> NamedConstruction:
    """Order 9: x1..x5 = 0..4, y1..y3 = 5..7, z = 8."""
    x1, x2, x3, x4, x5, y1, y2, y3, z = range(9)
    ys = (y1, y2, y3)
    arcs = list(permutations(ys, 2))
    arcs += [(x5, y) for y in ys] + [(x3, y) for y in ys]
    arcs += [(y, x) for y in ys for x in (x1, x2, x3)]
    arcs += list(_two_cycles([(x1, x2), (x2, x3), (x3, x4), (x4, x5),
                              (x1, x4), (x3, x5), (x4, x2), (x4, z)]))
    arcs += [(x5, z), (z, x1), (x5, x1)]
    labels = {"x1": x1, "x2": x2, "x3": x3, "x4": x4, "x5": x5,
              "y1": y1, "y2": y2, "y3": y3, "z": z}
    return NamedConstruction("d9", from_arcs(9, arcs), labels)


def build_d9_prime() -> NamedConstruction:
    """d9 plus the arcs x3->x1 and x5->x2."""
    base = build_d9()
    lm = base.label_map
    extra = [(lm["x3"], lm["x1"]), (lm["x5"], lm["x2"])]
    return NamedConstruction("d9prime", from_arcs(9, base.digraph.arcs() + extra), dict(lm))


def build_complete(n: int) -> NamedConstruction:
    """Complete digraph: every ordered pair of distinct vertices is an arc."""
    full = (1 << n) - 1
    d = Digraph(n, [full & ~(1 << v) for v in range(n)])
    return NamedConstruction(f"complete:{n}", d, {})


def h_reduction(d: Digraph, u: int, v: int) -> NamedConstruction:
    """Collapse the ordered pair (u, v) into one terminal vertex z.

    The result H keeps D - {u, v} intact, adds z with arcs z->y for every
    out-neighbor y of u other than v, and y->z for every in-neighbor y of v
    other than u.  H has a Hamiltonian cycle exactly when D has a Hamiltonian
    path from u to v.
    """
    d._check_vertex(u)
    d._check_vertex(v)
    if u == v:
        raise ValueError("u and v must be distinct")
    if d.n < 3:
        raise ValueError("the reduction needs order >= 3")
    survivors = [w for w in range(d.n) if w not in (u, v)]
    pos = {w: i for i, w in enumerate(survivors)}
    z = len(survivors)
    arcs = []
    for a in survivors:
        for b in bits(d.out_mask(a)):
            if b in pos:
                arcs.append((pos[a], pos[b]))
    for y in bits(d.out_mask(u)):
        if y != v:
            arcs.append((z, pos[y]))
    for y in bits(d.in_mask(v)):
        if y != u:
            arcs.append((pos[y], z))
    labels = {f"v{w}": pos[w] for w in survivors}
    labels["z"] = z
    return NamedConstruction("h-reduction", from_arcs(d.n - 1, arcs), labels)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Independent arcs: each ordered loop-free pair is present with
    probability p.  Pairs are drawn in row-major order, so the outcome is a
    pure function of (n, p, seed)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"arc probability {p!r} out of [0, 1]")
    rng = random.Random(seed)
    rows = [0] * n
    for a in range(n):
        for b in range(n):
            if a != b and rng.random() < p:
                rows[a] |= 1 << b
    return Digraph(n, rows)


def _profile_gap(totals, n, k):
    """(target vertex, None) of the first profile violation, or None.

    The sorted profile must have second-smallest >= n+k and smallest
    >= n-k-4; the repair target is the blocking vertex.
    """
    ranked = sorted((t, v) for v, t in enumerate(totals))
    z = ranked[0][1]
    heavy_bad = [(t, v) for t, v in ranked[1:] if t < n + k]
    if heavy_bad:
        return heavy_bad[0][1]
    if ranked[0][0] < n - k - 4:
        return z
    return None


def random_satisfying_main(n: int, k: int, seed: int) -> Digraph:
    """Random 2-strong digraph satisfying the main degree condition for the
    given k (all vertices but one of degree >= n+k, the last one >= n-k-4),
    biased toward the degree boundary.

    Starts from arc probability (n+k) / (2(n-1)), then repairs: while the
    profile fails, add a uniformly random missing arc at the blocking vertex;
    afterwards add random arcs until 2-strong.  Arcs are only ever added, so
    repairs cannot undo each other.  Resamples on a fresh sub-seed if a
    repair budget runs out.
    """
    if not isinstance(n, int) or n < 9:
        raise ValueError("the condition needs order >= 9")
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    if n + k > 2 * (n - 1):
        raise ValueError(f"no digraph of order {n} has degrees >= {n + k}")
    rng = random.Random(seed)
    p = (n + k) / (2 * (n - 1))
    for _ in range(64):
        out = [0] * n
        inn = [0] * n
        for a in range(n):
            for b in range(n):
                if a != b and rng.random() < p:
                    out[a] |= 1 << b
                    inn[b] |= 1 << a

        def add_random_missing(slots):
            a, b = slots[rng.randrange(len(slots))]
            out[a] |= 1 << b
            inn[b] |= 1 << a

        budget = 4 * n * n
        while budget > 0:
            totals = [out[v].bit_count() + inn[v].bit_count() for v in range(n)]
            target = _profile_gap(totals, n, k)
            if target is None:
                break
            slots = [(target, w) for w in range(n)
                     if w != target and not out[target] >> w & 1]
            slots += [(w, target) for w in range(n)
                      if w != target and not out[w] >> target & 1]
            if not slots:
                break
            add_random_missing(slots)
            budget -= 1
        while budget > 0 and not _k_strong_rows(out, inn, n, 2):
            slots = [(a, b) for a in range(n) for b in range(n)
                     if a != b and not out[a] >> b & 1]
            if not slots:
                break
            add_random_missing(slots)
            budget -= 1
        totals = [out[v].bit_count() + inn[v].bit_count() for v in range(n)]
        if _profile_gap(totals, n, k) is None and _k_strong_rows(out, inn, n, 2):
            return Digraph(n, out)
    raise RuntimeError(f"generation failed for n={n}, k={k}, seed={seed}")
