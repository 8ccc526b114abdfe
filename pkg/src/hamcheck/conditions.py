"""Sufficient degree conditions for Hamiltonicity.

Every checker evaluates its hypothesis only; no checker consults a solver.
Scans run in ascending vertex (or lexicographic pair) order and stop at the
first violation, so reports are deterministic for a given digraph.

A report never proves non-Hamiltonicity: a failed hypothesis says only that
this particular condition is silent about the digraph.
"""

from dataclasses import dataclass, field

from .connectivity import is_k_strong, is_strong
from .digraph import Digraph


@dataclass(frozen=True)
class Witness:
    """Why a hypothesis failed: an offending vertex, a pair, or a structural
    reason such as the digraph not being strong."""

    kind: str  # "vertex" | "pair" | "structural"
    vertices: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    holds: bool
    witness: Witness | None
    parameters: dict = field(default_factory=dict)
    clauses: dict[str, bool] | None = None


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees plus the total-degree ranking (ties by index)."""

    n: int
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    totals: tuple[int, ...]
    ranked: tuple[tuple[int, int], ...]  # (total, vertex) ascending

    @classmethod
    def of(cls, d: Digraph) -> "DegreeProfile":
        outs = tuple(d.out_degree(v) for v in range(d.n))
        ins = tuple(d.in_degree(v) for v in range(d.n))
        totals = tuple(o + i for o, i in zip(outs, ins))
        ranked = tuple(sorted((t, v) for v, t in enumerate(totals)))
        return cls(d.n, outs, ins, totals, ranked)

    def min_vertex(self) -> int:
        return self.ranked[0][1]


def _structural(name: str, params: dict, detail: str,
                clauses: dict[str, bool] | None = None) -> ConditionReport:
    return ConditionReport(name, False, Witness("structural", (), detail), params, clauses)


def cond_nash_williams(d: Digraph) -> ConditionReport:
    """Every vertex has d+ >= n/2 and d- >= n/2 (compared exactly, 2d >= n)."""
    name, n = "nash-williams", d.n
    params = {"n": n}
    if n < 2:
        return _structural(name, params, "n < 2")
    for x in range(n):
        if 2 * d.out_degree(x) < n:
            w = Witness("vertex", (x,), f"2*d+({x})={2 * d.out_degree(x)} < n={n}")
            return ConditionReport(name, False, w, params)
        if 2 * d.in_degree(x) < n:
            w = Witness("vertex", (x,), f"2*d-({x})={2 * d.in_degree(x)} < n={n}")
            return ConditionReport(name, False, w, params)
    return ConditionReport(name, True, None, params)


def cond_ghouila_houri(d: Digraph) -> ConditionReport:
    """Strong and every vertex has total degree at least n."""
    name, n = "ghouila-houri", d.n
    params = {"n": n}
    if n < 2:
        return _structural(name, params, "n < 2")
    if not is_strong(d):
        return _structural(name, params, "not strong")
    for x in range(n):
        if d.degree(x) < n:
            w = Witness("vertex", (x,), f"d({x})={d.degree(x)} < n={n}")
            return ConditionReport(name, False, w, params)
    return ConditionReport(name, True, None, params)


def cond_woodall(d: Digraph) -> ConditionReport:
    """d+(x) + d-(y) >= n whenever the arc x->y is absent (x != y).

    No connectivity hypothesis; the degree bound forces what it needs.
    """
    name, n = "woodall", d.n
    params = {"n": n}
    if n < 2:
        return _structural(name, params, "n < 2")
    for x in range(n):
        for y in range(n):
            if x == y or d.has_arc(x, y):
                continue
            s = d.out_degree(x) + d.in_degree(y)
            if s < n:
                w = Witness("pair", (x, y), f"d+({x})+d-({y})={s} < n={n}")
                return ConditionReport(name, False, w, params)
    return ConditionReport(name, True, None, params)


def cond_meyniel(d: Digraph) -> ConditionReport:
    """Strong and d(x) + d(y) >= 2n - 1 for every non-adjacent pair."""
    name, n = "meyniel", d.n
    params = {"n": n}
    if n < 2:
        return _structural(name, params, "n < 2")
    if not is_strong(d):
        return _structural(name, params, "not strong")
    for x in range(n):
        for y in range(x + 1, n):
            if d.has_arc(x, y) or d.has_arc(y, x):
                continue
            s = d.degree(x) + d.degree(y)
            if s < 2 * n - 1:
                w = Witness("pair", (x, y), f"d({x})+d({y})={s} < 2n-1={2 * n - 1}")
                return ConditionReport(name, False, w, params)
    return ConditionReport(name, True, None, params)


def cond_one_light(d: Digraph) -> ConditionReport:
    """Strong, n-1 vertices of total degree >= n, the remaining one >= n-1."""
    name, n = "one-light", d.n
    params = {"n": n}
    if n < 2:
        return _structural(name, params, "n < 2")
    if not is_strong(d):
        return _structural(name, params, "not strong")
    profile = DegreeProfile.of(d)
    deg, v = profile.ranked[1]
    if deg < n:
        w = Witness("vertex", (v,), f"d({v})={deg} < n={n} (second-smallest)")
        return ConditionReport(name, False, w, params)
    deg, v = profile.ranked[0]
    if deg < n - 1:
        w = Witness("vertex", (v,), f"d({v})={deg} < n-1={n - 1}")
        return ConditionReport(name, False, w, params)
    return ConditionReport(name, True, None, params)


def cond_main(d: Digraph, k: int = 0) -> ConditionReport:
    """2-strong of order n >= 9, all vertices but one of total degree at
    least n+k, and the light vertex z of degree at least n-k-4.

    z is the minimum-total-degree vertex (smallest index on ties).  The
    clauses field records each clause separately.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    name, n = "main", d.n
    profile = DegreeProfile.of(d)
    z = profile.min_vertex()
    params = {"n": n, "k": k, "z": z}
    clauses = {
        "order": n >= 9,
        "two_strong": is_k_strong(d, 2) if n >= 3 else False,
        "heavy_degrees": n < 2 or profile.ranked[1][0] >= n + k,
        "z_degree": profile.ranked[0][0] >= n - k - 4,
    }
    if all(clauses.values()):
        return ConditionReport(name, True, None, params, clauses)
    if not clauses["order"]:
        return _structural(name, params, f"n={n} < 9", clauses)
    if not clauses["two_strong"]:
        return _structural(name, params, "not 2-strong", clauses)
    if not clauses["heavy_degrees"]:
        deg, v = profile.ranked[1]
        w = Witness("vertex", (v,), f"d({v})={deg} < n+k={n + k}")
        return ConditionReport(name, False, w, params, clauses)
    dz = profile.ranked[0][0]
    w = Witness("vertex", (z,), f"d(z)={dz} < n-k-4={n - k - 4} (z=vertex {z})")
    return ConditionReport(name, False, w, params, clauses)


def cond_ham_connected(d: Digraph, u: int, v: int, k: int = 0) -> ConditionReport:
    """Hypothesis for a Hamiltonian path from u to v.

    With N the order and n = N - 1: 3-strong, N >= 10, minimum total degree
    at least n+k+2, and d+(u) + d-(v) >= n-k-2, or >= n-k-4 when the arc
    u->v is absent.
    """
    d._check_vertex(u)
    d._check_vertex(v)
    if u == v:
        raise ValueError("endpoints must be distinct")
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    name = "ham-connected"
    big_n = d.n
    n = big_n - 1
    profile = DegreeProfile.of(d)
    s = d.out_degree(u) + d.in_degree(v)
    params = {"n": n, "k": k, "u": u, "v": v}
    clauses = {
        "order": big_n >= 10,
        "three_strong": is_k_strong(d, 3) if big_n >= 4 else False,
        "min_degree": profile.ranked[0][0] >= n + k + 2,
        "endpoint_sum": s >= n - k - 2 or (s >= n - k - 4 and not d.has_arc(u, v)),
    }
    if all(clauses.values()):
        return ConditionReport(name, True, None, params, clauses)
    if not clauses["order"]:
        return _structural(name, params, f"order {big_n} < 10", clauses)
    if not clauses["three_strong"]:
        return _structural(name, params, "not 3-strong", clauses)
    if not clauses["min_degree"]:
        deg, x = profile.ranked[0]
        w = Witness("vertex", (x,), f"d({x})={deg} < n+k+2={n + k + 2}")
        return ConditionReport(name, False, w, params, clauses)
    w = Witness("pair", (u, v),
                f"d+({u})+d-({v})={s}: needs >= {n - k - 2}, "
                f"or >= {n - k - 4} with arc {u}->{v} absent")
    return ConditionReport(name, False, w, params, clauses)


def cond_bipartite(d: Digraph, variant: str) -> ConditionReport:
    """Balanced bipartite conditions, order 2a >= 6, all requiring strongness.

    variant a: d+(x) + d-(y) >= a+2 for cross-side pairs with no arc x->y
    variant b: d(x) + d(y) >= 3a for non-adjacent pairs
    variant c: d(x) + d(y) >= 3a for pairs with a common in- or out-neighbor
    variant d: d(x) + d(y) >= 3a+1 for pairs with a common out-neighbor
    """
    if variant not in ("a", "b", "c", "d"):
        raise ValueError(f"unknown variant {variant!r}")
    if d.bipartition is None:
        raise ValueError("a declared bipartition is required")
    n = d.n
    if n < 6:
        raise ValueError("bipartite conditions need order >= 6")
    a = n // 2
    name = f"bipartite-{variant}"
    params = {"a": a, "variant": variant}
    if not is_strong(d):
        return _structural(name, params, "not strong")
    sides = d.bipartition
    if variant == "a":
        for x in range(n):
            for y in range(n):
                if x == y or sides[x] == sides[y] or d.has_arc(x, y):
                    continue
                s = d.out_degree(x) + d.in_degree(y)
                if s < a + 2:
                    w = Witness("pair", (x, y), f"d+({x})+d-({y})={s} < a+2={a + 2}")
                    return ConditionReport(name, False, w, params)
        return ConditionReport(name, True, None, params)
    bound = 3 * a + 1 if variant == "d" else 3 * a
    for x in range(n):
        for y in range(x + 1, n):
            if variant == "b":
                applies = not d.has_arc(x, y) and not d.has_arc(y, x)
            elif variant == "c":
                applies = bool(d.out_mask(x) & d.out_mask(y)) or bool(d.in_mask(x) & d.in_mask(y))
            else:
                applies = bool(d.out_mask(x) & d.out_mask(y))
            if not applies:
                continue
            s = d.degree(x) + d.degree(y)
            if s < bound:
                w = Witness("pair", (x, y), f"d({x})+d({y})={s} < {bound}")
                return ConditionReport(name, False, w, params)
    return ConditionReport(name, True, None, params)


#: Stable CLI identifiers for the checkers and the parameters each one takes.
REGISTRY = {
    "nash-williams": (cond_nash_williams, ()),
    "ghouila-houri": (cond_ghouila_houri, ()),
    "woodall": (cond_woodall, ()),
    "meyniel": (cond_meyniel, ()),
    "one-light": (cond_one_light, ()),
    "main": (cond_main, ("k",)),
    "ham-connected": (cond_ham_connected, ("u", "v", "k")),
    "bipartite-a": (cond_bipartite, ("variant",)),
    "bipartite-b": (cond_bipartite, ("variant",)),
    "bipartite-c": (cond_bipartite, ("variant",)),
    "bipartite-d": (cond_bipartite, ("variant",)),
}


def check(d: Digraph, name: str, *, k: int = 0,
          u: int | None = None, v: int | None = None) -> ConditionReport:
    """Dispatch a checker by its CLI identifier."""
    if name not in REGISTRY:
        raise ValueError(f"unknown condition {name!r}")
    fn, needs = REGISTRY[name]
    if name.startswith("bipartite-"):
        return fn(d, name[-1])
    kwargs = {}
    if "k" in needs:
        kwargs["k"] = k
    if "u" in needs:
        if u is None or v is None:
            raise ValueError(f"condition {name} needs vertices u and v")
        kwargs["u"] = u
        kwargs["v"] = v
    return fn(d, **kwargs)
