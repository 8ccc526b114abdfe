"""Loop-free digraphs on vertex set {0, ..., n-1} with bitset adjacency.

Orders up to 64 are supported, so an adjacency row fits in a single int
and neighborhood algebra is mask arithmetic.  Digraph values are immutable;
mutators return new values.

File format (extension .dgf):

    # comment lines and blank lines are ignored
    digraph <n>
    bipartition <b_0> ... <b_{n-1}>      (optional, each 0 or 1, balanced)
    <u> <v>                              (one arc per line, 0-based, u != v)

Canonical serialization is the header, the bipartition line if present, then
arcs sorted by (u, v), single spaces, newline endings.  parse/serialize are
mutually inverse on canonical text.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64


class DgfError(ValueError):
    """Malformed .dgf input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Digraph:
    """Immutable digraph.  Arcs are ordered pairs; loops are forbidden.

    An optional bipartition marks each vertex with side 0 or 1; it must be
    balanced and every arc must cross sides.
    """

    __slots__ = ("n", "_out", "_in", "bipartition")

    def __init__(self, n: int, out_masks: Iterable[int] | None = None,
                 bipartition: Iterable[int] | None = None):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"order must be a positive integer, got {n!r}")
        if n > MAX_ORDER:
            raise ValueError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        self.n = n
        full = (1 << n) - 1
        if out_masks is None:
            out = (0,) * n
        else:
            out = tuple(out_masks)
            if len(out) != n:
                raise ValueError("out_masks length must equal the order")
            for v, row in enumerate(out):
                if row & ~full:
                    raise ValueError(f"adjacency row of vertex {v} leaves the vertex range")
                if row >> v & 1:
                    raise ValueError(f"loop at vertex {v}")
        self._out = out
        inn = [0] * n
        for u, row in enumerate(out):
            for v in bits(row):
                inn[v] |= 1 << u
        self._in = tuple(inn)
        if bipartition is not None:
            sides = tuple(bipartition)
            if len(sides) != n or any(s not in (0, 1) for s in sides):
                raise ValueError("bipartition must assign 0 or 1 to every vertex")
            if 2 * sum(sides) != n:
                raise ValueError("bipartition must be balanced")
            for u in range(n):
                for v in bits(out[u]):
                    if sides[u] == sides[v]:
                        raise ValueError(f"arc {u}->{v} does not cross the bipartition")
            self.bipartition = sides
        else:
            self.bipartition = None

    # structural equality; bipartition is part of the value
    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.n, self._out, self.bipartition) == (other.n, other._out, other.bipartition)

    def __hash__(self) -> int:
        return hash((self.n, self._out, self.bipartition))

    def __setattr__(self, name, value):
        if hasattr(self, "bipartition"):
            raise AttributeError("Digraph is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count()})"

    def has_arc(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._out[u] >> v & 1)

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self._out[v]))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self._in[v]))

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def degree(self, v: int) -> int:
        """Total degree d(v) = d+(v) + d-(v)."""
        return self._out[v].bit_count() + self._in[v].bit_count()

    def vertices(self) -> range:
        return range(self.n)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs sorted by (u, v)."""
        return [(u, v) for u in range(self.n) for v in bits(self._out[u])]

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self._out)

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise ValueError(f"vertex {v!r} out of range for order {self.n}")


def new_digraph(n: int) -> Digraph:
    """Digraph of order n with no arcs.  n must lie in [1, 64]."""
    return Digraph(n)


def add_arc(d: Digraph, u: int, v: int) -> tuple[Digraph, bool]:
    """Return (digraph with arc u->v, duplicate flag).

    The flag is True when the arc was already present; the result is then
    structurally equal to the input.
    """
    d._check_vertex(u)
    d._check_vertex(v)
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    if d.has_arc(u, v):
        return d, True
    rows = list(d._out)
    rows[u] |= 1 << v
    return Digraph(d.n, rows, d.bipartition), False


def add_arc_set(d: Digraph, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Add every arc in the iterable; duplicates are tolerated."""
    rows = list(d._out)
    for u, v in arcs:
        d._check_vertex(u)
        d._check_vertex(v)
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
    return Digraph(d.n, rows, d.bipartition)


def from_arcs(n: int, arcs: Iterable[tuple[int, int]],
              bipartition: Iterable[int] | None = None) -> Digraph:
    """Build a digraph from an arc iterable (set semantics)."""
    return add_arc_set(Digraph(n, None, bipartition), arcs)


def degrees(d: Digraph, x: int, within: Iterable[int] | None = None) -> tuple[int, int, int]:
    """(d+, d-, d) of x, restricted to a vertex set when given.

    d(x, A) counts arcs between x and members of A only; x itself being in A
    is harmless since loops do not exist.
    """
    d._check_vertex(x)
    if within is None:
        mask = (1 << d.n) - 1
    else:
        mask = 0
        for v in within:
            d._check_vertex(v)
            mask |= 1 << v
    dp = (d._out[x] & mask).bit_count()
    dm = (d._in[x] & mask).bit_count()
    return dp, dm, dp + dm


def induced(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Subdigraph induced by a vertex set, plus the index mapping.

    Members are sorted ascending; new vertex i is members[i].  A declared
    bipartition is dropped (the subset need not stay balanced).
    """
    members = sorted(set(vertices))
    if not members:
        raise ValueError("induced subdigraph needs a nonempty vertex set")
    for v in members:
        d._check_vertex(v)
    pos = {v: i for i, v in enumerate(members)}
    rows = []
    for v in members:
        row = 0
        for w in bits(d._out[v]):
            if w in pos:
                row |= 1 << pos[w]
        rows.append(row)
    return Digraph(len(members), rows), tuple(members)


def converse(d: Digraph) -> Digraph:
    """Reverse every arc.  An involution; preserves the bipartition."""
    return Digraph(d.n, d._in, d.bipartition)


def infer_bipartition(d: Digraph) -> tuple[int, ...]:
    """2-color the underlying undirected graph, side of vertex 0 being 0.

    Fails if the underlying graph is not bipartite, is disconnected (the
    coloring would not be unique up to one global swap), or the sides are
    unbalanced.
    """
    und = [d._out[v] | d._in[v] for v in range(d.n)]
    side = [-1] * d.n
    side[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for w in bits(und[v]):
            if side[w] == -1:
                side[w] = 1 - side[v]
                queue.append(w)
            elif side[w] == side[v]:
                raise ValueError("underlying graph is not bipartite")
    if -1 in side:
        raise ValueError("underlying graph is disconnected; bipartition is not unique")
    if 2 * sum(side) != d.n:
        raise ValueError("inferred bipartition is not balanced")
    return tuple(side)


def parse(text: str) -> Digraph:
    """Parse DGF text.  Raises DgfError on malformed input."""
    header: int | None = None
    sides: tuple[int, ...] | None = None
    rows: list[int] | None = None
    seen_arc = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "digraph" or len(parts) != 2:
                raise DgfError(f"line {lineno}: expected 'digraph <n>' header")
            try:
                header = int(parts[1])
            except ValueError:
                raise DgfError(f"line {lineno}: order is not an integer") from None
            if not 1 <= header <= MAX_ORDER:
                raise DgfError(f"line {lineno}: order must lie in [1, {MAX_ORDER}]")
            rows = [0] * header
            continue
        if parts[0] == "bipartition":
            if seen_arc or sides is not None:
                raise DgfError(f"line {lineno}: bipartition must directly follow the header")
            if len(parts) != header + 1:
                raise DgfError(f"line {lineno}: bipartition needs one value per vertex")
            try:
                sides = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise DgfError(f"line {lineno}: bipartition values must be integers") from None
            if any(s not in (0, 1) for s in sides):
                raise DgfError(f"line {lineno}: bipartition values must be 0 or 1")
            continue
        if len(parts) != 2:
            raise DgfError(f"line {lineno}: expected '<u> <v>' arc line")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DgfError(f"line {lineno}: arc endpoints must be integers") from None
        if not (0 <= u < header and 0 <= v < header):
            raise DgfError(f"line {lineno}: arc {u}->{v} out of range")
        if u == v:
            raise DgfError(f"line {lineno}: loop at vertex {u}")
        if rows[u] >> v & 1:
            raise DgfError(f"line {lineno}: duplicate arc {u}->{v}")
        rows[u] |= 1 << v
        seen_arc = True
    if header is None:
        raise DgfError("missing 'digraph <n>' header")
    try:
        return Digraph(header, rows, sides)
    except ValueError as exc:
        raise DgfError(str(exc)) from None


def serialize(d: Digraph) -> str:
    """Canonical DGF text for d."""
    lines = [f"digraph {d.n}"]
    if d.bipartition is not None:
        lines.append("bipartition " + " ".join(str(s) for s in d.bipartition))
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Path:
    """Vertex sequence of a directed path (consecutive arcs, no repeats)."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Cycle:
    """Vertex sequence of a directed cycle; the closing arc is implicit.

    Length means the number of arcs, which equals the number of vertices.
    """

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def validate_path(d: Digraph, vertices: Iterable[int]) -> Path:
    seq = tuple(vertices)
    if not seq:
        raise ValueError("empty path")
    if len(set(seq)) != len(seq):
        raise ValueError("path repeats a vertex")
    for a, b in zip(seq, seq[1:]):
        if not d.has_arc(a, b):
            raise ValueError(f"missing path arc {a}->{b}")
    return Path(seq)


def validate_cycle(d: Digraph, vertices: Iterable[int]) -> Cycle:
    seq = tuple(vertices)
    if len(seq) < 2:
        raise ValueError("a cycle has at least 2 vertices")
    validate_path(d, seq)
    if not d.has_arc(seq[-1], seq[0]):
        raise ValueError(f"missing closing arc {seq[-1]}->{seq[0]}")
    return Cycle(seq)
