"""Immutable simple undirected graphs over vertices 0..n-1.

Adjacency is stored as one integer bitmask per vertex, so neighborhood
algebra (intersections, set differences, clique tests) is plain integer
arithmetic regardless of n.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Iterator

from .errors import ExhaustionError, FormatError, InputError

VertexSet = frozenset  # subset of range(n) of the graph it refers to

Edge = tuple[int, int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph; values are immutable and hashable."""

    __slots__ = ("n", "_rows", "_hash")

    def __init__(self, n: int, rows: tuple[int, ...]):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        if len(rows) != n:
            raise InputError("adjacency rows must match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InputError(f"row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise InputError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise InputError(f"adjacency not symmetric at ({u}, {v})")
        self.n = n
        self._rows = rows
        self._hash = hash((n, rows))

    # -- construction ----------------------------------------------------

    @classmethod
    def _unsafe(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Skip invariant validation; rows must be symmetric and loop-free."""
        g = object.__new__(cls)
        g.n = n
        g._rows = rows
        g._hash = hash((n, rows))
        return g

    @staticmethod
    def from_edges(n: int, edges: Iterable[Edge]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"loop edge ({u}, {v}) not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def add_edges(self, edges: Iterable[Edge]) -> tuple["Graph", tuple[Edge, ...]]:
        """Return a new graph plus the edges that were actually new."""
        rows = list(self._rows)
        added = []
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise InputError(f"loop edge ({u}, {v}) not allowed")
            if not rows[u] >> v & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                added.append((min(u, v), max(u, v)))
        if not added:
            return self, ()
        return Graph(self.n, tuple(rows)), tuple(added)

    # -- basic queries ----------------------------------------------------

    def row(self, v: int) -> int:
        return self._rows[v]

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self._rows[v]))

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            row = self._rows[u] >> (u + 1)
            for v in _bits(row):
                out.append((u, u + 1 + v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def non_edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            absent = ~self._rows[u] & self.full_mask & ~((1 << (u + 1)) - 1)
            for v in _bits(absent):
                out.append((u, v))
        return out

    def is_clique_mask(self, mask: int) -> bool:
        for v in _bits(mask):
            if (self._rows[v] & mask) != mask ^ (1 << v):
                return False
        return True

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled 0..k-1 in increasing vertex order."""
        order = sorted(set(vertices))
        if order and not (0 <= order[0] and order[-1] < self.n):
            raise InputError("induced subgraph vertices out of range")
        index = {v: i for i, v in enumerate(order)}
        rows = [0] * len(order)
        for v in order:
            for u in _bits(self._rows[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph(len(order), tuple(rows))

    # -- value semantics --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- named constructors ----------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    return g.induced(vertices)


# -- connectivity -----------------------------------------------------------


def _component_mask(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.row(v)
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return _component_mask(g, 0, g.full_mask) == g.full_mask


def connected_components(g: Graph) -> list[frozenset[int]]:
    remaining = g.full_mask
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _component_mask(g, start, remaining)
        out.append(frozenset(_bits(comp)))
        remaining &= ~comp
    return out


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices via the standard DFS low-point computation."""
    disc = [-1] * g.n
    low = [0] * g.n
    result = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[u])
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if pv != root and low[v] >= disc[pv]:
                        result.add(pv)
        if root_children > 1:
            result.add(root)
    return sorted(result)


def is_nonseparable(g: Graph) -> bool:
    """Connected with no cut vertex; single vertices and edges count."""
    if g.n == 0 or not is_connected(g):
        return False
    if g.n <= 2:
        return True
    return not articulation_points(g)


def is_2_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


# -- maximal cliques --------------------------------------------------------


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques (Bron-Kerbosch with pivoting).

    Output order is deterministic: lexicographic by sorted member list.
    """
    rows = [g.row(v) for v in range(g.n)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            found.append(r)
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda v: (rows[v] & p).bit_count())
        for v in _bits(p & ~rows[pivot]):
            bit = 1 << v
            expand(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, g.full_mask, 0)
    cliques = [tuple(_bits(mask)) for mask in found]
    cliques.sort()
    return [frozenset(c) for c in cliques]


# -- graph6 ------------------------------------------------------------------


def _g6_encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126]) + bytes(((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1))
    raise InputError("graph too large for graph6")


def emit_graph6(g: Graph) -> str:
    out = bytearray(_g6_encode_n(g.n))
    bit_acc = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            bit_acc = bit_acc << 1 | (1 if g.has_edge(u, v) else 0)
            nbits += 1
            if nbits == 6:
                out.append(bit_acc + 63)
                bit_acc = 0
                nbits = 0
    if nbits:
        out.append((bit_acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string", offset=0)
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise FormatError("graph6 must be ASCII", offset=0) from exc
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise FormatError(f"invalid graph6 byte {byte}", offset=i)
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise FormatError("truncated graph6 vertex count", offset=len(data))
            n = 0
            for byte in data[2:8]:
                n = n << 6 | (byte - 63)
            pos = 8
        else:
            if len(data) < 4:
                raise FormatError("truncated graph6 vertex count", offset=len(data))
            n = 0
            for byte in data[1:4]:
                n = n << 6 | (byte - 63)
            pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise FormatError(
            f"truncated graph6 bit vector (need {nbytes} bytes, have {len(data) - pos})",
            offset=len(data),
        )
    if len(data) - pos > nbytes:
        raise FormatError("trailing bytes after graph6 bit vector", offset=pos + nbytes)
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = data[pos + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, tuple(rows))


# -- edge-list text format ---------------------------------------------------


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise FormatError("edge list needs an 'n m' header")
    try:
        n, m = int(tokens[0]), int(tokens[1])
        pairs = [int(t) for t in tokens[2:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from exc
    if len(pairs) != 2 * m:
        raise FormatError(f"expected {m} edges, found {len(pairs) // 2}")
    edges = [(pairs[2 * i], pairs[2 * i + 1]) for i in range(m)]
    try:
        return Graph.from_edges(n, edges)
    except InputError as exc:
        raise FormatError(str(exc)) from exc


def emit_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- seeded sampling ---------------------------------------------------------


class GraphSampler:
    """Deterministic rejection sampler over G(n, p).

    Iterating yields graphs satisfying ``predicate``; ``attempts`` and
    ``yielded`` expose the accept ratio. Raises ExhaustionError when the
    attempt budget runs out before the next accept.
    """

    def __init__(
        self,
        n: int,
        p: float,
        seed: int,
        predicate: Callable[[Graph], bool] | None = None,
        limit: int | None = None,
        max_attempts: int = 100_000,
    ):
        if not 0.0 <= p <= 1.0:
            raise InputError("edge probability must lie in [0, 1]")
        self.n = n
        self.p = p
        self.seed = seed
        self.predicate = predicate
        self.limit = limit
        self.max_attempts = max_attempts
        self.attempts = 0
        self.yielded = 0
        self._rng = random.Random(seed)

    def _draw(self) -> Graph:
        rows = [0] * self.n
        rnd = self._rng.random
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if rnd() < self.p:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def __iter__(self) -> Iterator[Graph]:
        while self.limit is None or self.yielded < self.limit:
            accepted = None
            while accepted is None:
                if self.attempts >= self.max_attempts:
                    raise ExhaustionError(
                        f"no graph satisfying the predicate within {self.max_attempts} attempts",
                        attempts=self.attempts,
                        yielded=self.yielded,
                    )
                self.attempts += 1
                g = self._draw()
                if self.predicate is None or self.predicate(g):
                    accepted = g
            self.yielded += 1
            yield accepted


def sample_graphs(
    n: int,
    p: float,
    seed: int,
    predicate: Callable[[Graph], bool] | None = None,
    limit: int | None = None,
    max_attempts: int = 100_000,
) -> GraphSampler:
    return GraphSampler(n, p, seed, predicate, limit, max_attempts)
