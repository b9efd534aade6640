"""Board representations and exact move semantics for Paintbucket.

Three equivalent views of the same game: pixel grids, colored simple
graphs, and the contracted bipartite form where every monochromatic
group is a single vertex and a move merges the chosen vertex with all
of its neighbors. All values are immutable after construction and may
be shared freely across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping


class Color(Enum):
    BLACK = "black"
    WHITE = "white"

    @property
    def opposite(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK

    def __str__(self) -> str:
        return self.value


class BoardError(ValueError):
    """Structurally invalid board, or a query that needs a different state."""


class IllegalMoveError(ValueError):
    """Move not legal in the given position.

    ``ply`` identifies the offending move index when raised by replay().
    """

    def __init__(self, message: str, ply: int | None = None):
        super().__init__(message)
        self.ply = ply


@dataclass(frozen=True)
class GridPosition:
    """Rectangular board of black and white pixels."""

    rows: int
    cols: int
    pixels: tuple[tuple[Color, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise BoardError("grid needs at least one row and one column")
        if len(self.pixels) != self.rows or any(len(r) != self.cols for r in self.pixels):
            raise BoardError("grid rows must all have exactly `cols` pixels")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Color]]) -> "GridPosition":
        pixels = tuple(tuple(r) for r in rows)
        if not pixels or not pixels[0]:
            raise BoardError("grid needs at least one pixel")
        return cls(len(pixels), len(pixels[0]), pixels)

    def color_at(self, row: int, col: int) -> Color:
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise BoardError(f"pixel ({row}, {col}) is out of bounds")
        return self.pixels[row][col]

    def pixel_id(self, row: int, col: int) -> int:
        """Row-major vertex id of a pixel, shared with grid_to_colored_graph."""
        return row * self.cols + col

    def is_monochromatic(self) -> bool:
        first = self.pixels[0][0]
        return all(c is first for row in self.pixels for c in row)


class ColoredGraph:
    """Simple undirected graph with a black/white color per vertex.

    Duplicate edges collapse; self-loops and edges to undeclared
    vertices are rejected.
    """

    __slots__ = ("_colors", "_edges", "_adj")

    def __init__(self, colors: Mapping[int, Color], edges: Iterable[tuple[int, int]]):
        self._colors = dict(colors)
        if not self._colors:
            raise BoardError("graph needs at least one vertex")
        deduped = set()
        for a, b in edges:
            if a == b:
                raise BoardError(f"self-loop at vertex {a}")
            if a not in self._colors or b not in self._colors:
                raise BoardError(f"edge ({a}, {b}) references an undeclared vertex")
            deduped.add((a, b) if a < b else (b, a))
        self._edges = frozenset(deduped)
        self._adj = None

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self._colors))

    @property
    def vertex_count(self) -> int:
        return len(self._colors)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def color(self, v: int) -> Color:
        try:
            return self._colors[v]
        except KeyError:
            raise BoardError(f"unknown vertex {v}") from None

    def colors(self) -> dict[int, Color]:
        return dict(self._colors)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency()[v]

    def adjacency(self) -> dict[int, frozenset[int]]:
        if self._adj is None:
            adj = {v: set() for v in self._colors}
            for a, b in self._edges:
                adj[a].add(b)
                adj[b].add(a)
            self._adj = {v: frozenset(s) for v, s in adj.items()}
        return self._adj

    def recolored(self, new_colors: Mapping[int, Color]) -> "ColoredGraph":
        """Copy with some vertices recolored; the edge set is unchanged."""
        colors = dict(self._colors)
        for v, c in new_colors.items():
            if v not in colors:
                raise BoardError(f"unknown vertex {v}")
            colors[v] = c
        return ColoredGraph(colors, self._edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._colors == other._colors and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((frozenset(self._colors.items()), self._edges))

    def __repr__(self) -> str:
        return f"ColoredGraph({self.vertex_count} vertices, {len(self._edges)} edges)"


def grid_to_colored_graph(g: GridPosition) -> ColoredGraph:
    """One vertex per pixel (row-major ids), edges between 4-neighbors."""
    colors = {}
    edges = []
    for r in range(g.rows):
        for c in range(g.cols):
            v = g.pixel_id(r, c)
            colors[v] = g.pixels[r][c]
            if c + 1 < g.cols:
                edges.append((v, g.pixel_id(r, c + 1)))
            if r + 1 < g.rows:
                edges.append((v, g.pixel_id(r + 1, c)))
    return ColoredGraph(colors, edges)


def groups(g: ColoredGraph) -> list[frozenset[int]]:
    """Partition into maximal monochromatic connected groups.

    Ordered by smallest contained vertex id.
    """
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    adj = g.adjacency()
    for v in g.vertex_ids:
        if v in seen:
            continue
        color = g.color(v)
        comp = {v}
        seen.add(v)
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen and g.color(y) is color:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        out.append(frozenset(comp))
    return out


def group_containing(g: ColoredGraph, v: int) -> frozenset[int]:
    """The monochromatic group that contains vertex v."""
    color = g.color(v)
    comp = {v}
    queue = deque([v])
    adj = g.adjacency()
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in comp and g.color(y) is color:
                comp.add(y)
                queue.append(y)
    return frozenset(comp)


def is_connected(g: ColoredGraph) -> bool:
    ids = g.vertex_ids
    adj = g.adjacency()
    seen = {ids[0]}
    queue = deque([ids[0]])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(ids)


def is_monochromatic(g: ColoredGraph) -> bool:
    first = g.color(g.vertex_ids[0])
    return all(c is first for c in g.colors().values())


def flip_group(g: ColoredGraph, player: Color, target: int) -> ColoredGraph:
    """Move in the colored-graph view: flip the opponent group containing target."""
    if g.color(target) is not player.opposite:
        raise IllegalMoveError(
            f"{player} must pick a {player.opposite}-colored group, "
            f"but vertex {target} is {g.color(target)}"
        )
    group = group_containing(g, target)
    return g.recolored({v: player for v in group})


def flip_pixel_group(g: GridPosition, player: Color, row: int, col: int) -> GridPosition:
    """Move in the grid view: flood-fill the opponent group at (row, col)."""
    if g.color_at(row, col) is not player.opposite:
        raise IllegalMoveError(
            f"{player} must pick a {player.opposite} pixel, "
            f"but ({row}, {col}) is {g.color_at(row, col)}"
        )
    old = player.opposite
    filled = {(row, col)}
    queue = deque([(row, col)])
    while queue:
        r, c = queue.popleft()
        for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if 0 <= rr < g.rows and 0 <= cc < g.cols and (rr, cc) not in filled \
                    and g.pixels[rr][cc] is old:
                filled.add((rr, cc))
                queue.append((rr, cc))
    rows = tuple(
        tuple(player if (r, c) in filled else g.pixels[r][c] for c in range(g.cols))
        for r in range(g.rows)
    )
    return GridPosition(g.rows, g.cols, rows)


@dataclass(frozen=True)
class Move:
    """A ply: `player` fills in the opponent-colored vertex `target`."""

    player: Color
    target: int

    def __str__(self) -> str:
        return f"{self.player}@{self.target}"


class BipartitePosition:
    """Contracted Paintbucket position.

    Black and white vertex sets are disjoint, every edge joins a black
    vertex to a white one, and the graph is connected and nonempty.
    Treat instances as immutable values.
    """

    __slots__ = ("black", "white", "edges", "_adj", "_twins", "_keys", "_hash")

    def __init__(self, black: Iterable[int], white: Iterable[int],
                 edges: Iterable[tuple[int, int]], validate: bool = True):
        self.black = frozenset(black)
        self.white = frozenset(white)
        self.edges = frozenset((a, b) for a, b in edges)
        self._adj = None
        self._twins = None
        self._keys = {}
        self._hash = None
        if validate:
            self._validate()

    def _validate(self):
        if not self.black and not self.white:
            raise BoardError("position needs at least one vertex")
        overlap = self.black & self.white
        if overlap:
            raise BoardError(f"vertices {sorted(overlap)} appear on both sides")
        for b, w in self.edges:
            if b not in self.black or w not in self.white:
                raise BoardError(f"edge ({b}, {w}) must join a black vertex to a white one")
        if not self.connected():
            raise BoardError("Paintbucket is played on a connected board")

    @property
    def vertex_count(self) -> int:
        return len(self.black) + len(self.white)

    def side(self, color: Color) -> frozenset[int]:
        return self.black if color is Color.BLACK else self.white

    def color_of(self, v: int) -> Color:
        if v in self.black:
            return Color.BLACK
        if v in self.white:
            return Color.WHITE
        raise BoardError(f"unknown vertex {v}")

    def single_vertex_color(self) -> Color | None:
        """The color of the sole vertex, or None when the game is still on."""
        if len(self.black) + len(self.white) != 1:
            return None
        return Color.BLACK if self.black else Color.WHITE

    def adjacency(self) -> dict[int, frozenset[int]]:
        if self._adj is None:
            adj = {v: set() for v in self.black}
            for v in self.white:
                adj[v] = set()
            for b, w in self.edges:
                adj[b].add(w)
                adj[w].add(b)
            self._adj = {v: frozenset(s) for v, s in adj.items()}
        return self._adj

    def connected(self) -> bool:
        adj = self.adjacency()
        start = next(iter(adj))
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartitePosition):
            return NotImplemented
        return self.black == other.black and self.white == other.white \
            and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.black, self.white, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return (f"BipartitePosition(black={sorted(self.black)}, "
                f"white={sorted(self.white)}, edges={sorted(self.edges)})")


def legal_moves(p: BipartitePosition, player: Color) -> list[Move]:
    """One move per opponent-colored vertex; empty when the game is over."""
    if p.single_vertex_color() is not None:
        return []
    return [Move(player, t) for t in sorted(p.side(player.opposite))]


def apply_move(p: BipartitePosition, m: Move) -> BipartitePosition:
    """Fill in the target vertex and merge it with all of its neighbors.

    The target keeps its id and switches to the mover's color; the
    merged neighbors' ids are retired.
    """
    if p.single_vertex_color() is not None:
        raise IllegalMoveError("the game is already over")
    if m.target not in p.side(m.player.opposite):
        raise IllegalMoveError(
            f"{m.player} cannot play {m.target}: not a {m.player.opposite} vertex"
        )
    adj = p.adjacency()
    merged = adj[m.target]
    gained = set()
    for v in merged:
        gained |= adj[v]
    gained.discard(m.target)

    t = m.target
    if m.player is Color.BLACK:
        new_black = (p.black - merged) | {t}
        new_white = p.white - {t}
        new_edges = {(b, w) for b, w in p.edges if b not in merged and w != t}
        new_edges.update((t, w) for w in gained)
    else:
        new_white = (p.white - merged) | {t}
        new_black = p.black - {t}
        new_edges = {(b, w) for b, w in p.edges if w not in merged and b != t}
        new_edges.update((b, t) for b in gained)

    child = BipartitePosition(new_black, new_white, new_edges, validate=False)
    assert child.vertex_count == p.vertex_count - len(merged)
    assert child.connected()
    return child


def is_terminal(p: BipartitePosition) -> bool:
    return p.single_vertex_color() is not None


def winner_if_terminal(p: BipartitePosition) -> Color:
    c = p.single_vertex_color()
    if c is None:
        raise BoardError("winner is only defined once a single vertex remains")
    return c


def contract(g: ColoredGraph) -> BipartitePosition:
    """Quotient a connected colored graph by its groups.

    Each group maps to its smallest member id; two contracted vertices
    share an edge exactly when their groups touch in the original graph.
    """
    if not is_connected(g):
        raise BoardError("cannot contract a disconnected board")
    comps = groups(g)
    owner = {}
    black, white = set(), set()
    for comp in comps:
        rep = min(comp)
        for v in comp:
            owner[v] = rep
        (black if g.color(rep) is Color.BLACK else white).add(rep)
    edges = set()
    for a, b in g.edges:
        if g.color(a) is g.color(b):
            continue
        if g.color(a) is Color.BLACK:
            edges.add((owner[a], owner[b]))
        else:
            edges.add((owner[b], owner[a]))
    return BipartitePosition(black, white, edges)


def replay(p: BipartitePosition, moves: Iterable[Move]) -> BipartitePosition:
    """Left fold of apply_move; rejects out-of-turn or illegal plies by index."""
    pos = p
    prev: Color | None = None
    for i, m in enumerate(moves):
        if prev is not None and m.player is prev:
            raise IllegalMoveError(f"ply {i}: {m.player} moved twice in a row", ply=i)
        try:
            pos = apply_move(pos, m)
        except IllegalMoveError as e:
            raise IllegalMoveError(f"ply {i}: {e}", ply=i) from e
        prev = m.player
    return pos
