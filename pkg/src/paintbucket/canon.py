"""Canonical position keys and color-preserving isomorphism.

`labeled` keys identify literal labeled positions. `iso` keys identify
color-preserving isomorphism classes: twin vertices (same color, same
neighborhood) are first collapsed into class nodes labeled with their
multiplicity, and the collapsed graph is then canonicalized by iterated
partition refinement with backtracking, keeping the smallest adjacency
code over all discrete refinements. Collapsing is lossless: class
adjacency is all-or-nothing and classes are independent sets, so two
positions are isomorphic exactly when their collapsed graphs match.
"""

from __future__ import annotations

from .core import BipartitePosition, Color

LABELED = "labeled"
ISO = "iso"
MODES = (LABELED, ISO)


def twin_classes(p: BipartitePosition) -> list[tuple[int, ...]]:
    """Classes of same-colored vertices with identical neighborhoods.

    Each class is sorted ascending; the list is ordered black-first,
    then by smallest member. Cached on the position.
    """
    if p._twins is None:
        adj = p.adjacency()
        buckets: dict[tuple[int, frozenset[int]], list[int]] = {}
        for v in p.black:
            buckets.setdefault((0, adj[v]), []).append(v)
        for v in p.white:
            buckets.setdefault((1, adj[v]), []).append(v)
        classes = [tuple(sorted(vs)) for vs in buckets.values()]
        classes.sort(key=lambda c: (0 if c[0] in p.black else 1, c[0]))
        p._twins = classes
    return p._twins


def labeled_key(p: BipartitePosition) -> bytes:
    key = p._keys.get(LABELED)
    if key is None:
        key = repr((sorted(p.black), sorted(p.white), sorted(p.edges))).encode()
        p._keys[LABELED] = key
    return key


def iso_key(p: BipartitePosition) -> bytes:
    key = p._keys.get(ISO)
    if key is None:
        classes = twin_classes(p)
        index = {c[0]: i for i, c in enumerate(classes)}
        labels = [(0 if c[0] in p.black else 1, len(c)) for c in classes]
        adj = p.adjacency()
        # class adjacency is all-or-nothing, so one representative suffices;
        # neighbors map through their own class representative
        rep_of = {}
        for c in classes:
            for v in c:
                rep_of[v] = c[0]
        class_adj = [
            frozenset(index[rep_of[u]] for u in adj[c[0]])
            for c in classes
        ]
        code = _canonical_code(len(classes), labels, class_adj)
        key = b"iso:" + repr(code).encode()
        p._keys[ISO] = key
    return key


def canonical_key(p: BipartitePosition, mode: str = LABELED) -> bytes:
    if mode == LABELED:
        return labeled_key(p)
    if mode == ISO:
        return iso_key(p)
    raise ValueError(f"unknown key mode {mode!r}; expected one of {MODES}")


def _refine(cells: list[list[int]], adj: list[frozenset[int]]) -> list[list[int]]:
    # split cells by the multiset of neighbor cell indices until stable;
    # split order follows signature sort, so it is relabeling-invariant
    while True:
        cell_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig: dict[tuple, list[int]] = {}
            for v in cell:
                counts: dict[int, int] = {}
                for u in adj[v]:
                    ci = cell_of[u]
                    counts[ci] = counts.get(ci, 0) + 1
                sig.setdefault(tuple(sorted(counts.items())), []).append(v)
            if len(sig) > 1:
                changed = True
            for s in sorted(sig):
                new_cells.append(sig[s])
        cells = new_cells
        if not changed:
            return cells


def _encode(order: list[int], labels: list[tuple[int, int]],
            adj: list[frozenset[int]]) -> tuple:
    pos = {v: i for i, v in enumerate(order)}
    rows = tuple(tuple(sorted(pos[u] for u in adj[v])) for v in order)
    return (tuple(labels[v] for v in order), rows)


def _canonical_code(n: int, labels: list[tuple[int, int]],
                    adj: list[frozenset[int]]) -> tuple:
    """Smallest encoding over all refinement-compatible vertex orders."""
    by_label: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        by_label.setdefault(labels[v], []).append(v)
    cells = [by_label[lab] for lab in sorted(by_label)]

    def search(cells: list[list[int]]) -> tuple:
        cells = _refine(cells, adj)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return _encode([c[0] for c in cells], labels, adj)
        best = None
        cell = cells[target]
        for v in cell:
            branched = (cells[:target]
                        + [[v], [u for u in cell if u != v]]
                        + cells[target + 1:])
            code = search(branched)
            if best is None or code < best:
                best = code
        return best

    return search(cells)


def isomorphic(a: BipartitePosition, b: BipartitePosition) -> bool:
    """True iff a color-preserving isomorphism a -> b exists."""
    if len(a.black) != len(b.black) or len(a.white) != len(b.white) \
            or len(a.edges) != len(b.edges):
        return False
    return iso_key(a) == iso_key(b)


def find_isomorphism(a: BipartitePosition, b: BipartitePosition) -> dict[int, int] | None:
    """Backtracking search for an explicit color-preserving isomorphism.

    Exponential worst case; meant for cross-checking canonical keys on
    small positions.
    """
    if len(a.black) != len(b.black) or len(a.white) != len(b.white) \
            or len(a.edges) != len(b.edges):
        return None
    adj_a, adj_b = a.adjacency(), b.adjacency()
    order = sorted(adj_a, key=lambda v: (-len(adj_a[v]), v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def candidates(v: int):
        side = b.black if v in a.black else b.white
        deg = len(adj_a[v])
        for u in sorted(side):
            if u not in used and len(adj_b[u]) == deg:
                yield u

    def compatible(v: int, u: int) -> bool:
        for x, y in mapping.items():
            if (x in adj_a[v]) != (y in adj_b[u]):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for u in candidates(v):
            if compatible(v, u):
                mapping[v] = u
                used.add(u)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(u)
        return False

    return dict(mapping) if extend(0) else None
