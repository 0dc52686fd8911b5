"""Breadth-first closure of diagram sets and finite-monoid bookkeeping.

:func:`closure` grows the submonoid (or subsemigroup) generated by a list of
diagrams, recording for every element a shortlex-minimal word over the
generators and the full right Cayley table.  Because elements are interned
by canonical form, arbitrary products can be looked up instead of recomputed,
which the exhaustive law checkers rely on.

Budgets: closures stop with :class:`BudgetExceeded` rather than silently
truncating.  The default budget is generous; callers with tighter limits
pass their own.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import Diagram, identity, multiply

DEFAULT_BUDGET = 2_000_000


class BudgetExceeded(Exception):
    """Raised when a closure or enumeration outgrows its element budget."""

    def __init__(self, budget: int, message: str = ""):
        super().__init__(message or f"budget of {budget} elements exceeded")
        self.budget = budget


class FiniteMonoid:
    """A finite diagram monoid (or semigroup) with interned elements.

    ``elements`` is in discovery order; ``rep_words[k]`` is the
    shortlex-least word over the generator positions evaluating to
    ``elements[k]``.  ``identity_index`` is ``None`` for carriers without an
    identity (e.g. singular subsemigroups).
    """

    def __init__(
        self,
        n: int,
        elements: list[Diagram],
        generators: list[int],
        rep_words: list[tuple[int, ...]],
        right: list[list[int]],
        identity_index: int | None,
        symbols: Sequence[str] | None = None,
    ):
        self.n = n
        self.elements = elements
        self.index = {d: k for k, d in enumerate(elements)}
        self.generators = generators
        self.rep_words = rep_words
        self.right = right
        self.identity_index = identity_index
        self.symbols = tuple(symbols) if symbols is not None else None
        self._left: list[list[int]] | None = None
        self._canonical: list[int] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, d: Diagram) -> bool:
        return d in self.index

    def product(self, i: int, j: int) -> int:
        """Index of ``elements[i] * elements[j]`` via the right table."""
        out = i
        for g in self.rep_words[j]:
            out = self.right[out][g]
        return out

    def left_table(self) -> list[list[int]]:
        """``left[k][g]`` = index of ``generator_g * elements[k]`` (lazy)."""
        if self._left is None:
            gens = [self.elements[k] for k in self.generators]
            self._left = [
                [self.index[multiply(g, x)] for g in gens] for x in self.elements
            ]
        return self._left

    def canonical_order(self) -> list[int]:
        """Element indices sorted by canonical encoding (for witness scans)."""
        if self._canonical is None:
            self._canonical = sorted(
                range(len(self.elements)), key=lambda k: self.elements[k].labels
            )
        return self._canonical

    def word_for(self, d: Diagram) -> tuple[int, ...]:
        """Shortlex word over generator positions evaluating to ``d``."""
        if d not in self.index:
            raise KeyError(f"{d!r} is not in the monoid")
        return self.rep_words[self.index[d]]


def closure(
    n: int,
    generators: Sequence[Diagram],
    *,
    monoid: bool = True,
    budget: int = DEFAULT_BUDGET,
    symbols: Sequence[str] | None = None,
) -> FiniteMonoid:
    """Breadth-first closure of the generators under multiplication.

    With ``monoid=True`` the identity is adjoined as the seed (empty word);
    otherwise only non-empty products are collected and the identity appears
    just if some product equals it.

    >>> from .partitions import transposition
    >>> len(closure(3, [transposition(3, 1), transposition(3, 2)]))
    6
    """
    assert all(g.n == n for g in generators)
    elements: list[Diagram] = []
    index: dict[Diagram, int] = {}
    rep_words: list[tuple[int, ...]] = []
    right: list[list[int]] = []

    def intern(d: Diagram, word: tuple[int, ...]) -> int:
        if d in index:
            return index[d]
        if len(elements) >= budget:
            raise BudgetExceeded(budget)
        index[d] = len(elements)
        elements.append(d)
        rep_words.append(word)
        return index[d]

    if monoid:
        intern(identity(n), ())
    for pos, g in enumerate(generators):
        intern(g, (pos,))

    scan = 0
    while scan < len(elements):
        row = []
        for pos, g in enumerate(generators):
            prod = multiply(elements[scan], g)
            row.append(intern(prod, rep_words[scan] + (pos,)))
        right.append(row)
        scan += 1

    ident = index.get(identity(n))
    return FiniteMonoid(
        n, elements, [index[g] for g in generators], rep_words, right, ident, symbols,
    )


def from_elements(n: int, elements: Iterable[Diagram]) -> FiniteMonoid:
    """Wrap an explicit element set, every element acting as a generator.

    The right table is filled lazily row by row on first use, so wrapping a
    large set is cheap until products are actually needed.
    """
    elems = sorted(set(elements))
    index = {d: k for k, d in enumerate(elems)}
    ident = index.get(identity(n))

    class _LazyRows(list):
        def __getitem__(self, k: int) -> list[int]:
            row = list.__getitem__(self, k)
            if row is None:
                row = [index[multiply(elems[k], g)] for g in elems]
                list.__setitem__(self, k, row)
            return row

    right = _LazyRows([None] * len(elems))
    return FiniteMonoid(
        n,
        elems,
        list(range(len(elems))),
        [(k,) for k in range(len(elems))],
        right,  # type: ignore[arg-type]
        ident,
    )


# -- Green's relations ----------------------------------------------------


@dataclass(frozen=True)
class GreenClasses:
    """Partitions of the element indices under Green's relations."""

    r_class_of: tuple[int, ...]
    l_class_of: tuple[int, ...]
    j_class_of: tuple[int, ...]
    h_class_of: tuple[int, ...]

    def counts(self) -> dict[str, int]:
        return {
            "R": len(set(self.r_class_of)),
            "L": len(set(self.l_class_of)),
            "J": len(set(self.j_class_of)),
            "H": len(set(self.h_class_of)),
        }


def _strongly_connected(size: int, edges: list[list[int]]) -> tuple[int, ...]:
    """Component id per node (iterative Tarjan), ids relabelled by least node."""
    indexes = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    comp = [-1] * size
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(size):
        if indexes[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, ptr = work.pop()
            if ptr == 0:
                indexes[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            targets = edges[node]
            while ptr < len(targets):
                nxt = targets[ptr]
                ptr += 1
                if indexes[nxt] == -1:
                    work.append((node, ptr))
                    work.append((nxt, 0))
                    advanced = True
                    break
                if on_stack[nxt]:
                    low[node] = min(low[node], indexes[nxt])
            if advanced:
                continue
            if low[node] == indexes[node]:
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    comp[member] = ncomp
                    if member == node:
                        break
                ncomp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    # relabel components by their least member so the ids are canonical
    first: dict[int, int] = {}
    out = []
    for node in range(size):
        c = comp[node]
        if c not in first:
            first[c] = len(first)
        out.append(first[c])
    return tuple(out)


def green(m: FiniteMonoid) -> GreenClasses:
    """Green's R, L, J and H classes via Cayley-graph reachability."""
    size = len(m)
    right_edges = [sorted(set(row)) for row in (m.right[k] for k in range(size))]
    left = m.left_table()
    left_edges = [sorted(set(row)) for row in left]
    r_of = _strongly_connected(size, right_edges)
    l_of = _strongly_connected(size, left_edges)
    both = [sorted(set(a) | set(b)) for a, b in zip(right_edges, left_edges)]
    j_of = _strongly_connected(size, both)
    pair_ids: dict[tuple[int, int], int] = {}
    h_of = []
    for k in range(size):
        key = (r_of[k], l_of[k])
        if key not in pair_ids:
            pair_ids[key] = len(pair_ids)
        h_of.append(pair_ids[key])
    return GreenClasses(r_of, l_of, j_of, tuple(h_of))


@dataclass(frozen=True)
class BandReport:
    """Idempotency/commutation flags for a finite monoid."""

    band: bool
    left_regular: bool  # xyx = xy
    right_regular: bool  # xyx = yx
    semilattice: bool
    l_trivial: bool
    r_trivial: bool


def band_type(m: FiniteMonoid) -> BandReport:
    size = len(m)
    band = all(m.product(k, k) == k for k in range(size))
    left_regular = right_regular = commutative = band
    if band:
        for x in range(size):
            for y in range(size):
                xy = m.product(x, y)
                yx = m.product(y, x)
                xyx = m.product(xy, x)
                if xyx != xy:
                    left_regular = False
                if xyx != yx:
                    right_regular = False
                if xy != yx:
                    commutative = False
            if not (left_regular or right_regular or commutative):
                break
    classes = green(m)
    return BandReport(
        band=band,
        left_regular=left_regular,
        right_regular=right_regular,
        semilattice=band and commutative,
        l_trivial=len(set(classes.l_class_of)) == size,
        r_trivial=len(set(classes.r_class_of)) == size,
    )


def units_and_singular(m: FiniteMonoid) -> tuple[list[int], list[int]]:
    """Indices of the invertible elements and of everything else."""
    ident = m.identity_index
    units: list[int] = []
    if ident is not None:
        for x in range(len(m)):
            for y in range(len(m)):
                if m.product(x, y) == ident and m.product(y, x) == ident:
                    units.append(x)
                    break
    unit_set = set(units)
    singular = [x for x in range(len(m)) if x not in unit_set]
    return units, singular


# -- Cayley graph export ---------------------------------------------------


def cayley_json(m: FiniteMonoid, side: str = "right") -> dict:
    """Right or left Cayley graph as a plain JSON-ready dict."""
    assert side in ("right", "left")
    table = [m.right[k] for k in range(len(m))] if side == "right" else m.left_table()
    symbols = list(m.symbols) if m.symbols else [f"g{k}" for k in range(len(m.generators))]
    order = m.canonical_order()
    position = {k: p for p, k in enumerate(order)}
    return {
        "degree": m.n,
        "side": side,
        "size": len(m),
        "generators": symbols,
        "elements": [m.elements[k].text() for k in order],
        "edges": [
            {"from": position[k], "generator": symbols[g], "to": position[table[k][g]]}
            for k in order
            for g in range(len(m.generators))
        ],
    }


def cayley_dot(m: FiniteMonoid, side: str = "right") -> str:
    """The same graph in DOT syntax, deterministically ordered."""
    data = cayley_json(m, side)
    lines = [f"digraph {side}_cayley {{"]
    for k, text in enumerate(data["elements"]):
        lines.append(f'  n{k} [label="{text}"];')
    for edge in data["edges"]:
        lines.append(
            f'  n{edge["from"]} -> n{edge["to"]} [label="{edge["generator"]}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
