"""Generator-and-relation descriptions of the diagram monoids.

Each schema instantiates, at a concrete degree ``n``, a finite alphabet of
symbols together with a fully expanded list of defining relations, and a
standard assignment mapping every symbol to the diagram it names.  Words
are tuples of symbols; a relation is a pair of words asserting that both
sides multiply to the same element.

Schema names (all require ``n >= 2``):

========================  =========  ==========================================
name                      kind       presents
========================  =========  ==========================================
``sing-xr``               semigroup  singular full-domain diagrams (joins and
                                     collapses ``e_ij``/``t_ij``)
``full-yq``               monoid     all full-domain diagrams (adjacent swaps
                                     plus one join ``e`` and one collapse ``t``)
``planar-zo``             monoid     planar full-domain diagrams (adjacent
                                     collapses ``f_i``/``g_i`` and joins ``h_i``)
``dn``                    monoid     interval caps ``h_i_j``
``en``                    monoid     joins only (diagonal projections)
``sing-tn``               semigroup  non-bijective transformations
``tn``                    monoid     all transformations
``fn``                    monoid     uniform block bijections
``on``                    monoid     order-preserving transformations
``planar-intermediate``   monoid     planar full-domain diagrams again, over
                                     the mixed alphabet ``f_i``/``g_i``/``h_i_j``
========================  =========  ==========================================

``enumerate_presented`` builds the presented monoid or semigroup exactly by
right-Cayley-graph completion, and ``verify_presentation`` combines it with
soundness and generation checks into a single verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .engine import DEFAULT_BUDGET, BudgetExceeded, closure
from .equivalences import all_equivalences
from .laws import CheckReport
from .partitions import (
    Diagram,
    all_diagrams,
    cap,
    cap_atom,
    collapse,
    from_transformation,
    identity,
    merge,
    multiply,
    range_projection,
    transposition,
)

Word = tuple[str, ...]
Relation = tuple[Word, Word]


def sym_s(i: int) -> str:
    return f"s_{i}"


def sym_f(i: int) -> str:
    return f"f_{i}"


def sym_g(i: int) -> str:
    return f"g_{i}"


def sym_h(i: int) -> str:
    return f"h_{i}"


def sym_e(i: int, j: int) -> str:
    """Join symbol; the pair is unordered, so the name uses (min, max).

    >>> sym_e(3, 1)
    'e_13'
    """
    if i > j:
        i, j = j, i
    return f"e_{i}{j}"


def sym_t(i: int, j: int) -> str:
    """Collapse symbol sending j onto i; the pair is ordered.

    >>> sym_t(3, 1)
    't_31'
    """
    return f"t_{i}{j}"


def sym_cap(i: int, j: int) -> str:
    """Interval-cap symbol for the span [i, j], i < j.

    >>> sym_cap(2, 5)
    'h_2_5'
    """
    assert i < j
    return f"h_{i}_{j}"


@dataclass(frozen=True)
class Presentation:
    """A symbol alphabet with fully expanded defining relations."""

    name: str
    n: int
    kind: str  # "monoid" or "semigroup"
    alphabet: tuple[str, ...]
    relations: tuple[Relation, ...]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "kind": self.kind,
            "alphabet": list(self.alphabet),
            "relations": [[list(lhs), list(rhs)] for lhs, rhs in self.relations],
        }


class _Relations:
    """Accumulates relations, dropping trivial and repeated pairs.

    A pair already present with its sides swapped counts as repeated.
    """

    def __init__(self) -> None:
        self._pairs: dict[Relation, None] = {}

    def add(self, lhs: Iterable[str], rhs: Iterable[str]) -> None:
        lhs, rhs = tuple(lhs), tuple(rhs)
        if lhs == rhs or (rhs, lhs) in self._pairs:
            return
        self._pairs.setdefault((lhs, rhs), None)

    def chain(self, *words: Iterable[str]) -> None:
        ws = [tuple(w) for w in words]
        for a, b in zip(ws, ws[1:]):
            self.add(a, b)

    def extend(self, relations: Iterable[Relation]) -> None:
        for lhs, rhs in relations:
            self.add(lhs, rhs)

    def done(self) -> tuple[Relation, ...]:
        return tuple(self._pairs)


# ---------------------------------------------------------------------------
# Schema builders.  Each returns (kind, [(symbol, image), ...], relations).


def _pair_alphabet(n: int) -> tuple[list[tuple[str, Diagram]], list[tuple[str, Diagram]]]:
    joins = [(sym_e(i, j), merge(n, i, j)) for i, j in itertools.combinations(range(1, n + 1), 2)]
    collapses = [(sym_t(i, j), collapse(n, i, j)) for i, j in itertools.permutations(range(1, n + 1), 2)]
    return joins, collapses


def _join_relations(n: int, rels: _Relations) -> None:
    """Idempotency, commutation, and absorption among the joins e_ij."""
    e = lambda i, j: (sym_e(i, j),)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        rels.add(e(i, j) + e(i, j), e(i, j))
        for k, l in itertools.combinations(range(1, n + 1), 2):
            rels.add(e(i, j) + e(k, l), e(k, l) + e(i, j))
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        rels.add(e(i, j) + e(j, k), e(j, k) + e(k, i))


def _collapse_relations(n: int, rels: _Relations) -> None:
    """Relations among the point collapses t_ij alone."""
    t = lambda i, j: (sym_t(i, j),)
    for i, j in itertools.permutations(range(1, n + 1), 2):
        rels.chain(t(i, j) + t(i, j), t(i, j), t(j, i) + t(i, j))
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        rels.add(t(i, k) + t(j, k), t(i, k))
        rels.chain(t(i, j) + t(i, k), t(i, k) + t(i, j), t(j, k) + t(i, j))
        rels.add(t(k, i) + t(i, j) + t(j, k), t(i, k) + t(k, j) + t(j, i) + t(i, k))
    for i, j, k, l in itertools.permutations(range(1, n + 1), 4):
        rels.add(t(i, j) + t(k, l), t(k, l) + t(i, j))
        rels.add(
            t(k, i) + t(i, j) + t(j, k) + t(k, l),
            t(i, k) + t(k, l) + t(l, i) + t(i, j) + t(j, l),
        )


def _build_sing_xr(n: int):
    joins, collapses = _pair_alphabet(n)
    e = lambda i, j: (sym_e(i, j),)
    t = lambda i, j: (sym_t(i, j),)
    rels = _Relations()
    _collapse_relations(n, rels)
    _join_relations(n, rels)
    for i, j in itertools.permutations(range(1, n + 1), 2):
        rels.add(e(i, j) + t(i, j), t(i, j))
        rels.add(t(i, j) + e(i, j), e(i, j))
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        rels.add(e(j, k) + t(i, j), t(i, j) + e(i, k))
    for i, j, k, l in itertools.permutations(range(1, n + 1), 4):
        rels.add(e(k, l) + t(i, j), t(i, j) + e(k, l))
    return "semigroup", joins + collapses, rels.done()


def _swap_relations(n: int, rels: _Relations) -> None:
    """Coxeter relations for the adjacent swaps s_1 .. s_{n-1}."""
    s = lambda i: (sym_s(i),)
    for i in range(1, n):
        rels.add(s(i) + s(i), ())
    for i, j in itertools.permutations(range(1, n), 2):
        if abs(i - j) > 1:
            rels.add(s(i) + s(j), s(j) + s(i))
        else:
            rels.add(s(i) + s(j) + s(i), s(j) + s(i) + s(j))


def _build_full_yq(n: int):
    pairs = [(sym_s(i), transposition(n, i)) for i in range(1, n)]
    pairs.append(("e", merge(n, 1, 2)))
    pairs.append(("t", collapse(n, 1, 2)))
    s = lambda i: (sym_s(i),)
    e, t = ("e",), ("t",)
    rels = _Relations()
    _swap_relations(n, rels)
    rels.chain(t + t, t, e + t, s(1) + t)
    rels.chain(e + e, e, t + e, s(1) + e, e + s(1))
    for i in range(3, n):
        rels.add(s(i) + t, t + s(i))
        rels.add(s(i) + e, e + s(i))
    if n >= 3:
        rels.add(t + s(1) + s(2) + t, t + s(1) + s(2) + s(1))
        rels.add(t + s(2) + t + s(2), s(2) + t + s(2) + t)
        rels.add(e + s(2) + e + s(2), s(2) + e + s(2) + e)
        rels.add(t + s(2) + e + s(2), s(2) + e + s(2) + t)
    if n >= 4:
        w = s(2) + s(3) + s(1) + s(2)
        rels.add(t + w + t + w, w + t + w + t)
        rels.add(e + w + e + w, w + e + w + e)
        rels.add(t + w + e + w, w + e + w + t)
    return "monoid", pairs, rels.done()


def _adjacent_collapse_relations(n: int, rels: _Relations) -> None:
    """Relations among the adjacent collapses f_i (forward) and g_i (backward)."""
    f = lambda i: (sym_f(i),)
    g = lambda i: (sym_g(i),)
    for x in (f, g):
        for y in (f, g):
            for i in range(1, n):
                rels.add(x(i) + y(i), y(i))
    for fam in (f, g):
        for i, j in itertools.permutations(range(1, n), 2):
            if abs(i - j) > 1:
                rels.add(fam(i) + fam(j), fam(j) + fam(i))
    for i in range(1, n - 1):
        rels.chain(f(i) + f(i + 1) + f(i), f(i + 1) + f(i) + f(i + 1), f(i + 1) + f(i))
        rels.chain(g(i) + g(i + 1) + g(i), g(i + 1) + g(i) + g(i + 1), g(i) + g(i + 1))
    for i in range(1, n):
        for j in range(1, n):
            if j not in (i, i + 1):
                rels.add(f(i) + g(j), g(j) + f(i))
    for i in range(1, n - 1):
        rels.add(f(i) + g(i + 1), f(i))
        rels.add(g(i + 1) + f(i), g(i + 1))


def _build_planar_zo(n: int):
    pairs = [(sym_f(i), collapse(n, i, i + 1)) for i in range(1, n)]
    pairs += [(sym_g(i), collapse(n, i + 1, i)) for i in range(1, n)]
    pairs += [(sym_h(i), merge(n, i, i + 1)) for i in range(1, n)]
    f = lambda i: (sym_f(i),)
    g = lambda i: (sym_g(i),)
    h = lambda i: (sym_h(i),)
    rels = _Relations()
    _adjacent_collapse_relations(n, rels)
    for x in (f, g, h):
        for y in (f, g, h):
            for i in range(1, n):
                rels.add(x(i) + y(i), y(i))
    for i, j in itertools.permutations(range(1, n), 2):
        rels.add(h(i) + h(j), h(j) + h(i))
    for i in range(1, n):
        for j in range(1, n):
            if j not in (i, i - 1):
                rels.add(h(i) + f(j), f(j) + h(i))
            if j not in (i, i + 1):
                rels.add(h(i) + g(j), g(j) + h(i))
    for i in range(1, n - 1):
        rels.add(h(i) + g(i + 1), h(i + 1) + f(i))
    return "monoid", pairs, rels.done()


def _cap_relations(n: int, rels: _Relations) -> None:
    """Absorption, commutation, and overlap relations among interval caps."""
    h = lambda i, j: (sym_cap(i, j),)
    spans = list(itertools.combinations(range(1, n + 1), 2))
    for (i, j), (k, l) in itertools.product(spans, spans):
        if k <= i and j <= l:
            rels.add(h(i, j) + h(k, l), h(k, l))
        elif j <= k:
            rels.add(h(i, j) + h(k, l), h(k, l) + h(i, j))
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        rels.chain(h(i, j) + h(j, k), h(i, k) + h(i, j), h(i, k) + h(j, k))


def _build_dn(n: int):
    pairs = [(sym_cap(i, j), cap_atom(n, i, j)) for i, j in itertools.combinations(range(1, n + 1), 2)]
    rels = _Relations()
    _cap_relations(n, rels)
    return "monoid", pairs, rels.done()


def _build_en(n: int):
    joins, _ = _pair_alphabet(n)
    rels = _Relations()
    _join_relations(n, rels)
    return "monoid", joins, rels.done()


def _build_sing_tn(n: int):
    _, collapses = _pair_alphabet(n)
    rels = _Relations()
    _collapse_relations(n, rels)
    return "semigroup", collapses, rels.done()


def _build_tn(n: int):
    pairs = [(sym_s(i), transposition(n, i)) for i in range(1, n)]
    pairs.append(("t", collapse(n, 1, 2)))
    s = lambda i: (sym_s(i),)
    t = ("t",)
    rels = _Relations()
    _swap_relations(n, rels)
    rels.add(t + t, t)
    rels.add(s(1) + t, t)
    for i in range(3, n):
        rels.add(s(i) + t, t + s(i))
    if n >= 3:
        rels.add(t + s(1) + s(2) + t, t + s(1) + s(2) + s(1))
        rels.add(t + s(2) + t + s(2), s(2) + t + s(2) + t)
        rels.add(t + s(2) + t + s(2), t + s(2) + t)
    if n >= 4:
        w = s(2) + s(3) + s(1) + s(2)
        rels.add(t + w + t + w, w + t + w + t)
    return "monoid", pairs, rels.done()


def _build_fn(n: int):
    pairs = [(sym_s(i), transposition(n, i)) for i in range(1, n)]
    pairs.append(("e", merge(n, 1, 2)))
    s = lambda i: (sym_s(i),)
    e = ("e",)
    rels = _Relations()
    _swap_relations(n, rels)
    rels.add(e + e, e)
    rels.add(s(1) + e, e)
    rels.add(e + s(1), e)
    for i in range(3, n):
        rels.add(s(i) + e, e + s(i))
    if n >= 3:
        rels.add(e + s(2) + e + s(2), s(2) + e + s(2) + e)
    if n >= 4:
        w = s(2) + s(3) + s(1) + s(2)
        rels.add(e + w + e + w, w + e + w + e)
    return "monoid", pairs, rels.done()


def _build_on(n: int):
    pairs = [(sym_f(i), collapse(n, i, i + 1)) for i in range(1, n)]
    pairs += [(sym_g(i), collapse(n, i + 1, i)) for i in range(1, n)]
    rels = _Relations()
    _adjacent_collapse_relations(n, rels)
    return "monoid", pairs, rels.done()


def _build_planar_intermediate(n: int):
    pairs = [(sym_f(i), collapse(n, i, i + 1)) for i in range(1, n)]
    pairs += [(sym_g(i), collapse(n, i + 1, i)) for i in range(1, n)]
    pairs += [(sym_cap(i, j), cap_atom(n, i, j)) for i, j in itertools.combinations(range(1, n + 1), 2)]
    f = lambda i: (sym_f(i),)
    g = lambda i: (sym_g(i),)
    h = lambda i, j: (sym_cap(i, j),)

    def hull(i: int, j: int) -> Word:
        # degenerate spans vanish: the cap over [i, i] is the identity
        return () if i == j else (sym_cap(i, j),)

    rels = _Relations()
    _adjacent_collapse_relations(n, rels)
    _cap_relations(n, rels)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for k in range(1, n):
            if k == i - 1:
                rhs = f(k) + hull(i - 1, j)
            elif k == j - 1:
                rhs = f(k) + hull(i, j - 1)
            else:
                rhs = f(k) + h(i, j)
            rels.add(h(i, j) + f(k), rhs)
            if k == i:
                rhs = g(k) + hull(i + 1, j)
            elif k == j:
                rhs = g(k) + hull(i, j + 1)
            else:
                rhs = g(k) + h(i, j)
            rels.add(h(i, j) + g(k), rhs)
    for i in range(1, n):
        rels.add(f(i) + h(i, i + 1), h(i, i + 1))
    return "monoid", pairs, rels.done()


_BUILDERS: dict[str, Callable] = {
    "sing-xr": _build_sing_xr,
    "full-yq": _build_full_yq,
    "planar-zo": _build_planar_zo,
    "dn": _build_dn,
    "en": _build_en,
    "sing-tn": _build_sing_tn,
    "tn": _build_tn,
    "fn": _build_fn,
    "on": _build_on,
    "planar-intermediate": _build_planar_intermediate,
}

SCHEMA_NAMES = tuple(_BUILDERS)


def _build(name: str, n: int):
    if name not in _BUILDERS:
        raise ValueError(f"unknown schema {name!r}; expected one of {', '.join(SCHEMA_NAMES)}")
    if n < 2:
        raise ValueError(f"schemas are defined for n >= 2, got n={n}")
    return _BUILDERS[name](n)


def schema(name: str, n: int) -> Presentation:
    """The presentation named ``name`` instantiated at degree ``n``.

    >>> p = schema("dn", 3)
    >>> p.alphabet
    ('h_1_2', 'h_1_3', 'h_2_3')
    >>> schema("full-yq", 5).alphabet
    ('s_1', 's_2', 's_3', 's_4', 'e', 't')
    """
    kind, pairs, relations = _build(name, n)
    return Presentation(name, n, kind, tuple(sym for sym, _ in pairs), relations)


def standard_assignment(name: str, n: int) -> dict[str, Diagram]:
    """The generator images for ``schema(name, n)``, keyed by symbol.

    >>> standard_assignment("sing-xr", 3)["t_12"].text()
    '[[1,2,-1],[3,-3],[-2]]'
    >>> standard_assignment("sing-xr", 3)["e_12"].text()
    '[[1,2,-1,-2],[3,-3]]'
    """
    _, pairs, _ = _build(name, n)
    return dict(pairs)


def eval_word(assignment: dict[str, Diagram], word: Iterable[str]) -> Diagram:
    """Left-to-right product of the images of ``word``; empty word → identity.

    >>> asg = standard_assignment("planar-zo", 3)
    >>> eval_word(asg, ["h_1", "g_2"]).text()
    '[[1,2,3,-1,-3],[-2]]'
    """
    degree = next(iter(assignment.values())).n
    out = identity(degree)
    for symbol in word:
        out = multiply(out, assignment[symbol])
    return out


def check_soundness(pres: Presentation, assignment: dict[str, Diagram]) -> CheckReport:
    """Evaluate both sides of every relation; report the first mismatch."""
    checked = 0
    for lhs, rhs in pres.relations:
        checked += 1
        left = eval_word(assignment, lhs)
        right = eval_word(assignment, rhs)
        if left != right:
            witness = (" ".join(lhs) or "1", " ".join(rhs) or "1", left.text(), right.text())
            return CheckReport(
                name=f"soundness:{pres.name}:n={pres.n}",
                holds=False,
                witness=witness,
                counts={"relations": len(pres.relations), "checked": checked},
            )
    return CheckReport(
        name=f"soundness:{pres.name}:n={pres.n}",
        holds=True,
        witness=None,
        counts={"relations": len(pres.relations), "checked": checked},
    )


# ---------------------------------------------------------------------------
# Concrete targets, built independently of the schemas.


def target_elements(name: str, n: int) -> list[Diagram]:
    """The concrete model that ``schema(name, n)`` is supposed to present.

    Built by brute-force filtering, never through the generators, so that
    agreement with the generated closure is an actual check.
    """
    if name not in _BUILDERS:
        raise ValueError(f"unknown schema {name!r}; expected one of {', '.join(SCHEMA_NAMES)}")
    if n < 2:
        raise ValueError(f"schemas are defined for n >= 2, got n={n}")
    points = range(1, n + 1)
    if name == "sing-xr":
        out = [d for d in all_diagrams(n) if d.classify().full_domain and not d.classify().permutation]
    elif name == "full-yq":
        out = [d for d in all_diagrams(n) if d.classify().full_domain]
    elif name in ("planar-zo", "planar-intermediate"):
        out = [d for d in all_diagrams(n) if d.classify().planar_full_domain]
    elif name == "dn":
        out = [cap(eq) for eq in all_equivalences(n) if eq.is_planar()]
    elif name == "en":
        from .partitions import embed

        out = [embed(eq) for eq in all_equivalences(n)]
    elif name == "sing-tn":
        out = [
            from_transformation(images)
            for images in itertools.product(points, repeat=n)
            if len(set(images)) < n
        ]
    elif name == "tn":
        out = [from_transformation(images) for images in itertools.product(points, repeat=n)]
    elif name == "fn":
        out = [d for d in all_diagrams(n) if d.classify().uniform_block_bijection]
    else:  # "on"
        out = [
            from_transformation(images)
            for images in itertools.combinations_with_replacement(points, n)
        ]
    return sorted(out)


# ---------------------------------------------------------------------------
# Exact enumeration of a presented monoid or semigroup.


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of ``enumerate_presented``.

    ``table`` is the right Cayley table of the quotient over the surviving
    nodes, row 0 being the empty-word node.  For a semigroup presentation
    that root node stands outside the semigroup, so ``size`` is one less
    than the number of rows; for a monoid it is the row count.
    """

    status: str  # "completed" or "exhausted"
    size: int | None
    table: tuple[tuple[int, ...], ...] | None
    node_budget_used: int


def enumerate_presented(pres: Presentation, *, budget: int = DEFAULT_BUDGET) -> EnumerationResult:
    """Exactly enumerate the monoid or semigroup presented by ``pres``.

    Completes the right Cayley graph of the quotient: starting from the
    empty-word node, every scanned node first gets all its letter edges
    (allocating fresh nodes), then both sides of every relation are traced
    from it and the endpoints merged.  Merging never separates nodes, so
    every equality established along the way survives to the end; when the
    scan drains without exceeding ``budget`` allocated nodes, the surviving
    table is exactly the presented structure.  On budget exhaustion the
    result carries status ``"exhausted"`` and no size — never a wrong one.
    """
    if pres.kind == "semigroup":
        assert all(lhs and rhs for lhs, rhs in pres.relations), "semigroup relations must have nonempty sides"
    index = {symbol: a for a, symbol in enumerate(pres.alphabet)}
    relations = [
        (tuple(index[x] for x in lhs), tuple(index[x] for x in rhs))
        for lhs, rhs in pres.relations
    ]
    k = len(pres.alphabet)

    parent = [0]
    rows: list[list[int] | None] = [[-1] * k]
    pending: list[tuple[int, int]] = []

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def allocate() -> int:
        if len(parent) >= budget:
            raise BudgetExceeded(budget)
        parent.append(len(parent))
        rows.append([-1] * k)
        return len(parent) - 1

    def settle() -> None:
        # Fold the edge rows of merged nodes together; clashing edges queue
        # further merges.  The smaller index always survives as the root.
        while pending:
            a, b = pending.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            parent[b] = a
            row_b = rows[b]
            rows[b] = None
            row_a = rows[a]
            for letter in range(k):
                y = row_b[letter]
                if y < 0:
                    continue
                if row_a[letter] < 0:
                    row_a[letter] = y
                else:
                    pending.append((row_a[letter], y))

    def trace(start: int, word: tuple[int, ...]) -> int:
        cur = find(start)
        for letter in word:
            row = rows[cur]
            nxt = row[letter]
            if nxt < 0:
                nxt = allocate()
                row[letter] = nxt
            cur = find(nxt)
        return cur

    try:
        scan = 0
        while scan < len(parent):
            if find(scan) != scan:
                scan += 1
                continue
            row = rows[scan]
            for letter in range(k):
                if row[letter] < 0:
                    row[letter] = allocate()
            for lhs, rhs in relations:
                a = trace(scan, lhs)
                b = trace(scan, rhs)
                if a != b:
                    pending.append((a, b))
                    settle()
                if find(scan) != scan:
                    # this node just merged into an earlier one, which has
                    # already traced every relation; move on
                    break
            scan += 1
    except BudgetExceeded:
        return EnumerationResult("exhausted", None, None, len(parent))

    live = [x for x in range(len(parent)) if find(x) == x]
    number = {x: i for i, x in enumerate(live)}
    table = tuple(
        tuple(number[find(rows[x][letter])] for letter in range(k)) for x in live
    )
    size = len(live) if pres.kind == "monoid" else len(live) - 1
    return EnumerationResult("completed", size, table, len(parent))


@dataclass(frozen=True)
class PresentationReport:
    """Verdict of ``verify_presentation``.

    ``status`` is ``"verified"`` when soundness, generation, and the size
    comparison all pass; ``"refuted"`` when any of them fails; and
    ``"exhausted"`` when the node or closure budget ran out first, which is
    inconclusive rather than a failure.
    """

    name: str
    n: int
    status: str
    sound: bool
    witness: tuple[str, ...] | None
    target_size: int
    closure_size: int | None
    enumerated_size: int | None
    node_budget_used: int

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "status": self.status,
            "sound": self.sound,
            "witness": list(self.witness) if self.witness else None,
            "target_size": self.target_size,
            "closure_size": self.closure_size,
            "enumerated_size": self.enumerated_size,
            "node_budget_used": self.node_budget_used,
        }


def verify_presentation(name: str, n: int, *, budget: int = DEFAULT_BUDGET) -> PresentationReport:
    """End-to-end check that ``schema(name, n)`` presents its target.

    Three facts together certify the isomorphism: every relation holds
    under the standard assignment (so evaluation factors through the
    presented structure), the generator images generate exactly the target
    (surjectivity), and the presented structure has the same finite size
    (injectivity).
    """
    pres = schema(name, n)
    assignment = standard_assignment(name, n)
    target = target_elements(name, n)
    target_size = len(target)

    soundness = check_soundness(pres, assignment)
    if not soundness.holds:
        return PresentationReport(
            name, n, "refuted", False, soundness.witness, target_size, None, None, 0
        )

    images = [assignment[symbol] for symbol in pres.alphabet]
    try:
        generated = closure(n, images, monoid=pres.kind == "monoid", budget=budget)
    except BudgetExceeded:
        return PresentationReport(
            name, n, "exhausted", True, None, target_size, None, None, budget
        )
    closure_size = len(generated)
    if closure_size != target_size or set(generated.elements) != set(target):
        return PresentationReport(
            name, n, "refuted", True, None, target_size, closure_size, None, 0
        )

    outcome = enumerate_presented(pres, budget=budget)
    if outcome.status == "exhausted":
        return PresentationReport(
            name, n, "exhausted", True, None, target_size, closure_size, None,
            outcome.node_budget_used,
        )
    status = "verified" if outcome.size == target_size else "refuted"
    return PresentationReport(
        name, n, status, True, None, target_size, closure_size, outcome.size,
        outcome.node_budget_used,
    )


# ---------------------------------------------------------------------------
# Derived words.


def derived_word(kind: str, i: int, j: int, n: int) -> Word:
    """Named words used to move between the presentations.

    ``c``        conjugator bringing {i, j} to {1, 2} (i < j);
    ``epsilon``  conjugated join, evaluating to the join of i and j;
    ``tau``      conjugated collapse, evaluating to the collapse j -> i
                 (either order of i, j is allowed);
    ``alpha``    cap word h_i g_{i+1} .. g_{j-1} (i < j);
    ``beta``     cap word h_{j-1} f_{j-2} .. f_i (i < j).

    >>> derived_word("c", 1, 2, 4)
    ()
    >>> derived_word("epsilon", 1, 2, 4)
    ('e',)
    >>> derived_word("tau", 2, 1, 4)
    ('t', 's_1')
    >>> derived_word("alpha", 1, 3, 4)
    ('h_1', 'g_2')
    >>> derived_word("beta", 1, 3, 4)
    ('h_2', 'f_1')
    """
    lo, hi = min(i, j), max(i, j)
    if not (1 <= lo < hi <= n):
        raise ValueError(f"need distinct indices within 1..{n}, got ({i}, {j})")
    if kind in ("c", "alpha", "beta") and i > j:
        raise ValueError(f"{kind} words require i < j, got ({i}, {j})")
    conj = tuple(sym_s(x) for x in range(2, hi)) + tuple(sym_s(x) for x in range(1, lo))
    back = conj[::-1]
    if kind == "c":
        return conj
    if kind == "epsilon":
        return back + ("e",) + conj
    if kind == "tau":
        middle = ("t",) if i < j else ("t", "s_1")
        return back + middle + conj
    if kind == "alpha":
        return (sym_h(i),) + tuple(sym_g(x) for x in range(i + 1, j))
    if kind == "beta":
        return (sym_h(j - 1),) + tuple(sym_f(x) for x in range(j - 2, i - 1, -1))
    raise ValueError(f"unknown derived word kind {kind!r}")


def hat_morphism(n: int) -> dict[str, Word]:
    """Rewrites each pairwise symbol as a word over the swap alphabet.

    Maps e_ij to its conjugated join and t_ij to its conjugated collapse,
    so that any word over the pairwise alphabet can be replayed through
    ``schema("full-yq", n)``.
    """
    out: dict[str, Word] = {}
    for a, b in itertools.combinations(range(1, n + 1), 2):
        out[sym_e(a, b)] = derived_word("epsilon", a, b, n)
    for a, b in itertools.permutations(range(1, n + 1), 2):
        out[sym_t(a, b)] = derived_word("tau", a, b, n)
    return out


def cap_lift(n: int) -> dict[str, Word]:
    """Rewrites each interval-cap symbol as a word over the planar alphabet."""
    return {
        sym_cap(a, b): derived_word("alpha", a, b, n)
        for a, b in itertools.combinations(range(1, n + 1), 2)
    }


def apply_morphism(word: Iterable[str], mapping: dict[str, Word]) -> Word:
    """Concatenate the images of each letter of ``word`` under ``mapping``."""
    out: list[str] = []
    for symbol in word:
        out.extend(mapping[symbol])
    return tuple(out)


# ---------------------------------------------------------------------------
# Product factorizations.


def factor_product(a: Diagram, mode: str) -> tuple[Diagram, Diagram]:
    """Split ``a`` into a transformation times a fixed right factor.

    ``"tn-en"``: any full-domain diagram factors as b * u where b is the
    transformation sending each transversal's upper part to the least
    member of its lower part and u is the range projection of ``a``.

    ``"on-dn"``: any planar full-domain diagram factors as f * d where d is
    the cap of coker(a) and f is the order-preserving map sending each
    transversal's upper part to the least member of its lower part (which
    is the left end of the matching cap interval).

    The least member is chosen to make the left factor deterministic; any
    member of the lower part would do.

    >>> a = Diagram.from_text("[[1,2,3,4,5,-1],[-2,-5],[-3,-4]]")
    >>> f, d = factor_product(a, "on-dn")
    >>> f.text()
    '[[1,2,3,4,5,-1],[-2],[-3],[-4],[-5]]'
    >>> d.text()
    '[[1,-1],[2,3,4,5,-2,-5],[-3,-4]]'
    >>> multiply(f, d) == a
    True
    """
    flags = a.classify()
    if mode == "tn-en":
        if not flags.full_domain:
            raise ValueError("tn-en factorization needs a full-domain diagram")
        right = range_projection(a)
    elif mode == "on-dn":
        if not flags.planar_full_domain:
            raise ValueError("on-dn factorization needs a planar full-domain diagram")
        right = cap(a.coker())
    else:
        raise ValueError(f"unknown factorization mode {mode!r}")
    images = [0] * a.n
    for upper, lower in a.structure().transversals:
        least = min(lower)
        for x in upper:
            images[x - 1] = least
    left = from_transformation(images)
    return left, right
