"""Partition diagrams: canonical encoding, arithmetic and classification.

A diagram of degree ``n`` is a set partition of the ``2n`` points
``1, ..., n`` (the upper row) and ``1', ..., n'`` (the lower row).  Diagrams
multiply by stacking: the lower row of the left factor is glued to the upper
row of the right factor, connected components are computed, and the middle
row is discarded.

Canonical encoding
------------------
Points are scanned in the order ``1, ..., n, 1', ..., n'`` and blocks are
numbered ``0, 1, 2, ...`` by first occurrence (a restricted-growth
sequence over the ``2n`` points).  Equality, hashing and sorting all work on
that sequence.

Text form
---------
A block is a list of signed vertices -- positive for the upper row, negative
for the lower row -- written with the positives first, both halves
ascending.  Blocks appear in first-occurrence order, e.g.::

    [[1,4],[2,3,-4,-5],[5,6],[-1,-2,-6],[-3]]

Every vertex ``1..n`` and ``-1..-n`` must appear exactly once; the degree is
inferred from the largest absolute vertex.

Structure vocabulary
--------------------
A *transversal* is a block meeting both rows; its upper part contributes to
the domain and kernel, its lower part to the codomain and cokernel.  The
*rank* is the number of transversals.  Diagrams whose domain is the whole
upper row ("full domain") form a submonoid, as do the planar diagrams --
those drawable inside the rectangle without crossings, which is equivalent
to the block sequence being non-crossing in the boundary order
``1, ..., n, n', ..., 1'``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .equivalences import (
    Equivalence,
    _parse_nested_ints,
    all_equivalences,
    cap_kernel,
    noncrossing,
    restricted_growth_sequences,
    unnested_classes,
)


def _normalize(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[object, int] = {}
    out = []
    for value in labels:
        if value not in seen:
            seen[value] = len(seen)
        out.append(seen[value])
    return tuple(out)


class Diagram:
    """A partition diagram of degree ``n`` in canonical form.

    ``labels[k]`` is the block index of upper point ``k + 1`` for ``k < n``
    and of lower point ``(k - n + 1)'`` for ``k >= n``.
    """

    __slots__ = ("n", "labels")

    def __init__(self, n: int, labels: Sequence[object]):
        assert n >= 0 and len(labels) == 2 * n
        self.n = n
        self.labels = _normalize(labels)

    # -- construction ----------------------------------------------------

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Diagram":
        labels: list[int] = [-1] * (2 * n)
        for block_id, block in enumerate(blocks):
            for vertex in block:
                if vertex == 0 or not -n <= vertex <= n:
                    raise ValueError(f"vertex {vertex} out of range for degree {n}")
                pos = vertex - 1 if vertex > 0 else n - vertex - 1
                if labels[pos] != -1:
                    raise ValueError(f"vertex {vertex} appears twice")
                labels[pos] = block_id
        if -1 in labels:
            pos = labels.index(-1)
            vertex = pos + 1 if pos < n else -(pos - n + 1)
            raise ValueError(f"vertex {vertex} is missing")
        return cls(n, labels)

    @classmethod
    def from_text(cls, text: str) -> "Diagram":
        """Parse the signed block list, inferring the degree.

        >>> Diagram.from_text("[[1,2,-1],[-2]]").labels
        (0, 0, 0, 1)
        """
        blocks = _parse_nested_ints(text)
        n = max((abs(v) for block in blocks for v in block), default=0)
        return cls.from_blocks(n, blocks)

    # -- canonical views -------------------------------------------------

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Signed blocks in canonical order.

        >>> identity(2).blocks()
        ((1, -1), (2, -2))
        """
        count = 1 + max(self.labels, default=-1)
        upper: list[list[int]] = [[] for _ in range(count)]
        lower: list[list[int]] = [[] for _ in range(count)]
        for pos, label in enumerate(self.labels):
            if pos < self.n:
                upper[label].append(pos + 1)
            else:
                lower[label].append(-(pos - self.n + 1))
        return tuple(
            tuple(upper[b]) + tuple(lower[b]) for b in range(count)
        )

    def text(self) -> str:
        return "[%s]" % ",".join(
            "[%s]" % ",".join(str(v) for v in block) for block in self.blocks()
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Diagram)
            and self.n == other.n
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.labels))

    def __lt__(self, other: "Diagram") -> bool:
        return (self.n, self.labels) < (other.n, other.labels)

    def __repr__(self) -> str:
        return f"Diagram.from_text({self.text()!r})"

    def __mul__(self, other: "Diagram") -> "Diagram":
        return multiply(self, other)

    # -- structure -------------------------------------------------------

    def is_planar(self) -> bool:
        """Non-crossing in the boundary order ``1, ..., n, n', ..., 1'``.

        >>> Diagram.from_text("[[1,-2],[2,-1]]").is_planar()
        False
        >>> Diagram.from_text("[[1,2,-1,-2]]").is_planar()
        True
        """
        boundary = self.labels[: self.n] + self.labels[: self.n - 1 : -1]
        return noncrossing(boundary)

    def structure(self) -> "Structure":
        n = self.n
        count = 1 + max(self.labels, default=-1)
        upper: list[list[int]] = [[] for _ in range(count)]
        lower: list[list[int]] = [[] for _ in range(count)]
        for pos, label in enumerate(self.labels):
            (upper if pos < n else lower)[label].append(
                pos + 1 if pos < n else pos - n + 1
            )
        transversals = []
        upper_blocks = []
        lower_blocks = []
        for b in range(count):
            if upper[b] and lower[b]:
                transversals.append((tuple(upper[b]), tuple(lower[b])))
            elif upper[b]:
                upper_blocks.append(tuple(upper[b]))
            else:
                lower_blocks.append(tuple(lower[b]))
        transversals.sort()
        upper_blocks.sort()
        lower_blocks.sort()
        dom = tuple(sorted(x for up, _ in transversals for x in up))
        codom = tuple(sorted(y for _, lo in transversals for y in lo))
        return Structure(
            transversals=tuple(transversals),
            upper_blocks=tuple(upper_blocks),
            lower_blocks=tuple(lower_blocks),
            rank=len(transversals),
            dom=dom,
            codom=codom,
        )

    def ker(self) -> Equivalence:
        """Restriction to the upper row."""
        return Equivalence(self.n, self.labels[: self.n])

    def coker(self) -> Equivalence:
        """Restriction to the lower row."""
        return Equivalence(self.n, self.labels[self.n :])

    def rank(self) -> int:
        return self.structure().rank

    def classify(self) -> "Membership":
        n = self.n
        st = self.structure()
        full_domain = len(st.dom) == n
        block_bijection = not st.upper_blocks and not st.lower_blocks
        projection = self.labels[:n] == self.labels[n:]
        planar = self.is_planar()
        transformation = full_domain and all(
            len(lo) == 1 for _, lo in st.transversals
        ) and all(len(block) == 1 for block in st.lower_blocks)
        order_preserving = False
        if transformation:
            images = self.to_transformation()
            order_preserving = all(
                images[k] <= images[k + 1] for k in range(n - 1)
            )
        cap_member = (
            planar
            and full_domain
            and all(
                up[0] == lo[0] and up[-1] == lo[-1]
                for up, lo in st.transversals
            )
        )
        return Membership(
            permutation=st.rank == n,
            transformation=transformation,
            order_preserving=order_preserving,
            partial_injection=all(
                len(up) == 1 and len(lo) == 1 for up, lo in st.transversals
            )
            and all(len(b) == 1 for b in st.upper_blocks)
            and all(len(b) == 1 for b in st.lower_blocks),
            block_bijection=block_bijection,
            uniform_block_bijection=block_bijection
            and all(len(up) == len(lo) for up, lo in st.transversals),
            projection=projection,
            full_domain=full_domain,
            planar=planar,
            planar_full_domain=planar and full_domain,
            cap=cap_member,
        )

    def to_transformation(self) -> tuple[int, ...]:
        """The map ``x -> y`` with ``y'`` in the block of ``x``.

        Defined exactly for the diagrams whose ``classify().transformation``
        flag is set; these compose the same way the diagrams multiply.
        """
        n = self.n
        image_of_label: dict[int, int] = {}
        for pos in range(n, 2 * n):
            image_of_label.setdefault(self.labels[pos], pos - n + 1)
        images = []
        for x in range(n):
            label = self.labels[x]
            if label not in image_of_label:
                raise ValueError("diagram is not a transformation")
            images.append(image_of_label[label])
        result = tuple(images)
        if from_transformation(result) != self:
            raise ValueError("diagram is not a transformation")
        return result


@dataclass(frozen=True)
class Structure:
    """Blocks of a diagram sorted into transversal and one-row parts."""

    transversals: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    upper_blocks: tuple[tuple[int, ...], ...]
    lower_blocks: tuple[tuple[int, ...], ...]
    rank: int
    dom: tuple[int, ...]
    codom: tuple[int, ...]


@dataclass(frozen=True)
class Membership:
    """Submonoid membership flags for a single diagram."""

    permutation: bool
    transformation: bool
    order_preserving: bool
    partial_injection: bool
    block_bijection: bool
    uniform_block_bijection: bool
    projection: bool
    full_domain: bool
    planar: bool
    planar_full_domain: bool
    cap: bool


def multiply(a: Diagram, b: Diagram) -> Diagram:
    """Stack ``a`` on top of ``b`` and contract the middle row.

    >>> t = collapse(2, 1, 2)   # 2 -> 1
    >>> s = transposition(2, 1)
    >>> multiply(t, s).text()
    '[[1,2,-2],[-1]]'
    """
    assert a.n == b.n, "degrees must match"
    n = a.n
    parent = list(range(3 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # a's points occupy nodes 0..2n-1, b's occupy nodes n..3n-1: a's lower
    # row and b's upper row share the middle band n..2n-1.
    for labels, shift in ((a.labels, 0), (b.labels, n)):
        seen: dict[int, int] = {}
        for pos, label in enumerate(labels):
            node = pos + shift
            if label in seen:
                root = find(seen[label])
                parent[find(node)] = root
            else:
                seen[label] = node
    result = [find(x) for x in range(n)]
    result += [find(x) for x in range(2 * n, 3 * n)]
    return Diagram(n, result)


def identity(n: int) -> Diagram:
    """Blocks ``{x, x'}`` for every point."""
    return Diagram(n, tuple(range(n)) * 2)


def from_transformation(images: Sequence[int]) -> Diagram:
    """Diagram of the map ``x -> images[x-1]``.

    Each block joins a fibre of the map to the dash of its image; values
    missed by the map sit in lower singletons.

    >>> from_transformation([1, 1, 3]).text()
    '[[1,2,-1],[3,-3],[-2]]'
    """
    n = len(images)
    assert all(1 <= y <= n for y in images)
    labels: list[object] = [("img", y) for y in images]
    hit = set(images)
    labels += [("img", y) if y in hit else ("miss", y) for y in range(1, n + 1)]
    return Diagram(n, labels)


def transposition(n: int, i: int) -> Diagram:
    """The adjacent swap ``i <-> i+1``."""
    assert 1 <= i < n
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return from_transformation(images)


def collapse(n: int, i: int, j: int) -> Diagram:
    """The map sending ``j`` onto ``i`` and fixing everything else.

    Its diagram has the block ``{i, j, i'}`` and the singleton ``{j'}``.
    """
    assert 1 <= i <= n and 1 <= j <= n and i != j
    images = list(range(1, n + 1))
    images[j - 1] = i
    return from_transformation(images)


def embed(eq: Equivalence) -> Diagram:
    """The diagram with blocks ``B (union) B'`` for each class ``B``.

    These are exactly the projections: ``embed(d.ker())`` is the domain
    projection of ``d``.

    >>> from .equivalences import atom
    >>> embed(atom(3, 1, 2)).text()
    '[[1,2,-1,-2],[3,-3]]'
    """
    return Diagram(eq.n, eq.labels + eq.labels)


def merge(n: int, i: int, j: int) -> Diagram:
    """The projection joining ``i`` and ``j`` on both rows."""
    from .equivalences import atom

    return embed(atom(n, i, j))


def cap(eq: Equivalence) -> Diagram:
    """The cap of a planar relation.

    Each unnested class ``B`` is capped by the transversal
    ``[min B, max B] (union) B'``; nested classes stay as lower blocks.  The
    result is an idempotent with cokernel ``eq`` and kernel
    :func:`diagcalc.equivalences.cap_kernel` applied to ``eq``.

    >>> cap(Equivalence.from_text("[[1,5,6],[2,3],[4],[7,8]]")).text()
    '[[1,2,3,4,5,6,-1,-5,-6],[7,8,-7,-8],[-2,-3],[-4]]'
    """
    assert eq.is_planar(), "only planar relations have caps"
    hull = cap_kernel(eq)
    span_index = {block: idx for idx, block in enumerate(unnested_classes(eq))}
    classes = eq.classes()
    upper: list[object] = [("t", hull.labels[x]) for x in range(eq.n)]
    lower: list[object] = []
    for x in range(eq.n):
        block = classes[eq.labels[x]]
        if block in span_index:
            lower.append(("t", span_index[block]))
        else:
            lower.append(("nested", eq.labels[x]))
    return Diagram(eq.n, upper + lower)


def cap_atom(n: int, i: int, j: int) -> Diagram:
    """Cap of the atom joining ``i`` and ``j``: one long transversal
    ``[i, j] (union) {i', j'}`` over lower singletons, identity elsewhere."""
    from .equivalences import atom

    return cap(atom(n, i, j))


def floor_map(eq: Equivalence) -> Diagram:
    """The order-preserving idempotent sending each class to its minimum.

    Defined for convex relations only.

    >>> floor_map(Equivalence.from_text("[[1,2],[3],[4,5]]")).text()
    '[[1,2,-1],[3,-3],[4,5,-4],[-2],[-5]]'
    """
    assert eq.is_convex(), "floor maps need a convex relation"
    images = [eq.class_of(x)[0] for x in range(1, eq.n + 1)]
    return from_transformation(images)


def domain_projection(d: Diagram) -> Diagram:
    """``D(d)``: the projection with the same kernel as ``d``."""
    return embed(d.ker())


def range_projection(d: Diagram) -> Diagram:
    """``R(d)``: the projection with the same cokernel as ``d``."""
    return embed(d.coker())


def range_cap(d: Diagram) -> Diagram:
    """The cap of the cokernel of ``d`` (cokernel must be planar)."""
    return cap(d.coker())


def all_diagrams(n: int) -> Iterator[Diagram]:
    """All diagrams of degree ``n`` in lexicographic order of the encoding."""
    for labels in restricted_growth_sequences(2 * n):
        yield Diagram(n, labels)


FAMILY_NAMES = (
    "pn", "pnfd", "ppn", "ppnfd", "tn", "sing-tn", "ptn", "on", "sn",
    "en", "fn", "in", "jn", "dn", "pen",
)


def family(name: str, n: int) -> list[Diagram]:
    """The named standard family of degree-``n`` diagrams, sorted.

    ===========  ====================================================
    ``pn``       every diagram
    ``pnfd``     full domain
    ``ppn``      planar
    ``ppnfd``    planar with full domain
    ``tn``       transformations
    ``sing-tn``  non-bijective transformations
    ``ptn``      planar transformations
    ``on``       order-preserving transformations
    ``sn``       permutations
    ``en``       projections (embedded equivalences)
    ``fn``       uniform block bijections
    ``in``       partial injections
    ``jn``       block bijections
    ``dn``       caps of planar equivalences
    ``pen``      embedded convex equivalences
    ===========  ====================================================

    Families defined by a membership flag are produced by filtering all
    diagrams, so they are usable as independent cross-checks against
    anything built from generators.

    >>> [len(family(name, 2)) for name in ("pn", "pnfd", "tn", "dn")]
    [15, 5, 4, 2]
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    points = range(1, n + 1)
    if name == "tn":
        return sorted(from_transformation(images) for images in itertools.product(points, repeat=n))
    if name == "sing-tn":
        return sorted(
            from_transformation(images)
            for images in itertools.product(points, repeat=n)
            if len(set(images)) < n
        )
    if name == "on":
        return sorted(
            from_transformation(images)
            for images in itertools.combinations_with_replacement(points, n)
        )
    if name == "sn":
        return sorted(from_transformation(images) for images in itertools.permutations(points))
    if name == "en":
        return sorted(embed(eq) for eq in all_equivalences(n))
    if name == "dn":
        return sorted(cap(eq) for eq in all_equivalences(n) if eq.is_planar())
    if name == "pen":
        return sorted(embed(eq) for eq in all_equivalences(n) if eq.is_convex())
    flag = {
        "pn": None,
        "pnfd": "full_domain",
        "ppn": "planar",
        "ppnfd": "planar_full_domain",
        "ptn": None,
        "fn": "uniform_block_bijection",
        "in": "partial_injection",
        "jn": "block_bijection",
    }
    if name not in flag:
        raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}")
    out = []
    for d in all_diagrams(n):
        if name == "pn":
            out.append(d)
            continue
        m = d.classify()
        if name == "ptn":
            if m.transformation and m.planar:
                out.append(d)
        elif getattr(m, flag[name]):
            out.append(d)
    return sorted(out)
