"""Exhaustive checkers for the unary-operation laws of diagram monoids.

Every full-domain diagram monoid carries the two projection operations

* ``D(a) = embed(ker(a))`` -- the projection with the kernel of ``a``,
* ``R(a) = embed(coker(a))`` -- the projection with the cokernel of ``a``,

and the planar full-domain monoid additionally carries the cap-valued range
operation ``rho(a) = cap(coker(a))``.  The checkers below test the axiom
systems these operations are supposed to satisfy, by brute force over a
concrete finite carrier, and report the first counterexample in canonical
element order (so reports are independent of how the carrier was built).

The left-congruence machinery at the bottom implements the congruences
``theta_u = {(s, t) : s u = t u}`` used to present quotients by an action,
together with joins and saturation-closures of generating pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .engine import FiniteMonoid, from_elements
from .partitions import (
    Diagram,
    cap,
    cap_atom,
    collapse,
    domain_projection,
    embed,
    family,
    floor_map,
    identity,
    merge,
    multiply,
    range_cap,
    range_projection,
)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one exhaustive law check."""

    name: str
    holds: bool
    witness: tuple[str, ...] | None = None
    counts: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness else None,
            "counts": dict(sorted(self.counts.items())),
        }


class _Products:
    """Memoized ambient multiplication over a fixed element list."""

    def __init__(self, elements: Sequence[Diagram]):
        self.elements = list(elements)
        self._memo: dict[tuple[int, int], Diagram] = {}

    def mul(self, a: Diagram, b: Diagram) -> Diagram:
        return multiply(a, b)

    def mul_idx(self, i: int, j: int) -> Diagram:
        key = (i, j)
        out = self._memo.get(key)
        if out is None:
            out = multiply(self.elements[i], self.elements[j])
            self._memo[key] = out
        return out


def _scan_elements(m: FiniteMonoid) -> list[Diagram]:
    return [m.elements[k] for k in m.canonical_order()]


def _unary_closure(
    name: str, m: FiniteMonoid, op: Callable[[Diagram], Diagram]
) -> CheckReport:
    for a in _scan_elements(m):
        if op(a) not in m:
            return CheckReport(name, False, (a.text(), op(a).text()), {"size": len(m)})
    return CheckReport(name, True, (), {"size": len(m)})


def check_ehresmann(m: FiniteMonoid) -> list[CheckReport]:
    """The projection-operation axioms, one report per axiom.

    Unary axioms are checked over all elements, binary ones over all ordered
    pairs.  The two closure reports say whether ``D`` and ``R`` even map the
    carrier into itself; the equational axioms are evaluated in the ambient
    diagram monoid regardless, so a closure failure does not hide them.
    """
    elems = _scan_elements(m)
    amb = _Products(elems)
    D, R = domain_projection, range_projection
    reports = [
        _unary_closure("closure-D", m, D),
        _unary_closure("closure-R", m, R),
    ]

    unary_axioms: list[tuple[str, Callable[[Diagram], bool]]] = [
        ("E1", lambda a: amb.mul(D(a), a) == a),
        ("E1*", lambda a: amb.mul(a, R(a)) == a),
        ("E5", lambda a: R(D(a)) == D(a)),
        ("E5*", lambda a: D(R(a)) == R(a)),
        ("E6", lambda a: D(D(a)) == D(a)),
        ("E6*", lambda a: R(R(a)) == R(a)),
        ("E7", lambda a: amb.mul(D(a), D(a)) == D(a)),
        ("E7*", lambda a: amb.mul(R(a), R(a)) == R(a)),
    ]
    for name, law in unary_axioms:
        witness: tuple[str, ...] = ()
        for a in elems:
            if not law(a):
                witness = (a.text(),)
                break
        reports.append(CheckReport(name, not witness, witness, {"size": len(m)}))

    def pairs() -> Iterable[tuple[int, int]]:
        for i in range(len(elems)):
            for j in range(len(elems)):
                yield i, j

    binary_axioms: list[tuple[str, Callable[[int, int], bool]]] = [
        ("E2", lambda i, j: amb.mul(D(elems[i]), D(elems[j]))
         == amb.mul(D(elems[j]), D(elems[i]))),
        ("E2*", lambda i, j: amb.mul(R(elems[i]), R(elems[j]))
         == amb.mul(R(elems[j]), R(elems[i]))),
        ("E3", lambda i, j: D(amb.mul_idx(i, j))
         == D(amb.mul(elems[i], D(elems[j])))),
        ("E3*", lambda i, j: R(amb.mul_idx(i, j))
         == R(amb.mul(R(elems[i]), elems[j]))),
        ("E4", lambda i, j: D(amb.mul_idx(i, j))
         == amb.mul(D(elems[i]), D(amb.mul_idx(i, j)))),
        ("E4*", lambda i, j: R(amb.mul_idx(i, j))
         == amb.mul(R(amb.mul_idx(i, j)), R(elems[j]))),
        ("E8", lambda i, j: amb.mul(D(elems[i]), D(elems[j]))
         == D(amb.mul(D(elems[i]), D(elems[j])))),
        ("E8*", lambda i, j: amb.mul(R(elems[i]), R(elems[j]))
         == R(amb.mul(R(elems[i]), R(elems[j])))),
    ]
    for name, law in binary_axioms:
        witness = ()
        for i, j in pairs():
            if not law(i, j):
                witness = (elems[i].text(), elems[j].text())
                break
        reports.append(
            CheckReport(name, not witness, witness, {"size": len(m)})
        )
    return reports


def check_restriction(m: FiniteMonoid, side: str) -> CheckReport:
    """The one-sided restriction law over all ordered pairs.

    ``side="right"`` tests ``R(a) b = b R(ab)``;
    ``side="left"`` tests ``a D(b) = D(ab) a``.
    """
    assert side in ("left", "right")
    order = m.canonical_order()
    size = len(m)
    if side == "right":
        image = [range_projection(d) for d in m.elements]
        name = "right-restriction"
    else:
        image = [domain_projection(d) for d in m.elements]
        name = "left-restriction"
    proj_idx = [m.index.get(p) for p in image]
    if all(k is not None for k in proj_idx):
        # index arithmetic: much faster than diagram products pair by pair
        for i in order:
            for j in order:
                ij = m.product(i, j)
                if side == "right":
                    ok = m.product(proj_idx[i], j) == m.product(j, proj_idx[ij])
                else:
                    ok = m.product(i, proj_idx[j]) == m.product(proj_idx[ij], i)
                if not ok:
                    return CheckReport(
                        name,
                        False,
                        (m.elements[i].text(), m.elements[j].text()),
                        {"size": size},
                    )
        return CheckReport(name, True, (), {"size": size})
    # projections leave the carrier: fall back to ambient products
    elems = _scan_elements(m)
    for a in elems:
        for b in elems:
            ab = multiply(a, b)
            if side == "right":
                ok = multiply(range_projection(a), b) == multiply(b, range_projection(ab))
            else:
                ok = multiply(a, domain_projection(b)) == multiply(domain_projection(ab), a)
            if not ok:
                return CheckReport(name, False, (a.text(), b.text()), {"size": size})
    return CheckReport(name, True, (), {"size": size})


def parts(m: FiniteMonoid) -> list[Diagram]:
    """The projections of the carrier: ``p*p = p = D(p) = R(p)``."""
    out = []
    for p in _scan_elements(m):
        if multiply(p, p) == p and domain_projection(p) == p == range_projection(p):
            out.append(p)
    return out


def projection_split(m: FiniteMonoid) -> dict[str, list[Diagram]]:
    """Split the carrier by triviality of its two projections.

    * ``trivial_range``: elements with ``R(a) = 1`` -- a submonoid;
    * ``proper_kernel``: elements with ``D(a) != 1`` -- a right ideal;
    * ``overlap``: their intersection -- a subsemigroup.

    The three closure claims are re-verified before returning (they are
    theorems for Ehresmann carriers, so a failure here is a bug).
    """
    one = identity(m.n)
    elems = _scan_elements(m)
    trivial_range = [a for a in elems if range_projection(a) == one]
    proper_kernel = [a for a in elems if domain_projection(a) != one]
    kernel_set = set(proper_kernel)
    overlap = [a for a in trivial_range if a in kernel_set]

    range_set = set(trivial_range)
    assert one in range_set
    assert all(multiply(a, b) in range_set
               for a in trivial_range for b in trivial_range)
    assert all(multiply(a, b) in kernel_set
               for a in proper_kernel for b in elems)
    overlap_set = set(overlap)
    assert all(multiply(a, b) in overlap_set for a in overlap for b in overlap)
    return {
        "trivial_range": trivial_range,
        "proper_kernel": proper_kernel,
        "overlap": overlap,
    }


def check_grrac(m: FiniteMonoid) -> list[CheckReport]:
    """Axioms of the cap-valued range operation ``rho(a) = cap(coker(a))``.

    Checked over a planar full-domain carrier; ``closure-rho`` reports
    whether the operation maps the carrier into itself.
    """
    elems = _scan_elements(m)
    amb = _Products(elems)
    rho = range_cap
    reports = [_unary_closure("closure-rho", m, rho)]
    unary: list[tuple[str, Callable[[Diagram], bool]]] = [
        ("G1", lambda a: amb.mul(a, rho(a)) == a),
        ("G2", lambda a: rho(rho(a)) == rho(a)),
        ("G3", lambda a: amb.mul(rho(a), rho(a)) == rho(a)),
    ]
    for name, law in unary:
        witness: tuple[str, ...] = ()
        for a in elems:
            if not law(a):
                witness = (a.text(),)
                break
        reports.append(CheckReport(name, not witness, witness, {"size": len(m)}))
    binary: list[tuple[str, Callable[[Diagram, Diagram], bool]]] = [
        ("G4", lambda a, b: amb.mul(amb.mul(rho(a), rho(b)), rho(a))
         == amb.mul(rho(b), rho(a))),
        ("G5", lambda a, b: rho(amb.mul(rho(a), rho(b))) == amb.mul(rho(a), rho(b))),
        ("G6", lambda a, b: amb.mul(rho(amb.mul(a, b)), rho(b)) == rho(amb.mul(a, b))),
        ("G7", lambda a, b: rho(amb.mul(a, b)) == rho(amb.mul(rho(a), b))),
        ("G8", lambda a, b: amb.mul(rho(a), b) == amb.mul(b, rho(amb.mul(a, b)))),
    ]
    for name, law in binary:
        witness = ()
        for a in elems:
            for b in elems:
                if not law(a, b):
                    witness = (a.text(), b.text())
                    break
            if witness:
                break
        reports.append(CheckReport(name, not witness, witness, {"size": len(m)}))
    return reports


def check_action_pair(
    u_elements: Sequence[Diagram],
    s_elements: Sequence[Diagram],
    name: str = "action-pair",
) -> CheckReport:
    """Is ``(U, S)`` a strong action pair inside the diagram monoid?

    * A1: ``u s`` lies in ``s U`` for every ``u`` in U, ``s`` in S;
    * A2: ``s u = t v`` forces ``u = v`` (products taken ambiently).

    When both hold and every element of U is a projection, the induced
    action is also validated against ``u^s = R(us)``.
    """
    u_sorted = sorted(set(u_elements))
    s_sorted = sorted(set(s_elements))
    counts = {"U": len(u_sorted), "S": len(s_sorted)}

    # A2 first (it is what makes the action well-defined): group the
    # products s*u by value and require a unique u in every fibre.
    fibre_u: dict[Diagram, Diagram] = {}
    su_value: dict[tuple[int, int], Diagram] = {}
    for si, s in enumerate(s_sorted):
        for ui, u in enumerate(u_sorted):
            p = multiply(s, u)
            su_value[(si, ui)] = p
            prev = fibre_u.get(p)
            if prev is None:
                fibre_u[p] = u
            elif prev != u:
                return CheckReport(
                    name + "-A2",
                    False,
                    (s.text(), u.text(), prev.text()),
                    counts,
                )

    # A1: us must equal sv for some v in U.
    products_by_s: list[set[Diagram]] = [
        {su_value[(si, ui)] for ui in range(len(u_sorted))}
        for si in range(len(s_sorted))
    ]
    action: dict[tuple[int, int], Diagram] = {}
    for ui, u in enumerate(u_sorted):
        for si, s in enumerate(s_sorted):
            us = multiply(u, s)
            if us not in products_by_s[si]:
                return CheckReport(name + "-A1", False, (u.text(), s.text()), counts)
            action[(ui, si)] = fibre_u[us]

    holds = True
    witness: tuple[str, ...] = ()
    if all(
        multiply(u, u) == u and domain_projection(u) == u == range_projection(u)
        for u in u_sorted
    ):
        counts["projection_formula_checked"] = 1
        for (ui, si), v in action.items():
            u, s = u_sorted[ui], s_sorted[si]
            if v != range_projection(multiply(u, s)):
                holds = False
                witness = (u.text(), s.text(), v.text())
                break
    return CheckReport(name, holds, witness, counts)


# -- left congruences -------------------------------------------------------


class LeftCongruence:
    """A left congruence on a fixed, canonically sorted carrier."""

    __slots__ = ("carrier", "labels")

    def __init__(self, carrier: Sequence[Diagram], labels: Sequence[int]):
        assert len(carrier) == len(labels)
        self.carrier = tuple(carrier)
        seen: dict[int, int] = {}
        out = []
        for value in labels:
            if value not in seen:
                seen[value] = len(seen)
            out.append(seen[value])
        self.labels = tuple(out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LeftCongruence)
            and self.carrier == other.carrier
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.carrier, self.labels))

    def class_count(self) -> int:
        return 1 + max(self.labels, default=-1)

    def classes(self) -> tuple[tuple[str, ...], ...]:
        out: list[list[str]] = [[] for _ in range(self.class_count())]
        for d, label in zip(self.carrier, self.labels):
            out[label].append(d.text())
        return tuple(tuple(block) for block in out)


def completion(s: FiniteMonoid) -> tuple[Diagram, ...]:
    """The carrier of ``S`` with an identity adjoined when it lacks one."""
    elems = set(s.elements)
    if s.identity_index is None:
        elems.add(identity(s.n))
    return tuple(sorted(elems))


def theta(u: Diagram, s: FiniteMonoid) -> LeftCongruence:
    """The left congruence ``{(x, y) : x u = y u}`` on the completion of S."""
    carrier = completion(s)
    fibres: dict[Diagram, int] = {}
    labels = []
    for x in carrier:
        value = multiply(x, u)
        if value not in fibres:
            fibres[value] = len(fibres)
        labels.append(fibres[value])
    return LeftCongruence(carrier, labels)


def join_left_congruences(a: LeftCongruence, b: LeftCongruence) -> LeftCongruence:
    """Smallest left congruence containing both (their lattice join).

    The transitive closure of the union of two left-compatible equivalences
    is again left-compatible (translate each link of a connecting chain), so
    the join is the plain equivalence join -- no saturation needed.
    """
    assert a.carrier == b.carrier, "joins need a common carrier"
    parent = list(range(len(a.carrier)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for labels in (a.labels, b.labels):
        seen: dict[int, int] = {}
        for pos, label in enumerate(labels):
            if label in seen:
                parent[find(pos)] = find(seen[label])
            else:
                seen[label] = pos
    return LeftCongruence(a.carrier, [find(k) for k in range(len(a.carrier))])


def left_congruence_closure(
    carrier: Sequence[Diagram], pairs: Iterable[tuple[Diagram, Diagram]]
) -> LeftCongruence:
    """Smallest left congruence on the carrier containing the given pairs.

    Saturation: whenever two classes merge, the products ``s*x`` and ``s*y``
    are queued for every carrier element ``s``.  The carrier must be closed
    under multiplication (it normally is a monoid completion).
    """
    carrier = tuple(sorted(set(carrier)))
    index = {d: k for k, d in enumerate(carrier)}
    parent = list(range(len(carrier)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work: list[tuple[int, int]] = []
    for a, b in pairs:
        work.append((index[a], index[b]))
    while work:
        x, y = work.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[max(rx, ry)] = min(rx, ry)
        a, b = carrier[x], carrier[y]
        for s in carrier:
            sa = index[multiply(s, a)]
            sb = index[multiply(s, b)]
            if find(sa) != find(sb):
                work.append((sa, sb))
    return LeftCongruence(carrier, [find(k) for k in range(len(carrier))])


def principal_pair_congruence(
    s: FiniteMonoid, a: Diagram, b: Diagram
) -> LeftCongruence:
    """The left congruence ``(a, b)^l`` generated by one pair on S-completion."""
    return left_congruence_closure(completion(s), [(a, b)])


# ---------------------------------------------------------------------------
# Batteries over the standard families, for the CLI and the acceptance suite.


def action_pair_elements(pair: str, n: int) -> tuple[list[Diagram], list[Diagram]]:
    """Resolve a named pair to its (U, S) element families.

    ``en-tn``       projections acted on by transformations;
    ``en-sing-tn``  projections acted on by non-bijective transformations;
    ``dn-on``       caps acted on by order-preserving transformations;
    ``pen-ptn``     convex projections and planar transformations (a pair
                    that genuinely fails A1, kept for refutation runs).
    """
    selectors = {
        "en-tn": ("en", "tn"),
        "en-sing-tn": ("en", "sing-tn"),
        "dn-on": ("dn", "on"),
        "pen-ptn": ("pen", "ptn"),
    }
    if pair not in selectors:
        raise ValueError(f"unknown action pair {pair!r}; expected one of {', '.join(selectors)}")
    u_name, s_name = selectors[pair]
    return family(u_name, n), family(s_name, n)


def theta_battery(n: int) -> list[CheckReport]:
    """All the left-congruence laws at degree ``n``, exhaustively.

    * ``theta-join``: for projections u, v and S either all transformations
      or the non-bijective ones, ``theta_{uv} = theta_u v theta_v``;
    * ``theta-merge-principal``: the congruence of the join of i and j is
      generated by the single pair (identity, collapse of j onto i);
    * ``theta-cap-principal``: over the order-preserving maps, the
      congruence of a cap is generated by (identity, floor map of its
      kernel);
    * ``theta-cap-join``: that same congruence is the join of the
      congruences of the adjacent caps spanning its kernel.
    """
    reports: list[CheckReport] = []

    en_elements = family("en", n)
    for label in ("tn", "sing-tn"):
        s = from_elements(n, family(label, n))
        thetas = {u: theta(u, s) for u in en_elements}
        holds, witness = True, None
        checked = 0
        for u, v in itertools.product(en_elements, repeat=2):
            checked += 1
            joined = join_left_congruences(thetas[u], thetas[v])
            if theta(multiply(u, v), s) != joined:
                holds, witness = False, (u.text(), v.text())
                break
        reports.append(
            CheckReport(
                f"theta-join:{label}",
                holds,
                witness,
                {"carrier": len(s), "pairs": checked},
            )
        )

    s = from_elements(n, family("tn", n))
    holds, witness = True, None
    for i, j in itertools.combinations(range(1, n + 1), 2):
        generated = principal_pair_congruence(s, identity(n), collapse(n, i, j))
        if theta(merge(n, i, j), s) != generated:
            holds, witness = False, (str(i), str(j))
            break
    reports.append(
        CheckReport("theta-merge-principal", holds, witness, {"carrier": len(s)})
    )

    on = from_elements(n, family("on", n))
    caps = family("dn", n)
    holds, witness = True, None
    join_holds, join_witness = True, None
    for u in caps:
        kernel = u.ker()
        th = theta(u, on)
        if th != principal_pair_congruence(on, identity(n), floor_map(kernel)):
            if holds:
                holds, witness = False, (u.text(),)
        adjacent = [
            theta(cap_atom(n, i, i + 1), on)
            for i in range(1, n)
            if multiply(cap_atom(n, i, i + 1), u) == u
        ]
        if adjacent:
            joined = adjacent[0]
            for other in adjacent[1:]:
                joined = join_left_congruences(joined, other)
            ok = th == joined
        else:
            ok = th.class_count() == len(th.carrier)
        if not ok and join_holds:
            join_holds, join_witness = False, (u.text(),)
    reports.append(
        CheckReport("theta-cap-principal", holds, witness, {"caps": len(caps)})
    )
    reports.append(
        CheckReport("theta-cap-join", join_holds, join_witness, {"caps": len(caps)})
    )
    return reports
