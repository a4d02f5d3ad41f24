"""Orbit-type stratification of the orbit space of a weighted circle action.

The coordinate subsets of C^m partition it into invariant pieces; each
non-empty subset carries the gcd of its weights as stabilizer order.  Pieces
sharing one stabilizer order fuse into a single stratum of the orbit space,
and closure induces a partial order on strata that turns out to be plain
divisibility of the orders.  The fixed-point image is kept as a
distinguished stratum of infinite order below everything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .action import INFINITE, ActionSpec, gcd_label
from .errors import (
    DistinguishedStratum,
    EmptyAction,
    MalformedDiagram,
    UnknownStratum,
)

DISTINGUISHED_ID = "distinguished"


@dataclass(frozen=True)
class FaceClass:
    """One coordinate subset: its indices, stabilizer order, and codimension
    inside C^m."""

    indices: frozenset[int]
    stabilizer_order: int
    codim: int


@dataclass(frozen=True)
class Stratum:
    id: str
    order: int | float  # INFINITE marks the distinguished stratum
    dim: int
    faces: tuple[frozenset[int], ...] = ()

    @property
    def is_distinguished(self) -> bool:
        return self.order == INFINITE


@dataclass(frozen=True)
class StratificationDiagram:
    """Strata plus the strict closure relation, with JSON and DOT export.

    `closure` holds strict pairs (below, above); the partial order itself is
    the reflexive hull.  The wire format deliberately omits face data so
    that consumers of the JSON see only abstract strata.
    """

    ambient_dim: int
    strata: tuple[Stratum, ...]
    closure: frozenset[tuple[str, str]]
    _by_id: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        by_id = {s.id: s for s in self.strata}
        if len(by_id) != len(self.strata):
            raise MalformedDiagram("duplicate stratum ids")
        for a, b in self.closure:
            if a not in by_id or b not in by_id:
                raise MalformedDiagram(f"closure pair ({a}, {b}) names unknown strata")
        object.__setattr__(self, "_by_id", by_id)

    def stratum(self, stratum_id: str) -> Stratum:
        try:
            return self._by_id[stratum_id]
        except KeyError:
            raise UnknownStratum(f"no stratum with id {stratum_id!r}") from None

    @property
    def finite_strata(self) -> tuple[Stratum, ...]:
        return tuple(s for s in self.strata if not s.is_distinguished)

    @property
    def distinguished(self) -> Stratum | None:
        hits = [s for s in self.strata if s.is_distinguished]
        return hits[0] if len(hits) == 1 else None

    def precedes(self, below: str, above: str) -> bool:
        """The partial order: equality or a strict closure pair."""
        return below == above or (below, above) in self.closure

    def strictly_above(self, stratum_id: str) -> set[str]:
        return {b for a, b in self.closure if a == stratum_id}

    def strictly_below(self, stratum_id: str) -> set[str]:
        return {a for a, b in self.closure if b == stratum_id}

    def maximal_finite(self) -> list[Stratum]:
        finite_ids = {s.id for s in self.finite_strata}
        return [
            s
            for s in self.finite_strata
            if not (self.strictly_above(s.id) & finite_ids)
        ]

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "strata": [
                {
                    "id": s.id,
                    "order": "inf" if s.is_distinguished else s.order,
                    "dim": s.dim,
                }
                for s in self.strata
            ],
            "closure": sorted([a, b] for a, b in self.closure),
        }

    @classmethod
    def from_json(cls, data: dict) -> "StratificationDiagram":
        strata = []
        for entry in data["strata"]:
            order = entry["order"]
            strata.append(
                Stratum(
                    id=str(entry["id"]),
                    order=INFINITE if order == "inf" else int(order),
                    dim=int(entry["dim"]),
                )
            )
        closure = frozenset((str(a), str(b)) for a, b in data.get("closure", []))
        return cls(int(data["ambient_dim"]), tuple(strata), closure)

    def to_dot(self) -> str:
        lines = ["digraph stratification {"]
        for s in self.strata:
            order = "inf" if s.is_distinguished else s.order
            lines.append(f'  "{s.id}" [label="{s.id} (order {order}, dim {s.dim})"];')
        for a, b in sorted(hasse_edges(self)):
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def face_table(spec: ActionSpec) -> list[FaceClass]:
    """All 2^m - 1 coordinate subsets with stabilizer order and codimension.

    Listed by decreasing subset size (codimension 0 first), lexicographic
    within a size, matching the usual tabulation.
    """
    if spec.m == 0:
        raise EmptyAction("no weighted coordinates to tabulate")
    rows = []
    for size in range(spec.m, 0, -1):
        for combo in combinations(range(1, spec.m + 1), size):
            rows.append(
                FaceClass(
                    indices=frozenset(combo),
                    stabilizer_order=gcd_label(spec, combo),
                    codim=2 * (spec.m - size),
                )
            )
    return rows


def orbit_strata(spec: ActionSpec) -> StratificationDiagram:
    """Build the stratification diagram of the orbit space.

    Faces sharing a stabilizer order d form one stratum; its unique maximal
    face is {j : d divides weight_j}, which fixes the stratum dimension.
    The closure order between finite strata is divisibility of orders
    (stratum_d below stratum_e iff e divides d), and the distinguished
    stratum sits below everything.
    """
    faces = face_table(spec)
    groups: dict[int, list[FaceClass]] = {}
    for f in faces:
        groups.setdefault(f.stabilizer_order, []).append(f)

    strata = []
    for d in sorted(groups):
        member_sets = {f.indices for f in groups[d]}
        top_face = frozenset(j for j in range(1, spec.m + 1) if spec.weights[j - 1] % d == 0)
        # gcd arithmetic guarantees a unique maximal face; a violation would
        # mean the grouping rule itself is wrong, so fail hard.
        assert top_face in member_sets, f"maximal face missing for order {d}"
        assert all(f <= top_face for f in member_sets), f"split stratum for order {d}"
        strata.append(
            Stratum(
                id=f"order:{d}",
                order=d,
                dim=spec.trivial_dim + 2 * len(top_face) - 1,
                faces=tuple(
                    sorted(member_sets, key=lambda f: (-len(f), tuple(sorted(f))))
                ),
            )
        )
    strata.append(Stratum(DISTINGUISHED_ID, INFINITE, spec.trivial_dim, ()))

    closure = set()
    orders = sorted(groups)
    for d in orders:
        closure.add((DISTINGUISHED_ID, f"order:{d}"))
        for e in orders:
            if d != e and d % e == 0:
                closure.add((f"order:{d}", f"order:{e}"))
    return StratificationDiagram(spec.n, tuple(strata), frozenset(closure))


def depth(diagram: StratificationDiagram, s: Stratum | str) -> int:
    """Longest strict chain from the stratum up to the top stratum.

    The open dense stratum has depth 0; each step in a chain adds one.
    """
    stratum_id = s.id if isinstance(s, Stratum) else s
    stratum = diagram.stratum(stratum_id)
    if stratum.is_distinguished:
        raise DistinguishedStratum("depth is defined for finite-order strata only")

    tops = diagram.maximal_finite()
    if len(tops) != 1:
        raise MalformedDiagram(f"expected one top stratum, found {len(tops)}")
    top_id = tops[0].id
    finite_ids = {f.id for f in diagram.finite_strata}

    memo: dict[str, int] = {top_id: 0}

    def chase(current: str) -> int:
        if current in memo:
            return memo[current]
        ups = diagram.strictly_above(current) & finite_ids
        heights = [chase(u) for u in ups]
        if not heights:
            raise MalformedDiagram(f"stratum {current!r} has no chain to the top")
        memo[current] = 1 + max(heights)
        return memo[current]

    return chase(stratum_id)


def hasse_edges(diagram: StratificationDiagram) -> set[tuple[str, str]]:
    """Covering pairs (below, above) of the closure order on finite strata."""
    finite_ids = {s.id for s in diagram.finite_strata}
    strict = {
        (a, b) for a, b in diagram.closure if a in finite_ids and b in finite_ids
    }
    return {
        (a, b)
        for a, b in strict
        if not any((a, c) in strict and (c, b) in strict for c in finite_ids)
    }
