"""Monomial invariants of a weighted circle action.

A monomial z^k zbar^kbar is invariant exactly when its rotation weight
sum_j alpha_j * (k_j - kbar_j) vanishes.  The invariant exponent vectors
form an additive monoid; its unique minimal generating set (Hilbert basis)
is computed here, and each basis element is realized as a real-valued
generator: |z_j|^2 for the self-conjugate ones, real and imaginary parts of
one representative for each conjugate pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .action import ActionSpec
from .errors import EmptyAction, LengthMismatch, NotInvariant

PART_ABS2 = "abs2"
PART_RE = "re"
PART_IM = "im"


@dataclass(frozen=True)
class ExponentVector:
    """Exponents (k_1..k_m, kbar_1..kbar_m) of a monomial z^k zbar^kbar."""

    holomorphic: tuple[int, ...]
    antiholomorphic: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "holomorphic", tuple(int(k) for k in self.holomorphic))
        object.__setattr__(
            self, "antiholomorphic", tuple(int(k) for k in self.antiholomorphic)
        )
        if len(self.holomorphic) != len(self.antiholomorphic):
            raise LengthMismatch(
                f"holomorphic has {len(self.holomorphic)} entries, "
                f"antiholomorphic has {len(self.antiholomorphic)}"
            )
        if any(k < 0 for k in self.holomorphic + self.antiholomorphic):
            raise ValueError("exponents must be non-negative")

    @property
    def m(self) -> int:
        return len(self.holomorphic)

    @property
    def degree(self) -> int:
        return sum(self.holomorphic) + sum(self.antiholomorphic)

    def conjugate(self) -> "ExponentVector":
        """Swap holomorphic and antiholomorphic exponents."""
        return ExponentVector(self.antiholomorphic, self.holomorphic)

    def key(self) -> tuple[int, ...]:
        """Concatenated exponent tuple; the canonical sort key."""
        return self.holomorphic + self.antiholomorphic

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        return ExponentVector(
            tuple(a + b for a, b in zip(self.holomorphic, other.holomorphic)),
            tuple(a + b for a, b in zip(self.antiholomorphic, other.antiholomorphic)),
        )

    def dominates(self, other: "ExponentVector") -> bool:
        """Componentwise >=."""
        return all(a >= b for a, b in zip(self.key(), other.key()))

    def is_zero(self) -> bool:
        return not any(self.key())

    def to_json(self) -> dict:
        return {"k": list(self.holomorphic), "kbar": list(self.antiholomorphic)}

    @classmethod
    def from_json(cls, data: dict) -> "ExponentVector":
        return cls(tuple(data["k"]), tuple(data["kbar"]))


def abs2_exponent(m: int, j: int) -> ExponentVector:
    """Exponent vector of |z_j|^2 (1-based j) in m complex coordinates."""
    unit = tuple(1 if i == j - 1 else 0 for i in range(m))
    return ExponentVector(unit, unit)


@dataclass(frozen=True)
class InvariantGenerator:
    """A real-valued generator: |z_j|^2, or Re/Im of one invariant monomial."""

    exponents: ExponentVector
    part: str

    def __post_init__(self):
        if self.part not in (PART_ABS2, PART_RE, PART_IM):
            raise ValueError(f"unknown part {self.part!r}")
        if self.part == PART_ABS2:
            e = self.exponents
            if e.holomorphic != e.antiholomorphic or sorted(e.holomorphic) != [0] * (
                e.m - 1
            ) + [1]:
                raise ValueError(
                    "abs2 generators must be a single |z_j|^2 exponent vector"
                )

    @property
    def degree(self) -> int:
        return self.exponents.degree

    def to_json(self) -> dict:
        data = self.exponents.to_json()
        data["part"] = self.part
        return data

    @classmethod
    def from_json(cls, data: dict) -> "InvariantGenerator":
        return cls(ExponentVector.from_json(data), data["part"])


def _check_length(spec: ActionSpec, e: ExponentVector) -> None:
    if e.m != spec.m:
        raise LengthMismatch(f"exponent vector has {e.m} coordinates, action has {spec.m}")


def circle_weight(spec: ActionSpec, e: ExponentVector) -> int:
    """Rotation weight sum_j alpha_j * (k_j - kbar_j) of the monomial."""
    _check_length(spec, e)
    return sum(
        a * (k - kbar)
        for a, k, kbar in zip(spec.weights, e.holomorphic, e.antiholomorphic)
    )


def is_invariant_exponent(spec: ActionSpec, e: ExponentVector) -> bool:
    """True iff the monomial with these exponents is circle-invariant."""
    return circle_weight(spec, e) == 0


def hilbert_basis(spec: ActionSpec) -> frozenset[ExponentVector]:
    """Minimal additive generating set of the invariant exponent monoid.

    Uses a Contejean-Devie style completion: grow vectors from the unit
    exponents, stepping only in directions whose coefficient opposes the
    current rotation weight, and prune anything that dominates an already
    found minimal element.  Entries of minimal solutions of a single
    homogeneous equation never exceed the largest coefficient on the other
    side (Huet's bound), so growth is additionally capped at max(weights).
    """
    if spec.m == 0:
        raise EmptyAction("no weighted coordinates: the invariant monoid is trivial")
    m = spec.m
    cap = max(spec.weights)
    # Flat layout: positions 0..m-1 hold k, positions m..2m-1 hold kbar.
    coeff = spec.weights + tuple(-a for a in spec.weights)
    dims = 2 * m

    frontier: dict[tuple[int, ...], int] = {}
    for i in range(dims):
        unit = tuple(1 if p == i else 0 for p in range(dims))
        frontier[unit] = coeff[i]

    minimal: list[tuple[int, ...]] = []
    while frontier:
        # Solutions first: equal-degree vectors cannot dominate one another,
        # but next-level candidates must be pruned against all of them.
        for vec, weight in frontier.items():
            if weight == 0:
                minimal.append(vec)
        next_frontier: dict[tuple[int, ...], int] = {}
        for vec, weight in frontier.items():
            if weight == 0:
                continue
            for i in range(dims):
                ci = coeff[i]
                if (weight > 0) == (ci > 0):
                    continue
                if vec[i] >= cap:
                    continue
                grown = vec[:i] + (vec[i] + 1,) + vec[i + 1 :]
                if grown in next_frontier:
                    continue
                if any(
                    all(g >= b for g, b in zip(grown, base)) for base in minimal
                ):
                    continue
                next_frontier[grown] = weight + ci
        frontier = next_frontier

    return frozenset(
        ExponentVector(vec[:m], vec[m:]) for vec in minimal
    )


def realize_generators(basis: frozenset[ExponentVector]) -> list[InvariantGenerator]:
    """Turn a Hilbert basis into an ordered list of real generators.

    The |z_j|^2 generators come first, ordered by j.  Each conjugate pair
    contributes Re and Im of one canonical representative: the member whose
    concatenated exponent tuple is lexicographically larger, which is the
    monomial carrying holomorphic powers on the earlier coordinates.  Pairs
    are listed by increasing degree, ties broken by the representative key.
    """
    if not basis:
        return []
    abs2 = [
        InvariantGenerator(e, PART_ABS2)
        for e in basis
        if e.holomorphic == e.antiholomorphic
    ]
    abs2.sort(key=lambda g: g.exponents.holomorphic.index(1))
    generators: list[InvariantGenerator] = list(abs2)

    paired = {e for e in basis if e.holomorphic != e.antiholomorphic}
    reps = {max(e, e.conjugate(), key=ExponentVector.key) for e in paired}
    for e in sorted(reps, key=lambda e: (e.degree, e.key())):
        generators.append(InvariantGenerator(e, PART_RE))
        generators.append(InvariantGenerator(e, PART_IM))
    return generators


def decompose(
    spec: ActionSpec,
    e: ExponentVector,
    basis: frozenset[ExponentVector],
) -> Counter | None:
    """Write an invariant exponent vector as a sum of basis elements.

    Exhaustive depth-first search, so a None result means no decomposition
    exists.  Returns a Counter mapping basis elements to multiplicities
    (empty for the zero vector).  Raises :class:`NotInvariant` if `e` fails
    the invariance criterion.
    """
    _check_length(spec, e)
    if circle_weight(spec, e) != 0:
        raise NotInvariant(f"rotation weight {circle_weight(spec, e)} != 0")
    for b in basis:
        _check_length(spec, b)

    elems = sorted(basis, key=lambda b: (-b.degree, b.key()))
    flats = [b.key() for b in elems]
    target = e.key()
    dead: set[tuple[tuple[int, ...], int]] = set()

    def search(remaining: tuple[int, ...], start: int) -> list[int] | None:
        if not any(remaining):
            return []
        if (remaining, start) in dead:
            return None
        for idx in range(start, len(flats)):
            b = flats[idx]
            if all(r >= x for r, x in zip(remaining, b)):
                rest = search(
                    tuple(r - x for r, x in zip(remaining, b)), idx
                )
                if rest is not None:
                    return [idx] + rest
        dead.add((remaining, start))
        return None

    chosen = search(target, 0)
    if chosen is None:
        return None
    return Counter(elems[i] for i in chosen)
