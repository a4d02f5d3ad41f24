"""Normal form of an effective linear circle action and its gcd arithmetic.

A linear circle action on R^n splits, after an equivariant change of
coordinates, into a factor on which the circle acts trivially and m complex
lines rotated at integer speeds (the weights).  Everything downstream keys
off the weights: the stabilizer of a point supported on a coordinate subset
is the cyclic group whose order is the gcd of the weights over that subset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import IndexOutOfRange, NotEffective

INFINITE = math.inf


@dataclass(frozen=True)
class ActionSpec:
    """An effective linear circle action in normal form.

    `trivial_dim` is the dimension of the fixed factor; `weights` are the
    rotation speeds of the m complex coordinates.  Weights must be positive
    with overall gcd 1 (use :func:`canonicalize` to normalize raw input).
    Weight order is immaterial to the geometry; it is preserved here so that
    permutation invariance can be tested, and `canonicalize` sorts.
    """

    trivial_dim: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.trivial_dim < 0:
            raise ValueError(f"trivial_dim must be >= 0, got {self.trivial_dim}")
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be positive integers, got {self.weights}")
        if self.weights and math.gcd(*self.weights) != 1:
            raise NotEffective(
                f"weights {list(self.weights)} have gcd "
                f"{math.gcd(*self.weights)} > 1"
            )

    @property
    def m(self) -> int:
        return len(self.weights)

    @property
    def n(self) -> int:
        return self.trivial_dim + 2 * len(self.weights)

    def to_json(self) -> dict:
        return {"trivial_dim": self.trivial_dim, "weights": list(self.weights)}

    @classmethod
    def from_json(cls, data: dict) -> "ActionSpec":
        return cls(int(data["trivial_dim"]), tuple(data["weights"]))


def canonicalize(raw_weights: Iterable[int], trivial_dim: int = 0) -> ActionSpec:
    """Normalize raw weights into an :class:`ActionSpec`.

    Negative weights are conjugated to their absolute values, zero weights
    are folded into the trivial factor (two real dimensions each), and the
    survivors are sorted ascending.  Raises :class:`NotEffective` if the
    remaining weights share a divisor.
    """
    raw = [int(w) for w in raw_weights]
    folded = trivial_dim + 2 * sum(1 for w in raw if w == 0)
    weights = tuple(sorted(abs(w) for w in raw if w != 0))
    if weights and math.gcd(*weights) != 1:
        raise NotEffective(
            f"weights {list(weights)} have gcd {math.gcd(*weights)} > 1"
        )
    return ActionSpec(folded, weights)


def _checked_indices(spec: ActionSpec, indices: Iterable[int]) -> frozenset[int]:
    idx = frozenset(int(i) for i in indices)
    bad = [i for i in idx if not 1 <= i <= spec.m]
    if bad:
        raise IndexOutOfRange(f"indices {sorted(bad)} outside 1..{spec.m}")
    return idx


def gcd_label(spec: ActionSpec, face: Iterable[int]) -> int:
    """gcd of the weights indexed by `face` (a non-empty subset of 1..m).

    This is the integer label the face carries on the weight simplex, and
    the order of the stabilizer of any point supported exactly there.
    """
    idx = _checked_indices(spec, face)
    if not idx:
        raise ValueError("face must be a non-empty index set")
    return math.gcd(*(spec.weights[i - 1] for i in idx))


def isotropy_order(spec: ActionSpec, support: Iterable[int]) -> int | float:
    """Order of the stabilizer of a point with the given coordinate support.

    Empty support is the origin, fixed by the whole circle: returns
    :data:`INFINITE`.  Otherwise the gcd of the supported weights.
    """
    idx = _checked_indices(spec, support)
    if not idx:
        return INFINITE
    return math.gcd(*(spec.weights[i - 1] for i in idx))
