"""Floating-point evaluation of the Hilbert map and sampled verification.

Nothing here defines truth: the generators and stratification are exact
integer data.  These routines corroborate them numerically -- rotation
invariance, homogeneity, orbit separation, and the closed-form image
relation for two weighted coordinates -- with explicit seeds so every run
reproduces.
"""

from __future__ import annotations

import cmath
import math
from random import Random
from typing import Sequence

from .action import ActionSpec
from .errors import IndexOutOfRange, LengthMismatch, NotCoprime
from .invariants import (
    PART_IM,
    InvariantGenerator,
    hilbert_basis,
    realize_generators,
)

OrbitPoint = tuple[complex, ...]


def rotate(spec: ActionSpec, theta: float, p: Sequence[complex]) -> OrbitPoint:
    """Apply the circle element of angle theta: z_j -> e^(i alpha_j theta) z_j."""
    if len(p) != spec.m:
        raise LengthMismatch(f"point has {len(p)} coordinates, action has {spec.m}")
    return tuple(
        cmath.exp(1j * a * theta) * complex(z) for a, z in zip(spec.weights, p)
    )


def evaluate_hilbert_map(
    generators: Sequence[InvariantGenerator], p: Sequence[complex]
) -> tuple[float, ...]:
    """Evaluate each generator at the point, in list order.

    Per-coordinate power tables keep repeated monomial evaluation cheap;
    exponents are small (bounded by the largest weight).
    """
    point = tuple(complex(z) for z in p)
    m = len(point)
    for g in generators:
        if g.exponents.m != m:
            raise LengthMismatch(
                f"generator expects {g.exponents.m} coordinates, point has {m}"
            )
    if not generators:
        return ()

    max_holo = [0] * m
    max_anti = [0] * m
    for g in generators:
        for j in range(m):
            max_holo[j] = max(max_holo[j], g.exponents.holomorphic[j])
            max_anti[j] = max(max_anti[j], g.exponents.antiholomorphic[j])
    holo_pow = [_powers(z, top) for z, top in zip(point, max_holo)]
    anti_pow = [_powers(z.conjugate(), top) for z, top in zip(point, max_anti)]

    values = []
    for g in generators:
        w = 1 + 0j
        for j in range(m):
            k = g.exponents.holomorphic[j]
            if k:
                w *= holo_pow[j][k]
            kbar = g.exponents.antiholomorphic[j]
            if kbar:
                w *= anti_pow[j][kbar]
        values.append(w.imag if g.part == PART_IM else w.real)
    return tuple(values)


def _powers(z: complex, top: int) -> list[complex]:
    table = [1 + 0j]
    for _ in range(top):
        table.append(table[-1] * z)
    return table


def same_orbit(
    spec: ActionSpec,
    z: Sequence[complex],
    w: Sequence[complex],
    tol: float,
    samples: int = 4096,
    refinements: int = 40,
) -> bool:
    """Whether some rotation carries z onto w, within max-norm tol.

    Minimizes the distance over a uniform angle grid, then halves a bracket
    around the best sample `refinements` times.  A verification aid, not a
    proof: the grid resolves orbit curves of angular frequency up to the
    largest weight comfortably for weights <= 64.
    """
    if len(z) != len(w):
        raise LengthMismatch(f"points have {len(z)} and {len(w)} coordinates")
    zs = tuple(complex(c) for c in z)
    ws = tuple(complex(c) for c in w)
    if len(zs) != spec.m:
        raise LengthMismatch(f"point has {len(zs)} coordinates, action has {spec.m}")
    if spec.m == 0:
        return True

    def dist(theta: float) -> float:
        return max(
            abs(cmath.exp(1j * a * theta) * zc - wc)
            for a, zc, wc in zip(spec.weights, zs, ws)
        )

    step = 2 * math.pi / samples
    best_i = min(range(samples), key=lambda i: dist(i * step))
    lo, mid, hi = (best_i - 1) * step, best_i * step, (best_i + 1) * step
    f_mid = dist(mid)
    for _ in range(refinements):
        left, right = (lo + mid) / 2, (mid + hi) / 2
        f_left, f_right = dist(left), dist(right)
        if f_left <= f_mid and f_left <= f_right:
            hi, f_mid = mid, f_left
            mid = left
        elif f_right <= f_mid:
            lo, f_mid = mid, f_right
            mid = right
        else:
            lo, hi = left, right
    return f_mid <= tol


def check_m2_membership(
    alpha1: int, alpha2: int, y: Sequence[float], tol: float = 1e-9
) -> bool:
    """Membership test for the orbit-space image of two weighted coordinates.

    The image in R^4 is cut out by y1 >= 0, y2 >= 0 and
    y3^2 + y4^2 = y1^alpha2 * y2^alpha1; all comparisons are taken within
    tol (the equation relative to 1 + the monomial's magnitude).
    """
    if alpha1 < 1 or alpha2 < 1:
        raise ValueError("weights must be positive")
    if math.gcd(alpha1, alpha2) != 1:
        raise NotCoprime(f"gcd({alpha1}, {alpha2}) != 1")
    if len(y) != 4:
        raise ValueError(f"expected 4 image coordinates, got {len(y)}")
    y1, y2, y3, y4 = (float(v) for v in y)
    if y1 < -tol or y2 < -tol:
        return False
    rhs = y1**alpha2 * y2**alpha1
    scale = 1.0 + abs(y1) ** alpha2 * abs(y2) ** alpha1
    return abs(y3 * y3 + y4 * y4 - rhs) <= tol * scale


def check_axes_image(
    spec: ActionSpec,
    generators: Sequence[InvariantGenerator],
    j: int,
    r: float,
    tol: float = 1e-12,
) -> bool:
    """Check that the j-th coordinate axis maps onto its own image axis.

    Evaluates the map at z_j = r (all other coordinates zero) and requires
    the only nonzero image entry, within tol, to be the |z_j|^2 slot with
    value r^2.  The generator list must put the |z_i|^2 generators first.
    """
    if not 1 <= j <= spec.m:
        raise IndexOutOfRange(f"index {j} outside 1..{spec.m}")
    if r <= 0:
        raise ValueError("r must be positive")
    point = tuple(complex(r) if i == j - 1 else 0j for i in range(spec.m))
    image = evaluate_hilbert_map(generators, point)
    slot = j - 1
    for i, v in enumerate(image):
        if i == slot:
            if abs(v - r * r) > tol * (1 + r * r):
                return False
        elif abs(v) > tol:
            return False
    return True


# ---------------------------------------------------------------------------
# Seeded property checks.  Each returns a report dict suitable for JSON-lines
# output: {"check", "seed", "trials", "failures", "max_err"}.
# ---------------------------------------------------------------------------


def _random_point(rng: Random, m: int) -> OrbitPoint:
    return tuple(
        rng.random() * cmath.exp(1j * rng.uniform(0, 2 * math.pi)) for _ in range(m)
    )


def check_invariance(
    spec: ActionSpec,
    generators: Sequence[InvariantGenerator],
    trials: int = 1000,
    seed: int = 0,
    tol: float = 1e-9,
) -> dict:
    """Image values must not move along orbits."""
    rng = Random(seed)
    failures = 0
    max_err = 0.0
    for _ in range(trials):
        p = _random_point(rng, spec.m)
        theta = rng.uniform(0, 2 * math.pi)
        base = evaluate_hilbert_map(generators, p)
        moved = evaluate_hilbert_map(generators, rotate(spec, theta, p))
        scale = 1.0 + max((abs(v) for v in base), default=0.0)
        err = max(
            (abs(a - b) for a, b in zip(base, moved)), default=0.0
        ) / scale
        max_err = max(max_err, err)
        if err > tol:
            failures += 1
    return {
        "check": "invariance",
        "seed": seed,
        "trials": trials,
        "failures": failures,
        "max_err": max_err,
    }


def check_homogeneity(
    spec: ActionSpec,
    generators: Sequence[InvariantGenerator],
    trials: int = 1000,
    seed: int = 0,
    tol: float = 1e-9,
) -> dict:
    """Each generator scales as t^degree under p -> t*p."""
    rng = Random(seed)
    failures = 0
    max_err = 0.0
    for _ in range(trials):
        p = _random_point(rng, spec.m)
        t = rng.uniform(1e-3, 4.0)
        base = evaluate_hilbert_map(generators, p)
        scaled = evaluate_hilbert_map(generators, tuple(t * z for z in p))
        err = 0.0
        for g, b, s in zip(generators, base, scaled):
            expect = t**g.degree * b
            err = max(err, abs(s - expect) / (1.0 + abs(expect)))
        max_err = max(max_err, err)
        if err > tol:
            failures += 1
    return {
        "check": "homogeneity",
        "seed": seed,
        "trials": trials,
        "failures": failures,
        "max_err": max_err,
    }


def check_separation(
    spec: ActionSpec,
    generators: Sequence[InvariantGenerator],
    trials: int = 200,
    seed: int = 0,
    image_tol: float = 1e-12,
    orbit_tol: float = 1e-6,
) -> dict:
    """Points with (numerically) equal images must lie on one orbit.

    Alternates pairs constructed on a common orbit with independent pairs;
    the implication is only exercised when the images actually coincide.
    """
    rng = Random(seed)
    failures = 0
    max_err = 0.0
    for trial in range(trials):
        z = _random_point(rng, spec.m)
        if trial % 2 == 0:
            w = rotate(spec, rng.uniform(0, 2 * math.pi), z)
        else:
            w = _random_point(rng, spec.m)
        gap = max(
            (
                abs(a - b)
                for a, b in zip(
                    evaluate_hilbert_map(generators, z),
                    evaluate_hilbert_map(generators, w),
                )
            ),
            default=0.0,
        )
        if gap <= image_tol:
            max_err = max(max_err, gap)
            if not same_orbit(spec, z, w, orbit_tol):
                failures += 1
    return {
        "check": "separation",
        "seed": seed,
        "trials": trials,
        "failures": failures,
        "max_err": max_err,
    }


def check_membership(
    spec: ActionSpec,
    generators: Sequence[InvariantGenerator],
    trials: int = 1000,
    seed: int = 0,
    tol: float = 1e-9,
) -> dict:
    """Sampled images satisfy the two-coordinate semi-algebraic relation."""
    if spec.m != 2:
        raise ValueError("membership relation is implemented for m = 2 only")
    rng = Random(seed)
    failures = 0
    max_err = 0.0
    a1, a2 = spec.weights
    for _ in range(trials):
        y = evaluate_hilbert_map(generators, _random_point(rng, 2))
        rhs = y[0] ** a2 * y[1] ** a1
        err = abs(y[2] * y[2] + y[3] * y[3] - rhs) / (1.0 + abs(rhs))
        max_err = max(max_err, err)
        if not check_m2_membership(a1, a2, y, tol):
            failures += 1
    return {
        "check": "membership_m2",
        "seed": seed,
        "trials": trials,
        "failures": failures,
        "max_err": max_err,
    }


def run_property_suite(
    spec: ActionSpec,
    trials: int = 1000,
    seed: int = 0,
    tol: float = 1e-9,
) -> list[dict]:
    """Run every applicable sampled check for one action, one report each."""
    generators = realize_generators(hilbert_basis(spec))
    reports = [
        check_invariance(spec, generators, trials, seed, tol),
        check_homogeneity(spec, generators, trials, seed + 1, tol),
        check_separation(spec, generators, min(trials, 200), seed + 2),
    ]
    if spec.m == 2:
        reports.append(check_membership(spec, generators, trials, seed + 3, tol))
    return reports
