"""Signed-measure verification.

A decomposition is a signed list of polyhedral cells; evaluated on a box
it yields the exact rational sum of signed clipped volumes. Verification
compares that against the clipped polytope volume box by box, and the
pointwise identity against the closed indicator point by point, both with
exact equality.

Sampling is deterministic: a splitmix64 stream (constants 0x9E3779B97F4A7C15,
0xBF58476D1CE4E5B9, 0x94D049BB133111EB; shifts 30/27/31) snapped to
rationals with denominator 2^16, mapped affinely into the sampling region.
Identical seeds give identical streams on every platform.

The only floating point in the package lives in `monte_carlo_volume`, an
independent statistical oracle for the exact volume routine.
"""

import time
from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from .clipping import CellClipper, exact_volume
from .decompose import Decomposition, indicator_sum
from .errors import InputError
from .polytope import Box, SimplePolytope, bounding_box
from .rationals import rat_str, vec_str

__all__ = [
    "signed_volume",
    "VerificationReport",
    "verify_pointwise",
    "verify_measure",
    "monte_carlo_volume",
    "sample_points",
    "sample_boxes",
    "SeededStream",
]

MASK64 = (1 << 64) - 1
SNAP_DENOM = 1 << 16


class SeededStream:
    """splitmix64 with rational snapping; the package's only RNG."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_fraction(self) -> mpq:
        """Uniform in (0, 1) with denominator 2^16; never hits 0 or 1."""
        while True:
            u = self.next_u64() >> 48
            if u != 0:
                return mpq(u, SNAP_DENOM)

    def next_point(self, box: Box) -> tuple:
        return tuple(l + (u - l) * self.next_fraction()
                     for l, u in zip(box.lower, box.upper))


def sample_points(region: Box, count: int, seed: int) -> list:
    """Deterministic rational points strictly inside the region."""
    if count < 1:
        raise InputError("count must be >= 1")
    rng = SeededStream(seed)
    return [rng.next_point(region) for _ in range(count)]


def sample_boxes(region: Box, count: int, seed: int) -> list:
    """Deterministic boxes inside the region; zero-width draws resampled."""
    if count < 1:
        raise InputError("count must be >= 1")
    rng = SeededStream(seed)
    out = []
    while len(out) < count:
        p = rng.next_point(region)
        q = rng.next_point(region)
        if any(a == b for a, b in zip(p, q)):
            continue
        out.append(Box.make([min(a, b) for a, b in zip(p, q)],
                            [max(a, b) for a, b in zip(p, q)]))
    return out


def signed_volume(D: Decomposition, box: Box, _clippers=None):
    """Exact sum of sign * volume(cell within box) over the cells."""
    total = mpq(0)
    clippers = _clippers or [CellClipper(c.halfspaces, box.dim) for c in D.cells]
    for cell, clipper in zip(D.cells, clippers):
        total += cell.sign * exact_volume(clipper.clip(box))
    return total


@dataclass
class VerificationReport:
    kind: str  # "pointwise" | "measure"
    samples: int
    seed: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_doc(self) -> dict:
        # elapsed stays out of the document so reports are byte-stable
        return {
            "kind": self.kind,
            "samples": self.samples,
            "seed": self.seed,
            "pass": self.passed,
            "failures": list(self.failures),
        }


def _boundary_probes(P: SimplePolytope) -> list:
    probes = []
    seen = set()
    for v in P.vertices:
        if v not in seen:
            seen.add(v)
            probes.append(v)
    for F in P.faces:
        if F.witness not in seen:
            seen.add(F.witness)
            probes.append(F.witness)
    return probes


def verify_pointwise(P: SimplePolytope, D: Decomposition, n_points: int,
                     seed: int, avoid_facet_spans: bool) -> VerificationReport:
    """Check the signed indicator sum against the closed membership
    indicator at seeded sample points.

    With `avoid_facet_spans` the sampler rejects points on any facet's
    affine span (the identity for polarized vertex cones only holds off
    those); otherwise the polytope's vertices and face witnesses are
    injected as deterministic boundary probes.
    """
    t0 = time.perf_counter()
    region = bounding_box(P, 2)
    rng = SeededStream(seed)
    points = []
    while len(points) < n_points:
        x = rng.next_point(region)
        if avoid_facet_spans and P.on_facet_span(x):
            continue
        points.append(x)
    if not avoid_facet_spans:
        points.extend(_boundary_probes(P))
    report = VerificationReport("pointwise", len(points), seed)
    for x in points:
        expected = 1 if P.contains(x) else 0
        got = indicator_sum(D, x)
        if got != expected:
            report.failures.append(
                {"point": vec_str(x), "expected": expected, "got": got})
    report.elapsed = time.perf_counter() - t0
    return report


def verify_measure(P: SimplePolytope, D: Decomposition, n_boxes: int,
                   seed: int) -> VerificationReport:
    """Check sign-weighted clipped cell volumes against the clipped
    polytope volume on seeded boxes, as exact rational equalities."""
    t0 = time.perf_counter()
    region = bounding_box(P, 2)
    boxes = sample_boxes(region, n_boxes, seed)
    cell_clippers = [CellClipper(c.halfspaces, P.dim) for c in D.cells]
    poly_clipper = CellClipper(P.halfspaces, P.dim)
    report = VerificationReport("measure", len(boxes), seed)
    for box in boxes:
        expected = exact_volume(poly_clipper.clip(box))
        got = signed_volume(D, box, _clippers=cell_clippers)
        if got != expected:
            report.failures.append({
                "box": {"lower": vec_str(box.lower), "upper": vec_str(box.upper)},
                "expected": rat_str(expected),
                "got": rat_str(got),
            })
    report.elapsed = time.perf_counter() - t0
    return report


def monte_carlo_volume(halfspaces, box: Box, samples: int, seed: int):
    """Uniform float sampling in the box; returns (estimate, sigma).

    Statistical oracle only: the binomial standard error `sigma` makes
    "within 3 sigma of the exact volume" a meaningful acceptance check.
    """
    if samples < 1000:
        raise InputError("need at least 1000 samples")
    rng = np.random.default_rng(seed)
    lo = np.array([float(v) for v in box.lower])
    hi = np.array([float(v) for v in box.upper])
    pts = rng.uniform(lo, hi, size=(samples, box.dim))
    inside = np.ones(samples, dtype=bool)
    for h in halfspaces:
        a = np.array([float(x) for x in h.normal])
        inside &= pts @ a <= float(h.offset)
    frac = inside.mean()
    vol = float(box.volume())
    sigma = vol * float(np.sqrt(frac * (1.0 - frac) / samples))
    return frac * vol, sigma
