"""Certified separation of a box from a finitely generated max-min convex set.

separate_box produces, for disjoint inputs, either a semispace containing
the generated set and missing the box, a hemispace doing the same when no
semispace can, or a non-separability witness: a hull point that is ≥ the
box lower bound everywhere and beats the box upper bound only on sorted
positions up to the box profile threshold t.  Such a point rules out every
semispace at once, which is what check_sep_cond reports.

The pipeline spends at most n+1 containment sweeps over the generators
(oracle_calls in the certificate).  Every returned separator is re-checked
defensively: containment of the set and emptiness against the box.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import ONE, Point, check_same_dim, join, scale_meet
from .convex import Box, GeneratedConvexSet, box_hull_witness
from .errors import DimensionError, InternalError, IntersectionError, ResourceLimitError
from .semispaces import (
    HemispaceDescriptor,
    SemispaceDescriptor,
    hemispace_avoids_box,
    semispace_avoids_box,
    semispace_family,
    set_in_semispace,
)

SEMISPACE = "semispace"
HEMISPACE = "hemispace"
NOT_SEPARABLE = "not-separable"


@dataclass(frozen=True)
class BoxProfile:
    """Upper-bound ordering data of a box.

    upper_perm sorts the upper bounds descending (1-based positions to
    0-based coordinates, ties stable).  t is the greatest position whose
    upper bound dominates every lower bound at positions ≤ t; it exists
    because position 1 qualifies.  l is the smallest position ≤ t carrying
    the largest lower bound among positions ≤ t, and u is the point that
    levels positions ≤ t at that bound and keeps the upper bounds after t;
    its maximum coordinate is exactly lower_l.
    """

    box: Box
    upper_perm: tuple[int, ...]
    t: int
    l: int
    u: Point


@dataclass(frozen=True)
class PartitionStage:
    """One stage of the lower-bound partition: threshold position s,
    member positions (1-based, in lower-sorted order) and level a."""

    s: int
    members: frozenset[int]
    level: Fraction


@dataclass(frozen=True)
class PartitionProfile:
    box: Box
    lower_perm: tuple[int, ...]
    stages: tuple[PartitionStage, ...]


@dataclass(frozen=True)
class TraceEntry:
    """One candidate tried by the pipeline, with the generator that
    escaped it (None when the candidate worked)."""

    stage: int
    candidate: SemispaceDescriptor | HemispaceDescriptor
    witness: Point | None
    iteration: int | None = None
    position: int | None = None


@dataclass(frozen=True)
class SeparationCertificate:
    outcome: str
    separator: SemispaceDescriptor | HemispaceDescriptor | None
    witness: Point | None
    oracle_calls: int
    trace: tuple[TraceEntry, ...]

    @property
    def separated(self) -> bool:
        return self.outcome in (SEMISPACE, HEMISPACE)


def box_profile(B: Box) -> BoxProfile:
    """Sort upper bounds descending and locate the threshold t and level u."""
    n = B.dim
    perm = tuple(sorted(range(n), key=lambda i: (-B.upper[i], i)))
    ups = [B.upper[o] for o in perm]
    lows = [B.lower[o] for o in perm]
    prefix_max = []
    running = None
    for v in lows:
        running = v if running is None else max(running, v)
        prefix_max.append(running)
    t = next(p for p in range(n, 0, -1) if ups[p - 1] >= prefix_max[p - 1])
    peak = prefix_max[t - 1]
    l = next(p for p in range(1, t + 1) if lows[p - 1] == peak)
    u_coords = [None] * n
    for p in range(1, n + 1):
        u_coords[perm[p - 1]] = peak if p <= t else ups[p - 1]
    return BoxProfile(box=B, upper_perm=perm, t=t, l=l, u=Point(tuple(u_coords)))


def lower_partition(B: Box) -> PartitionProfile:
    """Partition the lower-sorted positions into stages of one level each.

    With lower bounds sorted descending, stage k takes the smallest
    position s whose lower bound fits under every remaining upper bound
    from s onward; positions whose upper bound falls below the lower bound
    just before s form the stage (everything remaining once s hits 1).
    The stage level a_k is the least upper bound among stage members, and
    it lies inside [lower, upper] of every remaining position ≥ s.
    """
    n = B.dim
    perm = tuple(sorted(range(n), key=lambda i: (-B.lower[i], i)))
    lows = [B.lower[o] for o in perm]
    ups = [B.upper[o] for o in perm]
    remaining = set(range(1, n + 1))
    stages: list[PartitionStage] = []
    for _ in range(n):
        s = 1
        min_up = None
        for p in range(n, 0, -1):
            if p in remaining:
                min_up = ups[p - 1] if min_up is None else min(min_up, ups[p - 1])
            if min_up is not None and lows[p - 1] > min_up:
                s = p + 1
                break
        if s > n:
            raise InternalError("lower partition found no feasible threshold")
        if s == 1:
            members = frozenset(remaining)
        else:
            bound = lows[s - 2]
            members = frozenset(p for p in remaining if p >= s and ups[p - 1] < bound)
        if not members:
            raise InternalError("lower partition produced an empty stage")
        level = min(ups[p - 1] for p in members)
        stages.append(PartitionStage(s=s, members=members, level=level))
        remaining -= members
        if s == 1:
            break
    else:
        raise InternalError("lower partition exceeded the dimension bound")
    return PartitionProfile(box=B, lower_perm=perm, stages=tuple(stages))


def _certificate(outcome, separator, witness, calls, trace):
    return SeparationCertificate(
        outcome=outcome,
        separator=separator,
        witness=witness,
        oracle_calls=calls,
        trace=tuple(trace),
    )


def separate_box(
    B: Box, C: GeneratedConvexSet, *, with_fallback: bool = True
) -> SeparationCertificate:
    """Separate a box from a disjoint generated set, with certificate.

    Candidates are tried in a fixed order: the upper-type semispace at
    B.upper when no upper bound reaches 1; otherwise the semispace levelled
    at the dominant lower bound of the box profile; then per failing
    lower-sorted position (largest first, one band of positions per
    round) the semispace whose clause set is the union of the earlier
    partition stages.  Every failed sweep returns a generator, and the
    join of the stage-level meets of those generators with the running
    witness pushes the witness above the box lower bounds on the whole
    band, so the failing band moves strictly left each round and the
    total number of sweeps stays ≤ n+1 (hemispace fallback included:
    positions where the witness beats the upper bound are never tried).
    Raises IntersectionError when box and hull share a point.
    """
    check_same_dim(B.lower, C.generators[0])
    shared = box_hull_witness(B, C)
    if shared is not None:
        raise IntersectionError(f"box and hull share the point {shared}", witness=shared)
    n = B.dim
    calls = 0
    trace: list[TraceEntry] = []

    def sweep(S, stage, iteration=None, position=None):
        nonlocal calls
        calls += 1
        if calls > n + 1:
            raise InternalError("separation exceeded the n+1 oracle budget")
        w = set_in_semispace(C, S)
        trace.append(TraceEntry(stage, S, w, iteration, position))
        if w is None:
            avoids = (
                hemispace_avoids_box(S, B)
                if isinstance(S, HemispaceDescriptor)
                else semispace_avoids_box(S, B)
            )
            if not avoids:
                raise InternalError("pipeline candidate contains the set but meets the box")
        return w

    profile = box_profile(B)
    if all(v < ONE for v in B.upper):
        S = SemispaceDescriptor.s0(B.upper)
        y = sweep(S, stage=1)
        if y is None:
            return _certificate(SEMISPACE, S, None, calls, trace)
    else:
        origin = profile.upper_perm[profile.l - 1]
        S = SemispaceDescriptor.at_original_coordinate(profile.u, origin)
        y = sweep(S, stage=2)
        if y is None:
            return _certificate(SEMISPACE, S, None, calls, trace)

    part = lower_partition(B)
    perm = part.lower_perm
    lows = [B.lower[o] for o in perm]
    ups = [B.upper[o] for o in perm]
    stages = part.stages

    # at most one round per partition stage, plus the round that sees no
    # failing position left
    for iteration in range(1, n + 2):
        yv = [y[o] for o in perm]
        failing = [p for p in range(1, n + 1) if yv[p - 1] < lows[p - 1]]
        if not failing:
            break
        i_star = max(failing)
        k = next(
            k
            for k in range(len(stages))
            if stages[k].s <= i_star < (stages[k - 1].s if k > 0 else n + 1)
        )
        prior: frozenset[int] = frozenset().union(*(st.members for st in stages[:k])) if k else frozenset()
        band_start = stages[k].s
        band_end = stages[k - 1].s if k > 0 else n + 1
        witnesses = []
        for p in sorted((q for q in failing if band_start <= q < band_end), reverse=True):
            u_sorted = [
                ups[q - 1] if q in prior else (lows[q - 1] if q < p else lows[p - 1])
                for q in range(1, n + 1)
            ]
            u_coords = [None] * n
            for q in range(1, n + 1):
                u_coords[perm[q - 1]] = u_sorted[q - 1]
            S = SemispaceDescriptor.at_original_coordinate(Point(tuple(u_coords)), perm[p - 1])
            w = sweep(S, stage=3, iteration=iteration, position=p)
            if w is None:
                return _certificate(SEMISPACE, S, None, calls, trace)
            witnesses.append(w)
        level = stages[k].level
        y = join(y, *(scale_meet(level, w) for w in witnesses))
    else:
        raise InternalError("separation loop exceeded the dimension bound")

    exceed = [i for i in range(n) if y[i] > B.upper[i]]
    if not exceed:
        raise InternalError("final witness lies inside the box; inputs were not disjoint")
    pos_of = {o: p for p, o in enumerate(profile.upper_perm, start=1)}
    if any(pos_of[i] > profile.t for i in exceed):
        raise InternalError("final witness escapes the box beyond the profile threshold")

    if with_fallback:
        M = frozenset(i for i in range(n) if B.upper[i] < ONE)
        H = HemispaceDescriptor(B.upper, M)
        w = sweep(H, stage=4)
        if w is None:
            return _certificate(HEMISPACE, H, None, calls, trace)
    return _certificate(NOT_SEPARABLE, None, y, calls, trace)


def check_sep_cond(B: Box, C: GeneratedConvexSet) -> Point | None:
    """Decide the box-side condition that makes semispace separation possible.

    Returns None when the condition holds, else a violating hull point:
    one that dominates the box lower bounds and beats an upper bound at a
    sorted position ≤ t of the box profile (only possible when some upper
    bound is 1).  The condition holds vacuously whenever every upper bound
    is below 1, and always for point boxes.
    """
    cert = separate_box(B, C, with_fallback=False)
    if cert.outcome == NOT_SEPARABLE:
        return cert.witness
    return None


def assert_nonseparable(B: Box, C: GeneratedConvexSet, grid_step: Fraction) -> bool:
    """Exhaustively confirm that no semispace at a grid point separates.

    Enumerates every grid point x0 and every family member at x0, checking
    set containment and box avoidance.  Desk-scale referee for the
    NOT_SEPARABLE outcome; True means no grid candidate separates.
    """
    check_same_dim(B.lower, C.generators[0])
    shared = box_hull_witness(B, C)
    if shared is not None:
        raise IntersectionError(f"box and hull share the point {shared}", witness=shared)
    from .oracle import Grid

    step = Fraction(grid_step)
    if step <= 0 or step > 1 or step.numerator != 1:
        raise ValueError(f"grid step must be 1/d for an integer d, got {step}")
    grid = Grid(denominator=step.denominator, dimension=B.dim)
    for x0 in grid.points():
        for S in semispace_family(x0):
            if set_in_semispace(C, S) is None and semispace_avoids_box(S, B):
                return False
    return True
