"""Bounding regions for planar interpolation data and their fairness width.

Three constructions, all per chord and all expressed in the chord's local
frame as graphs y(x) over [-c, c]:

  simple    for spiral (monotone discrete curvature) data: the lens
            between the two neighbouring three-point circles,
            A(x; c, -eta_j) and A(x; c, xi_j);
  vertex    for piecewise-spiral data: same lens arcs away from the
            curvature extrema, but on a chord flanking a vertex the arc
            adjacent to the vertex is replaced by the tangent-matched
            continuation of the neighbouring chord's arc;
  narrowed  for spiral data only: the lens arcs are replaced by bounding
            biarcs derived from per-node tangent ranges and curvature
            ranges, which turns the boundary into a pair of smooth curves
            meeting at the nodes.

Lower/upper assignment never assumes a curvature sign: candidates are
ordered by their height at mid-chord, which settles it because the arc
family A(x; c, phi) is pointwise monotone in phi.  The narrowed tables
are derived for increasing curvature; decreasing data is handled by
mirroring across the chords (negating all angle data), running the
increasing construction and mirroring the resulting curves back, which
swaps their roles.  Reversing the point order would not do: reversal
negates the curvature sequence AND walks it backwards, so it preserves
the direction of monotonicity.

Widths: the simple region has the closed form c|tan(xi/2) + tan(eta/2)|
per chord; vertex and narrowed widths are defined by dense sampling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analysis import Analysis, real_chords
from .errors import (ClassificationError, DomainError,
                     InfeasibleCurvatureError, OverrideError)
from .geometry import (Arc, Biarc, ChordFrame, biarc_from_a, biarc_from_b,
                       biarc_from_p, curve_eval, mirror_curve)

WIDTH_SAMPLES = 1000  # abscissae per chord for sampled widths


@dataclass(frozen=True)
class RegionChord:
    """One chord of a bounding region, curves in the chord's local frame."""

    index: int
    frame: ChordFrame
    lower: Arc | Biarc
    upper: Arc | Biarc
    width: float
    width_estimate: float  # small-angle estimate c^2 |q_j - q_{j+1}| / 2


@dataclass(frozen=True, eq=False)
class Region:
    grade: str  # "simple" | "vertex" | "narrowed"
    closed: bool
    chords: list[RegionChord]
    width: float


@dataclass(frozen=True, eq=False)
class CurvatureRanges:
    """Extended-real curvature bounds per node, math.inf used as a tag only.

    lower/upper are indexed like the node list; the *_overridden flags
    record which entries a user override actually tightened.
    """

    lower: np.ndarray
    upper: np.ndarray
    lower_overridden: np.ndarray
    upper_overridden: np.ndarray


@dataclass(frozen=True, eq=False)
class NarrowedAngles:
    """Per-chord tangent-angle ranges of the narrowed construction.

    Arrays follow the chord list.  For decreasing data the table is
    computed on the mirrored (increasing) configuration; `mirrored` says
    so, and the entries then refer to mirrored angles.
    """

    alpha_lo: np.ndarray   # lower end of the start-angle range
    alpha_hi: np.ndarray
    beta_lo: np.ndarray    # lower end of the end-angle range
    beta_hi: np.ndarray
    mirrored: bool


def _require_admissible(analysis: Analysis):
    cls = analysis.classification
    if cls.kind == "inadmissible":
        v = cls.violations[0]
        raise ClassificationError(
            "data violates the half-turn admissibility condition at node %d "
            "(offending sum %g); no bounding region exists" % (v.node, v.value))


def _require_spiral(analysis: Analysis, grade: str):
    _require_admissible(analysis)
    if analysis.classification.kind != "spiral":
        raise ClassificationError(
            "the %s region needs monotone discrete curvature, but the data "
            "classifies as %s" % (grade, analysis.classification.kind))


def _ordered_arcs(c: float, phi_one: float, phi_two: float):
    """Build both lens arcs and return them as (lower, upper)."""
    lo, hi = (phi_one, phi_two) if phi_one <= phi_two else (phi_two, phi_one)
    return Arc(c, lo), Arc(c, hi)


def _sampled_width(lower, upper, c: float) -> float:
    xs = np.linspace(-c, c, WIDTH_SAMPLES)
    return float(np.max(curve_eval(upper, xs) - curve_eval(lower, xs)))


def _estimates(analysis: Analysis) -> list[float]:
    """Small-angle width estimate per chord: c^2 |q_start - q_end| / 2."""
    q = [n.curvature for n in analysis.nodes]
    chords = real_chords(analysis.chords)
    out = []
    for k, ch in enumerate(chords):
        q0 = q[k]
        q1 = q[(k + 1) % len(q)]
        out.append(0.5 * ch.half_length ** 2 * abs(q0 - q1))
    return out


def _finish(grade: str, analysis: Analysis, pairs, widths=None) -> Region:
    chords = real_chords(analysis.chords)
    ests = _estimates(analysis)
    entries = []
    for k, (ch, (lower, upper)) in enumerate(zip(chords, pairs)):
        w = (widths[k] if widths is not None
             else _sampled_width(lower, upper, ch.half_length))
        entries.append(RegionChord(index=ch.index, frame=ch.frame,
                                   lower=lower, upper=upper, width=w,
                                   width_estimate=ests[k]))
    total = max(e.width for e in entries)
    return Region(grade=grade, closed=analysis.data.closed,
                  chords=entries, width=total)


def simple_region(analysis: Analysis) -> Region:
    """Per-chord lens between the two neighbouring three-point circles."""
    _require_spiral(analysis, "simple")
    chords = real_chords(analysis.chords)
    pairs = []
    widths = []
    for ch, ang in zip(chords, analysis.angles):
        pairs.append(_ordered_arcs(ch.half_length, -ang.eta, ang.xi))
        widths.append(ch.half_length
                      * abs(math.tan(0.5 * ang.xi) + math.tan(0.5 * ang.eta)))
    return _finish("simple", analysis, pairs, widths)


def vertex_region(analysis: Analysis) -> Region:
    """Bounding region for data with distinguished curvature extrema.

    Chords not touching a vertex keep the simple lens.  On a chord whose
    start node is a vertex the upper-candidate three-point arc does not
    exist (the vertex breaks monotonicity there); it is replaced by the
    arc continuing the previous chord's boundary tangent.  Symmetrically
    at an end-node vertex.  Data without vertices reproduces the simple
    region.
    """
    _require_admissible(analysis)
    cls = analysis.classification
    verts = dict(cls.vertices)
    chords = real_chords(analysis.chords)
    m = len(chords)
    closed = analysis.data.closed
    xi = [a.xi for a in analysis.angles]
    eta = [a.eta for a in analysis.angles]
    rho = [n.turning for n in analysis.nodes]

    pairs = []
    for k, ch in enumerate(chords):
        start = k + 1                                  # 1-based node index
        end = (k + 1) % m + 1 if closed else k + 2
        at_start = start in verts
        at_end = end in verts
        try:
            if at_start and at_end:
                raise ClassificationError(
                    "vertices at both ends of chord %d" % ch.index)
            if at_start:
                phi_pair = (-eta[k], -xi[k - 1] - rho[k])
            elif at_end:
                phi_pair = (eta[(k + 1) % m] - rho[(k + 1) % len(rho)], xi[k])
            else:
                phi_pair = (-eta[k], xi[k])
            pairs.append(_ordered_arcs(ch.half_length, *phi_pair))
        except DomainError as exc:
            raise DomainError(
                "chord %d: %s (data too coarse around the vertex)"
                % (ch.index, exc)) from exc
    return _finish("vertex", analysis, pairs)


def _mirrored_overrides(overrides):
    if not overrides:
        return overrides
    flipped = {}
    for node, (lo, hi) in overrides.items():
        flipped[node] = (-hi if hi is not None else None,
                         -lo if lo is not None else None)
    return flipped


def _normalized_overrides(overrides, n_nodes: int):
    """Map {node: {'a':…, 'b':…}} or {node: (a, b)} to {node: (a, b)}."""
    if not overrides:
        return {}
    out = {}
    for node, spec in overrides.items():
        idx = int(node)
        if not 1 <= idx <= n_nodes:
            raise OverrideError(
                "curvature override for node %d, but nodes run 1..%d"
                % (idx, n_nodes))
        if isinstance(spec, dict):
            unknown = set(spec) - {"a", "b"}
            if unknown:
                raise OverrideError(
                    "curvature override for node %d has unknown keys %s"
                    % (idx, sorted(unknown)))
            lo, hi = spec.get("a"), spec.get("b")
        else:
            lo, hi = spec
        lo = None if lo is None else float(lo)
        hi = None if hi is None else float(hi)
        if lo is not None and hi is not None and lo > hi:
            raise OverrideError(
                "curvature override for node %d is empty: a=%g > b=%g"
                % (idx, lo, hi))
        out[idx] = (lo, hi)
    return out


def narrowed_angle_ranges(analysis: Analysis) -> NarrowedAngles:
    """Tangent-angle ranges per chord, in increasing-curvature orientation."""
    _require_spiral(analysis, "narrowed")
    cls = analysis.classification
    mirrored = cls.direction == "decreasing"
    sign = -1.0 if mirrored else 1.0
    xi = sign * np.array([a.xi for a in analysis.angles])
    eta = sign * np.array([a.eta for a in analysis.angles])
    rho = sign * np.array([n.turning for n in analysis.nodes])
    m = len(xi)
    closed = analysis.data.closed

    alpha_lo = np.empty(m)
    beta_lo = np.empty(m)
    for k in range(m):
        if not closed and k == 0:
            alpha_lo[k] = xi[0]
        else:
            alpha_lo[k] = max(-rho[k] - xi[k - 1], -eta[k])
        if not closed and k == m - 1:
            beta_lo[k] = eta[m - 1]
        else:
            beta_lo[k] = max(-xi[k],
                             rho[(k + 1) % len(rho)] - eta[(k + 1) % m])
    return NarrowedAngles(alpha_lo=alpha_lo, alpha_hi=xi.copy(),
                          beta_lo=beta_lo, beta_hi=eta.copy(),
                          mirrored=mirrored)


def _node_bounds(analysis: Analysis, table: NarrowedAngles, overrides):
    """Curvature bounds per node in the table's (increasing) orientation."""
    chords = real_chords(analysis.chords)
    c = np.array([ch.half_length for ch in chords])
    m = len(c)
    closed = analysis.data.closed
    n_nodes = m if closed else m + 1

    lower = np.full(n_nodes, -math.inf)
    upper = np.full(n_nodes, math.inf)
    for i in range(n_nodes):
        if closed or i > 0:
            lower[i] = math.sin(table.beta_lo[(i - 1) % m]) / c[(i - 1) % m]
        if closed or i < n_nodes - 1:
            upper[i] = -math.sin(table.alpha_lo[i % m]) / c[i % m]

    lo_over = np.zeros(n_nodes, dtype=bool)
    hi_over = np.zeros(n_nodes, dtype=bool)
    user = _normalized_overrides(overrides, n_nodes)
    if table.mirrored:
        user = _mirrored_overrides(user)
    for idx, (lo, hi) in user.items():
        i = idx - 1
        if lo is not None and lo > lower[i]:
            lower[i] = lo
            lo_over[i] = True
        if hi is not None and hi < upper[i]:
            upper[i] = hi
            hi_over[i] = True
        if lower[i] > upper[i]:
            raise OverrideError(
                "curvature override at node %d contradicts the computed "
                "range [%g, %g]" % (idx, lower[i], upper[i]))
    return CurvatureRanges(lower=lower, upper=upper,
                           lower_overridden=lo_over, upper_overridden=hi_over)


def curvature_ranges(analysis: Analysis, overrides=None) -> CurvatureRanges:
    """Per-node curvature bounds, reported in the data's own orientation."""
    table = narrowed_angle_ranges(analysis)
    ranges = _node_bounds(analysis, table, overrides)
    if not table.mirrored:
        return ranges
    return CurvatureRanges(lower=-ranges.upper, upper=-ranges.lower,
                           lower_overridden=ranges.upper_overridden,
                           upper_overridden=ranges.lower_overridden)


def _lower_biarc(c, alpha, beta, a, tainted, index):
    try:
        return biarc_from_a(c, alpha, beta, a)
    except InfeasibleCurvatureError as exc:
        if tainted:
            raise OverrideError(
                "chord %d: curvature override makes the lower boundary "
                "infeasible (%s)" % (index, exc)) from exc
        # Numerical slack pushed p below 0; fall back to the lens arc,
        # which is a valid (just wider) lower bound.
        return biarc_from_p(c, alpha, beta, 0.0)


def _upper_biarc(c, alpha, beta, b, tainted, index):
    try:
        return biarc_from_b(c, alpha, beta, b)
    except InfeasibleCurvatureError as exc:
        if tainted:
            raise OverrideError(
                "chord %d: curvature override makes the upper boundary "
                "infeasible (%s)" % (index, exc)) from exc
        return biarc_from_p(c, alpha, beta, math.inf)


def narrowed_region(analysis: Analysis, overrides=None) -> Region:
    """Biarc-bounded region for spiral data, nested inside the simple one."""
    table = narrowed_angle_ranges(analysis)
    ranges = _node_bounds(analysis, table, overrides)
    chords = real_chords(analysis.chords)
    m = len(chords)
    closed = analysis.data.closed

    pairs = []
    for k, ch in enumerate(chords):
        c = ch.half_length
        end = (k + 1) % m if closed else k + 1
        try:
            lower = _lower_biarc(c, table.alpha_lo[k], table.beta_hi[k],
                                 ranges.lower[k],
                                 bool(ranges.lower_overridden[k]), ch.index)
            upper = _upper_biarc(c, table.alpha_hi[k], table.beta_lo[k],
                                 ranges.upper[end],
                                 bool(ranges.upper_overridden[end]), ch.index)
        except DomainError as exc:
            raise DomainError("chord %d: %s" % (ch.index, exc)) from exc
        if table.mirrored:
            lower, upper = mirror_curve(upper), mirror_curve(lower)
        pairs.append((lower, upper))
    return _finish("narrowed", analysis, pairs)


def build_region(analysis: Analysis, grade: str = "auto",
                 overrides=None) -> Region:
    """Construct a region of the requested grade ('auto' picks by data).

    Curvature overrides act on the narrowed construction only; other
    grades ignore them.
    """
    _require_admissible(analysis)
    if grade == "auto":
        grade = ("narrowed" if analysis.classification.kind == "spiral"
                 else "vertex")
    if grade == "simple":
        return simple_region(analysis)
    if grade == "vertex":
        return vertex_region(analysis)
    if grade == "narrowed":
        return narrowed_region(analysis, overrides)
    raise ValueError("unknown region grade %r" % (grade,))


def region_width(region: Region):
    """Global fairness width and the per-chord widths."""
    return region.width, [ch.width for ch in region.chords]
