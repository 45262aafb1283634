"""Discrete analysis of planar interpolation data.

Given points P_1..P_N (plus boundary tangents for open data) this module
builds the chord quantities the bounding constructions run on:

  * half-chords c_j and chord directions mu_j, with zero-length pseudo
    chords carrying the boundary tangents of open data;
  * per node j: turning angle rho_j = mu_j - mu_{j-1}, half-diagonal
    d_j = |P_{j-1} P_{j+1}|/2 and the three-point discrete curvature
    q_j = sin(rho_j)/d_j (the curvature of the circle through the node
    and its neighbours, signed by turning direction);
  * per chord j the tangent angles of the neighbouring three-point
    circles at its endpoints:

        sin(xi_j) = -c_j q_j,    cos(xi_j) = (c_{j-1} + c_j cos rho_j)/d_j,
        sin(eta_j) = c_j q_{j+1}, cos(eta_j) = (c_{j+1} + c_j cos rho_{j+1})/d_{j+1};

  * the half-turn admissibility test: at every node both
    c_{j-1} + c_j cos(rho_j) >= 0 and c_j + c_{j-1} cos(rho_j) >= 0,
    which keeps all those angles within [-pi/2, pi/2];
  * a classification of the q sequence into a spiral (monotone) or a
    piecewise-spiral with vertex nodes at its strict local extrema.

Closed data wraps around: P_{N+1} = P_1, no boundary tangents, N chords.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (AdjacentVerticesError, DegenerateNodeError,
                     DuplicatePointsError, InputError, MissingTangentsError)
from .geometry import ChordFrame, wrap_angle

# Relative tolerance for "equal" discrete curvatures in classification.
Q_TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SplineInput:
    """Interpolation data: points plus boundary tangents (open) or closed flag.

    Tangents are angles in radians; unit-vector input is converted at the
    file-parsing layer.
    """

    points: np.ndarray
    tau_start: float | None = None
    tau_end: float | None = None
    closed: bool = False

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise InputError("points must form an (n, 2) array")
        object.__setattr__(self, "points", pts)


@dataclass(frozen=True)
class ChordData:
    """One chord: paper-style 1-based index, half-length, direction.

    Pseudo-chords (index 0 and N of open data) have zero length, carry the
    boundary tangent as direction and no frame.
    """

    index: int
    half_length: float
    direction: float
    frame: ChordFrame | None
    pseudo: bool = False


@dataclass(frozen=True)
class NodeData:
    index: int
    turning: float        # rho_j
    half_diagonal: float  # d_j
    curvature: float      # q_j


@dataclass(frozen=True)
class ChordAngles:
    """Tangent angles of the neighbouring three-point circles at a chord."""

    index: int
    xi: float
    eta: float
    sin_xi: float
    cos_xi: float
    sin_eta: float
    cos_eta: float


@dataclass(frozen=True)
class Lim180Violation:
    node: int
    side: int    # 1: c_{j-1} + c_j cos(rho_j) < 0;  2: the mirrored sum
    value: float


@dataclass(frozen=True)
class Classification:
    """kind: 'spiral' | 'piecewise' | 'inadmissible'.

    direction is set for spirals ('increasing'/'decreasing'/'constant');
    vertices lists (node index, 'min'|'max') for piecewise data, where a
    plateau of tied q bounded by opposite trends contributes its first
    node as the representative vertex.
    """

    kind: str
    direction: str | None
    vertices: tuple
    q: tuple
    violations: tuple


def build_chords(data: SplineInput) -> list[ChordData]:
    """Chords of the data polygon, with pseudo-chords for open data."""
    pts = data.points
    n = len(pts)
    if n < 3:
        raise InputError("need at least 3 points, got %d" % n)
    if data.closed:
        if data.tau_start is not None or data.tau_end is not None:
            raise InputError("closed data must not carry boundary tangents")
        seg = np.roll(pts, -1, axis=0) - pts          # P_{j+1} - P_j, wraps
    else:
        if data.tau_start is None or data.tau_end is None:
            raise MissingTangentsError(
                "open data needs both boundary tangents")
        seg = pts[1:] - pts[:-1]
    lengths = np.hypot(seg[:, 0], seg[:, 1])
    diag = math.hypot(*(pts.max(axis=0) - pts.min(axis=0)))
    short = np.nonzero(lengths <= 1e-12 * max(diag, 1e-300))[0]
    if short.size:
        raise DuplicatePointsError(
            "points %d and %d coincide" % (short[0] + 1, short[0] + 2))

    chords: list[ChordData] = []
    if not data.closed:
        chords.append(ChordData(index=0, half_length=0.0,
                                direction=wrap_angle(data.tau_start),
                                frame=None, pseudo=True))
    for j, (p, d, ln) in enumerate(zip(pts, seg, lengths), start=1):
        mid = p + 0.5 * d
        mu = math.atan2(d[1], d[0])
        chords.append(ChordData(
            index=j, half_length=0.5 * float(ln), direction=mu,
            frame=ChordFrame(origin=(float(mid[0]), float(mid[1])),
                             direction=mu, half_length=0.5 * float(ln))))
    if not data.closed:
        chords.append(ChordData(index=n, half_length=0.0,
                                direction=wrap_angle(data.tau_end),
                                frame=None, pseudo=True))
    return chords


def real_chords(chords: list[ChordData]) -> list[ChordData]:
    return [ch for ch in chords if not ch.pseudo]


def _chord_arrays(chords):
    """(c_ext, mu_ext, m, closed): arrays padded so node j uses slots j-1, j."""
    if not chords:
        raise InputError("no chords")
    closed = not chords[0].pseudo
    real = real_chords(chords)
    c = [ch.half_length for ch in real]
    mu = [ch.direction for ch in real]
    if closed:
        c_ext = np.array([c[-1]] + c + [c[0]])
        mu_ext = np.array([mu[-1]] + mu + [mu[0]])
    else:
        c_ext = np.array([0.0] + c + [0.0])
        mu_ext = np.array([chords[0].direction] + mu + [chords[-1].direction])
    return c_ext, mu_ext, len(real), closed


def node_data(chords: list[ChordData]) -> list[NodeData]:
    """Turning angle, half-diagonal and discrete curvature at every node."""
    c, mu, m, closed = _chord_arrays(chords)
    n_nodes = m if closed else m + 1
    nodes = []
    for j in range(1, n_nodes + 1):
        rho = wrap_angle(mu[j] - mu[j - 1])
        rad = (c[j - 1] ** 2 + 2.0 * c[j - 1] * c[j] * math.cos(rho)
               + c[j] ** 2)
        d = math.sqrt(max(rad, 0.0))
        if d < 1e-12 * (c[j - 1] + c[j]):
            raise DegenerateNodeError(
                "node %d folds back onto itself (half-diagonal ~ 0)" % j)
        nodes.append(NodeData(index=j, turning=rho, half_diagonal=d,
                              curvature=math.sin(rho) / d))
    return nodes


def xi_eta(chords: list[ChordData], nodes: list[NodeData]) -> list[ChordAngles]:
    """Neighbour-circle tangent angles at both ends of every real chord."""
    c, _, m, closed = _chord_arrays(chords)
    out = []
    for j in range(1, m + 1):
        node_j = nodes[j - 1]
        node_j1 = nodes[j % len(nodes)]
        cj = c[j]
        sin_xi = -cj * node_j.curvature
        cos_xi = (c[j - 1] + cj * math.cos(node_j.turning)) / node_j.half_diagonal
        sin_eta = cj * node_j1.curvature
        cos_eta = ((c[j + 1] + cj * math.cos(node_j1.turning))
                   / node_j1.half_diagonal)
        out.append(ChordAngles(
            index=j,
            xi=math.atan2(sin_xi, cos_xi), eta=math.atan2(sin_eta, cos_eta),
            sin_xi=sin_xi, cos_xi=cos_xi, sin_eta=sin_eta, cos_eta=cos_eta))
    return out


def check_lim180(chords: list[ChordData],
                 nodes: list[NodeData]) -> list[Lim180Violation]:
    """Half-turn admissibility: both mixed sums non-negative at each node."""
    c, _, _, _ = _chord_arrays(chords)
    bad = []
    for node in nodes:
        j = node.index
        co = math.cos(node.turning)
        tol = 1e-12 * (c[j - 1] + c[j])
        v1 = c[j - 1] + c[j] * co
        v2 = c[j] + c[j - 1] * co
        if v1 < -tol:
            bad.append(Lim180Violation(node=j, side=1, value=float(v1)))
        if v2 < -tol:
            bad.append(Lim180Violation(node=j, side=2, value=float(v2)))
    return bad


def _runs(q, tol):
    """Group indices of q into plateaus of consecutive near-equal values."""
    runs = [[0, 0]]
    for i in range(1, len(q)):
        if abs(q[i] - q[i - 1]) <= tol:
            runs[-1][1] = i
        else:
            runs.append([i, i])
    return runs


def classify(nodes: list[NodeData], violations: list[Lim180Violation],
             *, closed: bool = False) -> Classification:
    """Spiral vs piecewise-spiral split of the q sequence.

    Monotone (ties allowed) means spiral; otherwise every strict local
    extremum becomes a vertex.  For closed data the sequence is cyclic.
    Raises AdjacentVerticesError when two vertices have no node between
    them, which no construction here supports.
    """
    q = tuple(n.curvature for n in nodes)
    if violations:
        return Classification(kind="inadmissible", direction=None,
                              vertices=(), q=q, violations=tuple(violations))
    tol = Q_TIE_TOL * max(max(abs(v) for v in q), 1e-300)
    runs = _runs(q, tol)
    values = [q[r[0]] for r in runs]

    if closed and len(runs) > 1 and abs(values[-1] - values[0]) <= tol:
        # One plateau wraps the seam; its first node in cyclic order is
        # the start of the tail part.
        runs[0][0] = runs[-1][0] - len(q)
        runs.pop()
        values.pop()

    if len(runs) == 1:
        return Classification(kind="spiral", direction="constant",
                              vertices=(), q=q, violations=())
    trends = [1 if values[i + 1] > values[i] else -1
              for i in range(len(values) - 1)]
    if closed:
        trends.append(1 if values[0] > values[-1] else -1)

    if all(t > 0 for t in trends):
        return Classification(kind="spiral", direction="increasing",
                              vertices=(), q=q, violations=())
    if all(t < 0 for t in trends):
        return Classification(kind="spiral", direction="decreasing",
                              vertices=(), q=q, violations=())

    # trends[i] joins run i to run i+1 (cyclically for closed data), so a
    # run is an extremum exactly when the trends on its two sides disagree.
    vertices = []
    n_runs = len(runs)
    for i in range(n_runs):
        if not closed and (i == 0 or i == n_runs - 1):
            continue  # boundary runs of open data are not extrema
        before = trends[(i - 1) % n_runs]
        after = trends[i]
        if before > 0 and after < 0:
            vertices.append((runs[i][0] % len(q) + 1, "max"))
        elif before < 0 and after > 0:
            vertices.append((runs[i][0] % len(q) + 1, "min"))
    vertices.sort()

    idx = [v[0] for v in vertices]
    if len(idx) > 1:
        pairs = len(idx) if closed else len(idx) - 1
        for k in range(pairs):
            nxt = idx[(k + 1) % len(idx)]
            gap = nxt - idx[k] if nxt > idx[k] else nxt - idx[k] + len(q)
            if gap < 2:
                raise AdjacentVerticesError(
                    "vertices at nodes %d and %d are adjacent"
                    % (idx[k], nxt))
    return Classification(kind="piecewise", direction=None,
                          vertices=tuple(vertices), q=q, violations=())


def discrete_curvature_plot(samples) -> np.ndarray:
    """(arc length, three-point curvature) rows for a sample polyline."""
    pts = np.asarray(samples, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 3:
        raise InputError("need an (n >= 3, 2) sample array")
    seg = pts[1:] - pts[:-1]
    lengths = np.hypot(seg[:, 0], seg[:, 1])
    if np.any(lengths == 0.0):
        raise DuplicatePointsError("repeated consecutive samples")
    s = np.concatenate([[0.0], np.cumsum(lengths)])
    dirs = np.arctan2(seg[:, 1], seg[:, 0])
    rho = wrap_angle(dirs[1:] - dirs[:-1])
    diag = pts[2:] - pts[:-2]
    d = 0.5 * np.hypot(diag[:, 0], diag[:, 1])
    q = np.sin(rho) / d
    return np.column_stack([s[1:-1], q])


@dataclass(frozen=True, eq=False)
class Analysis:
    """Everything the region constructions need, in one bundle."""

    data: SplineInput
    chords: list[ChordData]
    nodes: list[NodeData]
    angles: list[ChordAngles]
    violations: list[Lim180Violation]
    classification: Classification


def analyze(data: SplineInput) -> Analysis:
    chords = build_chords(data)
    nodes = node_data(chords)
    angles = xi_eta(chords, nodes)
    violations = check_lim180(chords, nodes)
    cls = classify(nodes, violations, closed=data.closed)
    return Analysis(data=data, chords=chords, nodes=nodes, angles=angles,
                    violations=violations, classification=cls)
