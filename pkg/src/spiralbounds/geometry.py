"""Circular-arc and biarc primitives over a chord.

Every curve here lives in a local chord frame: the chord is the segment
[-c, c] of the x axis and each curve is the graph of a function y(x)
over it.  Angles are tangent directions measured from the chord;
curvature is signed, positive when the curve turns left as x increases.

The one-parameter arc family through both chord endpoints is

    A(x; c, phi) = (c^2 - x^2) sin(phi)
                   / (c cos(phi) + sqrt(c^2 - x^2 sin(phi)^2)),

with start tangent angle phi, end tangent angle -phi and constant
curvature -sin(phi)/c.  A biarc joins two circular arcs with a common
tangent at an interior join point; the pair of boundary curvatures
(a at x=-c, b at x=+c) must satisfy the tangency condition

    (a c + sin(alpha)) (b c - sin(beta)) + sin(omega)^2 = 0,

omega = (alpha + beta)/2.  Solutions form a one-parameter family with
p in [0, inf]:

    a(p) = -(sin(alpha) + sin(omega)/p) / c,
    b(p) = (sin(beta) + p sin(omega)) / c,

so p = -sin(omega)/(a c + sin(alpha)) = (b c - sin(beta))/sin(omega).
p = 0 degenerates to the single arc A(x; c, -beta), p = inf to
A(x; c, alpha), and omega = 0 collapses the family to A(x; c, alpha)
for every p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InfeasibleCurvatureError

TWO_PI = 2.0 * math.pi

# Tolerances below are dimensionless (angles, or curvature*length).
DEGENERATE_TOL = 1e-12   # biarc collapses to its single-arc limit
STRAIGHT_TOL = 1e-14     # |k|*c below this treats a piece as a segment
ANGLE_SLACK = 1e-12      # slack when validating |angle| <= pi/2
ABSCISSA_SLACK = 1e-12   # relative slack when validating |x| <= c


def wrap_angle(theta):
    """Wrap an angle (scalar or array) to (-pi, pi]."""
    w = np.mod(np.asarray(theta, dtype=float) + math.pi, TWO_PI) - math.pi
    w = np.where(w == -math.pi, math.pi, w)
    return float(w) if np.ndim(theta) == 0 else w


@dataclass(frozen=True)
class ChordFrame:
    """Local frame of a chord: origin at the midpoint, x axis along it."""

    origin: tuple[float, float]
    direction: float
    half_length: float

    def _axes(self):
        co, si = math.cos(self.direction), math.sin(self.direction)
        return np.array([co, si]), np.array([-si, co])

    def to_local(self, points):
        """Map global points (2,) or (n, 2) to chord coordinates."""
        t, n = self._axes()
        d = np.asarray(points, dtype=float) - np.asarray(self.origin)
        return np.stack([d @ t, d @ n], axis=-1)

    def to_global(self, points):
        """Map chord coordinates back to the global plane."""
        t, n = self._axes()
        p = np.asarray(points, dtype=float)
        return (np.multiply.outer(p[..., 0], t)
                + np.multiply.outer(p[..., 1], n)
                + np.asarray(self.origin))

    def start(self):
        return self.to_global(np.array([-self.half_length, 0.0]))

    def end(self):
        return self.to_global(np.array([self.half_length, 0.0]))


@dataclass(frozen=True)
class Arc:
    """Circular arc through (-c, 0) and (c, 0) with start tangent angle phi."""

    c: float
    phi: float

    def __post_init__(self):
        if not self.c > 0.0:
            raise DomainError("arc needs a positive half-chord, got %r" % (self.c,))
        if abs(self.phi) > 0.5 * math.pi + ANGLE_SLACK:
            raise DomainError(
                "arc tangent angle %g exceeds pi/2; such an arc is not a graph "
                "over its chord" % self.phi)


@dataclass(frozen=True)
class Biarc:
    """Two tangent circular arcs from (-c, 0) to (c, 0).

    alpha, beta are the boundary tangent angles, a and b the (finite)
    boundary curvatures, p the family parameter, join the point where the
    pieces meet.  Instances are built by the biarc_from_* factories, which
    return a plain Arc whenever the requested member degenerates.
    """

    c: float
    alpha: float
    beta: float
    a: float
    b: float
    p: float
    join: tuple[float, float]


def arc_eval(arc: Arc, x):
    """Height of the arc over abscissa x (scalar or array), |x| <= c."""
    scalar = np.ndim(x) == 0
    xa = np.asarray(x, dtype=float)
    c = arc.c
    if np.any(np.abs(xa) > c * (1.0 + ABSCISSA_SLACK)):
        raise DomainError("abscissa outside [-c, c] for c=%g" % c)
    xa = np.clip(xa, -c, c)
    s, co = math.sin(arc.phi), math.cos(arc.phi)
    num = (c * c - xa * xa) * s
    den = c * co + np.sqrt(np.maximum(c * c - xa * xa * s * s, 0.0))
    # den vanishes only at |phi| = pi/2 with |x| = c, where the height is 0.
    y = np.divide(num, den, out=np.zeros_like(num, dtype=float), where=den > 0.0)
    return float(y) if scalar else y


def arc_curvature(arc: Arc) -> float:
    """Signed curvature of the arc: -sin(phi)/c."""
    return -math.sin(arc.phi) / arc.c


def tangency_residual(c, alpha, beta, a, b) -> float:
    """Residual of the biarc tangency condition; zero for a true biarc."""
    omega = 0.5 * (alpha + beta)
    return (a * c + math.sin(alpha)) * (b * c - math.sin(beta)) + math.sin(omega) ** 2


def _check_biarc_args(c, alpha, beta):
    if not c > 0.0:
        raise DomainError("biarc needs a positive half-chord, got %r" % (c,))
    for name, ang in (("alpha", alpha), ("beta", beta)):
        if abs(ang) > 0.5 * math.pi + ANGLE_SLACK:
            raise DomainError("biarc boundary angle %s=%g exceeds pi/2" % (name, ang))


def _join_point(c, alpha, beta, a, b):
    """Join of the two pieces: the tangency point on the line of centers."""
    start = np.array([-c, 0.0])
    end = np.array([c, 0.0])
    a_straight = abs(a) * c < STRAIGHT_TOL
    b_straight = abs(b) * c < STRAIGHT_TOL
    if a_straight and b_straight:
        # Tangency then forces alpha = beta = 0: the biarc is the chord.
        return (0.0, 0.0)
    if a_straight:
        t = np.array([math.cos(alpha), math.sin(alpha)])
        o2 = end + (1.0 / b) * np.array([-math.sin(beta), math.cos(beta)])
        j = start + ((o2 - start) @ t) * t
    elif b_straight:
        t = np.array([math.cos(beta), math.sin(beta)])
        o1 = start + (1.0 / a) * np.array([-math.sin(alpha), math.cos(alpha)])
        j = end + ((o1 - end) @ t) * t
    else:
        o1 = start + (1.0 / a) * np.array([-math.sin(alpha), math.cos(alpha)])
        o2 = end + (1.0 / b) * np.array([-math.sin(beta), math.cos(beta)])
        # Both centers sit on the normal at the join, so o2 - o1 is
        # (1/b - 1/a) times the unit normal there.
        n = (o2 - o1) / (1.0 / b - 1.0 / a)
        j = o1 - n / a
    return (float(j[0]), float(j[1]))


def biarc_from_p(c, alpha, beta, p):
    """Member of the biarc family for parameter p in [0, inf].

    Returns an Arc for the degenerate members: p = 0 gives A(x; c, -beta),
    p = inf gives A(x; c, alpha), and omega = 0 gives A(x; c, alpha)
    whatever p is.
    """
    _check_biarc_args(c, alpha, beta)
    if math.isnan(p) or p < 0.0:
        raise DomainError("family parameter must lie in [0, inf], got %r" % (p,))
    omega = 0.5 * (alpha + beta)
    if abs(omega) < DEGENERATE_TOL:
        return Arc(c, alpha)
    if p == 0.0:
        return Arc(c, -beta)
    if math.isinf(p):
        return Arc(c, alpha)
    so = math.sin(omega)
    a = -(math.sin(alpha) + so / p) / c
    b = (math.sin(beta) + p * so) / c
    return Biarc(c=c, alpha=alpha, beta=beta, a=a, b=b, p=p,
                 join=_join_point(c, alpha, beta, a, b))


def biarc_from_a(c, alpha, beta, a):
    """Biarc with prescribed start curvature a (math.inf allowed as a tag).

    a = -inf (for alpha + beta > 0; +inf for the mirrored case) selects the
    p = 0 member; a = -sin(alpha)/c makes the first piece fill the whole
    chord, the p = inf member.
    """
    _check_biarc_args(c, alpha, beta)
    omega = 0.5 * (alpha + beta)
    if abs(omega) < DEGENERATE_TOL:
        return Arc(c, alpha)
    if math.isinf(a):
        if (omega > 0.0) == (a < 0.0):
            return Arc(c, -beta)
        raise InfeasibleCurvatureError(
            "start curvature %r incompatible with alpha+beta=%g" % (a, 2 * omega))
    t = a * c + math.sin(alpha)
    if abs(t) < DEGENERATE_TOL:
        return Arc(c, alpha)
    p = -math.sin(omega) / t
    if p < 0.0:
        raise InfeasibleCurvatureError(
            "no biarc with start curvature a=%g for alpha=%g, beta=%g "
            "(needs a*c <= -sin(alpha) when alpha+beta > 0)" % (a, alpha, beta))
    return biarc_from_p(c, alpha, beta, p)


def biarc_from_b(c, alpha, beta, b):
    """Biarc with prescribed end curvature b (math.inf allowed as a tag)."""
    _check_biarc_args(c, alpha, beta)
    omega = 0.5 * (alpha + beta)
    if abs(omega) < DEGENERATE_TOL:
        return Arc(c, alpha)
    if math.isinf(b):
        if (omega > 0.0) == (b > 0.0):
            return Arc(c, alpha)
        raise InfeasibleCurvatureError(
            "end curvature %r incompatible with alpha+beta=%g" % (b, 2 * omega))
    t = b * c - math.sin(beta)
    if abs(t) < DEGENERATE_TOL:
        # A regular-looking request that is secretly the p = 0 member.
        return Arc(c, -beta)
    p = t / math.sin(omega)
    if p < 0.0:
        raise InfeasibleCurvatureError(
            "no biarc with end curvature b=%g for alpha=%g, beta=%g "
            "(needs b*c >= sin(beta) when alpha+beta > 0)" % (b, alpha, beta))
    return biarc_from_p(c, alpha, beta, p)


def _piece_height(x, c, angle, k, first):
    """Height of one biarc piece: a circle branch or a straight segment."""
    if abs(k) * c < STRAIGHT_TOL:
        x0 = -c if first else c
        return (x - x0) * math.tan(angle)
    px = -c if first else c
    ox = px - math.sin(angle) / k
    oy = math.cos(angle) / k
    r = 1.0 / abs(k)
    root = np.sqrt(np.maximum(r * r - (x - ox) ** 2, 0.0))
    return oy - math.copysign(1.0, k) * root


def biarc_eval(spec: Biarc, x):
    """Height of the biarc over abscissa x (scalar or array), |x| <= c."""
    scalar = np.ndim(x) == 0
    xa = np.asarray(x, dtype=float)
    c = spec.c
    if np.any(np.abs(xa) > c * (1.0 + ABSCISSA_SLACK)):
        raise DomainError("abscissa outside [-c, c] for c=%g" % c)
    xa = np.atleast_1d(np.clip(xa, -c, c))
    first = xa <= spec.join[0]
    y = np.empty_like(xa)
    y[first] = _piece_height(xa[first], c, spec.alpha, spec.a, True)
    y[~first] = _piece_height(xa[~first], c, spec.beta, spec.b, False)
    return float(y[0]) if scalar else y


def curve_eval(curve, x):
    """Evaluate an Arc or a Biarc boundary curve at abscissa x."""
    if isinstance(curve, Arc):
        return arc_eval(curve, x)
    return biarc_eval(curve, x)


def mirror_curve(curve):
    """Reflect a boundary curve across the chord (y -> -y)."""
    if isinstance(curve, Arc):
        return Arc(curve.c, -curve.phi)
    return Biarc(c=curve.c, alpha=-curve.alpha, beta=-curve.beta,
                 a=-curve.a, b=-curve.b, p=curve.p,
                 join=(curve.join[0], -curve.join[1]))
