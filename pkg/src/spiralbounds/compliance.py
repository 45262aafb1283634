"""Containment test of a candidate curve against a bounding region.

The candidate comes in as a dense polyline.  Every sample is projected
into the local frames of the region's chords; chords whose span contains
the projection are candidates.  The region is a union of per-chord
pieces, so a sample complies when it fits ANY candidate chord: margins
are computed in every candidate and the most favorable pair is kept.
Samples projecting into no chord (beyond the data extent) are counted
as unassigned and do not affect the verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptySamplesError
from .geometry import curve_eval
from .regions import Region

# Relative slack when deciding whether a projection falls on a chord.
SPAN_SLACK = 1e-12


def _local_projections(region: Region, pts: np.ndarray):
    """Per chord: local coordinates of all samples and the on-chord mask."""
    for ch in region.chords:
        local = ch.frame.to_local(pts)
        c = ch.frame.half_length
        mask = np.abs(local[:, 0]) <= c * (1.0 + SPAN_SLACK)
        yield ch, local, mask


def _check_pts(polyline) -> np.ndarray:
    pts = np.asarray(polyline, dtype=float)
    if pts.size == 0:
        raise EmptySamplesError("no curve samples to test")
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise EmptySamplesError("curve samples must form an (n, 2) array")
    return pts


def assign_samples(region: Region, polyline):
    """Map samples to chords by projection, closest chord line wins.

    Returns (chord_index, x_local, y_local) arrays; chord_index holds the
    1-based chord index, or -1 for samples beyond every chord's span.
    """
    pts = _check_pts(polyline)
    n = len(pts)
    best_dist = np.full(n, math.inf)
    chord_index = np.full(n, -1, dtype=int)
    x_local = np.full(n, math.nan)
    y_local = np.full(n, math.nan)
    for ch, local, mask in _local_projections(region, pts):
        better = mask & (np.abs(local[:, 1]) < best_dist)
        best_dist[better] = np.abs(local[better, 1])
        chord_index[better] = ch.index
        x_local[better] = local[better, 0]
        y_local[better] = local[better, 1]
    return chord_index, x_local, y_local


@dataclass(frozen=True, eq=False)
class ComplianceReport:
    """Per-sample margins against the region, plus the overall verdict.

    chord_index is -1 for unassigned samples; their margins are NaN.
    margin_lower = y - lower(x), margin_upper = upper(x) - y, both in
    model units; a sample passes when both are >= -tol.
    """

    chord_index: np.ndarray
    x_local: np.ndarray
    y_local: np.ndarray
    margin_lower: np.ndarray
    margin_upper: np.ndarray
    tol: float

    @property
    def assigned(self) -> np.ndarray:
        return self.chord_index >= 0

    @property
    def unassigned_count(self) -> int:
        return int(np.count_nonzero(~self.assigned))

    @property
    def worst_margin(self) -> float:
        a = self.assigned
        if not np.any(a):
            return math.inf
        return float(np.min(np.minimum(self.margin_lower[a],
                                       self.margin_upper[a])))

    @property
    def violations(self) -> np.ndarray:
        """Indices of assigned samples breaking either margin."""
        a = self.assigned
        bad = a & ((self.margin_lower < -self.tol)
                   | (self.margin_upper < -self.tol))
        return np.nonzero(bad)[0]

    @property
    def passed(self) -> bool:
        return self.violations.size == 0


def check_containment(region: Region, polyline, tol=None) -> ComplianceReport:
    """Test a dense polyline against the region, most favorable chord wins."""
    pts = _check_pts(polyline)
    if tol is None:
        tol = 1e-9 * max(ch.frame.half_length for ch in region.chords)
    n = len(pts)
    best_score = np.full(n, -math.inf)
    chord_index = np.full(n, -1, dtype=int)
    x_local = np.full(n, math.nan)
    y_local = np.full(n, math.nan)
    margin_lower = np.full(n, math.nan)
    margin_upper = np.full(n, math.nan)
    for ch, local, mask in _local_projections(region, pts):
        if not np.any(mask):
            continue
        c = ch.frame.half_length
        x = np.clip(local[mask, 0], -c, c)
        y = local[mask, 1]
        m_lo = y - curve_eval(ch.lower, x)
        m_up = curve_eval(ch.upper, x) - y
        score = np.minimum(m_lo, m_up)
        idx = np.nonzero(mask)[0]
        better = score > best_score[idx]
        upd = idx[better]
        best_score[upd] = score[better]
        chord_index[upd] = ch.index
        x_local[upd] = x[better]
        y_local[upd] = y[better]
        margin_lower[upd] = m_lo[better]
        margin_upper[upd] = m_up[better]
    return ComplianceReport(chord_index=chord_index, x_local=x_local,
                            y_local=y_local, margin_lower=margin_lower,
                            margin_upper=margin_upper, tol=float(tol))
