"""
Quasi-Arc Toolkit - Geometric Compatibility Oracle
--------------------------------------------------
Independent check of the closed-form compatibility rules by drawing sampled
representatives and looking for a disjoint pair.

Model
-----
The crosscap disk picture is unrolled along the angle: the Möbius strip is
the strip R × [−Y, Y] modulo the glide τ(x, y) = (x + W/2, −y). W is one full
turn, the line y = 0 is the crosscap circle (x and x + W/2 are antipodal
slots), y = ±Y is the marked boundary. The cylinder is R × [0, Y] modulo the
shift x → x + W, with y = 0 the unmarked inner boundary.

Representatives (integer coordinates, exact arithmetic)
  P(i,j)  boundary point i, lean inward to depth t, run parallel to the
          boundary, lean back up to j; t ∈ {1, 2, 3}
  C(a,b)  boundary point a, straight to a sampled crosscap slot, out of the
          antipodal slot straight to b; non-simple samples are discarded
  mu      the crosscap circle itself

A witness is a sampled pair whose interiors do not meet (shared marked
endpoints allowed). A witness proves compatibility; its absence proves
nothing.
"""

import logging
from enum import Enum
from math import lcm

import numpy as np

from ..errors import InputError, SurfaceError
from .model import QuasiArc, Surface, require_arc

logger = logging.getLogger(__name__)

_OFFSETS = (1, 2, 3)
_TRANSLATES = 8


class OracleVerdict(str, Enum):
    DISJOINT_WITNESS = "disjoint-witness"
    NO_WITNESS_FOUND = "no-witness-found"


class _Frame:
    """Integer geometry for one (surface, resolution) pair."""

    def __init__(self, surface: Surface, resolution: int):
        self.surface = surface
        self.n = surface.n
        self.resolution = resolution
        self.turn = 4 * lcm(2 * self.n, resolution)
        self.half = self.turn // 2
        self.height = 4 * self.n
        self.lean = self.turn // (4 * self.n)
        self.glide = surface.is_mobius

    def theta(self, p: int) -> int:
        return (p - 1) * self.turn // self.n

    # ── Representatives ──────────────────────────────────────────────────

    def plain(self, arc: QuasiArc) -> list[np.ndarray]:
        x0 = self.theta(arc.i)
        x1 = x0 + self.surface.span(arc.i, arc.j) * self.turn // self.n
        top = self.height
        return [_polyline([(x0, top), (x0 + self.lean, top - t),
                           (x1 - self.lean, top - t), (x1, top)])
                for t in _OFFSETS]

    def cross(self, arc: QuasiArc) -> list[np.ndarray]:
        x1 = self.theta(arc.i)
        d = (self.theta(arc.j) + self.half - x1) % self.turn
        if d > self.half:
            d -= self.turn
        drifts = (d, -d) if arc.is_loop else (d,)
        step = self.turn // self.resolution
        reps = []
        for drift in drifts:
            x2 = x1 + drift
            lo, hi = min(x1, x2), max(x1, x2)
            cores = set()
            for s in range(self.resolution):
                base = s * step
                m = (lo - base) // self.half - 1
                while base + m * self.half <= hi:
                    c = base + m * self.half
                    if lo <= c:
                        cores.add(c)
                    m += 1
            middle = x1 + drift / 2
            for c in sorted(cores, key=lambda c: (abs(c - middle), c)):
                rep = _polyline([(x1, self.height), (c, 0), (x2, -self.height)])
                if self._is_simple(rep):
                    reps.append(rep)
        return reps

    def one_sided(self) -> list[np.ndarray]:
        return [_polyline([(-4 * self.turn, 0), (5 * self.turn, 0)])]

    def representatives(self, arc: QuasiArc) -> list[np.ndarray]:
        if arc.is_one_sided:
            return self.one_sided()
        if arc.is_plain:
            return self.plain(arc)
        return self.cross(arc)

    # ── Geometry ─────────────────────────────────────────────────────────

    def translates(self, segs: np.ndarray, skip_identity: bool = False) -> np.ndarray:
        out = []
        for k in range(-_TRANSLATES, _TRANSLATES + 1):
            if skip_identity and k == 0:
                continue
            moved = segs.copy()
            if self.glide:
                moved[:, [0, 2]] += k * self.half
                if k % 2:
                    moved[:, [1, 3]] *= -1
            else:
                moved[:, [0, 2]] += k * self.turn
            out.append(moved)
        return np.concatenate(out)

    def _is_simple(self, rep: np.ndarray) -> bool:
        return not self.crossing_matrix(rep, self.translates(rep, skip_identity=True)).any()

    def crossing_matrix(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Boolean (len(a), len(b)) matrix of interior crossings."""
        p1, p2 = a[:, None, 0:2], a[:, None, 2:4]
        q1, q2 = b[None, :, 0:2], b[None, :, 2:4]
        o1 = _orient(p1, p2, q1)
        o2 = _orient(p1, p2, q2)
        o3 = _orient(q1, q2, p1)
        o4 = _orient(q1, q2, p2)
        hit = (o1 * o2 < 0) & (o3 * o4 < 0)
        hit |= (o1 == 0) & _on_segment(p1, p2, q1)
        hit |= (o2 == 0) & _on_segment(p1, p2, q2)
        hit |= (o3 == 0) & _on_segment(q1, q2, p1)
        hit |= (o4 == 0) & _on_segment(q1, q2, p2)
        shared = np.zeros(hit.shape, dtype=bool)
        for p in (p1, p2):
            on_boundary = self._on_boundary(p[..., 1])
            for q in (q1, q2):
                shared |= on_boundary & np.all(p == q, axis=-1)
        collinear = (o1 == 0) & (o2 == 0)
        return hit & ~(shared & ~collinear)

    def _on_boundary(self, y: np.ndarray) -> np.ndarray:
        if self.glide:
            return np.abs(y) == self.height
        return y == self.height


def _polyline(points) -> np.ndarray:
    pts = np.asarray(points, dtype=np.int64)
    return np.concatenate([pts[:-1], pts[1:]], axis=1)


def _orient(p, q, r) -> np.ndarray:
    cross = (q[..., 0] - p[..., 0]) * (r[..., 1] - p[..., 1]) - (q[..., 1] - p[..., 1]) * (r[..., 0] - p[..., 0])
    return np.sign(cross)


def _on_segment(p, q, r) -> np.ndarray:
    return ((np.minimum(p[..., 0], q[..., 0]) <= r[..., 0]) & (r[..., 0] <= np.maximum(p[..., 0], q[..., 0]))
            & (np.minimum(p[..., 1], q[..., 1]) <= r[..., 1]) & (r[..., 1] <= np.maximum(p[..., 1], q[..., 1])))


def oracle_compatible(surface: Surface, x: QuasiArc, y: QuasiArc, resolution: int) -> OracleVerdict:
    """Search sampled representatives of x and y for a disjoint pair."""
    if surface.is_polygon:
        raise SurfaceError("the geometric oracle models cylinders and Möbius strips only")
    if resolution < 4:
        raise InputError(f"oracle resolution must be at least 4, got {resolution}")
    require_arc(surface, x)
    require_arc(surface, y)
    if x == y:
        return OracleVerdict.DISJOINT_WITNESS
    frame = _Frame(surface, resolution)
    left = frame.representatives(x)
    right = frame.representatives(y)
    if not left or not right:
        return OracleVerdict.NO_WITNESS_FOUND
    stacked = np.concatenate([frame.translates(rep) for rep in right])
    owners = np.concatenate([np.full(len(frame.translates(rep)), idx) for idx, rep in enumerate(right)])
    for rep in left:
        crossing = frame.crossing_matrix(rep, stacked).any(axis=0)
        blocked = np.zeros(len(right), dtype=bool)
        np.logical_or.at(blocked, owners, crossing)
        if not blocked.all():
            logger.debug(f"[ORACLE] {surface}: witness for {x} / {y}")
            return OracleVerdict.DISJOINT_WITNESS
    return OracleVerdict.NO_WITNESS_FOUND
