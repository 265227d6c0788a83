"""
Quasi-Arc Toolkit - Sphere Certificates
---------------------------------------
A shellable pseudo-manifold without boundary is a PL-sphere. The certificate
records the three hypotheses and whether all of them were verified; the
topological conclusion itself is not re-derived here.
"""

import json
import logging
from dataclasses import asdict, dataclass

from ..errors import OrderMismatchError
from ..shelling.order import ShellingOrder
from ..shelling.verify import verify_shelling_mutation, verify_shelling_topological
from .core import DEFAULT_MAX_FACES, Complex, euler_characteristic, is_pseudomanifold, is_pure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SphereCertificate:
    surface: str
    granted: bool
    pure: bool
    pseudomanifold: bool
    shelling_verified: bool
    dimension: int
    facets: int
    euler_characteristic: int | None = None
    failing_index: int | None = None
    failing_reason: str = ""

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict()) + "\n"


def certify_sphere(cx: Complex, order: ShellingOrder, topological: bool = False,
                   max_faces: int | None = DEFAULT_MAX_FACES) -> SphereCertificate:
    """Check purity, the pseudo-manifold property and the given shelling.

    With `topological` the order must also pass the face-level verifier.
    `max_faces=None` skips the Euler characteristic.
    """
    ordered = {frozenset(f) for f in order.facets}
    if len(ordered) != len(order.facets) or ordered != {frozenset(f) for f in cx.facets}:
        raise OrderMismatchError(f"{cx.surface}: order does not cover exactly the {len(cx)} facets")
    pure = is_pure(cx)
    pseudo = is_pseudomanifold(cx)
    verdict = verify_shelling_mutation(order)
    if verdict.ok and topological:
        verdict = verify_shelling_topological(order)
    chi = euler_characteristic(cx, max_faces) if max_faces else None
    granted = pure and pseudo and verdict.ok
    cert = SphereCertificate(
        surface=str(cx.surface),
        granted=granted,
        pure=pure,
        pseudomanifold=pseudo,
        shelling_verified=verdict.ok,
        dimension=cx.rank - 1,
        facets=len(cx),
        euler_characteristic=chi,
        failing_index=verdict.k,
        failing_reason=verdict.reason,
    )
    level = logging.INFO if granted else logging.WARNING
    logger.log(level, f"[CERT] {cx.surface}: granted={granted} dimension={cert.dimension}")
    return cert
