"""Orientations versus pairs of a formal group law and a strict isomorphism."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from core.series import TruncatedSeries

from .law import FormalGroupLaw, LawLike, OrientationSeries, StrictIso, as_law, as_series, transport_fgl

logger = logging.getLogger(__name__)


def orientation_to_pair(F: LawLike, f: Union[OrientationSeries, TruncatedSeries]) -> StrictIso:
    """The strict iso ``f: F -> F'`` with ``F'`` the transport of *F* along *f*."""
    law = as_law(F)
    series = as_series(f)
    return StrictIso(series, law, transport_fgl(law, series))


def pair_to_orientation(iso: StrictIso) -> OrientationSeries:
    """Read the orientation back from an isomorphism: it is the iso's own series."""
    return OrientationSeries(iso.series)


@dataclass(frozen=True)
class RoundtripReport:
    forward: bool
    recovered: bool
    backward: bool

    @property
    def verdict(self) -> bool:
        return self.forward and self.recovered and self.backward


def roundtrip_report(f: Union[OrientationSeries, TruncatedSeries], F: LawLike) -> RoundtripReport:
    law = as_law(F)
    series = as_series(f)
    iso = orientation_to_pair(law, series)
    forward = iso.is_valid()
    recovered = pair_to_orientation(iso).series == series
    back = transport_fgl(iso.target, series.revert())
    backward = back.series == law.series.truncate(back.truncation)
    report = RoundtripReport(forward, recovered, backward)
    logger.debug("orientation round trip over %s: %s", law.ring, report)
    return report


def orientation_roundtrip(f: Union[OrientationSeries, TruncatedSeries], F: LawLike) -> bool:
    """True iff orientation and (law, iso) determine each other to degree N.

    Transports *F* along *f*, checks that *f* is a strict iso onto the new law
    and that it reads back unchanged, then transports back along ``f^-1``.
    """
    return roundtrip_report(f, F).verdict

