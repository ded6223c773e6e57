"""Shared record type for sampled plot data."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CurveRecord:
    """One sampled point; consecutive records with the same curve_id in a
    stream form a polyline."""

    curve_id: int
    kind: str          # orbit | transverse | arrow | future_past
    transform: str     # direct | cayley_op | cayley1_op | cayley_point | cayley1_point
    u: float
    v: float
    du: float
    dv: float
    color_grade: float
    pen_width_hint: float


FIELDS = (
    "curve_id",
    "kind",
    "transform",
    "u",
    "v",
    "du",
    "dv",
    "color_grade",
    "pen_width_hint",
)
