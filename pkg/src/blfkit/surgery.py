"""Round-handle surgery: cut a surface along a simple closed curve and cap.

Cutting happens along a *coordinate* curve -- one whose word is a single
token, i.e. a curve running parallel to a glued edge whose two sides lie in
the same polygon.  The polygon splits at the two chord copies of the curve;
the half-edges fold onto each other inside each piece and the cut circles
are capped with disks (the scars).  Slot ids survive the cut, so curves and
arcs disjoint from the cut curve transfer verbatim.

``project`` pushes a curve or arc of the old surface into the new one:
first *band slides* remove any crossings with the cut curve (each reroutes
the strand over the round handle once), then every remaining passage
through the cut edge is slid across a capping disk and its token deleted.
The total number of slides is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from .curves import Arc, ClosedCurve, Item, TautConfig, is_simple
from .errors import (
    InessentialCurveError,
    ProjectionObstructedError,
    StandardizationError,
)
from .schemes import Scheme, SlotId
from .twists import TwistWord, dehn_twist


@dataclass
class SurgeryResult:
    """Outcome of cutting along a coordinate curve."""

    original: Scheme
    curve: ClosedCurve
    scheme: Scheme
    cut_slots: Tuple[SlotId, SlotId]
    scar_count: int
    standardization: Optional[TwistWord] = None


def standardize(curve: ClosedCurve, max_depth: int = 4) -> Tuple[ClosedCurve, Optional[TwistWord]]:
    """Move a simple closed curve to a one-token word by twisting, if possible.

    Returns the coordinate image and the twist word used (None when the
    curve is already coordinate).  Breadth-first search over twists along
    the coordinate curves of the scheme.
    """
    if len(curve.tokens) == 1:
        return curve, None
    scheme = curve.scheme
    generators = []
    for s, t in scheme.glued_classes:
        if scheme.polygon_of(s) == scheme.polygon_of(t):
            generators.append(ClosedCurve(scheme, (s,)))
    seen = {curve.canonical()}
    frontier: List[Tuple[ClosedCurve, TwistWord]] = [(curve, TwistWord(()))]
    for _ in range(max_depth):
        nxt = []
        for cur, word in frontier:
            for g, p in product(generators, (1, -1)):
                img = dehn_twist(cur, g, p, check_simple=False)
                key = img.canonical()
                if key in seen:
                    continue
                seen.add(key)
                w = TwistWord(((g, p),)) * word
                if len(img.tokens) == 1:
                    return img, w
                nxt.append((img, w))
        frontier = nxt
    raise StandardizationError(
        f"{curve!r} could not be moved to a coordinate position"
    )


def round_surgery(scheme: Scheme, curve: ClosedCurve) -> SurgeryResult:
    """Cut along a simple closed curve and cap the two scar circles."""
    if curve.is_null:
        raise InessentialCurveError("cannot cut along a nullhomotopic curve")
    if not is_simple(curve):
        raise InessentialCurveError("can only cut along an embedded curve")
    used = None
    if len(curve.tokens) != 1:
        curve, used = standardize(curve)
    x = curve.tokens[0]
    xbar = scheme.partner[x]
    if scheme.polygon_of(x) != scheme.polygon_of(xbar):
        raise StandardizationError("cut edge must have both sides in one polygon")
    pi = scheme.polygon_of(x)
    poly = scheme.polygons[pi]
    i, j = poly.index(x), poly.index(xbar)
    n = len(poly)
    piece1 = tuple(poly[(i + d) % n] for d in range(1, (j - i) % n))
    piece2 = tuple(poly[(j + d) % n] for d in range(1, (i - j) % n))
    if not piece1 or not piece2:
        raise InessentialCurveError(
            "cut curve bounds a disk or half-disk; surgery is trivial"
        )
    polygons = [p for k, p in enumerate(scheme.polygons) if k != pi]
    polygons.extend((piece1, piece2))
    partner = {s: t for s, t in scheme.partner.items() if s not in (x, xbar)}
    new_scheme = Scheme(polygons, partner)
    return SurgeryResult(
        original=scheme,
        curve=curve,
        scheme=new_scheme,
        cut_slots=(x, xbar),
        scar_count=2,
        standardization=used,
    )


@dataclass
class Projection:
    item: Item
    slide_count: int
    band_slides: int
    cap_slides: int


def project(sr: SurgeryResult, item: Item) -> Projection:
    """Carry a curve or arc of the cut surface into the surgered one."""
    item, band = _resolve_bands(sr, item)
    x, xbar = sr.cut_slots
    kept = [t for t in item.tokens if t not in (x, xbar)]
    caps = len(item.tokens) - len(kept)
    try:
        if isinstance(item, ClosedCurve):
            new = ClosedCurve(sr.scheme, kept)
        else:
            new = Arc(sr.scheme, item.start, kept, item.end)
    except Exception as exc:
        raise ProjectionObstructedError(
            f"projected word is not valid on the surgered surface: {exc}"
        ) from exc
    return Projection(new, band + caps, band, caps)


def _resolve_bands(sr: SurgeryResult, item: Item) -> Tuple[Item, int]:
    """Slide the item over the round handle until it misses the cut curve."""
    c = sr.curve
    scheme = sr.original
    slides = 0
    for _ in range(4 * (len(item.tokens) + 2)):
        cfg = TautConfig(scheme, {"c": c, "x": item})
        crossings = cfg.crossings("x", "c")
        if not crossings:
            return item, slides
        count = len(crossings)
        best = None
        for direction in (1, -1):
            cand = _band_move(cfg, item, c, crossings[0], direction)
            ccount = len(TautConfig(scheme, {"c": c, "x": cand}).crossings("x", "c"))
            if ccount < count and (best is None or ccount < best[0]):
                best = (ccount, cand)
        if best is None:
            raise ProjectionObstructedError(
                "no band slide reduces the crossings with the cut curve"
            )
        item = best[1]
        slides += 1
    raise ProjectionObstructedError("band resolution did not terminate")


def _band_move(cfg: TautConfig, item: Item, c: ClosedCurve, crossing, direction: int) -> Item:
    """Insert one copy of ``c`` at a single crossing (a slide over the handle)."""
    from .twists import _insertion

    k, kc, _sign = crossing
    scheme = item.scheme
    new_tokens: List[SlotId] = []
    closed = isinstance(item, ClosedCurve)
    m = len(item.tokens)
    passages = range(m) if closed else range(m + 1)
    for i in passages:
        for kcc, sign in cfg.crossings_on_passage("x", i, "c"):
            if i == k and kcc == kc:
                new_tokens.extend(_insertion(c, kcc, direction))
        if closed or i < m:
            new_tokens.append(item.tokens[i])
    if closed:
        return ClosedCurve(scheme, new_tokens)
    return Arc(scheme, item.start, new_tokens, item.end)
