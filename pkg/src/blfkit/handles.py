"""Kirby-calculus bookkeeping for 4-manifold handle presentations.

A presentation records (on top of a single 0-handle): the 1-handles, the
2-handles with framings, symmetric linking numbers and incidences over the
1-handles, and the 3-handles with incidences over the 2-handles.  The chain
complex condition (boundary of a boundary vanishes over the 1-handles) is
maintained by every move.

Moves: sliding a 2-handle over another, cancelling a 1-2 pair (after
implicitly sliding every other strand off the 1-handle), and cancelling a
2-3 pair when the 2-handle has become trivial.  Euler characteristic and
integral homology (Betti numbers and torsion via Smith normal form) are
available at every step; simplification scripts record them move by move.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import HandleMoveError


# -- integer linear algebra ------------------------------------------------


def smith_invariant_factors(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero invariant factors of an integer matrix (exact, no floats)."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    factors: List[int] = []
    top = 0
    while top < min(rows, cols):
        # find a nonzero pivot
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j]:
                    if pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        m[top], m[i] = m[i], m[top]
        for row in m:
            row[top], row[j] = row[j], row[top]
        # clear the pivot row and column
        dirty = False
        for i in range(top + 1, rows):
            q = m[i][top] // m[top][top]
            if q:
                for j in range(top, cols):
                    m[i][j] -= q * m[top][j]
            if m[i][top]:
                dirty = True
        for j in range(top + 1, cols):
            q = m[top][j] // m[top][top]
            if q:
                for i in range(top, rows):
                    m[i][j] -= q * m[i][top]
            if m[top][j]:
                dirty = True
        if dirty:
            continue
        factors.append(abs(m[top][top]))
        top += 1
    # enforce divisibility d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            if b % a:
                g = _gcd(a, b)
                factors[i], factors[i + 1] = g, a * b // g
                changed = True
        factors.sort()
    return factors


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# -- presentations ---------------------------------------------------------


@dataclass
class HandlePresentation:
    """Handles of a 4-manifold built on one 0-handle."""

    one_handles: List[str]
    two_handles: List[str]
    framings: Dict[str, int]
    linking: Dict[Tuple[str, str], int]
    incidence2: Dict[Tuple[str, str], int]   # (two-handle, one-handle)
    three_handles: List[str] = field(default_factory=list)
    incidence3: Dict[Tuple[str, str], int] = field(default_factory=dict)  # (three, two)

    def copy(self) -> "HandlePresentation":
        return copy.deepcopy(self)

    # -- access ------------------------------------------------------------

    def link(self, a: str, b: str) -> int:
        if a == b:
            return self.framings.get(a, 0)
        return self.linking.get((a, b), self.linking.get((b, a), 0))

    def _set_link(self, a: str, b: str, value: int) -> None:
        if a == b:
            self.framings[a] = value
            return
        self.linking.pop((b, a), None)
        if value:
            self.linking[(a, b)] = value
        else:
            self.linking.pop((a, b), None)

    def inc2(self, two: str, one: str) -> int:
        return self.incidence2.get((two, one), 0)

    def _set_inc2(self, two: str, one: str, value: int) -> None:
        if value:
            self.incidence2[(two, one)] = value
        else:
            self.incidence2.pop((two, one), None)

    def inc3(self, three: str, two: str) -> int:
        return self.incidence3.get((three, two), 0)

    def _set_inc3(self, three: str, two: str, value: int) -> None:
        if value:
            self.incidence3[(three, two)] = value
        else:
            self.incidence3.pop((three, two), None)

    def validate(self) -> None:
        for three in self.three_handles:
            for one in self.one_handles:
                total = sum(
                    self.inc3(three, two) * self.inc2(two, one)
                    for two in self.two_handles
                )
                if total:
                    raise HandleMoveError(
                        "boundary-of-boundary is nonzero over "
                        f"{one!r} for {three!r}"
                    )

    # -- moves -------------------------------------------------------------

    def slide(self, mover: str, over: str, sign: int) -> None:
        """Slide 2-handle ``mover`` over ``over`` (band sum with ``sign``)."""
        if mover == over:
            raise HandleMoveError("cannot slide a handle over itself")
        for name in (mover, over):
            if name not in self.two_handles:
                raise HandleMoveError(f"unknown 2-handle {name!r}")
        if sign not in (1, -1):
            raise HandleMoveError("slide sign must be +1 or -1")
        f_new = (
            self.framings[mover]
            + 2 * sign * self.link(mover, over)
            + self.framings[over]
        )
        for other in self.two_handles:
            if other in (mover, over):
                continue
            self._set_link(mover, other, self.link(mover, other) + sign * self.link(over, other))
        self._set_link(mover, over, self.link(mover, over) + sign * self.framings[over])
        self.framings[mover] = f_new
        for one in self.one_handles:
            self._set_inc2(mover, one, self.inc2(mover, one) + sign * self.inc2(over, one))
        for three in self.three_handles:
            self._set_inc3(three, over, self.inc3(three, over) - sign * self.inc3(three, mover))

    def cancel12(self, two: str, one: str) -> None:
        """Cancel a 2-handle running once over a 1-handle."""
        inc = self.inc2(two, one)
        if abs(inc) != 1:
            raise HandleMoveError(
                f"{two!r} runs over {one!r} {inc} times; need exactly once"
            )
        for other in list(self.two_handles):
            if other == two:
                continue
            m = self.inc2(other, one)
            while m:
                self.slide(other, two, -1 if m * inc > 0 else 1)
                m = self.inc2(other, one)
        for three in self.three_handles:
            if self.inc3(three, two):
                raise HandleMoveError(
                    "3-handle incidence did not vanish before 1-2 cancellation"
                )
        self.one_handles.remove(one)
        self.two_handles.remove(two)
        self.framings.pop(two, None)
        self.linking = {
            k: v for k, v in self.linking.items() if two not in k
        }
        self.incidence2 = {
            k: v for k, v in self.incidence2.items() if k[0] != two and k[1] != one
        }

    def cancel23(self, two: str, three: str) -> None:
        """Cancel a trivialized 2-handle against a 3-handle."""
        if self.framings.get(two):
            raise HandleMoveError(f"{two!r} still has nonzero framing")
        for other in self.two_handles:
            if other != two and self.link(two, other):
                raise HandleMoveError(f"{two!r} still links {other!r}")
        for one in self.one_handles:
            if self.inc2(two, one):
                raise HandleMoveError(f"{two!r} still runs over {one!r}")
        inc = self.inc3(three, two)
        if abs(inc) != 1:
            raise HandleMoveError(
                f"{three!r} is incident to {two!r} {inc} times; need exactly once"
            )
        for other in list(self.three_handles):
            if other == three:
                continue
            m = self.inc3(other, two)
            if m:
                for t in self.two_handles:
                    self._set_inc3(other, t, self.inc3(other, t) - m * inc * self.inc3(three, t))
        self.two_handles.remove(two)
        self.three_handles.remove(three)
        self.incidence3 = {
            k: v for k, v in self.incidence3.items() if k[0] != three and k[1] != two
        }

    # -- invariants ----------------------------------------------------------

    def euler_characteristic(self) -> int:
        return 1 - len(self.one_handles) + len(self.two_handles) - len(self.three_handles)

    def _matrix2(self) -> List[List[int]]:
        return [
            [self.inc2(two, one) for one in self.one_handles]
            for two in self.two_handles
        ]

    def _matrix3(self) -> List[List[int]]:
        return [
            [self.inc3(three, two) for two in self.two_handles]
            for three in self.three_handles
        ]

    def homology_profile(self) -> dict:
        """Betti numbers and torsion of H1, H2, H3, plus chi."""
        n1, n2, n3 = len(self.one_handles), len(self.two_handles), len(self.three_handles)
        d2 = self._matrix2()
        d3 = self._matrix3()
        f2 = smith_invariant_factors(d2) if n2 and n1 else []
        f3 = smith_invariant_factors(d3) if n3 and n2 else []
        r2, r3 = len(f2), len(f3)
        return {
            "chi": self.euler_characteristic(),
            "H1": {"betti": n1 - r2, "torsion": [d for d in f2 if d > 1]},
            "H2": {"betti": n2 - r2 - r3, "torsion": [d for d in f3 if d > 1]},
            "H3": {"betti": n3 - r3, "torsion": []},
        }


# -- scripts ---------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    kind: str            # "slide" | "cancel12" | "cancel23"
    args: Tuple


def run_script(pres: HandlePresentation, steps: Sequence[Step]) -> List[dict]:
    """Apply moves in order, validating and recording invariants."""
    pres.validate()
    trace = [{"step": "start", "profile": pres.homology_profile()}]
    for step in steps:
        if step.kind == "slide":
            pres.slide(*step.args)
        elif step.kind == "cancel12":
            pres.cancel12(*step.args)
        elif step.kind == "cancel23":
            pres.cancel23(*step.args)
        else:
            raise HandleMoveError(f"unknown move {step.kind!r}")
        pres.validate()
        trace.append({
            "step": f"{step.kind}{step.args!r}",
            "profile": pres.homology_profile(),
        })
    return trace


# -- fixtures --------------------------------------------------------------


def fibration_presentation(genus: int) -> HandlePresentation:
    """Handle picture of the modified fibration over the disk.

    1-handles: the ``2 * genus`` fiber handles ``u1..``, plus the two extra
    handles ``hr`` (paired with the round 2-handle ``R``) and ``hb``
    (threaded by the three modification 2-handles).  2-handles: the
    0-framed fiber ``F``, the round handle ``R``, and the modification
    triple ``L1, L2, L3``; ``L1`` and ``L2`` cobound, giving the single
    3-handle its incidence.
    """
    if genus < 1:
        raise HandleMoveError("need genus at least one")
    us = [f"u{i}" for i in range(1, 2 * genus + 1)]
    ones = us + ["hr", "hb"]
    twos = ["F", "R", "L1", "L2", "L3"]
    framings = {"F": 0, "R": 0, "L1": 1, "L2": 1, "L3": -2}
    linking = {("L1", "L2"): 1, ("L1", "L3"): 1, ("L2", "L3"): 1}
    incidence2 = {
        ("R", "hr"): 1,
        ("L1", "hb"): 1,
        ("L1", "u1"): 1,
        ("L2", "hb"): 1,
        ("L2", "u1"): 1,
        ("L3", "hb"): -1,
    }
    pres = HandlePresentation(
        one_handles=ones,
        two_handles=twos,
        framings=framings,
        linking=linking,
        incidence2=incidence2,
        three_handles=["t1"],
        incidence3={("t1", "L2"): 1, ("t1", "L1"): -1},
    )
    pres.validate()
    return pres


def simplification_script() -> List[Step]:
    """The move sequence reducing the picture to its standard form."""
    return [
        Step("cancel12", ("R", "hr")),
        Step("slide", ("L1", "L3", 1)),
        Step("slide", ("L2", "L3", 1)),
        Step("cancel12", ("L3", "hb")),
        Step("slide", ("L2", "L1", -1)),
        Step("cancel23", ("L2", "t1")),
    ]


def expected_final_profile(genus: int) -> dict:
    return {
        "chi": 3 - 2 * genus,
        "H1": {"betti": 2 * genus - 1, "torsion": []},
        "H2": {"betti": 1, "torsion": []},
        "H3": {"betti": 0, "torsion": []},
    }


def is_standard_form(pres: HandlePresentation, genus: int) -> bool:
    """2g one-handles, the 0-framed fiber, and one +1-framed handle on u1."""
    if len(pres.one_handles) != 2 * genus or pres.three_handles:
        return False
    if sorted(pres.two_handles) != ["F", "L1"]:
        return False
    if pres.framings["F"] != 0 or pres.framings["L1"] != 1:
        return False
    if pres.link("F", "L1") != 0:
        return False
    if any(pres.inc2("F", one) for one in pres.one_handles):
        return False
    expected = {("L1", "u1"): 1}
    got = {k: v for k, v in pres.incidence2.items() if v}
    return got == expected


def localized_presentation() -> HandlePresentation:
    """The cut-out piece around the modification, built on the hexagon curves.

    1-handles are the three edge classes of the hexagon; the 2-handles are
    the three vanishing cycles and the surgered curve, attached along their
    homology classes; a single 3-handle closes the piece off to a 4-ball.
    """
    ones = ["a", "b", "c"]
    twos = ["C1", "C2", "C3", "C"]
    incidence2 = {
        ("C1", "a"): -1, ("C1", "c"): 1,
        ("C2", "b"): -1, ("C2", "c"): -1,
        ("C3", "a"): 1, ("C3", "b"): 1,
        ("C", "a"): 1,
    }
    pres = HandlePresentation(
        one_handles=ones,
        two_handles=twos,
        framings={t: 0 for t in twos},
        linking={},
        incidence2=incidence2,
        three_handles=["t1"],
        incidence3={("t1", "C1"): 1, ("t1", "C2"): 1, ("t1", "C3"): 1},
    )
    pres.validate()
    return pres


def is_ball_profile(profile: dict) -> bool:
    return (
        profile["chi"] == 1
        and profile["H1"] == {"betti": 0, "torsion": []}
        and profile["H2"] == {"betti": 0, "torsion": []}
        and profile["H3"] == {"betti": 0, "torsion": []}
    )
