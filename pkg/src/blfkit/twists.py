"""Dehn twists and their compositions, acting on words and on homology.

A right-handed (positive) twist along a simple closed curve ``c`` reroutes
every strand crossing ``c``: at a crossing of sign ``s`` the strand picks
up a copy of ``c`` traversed in direction ``s``.  On homology this is the
transvection ``x -> x + <x, c> c``.  A left-handed twist is the inverse.

Relabelings (scheme symmetries) act on curves token-wise; conjugation of a
twist by a relabeling is the twist along the relabeled curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from .curves import (
    Arc,
    ClosedCurve,
    Item,
    TautConfig,
    homology_basis,
    homology_class,
    intersection_form,
    pair_homology,
    require_simple,
)
from .errors import CurveError
from .schemes import Relabeling, Scheme, SlotId


def _insertion(c: ClosedCurve, kc: int, direction: int) -> List[SlotId]:
    """Tokens picked up when a strand follows ``c`` once around.

    The crossing sits on passage ``kc`` of ``c``; following forward first
    exits through ``c.tokens[kc]``, following backward first exits through
    the partner of the previous token.
    """
    rot = list(c.tokens[kc:] + c.tokens[:kc])
    if direction > 0:
        return rot
    partner = c.scheme.partner
    return [partner[t] for t in reversed(rot)]


def dehn_twist(x: Item, c: ClosedCurve, power: int = 1, *, check_simple: bool = True) -> Item:
    """Apply ``power`` right-handed twists along ``c`` (negative = left)."""
    if power == 0:
        return x
    if c.is_null:
        return x
    if check_simple:
        require_simple(c)
    scheme = x.scheme
    if isinstance(x, ClosedCurve) and x.is_null:
        return x
    cfg = TautConfig(scheme, {"c": c, "x": x})
    direction = 1 if power > 0 else -1
    reps = abs(power)
    new_tokens: List[SlotId] = []
    closed = isinstance(x, ClosedCurve)
    m = len(x.tokens)
    passages = range(m) if closed else range(m + 1)
    for k in passages:
        for kc, sign in cfg.crossings_on_passage("x", k, "c"):
            ins = _insertion(c, kc, sign * direction)
            for _ in range(reps):
                new_tokens.extend(ins)
        if closed or k < m:
            new_tokens.append(x.tokens[k])
    if closed:
        return ClosedCurve(scheme, new_tokens)
    return Arc(scheme, x.start, new_tokens, x.end)


@dataclass(frozen=True)
class TwistWord:
    """A composition of twists, listed outermost first.

    ``TwistWord(((c3, 1), (c2, 1), (c1, 1)))`` applied to ``x`` computes
    ``T_c3(T_c2(T_c1(x)))``: the rightmost factor acts first.
    """

    steps: Tuple[Tuple[ClosedCurve, int], ...]

    @staticmethod
    def of(*steps: Tuple[ClosedCurve, int]) -> "TwistWord":
        return TwistWord(tuple(steps))

    def apply(self, x: Item) -> Item:
        for c, p in reversed(self.steps):
            x = dehn_twist(x, c, p)
        return x

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple((c, -p) for c, p in reversed(self.steps)))

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.steps + other.steps)

    def act_on_homology(self, scheme: Scheme) -> List[List[int]]:
        """The composite transvection matrix (columns = images of the basis)."""
        form = intersection_form(scheme)
        n = len(form)
        mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for c, p in reversed(self.steps):
            vc = homology_class(scheme, c.tokens)
            step = transvection(form, vc, p)
            mat = _matmul(step, mat)
        return mat


def transvection(form: List[List[int]], vc: Sequence[int], power: int) -> List[List[int]]:
    """Matrix of ``x -> x + power * <x, vc> vc`` in the edge-class basis."""
    n = len(form)
    mat = []
    for i in range(n):
        e = [1 if j == i else 0 for j in range(n)]
        coef = power * pair_homology(form, e, vc)
        mat.append([e[j] + coef * vc[j] for j in range(n)])
    return [[mat[i][j] for i in range(n)] for j in range(n)]  # columns = images


def _matmul(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def apply_matrix(mat: List[List[int]], v: Sequence[int]) -> Tuple[int, ...]:
    n = len(mat)
    return tuple(sum(mat[i][k] * v[k] for k in range(n)) for i in range(n))


def relabel_curve(r: Relabeling, x: Item) -> Item:
    m = r.as_dict()
    if isinstance(x, ClosedCurve):
        return ClosedCurve(x.scheme, tuple(m[t] for t in x.tokens))
    from .curves import Anchor

    return Arc(
        x.scheme,
        Anchor(m[x.start.slot], x.start.index),
        tuple(m[t] for t in x.tokens),
        Anchor(m[x.end.slot], x.end.index),
    )
