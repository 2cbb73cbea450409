"""Interval bookkeeping for chases through long exact sequences.

Given an exact complex of sheaves

    0 -> T_0 -> T_1 -> ... -> T_m -> target -> 0

whose terms' cohomology is (partially) known, peeling off the images
B_i = im(T_i -> T_{i+1}) produces short exact sequences

    0 -> B_{i-1} -> T_i -> B_i -> 0,      B_{-1} = 0,  B_m = target,

and each long exact cohomology sequence imposes, for every degree q,

    h^q(T_i) = h^q(B_{i-1}) - r_i[q-1] + h^q(B_i) - r_i[q],

where r_i[q] is the rank of the connecting map H^q(B_i) -> H^{q+1}(B_{i-1}),
bounded by both endpoints.  Keeping every h and every connecting rank as an
integer interval and narrowing all of them to a fixpoint preserves the
coupling between degrees that naive bound-chasing loses; whatever remains
undetermined stays an honest interval.  This is nothing but exactness
bookkeeping: no spectral-sequence differential is ever guessed.
"""

from __future__ import annotations

from dataclasses import dataclass


class ChaseError(Exception):
    """Raised when the constraints become infeasible (a modeling bug or an
    inconsistent seed, never a legitimate run)."""


@dataclass(frozen=True)
class Iv:
    """Closed integer interval [lo, hi]; hi may be None for unbounded."""

    lo: int
    hi: int | None

    @property
    def exact(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    def meet(self, lo: int, hi: int | None) -> "Iv":
        nlo = max(self.lo, lo)
        if self.hi is None:
            nhi = hi
        elif hi is None:
            nhi = self.hi
        else:
            nhi = min(self.hi, hi)
        if nhi is not None and nlo > nhi:
            raise ChaseError(f"empty interval: [{self.lo},{self.hi}] meet [{lo},{hi}]")
        return Iv(nlo, nhi)

    def __repr__(self) -> str:
        if self.exact:
            return str(self.lo)
        return f"[{self.lo},{'inf' if self.hi is None else self.hi}]"


EXACT_ZERO = Iv(0, 0)


def exact(n: int) -> Iv:
    return Iv(n, n)


def unknown() -> Iv:
    return Iv(0, None)


def _add(*vals) -> tuple[int, int | None]:
    lo = sum(v.lo for v in vals)
    hi = 0
    for v in vals:
        if v.hi is None:
            return lo, None
        hi += v.hi
    return lo, hi


def _sub(a: Iv, b: Iv) -> tuple[int, int | None]:
    lo = a.lo - (0 if b.hi is None else b.hi)  # a.lo - b.hi, -inf clamped later
    hi = None if a.hi is None else a.hi - b.lo
    if b.hi is None:
        lo = -(10**18)
    return lo, hi


class _Vec:
    """Interval vector over degrees 0..top; exact zero outside."""

    __slots__ = ("top", "vals")

    def __init__(self, top: int, vals=None):
        self.top = top
        self.vals = list(vals) if vals is not None else [unknown() for _ in range(top + 1)]

    def __getitem__(self, q: int) -> Iv:
        if 0 <= q <= self.top:
            return self.vals[q]
        return EXACT_ZERO

    def meet(self, q: int, lo, hi) -> bool:
        if not (0 <= q <= self.top):
            # outside the window everything is exactly zero; a positive lower
            # bound there means the model is inconsistent
            if lo > 0 or (hi is not None and hi < 0):
                raise ChaseError(f"nonzero forced outside degree window at q={q}")
            return False
        lo = max(lo, 0)
        new = self.vals[q].meet(lo, hi)
        if new != self.vals[q]:
            self.vals[q] = new
            return True
        return False


def solve_exact_complex(terms, target_seed, top: int):
    """Narrow the cohomology of the target of an exact complex.

    ``terms``: list of interval vectors (dicts q -> int, or lists of Iv) for
    T_0 .. T_m, left to right, T_m mapping onto the target.
    ``target_seed``: dict q -> Iv (or int) of already-established target
    entries; missing degrees start unknown.
    ``top``: highest cohomological degree carried (sheaf dimension bound).

    Returns the narrowed target as a list of Iv, indices 0..top.
    """
    tvecs = [_to_vec(t, top) for t in terms]
    m = len(tvecs) - 1
    target = _Vec(top)
    if target_seed:
        for q, v in target_seed.items():
            iv = v if isinstance(v, Iv) else exact(v)
            if 0 <= q <= top:
                target.meet(q, iv.lo, iv.hi)
            elif iv.lo > 0:
                raise ChaseError("seed outside degree window")
    if m < 0:
        for q in range(top + 1):
            target.meet(q, 0, 0)
        return target.vals

    # images B_0..B_m; B_m is the target itself
    images = [_Vec(top) for _ in range(m)] + [target]
    # initial finite upper bounds, telescoped from the left end
    for q in range(top + 1):
        ub = tvecs[0][q].hi
        images[0].meet(q, 0, ub)
    for i in range(1, m + 1):
        for q in range(top + 1):
            left = images[i - 1][q + 1].hi
            own = tvecs[i][q].hi
            ub = None if (left is None or own is None) else left + own
            images[i].meet(q, 0, ub)
    # connecting ranks r_i[q]: H^q(B_i) -> H^{q+1}(B_{i-1}), i = 1..m
    ranks = {i: _Vec(top) for i in range(1, m + 1)}
    for i in range(1, m + 1):
        for q in range(top + 1):
            ranks[i].meet(q, 0, None)

    def pass_once() -> bool:
        changed = False
        # B_0 = T_0 exactly (the complex starts with an injection)
        for q in range(top + 1):
            iv = tvecs[0][q]
            changed |= images[0].meet(q, iv.lo, iv.hi)
            changed |= tvecs[0].meet(q, images[0][q].lo, images[0][q].hi)
        for i in range(1, m + 1):
            A, C, R, T = images[i - 1], images[i], ranks[i], tvecs[i]
            for q in range(top + 1):
                # h^q(T_i) = A[q] - R[q-1] + C[q] - R[q]
                t, a, c, r0, r1 = T[q], A[q], C[q], R[q - 1], R[q]
                lo, hi = _add(a, c)
                s_lo, s_hi = _add(r0, r1)
                # T = a + c - (r0 + r1)
                t_lo = lo - (10**18 if s_hi is None else s_hi)
                t_hi = None if hi is None else hi - s_lo
                changed |= T.meet(q, max(t_lo, 0), t_hi)
                t = T[q]
                # C = t - a + r0 + r1
                lo1, hi1 = _add(t, r0, r1)
                lo2, hi2 = _sub(Iv(lo1, hi1), a)
                changed |= C.meet(q, lo2, hi2)
                # A = t - c + r0 + r1
                lo2, hi2 = _sub(Iv(lo1, hi1), c)
                changed |= A.meet(q, lo2, hi2)
                # r1 = a + c - t - r0 ; r0 = a + c - t - r1
                lo3, hi3 = _add(a, c)
                lo4, hi4 = _sub(Iv(lo3, hi3), t)
                lo5, hi5 = _sub(Iv(lo4, hi4), r0)
                if 0 <= q <= top:
                    changed |= R.meet(q, lo5, hi5)
                lo6, hi6 = _sub(Iv(lo4, hi4), r1)
                if 0 <= q - 1 <= top:
                    changed |= R.meet(q - 1, lo6, hi6)
                # rank bounds from the map's two ends
                cq, aq1 = C[q], A[q + 1]
                cap = None
                if cq.hi is not None:
                    cap = cq.hi
                if aq1.hi is not None:
                    cap = aq1.hi if cap is None else min(cap, aq1.hi)
                changed |= R.meet(q, 0, cap)
        return changed

    guard = 0
    while pass_once():
        guard += 1
        assert guard < 10000, "chase failed to reach a fixpoint"
    return target.vals


def _to_vec(t, top: int) -> _Vec:
    if isinstance(t, _Vec):
        return t
    vec = _Vec(top)
    if isinstance(t, dict):
        for q in range(top + 1):
            v = t.get(q, 0)
            iv = v if isinstance(v, Iv) else exact(v)
            vec.meet(q, iv.lo, iv.hi)
        for q, v in t.items():
            iv = v if isinstance(v, Iv) else exact(v)
            if (q < 0 or q > top) and iv.lo > 0:
                raise ChaseError(f"term cohomology outside degree window: q={q}")
    else:
        vals = list(t)
        assert len(vals) == top + 1
        for q, v in enumerate(vals):
            iv = v if isinstance(v, Iv) else exact(v)
            vec.meet(q, iv.lo, iv.hi)
    return vec


def ses_middle(left, right, top: int):
    """Interval cohomology of B in 0 -> A -> B -> C -> 0 given A and C.

    ``left`` / ``right`` are interval vectors (dict or list) for A and C.
    h^q(B) = A[q] - r[q-1] + C[q] - r[q] with r[q] <= min(C[q], A[q+1]).
    """
    A = _to_vec(left, top)
    C = _to_vec(right, top)
    out = []
    for q in range(top + 1):
        a, c = A[q], C[q]
        r0_cap = _cap(C[q - 1], A[q])
        r1_cap = _cap(C[q], A[q + 1])
        lo_sum, hi_sum = _add(a, c)
        lo = lo_sum - ((r0_cap if r0_cap is not None else 10**18)
                       + (r1_cap if r1_cap is not None else 10**18))
        out.append(Iv(max(lo, 0), hi_sum))
    return out


def _cap(c: Iv, a: Iv) -> int | None:
    if c.hi is None and a.hi is None:
        return None
    if c.hi is None:
        return a.hi
    if a.hi is None:
        return c.hi
    return min(c.hi, a.hi)
