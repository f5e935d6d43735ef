"""Pure-Python kernels. Reference backend and fallback for ``_kernels``.

Tables are flat row-major sequences: ``add[x*m + y]`` and ``act[r*m + x]``.
"""

from __future__ import annotations

from typing import Sequence

from .errors import CapExceeded


def closure(add: Sequence[int], act: Sequence[int], m: int, n: int, zero: int, seed: int) -> int:
    """Least subset containing ``seed`` and zero closed under add and action."""
    mask = seed | (1 << zero)
    members = []
    s = mask
    while s:
        low = s & -s
        members.append(low.bit_length() - 1)
        s ^= low
    i = 0
    while i < len(members):
        x = members[i]
        for r in range(n):
            y = act[r * m + x]
            if not (mask >> y) & 1:
                mask |= 1 << y
                members.append(y)
        row = x * m
        for j in range(i + 1):
            y = add[row + members[j]]
            if not (mask >> y) & 1:
                mask |= 1 << y
                members.append(y)
        i += 1
    return mask


def subsemimodules(add: Sequence[int], act: Sequence[int], m: int, n: int, zero: int, cap: int) -> list[int]:
    """All subsemimodules: cyclic closures, then closed under pairwise sums."""
    cyclic = sorted({closure(add, act, m, n, zero, 1 << x) for x in range(m)})
    seen = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for s in frontier:
            for c in cyclic:
                if c & ~s == 0:
                    continue
                t = closure(add, act, m, n, zero, s | c)
                if t not in seen:
                    seen.add(t)
                    if len(seen) > cap:
                        raise CapExceeded(f"more than {cap} subsemimodules")
                    nxt.append(t)
        frontier = nxt
    return sorted(seen)


def union_closure(masks: Sequence[int], cap: int) -> list[int]:
    """All unions of finite subfamilies (the empty union included)."""
    gens = sorted(set(masks))
    seen = {0}
    seen.update(gens)
    frontier = list(seen)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = s | g
                if t not in seen:
                    seen.add(t)
                    if len(seen) > cap:
                        raise CapExceeded(f"more than {cap} sets in union closure")
                    nxt.append(t)
        frontier = nxt
    return sorted(seen)


def intersection_closure(masks: Sequence[int], full: int, cap: int) -> list[int]:
    """All intersections of finite subfamilies (the empty one is ``full``)."""
    gens = sorted(set(masks))
    seen = {full}
    seen.update(gens)
    frontier = list(seen)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = s & g
                if t not in seen:
                    seen.add(t)
                    if len(seen) > cap:
                        raise CapExceeded(f"more than {cap} sets in intersection closure")
                    nxt.append(t)
        frontier = nxt
    return sorted(seen)


def up_masks(subs: Sequence[int], points: Sequence[int]) -> list[int]:
    """For each subset ``s`` the point mask ``{i | s <= points[i]}``."""
    out = []
    for s in subs:
        v = 0
        for i, p in enumerate(points):
            if s & ~p == 0:
                v |= 1 << i
        out.append(v)
    return out
