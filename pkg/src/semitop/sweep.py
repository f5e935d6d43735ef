"""Exhaustive enumeration of small semirings and semimodules.

Tables are filled cell by cell; after every assignment each axiom instance
whose cells are all known is checked, and the branch is cut on the first
violation. Index 0 is always the additive identity and index 1 the
multiplicative identity of the semiring, so results are labelled structures
(isomorphic copies are kept).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

from .algebra import Semimodule, Semiring, verify_semimodule, verify_semiring


def _backtrack(cells, domain, consistent, table):
    """Yield once per complete consistent assignment of ``cells`` (mutates ``table``)."""
    k = len(cells)

    def go(i):
        if i == 0 and not consistent(table):
            return
        if i == k:
            yield table
            return
        for v in domain:
            for cell in cells[i]:
                table[cell] = v
            if consistent(table):
                yield from go(i + 1)
        for cell in cells[i]:
            table[cell] = None

    yield from go(0)


def _valid(structure):
    # final exhaustive check; pruning only sees instances touching free cells
    rep = verify_semiring(structure) if isinstance(structure, Semiring) else verify_semimodule(structure)
    if rep:
        yield structure


def _comm_monoid_cells(size):
    # symmetric pairs of non-identity elements share one decision
    return [((a, b), (b, a)) if a != b else ((a, a),) for a, b in itertools.combinations_with_replacement(range(1, size), 2)]


def _assoc_ok(t, size):
    for a in range(size):
        for b in range(size):
            ab = t.get((a, b))
            if ab is None:
                continue
            for c in range(size):
                bc = t.get((b, c))
                if bc is None:
                    continue
                lhs, rhs = t.get((ab, c)), t.get((a, bc))
                if lhs is not None and rhs is not None and lhs != rhs:
                    return False
    return True


def _identity_table(size, ident):
    t = {}
    for a in range(size):
        t[(ident, a)] = a
        t[(a, ident)] = a
    return t


def semirings(size: int) -> Iterator[Semiring]:
    """All commutative semirings on ``0..size-1`` with 0 = zero and 1 = one."""
    if size < 2:
        return
    E = range(size)
    add = _identity_table(size, 0)
    for _ in _backtrack(_comm_monoid_cells(size), E, lambda t: _assoc_ok(t, size), add):
        add_fixed = dict(add)
        mul = _identity_table(size, 1)
        for a in E:
            mul[(0, a)] = mul[(a, 0)] = 0
        cells = [((a, b), (b, a)) if a != b else ((a, a),) for a, b in itertools.combinations_with_replacement(range(2, size), 2)]

        def ok(t, add=add_fixed):
            if not _assoc_ok(t, size):
                return False
            for a in E:
                for b in E:
                    for c in E:
                        ab, ac = t.get((a, b)), t.get((a, c))
                        if ab is None or ac is None:
                            continue
                        lhs = t.get((a, add[(b, c)]))
                        if lhs is not None and lhs != add[(ab, ac)]:
                            return False
            return True

        for m in _backtrack(cells, E, ok, mul):
            yield from _valid(
                Semiring(
                    tuple(str(i) for i in E),
                    tuple(tuple(add_fixed[(a, b)] for b in E) for a in E),
                    tuple(tuple(m[(a, b)] for b in E) for a in E),
                    0,
                    1,
                )
            )


def semimodules(ring: Semiring, size: int) -> Iterator[Semimodule]:
    """All semimodules over ``ring`` on ``0..size-1`` with 0 as zero."""
    n = len(ring)
    E = range(size)
    S = range(n)
    add = _identity_table(size, 0)
    for _ in _backtrack(_comm_monoid_cells(size), E, lambda t: _assoc_ok(t, size), add):
        addf = dict(add)
        act: dict = {}
        for x in E:
            act[(ring.zero, x)] = 0
            act[(ring.one, x)] = x
        for r in S:
            act[(r, 0)] = 0
        cells = [((r, x),) for r in S if r not in (ring.zero, ring.one) for x in range(1, size)]

        def ok(t, add=addf):
            for r in S:
                for x in E:
                    rx = t.get((r, x))
                    if rx is None:
                        continue
                    for s in S:
                        sx = t.get((s, x))
                        if sx is not None:
                            v = t.get((ring.add[r][s], x))
                            if v is not None and v != add[(rx, sx)]:
                                return False
                        sv = t.get((s, rx))
                        if sv is not None:
                            v = t.get((ring.mul[s][r], x))
                            if v is not None and v != sv:
                                return False
                    for y in E:
                        ry = t.get((r, y))
                        v = t.get((r, add[(x, y)]))
                        if ry is not None and v is not None and v != add[(rx, ry)]:
                            return False
            return True

        for a in _backtrack(cells, E, ok, act):
            yield from _valid(
                Semimodule(
                    ring,
                    tuple(str(i) for i in E),
                    tuple(tuple(addf[(x, y)] for y in E) for x in E),
                    0,
                    tuple(tuple(a[(r, x)] for x in E) for r in S),
                )
            )


@dataclass(frozen=True)
class SweepSpec:
    max_ring: int = 2
    max_module: int = 4
    min_ring: int = 2
    min_module: int = 1

    @classmethod
    def parse(cls, text: str) -> "SweepSpec":
        """Parse ``"r<=2,m<=4"``; ``=`` fixes a size exactly."""
        kw = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            m = re.fullmatch(r"([rm])\s*(<=|=)\s*(\d+)", part)
            if not m:
                raise ValueError(f"bad sweep bound {part!r}; expected e.g. 'r<=2,m<=4'")
            which, op, val = m.group(1), m.group(2), int(m.group(3))
            key = "ring" if which == "r" else "module"
            kw[f"max_{key}"] = val
            if op == "=":
                kw[f"min_{key}"] = val
        return cls(**kw)

    def __str__(self) -> str:
        return f"r<={self.max_ring},m<={self.max_module}"


def sweep(spec: SweepSpec) -> Iterator[tuple[str, Semimodule]]:
    """Deterministic stream of ``(name, module)``; names encode the position."""
    for rsize in range(max(spec.min_ring, 2), spec.max_ring + 1):
        for ri, ring in enumerate(semirings(rsize)):
            for msize in range(spec.min_module, spec.max_module + 1):
                for mi, module in enumerate(semimodules(ring, msize)):
                    yield f"sweep/R{rsize}.{ri}/M{msize}.{mi}", module
