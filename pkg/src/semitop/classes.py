"""Membership of subsemimodules in the distinguished classes.

Every predicate is decided by exhaustive quantifier evaluation over the
finite carrier or the lattice. A failed decision carries a witness: element
indices under keys ``x``, ``y``, ``m``, scalar indices under ``r``, and
subsemimodule masks under ``L``, ``K``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .algebra import is_ideal
from .lattice import SubLattice
from .masks import bits, is_subset, mask_of

KINDS = (
    "proper",
    "subtractive",
    "strong",
    "maximal",
    "prime",
    "primary",
    "weakly_prime",
    "primal",
    "semiprime",
    "extraordinary",
    "strongly_irreducible",
    "irreducible",
    "completely_irreducible",
    "cyclic",
    "finitely_generated",
    "minimal",
    "minimal_prime",
)

STRONG_READING = "strong: x+y in N implies x in N and y in N (reading of the source definition)"


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.member


YES = Membership(True)


def _no(**witness) -> Membership:
    return Membership(False, witness)


@dataclass(frozen=True)
class DisSpacePoints:
    kind: str
    lattice: SubLattice = field(repr=False, compare=False)
    points: tuple[int, ...]  # lattice ids, ascending

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(self.lattice.subs[i] for i in self.points)

    def __len__(self) -> int:
        return len(self.points)


class Classifier:
    """Per-lattice predicate evaluator with the prime family cached."""

    def __init__(self, lattice: SubLattice):
        self.lattice = lattice
        self.module = lattice.module
        self.ring = lattice.module.ring
        self._colon: dict[int, int] = {}
        self._selected: dict[str, DisSpacePoints] = {}

    def colon(self, n: int) -> int:
        c = self._colon.get(n)
        if c is None:
            c = self._colon[n] = self.lattice.colon(n)
        return c

    def proper(self, n):
        return YES if n != self.lattice.top else _no(N=n)

    def subtractive(self, n):
        add = self.module.add
        members = list(bits(n))
        for x in members:
            for y in range(len(self.module)):
                if not (n >> y) & 1 and (n >> add[x][y]) & 1:
                    return _no(x=x, y=y)
        return YES

    def strong(self, n):
        add = self.module.add
        E = range(len(self.module))
        for x in E:
            for y in E:
                if (n >> add[x][y]) & 1 and not ((n >> x) & 1 and (n >> y) & 1):
                    return _no(x=x, y=y)
        return YES

    def maximal(self, n):
        if n == self.lattice.top:
            return _no(N=n)
        for k in self.lattice.subs:
            if k != n and k != self.lattice.top and is_subset(n, k):
                return _no(K=k)
        return YES

    def _prime_like(self, n, scalar_ok):
        if n == self.lattice.top:
            return _no(N=n)
        act = self.module.action
        for r in range(len(self.ring)):
            if scalar_ok(r):
                continue
            for m in range(len(self.module)):
                if (n >> act[r][m]) & 1 and not (n >> m) & 1:
                    return _no(r=r, m=m)
        return YES

    def prime(self, n):
        c = self.colon(n)
        return self._prime_like(n, lambda r: (c >> r) & 1)

    def primary(self, n):
        c = self.colon(n)
        R = self.ring
        # r, r^2, ... repeat within |R| steps
        return self._prime_like(n, lambda r: any((c >> R.power(r, e)) & 1 for e in range(1, len(R) + 1)))

    def weakly_prime(self, n):
        if n == self.lattice.top:
            return _no(N=n)
        c = self.colon(n)
        act = self.module.action
        zero = self.module.zero
        for r in range(len(self.ring)):
            if (c >> r) & 1:
                continue
            for m in range(len(self.module)):
                v = act[r][m]
                if v != zero and (n >> v) & 1 and not (n >> m) & 1:
                    return _no(r=r, m=m)
        return YES

    def prime_to(self, n) -> int:
        act = self.module.action
        return mask_of(
            r
            for r in range(len(self.ring))
            if all(not (n >> act[r][m]) & 1 or (n >> m) & 1 for m in range(len(self.module)))
        )

    def primal(self, n):
        if n == self.lattice.top:
            return _no(N=n)
        rest = ((1 << len(self.ring)) - 1) & ~self.prime_to(n)
        return YES if is_ideal(self.ring, rest) else _no(non_prime_to=rest)

    @cached_property
    def primes(self) -> tuple[int, ...]:
        return tuple(s for s in self.lattice.subs if self.prime(s))

    def radical(self, n) -> int:
        return self.lattice.radical(n, self.primes)

    def semiprime(self, n):
        above = [p for p in self.primes if is_subset(n, p)]
        if not above:
            return _no(primes_above=0)
        meet = self.lattice.intersect(above)
        return YES if meet == n else _no(L=meet)

    @cached_property
    def semiprimes(self) -> tuple[int, ...]:
        return tuple(s for s in self.lattice.subs if self.semiprime(s))

    def extraordinary(self, n):
        d = self.prime(n)
        if not d:
            return d
        return self._intersection_prime(n, self.semiprimes)

    def _intersection_prime(self, n, family):
        for l, k in itertools.combinations_with_replacement(family, 2):
            if is_subset(l & k, n) and not is_subset(l, n) and not is_subset(k, n):
                return _no(L=l, K=k)
        return YES

    def strongly_irreducible(self, n):
        return self._intersection_prime(n, self.lattice.subs)

    def irreducible(self, n):
        above = [k for k in self.lattice.subs if k != n and is_subset(n, k)]
        for l, k in itertools.combinations(above, 2):
            if l & k == n:
                return _no(L=l, K=k)
        return YES

    def completely_irreducible(self, n):
        # a set of strict supersets meets to N iff all strict supersets do
        above = [k for k in self.lattice.subs if k != n and is_subset(n, k)]
        return YES if self.lattice.intersect(above) != n else _no(L=n)

    def cyclic(self, n):
        gen = self.module.generate
        for x in bits(n):
            if gen(1 << x) == n:
                return Membership(True, {"x": x})
        return _no(N=n)

    def finitely_generated(self, n):
        # greedy generating set as the certificate
        gen = self.module.generate
        got = self.module.bottom
        chosen = []
        for x in bits(n):
            if not (got >> x) & 1:
                chosen.append(x)
                got = gen(got | 1 << x)
        return Membership(got == n, {"generators": chosen})

    def minimal(self, n):
        if n == self.lattice.bottom:
            return _no(N=n)
        for k in self.lattice.subs:
            if k != n and k != self.lattice.bottom and is_subset(k, n):
                return _no(K=k)
        return YES

    def minimal_prime(self, n):
        d = self.minimal(n)
        return self.prime(n) if d else d

    def decide(self, n: int, kind: str) -> Membership:
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        return getattr(self, kind)(n)

    def select(self, kind: str) -> DisSpacePoints:
        hit = self._selected.get(kind)
        if hit is None:
            top = self.lattice.top
            ids = tuple(i for i, s in enumerate(self.lattice.subs) if s != top and self.decide(s, kind))
            hit = self._selected[kind] = DisSpacePoints(kind, self.lattice, ids)
        return hit


def classifier(lattice: SubLattice) -> Classifier:
    c = getattr(lattice, "_classifier", None)
    if c is None:
        c = Classifier(lattice)
        lattice._classifier = c
    return c


def is_in_class(n: int, kind: str, lattice: SubLattice) -> Membership:
    """Definitional membership. ``select_class`` additionally drops ``M``."""
    return classifier(lattice).decide(n, kind)


def prime_to_set(n: int, lattice: SubLattice) -> int:
    """``Prm(N)`` as a scalar mask."""
    return classifier(lattice).prime_to(n)


def select_class(kind: str, lattice: SubLattice) -> DisSpacePoints:
    return classifier(lattice).select(kind)


def classify_matrix(lattice: SubLattice, kinds=KINDS) -> dict[str, list[bool]]:
    c = classifier(lattice)
    return {k: [bool(c.decide(s, k)) for s in lattice.subs] for k in kinds}
