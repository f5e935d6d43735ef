"""The closed-subbasis topology on a point set of subsemimodules.

Points are indexed ``0..p-1`` in lattice order and point sets are ``int``
masks over those indices. The subbasis consists of the up-sets
``V(N) = {L in points | N <= L}`` for every subsemimodule ``N``; the closed
basis is their finite unions and the closed sets are intersections of basis
sets. Closed sets are materialised when ``p <= EAGER_POINTS``; otherwise the
queries below work from the subbasis directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .classes import DisSpacePoints, select_class
from .errors import CapExceeded
from .lattice import SubLattice
from .masks import bits, is_subset

EAGER_POINTS = 20
DEFAULT_MAX_CLOSED = 1 << 20


@dataclass(frozen=True)
class Separation:
    t0: bool
    t1: bool


@dataclass(frozen=True)
class Connectivity:
    connected: bool
    subbasis_strongly_disconnects: bool
    basis_strongly_disconnects: bool
    subbasis_witness: tuple[int, int] | None = None
    basis_witness: tuple[int, int] | None = None
    separation: tuple[int, int] | None = None


@dataclass(frozen=True)
class SccResult:
    holds: bool
    witness: int | None = None  # a proper N with empty V(N)


class SubbasisSpace:
    def __init__(
        self,
        points: DisSpacePoints,
        eager_points: int = EAGER_POINTS,
        max_closed: int = DEFAULT_MAX_CLOSED,
    ):
        self.points = points
        self.lattice: SubLattice = points.lattice
        self.kind = points.kind
        self.point_masks = points.masks
        self.n = len(self.point_masks)
        self.full = (1 << self.n) - 1
        self.subbasis = tuple(kernels.up_masks(self.lattice.subs, self.point_masks))
        self.eager = self.n <= eager_points
        self.max_closed = max_closed
        if self.eager:
            self.basis  # noqa: B018  materialise now so caps trip at build time
            self.closed_sets

    # ---------------------------------------------------------- family

    @cached_property
    def subbasis_family(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.subbasis)))

    @cached_property
    def basis(self) -> tuple[int, ...]:
        if not self.eager:
            raise CapExceeded(f"{self.n} points: basis is not materialised beyond {EAGER_POINTS}")
        return tuple(kernels.union_closure(self.subbasis_family, self.max_closed))

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        if not self.eager:
            raise CapExceeded(f"{self.n} points: closed sets are not materialised beyond {EAGER_POINTS}")
        fam = kernels.intersection_closure(self.basis, self.full, self.max_closed)
        return tuple(sorted(set(fam) | {0, self.full}))

    @cached_property
    def _closed_lookup(self) -> frozenset:
        return frozenset(self.closed_sets)

    def is_closed(self, s: int) -> bool:
        if self.eager:
            return s in self._closed_lookup
        return self.closure(s) == s

    # ---------------------------------------------------------- V and omega

    def v_set(self, n: int) -> int:
        """``V(S)`` for any element subset ``S`` (not only subsemimodules)."""
        out = 0
        for i, p in enumerate(self.point_masks):
            if n & ~p == 0:
                out |= 1 << i
        return out

    def v(self, sub_id: int) -> int:
        return self.subbasis[sub_id]

    def omega(self, n: int) -> int:
        """Meet of the points above ``N``; ``M`` when there are none."""
        out = self.lattice.top
        for i in bits(self.v_set(n)):
            out &= self.point_masks[i]
        return out

    def intersection_of_points(self) -> int:
        return self.lattice.intersect(self.point_masks)

    # ---------------------------------------------------------- closure

    @cached_property
    def _avoiding(self) -> tuple[int, ...]:
        # for each point x: union of the subbasis sets that miss x
        out = []
        for x in range(self.n):
            u = 0
            for v in self.subbasis_family:
                if not (v >> x) & 1:
                    u |= v
            out.append(u)
        return tuple(out)

    def closure(self, s: int) -> int:
        """Least closed set containing ``s``.

        ``x`` lies outside the closure exactly when some finite union of
        subbasis sets covers ``s`` and misses ``x``; the largest such union
        is the union of every subbasis set missing ``x``.
        """
        out = 0
        for x in range(self.n):
            if s & ~self._avoiding[x]:
                out |= 1 << x
        return out

    @cached_property
    def point_closures(self) -> tuple[int, ...]:
        return tuple(self.closure(1 << x) for x in range(self.n))

    # ---------------------------------------------------------- order

    def specializes(self, a: int, b: int) -> bool:
        """``a`` below ``b`` in the specialization order: ``b`` in cl{a}."""
        return bool((self.point_closures[a] >> b) & 1)

    def specialization_edges(self) -> list[tuple[int, int]]:
        """Hasse-reduced edges of the specialization preorder."""
        edges = []
        for a in range(self.n):
            ups = [b for b in bits(self.point_closures[a]) if b != a]
            for b in ups:
                if not any(c != b and self.specializes(c, b) and not self.specializes(b, c) for c in ups):
                    edges.append((a, b))
        return edges

    def separation_report(self) -> Separation:
        t0 = all(
            not (self.specializes(a, b) and self.specializes(b, a))
            for a, b in itertools.combinations(range(self.n), 2)
        )
        t1 = all(self.point_closures[x] == 1 << x for x in range(self.n))
        return Separation(t0, t1)

    # ---------------------------------------------------------- irreducibility

    def _maximal_proper_closed_subsets(self, s: int) -> list[int]:
        inner = [c for c in self.closed_sets if c != s and is_subset(c, s)]
        return [c for c in inner if not any(d != c and is_subset(c, d) for d in inner)]

    def irreducible_closed(self, s: int) -> bool:
        if not self.is_closed(s):
            raise ValueError(f"point set {s:#x} is not closed")
        if s == 0:
            return False
        if not self.eager:
            # finite spaces: irreducible closed sets are exactly point closures
            return any(self.point_closures[x] == s for x in bits(s))
        tops = self._maximal_proper_closed_subsets(s)
        for a, b in itertools.combinations_with_replacement(tops, 2):
            if a | b == s:
                return False
        return True

    def reducing_pair(self, s: int) -> tuple[int, int] | None:
        for a, b in itertools.combinations_with_replacement(self._maximal_proper_closed_subsets(s), 2):
            if a | b == s:
                return (a, b)
        return None

    def generic_points(self, s: int) -> list[int]:
        if not self.is_closed(s):
            raise ValueError(f"point set {s:#x} is not closed")
        return [x for x in bits(s) if self.point_closures[x] == s]

    def irreducible_closed_sets(self) -> list[int]:
        if self.eager:
            return [c for c in self.closed_sets if self.irreducible_closed(c)]
        return sorted(set(self.point_closures))

    def is_sober(self) -> tuple[bool, int | None]:
        """Sobriety, with the first offending irreducible closed set."""
        for c in self.irreducible_closed_sets():
            if len(self.generic_points(c)) != 1:
                return False, c
        return True, None

    # ---------------------------------------------------------- connectedness

    @staticmethod
    def _strong_pair(family, full) -> tuple[int, int] | None:
        present = set(family)
        for a in sorted(present):
            b = full & ~a
            if a and b and a < b and b in present:
                return (a, b)
        return None

    def connectivity_report(self) -> Connectivity:
        if self.eager:
            closed = self._closed_lookup
            sep = next(
                ((c, self.full & ~c) for c in self.closed_sets if c and c != self.full and (self.full & ~c) in closed),
                None,
            )
            basis_pair = self._strong_pair(self.basis, self.full)
        else:
            sep = self._component_split()
            basis_pair = sep
        sub_pair = self._strong_pair(self.subbasis_family, self.full)
        return Connectivity(
            connected=sep is None,
            subbasis_strongly_disconnects=sub_pair is not None,
            basis_strongly_disconnects=basis_pair is not None,
            subbasis_witness=sub_pair,
            basis_witness=basis_pair,
            separation=sep,
        )

    def _component_split(self) -> tuple[int, int] | None:
        # in a finite space x, y are linked when one lies in the other's closure
        if self.n == 0:
            return None
        comp = 1
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for y in range(self.n):
                if not (comp >> y) & 1 and (self.specializes(x, y) or self.specializes(y, x)):
                    comp |= 1 << y
                    frontier.append(y)
        return None if comp == self.full else (comp, self.full & ~comp)

    def basis_representation(self, s: int) -> list[int]:
        """Lattice ids ``N`` with ``s`` the union of ``V(N)``: one id per
        maximal subbasis set inside ``s``, the smallest id for each."""
        inside = [v for v in self.subbasis_family if v and is_subset(v, s)]
        tops = [v for v in inside if not any(w != v and is_subset(v, w) for w in inside)]
        return sorted(self.subbasis.index(v) for v in tops)

    # ---------------------------------------------------------- compactness surrogate

    def scc_check(self) -> SccResult:
        top = self.lattice.top
        for i, s in enumerate(self.lattice.subs):
            if s != top and self.subbasis[i] == 0:
                return SccResult(False, s)
        return SccResult(True)

    # ---------------------------------------------------------- reporting

    def point_label(self, x: int) -> str:
        return self.lattice.label(self.points.points[x])

    def set_labels(self, s: int) -> list[str]:
        return [self.point_label(x) for x in bits(s)]

    def to_dot(self, name: str = "specialization") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=ellipse];"]
        for x in range(self.n):
            lines.append(f'  p{x} [label="{self.point_label(x)}"];')
        for a, b in self.specialization_edges():
            lines.append(f"  p{a} -> p{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def report(self, dot: bool = False) -> dict:
        sep = self.separation_report()
        sober, offending = self.is_sober()
        conn = self.connectivity_report()
        scc = self.scc_check()
        module = self.lattice.module

        def named_union(s):
            return {
                "points": self.set_labels(s),
                "as_union_of": ["V(" + self.lattice.label(i) + ")" for i in self.basis_representation(s)],
            }

        out = {
            "kind": self.kind,
            "points": [self.point_label(x) for x in range(self.n)],
            "subbasis": [
                {"N": self.lattice.label(i), "V": self.set_labels(v)} for i, v in enumerate(self.subbasis)
            ],
            "counts": {
                "points": self.n,
                "subbasis_sets": len(self.subbasis_family),
                "basis_sets": len(self.basis) if self.eager else None,
                "closed_sets": len(self.closed_sets) if self.eager else None,
            },
            "t0": sep.t0,
            "t1": sep.t1,
            "sober": sober,
            "non_sober_witness": self.set_labels(offending) if offending is not None else None,
            "connectivity": {
                "connected": conn.connected,
                "subbasis_strongly_disconnects": conn.subbasis_strongly_disconnects,
                "basis_strongly_disconnects": conn.basis_strongly_disconnects,
                "subbasis_witness": [named_union(s) for s in conn.subbasis_witness] if conn.subbasis_witness else None,
                "basis_witness": [named_union(s) for s in conn.basis_witness] if conn.basis_witness else None,
            },
            "scc": {"holds": scc.holds, "witness": module.label_set(scc.witness) if scc.witness is not None else None},
            "conventions": "empty space: connected, T1 and sober hold vacuously; irreducible sets are nonempty",
        }
        if dot:
            out["dot"] = self.to_dot()
        return out


def build_space(points: DisSpacePoints, **caps) -> SubbasisSpace:
    return SubbasisSpace(points, **caps)


def space_of(lattice: SubLattice, kind: str, **caps) -> SubbasisSpace:
    """Memoised per (lattice, kind)."""
    cache = lattice.__dict__.setdefault("_spaces", {})
    key = (kind, tuple(sorted(caps.items())))
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = SubbasisSpace(select_class(kind, lattice), **caps)
    return hit
