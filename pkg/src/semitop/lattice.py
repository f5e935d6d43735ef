"""The lattice of all subsemimodules of a finite semimodule."""

from __future__ import annotations

import threading
from functools import cached_property, reduce
from typing import Iterable

from . import kernels
from .algebra import Semimodule
from .errors import CapExceeded
from .masks import bits, is_subset

DEFAULT_MAX_MODULE = 16
DEFAULT_MAX_LATTICE = 4096


class SubLattice:
    """All subsemimodules of ``module`` as ascending element masks.

    ``subs[i]`` is the mask of subsemimodule ``i``; ``index`` maps a mask
    back to its id. Sum and meet tables are built on first use.
    """

    def __init__(self, module: Semimodule, subs: Iterable[int]):
        self.module = module
        self.subs = tuple(sorted(subs))
        self.index = {s: i for i, s in enumerate(self.subs)}
        self.zero_id = self.index[module.bottom]
        self.top_id = self.index[module.top]
        self._lock = threading.Lock()
        self._sum_table = None
        self._meet_table = None

    def __len__(self) -> int:
        return len(self.subs)

    def __iter__(self):
        return iter(self.subs)

    @property
    def top(self) -> int:
        return self.module.top

    @property
    def bottom(self) -> int:
        return self.module.bottom

    def generate(self, seed: int) -> int:
        return self.module.generate(seed)

    def sum(self, family: Iterable[int] = ()) -> int:
        """Subsemimodule generated by the union; ``{0}`` for the empty family."""
        return self.module.generate(reduce(lambda a, b: a | b, family, self.bottom))

    def intersect(self, family: Iterable[int] = ()) -> int:
        """Bitwise meet; ``M`` for the empty family."""
        return reduce(lambda a, b: a & b, family, self.top)

    def _tables(self):
        with self._lock:
            if self._sum_table is None:
                n = len(self.subs)
                gen = self.module.generate
                idx = self.index
                self._meet_table = tuple(
                    tuple(idx[self.subs[i] & self.subs[j]] for j in range(n)) for i in range(n)
                )
                self._sum_table = tuple(
                    tuple(idx[gen(self.subs[i] | self.subs[j])] for j in range(n)) for i in range(n)
                )
        return self._sum_table, self._meet_table

    @property
    def sum_table(self):
        return self._tables()[0]

    @property
    def meet_table(self):
        return self._tables()[1]

    def colon(self, n_mask: int) -> int:
        """``(N : M) = {r | rM <= N}`` as a mask over the semiring."""
        act = self.module.action
        out = 0
        for r, row in enumerate(act):
            if all((n_mask >> v) & 1 for v in row):
                out |= 1 << r
        return out

    def radical(self, n_mask: int, primes: Iterable[int]) -> int:
        """Meet of the primes above ``N``; ``M`` if there are none."""
        return self.intersect(p for p in primes if is_subset(n_mask, p))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges ``(i, j)``: ``subs[j]`` covers ``subs[i]``."""
        subs = self.subs
        edges = []
        for i, a in enumerate(subs):
            above = [j for j, b in enumerate(subs) if b != a and is_subset(a, b)]
            for j in above:
                if not any(k != j and is_subset(subs[k], subs[j]) for k in above):
                    edges.append((i, j))
        return tuple(edges)

    def label(self, i: int) -> str:
        return "{" + ",".join(self.module.label_set(self.subs[i])) + "}"

    def to_json(self) -> dict:
        return {
            "count": len(self.subs),
            "subsemimodules": [self.module.label_set(s) for s in self.subs],
            "hasse": [list(e) for e in self.covers],
        }

    def to_dot(self, name: str = "sub") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
        for i in range(len(self.subs)):
            lines.append(f'  n{i} [label="{self.label(i)}"];')
        for i, j in self.covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def enumerate_subsemimodules(
    module: Semimodule,
    max_module_size: int = DEFAULT_MAX_MODULE,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> SubLattice:
    if len(module) > max_module_size:
        raise CapExceeded(f"module has {len(module)} elements; cap is {max_module_size}")
    subs = kernels.subsemimodules(
        module.flat_add, module.flat_action, len(module), len(module.ring), module.zero, max_lattice
    )
    return SubLattice(module, subs)


_cache: dict = {}
_cache_lock = threading.Lock()


def lattice_of(module: Semimodule, **caps) -> SubLattice:
    """Memoised ``enumerate_subsemimodules`` keyed on the module tables."""
    key = (module, tuple(sorted(caps.items())))
    with _cache_lock:
        hit = _cache.get(key)
    if hit is None:
        hit = enumerate_subsemimodules(module, **caps)
        with _cache_lock:
            _cache.setdefault(key, hit)
    return hit


def label_mask(module: Semimodule, mask: int) -> str:
    return "{" + ",".join(module.elements[i] for i in bits(mask)) + "}"
