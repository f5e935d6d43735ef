"""Finite commutative semirings, semimodules over them, and homomorphisms.

Structures are table-driven: elements are indexed ``0..k-1`` in constructor
order and every operation is a nested tuple of indices. Constructors only
check table shape; the ``verify_*`` functions check the axioms and report the
first violation with a witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from . import kernels
from .errors import AxiomError, StructureError
from .masks import bits, mask_of

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"axiom violated: {self.axiom}; witness {self.witness}"


OK = ValidationReport(True)


def _table(rows: Sequence[Sequence[int]], nrows: int, ncols: int, size: int, what: str) -> Table:
    if len(rows) != nrows:
        raise StructureError(f"{what}: expected {nrows} rows, got {len(rows)}")
    out = []
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise StructureError(f"{what}: row {i} has {len(row)} entries, expected {ncols}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < size:
                raise StructureError(f"{what}: entry {v!r} in row {i} out of range 0..{size - 1}")
        out.append(tuple(row))
    return tuple(out)


def _index(value: int, size: int, what: str) -> int:
    if not isinstance(value, int) or not 0 <= value < size:
        raise StructureError(f"{what} index {value!r} out of range 0..{size - 1}")
    return value


@dataclass(frozen=True, eq=True)
class Semiring:
    elements: tuple[str, ...]
    add: Table
    mul: Table
    zero: int
    one: int

    def __post_init__(self):
        k = len(self.elements)
        if k == 0:
            raise StructureError("semiring carrier is empty")
        if len(set(self.elements)) != k:
            raise StructureError("duplicate element labels")
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        object.__setattr__(self, "add", _table(self.add, k, k, k, "add"))
        object.__setattr__(self, "mul", _table(self.mul, k, k, k, "mul"))
        _index(self.zero, k, "zero")
        _index(self.one, k, "one")

    def __len__(self) -> int:
        return len(self.elements)

    def __hash__(self) -> int:
        return hash((self.elements, self.add, self.mul))

    def power(self, r: int, e: int) -> int:
        out = self.one
        for _ in range(e):
            out = self.mul[out][r]
        return out

    def label_set(self, mask: int) -> list[str]:
        return [self.elements[i] for i in bits(mask)]


@dataclass(frozen=True, eq=True)
class Semimodule:
    ring: Semiring
    elements: tuple[str, ...]
    add: Table
    zero: int
    action: Table  # action[r][x] = r·x

    def __post_init__(self):
        m = len(self.elements)
        if m == 0:
            raise StructureError("module carrier is empty")
        if len(set(self.elements)) != m:
            raise StructureError("duplicate element labels")
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        object.__setattr__(self, "add", _table(self.add, m, m, m, "add"))
        object.__setattr__(self, "action", _table(self.action, len(self.ring), m, m, "action"))
        _index(self.zero, m, "zero")

    def __len__(self) -> int:
        return len(self.elements)

    def __hash__(self) -> int:
        return hash((self.elements, self.add, self.action))

    @cached_property
    def flat_add(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.add))

    @cached_property
    def flat_action(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.action))

    @property
    def top(self) -> int:
        return (1 << len(self.elements)) - 1

    @property
    def bottom(self) -> int:
        return 1 << self.zero

    def generate(self, seed: int) -> int:
        """Least subsemimodule containing the subset ``seed``."""
        return kernels.closure(self.flat_add, self.flat_action, len(self), len(self.ring), self.zero, seed)

    def is_subsemimodule(self, mask: int) -> bool:
        """Closure certificate: contains zero, closed under add and action."""
        if not (mask >> self.zero) & 1:
            return False
        members = list(bits(mask))
        for x in members:
            for y in members:
                if not (mask >> self.add[x][y]) & 1:
                    return False
            for r in range(len(self.ring)):
                if not (mask >> self.action[r][x]) & 1:
                    return False
        return True

    def label_set(self, mask: int) -> list[str]:
        return [self.elements[i] for i in bits(mask)]

    def mask_from_labels(self, labels: Sequence[str]) -> int:
        pos = {e: i for i, e in enumerate(self.elements)}
        try:
            return mask_of(pos[str(x)] for x in labels)
        except KeyError as exc:
            raise StructureError(f"unknown element label {exc.args[0]!r}") from None


# ---------------------------------------------------------------- verifiers


def _monoid_check(elems: range, op: Table, ident: int, prefix: str) -> ValidationReport:
    for a in elems:
        if op[ident][a] != a or op[a][ident] != a:
            return ValidationReport(False, f"{prefix} identity", (a,))
    for a in elems:
        for b in elems:
            if op[a][b] != op[b][a]:
                return ValidationReport(False, f"{prefix} commutativity", (a, b))
    for a in elems:
        for b in elems:
            ab = op[a][b]
            for c in elems:
                if op[ab][c] != op[a][op[b][c]]:
                    return ValidationReport(False, f"{prefix} associativity", (a, b, c))
    return OK


def verify_semiring(ring: Semiring) -> ValidationReport:
    """Exhaustive scan of the commutative semiring axioms."""
    E = range(len(ring))
    add, mul = ring.add, ring.mul
    rep = _monoid_check(E, add, ring.zero, "additive")
    if not rep:
        return rep
    rep = _monoid_check(E, mul, ring.one, "multiplicative")
    if not rep:
        return rep
    for a in E:
        if mul[ring.zero][a] != ring.zero or mul[a][ring.zero] != ring.zero:
            return ValidationReport(False, "zero annihilation", (a,))
    for a in E:
        for b in E:
            for c in E:
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    return ValidationReport(False, "left distributivity", (a, b, c))
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    return ValidationReport(False, "right distributivity", (a, b, c))
    return OK


def verify_semimodule(module: Semimodule) -> ValidationReport:
    """Monoid axioms for the carrier, then module axioms (i) to (v)."""
    R = module.ring
    E = range(len(module))
    S = range(len(R))
    add, act = module.add, module.action
    rep = _monoid_check(E, add, module.zero, "additive")
    if not rep:
        return rep
    for r in S:
        for s in S:
            rs_add = R.add[r][s]
            rs_mul = R.mul[r][s]
            for x in E:
                if act[rs_add][x] != add[act[r][x]][act[s][x]]:
                    return ValidationReport(False, "axiom (i) (r+r')m=rm+r'm", (r, s, x))
    for r in S:
        for x in E:
            for y in E:
                if act[r][add[x][y]] != add[act[r][x]][act[r][y]]:
                    return ValidationReport(False, "axiom (ii) r(m+m')=rm+rm'", (r, x, y))
    for r in S:
        for s in S:
            for x in E:
                if act[R.mul[r][s]][x] != act[r][act[s][x]]:
                    return ValidationReport(False, "axiom (iii) (rr')m=r(r'm)", (r, s, x))
    for x in E:
        if act[R.one][x] != x:
            return ValidationReport(False, "axiom (iv) 1m=m", (x,))
    for r in S:
        if act[r][module.zero] != module.zero:
            return ValidationReport(False, "axiom (v) r0=0=0m", (r, module.zero))
    for x in E:
        if act[R.zero][x] != module.zero:
            return ValidationReport(False, "axiom (v) r0=0=0m", (R.zero, x))
    return OK


def checked(structure):
    """Run the matching verifier and raise ``AxiomError`` on failure."""
    if isinstance(structure, Semiring):
        rep = verify_semiring(structure)
    else:
        rep = verify_semiring(structure.ring)
        if rep:
            rep = verify_semimodule(structure)
    if not rep:
        raise AxiomError(rep)
    return structure


# ------------------------------------------------------------ constructors


def boolean() -> Semiring:
    return checked(Semiring(("0", "1"), ((0, 1), (1, 1)), ((0, 0), (0, 1)), 0, 1))


def trunc_nat(k: int) -> Semiring:
    """``{0..k}`` with addition and multiplication saturating at ``k``."""
    if k < 1:
        raise ValueError(f"trunc_nat needs k >= 1, got {k}")
    E = range(k + 1)
    add = tuple(tuple(min(a + b, k) for b in E) for a in E)
    mul = tuple(tuple(min(a * b, k) for b in E) for a in E)
    return checked(Semiring(tuple(str(a) for a in E), add, mul, 0, 1))


def zmod(n: int) -> Semiring:
    if n < 2:
        raise ValueError(f"zmod needs n >= 2, got {n}")
    E = range(n)
    add = tuple(tuple((a + b) % n for b in E) for a in E)
    mul = tuple(tuple((a * b) % n for b in E) for a in E)
    return checked(Semiring(tuple(str(a) for a in E), add, mul, 0, 1))


def _tuple_label(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


def product(*rings: Semiring) -> Semiring:
    """Componentwise product semiring."""
    if not rings:
        raise ValueError("product needs at least one factor")
    coords = list(itertools.product(*(range(len(R)) for R in rings)))
    pos = {c: i for i, c in enumerate(coords)}

    def op(name):
        return tuple(
            tuple(pos[tuple(getattr(R, name)[x][y] for R, x, y in zip(rings, a, b))] for b in coords)
            for a in coords
        )

    labels = tuple(_tuple_label([R.elements[x] for R, x in zip(rings, c)]) for c in coords)
    zero = pos[tuple(R.zero for R in rings)]
    one = pos[tuple(R.one for R in rings)]
    return checked(Semiring(labels, op("add"), op("mul"), zero, one))


def self_module(ring: Semiring) -> Semimodule:
    return checked(Semimodule(ring, ring.elements, ring.add, ring.zero, ring.mul))


def vector_module(ring: Semiring, d: int) -> Semimodule:
    """``R^d`` with componentwise operations; ``d == 1`` is ``self_module``."""
    if d < 1:
        raise ValueError(f"vector_module needs d >= 1, got {d}")
    if d == 1:
        return self_module(ring)
    n = len(ring)
    coords = list(itertools.product(range(n), repeat=d))
    pos = {c: i for i, c in enumerate(coords)}
    add = tuple(tuple(pos[tuple(ring.add[x][y] for x, y in zip(a, b))] for b in coords) for a in coords)
    act = tuple(tuple(pos[tuple(ring.mul[r][x] for x in a)] for a in coords) for r in range(n))
    labels = tuple(_tuple_label([ring.elements[x] for x in c]) for c in coords)
    return checked(Semimodule(ring, labels, add, pos[(ring.zero,) * d], act))


_FAMILIES = {
    "boolean": boolean,
    "trunc_nat": trunc_nat,
    "zmod": zmod,
    "product": product,
    "self_module": self_module,
    "vector_module": vector_module,
}


def make_standard(family: str, *params):
    """Dispatch to a named constructor; every result is already verified."""
    try:
        ctor = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}") from None
    return ctor(*params)


def submodule(module: Semimodule, mask: int) -> tuple[Semimodule, "Homomorphism"]:
    """The subsemimodule ``mask`` as a semimodule, with its inclusion map."""
    if not module.is_subsemimodule(mask):
        raise StructureError("mask is not a subsemimodule")
    idx = list(bits(mask))
    pos = {x: i for i, x in enumerate(idx)}
    add = tuple(tuple(pos[module.add[x][y]] for y in idx) for x in idx)
    act = tuple(tuple(pos[module.action[r][x]] for x in idx) for r in range(len(module.ring)))
    sub = Semimodule(module.ring, tuple(module.elements[x] for x in idx), add, pos[module.zero], act)
    return sub, Homomorphism(sub, module, tuple(idx))


def enumerate_ideals(ring: Semiring) -> list[int]:
    """All ideals of ``ring`` as element masks, ascending."""
    M = Semimodule(ring, ring.elements, ring.add, ring.zero, ring.mul)
    return kernels.subsemimodules(M.flat_add, M.flat_action, len(M), len(ring), M.zero, 1 << 30)


def is_ideal(ring: Semiring, mask: int) -> bool:
    if not (mask >> ring.zero) & 1:
        return False
    members = list(bits(mask))
    for a in members:
        for b in members:
            if not (mask >> ring.add[a][b]) & 1:
                return False
        for r in range(len(ring)):
            if not (mask >> ring.mul[r][a]) & 1:
                return False
    return True


# ----------------------------------------------------------- homomorphisms


@dataclass(frozen=True)
class Homomorphism:
    source: Semimodule
    target: Semimodule
    table: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.table) != len(self.source):
            raise StructureError(f"map table has {len(self.table)} entries for a source of size {len(self.source)}")
        object.__setattr__(self, "table", tuple(_index(v, len(self.target), "map target") for v in self.table))

    def __call__(self, x: int) -> int:
        return self.table[x]

    def forward(self, mask: int) -> int:
        return mask_of(self.table[x] for x in bits(mask))

    def preimage(self, mask: int) -> int:
        return mask_of(x for x, y in enumerate(self.table) if (mask >> y) & 1)

    def kernel(self) -> int:
        return self.preimage(self.target.bottom)

    def image(self) -> int:
        return self.forward(self.source.top)

    def is_surjective(self) -> bool:
        return self.image() == self.target.top

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)


def verify_homomorphism(h: Homomorphism) -> ValidationReport:
    S, T, f = h.source, h.target, h.table
    if S.ring != T.ring:
        return ValidationReport(False, "common semiring", ())
    if f[S.zero] != T.zero:
        return ValidationReport(False, "map(0)=0", (S.zero,))
    E = range(len(S))
    for x in E:
        for y in E:
            if f[S.add[x][y]] != T.add[f[x]][f[y]]:
                return ValidationReport(False, "map(x+y)=map(x)+map(y)", (x, y))
    for r in range(len(S.ring)):
        for x in E:
            if f[S.action[r][x]] != T.action[r][f[x]]:
                return ValidationReport(False, "map(r*x)=r*map(x)", (r, x))
    return OK


def identity_map(module: Semimodule) -> Homomorphism:
    return Homomorphism(module, module, tuple(range(len(module))), "id")


def zero_map(source: Semimodule, target: Semimodule) -> Homomorphism:
    return Homomorphism(source, target, (target.zero,) * len(source), "zero")


def projection(module: Semimodule, d: int, keep: Sequence[int]) -> Homomorphism:
    """Coordinate projection ``R^d -> R^len(keep)`` of a ``vector_module``."""
    R = module.ring
    target = vector_module(R, len(keep))
    coords = list(itertools.product(range(len(R)), repeat=d))
    tcoords = list(itertools.product(range(len(R)), repeat=len(keep)))
    tpos = {c: i for i, c in enumerate(tcoords)}
    table = tuple(tpos[tuple(c[k] for k in keep)] for c in coords)
    return Homomorphism(module, target, table, f"proj{tuple(keep)}")


def quotient_bourne(module: Semimodule, n_mask: int) -> tuple[Semimodule, Homomorphism]:
    """Quotient by the Bourne congruence ``m ~ m'`` iff ``m+a = m'+b`` for ``a, b`` in N."""
    m = len(module)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    members = list(bits(n_mask))
    # group elements by the values m+a they reach; a shared value links them
    reach: dict[int, int] = {}
    for x in range(m):
        for a in members:
            v = module.add[x][a]
            if v in reach:
                rx, ry = find(x), find(reach[v])
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
            else:
                reach[v] = x
    roots = sorted({find(x) for x in range(m)})
    cls = {r: i for i, r in enumerate(roots)}
    proj = tuple(cls[find(x)] for x in range(m))
    add = tuple(tuple(proj[module.add[a][b]] for b in roots) for a in roots)
    act = tuple(tuple(proj[module.action[r][a]] for a in roots) for r in range(len(module.ring)))
    labels = tuple(f"[{module.elements[r]}]" for r in roots)
    Q = Semimodule(module.ring, labels, add, proj[module.zero], act)
    return Q, Homomorphism(module, Q, proj, "bourne")


def subtractive_closure(module: Semimodule, n_mask: int) -> int:
    """``{x | x + a in N for some a in N}``, i.e. the kernel of the Bourne projection."""
    return mask_of(
        x for x in range(len(module)) if any((n_mask >> module.add[x][a]) & 1 for a in bits(n_mask))
    )
