"""Named structures and homomorphisms the verifier runs over."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .algebra import (
    Homomorphism,
    Semimodule,
    boolean,
    identity_map,
    projection,
    quotient_bourne,
    self_module,
    submodule,
    trunc_nat,
    vector_module,
    zero_map,
    zmod,
)
from .io import load_structure
from .lattice import lattice_of
from .sweep import SweepSpec, sweep


def curated() -> list[tuple[str, Semimodule]]:
    B, F2 = boolean(), zmod(2)
    return [
        ("B", self_module(B)),
        ("N2", self_module(trunc_nat(2))),
        ("N3", self_module(trunc_nat(3))),
        ("Z3", self_module(zmod(3))),
        ("Z4", self_module(zmod(4))),
        ("Z6", self_module(zmod(6))),
        ("F2^2", vector_module(F2, 2)),
        ("F2^3", vector_module(F2, 3)),
        ("B^2", vector_module(B, 2)),
    ]


@dataclass
class Corpus:
    structures: list[tuple[str, Semimodule]] = field(default_factory=list)
    sweep_spec: SweepSpec | None = None

    @classmethod
    def default(cls, with_sweep: bool = False) -> "Corpus":
        return cls(curated(), SweepSpec() if with_sweep else None)

    @classmethod
    def from_dir(cls, path) -> "Corpus":
        files = sorted(Path(path).glob("*.json"))
        return cls([(f"file/{f.stem}", load_structure(f)) for f in files])

    def __iter__(self) -> Iterator[tuple[str, Semimodule]]:
        yield from self.structures
        if self.sweep_spec is not None:
            yield from sweep(self.sweep_spec)

    def members(self) -> list[tuple[str, Semimodule]]:
        return list(self)


def _vector_dim(module: Semimodule) -> int | None:
    n, m = len(module.ring), len(module)
    for d in range(2, 8):
        if n**d == m and module == vector_module(module.ring, d):
            return d
    return None


@dataclass(frozen=True)
class NamedHom:
    name: str
    hom: Homomorphism
    quotient_of: int | None = None  # N when hom is the Bourne projection M -> M/N


def homomorphisms(module: Semimodule, **caps) -> list[NamedHom]:
    """Identity, zero endomorphism, Bourne quotients, inclusions, projections."""
    lat = lattice_of(module, **caps)
    out = [NamedHom("id", identity_map(module))]
    if len(module) > 1:
        out.append(NamedHom("zero", zero_map(module, module)))
    for s in lat.subs:
        label = "{" + ",".join(module.label_set(s)) + "}"
        if s != lat.bottom:
            out.append(NamedHom(f"quotient{label}", quotient_bourne(module, s)[1], s))
        if s not in (lat.bottom, lat.top):
            out.append(NamedHom(f"include{label}", submodule(module, s)[1]))
    d = _vector_dim(module)
    if d is not None:
        for drop in range(d):
            keep = [k for k in range(d) if k != drop]
            out.append(NamedHom(f"proj{tuple(keep)}", projection(module, d, keep)))
    return out
