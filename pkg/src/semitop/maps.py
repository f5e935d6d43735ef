"""Pullback maps between subsemimodule spaces along a homomorphism.

For ``phi: M -> M'`` the pullback sends a point ``N'`` of the space on
``M'`` to ``phi^-1(N')`` in the space on ``M``; it is defined when every
such preimage is again a point (the contraction property).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Homomorphism, verify_homomorphism
from .errors import AxiomError, ContractionError
from .lattice import lattice_of
from .masks import bits, is_subset, mask_of
from .topology import SubbasisSpace, space_of


@dataclass(frozen=True)
class ContractionResult:
    holds: bool
    witness: int | None = None  # mask of a point N' of M' whose preimage is not a point

    def __bool__(self) -> bool:
        return self.holds


@dataclass
class PullbackMap:
    hom: Homomorphism
    kind: str
    source_space: SubbasisSpace  # on the codomain M'
    target_space: SubbasisSpace  # on the domain M
    table: tuple[int, ...]  # point index in source_space -> point index in target_space

    def apply(self, s: int) -> int:
        """Image of a point set of the space on ``M'``."""
        return mask_of(self.table[x] for x in bits(s))

    def preimage(self, t: int) -> int:
        """Preimage of a point set of the space on ``M``."""
        return mask_of(x for x, y in enumerate(self.table) if (t >> y) & 1)


@dataclass
class ContinuityResult:
    continuous: bool
    certificate: dict = field(default_factory=dict)  # sub id of M -> (preimage of V(N), V(<phi(N)>))
    closed_preimages: bool = True


@dataclass
class HomeoResult:
    homeomorphic: bool
    onto: int  # point mask in the space on M
    v_kernel: int
    onto_v_kernel: bool
    injective: bool
    closed_map: bool
    continuous: bool
    image_identity: bool  # phi*(V(N')) == V(phi^-1(N')) for all N'


@dataclass
class DensityResult:
    dense: bool
    criterion: bool  # ker phi <= meet of all points of M
    lhs: int  # ker phi
    rhs: int  # meet of all points
    closure_of_image: int
    closure_identity: bool  # cl(phi*(V(N'))) == V(phi^-1(N')) for all N'

    @property
    def biconditional(self) -> bool:
        return self.dense == self.criterion


def _spaces(hom: Homomorphism, kind: str, caps: dict) -> tuple[SubbasisSpace, SubbasisSpace]:
    lat_src = lattice_of(hom.source, **caps)
    lat_tgt = lattice_of(hom.target, **caps)
    return space_of(lat_tgt, kind), space_of(lat_src, kind)


def check_contraction(hom: Homomorphism, kind: str, **caps) -> ContractionResult:
    codomain_space, domain_space = _spaces(hom, kind, caps)
    pts = set(domain_space.point_masks)
    for n in codomain_space.point_masks:
        if hom.preimage(n) not in pts:
            return ContractionResult(False, n)
    return ContractionResult(True)


def pullback(hom: Homomorphism, kind: str, **caps) -> PullbackMap:
    rep = verify_homomorphism(hom)
    if not rep:
        raise AxiomError(rep)
    res = check_contraction(hom, kind, **caps)
    if not res:
        raise ContractionError(
            f"preimage of {hom.target.label_set(res.witness)} is not a {kind} point", res.witness
        )
    codomain_space, domain_space = _spaces(hom, kind, caps)
    where = {m: i for i, m in enumerate(domain_space.point_masks)}
    table = tuple(where[hom.preimage(n)] for n in codomain_space.point_masks)
    return PullbackMap(hom, kind, codomain_space, domain_space, table)


def continuity_check(pm: PullbackMap) -> ContinuityResult:
    """Checks ``(phi*)^-1(V(N)) == V(<phi(N)>)`` for every ``N`` of ``M``, and
    independently that preimages of all closed sets are closed."""
    src, tgt, hom = pm.source_space, pm.target_space, pm.hom
    cert = {}
    ok = True
    gen = hom.target.generate
    for i, n in enumerate(tgt.lattice.subs):
        lhs = pm.preimage(tgt.subbasis[i])
        rhs = src.v_set(gen(hom.forward(n)))
        cert[i] = (lhs, rhs)
        ok &= lhs == rhs
    closed_ok = True
    if src.eager and tgt.eager:
        closed_ok = all(src.is_closed(pm.preimage(c)) for c in tgt.closed_sets)
    return ContinuityResult(ok and closed_ok, cert, closed_ok)


def surjective_homeo_check(pm: PullbackMap) -> HomeoResult:
    hom = pm.hom
    if not hom.is_surjective():
        raise ValueError("homeomorphism check needs a surjective homomorphism")
    src, tgt = pm.source_space, pm.target_space
    onto = pm.apply(src.full)
    v_ker = tgt.v_set(hom.kernel())
    injective = len(set(pm.table)) == len(pm.table)
    image_identity = all(
        pm.apply(src.subbasis[j]) == tgt.v_set(hom.preimage(n)) for j, n in enumerate(src.lattice.subs)
    )
    if src.eager and tgt.eager:
        closed_map = all(tgt.is_closed(pm.apply(c)) for c in src.closed_sets)
    else:
        closed_map = image_identity
    cont = continuity_check(pm).continuous
    return HomeoResult(
        homeomorphic=onto == v_ker and injective and closed_map and cont,
        onto=onto,
        v_kernel=v_ker,
        onto_v_kernel=onto == v_ker,
        injective=injective,
        closed_map=closed_map,
        continuous=cont,
        image_identity=image_identity,
    )


def density_check(pm: PullbackMap) -> DensityResult:
    src, tgt, hom = pm.source_space, pm.target_space, pm.hom
    cl = tgt.closure(pm.apply(src.full))
    ker = hom.kernel()
    meet = tgt.intersection_of_points()
    closure_identity = all(
        tgt.closure(pm.apply(src.subbasis[j])) == tgt.v_set(hom.preimage(n))
        for j, n in enumerate(src.lattice.subs)
    )
    return DensityResult(
        dense=cl == tgt.full,
        criterion=is_subset(ker, meet),
        lhs=ker,
        rhs=meet,
        closure_of_image=cl,
        closure_identity=closure_identity,
    )


def report(pm: PullbackMap) -> dict:
    src, tgt, hom = pm.source_space, pm.target_space, pm.hom
    cont = continuity_check(pm)
    out = {
        "kind": pm.kind,
        "contraction": {"holds": True, "witness": None},
        "pullback": {src.point_label(x): tgt.point_label(y) for x, y in enumerate(pm.table)},
        "continuity": {
            "continuous": cont.continuous,
            "certificate": [
                {"V": tgt.lattice.label(i), "preimage": src.set_labels(a), "V_of_image": src.set_labels(b)}
                for i, (a, b) in cont.certificate.items()
            ],
        },
    }
    if hom.is_surjective():
        h = surjective_homeo_check(pm)
        out["homeomorphism"] = {
            "homeomorphic": h.homeomorphic,
            "image": tgt.set_labels(h.onto),
            "V_ker": tgt.set_labels(h.v_kernel),
            "injective": h.injective,
            "closed_map": h.closed_map,
        }
    else:
        out["homeomorphism"] = None
    d = density_check(pm)
    out["density"] = {
        "dense": d.dense,
        "ker": hom.source.label_set(d.lhs),
        "meet_of_points": hom.source.label_set(d.rhs),
        "criterion": d.criterion,
        "biconditional": d.biconditional,
        "closure_of_image": tgt.set_labels(d.closure_of_image),
    }
    return out
