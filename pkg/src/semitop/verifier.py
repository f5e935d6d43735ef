"""Exact checks of the subsemimodule-space claims over a corpus, and a
counterexample miner.

Each claim is a function of one space (structure + kind) or of one pullback
map. A check returns ``(ok, witness)``; ``ok is None`` means the claim does
not apply to that input. Status values in reports:

* ``pass`` / ``fail``: the claim was decided;
* ``info``: an observation recorded for a statement whose literal form
  needs an assumption (reported, never counted as failure);
* ``skipped``: a resource cap refused the computation.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from .algebra import Homomorphism, Semimodule, subtractive_closure
from .classes import KINDS, classifier
from .corpus import Corpus, homomorphisms
from .errors import CapExceeded
from .io import structure_to_dict
from .lattice import SubLattice, lattice_of
from .maps import check_contraction, continuity_check, density_check, pullback, surjective_homeo_check
from .masks import is_subset
from .topology import SubbasisSpace, space_of

SAMPLES = 100
SEED = 20240601


@dataclass
class ClaimReport:
    claim: str
    statement: str
    structure: str
    kind: str
    status: str
    witness: dict | None = None
    hom: str | None = None
    elapsed: float = 0.0

    def as_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("elapsed")
        if d["hom"] is None:
            d.pop("hom")
        return d


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    scope: str  # "space" or "map"
    check: Callable
    kinds: tuple[str, ...] | None = None  # None: every kind


@dataclass
class SpaceCtx:
    name: str
    module: Semimodule
    lattice: SubLattice
    kind: str
    space: SubbasisSpace
    rng: random.Random

    def lab(self, mask) -> list[str]:
        return self.module.label_set(mask)

    def plab(self, s) -> list[str]:
        return self.space.set_labels(s)


@dataclass
class MapCtx:
    name: str
    hom_name: str
    hom: Homomorphism
    kind: str
    pmap: object
    quotient_of: int | None = None


REGISTRY: dict[str, Claim] = {}


def claim(id: str, statement: str, scope: str = "space", kinds=None):
    def deco(fn):
        REGISTRY[id] = Claim(id, statement, scope, fn, kinds)
        return fn

    return deco


def _random_subset(rng, m, nonempty=True):
    while True:
        s = rng.getrandbits(m)
        if s or not nonempty:
            return s


# ------------------------------------------------------------------ V-set laws


@claim("v.antitone", "S <= S' implies V(S) >= V(S')")
def _v_antitone(c: SpaceCtx):
    m = len(c.module)
    for _ in range(SAMPLES):
        big = _random_subset(c.rng, m)
        small = 0
        while not small:
            small = big & c.rng.getrandbits(m)
        if not is_subset(c.space.v_set(big), c.space.v_set(small)):
            return False, {"S": c.lab(small), "S'": c.lab(big)}
    return True, None


@claim("v.generated", "V(S) = V(<S>)")
def _v_generated(c: SpaceCtx):
    m = len(c.module)
    for _ in range(SAMPLES):
        s = _random_subset(c.rng, m)
        if c.space.v_set(s) != c.space.v_set(c.module.generate(s)):
            return False, {"S": c.lab(s)}
    return True, None


@claim("v.extremes", "V(0) is every point and V(M) is empty")
def _v_extremes(c: SpaceCtx):
    ok = c.space.v_set(c.lattice.bottom) == c.space.full and c.space.v_set(c.lattice.top) == 0
    return ok, None if ok else {"V(0)": c.plab(c.space.v_set(c.lattice.bottom))}


@claim("v.sum", "intersection of V(N_i) equals V(sum of N_i)")
def _v_sum(c: SpaceCtx):
    subs = c.lattice.subs
    families = [()] + [tuple(c.rng.choice(subs) for _ in range(c.rng.randint(1, 4))) for _ in range(SAMPLES)]
    for fam in families:
        lhs = c.space.full
        for n in fam:
            lhs &= c.space.v_set(n)
        if lhs != c.space.v_set(c.lattice.sum(fam)):
            return False, {"family": [c.lab(n) for n in fam]}
    return True, None


@claim("v.meet_union", "V(N) union V(K) is contained in V(N meet K)")
def _v_meet_union(c: SpaceCtx):
    subs = c.lattice.subs
    pairs = [(c.rng.choice(subs), c.rng.choice(subs)) for _ in range(SAMPLES)]
    for n, k in pairs:
        if not is_subset(c.space.v_set(n) | c.space.v_set(k), c.space.v_set(n & k)):
            return False, {"N": c.lab(n), "K": c.lab(k)}
    return True, None


def _radical(c: SpaceCtx, n: int) -> int:
    return classifier(c.lattice).radical(n)


@claim("v.radical", "V(N) contains V(radical N)")
def _v_radical(c: SpaceCtx):
    for n in c.lattice.subs:
        if not is_subset(c.space.v_set(_radical(c, n)), c.space.v_set(n)):
            return False, {"N": c.lab(n)}
    return True, None


@claim(
    "v.radical_equality",
    "V(N) = V(radical N) for the prime, minimal prime and maximal classes",
    kinds=("prime", "minimal_prime", "maximal"),
)
def _v_radical_eq(c: SpaceCtx):
    for n in c.lattice.subs:
        r = _radical(c, n)
        if c.space.v_set(r) != c.space.v_set(n):
            return False, {"N": c.lab(n), "radical": c.lab(r), "V(N)": c.plab(c.space.v_set(n)), "V(radical)": c.plab(c.space.v_set(r))}
    return True, None


@claim("omega.extensive", "N is contained in N^omega")
def _omega_ext(c: SpaceCtx):
    for n in c.lattice.subs:
        if not is_subset(n, c.space.omega(n)):
            return False, {"N": c.lab(n)}
    return True, None


@claim("omega.fixes_points", "N = N^omega for every point N")
def _omega_fix(c: SpaceCtx):
    for n in c.space.point_masks:
        if c.space.omega(n) != n:
            return False, {"N": c.lab(n), "omega": c.lab(c.space.omega(n))}
    return True, None


@claim("omega.same_v", "V(N) = V(N^omega)")
def _omega_v(c: SpaceCtx):
    for n in c.lattice.subs:
        if c.space.v_set(n) != c.space.v_set(c.space.omega(n)):
            return False, {"N": c.lab(n)}
    return True, None


@claim("omega.order", "V(N1) <= V(N2) iff N2^omega <= N1^omega")
def _omega_order(c: SpaceCtx):
    subs = c.lattice.subs
    om = {n: c.space.omega(n) for n in subs}
    for a, b in itertools.product(subs, repeat=2):
        if is_subset(c.space.v_set(a), c.space.v_set(b)) != is_subset(om[b], om[a]):
            return False, {"N1": c.lab(a), "N2": c.lab(b)}
    return True, None


# ------------------------------------------------------------------ compactness surrogate


def _maximal_ids(c: SpaceCtx) -> set[int]:
    return set(classifier(c.lattice).select("maximal").points)


@claim("scc.needs_maximal", "if every proper N has nonempty V(N), every maximal subsemimodule is a point")
def _ncc(c: SpaceCtx):
    scc = c.space.scc_check()
    missing = _maximal_ids(c) - set(c.space.points.points)
    if scc.holds and missing:
        return False, {"missing_maximal": [c.lattice.label(i) for i in sorted(missing)]}
    return True, None


@claim("scc.finite_converse", "on a finite module, containing every maximal subsemimodule forces nonempty V(N) for proper N")
def _ncc_converse(c: SpaceCtx):
    scc = c.space.scc_check()
    contains = _maximal_ids(c) <= set(c.space.points.points)
    if contains and not scc.holds:
        return False, {"N": c.lab(scc.witness)}
    return True, None


# ------------------------------------------------------------------ separation


@claim("t0", "the space is T0 and specialization coincides with inclusion on points")
def _t0(c: SpaceCtx):
    sp = c.space
    if not sp.separation_report().t0:
        return False, {"t0": False}
    pm = sp.point_masks
    for a, b in itertools.product(range(sp.n), repeat=2):
        if sp.specializes(a, b) != is_subset(pm[a], pm[b]):
            return False, {"L1": c.lab(pm[a]), "L2": c.lab(pm[b])}
    return True, None


@claim("point_closure", "for every point N, closure{N} = V(N) and V(N) is irreducible")
def _irrc(c: SpaceCtx):
    sp = c.space
    for x, n in enumerate(sp.point_masks):
        v = sp.v_set(n)
        if sp.point_closures[x] != v or not sp.irreducible_closed(v):
            return False, {"N": c.lab(n), "closure": c.plab(sp.point_closures[x]), "V": c.plab(v)}
    return True, None


@claim("proper.subbasis_irreducible", "in the proper space every nonempty subbasis set is irreducible", kinds=("proper",))
def _spiir(c: SpaceCtx):
    for i, v in enumerate(c.space.subbasis):
        if v and not c.space.irreducible_closed(v):
            return False, {"N": c.lab(c.lattice.subs[i]), "V": c.plab(v)}
    return True, None


@claim("t1.iff_maximal", "T1 holds iff every point is a maximal subsemimodule")
def _t1(c: SpaceCtx):
    t1 = c.space.separation_report().t1
    inside = set(c.space.points.points) <= _maximal_ids(c)
    if t1 == inside:
        return True, None
    non_max = [c.lattice.label(i) for i in c.space.points.points if i not in _maximal_ids(c)]
    return False, {"t1": t1, "points_all_maximal": inside, "non_maximal_points": non_max}


# ------------------------------------------------------------------ sobriety


def _irreducible_vs(c: SpaceCtx):
    """(N, V(N)) for every N with V(N) nonempty and irreducible."""
    sp = c.space
    seen = {}
    for i, v in enumerate(sp.subbasis):
        if v and v not in seen:
            seen[v] = sp.irreducible_closed(v)
        if v and seen[v]:
            yield c.lattice.subs[i], v


@claim("sober.generic_is_omega", "a unique generic point of a nonempty irreducible V(N) is N^omega")
def _sob_forward(c: SpaceCtx):
    sp = c.space
    for n, v in _irreducible_vs(c):
        gens = sp.generic_points(v)
        if len(gens) == 1 and sp.point_masks[gens[0]] != sp.omega(n):
            return False, {"N": c.lab(n), "generic": c.lab(sp.point_masks[gens[0]]), "omega": c.lab(sp.omega(n))}
    return True, None


@claim("sober.per_set", "a nonempty irreducible V(N) has a unique generic point iff it contains N^omega")
def _sob_per_set(c: SpaceCtx):
    sp = c.space
    for n, v in _irreducible_vs(c):
        unique = len(sp.generic_points(v)) == 1
        om = sp.omega(n)
        contains = om in sp.point_masks and (v >> sp.point_masks.index(om)) & 1 == 1
        if unique != contains:
            return False, {"N": c.lab(n), "unique_generic": unique, "contains_omega": contains}
    return True, None


@claim("sober.global", "if every nonempty irreducible V(N) contains N^omega, the space is sober")
def _sob_global(c: SpaceCtx):
    sp = c.space
    hyp = all(sp.omega(n) in sp.point_masks and (v >> sp.point_masks.index(sp.omega(n))) & 1 for n, v in _irreducible_vs(c))
    sober, bad = sp.is_sober()
    if hyp and not sober:
        return False, {"irreducible_without_unique_generic": c.plab(bad)}
    return True, None


@claim("sober.selection", "an irreducible closed K inside a finite union of V-sets lies inside one of them")
def _sob_selection(c: SpaceCtx):
    sp = c.space
    if not sp.eager:
        return None, None
    irreducible = sp.irreducible_closed_sets()
    for b in sp.basis:
        rep = [sp.subbasis[i] for i in sp.basis_representation(b)]
        for k in irreducible:
            if is_subset(k, b) and not any(is_subset(k, v) for v in rep):
                return False, {"K": c.plab(k), "union": c.plab(b)}
    return True, None


@claim("sober.corollary", "proper, prime and minimal prime spaces are sober", kinds=("proper", "prime", "minimal_prime"))
def _sob_cor(c: SpaceCtx):
    sober, bad = c.space.is_sober()
    return sober, None if sober else {"irreducible": c.plab(bad)}


@claim("sober.strongly_irreducible", "the strongly irreducible space is sober", kinds=("strongly_irreducible",))
def _sirrs(c: SpaceCtx):
    sober, bad = c.space.is_sober()
    return sober, None if sober else {"irreducible": c.plab(bad)}


# ------------------------------------------------------------------ connectedness


@claim("connected.zero_point", "if {0} is a point the space is connected")
def _conis(c: SpaceCtx):
    if c.lattice.bottom not in c.space.point_masks:
        return True, None
    conn = c.space.connectivity_report()
    return conn.connected, None if conn.connected else {"separation": [c.plab(s) for s in conn.separation]}


@claim(
    "connected.corollary",
    "proper, finitely generated and cyclic spaces are connected",
    kinds=("proper", "finitely_generated", "cyclic"),
)
def _conis_cor(c: SpaceCtx):
    conn = c.space.connectivity_report()
    return conn.connected, None if conn.connected else {"separation": [c.plab(s) for s in conn.separation]}


@claim("basis.intersection_closed", "the closed basis is closed under binary intersection, via V(N_i + K_j)")
def _th1(c: SpaceCtx):
    sp = c.space
    if not sp.eager:
        return None, None
    basis = sp.basis
    present = set(basis)
    reps = {b: sp.basis_representation(b) for b in basis}
    subs = c.lattice.subs
    if len(basis) ** 2 <= 250_000:
        pairs = itertools.combinations_with_replacement(basis, 2)
    else:
        pairs = [(c.rng.choice(basis), c.rng.choice(basis)) for _ in range(20 * SAMPLES)]
    for a, b in pairs:
        meet = a & b
        rhs = 0
        for i in reps[a]:
            for j in reps[b]:
                rhs |= sp.v_set(c.lattice.sum((subs[i], subs[j])))
        if meet not in present or meet != rhs:
            return False, {"A": c.plab(a), "B": c.plab(b)}
    return True, None


@claim("disconnected.iff_basis", "the space is disconnected iff the closed basis strongly disconnects it")
def _cor1(c: SpaceCtx):
    conn = c.space.connectivity_report()
    ok = (not conn.connected) == conn.basis_strongly_disconnects
    return ok, None if ok else {"connected": conn.connected}


# ------------------------------------------------------------------ maps


@claim("map.continuous", "the pullback is continuous; preimage of V(N) is V(<phi(N)>)", scope="map")
def _conmap1(c: MapCtx):
    res = continuity_check(c.pmap)
    if res.continuous:
        return True, None
    bad = [i for i, (a, b) in res.certificate.items() if a != b]
    return False, {"N": [c.pmap.target_space.lattice.label(i) for i in bad], "closed_preimages": res.closed_preimages}


@claim("map.homeomorphism", "for surjective phi the pullback is a homeomorphism onto V(ker phi)", scope="map")
def _conmap2(c: MapCtx):
    if not c.hom.is_surjective():
        return None, None
    h = surjective_homeo_check(c.pmap)
    if h.homeomorphic:
        return True, None
    tgt = c.pmap.target_space
    return False, {
        "image": tgt.set_labels(h.onto),
        "V(ker)": tgt.set_labels(h.v_kernel),
        "injective": h.injective,
        "closed_map": h.closed_map,
        "continuous": h.continuous,
    }


@claim("map.density", "the image is dense iff ker phi lies in every point", scope="map")
def _conmap3(c: MapCtx):
    d = density_check(c.pmap)
    if d.biconditional:
        return True, None
    return False, {
        "dense": d.dense,
        "ker": c.hom.source.label_set(d.lhs),
        "meet_of_points": c.hom.source.label_set(d.rhs),
    }


@claim("map.quotient", "the space on M/N is homeomorphic to V(N) via the quotient map", scope="map")
def _quotient(c: MapCtx):
    if c.quotient_of is None:
        return None, None
    h = surjective_homeo_check(c.pmap)
    tgt = c.pmap.target_space
    M = c.hom.source
    n = c.quotient_of
    k = subtractive_closure(M, n)
    onto_n = h.homeomorphic and h.onto == tgt.v_set(n)
    onto_k = h.homeomorphic and h.onto == tgt.v_set(k)
    detail = {"N": M.label_set(n), "k(N)": M.label_set(k), "onto_V(N)": onto_n, "onto_V(k(N))": onto_k}
    if k != n:
        return "info", detail
    return onto_n, None if onto_n else detail


@claim("map.identities", "phi*(V(N')) = V(phi^-1 N') when onto, and cl(phi*(V(N'))) = V(phi^-1 N')", scope="map")
def _map_identities(c: MapCtx):
    d = density_check(c.pmap)
    img = surjective_homeo_check(c.pmap).image_identity if c.hom.is_surjective() else None
    detail = {"closure_identity": d.closure_identity, "image_identity": img}
    if d.closure_identity and img in (True, None):
        return True, None
    return "info", detail


# ------------------------------------------------------------------ running


def _status(ok) -> str:
    if ok == "info":
        return "info"
    return "pass" if ok else "fail"


def _space_rows(name, module, kind, claims, seed, caps) -> list[ClaimReport]:
    rows = []
    try:
        lat = lattice_of(module, **caps)
        space = space_of(lat, kind)
    except CapExceeded as exc:
        return [ClaimReport(cl.id, cl.statement, name, kind, "skipped", {"reason": str(exc)}) for cl in claims]
    for cl in claims:
        ctx = SpaceCtx(name, module, lat, kind, space, random.Random(f"{seed}:{name}:{kind}:{cl.id}"))
        t = time.perf_counter()
        try:
            ok, wit = cl.check(ctx)
        except CapExceeded as exc:
            ok, wit = "skip", {"reason": str(exc)}
        dt = time.perf_counter() - t
        if ok is None:
            continue
        status = "skipped" if ok == "skip" else _status(ok)
        rows.append(ClaimReport(cl.id, cl.statement, name, kind, status, wit, elapsed=dt))
    return rows


def _map_rows(name, module, kinds, claims, caps) -> list[ClaimReport]:
    rows = []
    try:
        homs = homomorphisms(module, **caps)
    except CapExceeded as exc:
        return [ClaimReport("map.*", "homomorphism claims", name, "*", "skipped", {"reason": str(exc)})]
    for nh in homs:
        hname, hom = nh.name, nh.hom
        for kind in kinds:
            try:
                if not check_contraction(hom, kind, **caps):
                    continue
                pm = pullback(hom, kind, **caps)
            except CapExceeded as exc:
                rows.append(ClaimReport("map.*", "homomorphism claims", name, kind, "skipped", {"reason": str(exc)}, hom=hname))
                continue
            ctx = MapCtx(name, hname, hom, kind, pm, nh.quotient_of)
            for cl in claims:
                t = time.perf_counter()
                ok, wit = cl.check(ctx)
                if ok is None:
                    continue
                rows.append(ClaimReport(cl.id, cl.statement, name, kind, _status(ok), wit, hom=hname, elapsed=time.perf_counter() - t))
    return rows


def _structure_job(args) -> list[ClaimReport]:
    name, module, kinds, claim_ids, seed, caps = args
    space_claims = [REGISTRY[i] for i in claim_ids if REGISTRY[i].scope == "space"]
    map_claims = [REGISTRY[i] for i in claim_ids if REGISTRY[i].scope == "map"]
    rows = []
    for kind in kinds:
        applicable = [cl for cl in space_claims if cl.kinds is None or kind in cl.kinds]
        rows.extend(_space_rows(name, module, kind, applicable, seed, caps))
    if map_claims:
        rows.extend(_map_rows(name, module, kinds, map_claims, caps))
    return rows


def resolve_claims(spec: str | Iterable[str] = "all") -> list[str]:
    if spec == "all" or spec is None:
        return list(REGISTRY)
    ids = [s.strip() for s in spec.split(",")] if isinstance(spec, str) else list(spec)
    out = []
    for i in ids:
        matched = [c for c in REGISTRY if c == i or c.startswith(i + ".")]
        if not matched:
            raise ValueError(f"unknown claim {i!r}")
        out.extend(m for m in matched if m not in out)
    return out


def run_theorem_suite(
    corpus: Corpus,
    kinds: Iterable[str] = KINDS,
    claims="all",
    seed: int = SEED,
    jobs: int = 1,
    **caps,
) -> list[ClaimReport]:
    kinds = [k for k in KINDS if k in set(kinds)]
    claim_ids = resolve_claims(claims)
    jobs_args = [(name, module, kinds, claim_ids, seed, caps) for name, module in corpus]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_structure_job, jobs_args))
    else:
        chunks = [_structure_job(a) for a in jobs_args]
    return [row for chunk in chunks for row in chunk]


def summarize(rows: list[ClaimReport]) -> dict:
    by_status: dict[str, int] = {}
    by_claim: dict[str, dict[str, int]] = {}
    for r in rows:
        by_status[r.status] = by_status.get(r.status, 0) + 1
        d = by_claim.setdefault(r.claim, {})
        d[r.status] = d.get(r.status, 0) + 1
    return {"rows": len(rows), "status": dict(sorted(by_status.items())), "claims": dict(sorted(by_claim.items()))}


def report_json(rows: list[ClaimReport], timing: bool = False) -> str:
    payload = {"summary": summarize(rows), "rows": [r.as_dict(timing) for r in rows]}
    return json.dumps(payload, indent=1, sort_keys=False) + "\n"


def write_witnesses(rows: list[ClaimReport], corpus: Corpus, directory) -> list[Path]:
    """One replayable JSON file per failed row."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    modules = dict(corpus)
    written = []
    for k, r in enumerate(x for x in rows if x.status == "fail"):
        doc = {
            "claim": r.claim,
            "statement": r.statement,
            "kind": r.kind,
            "hom": r.hom,
            "inputs": r.witness,
            "structure_name": r.structure,
            "structure": structure_to_dict(modules[r.structure]),
        }
        if r.hom is not None:
            hom = {h.name: h.hom for h in homomorphisms(modules[r.structure])}[r.hom]
            doc["map"] = [[hom.source.elements[x], hom.target.elements[y]] for x, y in enumerate(hom.table)]
            doc["map_target"] = structure_to_dict(hom.target)
        path = directory / f"witness_{k:03d}_{r.claim}.json"
        path.write_text(json.dumps(doc, indent=1) + "\n")
        written.append(path)
    return written


# ------------------------------------------------------------------ mining

QUERIES = (
    "union_strict",
    "v_not_closed",
    "non_sober",
    "subbasis_no_strong_disconnect",
    "radical_equality_fails",
    "quotient_corollary_mismatch",
)


@dataclass
class MiningResult:
    query: str
    witnesses: list[dict] = field(default_factory=list)
    searched: int = 0
    exhausted: bool = True  # False when the witness limit stopped the search early
    skipped: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


def _mine_space(query, name, module, kind, space: SubbasisSpace) -> Iterable[dict]:
    lat = space.lattice
    lab = module.label_set
    if query == "union_strict":
        for n, k in itertools.combinations(lat.subs, 2):
            lhs = space.v_set(n) | space.v_set(k)
            rhs = space.v_set(n & k)
            if lhs != rhs:
                yield {"N": lab(n), "K": lab(k), "V(N)|V(K)": space.set_labels(lhs), "V(N&K)": space.set_labels(rhs)}
    elif query == "v_not_closed":
        if not space.eager:
            return
        subbasis = set(space.subbasis_family)
        for cset in space.closed_sets:
            if cset not in subbasis:
                yield {"closed_set": space.set_labels(cset), "as_union_of": [lat.label(i) for i in space.basis_representation(cset)]}
    elif query == "non_sober":
        sober, bad = space.is_sober()
        if not sober:
            yield {"irreducible": space.set_labels(bad), "generic_points": [space.point_label(x) for x in space.generic_points(bad)]}
    elif query == "subbasis_no_strong_disconnect":
        conn = space.connectivity_report()
        if not conn.connected and not conn.subbasis_strongly_disconnects:
            yield {"basis_witness": [space.set_labels(s) for s in conn.basis_witness]}
    elif query == "radical_equality_fails":
        cls = classifier(lat)
        for n in lat.subs:
            r = cls.radical(n)
            if space.v_set(r) != space.v_set(n):
                yield {"N": lab(n), "radical": lab(r), "V(N)": space.set_labels(space.v_set(n)), "V(radical)": space.set_labels(space.v_set(r))}


def _mine_quotients(name, module, kind, caps) -> Iterable[dict]:
    from .algebra import quotient_bourne

    lat = lattice_of(module, **caps)
    for n in lat.subs:
        k = subtractive_closure(module, n)
        if k == n:
            continue
        _, proj = quotient_bourne(module, n)
        if not check_contraction(proj, kind, **caps):
            continue
        pm = pullback(proj, kind, **caps)
        tgt = pm.target_space
        onto = pm.apply(pm.source_space.full)
        if onto != tgt.v_set(n):
            yield {
                "N": module.label_set(n),
                "k(N)": module.label_set(k),
                "image": tgt.set_labels(onto),
                "V(N)": tgt.set_labels(tgt.v_set(n)),
                "V(k(N))": tgt.set_labels(tgt.v_set(k)),
            }


def mine_counterexamples(
    corpus: Corpus,
    query: str,
    kinds: Iterable[str] = KINDS,
    limit: int | None = None,
    **caps,
) -> MiningResult:
    if query not in QUERIES:
        raise ValueError(f"unknown query {query!r}; choose from {QUERIES}")
    kinds = [k for k in KINDS if k in set(kinds)]
    res = MiningResult(query)
    for name, module in corpus:
        for kind in kinds:
            try:
                if query == "quotient_corollary_mismatch":
                    found = _mine_quotients(name, module, kind, caps)
                else:
                    found = _mine_space(query, name, module, kind, space_of(lattice_of(module, **caps), kind))
                res.searched += 1
                for w in found:
                    res.witnesses.append({"structure": name, "kind": kind, **w})
                    if limit is not None and len(res.witnesses) >= limit:
                        res.exhausted = False
                        return res
            except CapExceeded:
                res.skipped += 1
    return res


def space_context(name: str, module: Semimodule, kind: str, seed: int = SEED, **caps) -> SpaceCtx:
    lat = lattice_of(module, **caps)
    return SpaceCtx(name, module, lat, kind, space_of(lat, kind), random.Random(f"{seed}:{name}:{kind}"))
