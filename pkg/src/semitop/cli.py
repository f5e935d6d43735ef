"""``semitop`` command line: describe, classify, topology, maps, verify, mine."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import Homomorphism, verify_homomorphism
from .classes import KINDS, classify_matrix
from .corpus import Corpus, curated
from .errors import AxiomError, CapExceeded, ContractionError, StructureError
from .io import load_map, load_structure
from .lattice import DEFAULT_MAX_LATTICE, DEFAULT_MAX_MODULE, lattice_of
from .maps import check_contraction, pullback
from .maps import report as map_report
from .sweep import SweepSpec
from .topology import space_of
from .verifier import QUERIES, SEED, mine_counterexamples, report_json, resolve_claims, run_theorem_suite, summarize, write_witnesses

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=1, ensure_ascii=False) + "\n")


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*map(str, r)) for r in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _kinds(text: str | None) -> list[str]:
    if not text or text == "all":
        return list(KINDS)
    out = [k.strip() for k in text.split(",") if k.strip()]
    bad = [k for k in out if k not in KINDS]
    if bad:
        raise StructureError(f"unknown kind(s) {bad}; choose from {', '.join(KINDS)}")
    return out


def _kind(text: str) -> str:
    if text not in KINDS:
        raise argparse.ArgumentTypeError(f"unknown kind {text!r}; choose from {', '.join(KINDS)}")
    return text


def _caps(args) -> dict:
    return {"max_module_size": args.max_module_size, "max_lattice": args.max_lattice}


def _corpus(args) -> Corpus:
    spec = SweepSpec.parse(args.sweep) if args.sweep else None
    if args.corpus in (None, "curated"):
        return Corpus(curated(), spec)
    if args.corpus == "none":
        return Corpus([], spec)
    path = Path(args.corpus)
    if not path.is_dir():
        raise StructureError(f"corpus directory {path} does not exist")
    corpus = Corpus.from_dir(path)
    corpus.sweep_spec = spec
    return corpus


# ------------------------------------------------------------------ verbs


def cmd_describe(args) -> int:
    module = load_structure(args.structure)
    lat = lattice_of(module, **_caps(args))
    ring = module.ring
    out = {
        "semiring": {"size": len(ring), "elements": list(ring.elements), "zero": ring.elements[ring.zero], "one": ring.elements[ring.one]},
        "module": {"size": len(module), "elements": list(module.elements), "zero": module.elements[module.zero]},
        "axioms": "ok",
        "subsemimodules": lat.to_json(),
    }
    if args.dot:
        out["dot"] = lat.to_dot()
    if args.format == "text":
        sys.stdout.write(
            f"semiring: {len(ring)} elements {list(ring.elements)}\n"
            f"module:   {len(module)} elements {list(module.elements)}\n"
            "axioms:   ok\n"
            f"{len(lat)} subsemimodules\n"
        )
        for i in range(len(lat)):
            sys.stdout.write(f"  {i}: {lat.label(i)}\n")
        if args.dot:
            sys.stdout.write(lat.to_dot())
    else:
        _emit(out)
    return 0


def cmd_classify(args) -> int:
    module = load_structure(args.structure)
    lat = lattice_of(module, **_caps(args))
    kinds = _kinds(args.kinds)
    matrix = classify_matrix(lat, kinds)
    labels = [lat.label(i) for i in range(len(lat))]
    if args.format == "text":
        rows = [[k] + ["x" if v else "." for v in matrix[k]] for k in kinds]
        sys.stdout.write(_table(["kind"] + labels, rows))
    else:
        _emit({"subsemimodules": labels, "kinds": kinds, "matrix": matrix})
    return 0


def cmd_topology(args) -> int:
    module = load_structure(args.structure)
    lat = lattice_of(module, **_caps(args))
    space = space_of(lat, args.kind)
    rep = space.report(dot=args.dot)
    if args.format == "text":
        c = rep["connectivity"]
        rows = [
            ["points", str(rep["counts"]["points"])],
            ["closed sets", str(rep["counts"]["closed_sets"])],
            ["T0", str(rep["t0"])],
            ["T1", str(rep["t1"])],
            ["sober", str(rep["sober"])],
            ["connected", str(c["connected"])],
            ["basis strongly disconnects", str(c["basis_strongly_disconnects"])],
            ["subbasis strongly disconnects", str(c["subbasis_strongly_disconnects"])],
            ["scc", str(rep["scc"]["holds"])],
        ]
        sys.stdout.write(f"kind: {args.kind}\npoints: {', '.join(rep['points'])}\n")
        sys.stdout.write(_table(["property", "value"], rows))
        if args.dot:
            sys.stdout.write(rep["dot"])
    else:
        _emit(rep)
    return 0


def cmd_maps(args) -> int:
    source = load_structure(args.source)
    target = load_structure(args.target)
    if source.ring != target.ring:
        raise StructureError("source and target are over different semirings")
    hom = Homomorphism(source, target, load_map(args.map, source, target))
    rep = verify_homomorphism(hom)
    if not rep:
        raise AxiomError(rep)
    caps = _caps(args)
    res = check_contraction(hom, args.kind, **caps)
    if not res:
        _emit(
            {
                "kind": args.kind,
                "contraction": {"holds": False, "witness": target.label_set(res.witness)},
                "continuity": None,
                "homeomorphism": None,
                "density": None,
            }
        )
        return EXIT_FAIL
    _emit(map_report(pullback(hom, args.kind, **caps)))
    return 0


def cmd_verify(args) -> int:
    corpus = _corpus(args)
    claims = resolve_claims(args.claims)
    rows = run_theorem_suite(corpus, _kinds(args.kinds), claims, seed=args.seed, jobs=args.jobs, **_caps(args))
    text = report_json(rows)
    if args.out:
        Path(args.out).write_text(text)
    if args.witness_dir:
        write_witnesses(rows, corpus, args.witness_dir)
    summary = summarize(rows)
    if args.format == "text":
        table = [
            [cid, str(st.get("pass", 0)), str(st.get("fail", 0)), str(st.get("info", 0)), str(st.get("skipped", 0))]
            for cid, st in summary["claims"].items()
        ]
        sys.stdout.write(_table(["claim", "pass", "fail", "info", "skipped"], table))
    elif not args.out:
        sys.stdout.write(text)
    else:
        _emit(summary)
    return EXIT_FAIL if summary["status"].get("fail") else 0


def cmd_mine(args) -> int:
    corpus = _corpus(args)
    res = mine_counterexamples(corpus, args.query, _kinds(args.kinds), args.limit, **_caps(args))
    out = res.as_dict()
    out["certified_none"] = not res.witnesses and res.exhausted and res.skipped == 0
    _emit(out)
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    def globals_parser(suppress: bool) -> argparse.ArgumentParser:
        # subparsers must not overwrite values given before the verb
        def dflt(v):
            return argparse.SUPPRESS if suppress else v

        gp = argparse.ArgumentParser(add_help=False)
        g = gp.add_argument_group("global")
        g.add_argument("--max-module-size", type=int, default=dflt(DEFAULT_MAX_MODULE), metavar="N")
        g.add_argument("--max-lattice", type=int, default=dflt(DEFAULT_MAX_LATTICE), metavar="N")
        g.add_argument("--jobs", type=int, default=dflt(1), metavar="N", help="worker processes for verify")
        g.add_argument("--seed", type=int, default=dflt(SEED), help="seed for sampled families in verify")
        return gp

    common = globals_parser(True)

    p = argparse.ArgumentParser(prog="semitop", description=__doc__, parents=[globals_parser(False)])
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help):
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.set_defaults(fn=fn)
        return sp

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "text"), default="json")

    def corpus_flags(sp):
        sp.add_argument("--corpus", default="curated", help="directory of structure files, 'curated' or 'none'")
        sp.add_argument("--sweep", default=None, help='sweep bounds such as "r<=2,m<=4"')
        sp.add_argument("--kinds", default="all", help="comma-separated kinds")

    d = verb("describe", cmd_describe, "carriers, axiom check and subsemimodule lattice")
    d.add_argument("structure")
    d.add_argument("--dot", action="store_true", help="include the lattice Hasse diagram as DOT")
    fmt(d)

    c = verb("classify", cmd_classify, "kind membership of every subsemimodule")
    c.add_argument("structure")
    c.add_argument("--kinds", default="all")
    fmt(c)

    t = verb("topology", cmd_topology, "the space on one distinguished class")
    t.add_argument("structure")
    t.add_argument("--kind", type=_kind, required=True)
    t.add_argument("--dot", action="store_true", help="include the specialization diagram as DOT")
    fmt(t)

    m = verb("maps", cmd_maps, "pullback checks along a homomorphism")
    m.add_argument("source")
    m.add_argument("target")
    m.add_argument("map", help="JSON list of [source_label, target_label] pairs")
    m.add_argument("--kind", type=_kind, required=True)

    v = verb("verify", cmd_verify, "run every claim over a corpus")
    corpus_flags(v)
    v.add_argument("--claims", default="all")
    v.add_argument("--out", default=None, help="write the full JSON report here")
    v.add_argument("--witness-dir", default=None, help="write one replayable file per failure here")
    fmt(v)

    n = verb("mine", cmd_mine, "exhaustive counterexample search")
    n.add_argument("query", choices=QUERIES)
    corpus_flags(n)
    n.add_argument("--limit", type=int, default=None)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except AxiomError as exc:
        r = exc.report
        sys.stderr.write(f"semitop: axiom violated: {r.axiom}; witness {list(r.witness)}\n")
        return EXIT_INPUT
    except (StructureError, ContractionError, OSError) as exc:
        sys.stderr.write(f"semitop: {exc}\n")
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        sys.stderr.write(f"semitop: invalid JSON: {exc}\n")
        return EXIT_INPUT
    except CapExceeded as exc:
        sys.stderr.write(f"semitop: refused: {exc}\n")
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
