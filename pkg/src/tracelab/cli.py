"""Command line driver.

Exit codes: 0 success, 1 internal assertion failure, 2 usage or parse error.
Human-readable output is a rendering of the same JSON report.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .covers import (BUILTIN_PRESENTATIONS, CoverSpec, build_finite_cover, free_abelian_cover_spec,
                     h1_growth_experiment, presentation_complex)
from .exact import GoldenScalar
from .icosians import essential_representation
from .jets import SHIFTED, jets_check, lambda_representation
from .lattice import verify_midpoint_lattice
from .subgroups import Presentation, abelianization, coset_table, gamma_presentation, schreier_presentation
from .verdict import OMEGA_NAMES, enumerate_words, rosenberger_verdict
from .words import WordError, all_words, parse_word

SCHEMA_VERSION = 1
SEED_ENV = "TRACELAB_SEED"


class UsageError(Exception):
    pass


def parse_alpha(text: str) -> GoldenScalar:
    names = {v: k for k, v in OMEGA_NAMES.items()}
    if text in names:
        return names[text]
    try:
        return GoldenScalar.parse(text)
    except ValueError:
        raise UsageError(f"alpha must be one of {sorted(names)} or 'a+b*phi', not {text!r}")


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    return int(env) if env else 0


def _report(args, argv, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "tool": "tracelab", "version": __version__,
            "command": ["tracelab", *argv], "seed": _seed(args), **body}


# -- subcommands --------------------------------------------------------------

def cmd_analyze(args) -> tuple[dict, int]:
    w = parse_word(args.word)
    v = rosenberger_verdict(w)
    out = {"analysis": v.to_json()}
    if args.deep:
        rng = np.random.default_rng(_seed(args))
        deep = []
        for a in v.report.roots_in_omega():
            rep = essential_representation(w, a)
            gd = gamma_presentation(w, a)
            lam = lambda_representation(w, a, SHIFTED)
            deep.append({
                "alpha": OMEGA_NAMES[a],
                "multiplicity": v.report.multiplicities[a],
                "representation": rep.to_json(),
                "gamma": gd.summary(),
                "jets": lam.to_json(),
            })
        out["deep"] = deep
        out["jets_check"] = jets_check([w], rng)
    return out, 0


def cmd_enumerate(args) -> tuple[dict, int]:
    census = enumerate_words(args.kmax)
    return {"census": census.to_json(include_words=args.words)}, 0


def cmd_verify_lemma2(args) -> tuple[dict, int]:
    rep = verify_midpoint_lattice()
    return {"lattice": rep}, 0 if rep["all_passed"] else 1


def cmd_subgroup(args) -> tuple[dict, int]:
    w = parse_word(args.word)
    alpha = parse_alpha(args.alpha) if args.alpha else None
    if alpha is None:
        v = rosenberger_verdict(w)
        roots = v.report.roots_in_omega()
        if not roots:
            raise UsageError(f"tau_W has no exceptional root for {w}; nothing to do")
        alpha = roots[0]
    rep = essential_representation(w, alpha)
    table = coset_table(rep, args.sub)
    p = schreier_presentation(table, w)
    out = {"word": str(w), "alpha": OMEGA_NAMES.get(alpha, str(alpha)), "subgroup": args.sub,
           "index": table.index, "census": list(p.census()),
           "euler_characteristic": p.euler_characteristic(),
           "presentation": p.to_json(), "presentation_text": p.to_text().splitlines()}
    if args.sub == "C":
        out["summary"] = gamma_presentation(w, alpha).summary()
    if args.output:
        Path(args.output).write_text(json.dumps(p.to_json(), indent=1) + "\n")
    return out, 0


def _load_presentation(args) -> Presentation:
    if args.builtin:
        return BUILTIN_PRESENTATIONS[args.builtin]()
    if args.presentation_file:
        text = Path(args.presentation_file).read_text()
        if text.lstrip().startswith("{"):
            data = json.loads(text)
            return Presentation.from_json(data.get("presentation", data))
        return Presentation.from_text(text)
    if args.word:
        w = parse_word(args.word)
        if args.alpha:
            return gamma_presentation(w, parse_alpha(args.alpha)).presentation
        roots = rosenberger_verdict(w).report.roots_in_omega()
        if not roots:
            raise UsageError(f"tau_W has no exceptional root for {w}")
        # prefer the root whose subgroup has the most free abelian rank
        cands = [gamma_presentation(w, a).presentation for a in roots]
        return max(cands, key=lambda p: abelianization(p).free_rank)
    raise UsageError("cover needs --presentation-file, --builtin or --word")


def cmd_cover(args) -> tuple[dict, int]:
    p = _load_presentation(args)
    if args.assign:
        family = {n: CoverSpec.parse(n, args.assign, p.n_generators) for n in args.n}
    else:
        family = {n: free_abelian_cover_spec(p, n) for n in args.n}
    table = h1_growth_experiment(p, family, args.n)
    if args.export_complex:
        K = presentation_complex(p)
        Path(args.export_complex).write_text(build_finite_cover(K, family[args.n[0]]).to_text())
    out = {"generators": p.n_generators, "relators": len(p.relators),
           "assignments": {str(n): family[n].to_text() or "trivial" for n in args.n},
           "growth": table.to_json()}
    if args.csv:
        out["csv"] = table.to_csv()
    return out, 0


def cmd_jets_check(args) -> tuple[dict, int]:
    rng = np.random.default_rng(_seed(args))
    pool = [w for k in range(1, args.kmax + 1) for w in all_words(k)]
    idx = rng.choice(len(pool), size=min(args.samples, len(pool)), replace=False)
    rep = jets_check([pool[i] for i in sorted(idx)], rng)
    ok = rep["jet_agreement"] and rep["z_conjugates"] == 30 and rep["z_conjugates_closed"]
    return {"jets": rep}, 0 if ok else 1


# -- rendering ----------------------------------------------------------------

def render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_scalar(v)}" if not isinstance(v, (dict, list)) or _flat_list(v)
                         else f"{pad}-\n{render_text(v, indent + 1)}" for v in obj)
    return pad + _scalar(obj)


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, str) and "\n" in v:
        return "\n" + v
    return str(v) if v is not None else "-"


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tracelab", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"tracelab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--seed", type=int, default=None, help=f"RNG seed (fallback: ${SEED_ENV}, then 0)")
        return p

    p = common(sub.add_parser("analyze", help="trace polynomial and verdict for a relator word"))
    p.add_argument("word")
    p.add_argument("--deep", action="store_true",
                   help="add representations, the index-30 presentation and jet checks")
    p.set_defaults(func=cmd_analyze)

    p = common(sub.add_parser("enumerate", help="classify all words up to a syllable count"))
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--words", action="store_true", help="include every word's verdict")
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("verify-lemma2", help="midpoint lattice checks"))
    p.set_defaults(func=cmd_verify_lemma2)

    p = common(sub.add_parser("subgroup", help="Reidemeister-Schreier presentation"))
    p.add_argument("word")
    p.add_argument("--alpha", help="exceptional root: 0, 1, phi, phi-1 (default: first root)")
    p.add_argument("--sub", choices=("C", "V"), default="C")
    p.add_argument("--output", help="also write the presentation JSON to this file")
    p.set_defaults(func=cmd_subgroup)

    p = common(sub.add_parser("cover", help="mod-2 homology of Z/n x Z/n covers"))
    src = p.add_mutually_exclusive_group()
    src.add_argument("--presentation-file")
    src.add_argument("--builtin", choices=sorted(BUILTIN_PRESENTATIONS))
    src.add_argument("--word", help="use the index-30 subgroup presentation of this word")
    p.add_argument("--alpha")
    p.add_argument("--n", type=int, nargs="+", default=[3])
    p.add_argument("--assign", help='generator images, e.g. "1:1,0;2:0,1" (default: free abelianisation)')
    p.add_argument("--csv", action="store_true", help="print the growth table as CSV")
    p.add_argument("--export-complex", help="write the first cover in the edge-list text format")
    p.set_defaults(func=cmd_cover)

    p = common(sub.add_parser("jets-check", help="dual-number checks"))
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(func=cmd_jets_check)
    return ap


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        body, code = args.func(args)
    except (WordError, UsageError) as e:
        print(f"tracelab: error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except (AssertionError, ArithmeticError, RuntimeError) as e:
        print(f"tracelab: internal failure: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    report = _report(args, argv, body)
    if args.json:
        print(json.dumps(report, indent=1))
    elif getattr(args, "csv", False):
        print(report["csv"], end="")
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
