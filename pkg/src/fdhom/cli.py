"""Command line interface.

Exit codes: 0 success/confirmed, 1 certified negative (verification failed,
counterexample found, certified-false query), 2 uncertified/cap-bound,
3 input error.  Reports are JSON with a stable field order; a human summary
goes to stdout.
"""

import argparse
import os
import sys

from . import schema
from .algebra import AlgebraError, PresentationError
from .catalog import CatalogError, FamilySpec, enumerate_corpus
from .conjectures import gorenstein_probe, is_tilting, scan_quasi_generator_bound, wakamatsu_probe
from .correspondence import (
    phi,
    psi,
    quasi_cogenerator_degree,
    quasi_generator_degree,
    verify_cogenerator_correspondence,
    verify_generator_correspondence,
    verify_two_sided_correspondence,
)
from .domdim import DomdimError, MethodDisagreement, codomdim, domdim
from .homology import ext, idim, pdim, tor
from .modules import ModuleError, hom, in_add
from .report import make_report, start_clock
from .values import DimValue

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNCERTIFIED = 2
EXIT_INPUT = 3


class CLIInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise CLIInputError(message)


def _common() -> _Parser:
    c = _Parser(add_help=False)
    c.add_argument("--out", help="path for the JSON report")
    c.add_argument("--cap", type=int, default=None,
                   help="search cap (default 16, or FDHOM_DEFAULT_CAP)")
    c.add_argument("--seed", type=int, default=None,
                   help="seed echoed into the report")
    return c


def build_parser():
    common = _common()
    parser = _Parser(prog="fdhom",
                     description="homological invariants of finite-dimensional "
                                 "algebras over prime fields")
    sub = parser.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("check-algebra", parents=[common])
    sp.add_argument("algebra")

    for name in ("hom", "ext", "tor", "add-member"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("first")
        sp.add_argument("second")
        if name in ("ext", "tor"):
            sp.add_argument("--i", type=int, required=True, help="degree")

    for name in ("pdim", "idim"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("module")
        sp.add_argument("--certify-periodic", action="store_true",
                        help="allow a repeated-syzygy certificate for infinity")

    sp = sub.add_parser("dual", parents=[common])
    sp.add_argument("module")
    sp.add_argument("--out-module", help="write the dual module file here")

    for name in ("end", "phi", "psi"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("module")
        sp.add_argument("--out-algebra", help="write the endomorphism algebra file here")
        sp.add_argument("--out-module", help="write the induced module file here")

    sp = sub.add_parser("domdim", parents=[common])
    sp.add_argument("module")
    sp.add_argument("--Q", required=True, dest="q", help="relative module file")
    sp.add_argument("--method", choices=["greedy", "criterion", "both"], default="greedy")
    sp.add_argument("--codom", action="store_true", help="codominant dimension instead")

    sp = sub.add_parser("quasidegree", parents=[common])
    sp.add_argument("module")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--gen", action="store_true", help="quasi-generator degree (default)")
    grp.add_argument("--cogen", action="store_true", help="quasi-cogenerator degree")

    sp = sub.add_parser("tilting", parents=[common])
    sp.add_argument("module")
    sp.add_argument("--n", type=int, default=None, help="required tilting level")

    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("module")
    sp.add_argument("--thm", choices=["33", "34", "35"], required=True,
                    help="33: quasi-generator/pdim, 34: quasi-cogenerator/idim, "
                         "35: the combined two-sided statement")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=None)

    sp = sub.add_parser("scan", parents=[common])
    sp.add_argument("--conjecture", choices=["42", "wakamatsu", "gorenstein"], required=True)
    sp.add_argument("--family",
                    choices=["linear-An", "nakayama-kupisch", "truncated-polynomial", "custom-file"],
                    required=True)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--t", type=int, default=2)
    sp.add_argument("--kupisch", default="", help="comma-separated series, e.g. 2,2,1")
    sp.add_argument("--cyclic", action="store_true")
    sp.add_argument("--max-dim", type=int, default=5)
    sp.add_argument("--max-summands", type=int, default=2)
    sp.add_argument("--algebra", help="custom-file: algebra JSON")
    sp.add_argument("--modules", nargs="*", default=[], help="custom-file: module JSONs")
    return parser


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    return int(os.environ.get("FDHOM_DEFAULT_CAP", "16"))


def _load_module(path):
    raw = schema.load_json(path)
    from pathlib import Path
    m = schema.parse_module(raw, base_dir=Path(path).parent)
    return m, schema.digest(raw)


def _dimvalue_exit(v: DimValue) -> int:
    return EXIT_OK if v.certified else EXIT_UNCERTIFIED


def _run(args, argv):
    cap = _cap(args)
    inputs = {}
    lines = []

    if args.cmd == "check-algebra":
        raw = schema.load_json(args.algebra)
        inputs["algebra"] = schema.digest(raw)
        try:
            alg = schema.parse_algebra(raw)
        except schema.SchemaError as exc:
            # semantic algebra-axiom failures are certified negatives;
            # malformed documents are input errors (re-raised upstream)
            msg = str(exc)
            if any(word in msg for word in ("associativity", "unit", "idempotent",
                                            "admissible", "infinite", "confluent")):
                lines.append(f"invalid algebra: {msg}")
                return EXIT_NEGATIVE, inputs, {"valid": False, "error": msg}, lines
            raise
        rad = alg.radical()
        results = {"valid": True, "p": alg.p, "dim": alg.dim,
                   "radical_dim": rad.dim, "idempotents": len(alg.idempotents)}
        lines.append(f"valid algebra over GF({alg.p}), dimension {alg.dim}, "
                     f"radical dimension {rad.dim}")
        return EXIT_OK, inputs, results, lines

    if args.cmd == "hom":
        m, inputs["first"] = _load_module(args.first)
        n, inputs["second"] = _load_module(args.second)
        d = hom(m, n).dim
        lines.append(f"dim Hom = {d}")
        return EXIT_OK, inputs, {"dim_hom": d}, lines

    if args.cmd == "ext":
        m, inputs["first"] = _load_module(args.first)
        n, inputs["second"] = _load_module(args.second)
        d = ext(m, n, args.i)
        lines.append(f"dim Ext^{args.i} = {d}")
        return EXIT_OK, inputs, {"degree": args.i, "dim_ext": d}, lines

    if args.cmd == "tor":
        m, inputs["first"] = _load_module(args.first)
        n, inputs["second"] = _load_module(args.second)
        d = tor(m, n, args.i)
        lines.append(f"dim Tor_{args.i} = {d}")
        return EXIT_OK, inputs, {"degree": args.i, "dim_tor": d}, lines

    if args.cmd in ("pdim", "idim"):
        m, inputs["module"] = _load_module(args.module)
        fn = pdim if args.cmd == "pdim" else idim
        v = fn(m, cap, certify_periodic=args.certify_periodic)
        lines.append(f"{args.cmd} = {v}" + ("" if v.certified else " (uncertified)"))
        return _dimvalue_exit(v), inputs, {args.cmd: v.to_json(), "cap": cap}, lines

    if args.cmd == "dual":
        m, inputs["module"] = _load_module(args.module)
        d = m.dual()
        doc = schema.serialize_module(d)
        if args.out_module:
            schema.save_json(doc, args.out_module)
            lines.append(f"wrote dual module to {args.out_module}")
        lines.append(f"dual: side {d.side}, dimension {d.dim}")
        return EXIT_OK, inputs, {"side": d.side, "dim": d.dim}, lines

    if args.cmd in ("end", "phi", "psi"):
        m, inputs["module"] = _load_module(args.module)
        if args.cmd == "psi":
            alg_out, mod_out = psi(m)
        else:
            alg_out, mod_out = phi(m)
        if args.out_algebra:
            schema.save_json(schema.serialize_algebra(alg_out), args.out_algebra)
            lines.append(f"wrote algebra to {args.out_algebra}")
        if args.out_module:
            schema.save_json(schema.serialize_module(mod_out), args.out_module)
            lines.append(f"wrote module to {args.out_module}")
        lines.append(f"endomorphism algebra dimension {alg_out.dim}; "
                     f"module side {mod_out.side}, dimension {mod_out.dim}")
        return EXIT_OK, inputs, {"algebra_dim": alg_out.dim,
                                 "module_dim": mod_out.dim,
                                 "module_side": mod_out.side}, lines

    if args.cmd == "add-member":
        x, inputs["first"] = _load_module(args.first)
        m, inputs["second"] = _load_module(args.second)
        ok = in_add(x, m)
        lines.append(f"in add: {ok}")
        return (EXIT_OK if ok else EXIT_NEGATIVE), inputs, {"in_add": ok}, lines

    if args.cmd == "domdim":
        m, inputs["module"] = _load_module(args.module)
        q, inputs["Q"] = _load_module(args.q)
        fn = codomdim if args.codom else domdim
        res = fn(q, m, cap, method=args.method)
        results = res.to_json()
        results["cap"] = cap
        if not res.applicable:
            lines.append("criterion inapplicable, value < 2")
            return EXIT_UNCERTIFIED, inputs, results, lines
        lines.append(f"relative dominant dimension = {res.value}"
                     + ("" if res.value.certified else " (uncertified)"))
        return _dimvalue_exit(res.value), inputs, results, lines

    if args.cmd == "quasidegree":
        m, inputs["module"] = _load_module(args.module)
        fn = quasi_cogenerator_degree if args.cogen else quasi_generator_degree
        deg = fn(m, cap)
        results = deg.to_json()
        results["cap"] = cap
        if deg.status == "degree":
            lines.append(f"quasi-{deg.kind} degree = {deg.value}")
            return EXIT_OK, inputs, results, lines
        if deg.status == "none":
            lines.append(f"not a quasi-{deg.kind} of any degree")
            return EXIT_NEGATIVE, inputs, results, lines
        lines.append(f"quasi-{deg.kind} degree undecided at cap {cap}")
        return EXIT_UNCERTIFIED, inputs, results, lines

    if args.cmd == "tilting":
        m, inputs["module"] = _load_module(args.module)
        res = is_tilting(m, cap, n=args.n)
        results = res.to_json()
        if not res.certified:
            lines.append("tilting status undecided at cap")
            return EXIT_UNCERTIFIED, inputs, results, lines
        lines.append(f"tilting: {res.holds}"
                     + (f" (level {res.level})" if res.holds else ""))
        return (EXIT_OK if res.holds else EXIT_NEGATIVE), inputs, results, lines

    if args.cmd == "verify":
        m, inputs["module"] = _load_module(args.module)
        if args.thm == "33":
            rep = verify_generator_correspondence(m, args.n, cap)
        elif args.thm == "34":
            rep = verify_cogenerator_correspondence(m, args.n, cap)
        else:
            if args.m is None:
                raise CLIInputError("verify --thm 35 needs both --n and --m")
            rep = verify_two_sided_correspondence(m, args.n, args.m, cap)
        results = rep.to_json()
        lines.append(f"{rep.title}: {rep.status}")
        for c in rep.checks:
            mark = "ok" if c.passed else "FAIL"
            cert = "" if c.certified else " (uncertified)"
            lines.append(f"  [{mark}] {c.name}{cert} {c.detail}")
        code = {"confirmed": EXIT_OK, "failed": EXIT_NEGATIVE,
                "uncertified": EXIT_UNCERTIFIED}[rep.status]
        return code, inputs, results, lines

    if args.cmd == "scan":
        return _run_scan(args, cap, inputs, lines)

    raise CLIInputError(f"unknown command {args.cmd!r}")  # pragma: no cover


def _family_spec(args) -> FamilySpec:
    kupisch = tuple(int(x) for x in args.kupisch.split(",") if x) if args.kupisch else ()
    return FamilySpec(family=args.family, p=args.p, n=args.n, kupisch=kupisch,
                      cyclic=args.cyclic, t=args.t, max_total_dim=args.max_dim,
                      max_summands=args.max_summands)


def _scan_corpus(args, inputs):
    if args.family == "custom-file":
        if not args.algebra:
            raise CLIInputError("scan --family custom-file needs --algebra")
        raw = schema.load_json(args.algebra)
        inputs["algebra"] = schema.digest(raw)
        alg = schema.parse_algebra(raw)
        mods = []
        for k, path in enumerate(args.modules):
            rawm = schema.load_json(path)
            inputs[f"module{k}"] = schema.digest(rawm)
            from pathlib import Path
            mods.append(schema.parse_module(rawm, base_dir=Path(path).parent, algebra=alg))
        return alg, mods
    spec = _family_spec(args)
    inputs["family"] = {"family": spec.family, "p": spec.p, "n": spec.n,
                        "kupisch": list(spec.kupisch), "cyclic": spec.cyclic,
                        "t": spec.t, "max_total_dim": spec.max_total_dim,
                        "max_summands": spec.max_summands}
    return enumerate_corpus(spec)


def _run_scan(args, cap, inputs, lines):
    alg, mods = _scan_corpus(args, inputs)
    if args.conjecture == "42":
        verdicts = scan_quasi_generator_bound(
            [(m.name or f"module{k}", m) for k, m in enumerate(mods)], cap)
        counts = {}
        for v in verdicts:
            counts[v.status] = counts.get(v.status, 0) + 1
        results = {"verdicts": [v.to_json() for v in verdicts], "counts": counts,
                   "cap": cap}
        lines.append(f"scanned {len(verdicts)} instances: {counts}")
        for v in verdicts:
            if v.status == "COUNTEREXAMPLE":
                lines.append(f"  COUNTEREXAMPLE: {v.instance}: {v.reason}")
            elif v.status == "uncertified":
                lines.append(f"  uncertified: {v.instance}: {v.reason}")
        if any(v.status == "COUNTEREXAMPLE" for v in verdicts):
            return EXIT_NEGATIVE, inputs, results, lines
        if verdicts and all(v.status == "uncertified" for v in verdicts):
            return EXIT_UNCERTIFIED, inputs, results, lines
        return EXIT_OK, inputs, results, lines

    if args.conjecture == "wakamatsu":
        reports = [(m.name or f"module{k}", wakamatsu_probe(m, cap))
                   for k, m in enumerate(mods)]
        results = {"probes": [{"instance": n, **r.to_json()} for n, r in reports],
                   "cap": cap}
        statuses = [r.status for _, r in reports]
        for n, r in reports:
            lines.append(f"  {n}: {r.status}")
        if "disagree" in statuses:
            return EXIT_NEGATIVE, inputs, results, lines
        if statuses and all(s == "uncertified" for s in statuses):
            return EXIT_UNCERTIFIED, inputs, results, lines
        return EXIT_OK, inputs, results, lines

    # gorenstein: one probe for the family algebra
    rep = gorenstein_probe(alg, cap)
    results = {"probe": rep.to_json(), "cap": cap}
    lines.append(f"gorenstein probe: {rep.status}")
    code = {"confirmed": EXIT_OK, "disagree": EXIT_NEGATIVE,
            "uncertified": EXIT_UNCERTIFIED}[rep.status]
    return code, inputs, results, lines


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    t0 = start_clock()
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        code, inputs, results, lines = _run(args, argv)
    except MethodDisagreement as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (CLIInputError, schema.SchemaError, CatalogError, ModuleError,
            AlgebraError, PresentationError, DomdimError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        out = getattr(locals().get("args"), "out", None)
        if out:
            report = make_report(argv, {}, {"error": str(exc)}, EXIT_INPUT,
                                 seed=None, t0=t0)
            schema.save_json(report, out)
        return EXIT_INPUT
    report = make_report(argv, inputs, results, code, seed=args.seed, t0=t0)
    for line in lines:
        print(line)
    if args.out:
        schema.save_json(report, args.out)
        print(f"report written to {args.out}")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
