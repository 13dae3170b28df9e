"""Command-line front end.

Subcommands:

* ``list``            — the catalog entry names and table rows
* ``build NAME``      — dump the structure-constant tensors as JSON
* ``verify [NAME..]`` — Hopf axioms (+ cocycle conditions for catalog
                        entries); no names means the whole catalog
* ``profile NAME``    — the invariant profile (G(H), G(H*), K0 class)
* ``fusion NAME``     — the fusion table of the Grothendieck ring
* ``table1``          — recompute the full 16-row classification table
* ``checks``          — the instance-level theorem and property suites

Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage error.
Set HOPF16_CATALOG to a JSON file ({name: algebra dump}) to verify/build
from an alternate catalog instead of the built-in constructions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .hopf import HopfAlgebra, verify_axioms
from .constructors import CocycleError
from . import catalog, classify

USAGE_ERROR, CHECK_FAILED = 2, 1


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _external_catalog():
    path = os.environ.get("HOPF16_CATALOG")
    if not path:
        return None
    with open(path) as fh:
        data = json.load(fh)
    return {name: HopfAlgebra.from_dict(d) for name, d in data.items()}


def _resolve(names, external):
    valid = list(catalog.NAMES) if external is None else sorted(external)
    if not names:
        return valid, None
    unknown = [n for n in names if n not in valid]
    if unknown:
        return None, ("unknown name(s) %s; valid names: %s"
                      % (", ".join(unknown), ", ".join(valid)))
    return list(names), None


def _cmd_list(args, external):
    if external is not None:
        rows = [{"name": n} for n in sorted(external)]
    else:
        rows = [{"name": n, "row": catalog.get(n).row,
                 "description": catalog.get(n).expected.get("notes", "")}
                for n in catalog.NAMES]
    if args.format == "json":
        _emit(json.dumps(rows, indent=2, sort_keys=True), args.out)
    else:
        lines = ["%2s  %s" % (r.get("row", ""), r["name"]) for r in rows]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_build(args, external):
    names, err = _resolve(args.names, external)
    if err:
        print(err, file=sys.stderr)
        return USAGE_ERROR
    if not args.names:
        print("build requires at least one NAME", file=sys.stderr)
        return USAGE_ERROR
    dumps = {}
    for n in names:
        h = external[n] if external is not None else catalog.get(n).build()
        dumps[n] = h.to_dict()
    _emit(json.dumps(dumps, indent=2, sort_keys=True), args.out)
    return 0


def _cmd_verify(args, external):
    names, err = _resolve(args.names, external)
    if err:
        print(err, file=sys.stderr)
        return USAGE_ERROR
    results, code = [], 0
    for n in names:
        failures = []
        if external is not None:
            h = external[n]
        else:
            entry = catalog.get(n)
            try:
                entry.data().validate()
            except CocycleError as exc:
                failures.append(["cocycle", str(exc)])
            h = entry.build()
        rep = verify_axioms(h)
        failures.extend([c, repr(w)] for c, w in rep.failures)
        ok = not failures
        code = code or (0 if ok else CHECK_FAILED)
        results.append({"name": n, "ok": ok, "failures": failures})
    if args.format == "json":
        _emit(json.dumps(results, indent=2, sort_keys=True), args.out)
    else:
        _emit("\n".join("%-8s %s" % (r["name"],
                                     "ok" if r["ok"] else r["failures"])
                        for r in results), args.out)
    return code


def _cmd_profile(args, external):
    if external is not None:
        print("profile requires the built-in catalog", file=sys.stderr)
        return USAGE_ERROR
    names, err = _resolve(args.names, None)
    if err:
        print(err, file=sys.stderr)
        return USAGE_ERROR
    if not args.names:
        print("profile requires at least one NAME", file=sys.stderr)
        return USAGE_ERROR
    out, code = [], 0
    for n in names:
        prof, rep = classify.profile(n)
        if not rep.ok:
            code = CHECK_FAILED
        d = prof.to_dict()
        d["certified"] = rep.ok
        out.append(d)
    if args.format == "json":
        _emit(json.dumps(out, indent=2, sort_keys=True), args.out)
    else:
        _emit("\n".join(
            "%-6s row %2d  G(H)=%-6s G(H*)=%-6s K0=%-5s %s"
            % (d["name"], d["row"], d["group_h"], d["group_h_dual"],
               d["k0_label"], "" if d["certified"] else "NOT CERTIFIED")
            for d in out), args.out)
    return code


def _cmd_fusion(args, external):
    if external is not None:
        print("fusion requires the built-in catalog", file=sys.stderr)
        return USAGE_ERROR
    names, err = _resolve(args.names, None)
    if err:
        print(err, file=sys.stderr)
        return USAGE_ERROR
    if not args.names:
        print("fusion requires at least one NAME", file=sys.stderr)
        return USAGE_ERROR
    chunks = []
    for n in names:
        ring = classify.catalog_fusion_ring(n)
        if args.format == "json":
            chunks.append(ring.to_dict())
        else:
            lines = ["# %s  (class %s)" % (ring.name,
                                           classify.match_reference(ring))]
            for x in range(ring.rank):
                for y in range(ring.rank):
                    terms = ["%s%s" % ("" if c == 1 else "%d " % c,
                                       ring.labels[z])
                             for z in range(ring.rank)
                             for c in [ring.table[x][y][z]] if c]
                    lines.append("%s * %s = %s" % (ring.labels[x],
                                                   ring.labels[y],
                                                   " + ".join(terms)))
            chunks.append("\n".join(lines))
    if args.format == "json":
        _emit(json.dumps(chunks if len(chunks) > 1 else chunks[0],
                         indent=2, sort_keys=True), args.out)
    else:
        _emit("\n\n".join(chunks), args.out)
    return 0


def _cmd_table1(args, external):
    rows, rep = classify.reproduce_table1()
    if args.format == "json":
        payload = {"ok": rep.ok, "rows": rows,
                   "failures": [[c, repr(w)] for c, w in rep.failures]}
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    elif args.format == "md":
        lines = ["|  # | H | G(H) | G(H*) | K0(H) | notes |",
                 "|---:|---|------|-------|-------|-------|"]
        for r in rows:
            lines.append("| %d | %s | %s | %s | %s | %s |"
                         % (r["row"], r["name"], r["group_h"],
                            r["group_h_dual"], r["k0"], r["notes"]))
        lines.append("")
        lines.append("certified: %s" % ("yes" if rep.ok else rep.failures))
        _emit("\n".join(lines), args.out)
    else:
        lines = ["%2d %-6s G(H)=%-6s G(H*)=%-6s %s"
                 % (r["row"], r["name"], r["group_h"], r["group_h_dual"],
                    r["k0"]) for r in rows]
        lines.append("certified: %s" % ("yes" if rep.ok else rep.failures))
        _emit("\n".join(lines), args.out)
    return 0 if rep.ok else CHECK_FAILED


def _cmd_checks(args, external):
    suites = [
        ("group rings", classify.group_ring_checks),
        ("theorem instances", classify.theorem_instance_checks),
        ("character actions", classify.character_action_checks),
        ("quotients", classify.quotient_checks),
        ("twist cocycles", classify.twist_cocycle_checks),
        ("alternate constructions", classify.alternate_construction_checks),
    ]
    results = []
    for label, fn in suites:
        rep = fn()
        results.append({"suite": label, "ok": rep.ok,
                        "failures": [[c, repr(w)] for c, w in rep.failures]})
    for desc, rep in classify.parameter_isomorphism_checks():
        results.append({"suite": "isomorphism %s" % desc, "ok": rep.ok,
                        "failures": [[c, repr(w)] for c, w in rep.failures]})
    ok = all(r["ok"] for r in results)
    if args.format == "json":
        _emit(json.dumps({"ok": ok, "suites": results},
                         indent=2, sort_keys=True), args.out)
    else:
        lines = ["%-40s %s" % (r["suite"],
                               "ok" if r["ok"] else r["failures"])
                 for r in results]
        lines.append("all checks passed" if ok else "FAILURES above")
        _emit("\n".join(lines), args.out)
    return 0 if ok else CHECK_FAILED


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "md", "text"],
                        default="text")
    common.add_argument("--out", metavar="PATH", default=None)
    common.add_argument("--jobs", type=int, default=1,
                        help="accepted for interface stability; the checks "
                             "run sequentially and deterministically")
    p = argparse.ArgumentParser(
        prog="hopf16",
        description="Exact catalog and verification of the sixteen "
                    "nontrivial semisimple Hopf algebras of dimension 16.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, nargs in (("list", None), ("build", "+"), ("verify", "*"),
                        ("profile", "+"), ("fusion", "+"),
                        ("table1", None), ("checks", None)):
        sp = sub.add_parser(name, parents=[common])
        if nargs:
            sp.add_argument("names", nargs=nargs, metavar="NAME")
    return p


_COMMANDS = {"list": _cmd_list, "build": _cmd_build, "verify": _cmd_verify,
             "profile": _cmd_profile, "fusion": _cmd_fusion,
             "table1": _cmd_table1, "checks": _cmd_checks}


def run(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    if not hasattr(args, "names"):
        args.names = []
    try:
        external = _external_catalog()
    except (OSError, ValueError, KeyError) as exc:
        print("failed to load HOPF16_CATALOG: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    return _COMMANDS[args.command](args, external)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
