"""Command-line front end: evaluators, enumerations, embeddings, verify suites.

Every invocation prints one JSON document
    {"command": ..., "inputs": ..., "result": ..., "details": [...]}
on stdout (CSV for tabular payloads with --csv) and exits 0 on success or
pass, 1 on a verification failure (the counterexample is in `details`), 2 on
usage or domain errors.  Output is byte-stable for fixed arguments: there is
no configuration file, no environment lookup, and every enumeration and
construction is deterministic.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any

from . import antichains, coloring, embed, oscillation, relations, words


def _result(command: str, inputs: dict, result: Any, details: list | None = None) -> dict:
    return {"command": command, "inputs": inputs, "result": result,
            "details": details if details is not None else []}


def _emit(doc: dict) -> None:
    print(json.dumps(doc, separators=(",", ":"), default=str))


def _point(text: str) -> words.Point:
    return words.parse_point(text)


# ---------------------------------------------------------------------------
# commands

def _cmd_invariant(args) -> int:
    z, t = words.parse_word(args.z), words.parse_word(args.t)
    value = oscillation.invariant_i(z, t)
    _emit(_result("invariant i", {"z": words.render_word(z), "t": words.render_word(t)}, value))
    return 0


def _cmd_osc(args) -> int:
    z, t = words.parse_word(args.z), words.parse_word(args.t)
    _emit(_result("osc", {"z": words.render_word(z), "t": words.render_word(t)},
                  oscillation.osc(z, t)))
    return 0


def _cmd_color_pair(args) -> int:
    x, y = _point(args.x), _point(args.y)
    _emit(_result("color pair", {"x": str(x), "y": str(y)}, coloring.color_c(x, y)))
    return 0


def _cmd_color_table(args) -> int:
    n = args.max_index
    rows = []
    for m in range(n + 1):
        for k in range(m + 1, n + 1):
            rows.append((m, k, coloring.color_c(words.alpha(m), words.alpha(k))))
    if args.csv:
        print("m,n,color")
        for row in rows:
            print(",".join(map(str, row)))
    else:
        _emit(_result("color table", {"max_index": n}, [list(r) for r in rows]))
    return 0


def _cmd_relation_eval(args) -> int:
    spec = relations.parse_relation_spec(args.spec)
    u = relations.parse_space_point(args.u, spec.space)
    v = relations.parse_space_point(args.v, spec.space)
    value = relations.evaluate(spec, u, v)
    _emit(_result("relation eval", {"spec": str(spec), "u": str(u), "v": str(v)}, value))
    return 0


def _cmd_antichain_enum(args) -> int:
    family = args.family
    codes = antichains.family_codes(family)
    if args.count:
        _emit(_result("antichain enum", {"family": family}, len(codes)))
    elif args.csv:
        sys.stdout.write(antichains.codes_to_csv(family))
    elif args.json:
        print(antichains.codes_to_json(family))
    else:
        _emit(_result("antichain enum", {"family": family}, len(codes),
                      [antichains.code_literal(c) for c in codes]))
    return 0


def _cmd_embed_build(args) -> int:
    h = embed.h_preset(args.h)
    scheme = embed.build_embedding(h, args.depth, args.bound)
    if args.json:
        print(scheme.to_json())
    else:
        _emit(_result("embed build", {"h": args.h, "depth": args.depth},
                      {"nodes": len(scheme.n), "names": len(scheme.s)}))
    return 0


# ---------------------------------------------------------------------------
# verify suites

def _suite_cardinalities(args) -> tuple[bool, list]:
    details = []
    ok = True
    for family, expected in antichains.EXPECTED_COUNTS.items():
        got = len(antichains.family_codes(family))
        details.append({"item": f"|{family}|", "expected": expected, "got": got,
                        "ok": got == expected})
        ok &= got == expected
    rank1_total = sum(len(antichains.family_codes(f)) for f in ("N", "V", "H", "S"))
    details.append({"item": "N+V+H+S", "expected": 7360, "got": rank1_total,
                    "ok": rank1_total == 7360})
    ok &= rank1_total == 7360
    combined = len(antichains.enum_P()) + 1 + len(antichains.enum_A())
    details.append({"item": "(|P|+1)+|A|", "expected": 76, "got": combined,
                    "ok": combined == 76})
    ok &= combined == 76
    bases = antichains.graph_subbases()
    for item, got, expected in (
            ("closed graph basis", len(bases.closed_plain), 5),
            ("closed injective graph basis", len(bases.closed_injective), 6),
            ("open graph basis", len(bases.open_basis), 10)):
        details.append({"item": item, "expected": expected, "got": got, "ok": got == expected})
        ok &= got == expected
    return ok, details


def _suite_i_vectors(args) -> tuple[bool, list]:
    details = []
    ok = True

    def check(item: str, got, expected) -> None:
        nonlocal ok
        good = got == expected
        details.append({"item": item, "expected": expected, "got": got, "ok": good})
        ok &= good

    check("i(e,1)", oscillation.invariant_i("", "1"), 1)
    check("i(1,01)", oscillation.invariant_i("1", "01"), 2)
    check("i(1101,101)", oscillation.invariant_i("1101", "101"), 3)
    for p in range(3, 2 * args.max_k + 5):
        tri = coloring.cycle_witness(p)
        vals = sorted({coloring.color_c(a, b) for a in tri for b in tri if a != b})
        check(f"triangle p={p}", vals, [p])
    report = oscillation.exhaustive_check(args.max_len)
    check(f"single-case dispatch <= {args.max_len}", report.single_case, True)
    check(f"symmetry <= {args.max_len}", report.symmetric, True)
    return ok, details


def _suite_cycles(args) -> tuple[bool, list]:
    details = []
    ok = True
    beta_all = words.Point("", "1")
    for p in range(1, args.max_p + 1):
        tri = coloring.cycle_witness(p)
        colors = {coloring.color_c(a, b) for a in tri for b in tri if a != b}
        spec = relations.RelationSpec("GbetaDiag", beta=beta_all)
        verts = [relations.sp(relations.CANTOR, x) for x in tri]
        cyc = relations.acyclicity_check(spec, verts)
        good = colors == {p} and cyc is not None and len(cyc) == 3
        details.append({"item": f"triangle p={p}", "colors": sorted(colors),
                        "cycle": cyc is not None, "ok": good})
        ok &= good
    gm = relations.RelationSpec("Gm", gamma=coloring.SIGMA02)
    verts = relations.standard_vertices(relations.D2XCANTOR, 48)
    cyc = relations.acyclicity_check(gm, verts)
    details.append({"item": f"matching graph acyclic on {len(verts)} vertices",
                    "ok": cyc is None})
    ok &= cyc is None
    dense = [relations.sp(relations.CANTOR, p)
             for p in (words.Point("", "01"), words.Point("", "10"), words.Point("", "011"))]
    tri_rel = lambda u, v: u.point != v.point and not words.is_pf(u.point) and not words.is_pf(v.point)
    cyc = relations.acyclicity_check(tri_rel, dense)
    details.append({"item": "square-minus-diagonal has a triangle", "ok": cyc is not None})
    ok &= cyc is not None
    return ok, details


def _suite_surjectivity(args) -> tuple[bool, list]:
    details = []
    ok = True
    attained = set()
    for s in oscillation.q_words_upto(args.max_s):
        for p in range(1, args.max_p + 1):
            x, y = coloring.witness_pair(p, s)
            got = coloring.color_c(x, y)
            if got != p or not (x.starts_with(s) and y.starts_with(s)):
                details.append({"item": f"witness p={p} s={words.render_word(s)}",
                                "got": got, "ok": False})
                ok = False
            attained.add(got)
    details.append({"item": "attained range",
                    "got": f"1..{args.max_p}" if attained == set(range(1, args.max_p + 1))
                    else sorted(attained), "ok": True})
    return ok, details


def _suite_suff(args) -> tuple[bool, list]:
    details = []
    ok = True
    rng = random.Random(args.seed)
    h = embed.h_preset(args.h)
    for trial in range(args.trials):
        scheme = embed.build_embedding(h, args.depth, bound=10_000, rng=rng)
        counter = oscillation.suff_check(oscillation.SuffAssignment(scheme.depth, dict(scheme.s)))
        if counter is not None:
            details.append({"item": f"trial {trial}", "counterexample": counter._asdict(),
                            "ok": False})
            ok = False
    details.append({"item": f"{args.trials} random tables at depth {args.depth}", "ok": ok})
    return ok, details


def _suite_embed(args) -> tuple[bool, list]:
    details = []
    ok = True
    h = embed.h_preset(args.h)
    scheme = embed.build_embedding(h, args.depth, bound=10_000)
    report = embed.verify_conditions(scheme, h)
    for cond in sorted(report.passed):
        details.append({"item": f"condition {cond}", "ok": report.passed[cond],
                        "detail": report.detail[cond]})
        ok &= report.passed[cond]
    counter = embed.check_color_preservation(scheme)
    details.append({"item": "color preservation", "ok": counter is None,
                    "counterexample": counter})
    ok &= counter is None
    rebuilt = embed.build_embedding(h, args.depth, bound=10_000)
    same = rebuilt.to_json() == scheme.to_json()
    details.append({"item": "deterministic rebuild", "ok": same})
    ok &= same
    return ok, details


def _suite_acyclic(args) -> tuple[bool, list]:
    details = []
    ok = True
    bases = antichains.graph_subbases()
    for entry in bases.closed_plain + bases.closed_injective[-1:] + bases.open_basis:
        if not entry.acyclic:
            continue
        spec = entry.spec()
        verts = relations.standard_vertices(spec.space, args.size)
        cyc = relations.acyclicity_check(spec, verts)
        label = f"{entry.family}:{antichains.code_literal(entry.code) if entry.code else 'R01_1'}"
        details.append({"item": f"{label} acyclic on {len(verts)} vertices", "ok": cyc is None})
        ok &= cyc is None
    return ok, details


def _suite_ac_profile(args) -> tuple[bool, list]:
    details = []
    ok = True
    for entry in relations.AC_CATALOG:
        verts = relations.standard_vertices(entry.space, args.size)
        got = relations.structural_profile(entry.spec(), verts)
        good = got == entry.profile
        details.append({"item": f"catalog {entry.index} ({entry.name})",
                        "expected": entry.profile.as_dict(), "got": got.as_dict(),
                        "ok": good})
        ok &= good
    return ok, details


_SUITES = {
    "cardinalities": _suite_cardinalities,
    "i-vectors": _suite_i_vectors,
    "cycles": _suite_cycles,
    "surjectivity": _suite_surjectivity,
    "suff": _suite_suff,
    "embed": _suite_embed,
    "acyclic": _suite_acyclic,
    "ac-profile": _suite_ac_profile,
}


def _cmd_verify(args) -> int:
    suite = _SUITES[args.suite]
    ok, details = suite(args)
    inputs = {"suite": args.suite}
    _emit(_result("verify", inputs, "pass" if ok else "fail", details))
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cantorpairs")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariant", help="pair invariant on q-words")
    inv_sub = inv.add_subparsers(dest="subcommand", required=True)
    inv_i = inv_sub.add_parser("i")
    inv_i.add_argument("z")
    inv_i.add_argument("t")
    inv_i.set_defaults(func=_cmd_invariant)

    osc_p = sub.add_parser("osc", help="oscillation count of two words")
    osc_p.add_argument("z")
    osc_p.add_argument("t")
    osc_p.set_defaults(func=_cmd_osc)

    color = sub.add_parser("color", help="pair coloring of eventually-zero points")
    color_sub = color.add_subparsers(dest="subcommand", required=True)
    cp = color_sub.add_parser("pair")
    cp.add_argument("x")
    cp.add_argument("y")
    cp.set_defaults(func=_cmd_color_pair)
    ct = color_sub.add_parser("table")
    ct.add_argument("--max-index", type=int, required=True)
    ct.add_argument("--csv", action="store_true")
    ct.set_defaults(func=_cmd_color_table)

    rel = sub.add_parser("relation", help="evaluate a catalog relation")
    rel_sub = rel.add_subparsers(dest="subcommand", required=True)
    re_ = rel_sub.add_parser("eval")
    re_.add_argument("spec")
    re_.add_argument("u")
    re_.add_argument("v")
    re_.set_defaults(func=_cmd_relation_eval)

    anti = sub.add_parser("antichain", help="code family enumeration")
    anti_sub = anti.add_subparsers(dest="subcommand", required=True)
    en = anti_sub.add_parser("enum")
    en.add_argument("--family", required=True, choices=antichains.FAMILIES)
    group = en.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true")
    group.add_argument("--csv", action="store_true")
    group.add_argument("--json", action="store_true")
    en.set_defaults(func=_cmd_antichain_enum)

    emb = sub.add_parser("embed", help="finite-depth embedding construction")
    emb_sub = emb.add_subparsers(dest="subcommand", required=True)
    eb = emb_sub.add_parser("build")
    eb.add_argument("--h", required=True)
    eb.add_argument("--depth", type=int, required=True)
    eb.add_argument("--bound", type=int, default=10_000)
    eb.add_argument("--json", action="store_true")
    eb.set_defaults(func=_cmd_embed_build)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=sorted(_SUITES))
    ver.add_argument("--max-p", type=int, default=24)
    ver.add_argument("--max-k", type=int, default=10)
    ver.add_argument("--max-len", type=int, default=12)
    ver.add_argument("--max-s", type=int, default=6)
    ver.add_argument("--depth", type=int, default=3)
    ver.add_argument("--trials", type=int, default=50)
    ver.add_argument("--seed", type=int, default=20260809)
    ver.add_argument("--h", default="pf")
    ver.add_argument("--size", type=int, default=50)
    ver.set_defaults(func=_cmd_verify)
    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, embed.SearchExhausted, oscillation.SuffPreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
