"""Command-line front end: one thin subcommand per library operation.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
All output is deterministic; --json switches every subcommand to a single
JSON document on stdout (schema shipped in gmaj/schemas/cli_output.schema.json,
grammar reference in docs/formats.md).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijections, enumeration, formulas
from .errors import GmajError
from .qseries import PolyQ, PolyTQ
from .relations import (
    OrderedBipartition,
    Relation,
    all_bipartitions,
    decompose,
    format_bipartition,
    parse_bipartition,
)
from .stats import joint_distribution, distribution, stats_full, stats_prime
from .survey import DEFAULT_MAX_LEN, theorem1_survey, theorem2_survey
from .words import (
    format_content,
    format_word,
    parse_content,
    parse_word,
)

SELECTOR_TOKENS = {
    "invp": "inv_prime",
    "majp": "maj_prime",
    "inv": "inv_full",
    "maj": "maj_full",
}

FORMULA_IDS = {
    "2.10": "inv-prime",
    "inv-prime": "inv-prime",
    "4.1": "tq-prime",
    "tq-prime": "tq-prime",
    "7.3": "inv-full",
    "inv-full": "inv-full",
    "7.5": "tq-full",
    "tq-full": "tq-full",
    "3.1": "ending",
    "3.2": "ending",
    "ending": "ending",
}

VERIFY_IDS = dict(FORMULA_IDS)
VERIFY_IDS.update({"3.5": "ending", "counts": "counts"})


def _add_relation_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--bipartition", help='bipartition text, e.g. "3! | 1 2"')
    p.add_argument("--relation", help='inline relation JSON, e.g. \'{"r":2,"edges":[[1,2]]}\'')
    p.add_argument("--relation-file", help="path to a relation JSON file")


def _load_relation_source(args) -> tuple[Relation, OrderedBipartition | None]:
    given = [
        s
        for s in (
            ("--bipartition", args.bipartition),
            ("--relation", args.relation),
            ("--relation-file", args.relation_file),
        )
        if s[1] is not None
    ]
    if len(given) != 1:
        raise GmajError(
            "exactly one relation source required: --bipartition, --relation or --relation-file"
        )
    name, value = given[0]
    if name == "--bipartition":
        b = parse_bipartition(value)
        return b.relation(), b
    if name == "--relation":
        return Relation.from_json(value), None
    with open(value, "r", encoding="utf-8") as fh:
        return Relation.from_json(fh.read()), None


def _need_bipartition(args) -> OrderedBipartition:
    rel, b = _load_relation_source(args)
    if b is not None:
        return b
    b = decompose(rel)
    if b is None:
        raise GmajError(
            "the given relation is not bipartitional, so no bipartition is available"
        )
    return b


def _poly_json(p: PolyQ) -> dict:
    return {"coeffs": list(p.coeffs)}


def _poly_tq_json(p: PolyTQ) -> dict:
    return {"coeffs": [list(row.coeffs) for row in p.rows]}


def _emit(args, obj: dict, text: str) -> None:
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_stat(args) -> int:
    word = parse_word(args.word)
    if args.full:
        b = _need_bipartition(args)
        triple = stats_full(b, word)
        variant = "full"
        r = b.r
    else:
        rel, _ = _load_relation_source(args)
        triple = stats_prime(rel, word)
        variant = "prime"
        r = rel.r
    obj = {
        "cmd": "stat",
        "variant": variant,
        "r": r,
        "word": list(word),
        "inv": triple.inv,
        "maj": triple.maj,
        "des": triple.des,
    }
    _emit(args, obj, f"inv={triple.inv} maj={triple.maj} des={triple.des}")
    return 0


def _cmd_dist(args) -> int:
    content = parse_content(args.content)
    if (args.stat is None) == (args.joint is None):
        raise GmajError("choose exactly one of --stat and --joint")
    if args.stat is not None:
        selector = SELECTOR_TOKENS[args.stat]
        if selector.endswith("full"):
            source = _need_bipartition(args)
        else:
            source, b = _load_relation_source(args)
            source = b if b is not None else source
        poly = distribution(selector, source, content, limit=args.limit)
        obj = {
            "cmd": "dist",
            "selector": args.stat,
            "content": list(content),
            "poly": _poly_json(poly),
            "text": poly.text(),
        }
        _emit(args, obj, poly.text())
    else:
        b = _need_bipartition(args)
        poly = joint_distribution(args.joint, b, content, limit=args.limit)
        obj = {
            "cmd": "dist",
            "joint": args.joint,
            "content": list(content),
            "poly": _poly_tq_json(poly),
            "text": poly.text(),
        }
        _emit(args, obj, poly.text())
    return 0


def _cmd_formula(args) -> int:
    fid = FORMULA_IDS[args.eq]
    b = _need_bipartition(args)
    content = parse_content(args.content)
    extra: dict = {}
    if fid == "inv-prime":
        poly_text, poly_obj = _render_q(formulas.formula_inv_prime(b, content))
    elif fid == "inv-full":
        poly_text, poly_obj = _render_q(formulas.formula_inv_full(b, content))
    elif fid == "tq-prime":
        poly_text, poly_obj = _render_tq(formulas.formula_tq_prime(b, content))
    elif fid == "tq-full":
        poly_text, poly_obj = _render_tq(formulas.formula_tq_full(b, content))
    else:  # ending
        if args.letter is None:
            raise GmajError("--letter is required for the ending distribution")
        poly = formulas.ending_distribution(b, content, args.letter, mode=args.mode)
        poly_text, poly_obj = _render_q(poly)
        extra = {"letter": args.letter, "mode": args.mode}
    obj = {
        "cmd": "formula",
        "id": fid,
        "content": list(content),
        "poly": poly_obj,
        "text": poly_text,
        **extra,
    }
    _emit(args, obj, poly_text)
    return 0


def _render_q(p: PolyQ) -> tuple[str, dict]:
    return p.text(), _poly_json(p)


def _render_tq(p: PolyTQ) -> tuple[str, dict]:
    return p.text(), _poly_tq_json(p)


def _cmd_verify(args) -> int:
    fid = VERIFY_IDS[args.eq]
    if fid == "counts":
        return _verify_counts(args)
    b = _need_bipartition(args)
    if args.content is None:
        raise GmajError("--content is required for this check")
    content = parse_content(args.content)
    lines: list[str] = []
    ok = True
    details: dict = {}
    if fid == "ending":
        letters = [args.letter] if args.letter else [
            i + 1 for i, c in enumerate(content) if c > 0
        ]
        for letter in letters:
            closed = formulas.ending_distribution(b, content, letter, mode="closed")
            recur = formulas.ending_distribution(b, content, letter, mode="recurrence")
            brute = formulas.ending_distribution(b, content, letter, mode="brute")
            good = closed == recur == brute
            ok &= good
            verdict = "OK" if good else "MISMATCH"
            lines.append(
                f"letter {letter}: closed = recurrence = brute = {closed.text()} : {verdict}"
            )
            details[str(letter)] = {
                "closed": _poly_json(closed),
                "recurrence": _poly_json(recur),
                "brute": _poly_json(brute),
            }
    else:
        if fid == "inv-prime":
            closed: PolyQ | PolyTQ = formulas.formula_inv_prime(b, content)
            brute = distribution("inv_prime", b, content)
        elif fid == "inv-full":
            closed = formulas.formula_inv_full(b, content)
            brute = distribution("inv_full", b, content)
        elif fid == "tq-prime":
            closed = formulas.formula_tq_prime(b, content)
            brute = joint_distribution("prime", b, content)
        else:
            closed = formulas.formula_tq_full(b, content)
            brute = joint_distribution("full", b, content)
        ok = closed == brute
        if ok:
            lines.append(f"formula = brute force = {closed.text()} : OK")
        else:
            lines.append(
                f"formula = {closed.text()} but brute force = {brute.text()} : MISMATCH"
            )
        render = _render_tq if isinstance(closed, PolyTQ) else _render_q
        details = {"formula": render(closed)[1], "brute": render(brute)[1]}
    obj = {
        "cmd": "verify",
        "id": fid,
        "ok": ok,
        "lines": lines,
        "details": details,
        "notes": [],
    }
    _emit(args, obj, "\n".join(lines))
    return 0 if ok else 1


def _verify_counts(args) -> int:
    if args.r is None:
        raise GmajError("--r is required for the counts check")
    r = args.r
    lines = []
    ok = True
    details: dict = {}
    for kind in ("bipartitional", "compatible"):
        formula = (
            enumeration.count_bipartitional(r)
            if kind == "bipartitional"
            else enumeration.count_compatible(r)
        )
        egf = (
            enumeration.egf_bipartitional(r)[r]
            if kind == "bipartitional"
            else enumeration.egf_compatible(r)[r]
        )
        entry = {"formula": formula, "egf": egf}
        if r <= 5:
            exhaustive = sum(
                1 for _ in all_bipartitions(r, compatible_only=(kind == "compatible"))
            )
            entry["exhaustive"] = exhaustive
            good = formula == egf == exhaustive
            lines.append(
                f"{kind} r={r}: formula={formula} egf={egf} exhaustive={exhaustive} : "
                + ("OK" if good else "MISMATCH")
            )
        else:
            good = formula == egf
            lines.append(
                f"{kind} r={r}: formula={formula} egf={egf} : "
                + ("OK" if good else "MISMATCH")
            )
        ok &= good
        details[kind] = entry
    notes = [enumeration.COMPATIBLE_R3_ERRATUM]
    obj = {
        "cmd": "verify",
        "id": "counts",
        "r": r,
        "ok": ok,
        "lines": lines,
        "details": details,
        "notes": notes,
    }
    _emit(args, obj, "\n".join(lines + notes))
    return 0 if ok else 1


def _cmd_decompose(args) -> int:
    rel, _ = _load_relation_source(args)
    b = decompose(rel)
    if b is None:
        obj = {
            "cmd": "decompose",
            "bipartitional": False,
            "blocks": None,
            "underlined": None,
            "text": None,
        }
        _emit(args, obj, "not bipartitional")
    else:
        obj = {
            "cmd": "decompose",
            "bipartitional": True,
            "blocks": [list(block) for block in b.blocks],
            "underlined": list(b.underlined),
            "text": format_bipartition(b),
        }
        _emit(args, obj, format_bipartition(b))
    return 0


def _cmd_bijection(args) -> int:
    word = parse_word(args.word)
    if args.map == "phi":
        image = (
            bijections.inv_to_maj(word) if args.inverse else bijections.maj_to_inv(word)
        )
        r = max(word, default=1)
        rel = Relation.from_edges(
            r, [(x, y) for x in range(1, r + 1) for y in range(1, x)]
        )
        variant = "classical"
        source_triple = stats_prime(rel, word)
        image_triple = stats_prime(rel, image)
    elif args.map == "phiU":
        b = _need_bipartition(args)
        image = (
            bijections.inv_to_maj_prime(b, word)
            if args.inverse
            else bijections.maj_to_inv_prime(b, word)
        )
        variant = "prime"
        source_triple = stats_prime(b.relation(), word)
        image_triple = stats_prime(b.relation(), image)
    else:  # psiU
        b = _need_bipartition(args)
        image = (
            bijections.inv_to_maj_full(b, word)
            if args.inverse
            else bijections.maj_to_inv_full(b, word)
        )
        variant = "full"
        source_triple = stats_full(b, word)
        image_triple = stats_full(b, image)
    obj = {
        "cmd": "bijection",
        "map": args.map,
        "inverse": bool(args.inverse),
        "variant": variant,
        "input": list(word),
        "image": list(image),
        "input_stats": dict(source_triple._asdict()),
        "image_stats": dict(image_triple._asdict()),
    }
    text = "\n".join(
        [
            format_word(image),
            f"input: inv={source_triple.inv} maj={source_triple.maj} des={source_triple.des}",
            f"image: inv={image_triple.inv} maj={image_triple.maj} des={image_triple.des}",
        ]
    )
    _emit(args, obj, text)
    return 0


def _cmd_enumerate(args) -> int:
    count_fn = (
        enumeration.count_bipartitional
        if args.kind == "bipartitional"
        else enumeration.count_compatible
    )
    egf_fn = (
        enumeration.egf_bipartitional
        if args.kind == "bipartitional"
        else enumeration.egf_compatible
    )
    if args.egf:
        values = egf_fn(args.r)
        obj = {"cmd": "enumerate", "kind": args.kind, "r": args.r, "values": values}
        _emit(args, obj, "\n".join(f"{k} {v}" for k, v in enumerate(values)))
    else:
        value = count_fn(args.r)
        obj = {"cmd": "enumerate", "kind": args.kind, "r": args.r, "value": value}
        _emit(args, obj, str(value))
    return 0


def _cmd_survey(args) -> int:
    max_len = args.max_len if args.max_len is not None else DEFAULT_MAX_LEN.get(args.r, 4)
    if args.theorem == 1:
        report = theorem1_survey(args.r, max_len)
    else:
        report = theorem2_survey(args.r, max_len)
    lines = [
        f"survey theorem={report.theorem} r={report.r} max_len={report.max_len}",
        f"relations scanned: {report.total_relations}",
        f"equidistributed at cutoff: {report.mahonian_count}",
        f"bipartitional: {report.bipartitional_count}",
    ]
    if report.compatible_count is not None:
        lines.append(f"compatible: {report.compatible_count}")
    lines.append(f"mismatches: {len(report.mismatches)}")
    witness_list = [
        {
            "mask": mask,
            "edges": [list(e) for e in Relation(report.r, mask).edges()],
            "content": list(content),
        }
        for mask, content in sorted(report.witnesses.items())
    ]
    if args.witnesses:
        for item in witness_list:
            edges = json.dumps(item["edges"], separators=(",", ":"))
            lines.append(
                f"witness mask={item['mask']} edges={edges} "
                f"first failing class: {format_content(item['content'])}"
            )
    obj = {
        "cmd": "survey",
        "theorem": report.theorem,
        "r": report.r,
        "max_len": report.max_len,
        "total_relations": report.total_relations,
        "equidistributed": report.mahonian_count,
        "bipartitional": report.bipartitional_count,
        "compatible": report.compatible_count,
        "mismatches": report.mismatches,
        "witnesses": witness_list if args.witnesses else None,
    }
    _emit(args, obj, "\n".join(lines))
    return 0 if report.clean else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmaj",
        description=(
            "Exact inversion/major-index statistics on words parameterized by a "
            "directed graph on the alphabet, with closed-form distribution "
            "polynomials, class bijections, counting, and exhaustive verification."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("stat", help="statistics of a single word")
    _add_relation_source(p)
    p.add_argument("--word", required=True, help='word text, e.g. "3 1 3 2"')
    p.add_argument("--full", action="store_true", help="underline-corrected variant")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_stat)

    p = sub.add_parser("dist", help="distribution polynomial over a class")
    _add_relation_source(p)
    p.add_argument("--content", required=True, help='content text, e.g. "1,1,2"')
    p.add_argument("--stat", choices=sorted(SELECTOR_TOKENS), help="single statistic")
    p.add_argument("--joint", choices=["prime", "full"], help="(des, maj) pair")
    p.add_argument("--limit", type=int, default=12, help="class size guard")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("formula", help="closed-form distribution polynomial")
    _add_relation_source(p)
    p.add_argument("--eq", required=True, choices=sorted(FORMULA_IDS), help="formula id")
    p.add_argument("--content", required=True)
    p.add_argument("--letter", type=int, help="ending letter (ending form only)")
    p.add_argument(
        "--mode",
        choices=["closed", "recurrence", "brute"],
        default="closed",
        help="evaluation route for the ending form",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_formula)

    p = sub.add_parser("verify", help="cross-check closed forms against brute force")
    _add_relation_source(p)
    p.add_argument("--eq", required=True, choices=sorted(VERIFY_IDS), help="check id")
    p.add_argument("--content", help="content text (polynomial checks)")
    p.add_argument("--letter", type=int, help="restrict the ending check to one letter")
    p.add_argument("--r", type=int, help="alphabet size (counts check)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("decompose", help="recover the ordered bipartition of a relation")
    _add_relation_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("bijection", help="apply a class bijection to a word")
    _add_relation_source(p)
    p.add_argument("--map", required=True, choices=["phi", "phiU", "psiU"])
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_bijection)

    p = sub.add_parser("enumerate", help="count bipartitional/compatible relations")
    p.add_argument("--kind", required=True, choices=["bipartitional", "compatible"])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--egf", action="store_true", help="print the whole coefficient table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("survey", help="exhaustive equidistribution survey")
    p.add_argument("--theorem", type=int, required=True, choices=[1, 2])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-len", type=int, help="class length cutoff (default 2/4/6 for r=1/2/3)")
    p.add_argument("--witnesses", action="store_true", help="print minimal failing classes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_survey)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2
    try:
        return args.fn(args)
    except GmajError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
