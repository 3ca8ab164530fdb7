"""Command-line interface: ``ropwords {check,list,count,table,map}``.

Exit codes: 0 on success, 1 on usage or parse errors, 2 when a
verification fails (oracle mismatch or disagreeing rop tests).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Iterator

from . import counting, enumeration, tables
from .bijection import necklace_to_rop, rop_to_necklace
from .predicates import ROP_METHODS, is_s_rap, is_s_rop, rop_verdicts
from .words import CyclicClass, parse_word, word_str

USAGE_ERROR = 1
VERIFY_ERROR = 2

LIST_KINDS = {
    "lyndon": "lyndon",
    "necklace": "necklace",
    "rop": "rop",
    "lyndon-rop": "lyndon-rop",
    "srop": "srop",
    "s-rop": "srop",
    "srap": "srap",
    "s-rap": "srap",
}

_bool = {"type": "boolean"}
_int = {"type": "integer"}
_str = {"type": "string"}

JSON_SCHEMAS = {
    "check": {
        "type": "object",
        "required": ["word", "test", "result"],
        "properties": {
            "word": _str,
            "test": _str,
            "result": _bool,
            "methods": {"type": "object", "additionalProperties": _bool},
        },
    },
    "list": {
        "type": "object",
        "required": ["kind", "words"],
        "properties": {
            "kind": _str,
            "n": {"type": ["integer", "null"]},
            "s": {"type": ["integer", "null"]},
            "words": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["word", "lyndon"],
                    "properties": {"word": _str, "lyndon": _bool, "rop": _bool},
                },
            },
        },
    },
    "count": {
        "type": "object",
        "required": ["kind", "count"],
        "properties": {
            "kind": {"enum": ["R", "L"]},
            "n": _int,
            "n2": _int,
            "n3": _int,
            "count": _int,
            "oracle": _int,
        },
    },
    "table": {
        "type": "object",
        "required": ["table", "rows"],
        "properties": {
            "table": {"enum": list(tables.TABLE_IDS)},
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "additionalProperties": {"type": ["integer", "string"]},
                },
            },
        },
    },
    "map": {
        "type": "object",
        "required": ["input", "direction", "output", "n", "n2", "nprime", "lyndon"],
        "properties": {
            "input": _str,
            "direction": {"enum": ["necklace-to-rop", "rop-to-necklace"]},
            "output": _str,
            "n": _int,
            "n2": _int,
            "nprime": _int,
            "lyndon": _bool,
        },
    },
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--format",
        choices=("text", "csv", "json"),
        default=default if suppress else "text",
        help="output format (default: text)",
    )
    parser.add_argument(
        "--max-brute",
        type=int,
        default=default,
        metavar="N",
        help="override the brute-force length ceiling",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ropwords", description="Rhythmic oddity words: test, list, count, map.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="test a word for the rop / s-rop / s-rap property")
    p.add_argument("word")
    p.add_argument("--s", type=int, default=None, help="order s (default 2)")
    p.add_argument("--rap", action="store_true", help="test the s-rap property over {1..s}")
    p.add_argument("--method", choices=(*ROP_METHODS, "all"), default="def")
    _global_flags(p, suppress=True)

    p = sub.add_parser("list", help="enumerate a family of words")
    p.add_argument("kind", choices=sorted(LIST_KINDS))
    p.add_argument("--n", type=int)
    p.add_argument("--n2", type=int, help="number of 2s (rop kinds)")
    p.add_argument("--n3", type=int, help="number of 3s (rop kinds)")
    p.add_argument("--zeros", type=int, help="number of 0s (necklace)")
    p.add_argument("--ones", type=int, help="number of 1s (necklace)")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--alphabet", default="23", help="letters for `lyndon` (default 23)")
    p.add_argument("--lyndon-only", action="store_true")
    p.add_argument("--method", choices=("brute", "bijection"), default="brute")
    _global_flags(p, suppress=True)

    p = sub.add_parser("count", help="closed-form counts of rop-words")
    p.add_argument("--n", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--n3", type=int)
    p.add_argument("--lyndon", action="store_true", help="count Lyndon rop-words")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.add_argument("--lenient", action="store_true", help="impossible contents count as 0")
    _global_flags(p, suppress=True)

    p = sub.add_parser("table", help="regenerate a count table")
    p.add_argument("id", choices=tables.TABLE_IDS)
    p.add_argument("--max-n", type=int, default=None)
    _global_flags(p, suppress=True)

    p = sub.add_parser("map", help="binary necklace <-> rop-word")
    p.add_argument("word")
    _global_flags(p, suppress=True)
    return parser


def _out(text: str) -> None:
    sys.stdout.write(text + "\n")


def _flag(b: bool) -> str:
    return "true" if b else "false"


def cmd_check(args) -> int:
    w = parse_word(args.word)
    s = args.s
    if args.rap:
        if s is None:
            raise UsageError("--rap requires --s")
        test, result, methods = f"{s}-rap", is_s_rap(w, s), None
    elif s is not None and s != 2:
        test, result, methods = f"{s}-rop", is_s_rop(w, s), None
    else:
        verdicts = rop_verdicts(w)
        test = "rop"
        if args.method == "all":
            methods = verdicts
            result = verdicts["def"]
        else:
            methods = None
            result = verdicts[args.method]
            if args.method != "def":
                test = f"rop ({args.method})"
    if args.format == "json":
        doc = {"word": word_str(w), "test": test, "result": result}
        if methods is not None:
            doc["methods"] = methods
        _out(json.dumps(doc))
    elif args.format == "csv":
        _out("word,test,result")
        rows = [(test, result)] if methods is None else [(f"rop ({k})", v) for k, v in methods.items()]
        for name, value in rows:
            _out(f"{word_str(w)},{name},{_flag(value)}")
    else:
        if methods is not None:
            for name, value in methods.items():
                _out(f"{name}: {_flag(value)}")
        _out(f"{test}: {_flag(result)}")
    if methods is not None and len(set(methods.values())) > 1:
        print(f"rop tests disagree on {word_str(w)}: {methods}", file=sys.stderr)
        return VERIFY_ERROR
    return 0


def _list_classes(args) -> tuple[Iterator[CyclicClass], bool]:
    """Stream of classes for ``list`` and whether to star 2-rop words."""
    kind = LIST_KINDS[args.kind]
    ceiling = args.max_brute
    if kind == "necklace":
        if args.zeros is None or args.ones is None:
            raise UsageError("necklace listing needs --zeros and --ones")
        return iter(enumeration.binary_necklaces(args.zeros, args.ones)), False
    if kind in ("rop", "lyndon-rop"):
        if args.n2 is not None or args.n3 is not None:
            if args.n2 is None or args.n3 is None or args.n is not None:
                raise UsageError("give either --n or both --n2 and --n3")
            counting.count_R(args.n2, args.n3)  # validates the content
            necklaces = enumeration.binary_necklaces(args.n2, args.n3 // 2)
            classes = sorted(necklace_to_rop(b) for b in necklaces)
            return iter(classes), False
        n = _need_n(args)
        if args.method == "bijection":
            return iter(enumeration.rop_classes(n, "bijection")), False
        enumeration.check_ceiling(n, 2, ceiling)
        return enumeration.iter_rop_classes_brute(n), False
    if kind in ("srop", "srap"):
        n = _need_n(args)
        if args.s is None or args.s < 2:
            raise UsageError(f"{args.kind} needs --s >= 2")
        if kind == "srop":
            enumeration.check_ceiling(n, 2, ceiling)
            return enumeration.iter_s_rop_classes(n, args.s), args.s != 2
        enumeration.check_ceiling(n, args.s, ceiling)
        return enumeration.iter_s_rap_classes(n, args.s), False
    raise AssertionError(kind)


def _need_n(args) -> int:
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    return args.n


def cmd_list(args) -> int:
    kind = LIST_KINDS[args.kind]
    if kind == "lyndon":
        n = _need_n(args)
        alphabet = parse_word(args.alphabet)
        if not alphabet:
            raise UsageError("empty alphabet")
        enumeration.check_ceiling(n, len(set(alphabet)), args.max_brute)
        classes: Iterable[CyclicClass] = (
            CyclicClass(w) for w in enumeration.lyndon_words(n, alphabet)
        )
        star = False
    else:
        classes, star = _list_classes(args)
    lyndon_only = args.lyndon_only or kind == "lyndon-rop"
    if lyndon_only:
        classes = (c for c in classes if c.lyndon)

    if args.format == "json":
        items = []
        for c in classes:
            item = {"word": str(c), "lyndon": c.lyndon}
            if star:
                item["rop"] = c.also_rop
            items.append(item)
        _out(json.dumps({"kind": kind, "n": args.n, "s": args.s, "words": items}))
        return 0
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["word", "lyndon"] + (["rop"] if star else []))
        for c in classes:
            writer.writerow([str(c), _flag(c.lyndon)] + ([_flag(c.also_rop)] if star else []))
        return 0
    for c in classes:
        text = str(c) if c.lyndon else f"({c})"
        if star and c.also_rop:
            text += "*"
        _out(text)
    return 0


def _oracle_count(args, lyndon: bool) -> int:
    if args.n is not None:
        enumeration.check_ceiling(args.n, 2, args.max_brute)
        r, l = enumeration.class_totals(enumeration.iter_rop_classes_brute(args.n))
        return l if lyndon else r
    n = args.n2 + args.n3
    enumeration.check_ceiling(n, 2, args.max_brute)
    classes, aperiodic = enumeration.rop_content_census(n)
    return (aperiodic if lyndon else classes)[args.n2, args.n3]


def cmd_count(args) -> int:
    lyndon = args.lyndon
    if args.n is not None:
        if args.n2 is not None or args.n3 is not None:
            raise UsageError("give either --n or both --n2 and --n3")
        value = (counting.total_L if lyndon else counting.total_R)(args.n)
        doc = {"kind": "L" if lyndon else "R", "n": args.n}
    else:
        if args.n2 is None or args.n3 is None:
            raise UsageError("give either --n or both --n2 and --n3")
        count = counting.count_L if lyndon else counting.count_R
        value = count(args.n2, args.n3, strict=not args.lenient)
        doc = {"kind": "L" if lyndon else "R", "n2": args.n2, "n3": args.n3}
    doc["count"] = value
    oracle = None
    if args.oracle:
        oracle = _oracle_count(args, lyndon)
        doc["oracle"] = oracle

    if args.format == "json":
        _out(json.dumps(doc))
    elif args.format == "csv":
        keys = list(doc)
        _out(",".join(keys))
        _out(",".join(str(doc[k]) for k in keys))
    else:
        _out(str(value))
        if oracle is not None:
            _out(f"oracle: {oracle}")
    if oracle is not None and oracle != value:
        print(f"formula {value} != brute force {oracle}", file=sys.stderr)
        return VERIFY_ERROR
    return 0


def cmd_table(args) -> int:
    rows = tables.table_rows(args.id, args.max_n, args.max_brute)
    _out(tables.render(args.id, rows, args.format))
    return 0


def cmd_map(args) -> int:
    w = parse_word(args.word)
    if not w:
        raise UsageError("empty word")
    if set(w) <= {0, 1}:
        direction = "necklace-to-rop"
        c = necklace_to_rop(w)
        n, n2, nprime = len(w), w.count(0), c.length
        output = str(c)
        lyndon = c.lyndon
    elif set(w) <= {2, 3}:
        direction = "rop-to-necklace"
        neck = rop_to_necklace(w)
        n, n2, nprime = neck.length, neck.zeros, len(w)
        output = str(neck)
        lyndon = neck.lyndon
    else:
        raise UsageError(f"{args.word!r} is neither a binary word nor a word over {{2,3}}")
    doc = {
        "input": word_str(w),
        "direction": direction,
        "output": output,
        "n": n,
        "n2": n2,
        "nprime": nprime,
        "lyndon": lyndon,
    }
    if args.format == "json":
        _out(json.dumps(doc))
    elif args.format == "csv":
        _out(",".join(doc))
        _out(",".join(_flag(v) if isinstance(v, bool) else str(v) for v in doc.values()))
    else:
        _out(output)
        _out(f"n={n} n2={n2} nprime={nprime} lyndon={_flag(lyndon)}")
    return 0


COMMANDS = {
    "check": cmd_check,
    "list": cmd_list,
    "count": cmd_count,
    "table": cmd_table,
    "map": cmd_map,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"ropwords: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
