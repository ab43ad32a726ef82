"""Command-line entry point: ``popboards <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (reported as JSON on stderr)
and 2 on usage errors.  Any payload argument may be given as ``@path`` to read
it from a file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import boards, codec, counting, pops
from .errors import EquivalenceViolated, ParseError, PopBoardsError, SoundnessViolation


def _payload(text: str) -> str:
    if text.startswith("@"):
        try:
            return Path(text[1:]).read_text().strip()
        except OSError as exc:
            raise ParseError(f"cannot read {text[1:]}: {exc.strerror}", path=text[1:]) from None
    return text


def _board(text: str) -> boards.FerrersBoard:
    return boards.parse_board(_payload(text))


def _family(text: str) -> pops.ClawFamily:
    return pops.parse_family(_payload(text))


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _seq(values) -> str:
    return ",".join(map(str, values))


def cmd_board_check(args) -> str:
    board = _board(args.board)
    info = {
        "parts": list(board.parts),
        "n": board.n,
        "row_lengths": list(board.row_lengths),
        "feasible": board.feasible,
        "white_profile": list(boards.white_profile(board)) if board.feasible else None,
    }
    if args.format == "json":
        return _json(info)
    rows = [(k, _seq(v) if isinstance(v, list) else str(v).lower() if v is not None else "") for k, v in info.items()]
    if args.format == "csv":
        return _csv(["field", "value"], rows)
    return "\n".join(f"{k}: {v}" for k, v in rows)


def cmd_enumerate(args) -> str:
    board = _board(args.board)
    family = _family(args.family) if args.family else None
    items = [t for t in boards.enumerate_transversals(board) if family is None or pops.avoids(t, family)]
    if args.format == "json":
        return _json({
            "board": str(board),
            "family": str(family) if family else None,
            "count": len(items),
            "transversals": [list(t.values) for t in items],
        })
    if args.format == "csv":
        return _csv(["transversal"], [[str(t)] for t in items])
    return "\n".join(str(t) for t in items)


def cmd_count(args) -> str:
    board = _board(args.board)
    family = _family(args.family)
    results = {}
    if args.method in ("formula", "both"):
        results["formula"] = counting.count_avoiders_formula(board, family)
    if args.method in ("bruteforce", "both"):
        results["bruteforce"] = counting.count_avoiders_bruteforce(board, family, jobs=args.jobs)
    if len(set(results.values())) > 1:
        raise EquivalenceViolated(f"formula and brute force disagree on {board}", **results)
    if args.format == "json":
        return _json({"board": str(board), "family": str(family), "method": args.method, "counts": results})
    if args.format == "csv":
        return _csv(["method", "count"], results.items())
    return str(next(iter(results.values())))


def cmd_encode(args) -> str:
    board = _board(args.board)
    family = _family(args.family)
    t = boards.parse_transversal(board, _payload(args.transversal))
    word = codec.encode(t, family)
    if args.format == "json":
        steps = [
            {
                "step": s.step,
                "white_columns": list(s.white_columns),
                "valid": list(codec.valid_positions_formula(s.l, family)),
            }
            for s in codec.encoding_steps(board, t.insertion_columns())
        ]
        return _json({"board": str(board), "family": str(family), "transversal": list(t.values), "word": list(word), "steps": steps})
    if args.format == "csv":
        return _csv(["step", "letter"], enumerate(word, start=1))
    return _seq(word)


def cmd_decode(args) -> str:
    board = _board(args.board)
    family = _family(args.family)
    word = boards.parse_int_list(_payload(args.word))
    t = codec.decode(word, board, family)
    if args.format == "json":
        return _json({"board": str(board), "family": str(family), "word": list(word), "transversal": list(t.values)})
    if args.format == "csv":
        return _csv(["column", "value"], enumerate(t.values, start=1))
    return str(t)


def cmd_transfer(args) -> str:
    board = _board(args.board)
    source = _family(args.source)
    target = _family(args.target)
    t = boards.parse_transversal(board, _payload(args.transversal))
    image = codec.transfer(t, source, target)
    if args.format == "json":
        return _json({
            "board": str(board),
            "from": str(source),
            "to": str(target),
            "transversal": list(t.values),
            "word": list(codec.encode(t, source)),
            "image": list(image.values),
        })
    if args.format == "csv":
        return _csv(["column", "value"], enumerate(image.values, start=1))
    return str(image)


def cmd_equiv(args) -> str:
    board = _board(args.board)
    report = counting.equivalence_check(board, _family(args.family_a), _family(args.family_b))
    if args.format == "json":
        return _json(report.to_dict())
    if args.format == "csv":
        return _csv(["family", "count"], zip(report.families, report.counts))
    a, b = report.counts
    return f"{a} = {b} certified ({report.pairs_checked} pairs)"


def cmd_table(args) -> str:
    family = _family(args.family)
    rows = counting.count_table(family, args.n_max, method=args.method, jobs=args.jobs)
    if args.format == "json":
        return _json({"family": str(family), "method": args.method, "rows": [{"n": n, "count": c} for n, c in rows]})
    if args.format == "csv":
        return _csv(["n", "count"], rows)
    return "\n".join(f"{n} {c}" for n, c in rows)


def cmd_search(args) -> str:
    fa = _family(args.family_a)
    fb = _family(args.family_b)
    hit = counting.distinguishing_board_search(fa, fb, args.max_n)
    if args.format == "json":
        return _json({"familyA": str(fa), "familyB": str(fb), "max_n": args.max_n, "result": hit.to_dict() if hit else None})
    if hit is None:
        return "none" if args.format == "plain" else _csv(["board", "countA", "countB"], [])
    if args.format == "csv":
        return _csv(["board", "countA", "countB"], [[str(hit.board), hit.count_a, hit.count_b]])
    return f"{hit.board} {hit.count_a} {hit.count_b}"


def cmd_expand_pop(args) -> str:
    pop = pops.parse_pop(_payload(args.pop))
    patterns = pops.pop_to_patterns(pop)
    sep = "" if pop.m <= 9 else ","
    text = [sep.join(map(str, p)) for p in patterns]
    if args.format == "json":
        return _json({"pop": str(pop), "count": len(patterns), "patterns": text})
    if args.format == "csv":
        return _csv(["pattern"], [[p] for p in text])
    return "\n".join(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for brute-force counting")

    parser = argparse.ArgumentParser(prog="popboards", description="Claw-family POP avoidance on Ferrers boards.")
    sub = parser.add_subparsers(dest="command", required=True)

    board = sub.add_parser("board", help="board utilities")
    board_sub = board.add_subparsers(dest="board_command", required=True)
    p = board_sub.add_parser("check", parents=[common], help="validate a board and show its profile")
    p.add_argument("--board", required=True)
    p.set_defaults(func=cmd_board_check)

    p = sub.add_parser("enumerate", parents=[common], help="list transversals, optionally only avoiders")
    p.add_argument("--board", required=True)
    p.add_argument("--family")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count avoiders on a board")
    p.add_argument("--board", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--method", choices=["formula", "bruteforce", "both"], default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("encode", parents=[common], help="encoding word of an avoiding transversal")
    p.add_argument("--board", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--transversal", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="transversal for an encoding word")
    p.add_argument("--board", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("transfer", parents=[common], help="map an avoider of one family to another")
    p.add_argument("--board", required=True)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--transversal", required=True)
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("equiv", parents=[common], help="brute-force equivalence certificate on one board")
    p.add_argument("--board", required=True)
    p.add_argument("--family-a", required=True)
    p.add_argument("--family-b", required=True)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("table", parents=[common], help="avoider counts on n x n squares")
    p.add_argument("--family", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--method", choices=["formula", "square", "bruteforce"], default="formula")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("search-distinguisher", parents=[common], help="first board separating two families")
    p.add_argument("--family-a", required=True)
    p.add_argument("--family-b", required=True)
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("expand-pop", parents=[common], help="classical patterns of a POP, e.g. '4: 1>2, 1>4'")
    p.add_argument("pop")
    p.set_defaults(func=cmd_expand_pop)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except PopBoardsError as exc:
        print(_json(exc.to_dict()), file=stderr)
        return 1
    except SoundnessViolation as exc:
        print(_json({"error": "SoundnessViolation", "message": str(exc), "details": {}}), file=stderr)
        return 1
    print(out, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())
