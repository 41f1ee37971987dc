"""Command-line entry point: `python -m crystaldict <group> <command> ...`."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from crystaldict.config import get_config, parse_contents_range
from crystaldict.errors import CrystalError, MalformedInput, UsageError, VerificationFailed
from crystaldict.models.partitions import delta_of_mp, is_kleshchev
from crystaldict.models.segments import Multisegment, Weight, content_multiset, left_order, m_of, n_of, right_order
from crystaldict.services import characters as ch
from crystaldict.services import codec, export, graph, mp_crystal, seg_crystal, transport
from crystaldict.services.selfcheck import run_selfcheck
from crystaldict.services.verify import build_tensor, verify_three_way

logger = logging.getLogger(__name__)

SEG_STATS = {
    "eps": ("eps", seg_crystal.eps),
    "phi": ("phi", seg_crystal.phi),
    "epshat": ("eps_hat", seg_crystal.eps_hat),
    "phihat": ("phi_hat", seg_crystal.phi_hat),
}
SEG_MOVES: Dict[str, Callable[[Multisegment, int], Optional[Multisegment]]] = {
    "e": seg_crystal.apply_e,
    "f": seg_crystal.apply_f,
    "ehat": seg_crystal.apply_e_hat,
    "fhat": seg_crystal.apply_f_hat,
}
GRAPH_KINDS = ("binf", "blambda-seg", "blambda-mp", "tensor")


class CliParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _read_input(args: argparse.Namespace) -> Any:
    if getattr(args, "file", None):
        raw = Path(args.file).read_bytes()
    else:
        stream = getattr(sys.stdin, "buffer", None)
        raw = stream.read() if stream is not None else sys.stdin.read()
    try:
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    except UnicodeDecodeError as exc:
        raise MalformedInput(f"input is not valid UTF-8: {exc.reason} at byte {exc.start}") from None
    return codec.loads(text)


def _emit(document: Any) -> None:
    sys.stdout.write(codec.dumps(document))


def _weight_arg(text: str) -> Weight:
    return codec.weight_from_json(codec.loads(text))


def _contents_arg(text: str) -> List[int]:
    try:
        lo, hi = parse_contents_range(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return list(range(lo, hi + 1))


FLAGS = {"lam": "--lambda", "max_n": "--max-n"}


def _require(args: argparse.Namespace, name: str) -> Any:
    value = getattr(args, name, None)
    if value is None:
        flag = FLAGS.get(name, f"--{name}")
        raise UsageError(f"{flag} is required for {args.group} {args.command}")
    return value


# seg

def cmd_seg(args: argparse.Namespace) -> int:
    d = codec.multisegment_from_json(_read_input(args))
    command = args.command
    if command in SEG_STATS:
        key, stat = SEG_STATS[command]
        _emit({key: stat(d, _require(args, "i"))})
    elif command in SEG_MOVES:
        move = SEG_MOVES[command]
        i = _require(args, "i")
        current: Optional[Multisegment] = d
        for _ in range(args.reps):
            if current is None:
                break
            current = move(current, i)
        _emit(codec.multisegment_to_json(current))
    elif command == "order":
        ordered = right_order(d) if args.mode == "right" else left_order(d)
        _emit({"segments": [[s.start, s.end] for s in ordered]})
    elif command == "minlambda":
        _emit(codec.weight_to_json(seg_crystal.minimal_weight(d)))
    elif command == "path":
        if args.grouped:
            _emit({"path": [[j, k] for j, k in seg_crystal.hw_path_grouped(d)]})
        else:
            _emit({"path": seg_crystal.hw_path(d)})
    elif command == "content":
        _emit({"counts": [[c, k] for c, k in content_multiset(d).counts]})
    elif command == "stats":
        _emit({"n": n_of(d), "m": m_of(d)})
    return 0


# check

def cmd_check(args: argparse.Namespace) -> int:
    document = _read_input(args)
    if args.command == "cyclotomic":
        d = codec.multisegment_from_json(document)
        _emit({"cyclotomic": seg_crystal.cyclotomic_check(d, _weight_arg(_require(args, "lam")))})
    else:
        _emit({"kleshchev": is_kleshchev(codec.multipartition_from_json(document))})
    return 0


# convert

def cmd_convert(args: argparse.Namespace) -> int:
    document = _read_input(args)
    if args.command == "seg2mp":
        d = codec.multisegment_from_json(document)
        _emit(codec.multipartition_to_json(transport.seg_to_mp(d, _weight_arg(_require(args, "lam")))))
    elif args.command == "mp2seg":
        _emit(codec.multisegment_to_json(delta_of_mp(codec.multipartition_from_json(document))))
    else:
        d = codec.multisegment_from_json(document)
        mu, nu = transport.decompose_level2(d, _require(args, "i"), _require(args, "h"))
        _emit({"components": [codec.colored_partition_to_json(mu), codec.colored_partition_to_json(nu)]})
    return 0


# mp

def cmd_mp(args: argparse.Namespace) -> int:
    mp = codec.multipartition_from_json(_read_input(args))
    i = _require(args, "i")
    if args.command == "eps":
        _emit({"eps": mp_crystal.eps_mp(mp, i)})
    elif args.command == "phi":
        _emit({"phi": mp_crystal.phi_mp(mp, i)})
    elif args.command == "e":
        _emit(codec.multipartition_to_json(mp_crystal.apply_e_mp(mp, i)))
    else:
        _emit(codec.multipartition_to_json(mp_crystal.apply_f_mp(mp, i)))
    return 0


# char

def cmd_char(args: argparse.Namespace) -> int:
    document = _read_input(args)
    segments = codec.segment_list_from_json(document)
    if args.command == "word":
        d = Multisegment(tuple(segments))
        _emit({"word": list(ch.distinguished_word(d)), "mult": ch.distinguished_multiplicity(d)})
        return 0
    character = ch.char_of_ind(segments, args.bound)
    if args.command == "mult":
        word = codec.char_word_from_json(codec.loads(_require(args, "word")))
        _emit({"mult": ch.multiplicity(character, word)})
    else:
        _emit(codec.character_to_json(character))
    return 0


# graph

def _build_graph(kind: str, args: argparse.Namespace) -> graph.CrystalGraph:
    max_n = _require(args, "max_n")
    if kind == "binf":
        return graph.build_binf(_contents_arg(_require(args, "contents")), max_n)
    lam = _weight_arg(_require(args, "lam"))
    if kind == "blambda-seg":
        contents = _contents_arg(args.contents) if args.contents else None
        return graph.build_blambda_seg(lam, max_n, contents)
    if kind == "blambda-mp":
        return graph.build_blambda_mp(lam, max_n)
    return build_tensor(lam, max_n)


def _write_graph(g: graph.CrystalGraph, args: argparse.Namespace) -> None:
    if args.format == "xlsx":
        if not args.out:
            raise UsageError("--format xlsx needs --out")
        Path(args.out).write_bytes(export.to_excel(g))
        return
    if args.format == "dot":
        text = export.to_dot(g)
    elif args.format == "csv":
        text = export.to_csv(g, args.table)
    else:
        text = export.to_json(g)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_graph(args: argparse.Namespace) -> int:
    if args.command == "verify":
        max_n = _require(args, "max_n")
        if args.lam:
            weights = [_weight_arg(args.lam)]
        else:
            weights = [Weight.from_colors(colors) for colors in get_config().test_weights]
        reports = [verify_three_way(lam, max_n) for lam in weights]
        _emit({"ok": all(r.ok for r in reports), "reports": [r.to_dict() for r in reports]})
        failed = [f"{r.lam.label}: {f}" for r in reports for f in r.failures()]
        if failed:
            raise VerificationFailed("; ".join(failed))
        return 0
    if args.command == "profile":
        profile = graph.size_profile(_build_graph(args.of, args))
        _emit({"rows": json.loads(profile.to_json(orient="records"))})
        return 0
    _write_graph(_build_graph(args.command, args), args)
    return 0


# selfcheck

def cmd_selfcheck(args: argparse.Namespace) -> int:
    results = run_selfcheck(args.level)
    _emit({"ok": all(r.ok for r in results), "suites": [r.to_dict() for r in results]})
    failed = [r.name for r in results if not r.ok]
    if failed:
        raise VerificationFailed(f"failing suites: {', '.join(failed)}")
    return 0


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--file", help="read the JSON input from this file instead of stdin")


def build_parser() -> CliParser:
    parser = CliParser(prog="crystaldict", description="Multisegment / multipartition crystal dictionary")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=CliParser)

    seg = groups.add_parser("seg", help="operators and statistics on a multisegment")
    seg.add_argument(
        "command",
        choices=[*SEG_STATS, *SEG_MOVES, "order", "minlambda", "path", "content", "stats"],
    )
    seg.add_argument("--i", type=int)
    seg.add_argument("--reps", type=int, default=1)
    seg.add_argument("--mode", choices=["right", "left"], default="right")
    seg.add_argument("--grouped", action="store_true", help="run-length encode the path")
    _add_input(seg)
    seg.set_defaults(handler=cmd_seg)

    check = groups.add_parser("check", help="membership tests")
    check.add_argument("command", choices=["cyclotomic", "kleshchev"])
    check.add_argument("--lambda", dest="lam")
    _add_input(check)
    check.set_defaults(handler=cmd_check)

    convert = groups.add_parser("convert", help="multisegment <-> multipartition")
    convert.add_argument("command", choices=["seg2mp", "mp2seg", "level2"])
    convert.add_argument("--lambda", dest="lam")
    convert.add_argument("--i", type=int)
    convert.add_argument("--h", type=int)
    _add_input(convert)
    convert.set_defaults(handler=cmd_convert)

    mp = groups.add_parser("mp", help="operators on a colored multipartition")
    mp.add_argument("command", choices=["eps", "phi", "e", "f"])
    mp.add_argument("--i", type=int)
    _add_input(mp)
    mp.set_defaults(handler=cmd_mp)

    char = groups.add_parser("char", help="characters of modules induced from segments")
    char.add_argument("command", nargs="?", choices=["ind", "mult", "word"], default="ind")
    char.add_argument("--bound", type=int)
    char.add_argument("--word")
    _add_input(char)
    char.set_defaults(handler=cmd_char)

    graphs = groups.add_parser("graph", help="truncated crystal graphs")
    graphs.add_argument("command", choices=[*GRAPH_KINDS, "profile", "verify"])
    graphs.add_argument("--of", choices=GRAPH_KINDS, default="blambda-mp", help="graph summarized by profile")
    graphs.add_argument("--lambda", dest="lam")
    graphs.add_argument("--max-n", dest="max_n", type=int)
    graphs.add_argument("--contents")
    graphs.add_argument("--format", choices=["dot", "json", "csv", "xlsx"], default="json")
    graphs.add_argument("--table", choices=["nodes", "edges"], default="edges", help="table written by --format csv")
    graphs.add_argument("--out")
    graphs.set_defaults(handler=cmd_graph)

    selfcheck = groups.add_parser("selfcheck", help="run the invariant suites")
    selfcheck.add_argument("--level", choices=["quick", "full"], default="quick")
    selfcheck.set_defaults(handler=cmd_selfcheck)
    return parser


def _configure_logging(verbosity: int) -> None:
    config = get_config()
    level = config.log_level
    if verbosity >= 2:
        level = "DEBUG"
    elif verbosity == 1:
        level = "INFO"
    logging.basicConfig(level=level, format=config.log_format, stream=sys.stderr)


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _configure_logging(args.verbose)
        logger.debug("dispatching %s %s", args.group, getattr(args, "command", ""))
        return args.handler(args)
    except CrystalError as exc:
        sys.stderr.write(json.dumps(exc.to_diagnostic(), ensure_ascii=False) + "\n")
        return exc.exit_code
    except OSError as exc:
        sys.stderr.write(json.dumps({"error": "IOError", "message": str(exc)}, ensure_ascii=False) + "\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
