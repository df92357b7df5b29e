"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 invalid group datum,
3 ``iso`` ran out of budget (the verdict JSON is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import BallTooLargeError, DatumError, LMGError, PreconditionError, WordSyntaxError
from .io import load_datum
from .iso import Budget, bs_classify, decide_iso
from .lmgroup import GroupClass, abelianization, britton_reduce, coarse_class, cyclic_reduce, parse_word
from .tree import ball, vertex_canonical
from .words import Word

EXIT_OK, EXIT_USAGE, EXIT_DATUM, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _fail(message: str, code: int, position: int | None = None) -> int:
    sys.stderr.write(json.dumps({"error": message, "position": position}) + "\n")
    return code


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lmg", description="HNN extensions G(A, L) of Z^n: word problem, tree, isomorphism.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (("classify", "coarse class"), ("abel", "abelianization")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("group")
    for name, help_ in (
        ("wp", "decide whether a word is the identity"),
        ("reduce", "Britton-reduce a word"),
        ("tlen", "translation length on the Bass-Serre tree"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("group")
        s.add_argument("word")

    s = sub.add_parser("ball", help="finite ball in the Bass-Serre tree")
    s.add_argument("group")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--center", default="", help="word naming the center vertex (default: H)")
    s.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")

    s = sub.add_parser("iso", help="decide isomorphism of two groups")
    s.add_argument("group1")
    s.add_argument("group2")
    s.add_argument("--height", type=int, default=Budget.height)
    s.add_argument("--max-candidates", type=int, default=Budget.max_candidates)

    s = sub.add_parser("bs", help="Baumslag-Solitar isomorphism criterion")
    for name in ("p", "q", "p_bar", "q_bar"):
        s.add_argument(name, type=int)
    return p


def _class_json(G) -> dict:
    c = coarse_class(G)
    out = {"class": c.kind.value}
    if c.kind is GroupClass.POLYCYCLIC:
        out["hirsch"] = c.hirsch
    return out


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "bs":
        _emit({"isomorphic": bs_classify(args.p, args.q, args.p_bar, args.q_bar)})
        return EXIT_OK
    if cmd == "iso":
        if args.height < 0 or args.max_candidates < 0:
            raise UsageError("--height and --max-candidates must be non-negative")
        G1, G2 = load_datum(args.group1), load_datum(args.group2)
        v = decide_iso(G1, G2, Budget(height=args.height, max_candidates=args.max_candidates))
        _emit(v.to_json())
        return EXIT_UNKNOWN if v.verdict == "unknown" else EXIT_OK

    G = load_datum(args.group)
    if cmd == "classify":
        _emit(_class_json(G))
    elif cmd == "abel":
        a = abelianization(G)
        _emit({"free_rank": a.free_rank, "torsion": list(a.torsion)})
    elif cmd == "wp":
        w = parse_word(args.word, G)
        _emit({"identity": not britton_reduce(G, w)})
    elif cmd == "reduce":
        r = britton_reduce(G, parse_word(args.word, G))
        _emit({"reduced": str(r), "stable_letters": r.stable_count, "psi": r.psi})
    elif cmd == "tlen":
        core, conj, tau = cyclic_reduce(G, parse_word(args.word, G))
        _emit({"tau": tau, "elliptic": tau == 0, "core": str(core), "conjugator": str(conj)})
    elif cmd == "ball":
        center = vertex_canonical(G, parse_word(args.center, G)) if args.center else Word()
        b = ball(G, center, args.radius)
        if args.dot:
            sys.stdout.write(b.to_dot())
        else:
            sys.stdout.write(b.to_json() + "\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args)
    except UsageError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except WordSyntaxError as exc:
        return _fail(str(exc), EXIT_USAGE, exc.position)
    except json.JSONDecodeError as exc:
        return _fail(f"invalid JSON: {exc.msg}", EXIT_USAGE, exc.pos)
    except OSError as exc:
        return _fail(f"cannot read {exc.filename}: {exc.strerror}", EXIT_USAGE)
    except DatumError as exc:
        return _fail(str(exc), EXIT_DATUM)
    except (BallTooLargeError, PreconditionError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    except LMGError as exc:
        return _fail(str(exc), EXIT_USAGE)


def run(argv: Sequence[str] | None = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
