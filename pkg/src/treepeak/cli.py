"""Command-line front end.

Exit status: 0 success, 1 negative answer, 2 bad input or usage, 3 the
instance is too large for the guarded routines.  Errors go to stderr as
``error: <code>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import committees as cc
from .errors import MalformedInput, TreepeakError
from .graphs import Tree, format_decomposition, format_tree, is_single_peaked_on, parse_tree
from .nice_trees import (
    find_caterpillar,
    find_path,
    find_star,
    find_star_subdivision,
    min_diameter_tree,
    min_internal_tree,
    min_leaves_tree,
    min_max_degree_tree,
    min_pathwidth_tree,
)
from .profile import Profile, ScoringFunction, format_profile, parse_profile
from .recognition import (
    build_attachment_digraph,
    count_trees,
    enumerate_trees,
    random_sp_profile,
    trick_recognize,
)

OBJECTIVES = (
    "min-leaves",
    "min-internal",
    "min-diameter",
    "min-degree",
    "min-pathwidth",
    "path",
    "star",
    "caterpillar",
    "star-subdivision",
)


class _Negative(Exception):
    """A well-formed question whose answer is no (exit status 1)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"error: usage: {message}\n")
        raise SystemExit(2)


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise MalformedInput(f"{path} is not UTF-8 text") from None


def _profile(args) -> Profile:
    return parse_profile(_read(args.file), args.format)


def _tree_file(path: str, m: int) -> Tree:
    return parse_tree(_read(path), m)


def parse_score(text: str, m: int) -> ScoringFunction:
    """``borda``, ``approval:R`` or ``vector:s1,s2,...``."""
    name, _, arg = text.partition(":")
    try:
        if name == "borda" and not arg:
            return ScoringFunction.borda(m)
        if name == "approval":
            return ScoringFunction.approval(m, int(arg))
        if name == "vector":
            return ScoringFunction(vector=tuple(int(x) for x in arg.split(",")))
    except ValueError as exc:
        if isinstance(exc, TreepeakError):
            raise
        raise MalformedInput(f"bad score {text!r}") from None
    raise MalformedInput(f"unknown score {text!r}; use borda, approval:R or vector:s1,...")


def _json(obj) -> str:
    return json.dumps(obj) + "\n"


def _edges(t: Tree) -> list[list[int]]:
    return [[u + 1, v + 1] for u, v in t.edges]


def _digraph(p: Profile):
    d = build_attachment_digraph(p)
    if d is None:
        raise _Negative("profile is not single-peaked on any tree")
    return d


# --- commands -------------------------------------------------------------


def cmd_recognize(args, out):
    p = _profile(args)
    t = trick_recognize(p)
    if t is None:
        if args.json:
            out.append(_json({"tree_edges": None}))
        raise _Negative("profile is not single-peaked on any tree")
    out.append(_json({"tree_edges": _edges(t)}) if args.json else format_tree(t))


def cmd_digraph(args, out):
    d = _digraph(_profile(args))
    arcs = sorted(d.arcs)
    if args.json:
        out.append(_json({
            "arcs": [[a + 1, b + 1] for a, b in arcs],
            "sink": d.sink + 1,
            "forced": [a + 1 for a in sorted(d.forced)],
            "free": [a + 1 for a in sorted(d.free)],
        }))
        return
    lines = [f"{a + 1} -> {b + 1}" for a, b in arcs]
    lines.append(f"sink: {d.sink + 1}")
    lines.append("forced: " + " ".join(str(a + 1) for a in sorted(d.forced)))
    lines.append("free: " + " ".join(str(a + 1) for a in sorted(d.free)))
    out.append("\n".join(lines) + "\n")


def cmd_count(args, out):
    d = build_attachment_digraph(_profile(args))
    n = 0 if d is None else count_trees(d)
    out.append(_json({"count": n}) if args.json else f"{n}\n")
    if d is None:
        raise _Negative("profile is not single-peaked on any tree")


def cmd_enumerate(args, out):
    if args.limit is not None and args.limit < 0:
        raise MalformedInput("--limit must be non-negative")
    d = _digraph(_profile(args))
    trees = enumerate_trees(d, args.limit)
    if args.json:
        out.append(_json({"trees": [_edges(t) for t in trees]}))
        return
    # one tree per line, edges as u-v tokens
    out.append("".join(" ".join(f"{u}-{v}" for u, v in _edges(t)) + "\n" for t in trees))


def _find(objective: str, p: Profile):
    """Returns ``(tree, extra)`` where ``extra`` holds objective-specific fields."""
    if objective == "path":
        return find_path(p), {}
    if objective == "star":
        return find_star(p), {}
    d = _digraph(p)
    if objective == "min-leaves":
        return min_leaves_tree(d), {}
    if objective == "min-internal":
        return min_internal_tree(d), {}
    if objective == "min-diameter":
        return min_diameter_tree(d), {}
    if objective == "min-degree":
        k, t = min_max_degree_tree(d)
        return t, {"max_degree": k}
    if objective == "min-pathwidth":
        t, dec = min_pathwidth_tree(d)
        return t, {"width": dec.width, "bags": dec}
    if objective == "caterpillar":
        return find_caterpillar(d), {}
    return find_star_subdivision(d), {}


def cmd_find_tree(args, out):
    p = _profile(args)
    t, extra = _find(args.objective, p)
    if t is None:
        if args.json:
            out.append(_json({"tree_edges": None}))
        raise _Negative(f"no tree of class {args.objective}")
    if args.json:
        obj = {"tree_edges": _edges(t)}
        for key, value in extra.items():
            obj[key] = [[v + 1 for v in sorted(b)] for b in value.bags] if key == "bags" else value
        out.append(_json(obj))
        return
    text = format_tree(t)
    if "max_degree" in extra:
        text += f"# max-degree: {extra['max_degree']}\n"
    if "width" in extra:
        text += f"# width: {extra['width']}\n"
        text += "".join(f"# bag: {line}\n" for line in format_decomposition(extra["bags"]).splitlines())
    out.append(text)


def cmd_cc(args, out):
    p = _profile(args)
    mu = parse_score(args.score, p.m)
    bounds = dict(force=args.force, leaf_bound=args.leaf_bound, internal_bound=args.internal_bound)
    if args.tree:
        res = cc.cc_on_tree(p, _tree_file(args.tree, p.m), mu, args.k, args.variant, **bounds)
    else:
        res = cc.cc_auto(p, mu, args.k, args.variant, **bounds)
    committee = [c + 1 for c in res.committee]
    if args.json:
        out.append(_json({"score": res.score, "committee": committee, "algorithm": res.algorithm}))
        return
    out.append(
        f"score: {res.score}\n"
        f"committee: {' '.join(map(str, committee))}\n"
        f"algorithm: {res.algorithm}\n"
    )


def cmd_verify(args, out):
    p = _profile(args)
    ok = is_single_peaked_on(p, _tree_file(args.tree, p.m))
    out.append(_json({"single_peaked": ok}) if args.json else ("yes\n" if ok else "no\n"))
    if not ok:
        raise _Negative("profile is not single-peaked on the tree")


def cmd_gen(args, out):
    if args.m < 1 or args.n < 1:
        raise MalformedInput("--m and --n must be positive")
    p, t = random_sp_profile(args.m, args.n, args.seed)
    if args.tree_out:
        with open(args.tree_out, "w", encoding="utf-8") as fh:
            fh.write(format_tree(t))
    if args.json:
        out.append(_json({"votes": [[c + 1 for c in v] for v in p.votes], "tree_edges": _edges(t)}))
        return
    # the tree rides along as comments so the output stays a valid profile file
    out.append(format_profile(p) + "".join(f"# tree-edge {u} {v}\n" for u, v in _edges(t)))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treepeak", description="Preferences single-peaked on trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help_text, profile=True):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="print one JSON object")
        if profile:
            sp.add_argument("file", nargs="?", help="profile file (default: stdin)")
            sp.add_argument("--format", choices=("plain", "soc"), default="plain")
        return sp

    command("recognize", cmd_recognize, "print some tree the profile is single-peaked on")
    command("digraph", cmd_digraph, "print the attachment digraph")
    command("count", cmd_count, "count the trees the profile is single-peaked on")
    sp = command("enumerate", cmd_enumerate, "list those trees, one per line")
    sp.add_argument("--limit", type=int)
    sp = command("find-tree", cmd_find_tree, "find a tree with a given shape")
    sp.add_argument("--objective", choices=OBJECTIVES, required=True)
    sp = command("cc", cmd_cc, "Chamberlin-Courant committee")
    sp.add_argument("--variant", choices=cc.VARIANTS, default=cc.UTILITARIAN)
    sp.add_argument("--score", default="borda", help="borda, approval:R or vector:s1,s2,...")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--tree", help="use this tree instead of recognizing one")
    sp.add_argument("--force", action="store_true", help="allow large brute-force searches")
    sp.add_argument("--leaf-bound", type=int, default=cc.LEAF_BOUND)
    sp.add_argument("--internal-bound", type=int, default=cc.INTERNAL_BOUND)
    sp = command("verify", cmd_verify, "check a profile against a tree")
    sp.add_argument("--tree", required=True)
    sp = command("gen", cmd_gen, "random single-peaked profile with its tree", profile=False)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tree-out", help="also write the tree to this file")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    status = 0
    try:
        args.func(args, out)
    except _Negative as exc:
        sys.stderr.write(f"{exc}\n")
        status = 1
    except TreepeakError as exc:
        sys.stderr.write(f"error: {exc.code}: {exc}\n")
        status = exc.exit_status
    except OSError as exc:
        sys.stderr.write(f"error: io: {exc}\n")
        status = 2
    sys.stdout.write("".join(out))
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
