"""
Command-line interface.

Exit codes are a stable contract: 0 on success, 1 on a usage error (bad
arguments, malformed permutation or polynomial), 2 when a mathematical check
fails (negative coefficient, verification counterexample).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import permkit as pk
from . import polyring as pr
from . import positivity as pos
from . import verify as vf
from . import weightmod as wm

EXIT_OK, EXIT_USAGE, EXIT_MATH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_perm(tokens: list[str]) -> pk.Permutation:
    """Accept `4 2 1 3`, `4213` or `4,2,1,3`."""
    if len(tokens) == 1:
        tok = tokens[0]
        if "," in tok:
            tokens = [t for t in tok.split(",") if t]
        elif tok.isdigit() and len(tok) > 1:
            tokens = list(tok)
    try:
        return pk.Permutation(int(t) for t in tokens)
    except ValueError as exc:
        raise UsageError(f"malformed permutation {' '.join(tokens)!r}: {exc}") from None


def parse_partition(token: str) -> tuple[int, ...]:
    try:
        lam = tuple(int(t) for t in token.split(",") if t)
    except ValueError:
        raise UsageError(f"malformed partition {token!r}") from None
    if any(a < b for a, b in zip(lam, lam[1:])) or any(a < 0 for a in lam):
        raise UsageError(f"not a partition: {token!r}")
    return lam


def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {token!r}") from None


def _emit(args, data, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(data))
    else:
        print(text)


def _poly_out(args, p: pr.SparsePoly) -> None:
    if getattr(args, "latex", False):
        print(p.latex())
    else:
        _emit(args, p.to_json(), str(p))


def _expansion_text(exp: pr.Expansion) -> str:
    if not exp:
        return "0"
    return "\n".join(f"{c:+d} S_{u}" for u, c in sorted(exp.items()))


# -- subcommands -----------------------------------------------------------------

def cmd_schubert(args) -> int:
    _poly_out(args, pr.schubert(parse_perm(args.perm)))
    return EXIT_OK


def cmd_expand(args) -> int:
    try:
        if args.poly == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.poly) as fh:
                data = json.load(fh)
        p = pr.SparsePoly.from_json(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read polynomial from {args.poly}: {exc}") from None
    exp = pr.expand_schubert(p)
    _emit(args, {"expansion": exp.to_json()}, _expansion_text(exp))
    return EXIT_OK


def cmd_monk(args) -> int:
    if len(args.args) < 2:
        raise UsageError("monk needs a permutation followed by k")
    w, k = parse_perm(args.args[:-1]), _int(args.args[-1], "k")
    if k < 1:
        raise UsageError("k must be positive")
    terms = pk.monk_terms(w, k)
    _emit(args, {"w": w.to_json(), "k": k, "terms": [u.to_json() for u in terms]},
          "\n".join(str(u) for u in terms) if terms else "0")
    return EXIT_OK


def _transition_text(t: pk.Transition) -> str:
    rhs = [f"S_{t.v}*x{t.j}"] + [f"S_{b}" for b in t.branches]
    return f"(j,s)=({t.j},{t.s}): S_{t.w} = " + " + ".join(rhs)


def cmd_transition(args) -> int:
    w = parse_perm(args.perm)
    if args.all:
        ts = pk.transitions(w)
    else:
        try:
            ts = [pk.maximal_transition(w)]
        except pk.NoTransitionError as exc:
            raise UsageError(str(exc)) from None
    _emit(args, [t.to_json() for t in ts], "\n".join(_transition_text(t) for t in ts) or "none")
    return EXIT_OK


def cmd_kp_char(args) -> int:
    w = parse_perm(args.perm)
    if args.ranks:
        dump = wm.build_phi(pk.shape_of(w)).rank_dump()
        _emit(args, dump, "\n".join(f"{d['weight']}: {d['rank']}" for d in dump))
        return EXIT_OK
    _poly_out(args, wm.kp_character(w, args.jobs))
    return EXIT_OK


def cmd_kp_prime_char(args) -> int:
    if len(args.args) < 2:
        raise UsageError("kp-prime-char needs a permutation followed by n")
    w, n = parse_perm(args.args[:-1]), _int(args.args[-1], "n")
    if w.size > n:
        raise UsageError(f"{w} is not in S_{n}")
    _poly_out(args, wm.kp_prime_character(w, n, args.jobs))
    return EXIT_OK


def cmd_positivity(args) -> int:
    sigma = parse_partition(args.sigma)
    w = parse_perm(args.perm)
    fn = pos.schur_of_monomials if args.mode == "monomial" else pos.schur_of_linear_forms
    rep = fn(sigma, w)
    text = f"{args.mode} sigma={sigma} w={w}: " + ("nonnegative" if rep.nonnegative else "NEGATIVE")
    text += "\n" + _expansion_text(rep.expansion)
    _emit(args, rep.to_json(), text)
    return EXIT_OK if rep.nonnegative else EXIT_MATH


def cmd_verify(args) -> int:
    names = list(vf.SUITES) if args.suite == "all" else [args.suite]
    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
        for name in names:
            r = vf.run_suite(name, args.n, args.seed, args.jobs)
            results.append(r)
            if not args.json:
                print(r, flush=True)
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    elif len(results) > 1:
        total = sum(r.run for r in results)
        good = sum(r.passed for r in results)
        print(f"total: {good}/{total} cases passed in {len(results)} suites")
    return EXIT_OK if all(r.ok for r in results) else EXIT_MATH


def cmd_cache(args) -> int:
    pr.dump_schubert_cache(args.path, args.n)
    print(f"wrote Schubert polynomials of S_{args.n} to {args.path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kpschubert", description="Schubert polynomials, KP modules and their identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, latex=True):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="machine-readable output")
        if latex:
            g.add_argument("--latex", action="store_true", help="LaTeX output")

    sp = sub.add_parser("schubert", help="print the Schubert polynomial of a permutation")
    sp.add_argument("perm", nargs="+")
    fmt(sp)
    sp.set_defaults(func=cmd_schubert)

    sp = sub.add_parser("expand", help="expand a JSON polynomial in the Schubert basis")
    sp.add_argument("poly", help="path to a JSON polynomial, or - for stdin")
    fmt(sp, latex=False)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("monk", help="permutations in S_w * (x1 + ... + xk)")
    sp.add_argument("args", nargs="+", metavar="perm... k")
    fmt(sp, latex=False)
    sp.set_defaults(func=cmd_monk)

    sp = sub.add_parser("transition", help="the maximal transition of w (or all with --all)")
    sp.add_argument("perm", nargs="+")
    sp.add_argument("--all", action="store_true")
    fmt(sp, latex=False)
    sp.set_defaults(func=cmd_transition)

    sp = sub.add_parser("kp-char", help="character of the KP module of w")
    sp.add_argument("perm", nargs="+")
    sp.add_argument("--ranks", action="store_true", help="dump the rank of every weight block")
    sp.add_argument("--jobs", type=int, default=1)
    fmt(sp)
    sp.set_defaults(func=cmd_kp_char)

    sp = sub.add_parser("kp-prime-char", help="character of the primed KP module of w in rank n")
    sp.add_argument("args", nargs="+", metavar="perm... n")
    sp.add_argument("--jobs", type=int, default=1)
    fmt(sp)
    sp.set_defaults(func=cmd_kp_prime_char)

    sp = sub.add_parser("positivity", help="Schubert expansion of a Schur function of monomials or linear forms")
    sp.add_argument("mode", choices=["monomial", "linear"])
    sp.add_argument("sigma", help="partition, comma separated (e.g. 2,1)")
    sp.add_argument("perm", nargs="+")
    fmt(sp, latex=False)
    sp.set_defaults(func=cmd_positivity)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=list(vf.SUITES) + ["all"])
    sp.add_argument("--n", type=int, default=None, help="size bound (suite default if omitted)")
    sp.add_argument("--seed", type=int, default=vf.DEFAULT_SEED)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cache", help="write a JSON table of Schubert polynomials for S_n")
    sp.add_argument("path")
    sp.add_argument("--n", type=int, default=6)
    sp.set_defaults(func=cmd_cache)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 1:
        parser.error("--n must be positive")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"kpschubert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
