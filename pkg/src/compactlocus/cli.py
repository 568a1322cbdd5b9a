"""The ``locus`` command line tool.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 subgroup
selector did not resolve to a unique (normal) class, 4 a size cap was hit,
5 the subset Y is not a legal closed/Thomason subset.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import catalog, loci, render
from .errors import (
    AmbiguousSelector,
    CapExceeded,
    IllegalThomason,
    InvalidPermutation,
    NotASubgroup,
    NotClosed,
    NotNormal,
    ParseError,
)
from .groups import Permutation, class_of, parse_group_spec
from .spaces import (
    ChromaticSpace,
    ChromaticSubset,
    FinitePoset,
    PosetSubset,
    complement,
    finite_localization_locus,
    p_localization_subset,
    parse_point_list,
    sh_localization_locus,
)

log = logging.getLogger("compactlocus")

EXIT_VERIFY, EXIT_PARSE, EXIT_SELECTOR, EXIT_CAP, EXIT_NOT_CLOSED = 1, 2, 3, 4, 5


def load_group(spec):
    """A catalog name, or a path to a group-spec file."""
    if os.path.isfile(spec):
        with open(spec) as fh:
            return parse_group_spec(fh.read(), name=os.path.splitext(os.path.basename(spec))[0])
    return catalog.by_name(spec)


def resolve_class(G, selector, normal=False):
    """Resolve ``1``, ``G``, a class label, ``order:index`` or explicit cycle generators."""
    pool = [c for c in G.classes if c.is_normal or not normal]
    sel = selector.strip()
    if sel == "1":
        return G.classes[0]
    if sel == "G":
        return G.classes[-1]
    if sel.startswith("("):
        try:
            gens = [Permutation.parse(part, G.degree) for part in sel.split(";") if part.strip()]
            c = class_of(G, G.generate(gens))
        except (InvalidPermutation, NotASubgroup) as exc:
            raise ParseError(str(exc)) from exc
        if normal and not c.is_normal:
            raise NotNormal(f"{sel} does not generate a normal subgroup")
        return c
    if ":" in sel:
        order, _, idx = sel.partition(":")
        try:
            matches = [c for c in pool if c.order == int(order)]
            return matches[int(idx)]
        except (ValueError, IndexError):
            raise AmbiguousSelector(f"no class matches {sel!r}") from None
    matches = [c for c in pool if c.label == sel]
    if not matches and G.name == sel:
        matches = [G.classes[-1]]
    if not matches:
        matches = [c for c in pool if c.label.rstrip("abcdefghijklmnopqrstuvwxyz") == sel]
    if len(matches) != 1:
        what = "normal class" if normal else "class"
        found = ", ".join(c.label for c in matches) or "none"
        raise AmbiguousSelector(f"{sel!r} must match exactly one {what}; matched {found}")
    return matches[0]


def _primes(text):
    if not text:
        return None
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad prime list {text!r}") from None


def _write(args, payload):
    if isinstance(payload, str):
        payload = payload.encode("utf-8")
    if args.output and args.output != "-":
        with open(args.output, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()


def _summary(G, S):
    primes = ",".join(str(p) for p in S.primes) or "-"
    print(f"|G|={G.order} classes={len(S.classes)} primes={primes}", file=sys.stderr)


def _emit_locus(args, G, locus):
    _summary(G, locus.spectrum)
    if args.format == "json":
        _write(args, locus.dumps())
    else:
        _write(args, render.render_eq_locus(locus, args.format))


def cmd_inflation(args):
    G = load_group(args.group)
    N = resolve_class(G, args.normal, normal=True)
    _emit_locus(args, G, loci.inflation_locus(G, N, primes=_primes(args.primes)))


def cmd_geomfix(args):
    G = load_group(args.group)
    N = resolve_class(G, args.normal, normal=True)
    _emit_locus(args, G, loci.geometric_fixed_locus(G, N, primes=_primes(args.primes)))


def cmd_nfree(args):
    G = load_group(args.group)
    N = resolve_class(G, args.normal, normal=True)
    _emit_locus(args, G, loci.n_free_locus(G, N, primes=_primes(args.primes)))


def cmd_support(args):
    G = load_group(args.group)
    H = resolve_class(G, args.subgroup)
    _emit_locus(args, G, loci.orbit_support(G, H, primes=_primes(args.primes)))


def cmd_absfix(args):
    G = load_group(args.group)
    H = resolve_class(G, args.subgroup)
    sub = loci.absolute_geometric_fixed_locus(H, primes=_primes(args.primes))
    _summary(G, loci.spectrum(G, _primes(args.primes)))
    if args.format == "json":
        _write(args, json.dumps(sub.to_json(), indent=2) + "\n")
    else:
        title = f"absolute geometric fixed point locus, H={H.label} in G={G.name or 'G'}"
        _write(args, render.render_chromatic(sub, args.format, title=title))


def cmd_localize(args):
    if args.sh:
        primes = _primes(args.primes) or [2, 3, 5]
        if args.invert_at is not None:
            space = ChromaticSpace(tuple(set(primes) | {args.invert_at}))
            Y = p_localization_subset(space, args.invert_at)
        elif args.y_json:
            with open(args.y_json) as fh:
                try:
                    Y = ChromaticSubset.from_json(json.load(fh))
                except (ValueError, KeyError) as exc:
                    raise ParseError(f"bad chromatic subset: {exc}") from exc
            space = ChromaticSpace(tuple(primes))
        else:
            raise ParseError("--sh needs --invert-at or --y-json")
        Z = sh_localization_locus(space, Y)
        V = _chromatic_complement(Y)
        if args.format == "json":
            _write(args, json.dumps(Z.to_json(), indent=2) + "\n")
        else:
            _write(args, render.render_chromatic(Z, args.format, ambient=V, title="finite localization of SH"))
        return
    if not args.poset:
        raise ParseError("localize needs --poset FILE or --sh")
    with open(args.poset) as fh:
        X = FinitePoset.parse(fh.read())
    try:
        Y = PosetSubset(X, parse_point_list(args.y or ""), "closed")
    except ValueError as exc:
        if isinstance(exc, NotClosed):
            raise
        raise ParseError(str(exc)) from exc
    Z = finite_localization_locus(X, Y)
    if args.format == "json":
        _write(args, json.dumps(Z.to_json()) + "\n")
    else:
        _write(args, render.render_poset(X, [Z, complement(Y)], args.format, title="Z_f inside V"))


def _chromatic_complement(Y):
    """JSON picture of V = complement of Y; a column keeps the heights below Y's threshold."""

    def col(t):
        if t is None:
            return {"from": 2}
        if t == 2:
            return None
        return {"from": 2, "below": "inf" if t == float("inf") else t}

    return {
        "columns": {str(p): col(t) for p, t in Y.columns},
        "default": col(Y.default),
        "generic": not Y.generic,
    }


def cmd_render(args):
    with open(args.input) as fh:
        data = json.load(fh)
    amb = None
    if args.ambient:
        with open(args.ambient) as fh:
            amb = json.load(fh)
    fmt = args.format if args.format != "json" else "svg"
    if "classes" in data:
        _write(args, render.render_eq_locus(data, fmt, ambient=amb))
    elif "columns" in data:
        _write(args, render.render_chromatic(data, fmt, ambient=amb))
    else:
        raise ParseError("input is neither an equivariant nor a chromatic locus")


def cmd_verify(args):
    from .oracles import run_verification

    checks = run_verification(
        max_order=args.max_order, n_posets=args.posets, seed=args.seed, corrupt=args.corrupt
    )
    width = max(len(c.name) for c in checks)
    ok = True
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        ok &= c.passed
        print(f"{c.name.ljust(width)}  {c.cases:6d} cases  {status}")
        for detail in c.failures[:5]:
            print(f"    mismatch: {detail}")
    return 0 if ok else EXIT_VERIFY


def build_parser():
    parser = argparse.ArgumentParser(prog="locus", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("json", "svg", "dot", "ascii")):
        p.add_argument("--format", choices=fmt, default="json")
        p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
        p.add_argument("--primes", default=None, help="extra explicit primes, e.g. 2,3,7")

    for name, fn, helptext in [
        ("inflation", cmd_inflation, "locus of inflation from G/N"),
        ("geomfix", cmd_geomfix, "locus of relative geometric N-fixed points"),
        ("nfree", cmd_nfree, "support of the N-free G-spectra"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--group", required=True, help="catalog name or group-spec file")
        p.add_argument("--normal", required=True, help="1, G, label, order:index or cycle generators")
        common(p)
        p.set_defaults(func=fn)

    for name, fn, helptext in [
        ("support", cmd_support, "support of the orbit G/H_+"),
        ("absfix", cmd_absfix, "locus of absolute geometric H-fixed points"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--group", required=True)
        p.add_argument("--subgroup", required=True)
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("localize", help="locus of a finite localization")
    p.add_argument("--poset", help="poset file with 'point a' and 'spec a b' lines")
    p.add_argument("--y", default="", help="closed subset Y, comma separated")
    p.add_argument("--sh", action="store_true", help="work in Spc(SH^c) instead of a poset")
    p.add_argument("--invert-at", type=int, default=None, metavar="P", help="p-localization preset at P")
    p.add_argument("--y-json", default=None, help="chromatic subset Y as JSON")
    common(p)
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("render", help="draw a locus JSON file")
    p.add_argument("--input", required=True)
    p.add_argument("--ambient", default=None, help="outer locus JSON drawn in the darker shade")
    p.add_argument("--format", choices=("svg", "dot", "ascii"), default="svg")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run the oracle suite over the builtin catalog")
    p.add_argument("--max-order", type=int, default=60)
    p.add_argument("--posets", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(message)s")
    try:
        return args.func(args) or 0
    except (ParseError, InvalidPermutation, json.JSONDecodeError, OSError) as exc:
        print(f"locus: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (AmbiguousSelector, NotNormal) as exc:
        print(f"locus: {exc}", file=sys.stderr)
        return EXIT_SELECTOR
    except CapExceeded as exc:
        print(f"locus: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NotClosed, IllegalThomason) as exc:
        print(f"locus: {exc}", file=sys.stderr)
        return EXIT_NOT_CLOSED


if __name__ == "__main__":
    sys.exit(main())
