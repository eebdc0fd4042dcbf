"""Command-line front end: build, verify and status."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import arcs, cayley, certfile, compose, search
from .errors import Classified, MissingIngredient, NecessaryFail, OpenCase, ParseError, Rejected
from .fixtures import FIXTURES, fixture
from .model import Certificate
from .status import NECESSARY_FAIL, SOLVABLE, hwp_status
from .verify import check_certificate

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_CLASSIFIED = 2
EXIT_INVALID = 3
EXIT_USAGE = 64
EXIT_PARSE = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def hw_certificate(v: int, m: int, n: int, alpha: int, beta: int) -> Certificate:
    """Build HW(v; m, n; alpha, beta) along the recipe the status oracle names."""
    st = hwp_status(v, m, n, alpha, beta)
    if m > n:
        m, n, alpha, beta = n, m, beta, alpha
    if st.classification == NECESSARY_FAIL:
        raise NecessaryFail(st.detail, st.citation)
    if st.classification != SOLVABLE:
        raise OpenCase(st.detail, st.citation)
    recipe = st.detail
    if recipe.startswith("fixture "):
        return fixture(recipe.split()[1])
    if recipe == "Theorem1.1":
        k = m if alpha else n
        u, g = (v, 1) if v % 2 else (v // 2, 2)
        return compose.as_hw(compose.resolvable(k, u, g))
    params = {
        "Lemma4.8": lambda: {"u": m, "beta": beta},
        "Lemma4.9": lambda: {"t": v // 39},
        "Lemma4.10": lambda: {"t": v // (9 * m), "u": m},
        "Theorem1.4": lambda: {"k": m, "t": (n - 1) // (2 * m), "beta": beta},
        "Theorem1.5": lambda: {"k": m // 4, "t": n // m, "u": v // n, "alpha": alpha},
    }
    if recipe in params:
        return compose.pipeline(recipe, **params[recipe]())
    raise MissingIngredient([f"HW({v};{m},{n};{alpha},{beta})"],
                            f"{st.citation}: existence is cited, no construction is implemented")


def _build(args) -> Certificate:
    what = args.what
    if what == "arcs":
        return arcs.build_arcs(args.k, args.t)
    if what == "hw":
        return hw_certificate(args.v, args.m, args.n, args.alpha, args.beta)
    if what == "fixture":
        return fixture(args.name)
    if what == "frame":
        return search.search_frame(args.k, args.g, args.u)
    if what == "cayley":
        if args.construction == "00":
            return cayley.construction_00(arcs.build_arcs(args.k, args.t))
        if args.construction == "2l":
            if args.l is None:
                raise Rejected("--l is required for construction 2l", "REJECT_PARAMS")
            return cayley.construction_2l(args.k, args.t, args.l)
        if args.u is None:
            raise Rejected("--u is required for construction 2ku", "REJECT_PARAMS")
        return cayley.construction_2ku(search.search_frame(args.k, 2, args.u), args.k)
    raise Rejected(f"unknown build target {what}", "REJECT_PARAMS")


def cmd_build(args) -> int:
    try:
        cert = _build(args)
    except Classified as exc:
        tag = f" ({exc.citation})" if exc.citation else ""
        print(f"{exc.classification}{tag}: {exc}")
        return EXIT_CLASSIFIED
    except Rejected as exc:
        print(f"error: {exc} [{exc.code}]", file=sys.stderr)
        return EXIT_USAGE
    text = certfile.serialize(cert)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}: {cert.profile}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = certfile.read(args.path)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = check_certificate(cert)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_status(args) -> int:
    print(hwp_status(args.v, args.m, args.n, args.alpha, args.beta).line())
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hwdesign", description="Hamilton-Waterloo designs: build, verify, classify.")
    p.add_argument("-v", "--verbose", action="store_true", help="log search progress")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build a certificate")
    b.add_argument("-o", "--output", help="output file (default stdout)")
    bs = b.add_subparsers(dest="what", required=True, parser_class=_Parser)
    a = bs.add_parser("arcs", help="k-ARCS(2kt+1)")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--t", type=int, required=True)
    h = bs.add_parser("hw", help="HW(v;m,n;alpha,beta)")
    for name in ("v", "m", "n", "alpha", "beta"):
        h.add_argument(f"--{name}", type=int, required=True)
    c = bs.add_parser("cayley", help="Cayley graph factorizations")
    c.add_argument("--construction", choices=["00", "2l", "2ku"], required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--t", type=int, default=1)
    c.add_argument("--l", type=int)
    c.add_argument("--u", type=int)
    f = bs.add_parser("fixture", help="stored designs")
    f.add_argument("--name", choices=sorted(FIXTURES), required=True)
    fr = bs.add_parser("frame", help="(k,1)-CF(g^u) cycle frame")
    for name in ("k", "g", "u"):
        fr.add_argument(f"--{name}", type=int, required=True)
    for sp in (a, h, c, f, fr):
        sp.add_argument("-o", "--output", default=argparse.SUPPRESS, help="output file (default stdout)")

    ver = sub.add_parser("verify", help="check a certificate file")
    ver.add_argument("path")

    st = sub.add_parser("status", help="classify an HW tuple")
    st.add_argument("--v", type=int, required=True)
    st.add_argument("--m", type=int, required=True)
    st.add_argument("--n", type=int, required=True)
    st.add_argument("--alpha", type=int, default=None)
    st.add_argument("--beta", type=int, default=None)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "status":
        _fill_counts(args)
    handlers = {"build": cmd_build, "verify": cmd_verify, "status": cmd_status}
    try:
        return handlers[args.command](args)
    except Exception as exc:  # noqa: BLE001 - last-resort report
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def _fill_counts(args) -> None:
    """Missing alpha/beta default to the complement of the other, or alpha = total, beta = 0."""
    total = (args.v - 1) // 2
    if args.alpha is None and args.beta is None:
        args.alpha, args.beta = total, 0
    elif args.alpha is None:
        args.alpha = total - args.beta
    elif args.beta is None:
        args.beta = total - args.alpha


if __name__ == "__main__":
    sys.exit(main())
