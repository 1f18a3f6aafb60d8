# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

The pycuboid command.

    pycuboid verify FILE [--dims a,b,c --freedom N] [--strict]
    pycuboid chroma FILE [--time-limit SECS] [--assert-chi K]
    pycuboid critical FILE --chi K [--out PATH]
    pycuboid clique FILE
    pycuboid search --dims a,b,c --freedom N --target K --n0 N [...]
    pycuboid nbound --dims a,b,c --freedom N
    pycuboid nbound --table --freedom N --c C --a-max A
    pycuboid periodic list | verify --name NAME [--a A] | perco --dims ... --period X,Y,Z
    pycuboid export FILE --format json|maple|obj [--explode z:4] [--out PATH]

FILE is a JSON document, a list-format file (with --dims and --freedom),
or the name of a shipped listing such as 221.

Exit status: 0 when every check passed, 1 when a check failed or a solver
ran out of time, 2 for usage and input errors.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import argparse
import logging
import math
import os
import sys

# First party modules
from PyCuboid import __version__
from PyCuboid.Errors import CuboidError, FormatError, GeometryError, SearchError, SolverTimeout
from PyCuboid.PyBound.NeighborBound import chi_upper_bound, n_bound, n_table
from PyCuboid.PyChroma.Coloring import chromatic_number, verify_coloring
from PyCuboid.PyFormat.Appendix import (
    ConfigDocument,
    dump_json,
    list_fixtures,
    load_fixture,
    read_document,
)
from PyCuboid.PyFormat.Export import FORMATS, export, parse_explode, to_mtl
from PyCuboid.PyGeometry.Cuboid import DimTriple, Freedom
from PyCuboid.PyGraph.ContactGraph import build_contact_graph, max_clique, validate_configuration
from PyCuboid.PyPeriodic.Fixtures import FIXTURES, STRIPE_FAMILIES, fixture_coloring
from PyCuboid.PyPeriodic.Formulas import FORMULAS, formula_coloring
from PyCuboid.PyPeriodic.PeriodicColoring import verify_periodic
from PyCuboid.PyPeriodic.Perco import perco
from PyCuboid.PySearch.ConfigSearch import SearchParams, run_trials
from PyCuboid.PySearch.Criticality import criticality_reduce

log = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s: %(name)s: %(message)s"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(CuboidError):
    pass


def _dims(text):
    try:
        return DimTriple.parse(text)
    except GeometryError as e:
        raise argparse.ArgumentTypeError(str(e))


def _freedom(text):
    try:
        return Freedom.parse(text)
    except GeometryError as e:
        raise argparse.ArgumentTypeError(str(e))


def _triple(text):
    try:
        values = [int(v) for v in text.replace("x", ",").split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("expected X,Y,Z, got %r" % text)
    if len(values) != 3 or min(values) < 1:
        raise argparse.ArgumentTypeError("expected three positive integers, got %r" % text)
    return tuple(values)


def read_input(path, dims=None, freedom=None):
    if os.path.exists(path):
        return read_document(path, dims, freedom)
    if path in list_fixtures():
        return load_fixture(path)
    raise UsageError("no such file or listing: %s" % path)


def _emit(text, out=None):
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


# ==============================================================================
# subcommands
# ==============================================================================
def cmd_verify(args):
    doc = read_input(args.file, args.dims, args.freedom)
    cfg = doc.configuration()
    report = validate_configuration(cfg)
    if not report:
        for message in report.messages:
            print(message, file=sys.stderr)
        print("invalid: %s %s" % (report.kind, ",".join(str(i) for i in report.indices)))
        return EXIT_FAIL
    colors = doc.colors
    if colors is not None:
        check = verify_coloring(build_contact_graph(cfg, check=False), colors)
        if not check:
            print("improper coloring: cuboids %d and %d share color %d" % (check.edge + (colors[check.edge[0]],)))
            return EXIT_FAIL
        if doc.chi is not None and max(colors) > doc.chi:
            message = "stored colors reach %d, above the declared %d" % (max(colors), doc.chi)
            if args.strict:
                print("invalid: " + message)
                return EXIT_FAIL
            log.warning(message)
    print("ok: %d cuboids%s" % (len(cfg), ", coloring proper" if colors is not None else ""))
    return EXIT_OK


def cmd_chroma(args):
    doc = read_input(args.file, args.dims, args.freedom)
    g = build_contact_graph(doc.configuration())
    try:
        result = chromatic_number(g, budget=args.time_limit, engine=args.engine, solver=args.solver)
    except SolverTimeout as e:
        print("timeout: %s" % e)
        return EXIT_FAIL
    print("chi %d" % result.chi)
    print("clique %d" % len(result.clique))
    print("witness %s" % ",".join(str(c) for c in result.witness))
    if args.assert_chi is not None and result.chi != args.assert_chi:
        print("assertion failed: chi is %d, not %d" % (result.chi, args.assert_chi))
        return EXIT_FAIL
    return EXIT_OK


def cmd_critical(args):
    doc = read_input(args.file, args.dims, args.freedom)
    try:
        cfg = criticality_reduce(doc.configuration(), args.chi, budget=args.time_limit)
        result = chromatic_number(build_contact_graph(cfg), budget=args.time_limit)
    except SolverTimeout as e:
        print("timeout: %s" % e)
        return EXIT_FAIL
    out = ConfigDocument.from_configuration(cfg, colors=result.witness, chi=result.chi, name=doc.name)
    _emit(dump_json(out), args.out)
    log.info("%d of %d cuboids kept", len(cfg), len(doc))
    return EXIT_OK


def cmd_clique(args):
    doc = read_input(args.file, args.dims, args.freedom)
    clique = max_clique(build_contact_graph(doc.configuration()))
    print("clique %d" % len(clique))
    print("vertices %s" % ",".join(str(v) for v in clique))
    return EXIT_OK


def cmd_search(args):
    try:
        params = SearchParams(
            args.dims,
            args.freedom,
            chi0=args.target,
            n0=args.n0,
            box=args.box,
            n00=args.n00,
            seed=args.seed,
            algorithm=args.algorithm,
            trials=args.trials,
            budget=args.time_limit,
        )
    except SearchError as e:
        raise UsageError(str(e))
    try:
        outcomes = run_trials(params, out_dir=args.out)
    except SolverTimeout as e:
        print("timeout: %s" % e)
        return EXIT_FAIL
    for seed, outcome in outcomes.items():
        print("seed %d found %s chi %d cuboids %d" % (seed, "yes" if outcome.found else "no", outcome.chi, len(outcome.configuration)))
    return EXIT_OK


def cmd_nbound(args):
    if args.table:
        if args.c is None or args.a_max is None:
            raise UsageError("--table needs --c and --a-max")
        print("a\tb\tn")
        for a, b, n in n_table(args.freedom, args.c, args.a_max, method=args.method):
            print("%d\t%d\t%d" % (a, b, n))
        return EXIT_OK
    if args.dims is None:
        raise UsageError("nbound needs --dims or --table")
    result = n_bound(args.dims, args.freedom, method=args.method)
    for center, value in result.per_orientation.items():
        print("center %s\t%d" % (",".join(str(v) for v in center), value))
    print("n %d" % result.n_value)
    print("chi_upper %d" % chi_upper_bound(result))
    return EXIT_OK


def _named_coloring(name, dims, a):
    if name in FORMULAS:
        if dims is None:
            raise UsageError("formula coloring %s needs --dims" % name)
        return formula_coloring(name, dims)
    if name in STRIPE_FAMILIES and a is None:
        raise UsageError("coloring %s needs --a" % name)
    return fixture_coloring(name, a)


def cmd_periodic(args):
    if args.action == "list":
        for name in sorted(FORMULAS):
            print("%s\tformula" % name)
        for name in FIXTURES:
            print("%s\t%s" % (name, "table(a)" if name in STRIPE_FAMILIES else "table"))
        return EXIT_OK
    if args.action == "verify":
        if args.name is None:
            raise UsageError("periodic verify needs --name")
        pc = _named_coloring(args.name, args.dims, args.a)
        check = verify_periodic(pc)
        if not check:
            print("improper: %s and %s share color %d" % (check.first, check.second, check.color))
            return EXIT_FAIL
        print("ok: %s colors %d period %s" % (pc.name, pc.k, ",".join(str(p) for p in pc.period)))
        return EXIT_OK
    if args.dims is None or args.period is None:
        raise UsageError("periodic perco needs --dims and --period")
    try:
        result = perco(args.dims, args.freedom, args.period, max_k=args.max_colors, budget=args.time_limit)
    except SolverTimeout as e:
        print("timeout: %s" % e)
        return EXIT_FAIL
    if result.value is None:
        print("perco > %d" % args.max_colors)
    elif result.value == math.inf:
        print("perco inf")
    else:
        print("perco %d" % result.value)
    return EXIT_OK


def cmd_export(args):
    doc = read_input(args.file, args.dims, args.freedom)
    spec = parse_explode(args.explode) if args.explode else None
    mtllib = None
    if args.format == "obj" and args.out:
        mtlpath = os.path.splitext(args.out)[0] + ".mtl"
        mtllib = os.path.basename(mtlpath)
        with open(mtlpath, "w") as f:
            f.write(to_mtl(doc))
    _emit(export(doc, args.format, explode_spec=spec, mtllib=mtllib), args.out)
    return EXIT_OK


# ==============================================================================
# parser
# ==============================================================================
def _add_input(p):
    p.add_argument("file", help="JSON document, list-format file or shipped listing name")
    p.add_argument("--dims", type=_dims, help="side lengths a,b,c (list-format input)")
    p.add_argument("--freedom", type=_freedom, help="freedom class 1, 2 or 3 (list-format input)")


def _add_budget(p):
    p.add_argument("--time-limit", type=float, default=None, help="seconds per decision, <= 0 for none")


def build_parser():
    parser = argparse.ArgumentParser(prog="pycuboid", description="Contact graphs of congruent cuboids.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--version", action="version", version="pycuboid %s" % __version__)
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("verify", help="validate a configuration and its stored coloring")
    _add_input(p)
    p.add_argument("--strict", action="store_true", help="fail when stored colors exceed the declared chi")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chroma", help="exact chromatic number")
    _add_input(p)
    _add_budget(p)
    p.add_argument("--assert-chi", type=int, default=None)
    p.add_argument("--engine", choices=("sat", "dsatur"), default="sat")
    p.add_argument("--solver", default=None, help="python-sat backend (default PYCUBOID_SOLVER or glucose3)")
    p.set_defaults(func=cmd_chroma)

    p = sub.add_parser("critical", help="reduce to a critical subconfiguration")
    _add_input(p)
    _add_budget(p)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("clique", help="maximum clique of the contact graph")
    _add_input(p)
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("search", help="pseudorandom configuration search")
    p.add_argument("--dims", type=_dims, required=True)
    p.add_argument("--freedom", type=_freedom, required=True)
    p.add_argument("--box", type=int, default=None)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--n00", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algorithm", type=int, choices=(1, 2), default=2)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--out", default=None, help="directory for traces and found configurations")
    _add_budget(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("nbound", help="free-corner neighbour bound")
    p.add_argument("--dims", type=_dims, default=None)
    p.add_argument("--freedom", type=_freedom, required=True)
    p.add_argument("--table", action="store_true")
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--a-max", type=int, default=None)
    p.add_argument("--method", choices=("milp", "bnb"), default="milp")
    p.set_defaults(func=cmd_nbound)

    p = sub.add_parser("periodic", help="periodic colorings")
    p.add_argument("action", choices=("list", "verify", "perco"))
    p.add_argument("--name", default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--dims", type=_dims, default=None)
    p.add_argument("--freedom", type=_freedom, default=Freedom.F1)
    p.add_argument("--period", type=_triple, default=None)
    p.add_argument("--max-colors", type=int, default=None)
    _add_budget(p)
    p.set_defaults(func=cmd_periodic)

    p = sub.add_parser("export", help="write json, list format or obj")
    _add_input(p)
    p.add_argument("--format", choices=FORMATS, required=True)
    p.add_argument("--explode", default=None, help="axis:gap, e.g. z:4")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root = logging.getLogger("PyCuboid")
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, FormatError) as e:
        print("pycuboid: error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except CuboidError as e:
        print("pycuboid: %s" % e, file=sys.stderr)
        return EXIT_FAIL
    except (IOError, OSError) as e:
        print("pycuboid: error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    finally:
        root.removeHandler(handler)


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
