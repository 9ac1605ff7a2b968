"""Command-line front end.

Exit codes: 0 success / property verified, 1 verification failure (not a
matroid, not isomorphic, unrepresentable, gallery mismatch), 2 usage or
input errors.  Matrix arguments are file paths; the prefix ``data:``
resolves a packaged example (e.g. ``data:non_matroid``).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumgeo, gallery, oracle
from .codes import Code, contract_code, dual_code, is_contractible, puncture, shorten
from .errors import ChainmatError, MatrixParseError, NotContractibleError
from .indepsys import build_from_matrix, check_matroid, is_isomorphic, system_to_json
from .linalg import Mat, format_matrix, parse_matrix_file, smith_normal_form, systematic_form
from .rings import make_ring

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2


def _load_matrix(path: str) -> Mat:
    if path.startswith("data:"):
        name = path[len("data:"):]
        if not name.endswith(".mat"):
            name += ".mat"
        return gallery.load_matrix(name)
    return parse_matrix_file(path)


def _subset(arg: str) -> list:
    return [s for s in arg.split(",") if s] if arg else []


def _print_system(m, as_json: bool):
    report = check_matroid(m)
    if as_json:
        print(system_to_json(m, report))
    else:
        print("ground:", " ".join(m.labels))
        print("independent sets:", [sorted(s) for s in m.independent_sets()])
        print("rank:", report.rank)
        print("matroid:", report.is_matroid)
        if not report.is_matroid:
            i1, i2 = report.violations[0]
            print(f"augmentation violation: I1={sorted(i1)} I2={sorted(i2)}")
    return report


def _build_system(args):
    mat = _load_matrix(args.matrix)
    method = "enum" if args.oracle else "auto"
    return mat, build_from_matrix(mat, method=method)


def cmd_indep(args):
    mat, system = _build_system(args)
    if args.subset is not None:
        labels = _subset(args.subset)
        verdict = system.is_independent(labels)
        print(f"{sorted(labels)} independent: {verdict}")
        return EXIT_OK
    _print_system(system, args.json)
    return EXIT_OK


def cmd_circuits(args):
    mat = _load_matrix(args.matrix)
    if args.oracle:
        clutter = oracle.circuits_by_subset_scan(mat)
    else:
        clutter = build_from_matrix(mat).circuits()
    body = sorted(sorted(c) for c in clutter.members)
    if args.json:
        print(json.dumps({"ground": list(clutter.labels), "circuits": body}))
    else:
        print("circuits:", body)
    return EXIT_OK


def cmd_rank(args):
    mat, system = _build_system(args)
    labels = _subset(args.subset) if args.subset is not None else list(system.labels)
    print(system.rank(labels))
    return EXIT_OK


def cmd_check_matroid(args):
    mat, system = _build_system(args)
    report = _print_system(system, args.json)
    return EXIT_OK if report.is_matroid else EXIT_VERIFY_FAIL


def cmd_dual_code(args):
    mat = _load_matrix(args.matrix)
    code = Code.from_matrix(mat)
    dual = oracle.dual_by_enumeration(code) if args.oracle else dual_code(code)
    print(format_matrix(dual.generator), end="")
    return EXIT_OK


def cmd_dual_system(args):
    mat, system = _build_system(args)
    _print_system(system.dual(), args.json)
    return EXIT_OK


def cmd_puncture(args):
    mat = _load_matrix(args.matrix)
    code = puncture(Code.from_matrix(mat), _subset(args.subset))
    print(format_matrix(code.generator), end="")
    return EXIT_OK


def cmd_shorten(args):
    mat = _load_matrix(args.matrix)
    code = shorten(Code.from_matrix(mat), _subset(args.subset))
    print(format_matrix(code.generator), end="")
    return EXIT_OK


def cmd_contractible(args):
    mat = _load_matrix(args.matrix)
    code = Code.from_matrix(mat)
    witness = is_contractible(code, args.element)
    if witness is None:
        print("no")
        return EXIT_VERIFY_FAIL
    print(f"yes: codeword {witness.codeword} (valuation {witness.valuation})")
    return EXIT_OK


def cmd_contract(args):
    mat = _load_matrix(args.matrix)
    code = Code.from_matrix(mat)
    try:
        out, ordering = contract_code(code, _subset(args.subset))
    except NotContractibleError as exc:
        print(f"not contractible: {exc}")
        return EXIT_VERIFY_FAIL
    print(f"# contraction order: {' '.join(ordering) if ordering else '(empty)'}")
    print(format_matrix(out.generator), end="")
    return EXIT_OK


def cmd_minor(args):
    mat, system = _build_system(args)
    clutter = system.circuits()
    if args.delete:
        clutter = clutter.delete(_subset(args.delete))
    if args.contract:
        clutter = clutter.contract(_subset(args.contract))
    minor_system = clutter.to_system()
    if args.json:
        print(system_to_json(minor_system))
    else:
        print("ground:", " ".join(clutter.labels))
        print("circuits:", sorted(sorted(c) for c in clutter.members))
    return EXIT_OK


def cmd_snf(args):
    mat = _load_matrix(args.matrix)
    res = smith_normal_form(mat)
    ring = mat.ring

    def fmt(rows):
        return [" ".join(ring.element_name(a) for a in row) for row in rows]

    print("exponents:", list(res.exponents))
    print("D:")
    print("\n".join(fmt(res.diagonal)))
    print("P:")
    print("\n".join(fmt(res.left)))
    print("Q:")
    print("\n".join(fmt(res.right)))
    return EXIT_OK


def cmd_systematic(args):
    mat = _load_matrix(args.matrix)
    sf = systematic_form(mat)
    if sf is None:
        print("not free")
        return EXIT_VERIFY_FAIL
    print("# column order:", " ".join(sf.perm))
    print(format_matrix(sf.mat), end="")
    return EXIT_OK


def cmd_uniform(args):
    ring = make_ring(args.ring)
    mat = enumgeo.uniform_rank2_representation(ring, args.n)
    if mat is None:
        bound = ring.size + len(ring.maximal_ideal)
        print(f"unrepresentable: n > {bound}")
        return EXIT_VERIFY_FAIL
    system = build_from_matrix(mat)
    from .indepsys import uniform_system

    assert is_isomorphic(system, uniform_system(2, args.n)) is not None
    print(format_matrix(mat), end="")
    return EXIT_OK


def cmd_bound(args):
    ring = make_ring(args.ring)
    print("simple-size bound:", enumgeo.simple_size_bound(ring, args.k))
    if args.antichain:
        print("cyclic antichain width:", enumgeo.cyc_antichain_bound(ring, args.k))
    return EXIT_OK


def cmd_counting(args):
    ring = make_ring(args.ring)
    shape = enumgeo.ModuleShape(tuple(int(x) for x in args.shape.split(",")))
    print(enumgeo.count_cyclic_submodules(shape, ring, args.s))
    return EXIT_OK


def cmd_verify_gallery(args):
    names = gallery.entry_names() if args.all or not args.name else [args.name]
    failed = False
    for name in names:
        try:
            rep = gallery.verify_entry(name)
            print(rep.line())
        except ChainmatError as exc:
            failed = True
            print(f"{name}: FAIL ({exc})")
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


def cmd_iso(args):
    m1 = build_from_matrix(_load_matrix(args.matrix_a))
    m2 = build_from_matrix(_load_matrix(args.matrix_b))
    bij = is_isomorphic(m1, m2)
    if bij is None:
        print("not isomorphic")
        return EXIT_VERIFY_FAIL
    if args.json:
        print(json.dumps(bij))
    else:
        print("isomorphic:", " ".join(f"{a}->{b}" for a, b in sorted(bij.items())))
    return EXIT_OK


def _add_matrix_arg(p):
    p.add_argument("matrix", help="matrix file path (or data:<name> for packaged examples)")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="chainmat", description=__doc__)
    top.add_argument("--json", action="store_true", help="emit JSON where supported")
    top.add_argument("--oracle", action="store_true", help="force brute-force oracle code paths")
    top.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indep", help="independent family, or test one subset")
    _add_matrix_arg(p)
    p.add_argument("-X", "--subset", help="comma-separated labels")
    p.set_defaults(fn=cmd_indep)

    p = sub.add_parser("circuits", help="minimal dependent sets")
    _add_matrix_arg(p)
    p.set_defaults(fn=cmd_circuits)

    p = sub.add_parser("rank", help="rank of a subset (default: whole ground set)")
    _add_matrix_arg(p)
    p.add_argument("-X", "--subset")
    p.set_defaults(fn=cmd_rank)

    p = sub.add_parser("check-matroid", help="exchange-axiom certification (exit 1 on failure)")
    _add_matrix_arg(p)
    p.set_defaults(fn=cmd_check_matroid)

    p = sub.add_parser("dual-code", help="generator matrix of the dual code")
    _add_matrix_arg(p)
    p.set_defaults(fn=cmd_dual_code)

    p = sub.add_parser("dual-system", help="dual independence system")
    _add_matrix_arg(p)
    p.set_defaults(fn=cmd_dual_system)

    p = sub.add_parser("puncture", help="delete coordinates from the code")
    _add_matrix_arg(p)
    p.add_argument("-X", "--subset", required=True)
    p.set_defaults(fn=cmd_puncture)

    p = sub.add_parser("shorten", help="restrict to codewords vanishing on X")
    _add_matrix_arg(p)
    p.add_argument("-X", "--subset", required=True)
    p.set_defaults(fn=cmd_shorten)

    p = sub.add_parser("contractible", help="contractibility witness at a coordinate")
    _add_matrix_arg(p)
    p.add_argument("-e", "--element", required=True)
    p.set_defaults(fn=cmd_contractible)

    p = sub.add_parser("contract", help="shorten with a contractibility certificate")
    _add_matrix_arg(p)
    p.add_argument("-X", "--subset", required=True)
    p.set_defaults(fn=cmd_contract)

    p = sub.add_parser("minor", help="clutter deletion/contraction of the circuits")
    _add_matrix_arg(p)
    p.add_argument("--delete", default="")
    p.add_argument("--contract", default="")
    p.set_defaults(fn=cmd_minor)

    p = sub.add_parser("snf", help="Smith normal form over a chain ring")
    _add_matrix_arg(p)
    p.set_defaults(fn=cmd_snf)

    p = sub.add_parser("systematic", help="[I_k | A] form, or report not free")
    _add_matrix_arg(p)
    p.set_defaults(fn=cmd_systematic)

    p = sub.add_parser("uniform", help="rank-2 uniform representation over a ring")
    p.add_argument("--ring", required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(fn=cmd_uniform)

    p = sub.add_parser("bound", help="simple-matroid size bound for free rank-k codes")
    p.add_argument("--ring", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--antichain", action="store_true", help="also compute the poset width")
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("counting", help="cyclic submodule count for a module shape")
    p.add_argument("--ring", required=True)
    p.add_argument("--shape", required=True, help="comma-separated multiplicities k0,k1,...")
    p.add_argument("-s", type=int, required=True)
    p.set_defaults(fn=cmd_counting)

    p = sub.add_parser("verify-gallery", help="verify catalog entries")
    p.add_argument("name", nargs="?", help="entry name; omit with --all for everything")
    p.add_argument("--all", action="store_true")
    p.set_defaults(fn=cmd_verify_gallery)

    p = sub.add_parser("iso", help="matroid isomorphism between two matrices")
    p.add_argument("matrix_a")
    p.add_argument("matrix_b")
    p.set_defaults(fn=cmd_iso)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except MatrixParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ChainmatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
