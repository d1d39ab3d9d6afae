"""Command-line front end: ``hh compute | compare | cech | bar | check``.

Exit codes: 0 when every requested verdict passes, 1 on a failed verdict or
invariant, 2 on unparsable input, 3 when a tensor basis exceeds ``HH_MAX_BASIS``.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .bar import enveloping_bar, periodic_tor_oracle
from .cdga import (AlgebraError, FreeGradedAlgebra, GradedAlgebra, as_table, augmentation_module,
                   builtin_algebra, module_from_json, regular_module)
from .factorization import (CombinatorialCover, CoverError, cech_compare, cech_complex,
                            single_open_cover, two_arc_cover)
from .hochschild import BasisTooLarge, ComplexError, HochschildComplex, shuffle_product
from .homology import homology, ring_on_homology
from .simplicial import FiniteSimplicialSet, SimplicialError, standard_model

NOTE = "degrees are cohomological; classical homological HH_n is degree -n"


class UsageError(ValueError):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def parse_space(text: str) -> FiniteSimplicialSet:
    if os.path.exists(text):
        return FiniteSimplicialSet.from_json(_load_json(text), name=os.path.basename(text))
    try:
        return standard_model(text)
    except SimplicialError as exc:
        raise UsageError(str(exc)) from None


def parse_algebra(text: str):
    if os.path.exists(text):
        data = _load_json(text)
        name = os.path.basename(text)
        if "free_generators" in data:
            return FreeGradedAlgebra.from_json(data, name=name)
        return GradedAlgebra.from_json(data, name=name)
    try:
        return builtin_algebra(text)
    except (AlgebraError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def parse_module(text: str | None, A: GradedAlgebra):
    if text is None:
        return None
    if text == "regular":
        return regular_module(A)
    if text in ("augmentation", "Q"):
        return augmentation_module(A)
    return module_from_json(A, _load_json(text), name=os.path.basename(text))


def _window(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("window must be an integer <= 0") from None
    if n > 0:
        raise argparse.ArgumentTypeError("window must be an integer <= 0")
    return n


def _degrees(dims: dict, lo: int | None = None) -> dict:
    return {str(n): int(dims[n]) for n in sorted(dims, reverse=True) if lo is None or n >= lo}


def _built(window: int) -> int:
    """Lowest degree to build so that every printed degree in ``[window, 0]`` is exact."""
    return window - 1


def emit(report: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        body = {k: v for k, v in report.items() if k not in ("title", "tables")}
        out.write(json.dumps(body, indent=2) + "\n")
        return
    if "title" in report:
        out.write(report["title"] + "\n")
    tables = report.get("tables") or {"dim": report["degrees"]}
    names = list(tables)
    degs = sorted({int(n) for t in tables.values() for n in t}, reverse=True)
    out.write("degree  " + "  ".join(f"{nm:>10}" for nm in names) + "\n")
    for n in degs:
        mark = " " if n >= report["trusted_min"] else "*"
        cells = "  ".join(f"{tables[nm].get(str(n), '-'):>10}" for nm in names)
        out.write(f"{n:>5}{mark}  {cells}\n")
    if any(n < report["trusted_min"] for n in degs):
        out.write("* untrusted: a truncation (bar or Čech cap) may change this degree\n")
    for key, val in report.get("verdicts", {}).items():
        out.write(f"{key}: {'PASS' if val is True else 'FAIL' if val is False else val}\n")
    for n, vecs in report.get("representatives", {}).items():
        for vec in vecs:
            out.write(f"representative in degree {n}: {vec}\n")
    labels = report.get("ring_labels", [])
    for i, lab in enumerate(labels):
        out.write(f"class {i}: {lab}\n")
    for key, val in report.get("ring", {}).items():
        out.write(f"product {key} = {'(outside window)' if val is None else val}\n")
    for item in report.get("failing", []):
        out.write(f"failing identity: {item}\n")
    out.write(f"note: {NOTE}\n")


def _json_report(degrees: dict, trusted_min: int, verdicts: dict, **extra) -> dict:
    rep = {"degrees": degrees, "trusted_min": trusted_min, "verdicts": verdicts}
    rep.update(extra)
    return rep


# -- commands -----------------------------------------------------------------------
def cmd_compute(args) -> tuple:
    X = parse_space(args.space)
    A = parse_algebra(args.algebra)
    lo = _built(args.window)
    At = as_table(A, lo)
    M = parse_module(args.module, At)
    C = HochschildComplex(X, At, M, lo, normalized=args.normalized)
    rep = homology(C, representatives=args.representatives or args.ring, jobs=args.jobs)
    verdicts = {}
    report = _json_report(_degrees(rep.dims, args.window), rep.trusted_min, verdicts)
    report["title"] = f"HH of {X.name} with coefficients in {At.name}"
    if args.representatives and rep.representatives:
        report["representatives"] = {
            str(n): [{str(k): str(v) for k, v in sorted(vec.items())} for _, vec in reps]
            for n, reps in sorted(rep.representatives.items(), reverse=True)}
    if args.ring:
        if M is not None:
            raise UsageError("--ring needs an unpointed complex (no --module)")
        labels, table = ring_on_homology(C, rep)
        report["ring"] = {f"{i}*{j}": (None if v is None else {str(k): str(c) for k, c in sorted(v.items())})
                          for (i, j), v in sorted(table.items())}
        report["ring_labels"] = [f"deg {n}, weight {w}" for n, w, _ in labels]
    return report, True


def cmd_compare(args) -> tuple:
    A = parse_algebra(args.algebra)
    B = parse_algebra(args.algebra_b) if args.algebra_b else A
    Xa, Xb = parse_space(args.a), parse_space(args.b)
    lo = _built(args.window)
    Ca = HochschildComplex(Xa, A, window=lo, normalized=args.normalized)
    Cb = HochschildComplex(Xb, B, window=lo, normalized=args.normalized)
    ra, rb = homology(Ca, jobs=args.jobs), homology(Cb, jobs=args.jobs)
    tm = max(ra.trusted_min, rb.trusted_min)
    verdicts = {f"degree {n}": ra.dims[n] == rb.dims[n] for n in sorted(ra.dims, reverse=True)
                if n >= tm}
    report = _json_report(_degrees(ra.dims, args.window), tm, verdicts,
                          degrees_b=_degrees(rb.dims, args.window))
    report["title"] = f"{Xa.name} vs {Xb.name}"
    report["tables"] = {Xa.name: report["degrees"], Xb.name: report["degrees_b"]}
    return report, all(verdicts.values())


def cmd_cech(args) -> tuple:
    X = parse_space(args.space)
    A = parse_algebra(args.algebra)
    if args.cover in (None, "single"):
        cover = single_open_cover(X)
    elif args.cover == "two_arc":
        cover = two_arc_cover(X)
    else:
        cover = CombinatorialCover.from_json(X, _load_json(args.cover))
    C = cech_complex(cover, A, _built(args.window), args.tuple_cap, normalized=args.normalized)
    if C.check_d_squared():
        raise InvariantViolation("Čech total differential does not square to zero")
    flags = cech_compare(C)
    dims = homology(C, jobs=args.jobs).dims
    target = homology(C.target(), jobs=args.jobs).dims
    verdicts = {f"degree {n}": ok for n, ok in sorted(flags.items(), reverse=True)}
    report = _json_report(_degrees(dims, args.window), C.trusted_min, verdicts,
                          degrees_target=_degrees(target, args.window))
    report["title"] = f"Čech complex of {X.name}, PU = {[list(f) for f in C.pu]}"
    report["tables"] = {"cech": report["degrees"], "CH_X": report["degrees_target"]}
    return report, all(flags.values())


def cmd_bar(args) -> tuple:
    lo = _built(args.window)
    A = as_table(parse_algebra(args.algebra), lo)
    B = enveloping_bar(A, lo, args.cap)
    if B.check_d_squared():
        raise InvariantViolation("bar differential does not square to zero")
    rep = homology(B, jobs=args.jobs)
    report = _json_report(_degrees(rep.dims, args.window), rep.trusted_min, {})
    report["title"] = f"Tor over {A.name}⊗{A.name} via the two-sided bar complex (cap {args.cap})"
    if A.name == "dual_numbers":
        oracle = periodic_tor_oracle(args.window)
        ok = all(rep.dims[n] == oracle[n] for n in rep.dims if n >= rep.trusted_min)
        report["verdicts"]["periodic resolution agrees"] = ok
        return report, ok
    return report, True


class InvariantViolation(RuntimeError):
    pass


def cmd_check(args) -> tuple:
    X = parse_space(args.space)
    A = parse_algebra(args.algebra)
    C = HochschildComplex(X, A, window=_built(args.window), normalized=args.normalized)
    verdicts = {}
    # simplicial identities on the face position maps
    ok = True
    for k in range(2, C.max_level + 1):
        for j in range(1, k + 1):
            for i in range(j):
                a = [X.face_map(k - 1, i)[x] for x in X.face_map(k, j)]
                b = [X.face_map(k - 1, j - 1)[x] for x in X.face_map(k, i)]
                if a != b:
                    ok = False
    verdicts["simplicial identities"] = ok
    bad = C.check_d_squared()
    verdicts["D∘D = 0"] = not bad
    rng = random.Random(args.seed)
    verdicts["shuffle laws (sampled)"] = _sampled_shuffle_laws(C, rng, args.samples)
    rep = homology(C, jobs=args.jobs)
    report = _json_report(_degrees(rep.dims, args.window), rep.trusted_min, verdicts)
    report["title"] = f"invariant suite for {X.name}, {C.A.name}"
    if bad:
        report["failing"] = [f"D^{n + 1}·D^{n} in weight {w}" for n, w in bad]
    return report, all(verdicts.values())


def _random_chain(C, rng, max_level):
    keys = []
    for k in range(0, max_level + 1):
        for d in range(0, C.n_min - 1, -1):
            if d - k < C.n_min:
                break
            for w, (monos, _) in C.block(k, d).items():
                keys.extend((k, m) for m in monos[:50])
    if not keys:
        return {}
    chain = {}
    for _ in range(2):
        key = rng.choice(keys)
        chain[key] = chain.get(key, 0) + rng.choice([-2, -1, 1, 3])
    return {k: v for k, v in chain.items() if v}


def _by_degree(C, chain):
    out: dict = {}
    for (k, m), c in chain.items():
        out.setdefault(C.mono_degree(m) - k, {})[(k, m)] = c
    return out


def _sub(a, b, s=-1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + s * v
        if not out[k]:
            del out[k]
    return out


def _sampled_shuffle_laws(C, rng, samples: int) -> bool:
    lvl = max(0, min(2, C.max_level // 3))
    for _ in range(samples):
        u, v, w = (_random_chain(C, rng, lvl) for _ in range(3))
        if _sub(shuffle_product(C, C.unit_chain(), u), u):
            return False
        if _sub(shuffle_product(C, shuffle_product(C, u, v), w),
                shuffle_product(C, u, shuffle_product(C, v, w))):
            return False
        for du, uu in _by_degree(C, u).items():
            for dv, vv in _by_degree(C, v).items():
                s = -1 if (du * dv) % 2 else 1
                if _sub(shuffle_product(C, uu, vv), shuffle_product(C, vv, uu), -s):
                    return False
                lhs = C.apply_D(shuffle_product(C, uu, vv))
                rhs = _sub(shuffle_product(C, C.apply_D(uu), vv),
                           shuffle_product(C, uu, C.apply_D(vv)), -1 if du % 2 else 1)
                if _sub(lhs, rhs):
                    return False
    return True


# -- entry point ---------------------------------------------------------------------
class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hh", description="Higher Hochschild homology over finite simplicial sets.",
                epilog=NOTE)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, space=True):
        if space:
            sp.add_argument("--space", required=True, help="builtin model name or JSON file")
        sp.add_argument("--algebra", required=True,
                        help="dual_numbers, exterior(d), poly(d), koszul, or a JSON file")
        sp.add_argument("--window", type=_window, required=True, help="lowest total degree (<= 0)")
        sp.add_argument("--normalized", action="store_true", help="use the normalized complex")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--jobs", type=int, default=1, help="threads for per-degree homology")

    c = sub.add_parser("compute", help="homology of CH_X(A) or CH_X(A, M)")
    common(c)
    c.add_argument("--module", help="regular, augmentation, or a JSON module file")
    c.add_argument("--ring", action="store_true", help="products of representatives")
    c.add_argument("--representatives", action="store_true")

    c = sub.add_parser("compare", help="compare HH dims of two spaces")
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--algebra-b", help="algebra for the second job (default: same)")
    common(c, space=False)

    c = sub.add_parser("cech", help="Čech complex of a cover against CH_X(A)")
    common(c)
    c.add_argument("--cover", help="single, two_arc, or a JSON cover file")
    c.add_argument("--tuple-cap", type=int, default=5)

    c = sub.add_parser("bar", help="Tor^{A⊗A}(A, A) through the two-sided bar complex")
    c.add_argument("--algebra", required=True)
    c.add_argument("--window", type=_window, required=True)
    c.add_argument("--cap", type=int, default=8)
    c.add_argument("--json", action="store_true")
    c.add_argument("--jobs", type=int, default=1)

    c = sub.add_parser("check", help="run the invariant suite")
    common(c)
    c.add_argument("--samples", type=int, default=20)
    c.add_argument("--seed", type=int, default=0)
    return p


COMMANDS = {"compute": cmd_compute, "compare": cmd_compare, "cech": cmd_cech,
            "bar": cmd_bar, "check": cmd_check}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, ok = COMMANDS[args.command](args)
    except (UsageError, SimplicialError, AlgebraError, CoverError, ComplexError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except BasisTooLarge as exc:
        sys.stderr.write(f"basis cap exceeded: {exc}\n")
        return 3
    except (InvariantViolation, ArithmeticError) as exc:
        sys.stderr.write(f"invariant violated: {exc}\n")
        return 1
    emit(report, args.json)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
