"""Command-line front end.

Every subcommand builds a run report (inputs, outputs, named checks) and
prints it either as a plain-text table or, with --json, as a single JSON
document.  Exit status: 0 all checks pass, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import ffcount, lattice, motivic, mukai, schubert
from .fields import field as finite_field, field_of_order

DEFAULT_SEED = 7


@dataclass
class RunReport:
    command: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    seed: "int | None" = None

    def check(self, name: str, lhs: Any, rhs: Any, passed: "bool | None" = None):
        ok = (lhs == rhs) if passed is None else bool(passed)
        self.checks.append({"name": name, "pass": ok, "lhs": lhs, "rhs": rhs})
        return ok

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "outputs": self.outputs,
                "checks": self.checks, "seed": self.seed, "ok": self.ok}


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=_jsonable)


def _jsonable(o):
    if hasattr(o, "to_json"):
        return o.to_json()
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"not JSON serializable: {o!r}")


def render_text(report: RunReport) -> str:
    lines = [f"== {report.command} =="]
    if report.seed is not None:
        lines.append(f"seed: {report.seed}")
    for k, v in report.inputs.items():
        lines.append(f"  in  {k:<28} {_short(v)}")
    for k, v in report.outputs.items():
        lines.append(f"  out {k:<28} {_short(v)}")
    if report.checks:
        lines.append("checks:")
        for c in report.checks:
            tag = "PASS" if c["pass"] else "FAIL"
            line = f"  [{tag}] {c['name']}"
            if not c["pass"]:
                line += f"  lhs={_short(c['lhs'])} rhs={_short(c['rhs'])}"
            lines.append(line)
    return "\n".join(lines)


def _short(v) -> str:
    if isinstance(v, motivic.MotivicExpression):
        return str(v)
    s = json.dumps(v, default=_jsonable, sort_keys=True)
    return s if len(s) <= 120 else s[:117] + "..."


# --- parsing helpers ----------------------------------------------------

class UsageError(Exception):
    pass


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _class_spec(spec: str) -> motivic.MotivicExpression:
    """pn:N, gr:K,N, section:1|3, X, Y, or an integer constant."""
    spec = spec.strip()
    if spec in ("X", "Y"):
        return motivic.X if spec == "X" else motivic.Y
    kind, _, arg = spec.partition(":")
    try:
        if kind == "pn":
            return motivic.class_projective_space(int(arg))
        if kind == "gr":
            k, n = _int_list(arg)
            return motivic.class_grassmannian(k, n)
        if kind == "section":
            return motivic.class_hyperplane_section(int(arg))
        return motivic.MotivicExpression.const(int(spec))
    except (ValueError, argparse.ArgumentTypeError) as exc:
        raise UsageError(f"bad class spec {spec!r}: {exc}")


def _field(args) -> "ffcount.FiniteField":
    try:
        if args.ext == 1:
            return field_of_order(args.q)
        return finite_field(args.q, args.ext)
    except ValueError as exc:
        raise UsageError(str(exc))


def _load_fixture(path: str, q: int) -> list[list[list[int]]]:
    with open(path) as fh:
        data = json.load(fh)
    if not (isinstance(data, list) and len(data) == 5
            and all(len(m) == 5 and all(len(r) == 5 for r in m) for m in data)):
        raise UsageError("fixture must be a JSON array of five 5x5 integer matrices")
    return [[[int(x) % q for x in row] for row in m] for m in data]


def _forms_json(A) -> list:
    return [f.to_json() if hasattr(f, "to_json") else f for f in A]


# --- subcommands --------------------------------------------------------

def cmd_motivic_class(args) -> RunReport:
    rep = RunReport("motivic class", {"variety": args.variety})
    if args.variety == "pn":
        if args.n is None:
            raise UsageError("--n is required")
        rep.inputs["n"] = args.n
        expr = motivic.class_projective_space(args.n)
    elif args.variety == "gr":
        if args.n is None or args.k is None:
            raise UsageError("--k and --n are required")
        rep.inputs.update(k=args.k, n=args.n)
        expr = motivic.class_grassmannian(args.k, args.n)
        rep.check("duality symmetry Gr(k,n) = Gr(n-k,n)",
                  motivic.class_grassmannian(args.n - args.k, args.n).to_json(),
                  expr.to_json())
    elif args.variety == "section":
        rep.inputs["kernel_dim"] = args.kernel_dim
        expr = motivic.class_hyperplane_section(args.kernel_dim)
    else:
        rep.inputs.update(s=args.s, s_dual=args.s_dual)
        expr = motivic.class_universal_hyperplane(_class_spec(args.s), _class_spec(args.s_dual))
    rep.outputs["class"] = expr.to_json()
    rep.outputs["pretty"] = str(expr)
    if args.at is not None:
        rep.inputs["at"] = args.at
        try:
            rep.outputs["value"] = expr.evaluate(args.at)
        except ValueError as exc:
            raise UsageError(str(exc))
    return rep


def cmd_motivic_verify(args) -> RunReport:
    rep = RunReport("motivic verify-duality", {})
    r = motivic.verify_quintic_duality()
    rep.outputs.update(r.to_json())
    rep.outputs["shared_scalar"] = r.shared_scalar.to_json()
    rep.outputs["shared_scalar_pretty"] = str(r.shared_scalar)
    rep.check("identity_holds", r.identity_holds, True)
    rep.check("difference = L^4 (Y - X)", r.difference.to_json(),
              (motivic.L ** 4 * (motivic.Y - motivic.X)).to_json())
    return rep


def cmd_schubert_degree(args) -> RunReport:
    rep = RunReport("schubert degree", {"partition": args.partition, "k": args.k, "n": args.n})
    try:
        lam = schubert.Partition(tuple(args.partition), args.k, args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    deg = schubert.degree(lam, args.k, args.n)
    rep.outputs["degree"] = deg
    rep.check("transpose duality", schubert.degree(lam.transpose(), args.n - args.k, args.n), deg)
    return rep


def _gram(t, d):
    try:
        return lattice.lambda_gram(t, d)
    except lattice.LatticeError as exc:
        raise UsageError(str(exc))


def cmd_lattice(args) -> RunReport:
    op = args.op
    rep = RunReport(f"lattice {op}", {"t": args.t, "d": args.d})
    g = _gram(args.t, args.d)
    if not lattice.classification_validated(args.t):
        rep.outputs["note"] = "t is not an odd prime: classification unvalidated against the reference"
    if op == "gram":
        rep.outputs.update(gram=g.to_json(), det=g.det, signature=list(lattice.signature(g)))
    elif op == "disc":
        dq = lattice.discriminant_form(g)
        rep.outputs["discriminant_form"] = dq.to_json()
        rep.check("|A| = t^2", dq.order, args.t ** 2)
    elif op == "isotropic":
        rep.outputs["isotropic_lines"] = [list(v) for v in lattice.isotropic_lines(g)]
        rep.outputs["residues"] = list(lattice.canonical_residues(g))
    elif op == "autgroup":
        group = lattice.isometry_group(g)
        rep.outputs.update(isometries=group, order=len(group))
        rep.check("every element preserves the form",
                  all(lattice.intmat.congruent(g.entries, m) == g.matrix() for m in group), True)
    elif op in ("isom", "genus"):
        if args.d2 is None:
            raise UsageError("--d2 is required")
        rep.inputs["d2"] = args.d2
        g2 = _gram(args.t, args.d2)
        if op == "isom":
            iso = lattice.is_isomorphic(g, g2)
            rep.outputs.update(isomorphic=iso, residues1=list(lattice.canonical_residues(g)),
                               residues2=list(lattice.canonical_residues(g2)))
            if iso:
                rep.outputs["isometry"] = lattice.explicit_isomorphism(g, g2)
            brute = lattice.brute_force_isomorphic(g, g2, args.bound)
            rep.check(f"brute-force basis search (bound {args.bound})", brute, iso)
        else:
            rep.outputs["same_genus"] = lattice.same_genus(g, g2)
    return rep


def cmd_mukai(args) -> RunReport:
    if args.op == "jac":
        if None in (args.t, args.d, args.k):
            raise UsageError("--t, --d and --k are required")
        rep = RunReport("mukai jac", {"t": args.t, "d": args.d, "k": args.k})
        try:
            j = mukai.jacobian_ns(args.t, args.d, args.k)
        except lattice.LatticeError as exc:
            raise UsageError(str(exc))
        target = lattice.lambda_gram(args.t, args.d * args.k ** 2)
        rep.outputs.update(jacobian_ns=j.to_json(), expected=target.to_json())
        rep.check("v^perp/v is isomorphic to Lambda(t, d k^2)",
                  lattice.is_isomorphic(j, target), True)
        return rep
    if args.op == "g0":
        rep = RunReport("mukai g0", {})
        g0 = mukai.g0_isometry()
        lat = mukai.extended_gram(5, 0)
        rep.outputs.update(g0=g0, discriminant_action=mukai.discriminant_action(g0, lat))
        rep.check("g0 is an isometry", lat.is_isometry(g0), True)
        rep.check("g0(e1) = F + 2 e2", lattice.intmat.matvec(g0, mukai.E1), [0, 2, 0, 1])
        return rep
    if args.d is None:
        raise UsageError("--d is required")
    rep = RunReport("mukai verdict", {"d": args.d})
    v = mukai.jac2_isomorphism_verdict(args.d)
    rep.outputs.update(v)
    rep.check("verdict determined", v["verdict"] != "undetermined", True)
    return rep


def cmd_count(args) -> RunReport:
    F = _field(args)
    rep = RunReport(f"count {args.what}", {"field": F.to_json()}, seed=args.seed)
    Q = F.order
    if args.what == "grassmannian":
        rep.inputs.update(k=args.k, n=args.n)
        try:
            c = ffcount.count_grassmannian(args.k, args.n, F)
        except ffcount.EnumerationLimitError as exc:
            raise UsageError(str(exc))
        rep.outputs["count"] = c
        rep.check("class_grassmannian evaluated at L=|F|",
                  motivic.class_grassmannian(args.k, args.n).evaluate(Q), c)
    elif args.what == "section":
        rng = np.random.default_rng(args.seed)
        rep.inputs.update(rank=args.rank, samples=args.samples)
        expected = motivic.class_hyperplane_section(1 if args.rank == 4 else 3).evaluate(Q)
        counts = [ffcount.count_hyperplane_section(ffcount.random_form(args.rank, F, rng))
                  for _ in range(args.samples)]
        rep.outputs.update(counts=sorted(set(counts)), class_value=expected)
        rep.check("every sampled section matches the class", sorted(set(counts)), [expected])
    elif args.what == "universal":
        A = None
        if args.fixture:
            A = _load_fixture(args.fixture, F.q)
            rep.inputs["fixture"] = args.fixture
        elif args.space == "A":
            A, attempts = ffcount.smooth_form_space(F.q, args.seed)
            rep.outputs["attempts"] = attempts
        if A is not None:
            rep.outputs["A"] = _forms_json(A)
        try:
            r = ffcount.universal_hyperplane_report(F, A)
        except ffcount.EnumerationLimitError as exc:
            raise UsageError(str(exc))
        rep.outputs.update(r)
        rep.check("sections count = fibration count", r["sections_count"], r["fibration_count"])
        rep.check("enumeration = class over S", r["sections_count"], r["formula_over_S"])
        rep.check("enumeration = class over Gr(2,5)", r["sections_count"], r["formula_over_Gr"])
    elif args.what in ("torsor", "singular"):
        if F.m != 1:
            raise UsageError("torsor and singular checks take a prime field (--q prime, --ext 1)")
        if args.fixture:
            A = _load_fixture(args.fixture, F.q)
            rep.inputs["fixture"] = args.fixture
        else:
            A, attempts = ffcount.smooth_form_space(F.q, args.seed)
            if attempts > 1:
                rep.outputs["note"] = (f"regenerated fixture: {attempts - 1} draw(s) failed the "
                                       "smoothness screen")
        rep.outputs["A"] = _forms_json(A)
        if args.what == "singular":
            try:
                s = ffcount.detect_singular(A, F.q, args.max_ext)
            except ffcount.EnumerationLimitError as exc:
                raise UsageError(str(exc))
            rep.outputs["report"] = s.to_json()
        else:
            t = ffcount.torsor_count_test(A, F.q, seed=args.seed)
            rep.outputs.update(t.to_json())
            if t.reliable:
                rep.check("count_X = count_Y", t.count_X, t.count_Y)
                rep.check("dim(U meet Ker theta) = 1 on all pairs", t.pairing_ok, True)
            else:
                rep.outputs["unreliable"] = "A failed the degree-2 smoothness screen; no assertion"
    return rep


# --- parser -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lequiv", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = p.add_subparsers(dest="group", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    mot = sub.add_parser("motivic").add_subparsers(dest="cmd", required=True)
    c = mot.add_parser("class")
    common(c)
    c.add_argument("--variety", choices=["pn", "gr", "section", "universal"], required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--kernel-dim", type=int, choices=[1, 3], default=1)
    c.add_argument("--s", default="pn:4", help="class of S: pn:N, gr:K,N, section:1|3, X, Y or int")
    c.add_argument("--s-dual", default="Y", help="class of S meet Gr(2,V^dual), same syntax")
    c.add_argument("--at", type=int, help="evaluate at L = AT")
    c.set_defaults(func=cmd_motivic_class)
    v = mot.add_parser("verify-duality")
    common(v)
    v.set_defaults(func=cmd_motivic_verify)

    sch = sub.add_parser("schubert").add_subparsers(dest="cmd", required=True)
    d = sch.add_parser("degree")
    common(d)
    d.add_argument("--partition", type=_int_list, required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    d.set_defaults(func=cmd_schubert_degree)

    lat = sub.add_parser("lattice")
    common(lat)
    lat.add_argument("op", choices=["gram", "disc", "isom", "genus", "autgroup", "isotropic"])
    lat.add_argument("--t", type=int, required=True)
    lat.add_argument("--d", type=int, required=True)
    lat.add_argument("--d2", type=int)
    lat.add_argument("--bound", type=int, default=25, help="brute-force oracle box")
    lat.set_defaults(func=cmd_lattice)

    mk = sub.add_parser("mukai")
    common(mk)
    mk.add_argument("op", choices=["jac", "verdict", "g0"])
    mk.add_argument("--t", type=int)
    mk.add_argument("--d", type=int)
    mk.add_argument("--k", type=int)
    mk.set_defaults(func=cmd_mukai)

    cnt = sub.add_parser("count")
    common(cnt)
    cnt.add_argument("what", choices=["grassmannian", "section", "universal", "torsor", "singular"])
    cnt.add_argument("--q", type=int, required=True, help="prime, or prime power with --ext 1")
    cnt.add_argument("--ext", type=int, default=1)
    cnt.add_argument("--seed", type=int, default=DEFAULT_SEED)
    cnt.add_argument("--fixture", help="JSON array of five 5x5 integer matrices")
    cnt.add_argument("--k", type=int, default=2)
    cnt.add_argument("--n", type=int, default=5)
    cnt.add_argument("--rank", type=int, choices=[2, 4], default=4)
    cnt.add_argument("--samples", type=int, default=20)
    cnt.add_argument("--space", choices=["full", "A"], default="full",
                     help="universal: S = P^9 (full) or P(A) for a seeded smooth A")
    cnt.add_argument("--max-ext", type=int, default=2)
    cnt.set_defaults(func=cmd_count)
    return p


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"lequiv: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    if args.json:
        print(dumps(report.to_json()))
    else:
        print(render_text(report))
    return 0 if report.ok else 1


def dispatch(argv: Sequence[str]) -> int:
    return main(list(argv))


if __name__ == "__main__":
    sys.exit(main())
