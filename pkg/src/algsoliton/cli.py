"""Command-line front end.

Exit codes: 0 success, 1 a failed check (verify-all) or an aborted flow,
2 bad input (unreadable file, unknown catalog id, bad flag, invalid data).
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from fractions import Fraction

from . import catalog
from .document import DocumentError, load_input
from .errors import AlgSolitonError, NearDegenerate
from .exact import Matrix, format_scalar, parse_scalar
from .exact.poly import format_poly
from .extension import ExtensionSpec, build_solvable_extension, einstein_analysis
from .geometry import (
    MetricLieAlgebra,
    curvature_tensor,
    einstein_constant,
    instantiate,
    signature,
)
from .liealg import center_dimension, classify_structure, derivation_basis
from .soliton import solve_algebraic_soliton

COMMANDS = (
    "validate", "connection", "curvature", "ricci", "derivations", "soliton",
    "extend", "einstein-solve", "flow", "catalog-list", "verify-all",
)


class InputError(Exception):
    pass


def _s(x) -> str:
    return format_scalar(x)


def _flat(m: Matrix) -> list[str]:
    return [_s(x) for x in m.flat()]


def _rows(m: Matrix) -> list[list[str]]:
    return [[_s(x) for x in row] for row in m]


def _vec_text(vec, names) -> str:
    parts = []
    for c, name in zip(vec, names):
        if not c:
            continue
        s = _s(c)
        if s == "1":
            parts.append(name)
        elif s == "-1":
            parts.append("-" + name)
        elif isinstance(c, Fraction):
            parts.append(f"{s}*{name}")
        else:
            parts.append(f"({s})*{name}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


# -- argument handling -------------------------------------------------------

def _rational(text: str) -> Fraction:
    x = parse_scalar(text)
    return x.constant_value()


def _bindings(pairs) -> dict:
    out = {}
    for pair in pairs or ():
        name, sep, value = pair.partition("=")
        if not sep or not name.strip():
            raise InputError(f"--param expects NAME=RATIONAL, got {pair!r}")
        try:
            out[name.strip()] = _rational(value)
        except (AlgSolitonError, ZeroDivisionError) as exc:
            raise InputError(f"--param {name}: {exc}") from None
    return out


def _load(args) -> tuple[MetricLieAlgebra, str]:
    bindings = _bindings(args.param)
    if args.input and args.catalog:
        raise InputError("give either --input or --catalog, not both")
    if args.input:
        try:
            return load_input(args.input, bindings), f"file:{args.input}"
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    if args.catalog:
        try:
            m = catalog.load(args.catalog)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        for name, value in bindings.items():
            if name != m.param:
                raise InputError(f"catalog entry {args.catalog} has no parameter {name!r}")
            m = instantiate(m, value)
        return m, f"catalog:{args.catalog}"
    raise InputError("this command needs --input FILE or --catalog ID")


def _derivation(args, m: MetricLieAlgebra) -> Matrix:
    choice = args.derivation or args.extend
    if choice is None:
        raise InputError("give --extend soliton or --derivation MATRIX")
    if choice == "soliton":
        sol = solve_algebraic_soliton(m)
        if sol is None:
            raise InputError("metric is not an algebraic soliton; nothing to extend by")
        return sol.d
    try:
        rows = json.loads(choice)
        return Matrix([[parse_scalar(str(x)) for x in row] for row in rows])
    except (json.JSONDecodeError, TypeError) as exc:
        raise InputError(f"--derivation must be 'soliton' or a JSON array of rows: {exc}") from None


def _extension(args, m: MetricLieAlgebra) -> ExtensionSpec:
    return build_solvable_extension(m, _derivation(args, m), args.ext_param)


# -- commands ----------------------------------------------------------------

def cmd_validate(args, m, out):
    p, q = signature(m)
    res = {
        "name": m.name,
        "dim": m.dim,
        "basis": list(m.algebra.basis_names),
        "parameter": m.param,
        "signature": [p, q],
        "lorentzian": q == 1,
        "structure": classify_structure(m.algebra).value,
        "center_dim": center_dimension(m.algebra),
        "derivation_dim": derivation_basis(m.algebra).dim,
    }
    out.text = [f"valid: {m.name or 'metric Lie algebra'} of dimension {m.dim}"] + [
        f"{k} = {v}" for k, v in res.items() if k not in ("name", "dim")]
    return res


def cmd_connection(args, m, out):
    names = m.algebra.basis_names
    gamma = m.connection.gamma
    entries = []
    for i in range(m.dim):
        for j in range(m.dim):
            if any(gamma[i][j]):
                entries.append({"i": i + 1, "j": j + 1, "nabla": [_s(x) for x in gamma[i][j]]})
    out.text = [f"nabla_{names[e['i'] - 1]} {names[e['j'] - 1]} = "
                + _vec_text(gamma[e["i"] - 1][e["j"] - 1], names) for e in entries] or ["connection vanishes"]
    return {"basis": list(names), "nonzero": entries}


def cmd_curvature(args, m, out):
    r = curvature_tensor(m)
    names = m.algebra.basis_names
    entries = []
    for i in range(m.dim):
        for j in range(i + 1, m.dim):
            for k in range(m.dim):
                vec = r.r[i][j][k]
                if any(vec):
                    entries.append({"i": i + 1, "j": j + 1, "k": k + 1, "value": [_s(x) for x in vec]})
    flat = not entries
    out.text = ["flat" if flat else "not flat"] + [
        f"R({names[e['i'] - 1]},{names[e['j'] - 1]}){names[e['k'] - 1]} = "
        + _vec_text(r.r[e["i"] - 1][e["j"] - 1][e["k"] - 1], names) for e in entries]
    return {"flat": flat, "nonzero": entries}


def cmd_ricci(args, m, out):
    data = m.ricci
    lam = einstein_constant(m) if m.is_parameter_free() else None
    res = {
        "dim": m.dim,
        "ric": _flat(data.ric),
        "rc": _flat(data.op),
        "scalar": _s(data.scalar),
        "einstein": None if lam is None else _s(lam),
    }
    out.text = (["Ric ="] + ["  " + "  ".join(r) for r in _rows(data.ric)]
                + ["rc ="] + ["  " + "  ".join(r) for r in _rows(data.op)]
                + [f"scalar = {res['scalar']}",
                   f"einstein = {res['einstein'] if lam is not None else 'no'}"])
    return res


def cmd_derivations(args, m, out):
    basis = derivation_basis(m.algebra)
    res = {"dim": basis.dim, "basis": [_flat(b) for b in basis]}
    out.text = [f"dim Der = {basis.dim}"] + [f"B{k + 1} = {_rows(b)}" for k, b in enumerate(basis)]
    return res


def cmd_soliton(args, m, out):
    sol = solve_algebraic_soliton(m)
    if sol is None:
        out.text = ["none"]
        return {"soliton": None}
    out.text = [f"c = {_s(sol.c)}", "D ="] + ["  " + "  ".join(r) for r in _rows(sol.d)] + [
        f"class = {sol.kind.value}", f"unique = {str(sol.unique).lower()}"]
    return {"c": _s(sol.c), "D": _flat(sol.d), "class": sol.kind.value, "unique": sol.unique}


def cmd_extend(args, m, out):
    ext = _extension(args, m)
    r = ext.result
    brackets = [{"i": i + 1, "j": j + 1, "out": {str(k + 1): _s(c) for k, c in terms}}
                for (i, j), terms in sorted(r.algebra.brackets.items()) if i < j]
    res = {
        "parameter": ext.param,
        "basis": list(r.algebra.basis_names),
        "derivation": _flat(ext.d),
        "brackets": brackets,
        "metric": _flat(r.metric),
        "ric": _flat(r.ricci.ric),
    }
    names = r.algebra.basis_names
    out.text = ([f"[{names[b['i'] - 1]},{names[b['j'] - 1]}] = "
                 + _vec_text([r.algebra.structure_constants[b['i'] - 1][b['j'] - 1][k] for k in range(r.dim)], names)
                 for b in brackets]
                + [f"<H,H> = {ext.param}"]
                + [f"Ric({n},{n}) = {_s(r.ricci.ric[i, i])}" for i, n in enumerate(names)])
    return res


def cmd_einstein_solve(args, m, out):
    if args.extend or args.derivation:
        ext = _extension(args, m)
    elif m.param is not None:
        # an already extended metric, e.g. a remark44 catalog entry
        ext = ExtensionSpec(None, None, m.param, m)
    else:
        raise InputError("einstein-solve needs --extend soliton, --derivation, or a parametrised extension")
    a = einstein_analysis(ext)
    sols = [{ext.param: _s(h), "lambda": _s(lam)} for h, lam in a.solutions]
    res = {
        "parameter": ext.param,
        "solutions": sols,
        "einstein_for_all": a.einstein_for_all,
        "lambda": _s(a.lam),
        "conditions": [format_poly(p, ext.param) for p in a.residuals],
        "unresolved": None if a.unresolved is None else format_poly(a.unresolved, ext.param),
    }
    if a.einstein_for_all:
        out.text = [f"Einstein for every {ext.param} with lambda = {res['lambda']}"]
    elif sols:
        out.text = [f"{ext.param} = {s[ext.param]}, lambda = {s['lambda']}" for s in sols]
    else:
        out.text = ["no rational Einstein parameter"]
    if a.unresolved is not None:
        out.text.append(f"irrational candidates: roots of {res['unresolved']}")
    return res


def cmd_flow(args, m, out):
    from . import flow

    if not m.is_parameter_free():
        raise InputError(f"instantiate parameter {m.param!r} with --param before flowing")
    state = flow.FloatMetricState.from_exact(m)
    try:
        traj = flow.integrate(state, args.t_end, args.dt)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    except NearDegenerate as exc:
        out.status = 1
        out.text = [f"aborted: {exc}"]
        return {"aborted": True, "t": exc.t, "det": exc.det}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fp:
            flow.write_jsonl(traj, fp)
        out.wrote_out = True
    res_all = flow.residuals(traj)
    last = traj[-1]
    res = {
        "steps": len(traj) - 1,
        "t": last.t,
        "g": [float(x) for x in last.g.ravel()],
        "max_residual": max(res_all),
    }
    out.text = [f"t = {last.t:g} after {res['steps']} steps",
                "g = " + json.dumps([[round(float(x), 12) for x in row] for row in last.g]),
                f"max soliton residual = {res['max_residual']:.3e}"]
    return res


def cmd_catalog_list(args, m, out):
    rows = []
    for eid in catalog.CATALOG_IDS:
        e = catalog.load(eid)
        rows.append({"id": eid, "dim": e.dim, "parameter": e.param})
    out.text = [f"{r['id']}  (dim {r['dim']}{', parameter ' + r['parameter'] if r['parameter'] else ''})"
                for r in rows]
    return {"entries": rows}


def cmd_verify_all(args, m, out):
    results = catalog.verify_all(jobs=args.jobs)
    failed = sum(1 for r in results if not r.ok and not r.informational)
    out.status = 1 if failed else 0
    out.text = [r.line() for r in results] + [f"{len(results)} expectations, {failed} failed"]
    return {
        "results": [{"entry": r.entry, "key": r.key, "claim": r.claim,
                     "status": "info" if r.informational else ("pass" if r.ok else "fail"),
                     "detail": r.detail} for r in results],
        "failed": failed,
    }


_HANDLERS = {
    "validate": cmd_validate, "connection": cmd_connection, "curvature": cmd_curvature,
    "ricci": cmd_ricci, "derivations": cmd_derivations, "soliton": cmd_soliton,
    "extend": cmd_extend, "einstein-solve": cmd_einstein_solve, "flow": cmd_flow,
    "catalog-list": cmd_catalog_list, "verify-all": cmd_verify_all,
}
_NO_SOURCE = {"catalog-list", "verify-all"}


class _Output:
    def __init__(self):
        self.text = []
        self.status = 0
        self.wrote_out = False


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="algsoliton", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    src = p.add_argument_group("source")
    src.add_argument("--input", metavar="FILE", help="JSON input document")
    src.add_argument("--catalog", metavar="ID", help="catalog id, see catalog-list")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--param", action="append", metavar="NAME=RATIONAL",
                   help="instantiate a metric parameter (repeatable)")
    p.add_argument("--out", metavar="FILE", help="write the report (flow: the JSON-lines trajectory) here")
    p.add_argument("--extend", choices=("soliton",), help="extend by the solved soliton derivation")
    p.add_argument("--derivation", metavar="MATRIX", help="JSON rows of the extending derivation")
    p.add_argument("--ext-param", default="h", metavar="NAME", help="name of <H,H> (default h)")
    p.add_argument("--t-end", type=float, default=0.1)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for verify-all")
    p.add_argument("--no-header", action="store_true", help="omit the timestamp header of verify-all")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Output()
    try:
        if args.command in _NO_SOURCE:
            m, source = None, None
        else:
            m, source = _load(args)
        result = _HANDLERS[args.command](args, m, out)
    except (InputError, DocumentError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except (AlgSolitonError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2

    if args.format == "json":
        report = {"command": args.command}
        if source:
            report["source"] = source
        report.update(result)
        text = json.dumps(report, separators=(",", ":")) + "\n"
    else:
        lines = list(out.text)
        if args.command == "verify-all" and not args.no_header:
            stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
            lines.insert(0, f"# verify-all {stamp}")
        text = "\n".join(lines) + "\n"
    if args.out and not out.wrote_out:
        with open(args.out, "w", encoding="utf-8") as fp:
            fp.write(text)
    else:
        stdout.write(text)
    return out.status


def main() -> None:
    sys.exit(run())
