"""Command-line surface.

Exit codes across all subcommands: 0 = verification passed / computation
done, 1 = violations found (or extension obstructed), 2 = input error.
The environment variable HOMBRACE_MAX_DEGREE (default 3) caps cochain
degrees accepted by the bracket and cohomology commands.
"""

from __future__ import annotations

import json
import os
import sys

import click

from .exlin import ExactError, InputError, Field, Matrix
from . import homcore, ooper, cochain as CC, cohomology as CH, deform as DF
from . import fileio, examples


PASS, FAIL, INPUT_ERROR = 0, 1, 2


def _max_degree():
    raw = os.environ.get("HOMBRACE_MAX_DEGREE", "3")
    try:
        return int(raw)
    except ValueError:
        raise InputError("HOMBRACE_MAX_DEGREE must be an integer, got %r" % raw)


def _check_degree(n):
    cap = _max_degree()
    if n > cap:
        raise InputError(
            "degree %d exceeds HOMBRACE_MAX_DEGREE=%d" % (n, cap))


def _report_json(rep, field):
    def enc(v):
        return {"law": v.law, "indices": list(v.indices),
                "defect": [field.fmt(x) for x in v.defect]}
    return {"ok": rep.ok,
            "violations": [enc(v) for v in rep.violations],
            "warnings": [enc(v) for v in rep.warnings]}


def _emit_report(ctx, rep, field):
    if ctx.obj.get("json"):
        click.echo(json.dumps(_report_json(rep, field), indent=1))
    else:
        click.echo(str(rep))
    ctx.exit(PASS if rep.ok else FAIL)


def _check_field_flag(ctx, field):
    want = ctx.obj.get("field")
    if want is not None and want != field:
        raise InputError("--field %s does not match file field %s"
                         % (want.name, field.name))


def _parse_vector(field, spec, dim, what):
    parts = [p.strip() for p in spec.split(",")]
    if len(parts) != dim:
        raise InputError("%s needs %d comma-separated entries, got %d"
                         % (what, dim, len(parts)))
    return [field.parse(p) for p in parts]


class _Cli(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except ExactError as e:
            click.echo("error: %s" % e, err=True)
            ctx.exit(INPUT_ERROR)


@click.group(cls=_Cli)
@click.option("--field", "field_name", default=None,
              help="Expected field, Q or Fp:<p>; checked against files.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable reports.")
@click.pass_context
def main(ctx, field_name, as_json):
    """Exact computations with Hom-associative algebras and O-operators."""
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json
    ctx.obj["field"] = Field.from_name(field_name) if field_name else None


def _load_triple(ctx, algebra, module, operator):
    A = fileio.load_algebra(algebra)
    _check_field_flag(ctx, A.field)
    M = fileio.load_bimodule(module, algebra=A)
    T = fileio.load_map(operator, A.field)
    return A, M, T


def _oper(ctx, algebra, module, operator, force=False):
    A, M, T = _load_triple(ctx, algebra, module, operator)
    return ooper.OOperator(A, M, T, force=force)


_opt_a = click.option("-a", "--algebra", required=True, type=click.Path())
_opt_m = click.option("-m", "--module", required=True, type=click.Path())
_opt_t = click.option("-t", "--operator", required=True, type=click.Path())


# ---------------------------------------------------------------------------
# verify

@main.group()
def verify():
    """Check structure axioms; exit 0 only on an empty report."""


@verify.command("algebra")
@click.argument("path", type=click.Path())
@click.pass_context
def verify_algebra(ctx, path):
    A = fileio.load_algebra(path)
    _check_field_flag(ctx, A.field)
    _emit_report(ctx, homcore.verify_hom_algebra(A), A.field)


@verify.command("bimodule")
@click.argument("path", type=click.Path())
@click.pass_context
def verify_bimodule(ctx, path):
    M = fileio.load_bimodule(path)
    _check_field_flag(ctx, M.field)
    _emit_report(ctx, homcore.verify_bimodule(M), M.field)


@verify.command("o-operator")
@_opt_a
@_opt_m
@_opt_t
@click.pass_context
def verify_o_operator(ctx, algebra, module, operator):
    A, M, T = _load_triple(ctx, algebra, module, operator)
    _emit_report(ctx, ooper.verify_o_operator(A, M, T), A.field)


@verify.command("dendriform")
@click.argument("path", type=click.Path())
@click.pass_context
def verify_dendriform(ctx, path):
    D = fileio.load_dendriform(path)
    _check_field_flag(ctx, D.field)
    _emit_report(ctx, ooper.verify_hom_dendriform(D), D.field)


@verify.command("nijenhuis")
@_opt_a
@click.option("-n", "--operator", "operator", required=True, type=click.Path(),
              help="Map file for the Nijenhuis operator N: A -> A.")
@click.pass_context
def verify_nijenhuis(ctx, algebra, operator):
    A = fileio.load_algebra(algebra)
    _check_field_flag(ctx, A.field)
    N = fileio.load_map(operator, A.field)
    _emit_report(ctx, homcore.verify_nijenhuis(A, N), A.field)


# ---------------------------------------------------------------------------
# bracket

@main.group()
def bracket():
    """Graded brackets on cochains; writes the resulting cochain file."""


@bracket.command("derived")
@_opt_a
@_opt_m
@click.argument("p_path", type=click.Path())
@click.argument("q_path", type=click.Path())
@click.option("-o", "--out", required=True, type=click.Path())
@click.pass_context
def bracket_derived(ctx, algebra, module, p_path, q_path, out):
    """[[P, Q]] for cochains P, Q: M^(x n) -> A."""
    A = fileio.load_algebra(algebra)
    _check_field_flag(ctx, A.field)
    M = fileio.load_bimodule(module, algebra=A)
    P = fileio.load_cochain(p_path, A.field)
    Q = fileio.load_cochain(q_path, A.field)
    _check_degree(max(P.degree, Q.degree))
    if P.degree == 0 and Q.degree == 0:
        raise InputError("the derived bracket needs a positive-degree argument")
    if Q.degree == 0:
        res = CC.derived_bracket_deg0(A, M, P, Q.coeffs[0])
    elif P.degree == 0:
        # [[a, Q]] = -[[Q, a]] regardless of the degree of Q
        res = -CC.derived_bracket_deg0(A, M, Q, P.coeffs[0])
    else:
        res = CC.derived_bracket(A, M, P, Q)
    fileio.save_cochain(out, res)
    click.echo("wrote %s (degree %d)" % (out, res.degree))


@bracket.command("gerstenhaber")
@_opt_a
@_opt_m
@click.argument("p_path", type=click.Path())
@click.argument("q_path", type=click.Path())
@click.option("-o", "--out", required=True, type=click.Path())
@click.option("--lift/--no-lift", default=True,
              help="Treat inputs as M->A cochains and lift to A(+)M first.")
@click.pass_context
def bracket_gerstenhaber(ctx, algebra, module, p_path, q_path, out, lift):
    """[P, Q]_alpha on the semidirect sum A(+)M (inputs are lifted)."""
    A = fileio.load_algebra(algebra)
    _check_field_flag(ctx, A.field)
    M = fileio.load_bimodule(module, algebra=A)
    P = fileio.load_cochain(p_path, A.field)
    Q = fileio.load_cochain(q_path, A.field)
    _check_degree(max(P.degree, Q.degree))
    d = A.dim + M.dim
    beta = CC.block_twist(A, M)
    if not lift or (P.src_dim == d and P.tgt_dim == d):
        Ph, Qh = P, Q
    else:
        Ph = CC.lift_cochain(P, A.dim, M.dim)
        Qh = CC.lift_cochain(Q, A.dim, M.dim)
    res = CC.gerstenhaber_bracket(Ph, Qh, beta)
    fileio.save_cochain(out, res)
    click.echo("wrote %s (degree %d on the %d-dimensional sum)"
               % (out, res.degree, d))


# ---------------------------------------------------------------------------
# cohomology

@main.command("cohomology")
@_opt_a
@_opt_m
@_opt_t
@click.option("--degree", type=int, required=True)
@click.option("--differential", type=click.Choice(["dH", "dT"]), default="dH")
@click.option("--reps", "reps_dir", type=click.Path(), default=None,
              help="Directory to write representative cocycle files into.")
@click.pass_context
def cohomology_cmd(ctx, algebra, module, operator, degree, differential, reps_dir):
    """Print Z^k, B^k, H^k dimensions for the O-operator complex."""
    if degree < 0:
        raise InputError("degree must be >= 0")
    _check_degree(degree + 1)
    T = _oper(ctx, algebra, module, operator)
    z, b, h = CH.cohomology_dims(T, degree, differential)
    click.echo("Z^%d=%d B^%d=%d H^%d=%d" % (degree, z, degree, b, degree, h))
    if reps_dir is not None:
        os.makedirs(reps_dir, exist_ok=True)
        for i, f in enumerate(CH.representatives(T, degree, differential)):
            fileio.save_cochain(os.path.join(reps_dir, "rep%d.json" % i), f)
        click.echo("wrote %d representatives to %s" % (h, reps_dir))


# ---------------------------------------------------------------------------
# deform

@main.group()
def deform():
    """Order-n deformations, obstructions and equivalences."""


def _series(ctx, algebra, module, operator, terms):
    T = _oper(ctx, algebra, module, operator)
    cochains = []
    for p in terms:
        f = fileio.load_cochain(p, T.field)
        cochains.append(f)
    return DF.DeformationSeries(T, cochains)


_opt_terms = click.option("--terms", multiple=True, type=click.Path(),
                          help="Cochain files T_1 ... T_n in order.")


@deform.command("verify")
@_opt_a
@_opt_m
@_opt_t
@_opt_terms
@click.pass_context
def deform_verify(ctx, algebra, module, operator, terms):
    s = _series(ctx, algebra, module, operator, terms)
    _emit_report(ctx, DF.verify_order_n(s), s.base.field)


@deform.command("obstruction")
@_opt_a
@_opt_m
@_opt_t
@_opt_terms
@click.option("--theta-out", type=click.Path(), default="theta.json")
@click.option("--next-out", type=click.Path(), default="Tnext.json")
@click.pass_context
def deform_obstruction(ctx, algebra, module, operator, terms, theta_out, next_out):
    s = _series(ctx, algebra, module, operator, terms)
    theta = DF.obstruction(s)
    fileio.save_cochain(theta_out, theta)
    click.echo("wrote %s" % theta_out)
    nxt = DF.extend(s)
    if nxt is None:
        click.echo("extensible: no")
        ctx.exit(FAIL)
    fileio.save_cochain(next_out, nxt)
    click.echo("extensible: yes")
    click.echo("wrote %s" % next_out)


@deform.command("extend")
@_opt_a
@_opt_m
@_opt_t
@_opt_terms
@click.option("--next-out", type=click.Path(), default="Tnext.json")
@click.pass_context
def deform_extend(ctx, algebra, module, operator, terms, next_out):
    s = _series(ctx, algebra, module, operator, terms)
    nxt = DF.extend(s)
    if nxt is None:
        click.echo("extensible: no")
        ctx.exit(FAIL)
    fileio.save_cochain(next_out, nxt)
    click.echo("extensible: yes")
    click.echo("wrote %s" % next_out)


@deform.command("equivalence")
@_opt_a
@_opt_m
@_opt_t
@click.option("--gen1", required=True, type=click.Path())
@click.option("--gen2", required=True, type=click.Path())
@click.option("-x", "witness", default=None,
              help='Witness element of A as "c1,c2,...". Omit to search.')
@click.pass_context
def deform_equivalence(ctx, algebra, module, operator, gen1, gen2, witness):
    T = _oper(ctx, algebra, module, operator)
    g1 = fileio.load_cochain(gen1, T.field)
    g2 = fileio.load_cochain(gen2, T.field)
    if witness is not None:
        x = _parse_vector(T.field, witness, T.algebra.dim, "-x")
        _emit_report(ctx, DF.verify_equivalence_infinitesimal(T, g1, g2, x),
                     T.field)
        return
    x = DF.search_equivalence_witness(T, g1, g2)
    if x is None:
        click.echo("no witness found")
        ctx.exit(FAIL)
    click.echo("witness: %s" % ",".join(T.field.fmt(c) for c in x))


# ---------------------------------------------------------------------------
# nijenhuis element

@main.group()
def nijenhuis():
    """Nijenhuis elements of an O-operator."""


@nijenhuis.command("element")
@_opt_a
@_opt_m
@_opt_t
@click.option("-x", "element", required=True,
              help='Element of A as "c1,c2,...".')
@click.pass_context
def nijenhuis_element(ctx, algebra, module, operator, element):
    T = _oper(ctx, algebra, module, operator)
    x = _parse_vector(T.field, element, T.algebra.dim, "-x")
    _emit_report(ctx, DF.verify_nijenhuis_element(T, x), T.field)


# ---------------------------------------------------------------------------
# example / search

@main.command("example")
@click.argument("name", type=click.Choice(["example25"]))
@click.option("-a", "param_a", default="1", help="Parameter a.")
@click.option("-b", "param_b", default="2", help="Parameter b.")
@click.option("--rho1", default="3")
@click.option("--rho2", default="5")
@click.option("--alpha-id", is_flag=True,
              help="Replace the twist by the identity (breaks the axioms "
                   "unless (a - b) b = 0).")
@click.option("-o", "--out-dir", type=click.Path(), default=".")
@click.pass_context
def example_cmd(ctx, name, param_a, param_b, rho1, rho2, alpha_id, out_dir):
    """Write the example fixture family (algebra, adjoint bimodule, map)."""
    field = ctx.obj.get("field") or Field.from_name("Q")
    a, b = field.parse(param_a), field.parse(param_b)
    A = examples.example25(field, a, b)
    if alpha_id:
        A = homcore.HomAlgebra(field, A.mu, Matrix.identity(field, 3))
    R = examples.example25_rb(field, field.parse(rho1), field.parse(rho2))
    os.makedirs(out_dir, exist_ok=True)
    apath = os.path.join(out_dir, "algebra.json")
    fileio.save_algebra(apath, A)
    M = homcore.adjoint_bimodule(A)
    fileio.save_bimodule(os.path.join(out_dir, "bimodule.json"), M, "algebra.json")
    fileio.save_map(os.path.join(out_dir, "rb.json"), R)
    click.echo("wrote algebra.json, bimodule.json, rb.json in %s" % out_dir)


@main.command("search")
@_opt_a
@_opt_m
@click.option("--strict", is_flag=True,
              help="Require twist-compatibility as well.")
@click.option("--limit", type=int, default=None)
@click.pass_context
def search_cmd(ctx, algebra, module, strict, limit):
    """Exhaustively enumerate O-operators T: M -> A over a finite field;
    prints one JSON map object per line, in deterministic order."""
    A = fileio.load_algebra(algebra)
    _check_field_flag(ctx, A.field)
    M = fileio.load_bimodule(module, algebra=A)
    count = 0
    for T in examples.search_o_operators(A, M, strict=strict):
        click.echo(json.dumps({
            "kind": "map", "rows": T.matrix.rows, "cols": T.matrix.cols,
            "entries": [[A.field.fmt(T.matrix[i, j])
                         for j in range(T.matrix.cols)]
                        for i in range(T.matrix.rows)]}))
        count += 1
        if limit is not None and count >= limit:
            break
    click.echo("found %d" % count, err=True)


if __name__ == "__main__":
    main()
