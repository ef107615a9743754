"""Command line front end: JSON in, canonical JSON report out.

Subcommands compute quadratic Gauss constants, local epsilon factors,
global Frobenius determinants, the product-formula audit, cover transfer
audits, and the projective-representation identity suite.  Reports are
deterministic for a fixed input and seed: the timing block counts logical
work units rather than wall clock, so identical runs serialize to
identical bytes at any thread count (wall time goes to stderr).  Exit
codes: 0 pass, 2 a checked identity failed, 3 unsupported or malformed
input, 4 an enumeration cap was exceeded.
"""

import argparse
import json
import os
import sys
import time
from importlib import resources

from . import chars as _chars
from . import epsilon as _epsilon
from . import gf as _gf
from .chars import LocalCharacter
from .coeff import CoeffField, coeff_setup, complex_embed, second_ell
from .curve import (
    SheafSpec,
    divisor_points,
    global_epsilon,
    gos_degree,
    l_polynomial,
    local_character_at,
    product_formula_check,
    verify_gos,
)
from .epsilon import eps_local, eps_punctual, gamma_psi, gamma_psi_symbolic
from .gf import CapExceeded, fq_build
from .localfield import (
    Form,
    Point,
    Poly,
    RationalFunction,
    expand_form_at,
    ord_at,
)
from .twisted import run_twisted_suite

_KINDS = {"j!": "shriek", "j*": "star", "shriek": "shriek", "star": "star", "punctual": "punctual"}


class Unsupported(ValueError):
    """Input outside the supported domain; carries an optional field name."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


def _bundled(name):
    return resources.files("epsilon_lab").joinpath("data", name)


def _load(path):
    if path is None:
        raise Unsupported("missing input file")
    if hasattr(path, "read_text"):
        text = path.read_text(encoding="utf-8")
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _parse_orders(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise Unsupported("orders must be a comma list of integers", field="orders")


def _coeff_for(p, orders, ell=None, d_max=1):
    """Coefficient field for the run: smallest admissible prime, or the
    pinned one after an admissibility check."""
    orders = [o for o in orders if o > 0] or [1]
    if ell is None:
        return coeff_setup(p, orders, d_max=d_max)
    probe = coeff_setup(p, orders, d_max=1)
    M = probe.M
    if ell <= max(d_max, p * M) or (ell - 1) % (p * M) or not _gf._is_prime(ell):
        raise Unsupported(
            "ell=%d is not admissible (needs a prime > %d with ell = 1 mod %d)"
            % (ell, max(d_max, p * M), p * M),
            field="ell",
        )
    from .coeff import _smallest_primitive_root

    return CoeffField(ell, p, M, _smallest_primitive_root(ell))


def _spec_orders(spec, extra_functions=()):
    """Character orders forced by the residue fields in play: one q**d - 1
    per puncture degree and per divisor point of each listed function."""
    q = spec.base.q
    degrees = {1}
    for pt in spec.punctures:
        degrees.add(pt.degree())
    for r in extra_functions:
        if r is not None:
            for pt, _m in divisor_points(r):
                degrees.add(pt.degree())
    return sorted(q ** d - 1 for d in degrees if q ** d > 2) or [1]


def _spec_payload(obj):
    """A spec file is either a bare sheaf record or a wrapper with
    optional coefficient settings."""
    if "spec" in obj:
        return obj["spec"], obj.get("coeff") or {}
    return obj, {}


def _coeff_from_config(cfg, fallback_p, fallback_orders, ell_flag, d_max=1):
    p = cfg.get("p", fallback_p)
    orders = cfg.get("orders", fallback_orders)
    ell = ell_flag if ell_flag is not None else cfg.get("ell")
    return _coeff_for(p, orders, ell=ell, d_max=d_max)


# ---------------------------------------------------------------------------
# subcommands


def cmd_gauss(args):
    p, q = args.p, args.q
    n = 1
    while p ** n < q:
        n += 1
    if p ** n != q:
        raise Unsupported("q=%d is not a power of p=%d" % (q, p), field="q")
    field = fq_build(p, n)
    try:
        c = field.elem([int(v) for v in args.c.split(",")])
    except ValueError:
        raise Unsupported("c must be a comma list of integers", field="c")
    if c.is_zero():
        raise Unsupported("the quadratic coefficient must be a unit", field="c")
    orders = _parse_orders(args.orders) if args.orders else [max(1, q - 1)]
    coeff = _coeff_for(p, orders, ell=args.ell)
    value = gamma_psi(coeff, field, c)
    z = complex_embed(coeff, gamma_psi_symbolic(field, c))
    body = {
        "p": p,
        "q": q,
        "c": [int(v) for v in c.coeffs],
        "value": value.value,
        "complex": {
            "re": round(z.real, 10) + 0.0,
            "im": round(z.imag, 10) + 0.0,
            "abs": round(abs(z), 10),
        },
    }
    return body, coeff.ell, q, True


def cmd_eps_local(args):
    obj = _load(args.char if args.char is not None else _bundled("char_quadratic.json"))
    kind = _KINDS.get(args.kind)
    if kind is None:
        raise Unsupported("kind must be one of %s" % sorted(_KINDS), field="kind")
    charfield = (obj.get("char") or {}).get("field") or {}
    fallback_p = charfield.get("p", 3)
    fallback_q = fallback_p ** charfield.get("n", 1)
    coeff = _coeff_from_config(
        obj.get("coeff") or {}, fallback_p, [max(1, fallback_q - 1)], args.ell
    )
    if kind == "punctual":
        eigen = obj.get("eigenvalues")
        if not eigen:
            raise Unsupported("punctual kind needs eigenvalues", field="eigenvalues")
        res = eps_punctual(coeff, [coeff.elem(v) for v in eigen])
    else:
        chi = LocalCharacter.from_json(coeff, obj["char"])
        form = Form.from_json(_load(args.form if args.form is not None else _bundled("form_dlog.json")))
        if form.w.field != chi.field:
            raise Unsupported("form and character live over different residue fields", field="form")
        res = eps_local(chi, form, kind, method=args.method)
    body = {
        "value": res.value.value,
        "a": res.conductor_a,
        "a_omega": res.conductor_a_omega,
        "method": res.method,
        "kind": kind,
    }
    try:
        z = complex_embed(coeff, res.value)
        body["complex"] = {
            "re": round(z.real, 10) + 0.0,
            "im": round(z.imag, 10) + 0.0,
            "abs": round(abs(z), 10),
        }
    except ValueError:
        body["complex"] = None
    return body, coeff.ell, 1, True


def _build_spec_and_coeff(args, spec_name, omega_name):
    obj = _load(args.spec if args.spec is not None else _bundled(spec_name))
    spec_obj, cfg = _spec_payload(obj)
    spec = SheafSpec.from_json(spec_obj)
    omega_obj = _load(args.omega if getattr(args, "omega", None) is not None else _bundled(omega_name))
    omega = RationalFunction.from_json(spec.base, omega_obj)
    if omega.num.degree() < 0:
        raise Unsupported("the global one-form must be nonzero", field="omega")
    orders = cfg.get("orders", _spec_orders(spec, [spec.wild, omega]))
    pinned = args.ell if args.ell is not None else cfg.get("ell")
    coeff = _coeff_for(spec.base.p, orders, ell=pinned)
    d = gos_degree(spec, coeff)
    if coeff.ell <= d + 2:
        if pinned is not None:
            raise Unsupported(
                "ell=%d is too small for a degree-%d determinant" % (coeff.ell, d),
                field="ell",
            )
        coeff = _coeff_for(spec.base.p, orders, d_max=d + 2)
    return spec, omega, coeff


def cmd_eps_global(args):
    obj = _load(args.spec)
    spec_obj, cfg = _spec_payload(obj)
    spec = SheafSpec.from_json(spec_obj)
    orders = cfg.get("orders", _spec_orders(spec, [spec.wild]))
    pinned = args.ell if args.ell is not None else cfg.get("ell")
    coeff = _coeff_from_config(cfg, spec.base.p, orders, args.ell)
    d = gos_degree(spec, coeff)
    if coeff.ell <= d + 2:
        if pinned is not None:
            raise Unsupported(
                "ell=%d is too small for a degree-%d determinant" % (coeff.ell, d),
                field="ell",
            )
        coeff = _coeff_for(spec.base.p, orders, d_max=d + 2)
    value, degree = global_epsilon(spec, coeff)
    audit = verify_gos(spec, coeff)
    cs = l_polynomial(spec, coeff)
    body = {
        "value": value.value,
        "degree": degree,
        "l_polynomial": [c.value for c in cs],
        "audit": audit,
    }
    ok = all(v for v in audit.values() if isinstance(v, bool))
    return body, coeff.ell, degree + 2, ok


def cmd_product_check(args):
    spec, omega, coeff = _build_spec_and_coeff(args, "product_spec.json", "product_omega.json")
    report = product_formula_check(spec, coeff, omega, method=args.method)
    body = {"report": report}
    ok = report["ok"]
    work = len(report.get("per_point", ())) + report.get("degree", 0) + 1
    if args.second_ell:
        other = second_ell(coeff, d_max=max(1, report.get("degree", 0) + 2))
        twin = product_formula_check(spec, other, omega, method=args.method)
        body["second"] = twin
        ok = ok and twin["ok"]
        work *= 2
    return body, coeff.ell, work, ok


def cmd_induction_check(args):
    cover_obj = _load(args.cover if args.cover is not None else _bundled("induction_cover.json"))
    spec_obj = _load(args.spec if args.spec is not None else _bundled("induction_spec.json"))
    omega_obj = _load(args.omega if args.omega is not None else _bundled("induction_omega.json"))
    variants = spec_obj.get("variants")
    if not variants:
        raise Unsupported("cover audit needs a nonempty variants list", field="variants")
    first_local = SheafSpec.from_json(variants[0]["local"])
    base = first_local.base
    if cover_obj.get("field", {}).get("p", base.p) != base.p:
        raise Unsupported("cover and sheaf data live over different fields", field="field")
    cover = RationalFunction.from_json(base, cover_obj)
    omega = RationalFunction.from_json(base, omega_obj)
    point = Point.from_json(base, spec_obj["point"])
    pulled = _pullback(omega, cover)
    cfg = spec_obj.get("coeff") or {}
    orders = cfg.get("orders", _spec_orders(first_local, [pulled]))
    coeff = _coeff_from_config(cfg, base.p, orders, args.ell)
    degrees = []
    lambdas = []
    conductor_ok = True
    for var in variants:
        gspec = SheafSpec.from_json(var["global"])
        lspec = SheafSpec.from_json(var["local"])
        cs = l_polynomial(gspec, coeff)
        d = len(cs) - 1
        down = coeff.elem(-1) ** d * cs[d]
        chi = local_character_at(lspec, coeff, point)
        swan = max(0, -chi.wild_h.v) if chi.wild_h.coeffs else 0
        prec = swan + abs(ord_at(pulled, point)) + 8
        form = expand_form_at(pulled, point, prec)
        up = eps_local(chi, form, "shriek")
        if up.conductor_a_omega != d:
            conductor_ok = False
        degrees.append(d)
        lambdas.append((down * up.value ** -1).value)
    body = {
        "point": point.to_json(),
        "degrees": degrees,
        "lambdas": lambdas,
        "all_equal": all(v == lambdas[0] for v in lambdas),
        "conductor_ok": conductor_ok,
    }
    ok = body["all_equal"] and conductor_ok
    return body, coeff.ell, 2 * len(variants), ok


def _pullback(w, f):
    """The rational coefficient of dy in the pullback along t = f(y) of
    the form w(t) dt, namely w(f(y)) f'(y)."""

    def compose(poly, rf):
        acc = RationalFunction.from_poly(Poly.const(rf.field, 0))
        for c in reversed(list(poly.coeffs)):
            acc = acc * rf + c
        return acc

    return compose(w.num, f) / compose(w.den, f) * f.derivative()


def cmd_twisted_check(args):
    orders = _parse_orders(args.orders) if args.orders else [8]
    coeff = _coeff_for(args.p, orders, ell=args.ell)
    report = run_twisted_suite(coeff, seed=args.seed, min_randomized=args.trials)
    work = sum(report["counts"].values())
    return {"report": report}, coeff.ell, work, report["ok"]


# ---------------------------------------------------------------------------
# plumbing


_COMMANDS = {
    "gauss": cmd_gauss,
    "eps-local": cmd_eps_local,
    "eps-global": cmd_eps_global,
    "product-check": cmd_product_check,
    "induction-check": cmd_induction_check,
    "twisted-check": cmd_twisted_check,
}


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ell", type=int, default=None, help="pin the coefficient prime")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized corpora")
    common.add_argument("--cap", type=int, default=None, help="override the unit-sum cap")
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="accepted for interface compatibility; reductions run in a "
        "fixed order so reports are identical at any thread count",
    )
    common.add_argument("--json-out", default=None, help="also write the report to this path")

    parser = argparse.ArgumentParser(
        prog="epsilon-lab",
        description="Exact local constants, conductors, global determinants, "
        "and transfer identities over function fields, with JSON reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gauss", parents=[common], help="quadratic Gauss constant")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--c", required=True, help="quadratic coefficient (comma list of ints)")
    g.add_argument("--orders", default=None, help="extra character orders, comma list")

    el = sub.add_parser("eps-local", parents=[common], help="one local factor")
    el.add_argument("--char", default=None, help="character JSON (default: bundled quadratic)")
    el.add_argument("--form", default=None, help="local one-form JSON (default: bundled dpi/pi)")
    el.add_argument("--kind", default="j!", help="j!, j*, or punctual")
    el.add_argument("--method", default="auto", help="auto, tate, closed, or unramified")

    eg = sub.add_parser("eps-global", parents=[common], help="global determinant of the data")
    eg.add_argument("--spec", required=True, help="sheaf data JSON")

    pc = sub.add_parser("product-check", parents=[common], help="global vs product of local factors")
    pc.add_argument("--spec", default=None, help="sheaf data JSON (default: bundled Gauss data)")
    pc.add_argument("--omega", default=None, help="global one-form JSON (default: dt/t)")
    pc.add_argument("--second-ell", action="store_true", help="repeat at the next coefficient prime")
    pc.add_argument("--method", default="auto")

    ic = sub.add_parser("induction-check", parents=[common], help="cover transfer-factor audit")
    ic.add_argument("--cover", default=None, help="covering map JSON (default: bundled square map)")
    ic.add_argument("--spec", default=None, help="variant list JSON")
    ic.add_argument("--omega", default=None, help="downstairs one-form JSON")

    tc = sub.add_parser("twisted-check", parents=[common], help="projective representation suite")
    tc.add_argument("--p", type=int, default=3)
    tc.add_argument("--orders", default=None)
    tc.add_argument("--trials", type=int, default=100, help="randomized cases above order 12")

    return parser


def _caps():
    return {
        "field": _gf.FIELD_CAP,
        "unit_sum": _epsilon.TATE_CAP,
        "oracle": _chars.ORACLE_CAP,
        "reduce": _chars.REDUCE_CAP,
    }


def _emit(report, json_out):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    sys.stdout.write(text)
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    cap_flag = args.cap
    if cap_flag is None:
        env = os.environ.get("EPSILON_LAB_CAP")
        if env is not None:
            try:
                cap_flag = int(env)
            except ValueError:
                cap_flag = None
    saved_cap = _epsilon.TATE_CAP
    if cap_flag is not None:
        _epsilon.TATE_CAP = cap_flag
    started = time.perf_counter()
    report = {"command": args.command, "seed": args.seed, "caps": _caps()}
    try:
        body, ell, work, ok = _COMMANDS[args.command](args)
        report.update(body)
        report["ell"] = ell
        report["ok"] = ok
        report["timings"] = {"unit": "evaluations", "total": work}
        code = 0 if ok else 2
    except CapExceeded as err:
        report.update({"ok": False, "error": str(err)})
        code = 4
    except Unsupported as err:
        report.update({"ok": False, "error": str(err)})
        if err.field:
            report["field"] = err.field
        code = 3
    except KeyError as err:
        report.update({"ok": False, "error": "missing field", "field": str(err.args[0])})
        code = 3
    except (ValueError, OSError) as err:
        report.update({"ok": False, "error": str(err)})
        code = 3
    finally:
        _epsilon.TATE_CAP = saved_cap
    _emit(report, args.json_out)
    sys.stderr.write("wall %.3fs\n" % (time.perf_counter() - started))
    return code


if __name__ == "__main__":
    sys.exit(main())
