"""Command-line front end.

Exit status 0 on success, 2 on domain errors such as an inadmissible density
spec, and 1 on malformed input.  Results
go to stdout, diagnostics to stderr, and nothing is printed on failure.

The default tolerance comes from ``--tol``, else from the JSON profile named
by ``ACMCUBIC_TOLERANCE_PROFILE`` (``{"default": ..., "<command>": ...}``),
else from the built-in per-command value.
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import jsonio
from .acm import NotHermitianError, acm_general, acm_hermitian, discriminant, is_p_zero
from .core import AcmError, CubicPoly, char_poly_3, depress, is_hermitian, poly_max_diff
from .density import DensityPolySpec, density_acm, density_poly, is_admissible, validate_density
from .roots import (
    Regime,
    classify,
    multiset_distance,
    oracle_roots,
    real_roots_of_complex_cubic,
    roots_general,
    roots_real,
)
from .unitary import (
    build_unitary_acm,
    build_unitary_poly,
    recognize_unitary,
    theorem3_check,
)

PROFILE_ENV = "ACMCUBIC_TOLERANCE_PROFILE"

DEFAULT_TOL = {
    "solve": 1e-8,
    "depress": 1e-12,
    "acm": 1e-10,
    "density": 1e-10,
    "unitary-build": 1e-12,
    "unitary-check": 1e-9,
    "classify": 1e-12,
    "oracle": 1e-12,
}
COMMANDS = tuple(DEFAULT_TOL)


class UsageError(jsonio.MalformedInputError):
    def __init__(self, message: str):
        Exception.__init__(self, message)
        self.path = "$"
        self.message = message


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which is reserved for domain errors
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------------------
# tolerance


def load_profile(env=None) -> dict:
    env = os.environ if env is None else env
    path = env.get(PROFILE_ENV)
    if not path:
        return {}
    root = f"${PROFILE_ENV}"
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise jsonio.MalformedInputError(root, f"cannot read tolerance profile: {exc}") from None
    doc = jsonio.loads(text, root)
    jsonio.validate(doc, "tolerance_profile", root)
    return doc


def resolve_tol(command: str, explicit, profile: dict) -> float:
    if explicit is not None:
        return float(explicit)
    if command in profile:
        return float(profile[command])
    if "default" in profile:
        return float(profile["default"])
    return DEFAULT_TOL[command]


# ---------------------------------------------------------------------------
# handlers: each returns (document, text lines)

J = jsonio.complex_to_json


def _fmt(z) -> str:
    z = complex(z) + 0j
    z = complex(z.real + 0.0, z.imag + 0.0)
    if z.imag == 0:
        return repr(z.real)
    return f"{z.real!r} {'+' if z.imag >= 0 else '-'} {abs(z.imag)!r}i"


def _need_cubic(poly) -> CubicPoly:
    if not isinstance(poly, CubicPoly):
        raise UsageError("this command needs a cubic {\"c1\", \"c2\", \"c3\"}")
    return poly


def _scaled_residual(poly: CubicPoly, z) -> float:
    return abs(poly(z)) / poly.scale(z)


def cmd_solve(req, tol):
    poly = _need_cubic(req["poly"])
    triple = roots_real(poly) if poly.is_real else roots_general(poly)
    resid = max(_scaled_residual(poly, z) for z in triple)
    doc = {
        "roots": [J(z) for z in triple],
        "regime": triple.regime.value,
        "max_scaled_residual": resid,
        "ok": resid <= tol,
    }
    if triple.terms is not None:
        doc["terms"] = {k: v for k, v in vars(triple.terms).items() if v is not None}
    if not poly.is_real:
        doc["real_roots"] = [
            {"value": r.value, "double": r.double} for r in real_roots_of_complex_cubic(poly)
        ]
    lines = [f"regime: {triple.regime.value}"] + [f"z{k + 1} = {_fmt(z)}" for k, z in enumerate(triple)]
    if req.get("compare_oracle"):
        dist = multiset_distance(list(triple), oracle_roots(poly))
        doc["oracle_distance"] = dist
        doc["oracle_agrees"] = dist <= tol * (1 + max(abs(c) for c in poly.coeffs))
        lines.append(f"oracle distance: {dist!r}")
    return doc, lines


def cmd_depress(req, tol):
    poly = _need_cubic(req["poly"])
    canon = depress(poly)
    doc = {
        "p": J(canon.p),
        "q": J(canon.q),
        "shift": J(canon.shift),
        "regime": (Regime.P_ZERO if is_p_zero(canon.p, canon.q) else Regime.COMPLEX_GENERAL).value,
    }
    return doc, [f"p = {_fmt(canon.p)}", f"q = {_fmt(canon.q)}", f"shift = {_fmt(canon.shift)}"]


def cmd_acm(req, tol):
    poly = _need_cubic(req["poly"])
    canon = depress(poly)
    if req.get("hermitian"):
        if not poly.is_real:
            raise NotHermitianError("not Hermitian-admissible: coefficients must be real")
        m = acm_hermitian(canon.p.real, canon.q.real) - canon.shift.real * np.eye(3)
        regime = Regime.REAL_DELTA_NONPOS
    else:
        m = acm_general(poly)
        regime = Regime.P_ZERO if is_p_zero(canon.p, canon.q) else Regime.COMPLEX_GENERAL
    back = char_poly_3(m)
    err = poly_max_diff(back, poly)
    doc = {
        "matrix": jsonio.matrix_to_json(m),
        "regime": regime.value,
        "char_poly": jsonio.poly_to_json(back),
        "max_coefficient_error": err,
        "hermitian": is_hermitian(m, tol),
    }
    lines = [f"regime: {regime.value}"] + ["  ".join(_fmt(v) for v in row) for row in m]
    return doc, lines


def cmd_density(req, tol):
    if "a2" not in req or "b2" not in req:
        raise UsageError("density needs --a2 and --b2")
    spec = DensityPolySpec.from_squares(req["a2"], req["b2"])
    poly = density_poly(spec)
    verdict = is_admissible(poly, tol)
    m = density_acm(spec)
    report = validate_density(m, tol)
    doc = {
        "matrix": jsonio.matrix_to_json(m),
        "poly": jsonio.poly_to_json(poly),
        "regime": Regime.REAL_DELTA_NONPOS.value,
        "admissible": bool(verdict),
        "report": report.as_dict(),
        "eigenvalues": [J(e) for e in report.eigenvalues],
    }
    lines = ["  ".join(_fmt(v) for v in row) for row in m]
    lines.append("valid density matrix" if report.ok else "NOT a valid density matrix")
    return doc, lines


def cmd_unitary_build(req, tol):
    params = req.get("params")
    if params is None:
        raise UsageError("unitary-build needs --params or --r2/--theta/--eps")
    if not params.in_unitary_range and not req.get("allow_non_unitary"):
        raise AcmError(
            f"r2 = {params.r2!r} > 2: no unitary ACM (pass --allow-non-unitary to build anyway)"
        )
    acm = build_unitary_acm(params)
    poly = build_unitary_poly(params, strict=False)
    err = poly_max_diff(char_poly_3(acm.matrix), poly)
    doc = {
        "params": jsonio.params_to_json(params),
        "matrix": jsonio.matrix_to_json(acm.matrix),
        "poly": jsonio.poly_to_json(poly),
        "unitary": acm.unitary,
        "max_coefficient_error": err,
        "regime": "unitary" if acm.unitary else "non-unitary",
    }
    lines = ["  ".join(_fmt(v) for v in row) for row in acm.matrix]
    lines.append("unitary" if acm.unitary else "non-unitary")
    return doc, lines


def cmd_unitary_check(req, tol):
    poly = _need_cubic(req["poly"])
    struct = theorem3_check(poly, tol)
    params = recognize_unitary(poly, tol) if struct is not None else None
    doc = {
        "unitary": params is not None,
        "theorem3_structure": struct is not None,
        "structure": None if struct is None else vars(struct).copy(),
        "params": None if params is None else jsonio.params_to_json(params),
        "roots": [J(z) for z in roots_general(poly)],
    }
    if params is not None:
        doc["reconstruction_error"] = poly_max_diff(build_unitary_poly(params), poly)
    lines = [
        f"unit-circle coefficient structure: {'yes' if struct else 'no'}",
        f"unitary ACM: {'yes' if params else 'no'}",
    ]
    if params is not None:
        lines.append(f"r2 = {params.r2!r}, theta = {params.theta!r}, eps = {params.eps!r}")
    return doc, lines


def cmd_classify(req, tol):
    if "p" not in req or "q" not in req:
        raise UsageError("classify needs --p and --q")
    p, q = float(req["p"]), float(req["q"])
    cls = classify(p, q)
    return {"class": cls.value, "discriminant": discriminant(p, q)}, [cls.value]


def cmd_oracle(req, tol):
    poly = req["poly"]
    roots = oracle_roots(poly)
    coeffs = poly.coeffs
    return (
        {"roots": [J(z) for z in roots], "degree": len(coeffs), "regime": "oracle"},
        [_fmt(z) for z in roots],
    )


HANDLERS = {
    "solve": cmd_solve,
    "depress": cmd_depress,
    "acm": cmd_acm,
    "density": cmd_density,
    "unitary-build": cmd_unitary_build,
    "unitary-check": cmd_unitary_check,
    "classify": cmd_classify,
    "oracle": cmd_oracle,
}


# ---------------------------------------------------------------------------
# argument handling


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    common.add_argument("--input", metavar="FILE", default=argparse.SUPPRESS)

    parser = _Parser(prog="acmcubic", description="Almost-companion matrices of cubics.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def poly_cmd(name, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("--poly", help='JSON cubic {"c1":[re,im],"c2":…,"c3":…}')
        return sp

    sp = poly_cmd("solve", "roots of a cubic")
    sp.add_argument("--compare-oracle", action="store_true", default=None)
    poly_cmd("depress", "canonical form p, q and shift")
    sp = poly_cmd("acm", "almost-companion matrix of a cubic")
    sp.add_argument("--hermitian", action="store_true", default=None)
    sp = sub.add_parser("density", help="qutrit density matrix", parents=[common])
    sp.add_argument("--a2", type=float)
    sp.add_argument("--b2", type=float)
    sp = sub.add_parser("unitary-build", help="unitary ACM from parameters", parents=[common])
    sp.add_argument("--params", help='JSON {"r2":…, "theta":…, "eps":…}')
    sp.add_argument("--r2", type=float)
    sp.add_argument("--theta", type=float)
    sp.add_argument("--eps", type=float)
    sp.add_argument("--allow-non-unitary", action="store_true", default=None)
    poly_cmd("unitary-check", "does the cubic admit a unitary ACM")
    sp = sub.add_parser("classify", help="root class of a real depressed cubic", parents=[common])
    sp.add_argument("--p", type=float)
    sp.add_argument("--q", type=float)
    sp = sub.add_parser("oracle", help="Durand-Kerner roots", parents=[common])
    sp.add_argument("--poly", help="JSON cubic object or list of [re,im] coefficients")
    return parser


def _read_input(path: str) -> dict:
    root = f"{path}"
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise jsonio.MalformedInputError(root, f"cannot read input: {exc}") from None
    doc = jsonio.loads(text, root)
    jsonio.validate(doc, "request", root)
    return doc


def _request(ns: argparse.Namespace) -> tuple[dict, dict]:
    """Merge ``--input`` and flags into a raw request plus option dict."""
    opts = {k: getattr(ns, k) for k in ("format", "tol", "input") if hasattr(ns, k)}
    raw = {}
    if "input" in opts:
        raw = dict(_read_input(opts["input"]))
    command = ns.command or raw.get("command")
    if command is None:
        raise UsageError("acmcubic: a command is required")
    if ns.command and raw.get("command", ns.command) != ns.command:
        raise UsageError(f"command {ns.command!r} conflicts with input file command {raw['command']!r}")
    raw["command"] = command
    for key in ("poly", "params", "a2", "b2", "p", "q", "r2", "theta", "eps",
                "hermitian", "compare_oracle", "allow_non_unitary"):
        val = getattr(ns, key, None)
        if val is not None:
            raw[key] = val
    if "tol" in opts:
        raw["tol"] = opts["tol"]
    return raw, opts


def _decode(raw: dict) -> dict:
    req = dict(raw)
    command = raw["command"]
    if "poly" in raw:
        obj = raw["poly"]
        if isinstance(obj, str):
            obj = jsonio.loads(obj, "--poly")
            root = "--poly"
        else:
            root = "$.poly"
        req["poly"] = jsonio.polyn_from_json(obj, root)
    elif command in ("solve", "depress", "acm", "unitary-check", "oracle"):
        raise UsageError(f"{command} needs --poly")
    if "params" in raw:
        obj = raw["params"]
        if isinstance(obj, str):
            obj, root = jsonio.loads(obj, "--params"), "--params"
        else:
            root = "$.params"
        req["params"] = jsonio.params_from_json(obj, root)
    elif command == "unitary-build":
        parts = {k: raw.get(k) for k in ("r2", "theta", "eps")}
        missing = [k for k, v in parts.items() if v is None]
        if len(missing) < 3:
            if missing:
                raise UsageError(f"unitary-build: missing --{', --'.join(missing)}")
            req["params"] = jsonio.params_from_json(parts, "--r2/--theta/--eps")
    for key in ("a2", "b2"):
        if key in raw and not raw[key] >= 0:
            raise jsonio.MalformedInputError(f"--{key}", "must be a non-negative number")
    if "tol" in raw and not raw["tol"] > 0:
        raise jsonio.MalformedInputError("--tol", "must be positive")
    return req


def run(argv=None, env=None, stdout=None, stderr=None) -> int:
    """Execute one request; returns the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        ns = build_parser().parse_args(argv)
        raw, opts = _request(ns)
        req = _decode(raw)
        tol = resolve_tol(req["command"], req.get("tol"), load_profile(env))
        doc, lines = HANDLERS[req["command"]](req, tol)
    except jsonio.MalformedInputError as exc:
        print(f"error: malformed input: {exc}", file=stderr)
        return 1
    except AcmError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    doc = {"command": req["command"], "tolerance": tol, **doc}
    if opts.get("format", "json") == "text":
        text = "\n".join(lines + [f"tolerance: {tol!r}"])
    else:
        text = jsonio.dumps(doc)
    print(text, file=stdout)
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
