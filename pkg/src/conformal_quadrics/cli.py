"""Command line front end.

Every subcommand reads one JSON request (or an array of requests) from a
file argument or standard input and writes JSON to standard output.

Exit codes: 0 ok, 1 malformed input, 2 domain rejection (invalid
hypersurface, sign or signature mismatch, ...), 3 numeric verification
failure.  For a batch the largest code wins.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable

import numpy as np

from . import _linalg as la
from . import serialize as ser
from .exceptions import DomainError, NumericalError, SignMismatch
from .forms import eval_Q
from .grassmannian import (
    Plane2,
    is_decomposable,
    plucker,
    to_standard_N22,
    unplucker,
    wedge_Q,
)
from .projective import ProjectivePoint, embed, hyperplane, quadric_intersection_dim, unembed
from .quadric_surfaces import (
    Hypersurface,
    Sign,
    act_hypersurface,
    act_surface,
    projective_to_affine,
    same_orbit_given_realizations,
    sample_rational_points,
)
from .transforms import ConformalMap, act_affine, act_point, decompose
from .witt import TOL_OUT, orbit_map_hypersurface

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_NUMERIC = 0, 1, 2, 3


class Refusal(Exception):
    """Domain rejection that still carries a partial result."""

    def __init__(self, reason: str, result: dict | None = None):
        super().__init__(reason)
        self.result = result


# -- commands ---------------------------------------------------------------------


def cmd_classify(req: dict, opts) -> dict:
    space = ser.parse_space(req)
    if "normal" in req:
        a = ser.parse_vector(req["normal"])
    else:
        q = ser.parse_affine_quadric(req, space)
        a = (q.gamma - q.alpha,) + q.beta + (-q.gamma - q.alpha,)
    if len(a) != space.dim + 2 or la.is_zero(a):
        raise ValueError(f"normal must be a nonzero vector of length {space.dim + 2}")
    sign = Sign.of(eval_Q(space.lifted(), a))
    dim = quadric_intersection_dim(space, hyperplane(space, a))
    result = {
        "sign": str(sign),
        "normal": ser.vector(la.primitive(a)),
        "intersection_dimension": dim,
    }
    try:
        H = Hypersurface(space, a)
    except DomainError as exc:
        raise Refusal(str(exc), {"valid": False, **result}) from None
    return {"valid": True, **result, "affine": ser.affine_quadric(projective_to_affine(H))}


def cmd_embed(req: dict, opts) -> dict:
    space = ser.parse_space(req)
    return {"point": ser.point(embed(space, ser.parse_vector(req["x"])))}


def cmd_unembed(req: dict, opts) -> dict:
    space = ser.parse_space(req)
    x = unembed(space, ProjectivePoint(ser.parse_vector(req["point"])))
    return {"x": None if x is None else ser.vector(x)}


def cmd_act(req: dict, opts) -> dict:
    space = ser.parse_space(req)
    M = ConformalMap(space, ser.parse_matrix(req["matrix"]))
    if "x" in req:
        y = act_affine(M, ser.parse_vector(req["x"]))
        return {"x": None if y is None else ser.vector(y)}
    if "point" in req:
        return {"point": ser.point(act_point(M, ser.parse_vector(req["point"])))}
    if "normal" in req or "alpha" in req:
        H = act_hypersurface(M, ser.parse_hypersurface(req, space))
        return {**ser.hypersurface(H), "affine": ser.affine_quadric(projective_to_affine(H))}
    if "basis" in req:
        return ser.surface(act_surface(M, ser.parse_surface(req, space)))
    raise KeyError("act needs one of: x, point, normal, alpha/beta/gamma, basis")


def cmd_orbit_map(req: dict, opts) -> dict:
    space = ser.parse_space(req)
    src, tgt = req["source"], req["target"]
    if "basis" in src or "basis" in tgt:
        s1, s2 = ser.parse_surface(src, space), ser.parse_surface(tgt, space)
        w = same_orbit_given_realizations(s1, s2, tol_out=opts.tolerance)
        if w is None:
            raise Refusal(
                "signature mismatch",
                {"source_signature": list(s1.signature), "target_signature": list(s2.signature)},
            )
    else:
        H1, H2 = ser.parse_hypersurface(src, space), ser.parse_hypersurface(tgt, space)
        try:
            w = orbit_map_hypersurface(H1, H2)
        except SignMismatch:
            raise Refusal("sign mismatch", {"source_sign": str(H1.sign), "target_sign": str(H2.sign)}) from None
        if w.orthogonality_residual > opts.tolerance or w.image_residual > opts.tolerance:
            raise NumericalError("orbit map residuals exceed the requested tolerance")
    out: dict[str, Any] = {"matrix": ser.matrix(w.matrix)}
    if not w.exact:
        out["mode"] = "float"
        out["residuals"] = {"orthogonality": w.orthogonality_residual, "image": w.image_residual}
        out["tolerance"] = opts.tolerance
    return out


def cmd_decompose(req: dict, opts) -> dict:
    space = ser.parse_space(req)
    M = ConformalMap(space, ser.parse_matrix(req["matrix"]))
    return {"word": ser.word(decompose(M))}


def cmd_grassmann(req: dict, opts) -> dict:
    if "plane" in req:
        u, w = req["plane"]
        v = plucker(Plane2(ser.parse_vector(u), ser.parse_vector(w)))
    else:
        v = ser.parse_vector(req["wedge"])
    dec = is_decomposable(v)
    out = {
        "plucker": ser.vector(v),
        "wedge_Q": ser.rational(wedge_Q(v)),
        "decomposable": dec,
        "standard_point": ser.point(to_standard_N22(v)),
    }
    if dec:
        P = unplucker(v)
        out["plane"] = [ser.vector(P.u), ser.vector(P.w)]
    return out


def cmd_sample(req: dict, opts) -> dict:
    space = ser.parse_space(req)
    s = ser.parse_surface(req, space)
    pts = sample_rational_points(space, s.subspace, int(req.get("count", 10)), seed=opts.seed)
    return {"points": [ser.point(P) for P in pts]}


def plot_rows(req: dict, samples: int) -> list[tuple[float, float]]:
    """Real points of a curve alpha Q + B(beta, x) + gamma = 0 in a plane.

    For each x1 on a grid, solve the quadratic in x2.
    """
    space = ser.parse_space(req)
    if space.dim != 2:
        raise ValueError("plot is only available for p + q = 2")
    q = ser.parse_affine_quadric(req, space)
    lo, hi = (float(v) for v in req.get("range", [-3, 3]))
    j1, j2 = space.diagonal
    al, (b1, b2), ga = float(q.alpha), (float(x) for x in q.beta), float(q.gamma)
    rows = []
    for x1 in np.linspace(lo, hi, samples):
        a = al * j2
        b = b2 * j2
        c = al * j1 * x1 * x1 + b1 * j1 * x1 + ga
        if a == 0:
            if b != 0:
                rows.append((x1, -c / b))
            continue
        disc = b * b - 4 * a * c
        if disc < 0:
            continue
        r = np.sqrt(disc)
        roots = {(-b - r) / (2 * a), (-b + r) / (2 * a)}
        rows += [(x1, x2) for x2 in sorted(roots) if lo <= x2 <= hi]
    return rows


COMMANDS: dict[str, Callable[[dict, Any], dict]] = {
    "classify": cmd_classify,
    "embed": cmd_embed,
    "unembed": cmd_unembed,
    "act": cmd_act,
    "orbit-map": cmd_orbit_map,
    "decompose": cmd_decompose,
    "grassmann": cmd_grassmann,
    "sample": cmd_sample,
}


# -- driver -----------------------------------------------------------------------


def run_request(command: str, req: Any, opts) -> tuple[int, dict]:
    """Run one request; returns (exit code, response envelope)."""
    envelope: dict[str, Any] = {"command": command}
    try:
        if not isinstance(req, dict):
            raise TypeError("request must be a JSON object")
        result = COMMANDS[command](req, opts)
        envelope["mode"] = result.pop("mode", "exact")
        envelope.update(result=result)
        if envelope["mode"] == "float":
            envelope["residuals"] = result.pop("residuals")
            envelope["tolerance"] = result.pop("tolerance")
        return EXIT_OK, envelope
    except Refusal as exc:
        envelope.update(error=str(exc), kind="domain")
        if exc.result is not None:
            envelope["result"] = exc.result
        return EXIT_DOMAIN, envelope
    except NumericalError as exc:
        envelope.update(error=str(exc), kind="numeric")
        return EXIT_NUMERIC, envelope
    except DomainError as exc:
        envelope.update(error=str(exc), kind="domain")
        return EXIT_DOMAIN, envelope
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        envelope.update(error=str(exc), kind="input")
        return EXIT_INPUT, envelope


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conformal-quadrics",
        description="Conformal geometry of R^{p,q} and its compactification N^{p,q}.",
    )
    parser.add_argument("--tolerance", type=float, default=TOL_OUT, help="residual bound for float-mode results")
    parser.add_argument("--seed", type=int, default=0, help="seed for rational point sampling")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in list(COMMANDS) + ["plot"]:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", help="JSON request file (default: standard input)")
        if name == "plot":
            p.add_argument("--samples", type=int, default=201)
    return parser


def _read(path: str | None):
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    return json.loads(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = _read(args.input)
    except (OSError, json.JSONDecodeError) as exc:
        json.dump({"command": args.command, "error": str(exc), "kind": "input"}, sys.stdout)
        sys.stdout.write("\n")
        return EXIT_INPUT

    if args.command == "plot":
        try:
            rows = plot_rows(payload, args.samples)
        except (ValueError, TypeError, KeyError) as exc:
            sys.stderr.write(f"plot: {exc}\n")
            return EXIT_INPUT
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x1", "x2"])
        writer.writerows((f"{a + 0.0:.12g}", f"{b + 0.0:.12g}") for a, b in rows)
        sys.stdout.write(buf.getvalue())
        return EXIT_OK

    if isinstance(payload, list):
        with ThreadPoolExecutor() as pool:
            outcomes = list(pool.map(lambda r: run_request(args.command, r, args), payload))
        code = max((c for c, _ in outcomes), default=EXIT_OK)
        out: Any = [env for _, env in outcomes]
    else:
        code, out = run_request(args.command, payload, args)
    json.dump(out, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    return code
