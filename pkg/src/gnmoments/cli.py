"""JSON command line front end.

A request is a JSON object read from ``--json`` (a literal document, ``-``
for stdin, or ``@path``), from stdin when no flags are given, or assembled
from the shorthand flags::

    gnmoments --command solve --moments "1,0,1,0,1" --kappa 0

Exit status: 0 on OK/PASS, 1 on UNSOLVABLE/FAIL, 2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from jsonschema import Draft202012Validator

from . import __version__
from .errors import MomentError
from .exact import MomentSequence, format_rational as _q, laurent_expand, moments_from_expansion, to_rational
from .nevanlinna import apply_lft, check_parameter, kappa_of, verify_solution
from .serialize import (
    classification_to_json,
    report_to_json,
    rf_from_json,
    rf_to_json,
    verdict_to_json,
)
from .solver import ProblemInstance, Status, classify, solve

COMMANDS = ("analyze", "solve", "apply-tau", "verify", "expand")

_RATIONAL = {"type": "string", "pattern": r"^\s*[+\-−]?\d+\s*(/\s*\d+)?\s*$"}
_NUMBER = {"anyOf": [{"type": "integer"}, _RATIONAL]}
_POLY = {"anyOf": [{"type": "string", "minLength": 1}, {"type": "integer"}, {"type": "array", "items": _NUMBER}]}
_RF = {
    "type": "object",
    "properties": {"num": _POLY, "den": _POLY},
    "required": ["num"],
    "additionalProperties": False,
}


def _needs(command: str, *fields: str) -> dict:
    return {
        "if": {"properties": {"command": {"const": command}}, "required": ["command"]},
        "then": {"required": list(fields)},
    }


SCHEMA = {
    "type": "object",
    "properties": {
        "command": {"enum": list(COMMANDS)},
        "moments": {"type": "array", "items": _NUMBER, "minItems": 1},
        "kappa": {"type": "integer", "minimum": 0},
        "kind": {"enum": ["MP", "IP"]},
        "tau": _RF,
        "phi": _RF,
        "order": {"type": "integer", "minimum": 0},
    },
    "required": ["command"],
    "additionalProperties": False,
    "allOf": [
        _needs("analyze", "moments"),
        _needs("solve", "moments", "kappa"),
        _needs("apply-tau", "moments", "kappa", "tau"),
        _needs("verify", "moments", "kappa", "phi"),
        _needs("expand", "phi", "order"),
    ],
}

_VALIDATOR = Draft202012Validator(SCHEMA)


class InputError(Exception):
    def __init__(self, errors: list[dict]):
        super().__init__(errors)
        self.errors = errors


def _pointer(path) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


def validate(request) -> None:
    errors = sorted(_VALIDATOR.iter_errors(request), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        raise InputError([{"path": _pointer(e.absolute_path), "message": e.message} for e in errors])


def _moments(req) -> MomentSequence:
    out = []
    for i, x in enumerate(req["moments"]):
        try:
            out.append(to_rational(x))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise InputError([{"path": f"/moments/{i}", "message": str(exc)}]) from None
    return MomentSequence(out)


def _rf(req, key):
    try:
        return rf_from_json(req[key])
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError([{"path": f"/{key}", "message": str(exc)}]) from None


def run_command(request: dict) -> tuple[dict, int]:
    """Validate and execute one request; returns (response, exit code)."""
    try:
        validate(request)
        return _dispatch(request)
    except InputError as exc:
        return _response(request, "INPUT_ERROR", {"errors": exc.errors}), 2


def _response(request, status, payload) -> dict:
    out = {"version": __version__}
    if isinstance(request, dict) and isinstance(request.get("command"), str):
        out["command"] = request["command"]
    out["status"] = status
    out.update(payload)
    return out


def _dispatch(req) -> tuple[dict, int]:
    cmd = req["command"]
    kind = req.get("kind", "MP")
    if cmd == "expand":
        phi = _rf(req, "phi")
        try:
            e = laurent_expand(phi, req["order"])
        except MomentError as exc:
            raise InputError([{"path": "/phi", "message": str(exc)}]) from None
        payload = {"phi": rf_to_json(phi), "coeffs": [_q(c) for c in e.coeffs]}
        if e.coeffs[0] == 0 and e.order >= 1:
            payload["moments"] = [_q(x) for x in moments_from_expansion(e, e.order - 1)]
        return _response(req, "OK", payload), 0

    s = _moments(req)
    if cmd == "analyze":
        return _response(req, "OK", {"classification": classification_to_json(classify(s))}), 0

    inst = ProblemInstance(s, req["kappa"], kind)
    if cmd == "solve":
        rep = solve(inst)
        body = report_to_json(rep)
        status = body.pop("status")
        return _response(req, status, body), (1 if rep.status is Status.UNSOLVABLE else 0)

    if cmd == "verify":
        phi = _rf(req, "phi")
        v = verify_solution(s, inst.kappa, kind, phi)
        body = verdict_to_json(v)
        status = body.pop("status")
        return _response(req, status, body), (0 if v.passed else 1)

    # apply-tau
    tau = _rf(req, "tau")
    rep = solve(inst)
    if rep.status is not Status.PARAMETRIZED:
        body = report_to_json(rep)
        body.pop("status")
        return _response(req, "NOT_PARAMETRIZED", body), 1
    d = rep.descriptor
    try:
        phi = apply_lft(d.W, tau)
    except MomentError as exc:
        raise InputError([{"path": "/tau", "message": str(exc)}]) from None
    chk = check_parameter(tau, d)
    admissible = d.admits(tau)
    payload = {
        "phi": rf_to_json(phi),
        "admissible": admissible,
        "parameter_check": {
            "kappa_tau": chk.kappa_tau,
            "satisfies_E": chk.satisfies_E,
            "satisfies_O": chk.satisfies_O,
            "in_subclass_1": chk.in_subclass_1,
            "tau_condition": d.tau_condition,
            "required_tau_kappa": d.required_tau_kappa(tau),
            "nu_readings": d.nu_readings(tau),
        },
    }
    if phi.is_strictly_proper():
        payload["kappa_phi"] = kappa_of(phi)
    return _response(req, "OK" if admissible else "INADMISSIBLE_PARAMETER", payload), (0 if admissible else 1)


def _int_or_raw(text):
    try:
        return int(text)
    except ValueError:
        return text


_VALUE_FLAGS = (
    "--command", "--moments", "--kappa", "--kind", "--tau-num",
    "--tau-den", "--phi-num", "--phi-den", "--order", "--json",
)


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-λ" or "-1,2" for an option; glue such values on
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1] not in _VALUE_FLAGS:
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def build_request(argv=None, stdin=None) -> dict:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    ap = argparse.ArgumentParser(prog="gnmoments", description=__doc__.split("\n\n")[0])
    ap.add_argument("--command")
    ap.add_argument("--moments")
    ap.add_argument("--kappa")
    ap.add_argument("--kind")
    ap.add_argument("--tau-num")
    ap.add_argument("--tau-den")
    ap.add_argument("--phi-num")
    ap.add_argument("--phi-den")
    ap.add_argument("--order")
    ap.add_argument("--json", dest="raw", help="request document, '-' for stdin, '@path' for a file")
    ap.add_argument("--version", action="version", version=__version__)
    a = ap.parse_args(argv)
    stdin = sys.stdin if stdin is None else stdin

    flags = [a.command, a.moments, a.kappa, a.kind, a.tau_num, a.tau_den, a.phi_num, a.phi_den, a.order]
    if a.raw is not None or all(f is None for f in flags):
        if a.raw is None or a.raw == "-":
            text = stdin.read()
        elif a.raw.startswith("@"):
            with open(a.raw[1:], encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = a.raw
        req = json.loads(text)
        if not isinstance(req, dict):
            return req
    else:
        req = {}
    if a.command is not None:
        req["command"] = a.command
    if a.moments is not None:
        req["moments"] = [x.strip() for x in a.moments.split(",")]
    if a.kappa is not None:
        req["kappa"] = _int_or_raw(a.kappa)
    if a.kind is not None:
        req["kind"] = a.kind
    if a.order is not None:
        req["order"] = _int_or_raw(a.order)
    for key, num, den in (("tau", a.tau_num, a.tau_den), ("phi", a.phi_num, a.phi_den)):
        if num is not None or den is not None:
            req[key] = {"num": num if num is not None else "1"}
            if den is not None:
                req[key]["den"] = den
    return req


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


def main(argv=None) -> int:
    try:
        req = build_request(argv)
    except json.JSONDecodeError as exc:
        resp = {"version": __version__, "status": "INPUT_ERROR", "errors": [{"path": "", "message": f"invalid JSON: {exc}"}]}
        print(dumps(resp))
        return 2
    except OSError as exc:
        resp = {"version": __version__, "status": "INPUT_ERROR", "errors": [{"path": "", "message": str(exc)}]}
        print(dumps(resp))
        return 2
    resp, code = run_command(req)
    sys.stdout.write(dumps(resp) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
