"""JSON conversion of library objects and parsing of polynomial text.

Rationals are written as "p" or "p/q" strings. Polynomials are written both
as ascending coefficient arrays and as display strings such as "λ²-1".
"""
from __future__ import annotations

import re
from fractions import Fraction

from .exact import Polynomial, RationalFunction, format_rational, to_rational

__all__ = [
    "parse_poly",
    "poly_from_json",
    "poly_to_json",
    "rf_from_json",
    "rf_to_json",
    "matrix_to_json",
    "chain_to_json",
    "classification_to_json",
    "report_to_json",
    "verdict_to_json",
]

_SUPERS = "⁰¹²³⁴⁵⁶⁷⁸⁹"
_FROM_SUP = str.maketrans(_SUPERS, "0123456789")
_TERM = re.compile(
    r"([+-])?"
    r"(?:\(([+-]?\d+(?:/\d+)?)\)|(\d+(?:/\d+)?))?"
    r"(\*?)"
    r"(?:([λxzt])(?:\^(\d+)|([" + _SUPERS + r"]+))?)?"
)


def parse_poly(text: str) -> Polynomial:
    """Parse text like "λ³-2λ+1/2", "x^2 - 1", "(1/3)λ" or "-1".

    A comma separated list ("1,0,-1") is read as ascending coefficients.
    """
    if not isinstance(text, str):
        raise TypeError("polynomial text must be a string")
    t = text.replace("−", "-").replace("**", "^").replace(" ", "")
    if not t:
        raise ValueError("empty polynomial")
    if "," in t:
        return Polynomial(to_rational(x) for x in t.split(","))
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(t):
        m = _TERM.match(t, pos)
        sign, pcoef, coef, star, var, pw, sup = m.groups()
        if m.end() == pos or (pos > 0 and sign is None):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        if coef is None and pcoef is None and var is None:
            raise ValueError(f"dangling sign or operator in {text!r}")
        if star and (var is None or (coef is None and pcoef is None)):
            raise ValueError(f"misplaced '*' in {text!r}")
        c = to_rational(pcoef or coef or "1")
        if sign == "-":
            c = -c
        if var is None:
            k = 0
        elif pw is not None:
            k = int(pw)
        elif sup is not None:
            k = int(sup.translate(_FROM_SUP))
        else:
            k = 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
    deg = max(coeffs)
    return Polynomial(coeffs.get(k, Fraction(0)) for k in range(deg + 1))


def poly_from_json(x) -> Polynomial:
    if isinstance(x, str):
        return parse_poly(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return Polynomial((x,))
    if isinstance(x, list):
        return Polynomial(to_rational(v) for v in x)
    raise TypeError("polynomial must be a string or an array of rationals")


def poly_to_json(p: Polynomial) -> dict:
    return {"coeffs": [format_rational(c) for c in p.coeffs], "display": p.display()}


def rf_from_json(obj) -> RationalFunction:
    if isinstance(obj, (str, list, int)):
        return RationalFunction(poly_from_json(obj), 1)
    return RationalFunction(poly_from_json(obj["num"]), poly_from_json(obj.get("den", "1")))


def rf_to_json(phi: RationalFunction) -> dict:
    return {
        "num": phi.num.display(),
        "den": phi.den.display(),
        "num_coeffs": [format_rational(c) for c in phi.num.coeffs],
        "den_coeffs": [format_rational(c) for c in phi.den.coeffs],
    }


def _q(x) -> str:
    return format_rational(x)


def _seq(s) -> list:
    return [_q(x) for x in s]


def matrix_to_json(W) -> dict:
    return {
        "coeffs": [[[_q(c) for c in w.coeffs] for w in row] for row in W.rows()],
        "display": [[w.display() for w in row] for row in W.rows()],
        "det_scale": _q(W.scale),
        "det_lambda_power": W.lambda_power,
    }


def chain_to_json(chain) -> list:
    return [
        {
            "gap": st.gap,
            "p": poly_to_json(st.p),
            "eps": st.eps,
            "a_sq": _q(st.a_sq),
            "induced": _seq(st.induced),
        }
        for st in chain.steps
    ]


def classification_to_json(cls) -> dict:
    return {
        "category": cls.category.value,
        "ell": cls.s.ell,
        "n": cls.s.n,
        "inertia": {
            "nu_plus": cls.inertia.nu_plus,
            "nu_zero": cls.inertia.nu_zero,
            "nu_minus": cls.inertia.nu_minus,
        },
        "normal_indices": list(cls.normal_indices.indices),
        "hankel_rank": cls.hankel_rank,
        "rank": cls.rank,
        "nu0": cls.nu0,
        "residual": _seq(cls.residual),
        "m_res": cls.m_res,
        "moment_scale": _q(cls.moment_scale),
        "chain": chain_to_json(cls.chain),
        "kappa_offsets": list(cls.chain.kappa_offsets),
    }


def descriptor_to_json(d) -> dict:
    out = {
        "W": matrix_to_json(d.W),
        "kappa": d.kappa,
        "nu_minus": d.nu_minus,
        "nu_zero": d.nu_zero,
        "tau_kappa": d.tau_kappa,
        "tau_condition": d.tau_condition,
        "tau_class": d.tau_class,
        "odd_shift": _q(d.odd_shift),
        "moment_scale": _q(d.moment_scale),
    }
    if d.p_hat is not None:
        out["eps_hat"] = d.eps_hat
        out["p_hat"] = poly_to_json(d.p_hat)
    return out


def report_to_json(rep) -> dict:
    """Top-level status is the reason code when solvable, UNSOLVABLE otherwise."""
    solvable = rep.status.value != "UNSOLVABLE"
    out = {
        "status": rep.reason.value if solvable else "UNSOLVABLE",
        "reason": rep.reason.value,
        "result": rep.status.value,
        "kappa": rep.instance.kappa,
        "kind": rep.instance.kind,
        "category": rep.classification.category.value,
    }
    if rep.unique_solution is not None:
        out["phi"] = rf_to_json(rep.unique_solution)
    if rep.descriptor is not None:
        out["descriptor"] = descriptor_to_json(rep.descriptor)
    return out


def verdict_to_json(v) -> dict:
    detail = {k: (_q(x) if isinstance(x, Fraction) else x) for k, x in v.detail.items()}
    return {"status": v.status, "failed_check": v.failed_check, "detail": detail}
