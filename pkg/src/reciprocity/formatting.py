"""Small helpers for printing algebraic values in re-parseable form."""

from __future__ import annotations


def needs_parens(s: str) -> bool:
    return any(ch in s for ch in " +-")


def term_string(coeff_str: str, var: str, exponent: int) -> str:
    """One product term, e.g. ('3', 'z', -1) -> '3*z^-1'."""
    if exponent == 0 or not var:
        return coeff_str
    if exponent == 1:
        var_part = var
    else:
        var_part = f"{var}^{exponent}"
    if coeff_str == "1":
        return var_part
    if needs_parens(coeff_str):
        coeff_str = f"({coeff_str})"
    return f"{coeff_str}*{var_part}"


def format_terms(terms, var: str, descending: bool = False) -> str:
    """Join (coeff_str, is_negative, exponent) triples into an expression.

    coeff_str must be the string of the absolute value when is_negative.
    """
    terms = sorted(terms, key=lambda t: t[2], reverse=descending)
    if not terms:
        return "0"
    parts = []
    for i, (coeff, neg, e) in enumerate(terms):
        body = term_string(coeff, var, e)
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def split_sign(elem) -> tuple[str, bool]:
    """String of |elem| and a negativity flag (rationals only; others positive)."""
    from fractions import Fraction

    data = elem.data
    if isinstance(data, Fraction) and data < 0:
        return str(-data), True
    return str(elem), False
