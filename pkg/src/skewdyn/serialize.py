"""JSON encodings for systems, polynomials and results.

Rationals are strings "p" or "p/q".  A univariate polynomial is the list of
its coefficients in ascending degree ("x + 3" is ["3", "1"]; zero is []).
A multivariate polynomial is a list of [exponents, coefficient] pairs in
graded-lex order, exponents listed as (x, y1, ..., yN).
"""

import json
from fractions import Fraction

from .algebra import MultiPoly, Poly, PolyMatrix
from .system import validate


class SystemFileError(ValueError):
    """Malformed system document."""


def rat(q):
    return str(Fraction(q))


def parse_rat(text):
    if isinstance(text, bool):
        raise SystemFileError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise SystemFileError(f"not a rational: {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise SystemFileError(f"not a rational: {text!r}") from None


def poly(p):
    return [rat(c) for c in p.coeffs]


def parse_poly(data):
    if not isinstance(data, list):
        raise SystemFileError(f"polynomial must be a list of coefficients, got {data!r}")
    return Poly([parse_rat(c) for c in data])


def matrix(M):
    return [[poly(e) for e in row] for row in M.rows]


def parse_matrix(data, n):
    if not isinstance(data, list) or len(data) != n:
        raise SystemFileError(f"matrix must have {n} rows")
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            raise SystemFileError(f"row {i} must have {n} entries")
        rows.append([parse_poly(e) for e in row])
    return PolyMatrix(rows)


def multipoly(P):
    return [[list(e), rat(c)] for e, c in P.sorted_terms()]


def parse_multipoly(data, n):
    if not isinstance(data, list):
        raise SystemFileError("polynomial must be a list of [exponents, coefficient] pairs")
    terms = {}
    for item in data:
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], list)):
            raise SystemFileError(f"bad term {item!r}")
        exps = item[0]
        if len(exps) != n + 1 or not all(isinstance(k, int) and k >= 0 for k in exps):
            raise SystemFileError(f"exponent vector {exps!r} must have {n + 1} nonnegative entries")
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + parse_rat(item[1])
    return MultiPoly(n + 1, terms)


def _load(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemFileError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse_matrix_document(text):
    """(n, PolyMatrix, metadata) from a system document, without validation."""
    doc = _load(text)
    if not isinstance(doc, dict):
        raise SystemFileError("document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SystemFileError("field 'n' must be a positive integer")
    if "matrix" not in doc:
        raise SystemFileError("missing field 'matrix'")
    M = parse_matrix(doc["matrix"], n)
    meta = {k: doc[k] for k in ("name", "notes") if k in doc}
    return n, M, meta


def parse_system(text):
    """Validated SkewSystem from a system document."""
    n, M, _ = parse_matrix_document(text)
    return validate(n, M)


def system_document(s, **meta):
    doc = {"n": s.n, "matrix": matrix(s.A)}
    doc.update(meta)
    return json.dumps(doc, sort_keys=True)


def point(p):
    return {"x": rat(p.x), "y": [rat(v) for v in p.y]}


def skew_line(line):
    return {"c": rat(line.c), "v": [poly(p) for p in line.v]}


def semi_invariant(si):
    return {"q": rat(si.q), "basis": [multipoly(P) for P in si.basis],
            "text": [str(P) for P in si.basis]}


def straight_form(form, verified):
    return {
        "B": [rat(a) for a in form.B],
        "gauge": matrix(form.gauge.T),
        "verified": verified,
        "provenance": [{"kind": st.kind, "gauge": matrix(st.gauge)} for st in form.provenance],
    }


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
