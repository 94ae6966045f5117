"""Command-line interface: ``skewdyn <command> SYSTEM.json [flags]``.

Exit codes: 0 success, 2 input error, 3 command not applicable to the
system, 4 inconclusive-up-to-bound verdict under ``--strict``.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import serialize as ser
from .algebra import NotUnimodularError
from .closure import (
    InsufficientPointsError,
    binomial_closure,
    component_count,
    density_probe,
    relation_lattice,
)
from .invariants import period_search, semi_invariants_total, skew_line_reports
from .straighten import Diagonalized, ExtensionCertificate, NoInvariantUpToBound, straighten
from .system import InvalidSystemError, PointState, cocycle, gauge_conjugate, orbit

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_APPLICABLE = 3
EXIT_INCONCLUSIVE = 4

ORBIT_STEP_CAP = 512

COMMANDS = ("check", "orbit", "cocycle", "gauge", "invariant-line", "semi-invariants",
            "straighten", "density", "closure", "components", "period")


class CommandError(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


@dataclass
class Report:
    command: str
    inputs: dict
    result: object = None
    bounds: dict = field(default_factory=dict)
    timing: float = 0.0
    inconclusive: bool = False
    error: str = None

    def document(self):
        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "bounds": self.bounds,
            "timing": {"seconds": round(self.timing, 6)},
        }
        if self.error is not None:
            doc["error"] = self.error
        return doc


def format_report(report):
    """Canonical JSON text: sorted keys, rationals as strings."""
    return ser.dumps(report.document())


def default_max_degree(s):
    return 2 * s.n * (s.degree + 1) + 4


def build_parser():
    p = argparse.ArgumentParser(prog="skewdyn", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("system", help="system file (JSON)")
    p.add_argument("--max-deg", type=int, help="degree bound for line / period searches")
    p.add_argument("--deg-x", type=int, default=2, help="x-degree bound")
    p.add_argument("--deg-y", type=int, default=2, help="y-degree bound")
    p.add_argument("--steps", type=int, help="orbit length, cocycle order or period bound")
    p.add_argument("--points", type=int, help="number of orbit points for density")
    p.add_argument("--start", help='start point "x;y1,...,yN"')
    p.add_argument("--point", help='fiber point "b1,...,bN" for closure')
    p.add_argument("--gauge", help="gauge matrix file (same schema as systems)")
    p.add_argument("--poly", help="polynomial as JSON [[exponents, coefficient], ...]")
    p.add_argument("--strict", action="store_true", help="exit 4 on inconclusive verdicts")
    p.add_argument("--output", help="write the report here instead of stdout")
    return p


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CommandError(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None


def _load_system(path):
    try:
        return ser.parse_system(_read(path))
    except InvalidSystemError as exc:
        raise CommandError(EXIT_INPUT, f"{path}: not in GL_n(Q[x]): {exc}") from None
    except (ser.SystemFileError, ValueError) as exc:
        raise CommandError(EXIT_INPUT, f"{path}: {exc}") from None


def _rats(text, what):
    try:
        return [ser.parse_rat(t) for t in text.split(",")] if text.strip() else []
    except ser.SystemFileError as exc:
        raise CommandError(EXIT_INPUT, f"bad {what}: {exc}") from None


def _parse_start(text, n):
    if text is None:
        raise CommandError(EXIT_INPUT, "--start is required")
    if ";" not in text:
        raise CommandError(EXIT_INPUT, '--start must look like "x;y1,...,yN"')
    xs, ys = text.split(";", 1)
    x = _rats(xs, "start x")
    y = _rats(ys, "start y")
    if len(x) != 1 or len(y) != n:
        raise CommandError(EXIT_INPUT, f"--start needs one x and {n} y coordinates")
    return PointState(x[0], tuple(y))


def _require_diagonal(s, command):
    if not s.is_constant_diagonal():
        raise CommandError(EXIT_NOT_APPLICABLE,
                           f"{command} applies only to constant diagonal systems")


def _nonneg(value, flag):
    if value is not None and value < 0:
        raise CommandError(EXIT_INPUT, f"{flag} must be nonnegative")
    return value


# -- command handlers: each fills in report.result / bounds ----------------

def _cmd_check(s, args, rep):
    rep.result = {"n": s.n, "det_constant": ser.rat(s.det_constant), "matrix": ser.matrix(s.A),
                  "degree": s.degree}


def _cmd_orbit(s, args, rep):
    steps = _nonneg(args.steps, "--steps")
    steps = ORBIT_STEP_CAP if steps is None else steps
    start = _parse_start(args.start, s.n)
    rep.inputs["start"] = ser.point(start)
    rep.bounds["steps"] = steps
    rep.result = [ser.point(p) for p in orbit(s, start, steps)]


def _cmd_cocycle(s, args, rep):
    m = 1 if args.steps is None else args.steps
    if m < 1:
        raise CommandError(EXIT_INPUT, "--steps must be >= 1 for cocycle")
    rep.bounds["steps"] = m
    rep.result = {"matrix": ser.matrix(cocycle(s, m))}


def _cmd_gauge(s, args, rep):
    if not args.gauge:
        raise CommandError(EXIT_INPUT, "--gauge is required")
    try:
        n, T, _ = ser.parse_matrix_document(_read(args.gauge))
    except ser.SystemFileError as exc:
        raise CommandError(EXIT_INPUT, f"{args.gauge}: {exc}") from None
    if n != s.n:
        raise CommandError(EXIT_INPUT, f"gauge is {n}x{n}, system is {s.n}x{s.n}")
    try:
        conj = gauge_conjugate(s, T)
    except NotUnimodularError as exc:
        raise CommandError(EXIT_INPUT, f"gauge not invertible over Q[x]: {exc}") from None
    rep.inputs["gauge"] = ser.matrix(T)
    rep.result = {"matrix": ser.matrix(conj.A), "det_constant": ser.rat(conj.det_constant)}


def _cmd_invariant_line(s, args, rep):
    m = _nonneg(args.max_deg, "--max-deg")
    m = default_max_degree(s) if m is None else m
    rep.bounds["max_deg"] = m
    reports = skew_line_reports(s, m)
    lines = [ln for r in reports for ln in r.verified]
    ext = [ser.poly(r.extension_poly) for r in reports if r.extension_poly.degree > 0]
    rep.bounds.update(searched_degree=reports[-1].degree,
                      family=any(r.family for r in reports),
                      extension_candidate=ext[-1] if ext else None)
    rep.result = [ser.skew_line(ln) for ln in lines] or None
    rep.inconclusive = not lines


def _cmd_semi_invariants(s, args, rep):
    D = args.deg_y
    E = _nonneg(args.deg_x, "--deg-x")
    if D < 1:
        raise CommandError(EXIT_INPUT, "--deg-y must be >= 1")
    rep.bounds.update(deg_x=E, deg_y=D)
    found = semi_invariants_total(s, D, E)
    rep.result = [ser.semi_invariant(si) for si in found] or None
    rep.inconclusive = not found


def _cmd_straighten(s, args, rep):
    if s.n != 2:
        raise CommandError(EXIT_NOT_APPLICABLE, "straighten applies only to N = 2")
    m = _nonneg(args.max_deg, "--max-deg")
    m = default_max_degree(s) if m is None else m
    rep.bounds["max_deg"] = m
    verdict = straighten(s, m)
    if isinstance(verdict, Diagonalized):
        rep.result = {"verdict": "Diagonalized",
                      "form": ser.straight_form(verdict.form, verdict.form.verify(s))}
    elif isinstance(verdict, ExtensionCertificate):
        rep.result = {"verdict": "ExtensionCertificate", "minimal_polynomial": ser.poly(verdict.poly),
                      "gauge": ser.matrix(verdict.gauge.T)}
    else:
        assert isinstance(verdict, NoInvariantUpToBound)
        rep.result = {"verdict": "NoInvariantUpToBound", "max_deg": verdict.max_degree}
        rep.inconclusive = True


def _cmd_density(s, args, rep):
    start = _parse_start(args.start, s.n)
    E = _nonneg(args.deg_x, "--deg-x")
    D = _nonneg(args.deg_y, "--deg-y")
    M = args.points
    if M is None:
        raise CommandError(EXIT_INPUT, "--points is required")
    rep.inputs["start"] = ser.point(start)
    rep.bounds.update(deg_x=E, deg_y=D, points=M)
    try:
        vb = density_probe(s, start, M, E, D)
    except InsufficientPointsError as exc:
        raise CommandError(EXIT_INPUT, str(exc)) from None
    rep.bounds["monomials"] = len(vb.monomials)
    rep.result = {"basis": [ser.multipoly(P) for P in vb.basis],
                  "text": [str(P) for P in vb.basis]} if vb.basis else None


def _cmd_closure(s, args, rep):
    _require_diagonal(s, "closure")
    if args.point is None:
        raise CommandError(EXIT_INPUT, "--point is required")
    b = _rats(args.point, "point")
    if len(b) != s.n:
        raise CommandError(EXIT_INPUT, f"--point needs {s.n} coordinates")
    desc = binomial_closure(s.diagonal_entries(), b)
    rep.inputs["point"] = [ser.rat(v) for v in b]
    rep.result = {
        "lattice": [list(r) for r in desc.lattice.basis],
        "binomials": [ser.multipoly(P) for P in desc.binomials],
        "text": [str(P) for P in desc.binomials],
        "dimension": desc.dimension,
        "components": desc.components,
        "zero_coordinates": list(desc.zero_coordinates),
        "subset_certificate": True,
    }


def _cmd_components(s, args, rep):
    _require_diagonal(s, "components")
    lat = relation_lattice(s.diagonal_entries())
    rep.result = {"lattice": [list(r) for r in lat.basis], "components": component_count(lat)}


def _cmd_period(s, args, rep):
    if not args.poly:
        raise CommandError(EXIT_INPUT, "--poly is required")
    try:
        P = ser.parse_multipoly(json.loads(args.poly), s.n)
    except (ValueError, ser.SystemFileError) as exc:
        raise CommandError(EXIT_INPUT, f"bad --poly: {exc}") from None
    if P.is_zero():
        raise CommandError(EXIT_INPUT, "--poly must be nonzero")
    m_max = args.steps if args.steps is not None else (args.max_deg or 12)
    if m_max < 1:
        raise CommandError(EXIT_INPUT, "period bound must be >= 1")
    rep.inputs["poly"] = ser.multipoly(P)
    rep.bounds["max_period"] = m_max
    period = period_search(s, P, m_max)
    rep.result = {"period": period}
    rep.inconclusive = period is None


HANDLERS = {
    "check": _cmd_check,
    "orbit": _cmd_orbit,
    "cocycle": _cmd_cocycle,
    "gauge": _cmd_gauge,
    "invariant-line": _cmd_invariant_line,
    "semi-invariants": _cmd_semi_invariants,
    "straighten": _cmd_straighten,
    "density": _cmd_density,
    "closure": _cmd_closure,
    "components": _cmd_components,
    "period": _cmd_period,
}


def run(argv):
    """Parse ``argv`` and execute; returns ``(report, exit_code)``."""
    return execute(build_parser().parse_args(argv))


def execute(args):
    rep = Report(command=args.command, inputs={"system": args.system})
    t0 = time.perf_counter()
    try:
        s = _load_system(args.system)
        rep.inputs["matrix"] = ser.matrix(s.A)
        HANDLERS[args.command](s, args, rep)
    except CommandError as exc:
        rep.error = str(exc)
        rep.timing = time.perf_counter() - t0
        return rep, exc.code
    rep.timing = time.perf_counter() - t0
    if rep.inconclusive and args.strict:
        return rep, EXIT_INCONCLUSIVE
    return rep, EXIT_OK


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    rep, code = execute(args)
    if rep.error:
        print(f"skewdyn {rep.command}: {rep.error}", file=sys.stderr)
    text = format_report(rep)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"skewdyn: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
