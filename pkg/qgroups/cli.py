"""
Command line interface ``qg``.

Every subcommand works on one presentation, chosen with ``--algebra``
(a bundled presentation, with ``--q`` and ``--N``) or ``--file`` (a *.qg
presentation file). Generators are named a, b, c, d for the 2x2 algebras,
w11, w12, ... for larger ones and em1, e0, e1 on the quantum spheres;
``x^*`` is the star of x.

Exit codes: 0 on success, 1 when a check fails, 2 on malformed input.

Examples
--------
    qg normalize --algebra slq2 "d*a"
    qg haar --algebra suq2 --spin-cutoff 1 "a*a^*"
    qg check-hopf --algebra sl_t1_2 --max-degree 2
    qg sphere --c "c(2)" check
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from functools import reduce as fold_left

from qgroups import __version__
from qgroups.corep import (CorepMatrix, clebsch_gordan_check, check_lorentz_X,
                           flip, fundamental, mor_space, spin_corep,
                           tensor_prod, trivial)
from qgroups.exceptions import CorepError, ParseError, QGroupsError
from qgroups.haar import build_pw_basis, check_pw_relations, gram_positivity, haar
from qgroups.hopf import (BUILTINS, DEFAULT_CHECK_DEGREE, antipode, builtin,
                          check_hopf_axioms, delta, star)
from qgroups.io import read_presentation, serialize_presentation
from qgroups.linalg import format_matrix, identity, parse_matrix
from qgroups.ncalg import critical_pairs, format_element, format_word, parse_element
from qgroups.report import CheckReport
from qgroups.scalar import Involution, format_scalar
from qgroups.sphere import (check_coaction, check_star_consistency, coaction,
                            sphere_presentation, u1_equivalence)

__all__ = ['main']

logger = logging.getLogger(__name__)

_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _presentation(args, default="slq2"):
    if args.file:
        return read_presentation(args.file)
    name = args.algebra or default
    if name == "sphere":
        raise ValueError("use the 'sphere' subcommand for quantum spheres")
    q = None if args.q in (None, "symbolic") else args.q
    return builtin(name, q=q, N=args.N)


def _element(text, P):
    star_map = (lambda x: star(x, P)) if P.has_star else None
    return P.reduce(parse_element(text, P.alphabet, P.field, star=star_map))


def _corep(text, P):
    """Parse ``w``, ``trivial``, ``spin:L``, JSON matrices and ``@`` products."""
    factors = []
    for piece in text.split("@"):
        piece = piece.strip()
        if piece == "w":
            factors.append(fundamental(P))
        elif piece == "trivial":
            factors.append(trivial(P))
        elif piece.startswith("spin:"):
            factors.append(spin_corep(piece[5:], P))
        else:
            try:
                rows = json.loads(piece)
            except json.JSONDecodeError as exc:
                raise ParseError("invalid corepresentation {!r}: {}".format(piece, exc.msg),
                                 exc.lineno, exc.colno)
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise ParseError("a corepresentation matrix must be a list of rows")
            parsed = [[_element(str(x), P) for x in row] for row in rows]
            factors.append(CorepMatrix(parsed, P, check=False))
    return fold_left(tensor_prod, factors)


def _emit(out, args, text, payload):
    if args.format == "json":
        out.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    else:
        out.write(text + "\n")


def _emit_report(out, args, report, extra=None):
    if args.format == "json":
        payload = report.to_dict()
        payload.update(extra or {})
        out.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    else:
        out.write(repr(report))
    return 0 if report.passed else 1


def cmd_normalize(args, out):
    P = _presentation(args)
    text = format_element(_element(args.element, P))
    _emit(out, args, text, {"element": text})
    return 0


def cmd_delta(args, out):
    P = _presentation(args)
    text = format_element(delta(_element(args.element, P), P))
    _emit(out, args, text, {"delta": text})
    return 0


def cmd_antipode(args, out):
    P = _presentation(args)
    text = format_element(antipode(_element(args.element, P), P))
    _emit(out, args, text, {"antipode": text})
    return 0


def cmd_star(args, out):
    P = _presentation(args)
    text = format_element(star(_element(args.element, P), P))
    _emit(out, args, text, {"star": text})
    return 0


def cmd_check_hopf(args, out):
    P = _presentation(args)
    return _emit_report(out, args, check_hopf_axioms(P, args.max_degree))


def cmd_corep(args, out):
    P = _presentation(args)
    v = _corep(args.corep, P)
    return _emit_report(out, args, v.verify(), {"matrix": v.format()})


def cmd_mor(args, out):
    P = _presentation(args)
    v, w = _corep(args.v, P), _corep(args.w, P)
    basis = mor_space(v, w)
    matrices = [json.loads(format_matrix(A)) for A in basis]
    text = "dim Mor = {}".format(len(basis))
    for A in basis:
        text += "\n" + format_matrix(A)
    _emit(out, args, text, {"dimension": len(basis), "basis": matrices})
    return 0


def cmd_spin(args, out):
    P = _presentation(args)
    v = spin_corep(args.spin, P)
    _emit(out, args, v.to_json(), {"spin": args.spin, "matrix": v.format()})
    return 0


def cmd_clebsch(args, out):
    P = _presentation(args)
    return _emit_report(out, args, clebsch_gordan_check(args.a, args.b, P))


def cmd_haar(args, out):
    P = _presentation(args, default="suq2")
    B = build_pw_basis(P, args.spin_cutoff)
    text = format_scalar(haar(_element(args.element, P), B))
    _emit(out, args, text, {"haar": text})
    return 0


def cmd_pw_check(args, out):
    P = _presentation(args, default="suq2")
    cutoff = max(Fraction(args.spin_cutoff), Fraction(args.alpha) + Fraction(args.beta))
    B = build_pw_basis(P, cutoff)
    return _emit_report(out, args, check_pw_relations(args.alpha, args.beta, B))


def cmd_gram(args, out):
    P = _presentation(args, default="suq2")
    result = gram_positivity(args.degree, Fraction(args.at), P=P)
    extra = {
        "words": result.words,
        "minors": [str(m) for m in result.minors],
        "min_eigenvalue": result.min_eigenvalue,
    }
    return _emit_report(out, args, result.report(), extra)


def cmd_sphere(args, out):
    q = None if args.q in (None, "symbolic") else args.q
    S = sphere_presentation(q, args.c)
    if args.rho is not None:
        S = S.with_rho(args.rho)
    if args.action == "check":
        report = check_coaction(S)
        report.extend(check_star_consistency(S, args.max_degree))
        try:
            u1_equivalence(S)
            report.add("u1-equivalence", True, "invertible element of Mor(u, v^1)")
        except CorepError as exc:
            report.add("u1-equivalence", False, exc.value)
        return _emit_report(out, args, report)
    if args.element is None:
        raise ValueError("sphere {} needs an element".format(args.action))
    x = S.element(args.element)
    if args.action == "normalize":
        text = format_element(S.reduce(x))
    else:
        text = format_element(coaction(x, S))
    _emit(out, args, text, {args.action: text})
    return 0


def cmd_lorentz(args, out):
    P = _presentation(args, default="suq2")
    if args.matrix == "flip":
        X = flip(P.field)
    elif args.matrix in ("1", "identity"):
        X = identity(4, P.field)
    else:
        X = parse_matrix(args.matrix, P.field)
    return _emit_report(out, args, check_lorentz_X(X, Involution.from_text(args.involution), P))


def cmd_parse(args, out):
    P = _presentation(args)
    text = serialize_presentation(P)
    report = CheckReport("rewrite system of {}".format(P.name or "presentation"))
    report.add("rules", True, "{} rules, {} central".format(
        len(P.rewrite.rules), len(P.rewrite.central_rules)))
    bad = next(((w, d) for w, d in critical_pairs(P.rewrite) if d), None)
    if bad is None:
        report.add("confluence", True, "all critical pairs resolve")
    else:
        report.add("confluence", False, "critical pair does not resolve",
                   format_word(bad[0], P.alphabet))
    if args.format == "json":
        return _emit_report(out, args, report, {"presentation": text})
    out.write(text)
    return _emit_report(out, args, report)


def _parse_args(argv):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=[b for b in BUILTINS if b != "sphere"],
                        help="bundled presentation (default slq2, suq2 for Haar commands)")
    common.add_argument("--N", type=int, help="matrix size for slqN")
    common.add_argument("--q", help="value of q, 'symbolic' by default")
    common.add_argument("--file", help="presentation file (*.qg)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for info, -vv for debug messages")

    parser = argparse.ArgumentParser(
        prog="qg",
        description="Exact computations in quantum groups and quantum spheres. "
                    "Generators: a b c d (2x2), w11 w12 ... (NxN), em1 e0 e1 (spheres); "
                    "x^* is the star of x.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    for name, func, help_ in (
        ("normalize", cmd_normalize, "normal form of an element"),
        ("delta", cmd_delta, "comultiplication of an element"),
        ("antipode", cmd_antipode, "antipode of an element"),
        ("star", cmd_star, "star of an element"),
    ):
        command(name, func, help_).add_argument("element")

    p = command("check-hopf", cmd_check_hopf, "verify the Hopf (and Hopf-*) axioms")
    p.add_argument("--max-degree", type=int, default=DEFAULT_CHECK_DEGREE,
                   help="check basis words up to this degree (default %(default)s)")

    p = command("corep", cmd_corep, "verify a corepresentation matrix")
    p.add_argument("corep", help="w, trivial, spin:L, a JSON matrix, or products joined by @")

    p = command("mor", cmd_mor, "basis of the intertwiner space Mor(v, w)")
    p.add_argument("v")
    p.add_argument("w")

    p = command("spin", cmd_spin, "spin-l corepresentation")
    p.add_argument("spin", help="half-integer such as 1 or 3/2")

    p = command("clebsch", cmd_clebsch, "Clebsch-Gordan multiplicities of v^a ⊗ v^b")
    p.add_argument("a")
    p.add_argument("b")

    p = command("haar", cmd_haar, "Haar functional of an element")
    p.add_argument("element")
    p.add_argument("--spin-cutoff", default="1")

    p = command("pw-check", cmd_pw_check, "orthogonality relations for spins alpha and beta")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("--spin-cutoff", default="1")

    p = command("gram", cmd_gram, "positivity of the Haar Gram matrix at q = q0")
    p.add_argument("degree", type=int)
    p.add_argument("--at", default="1/2", help="rational q0 in (0, 1)")

    p = command("sphere", cmd_sphere, "quantum spheres and their coaction")
    p.add_argument("action", choices=("check", "normalize", "coaction"))
    p.add_argument("element", nargs="?")
    p.add_argument("--c", default="c", help="c, inf, c(n) or a scalar")
    p.add_argument("--rho", help="replace rho in the first relation")
    p.add_argument("--max-degree", type=int, default=3,
                   help="degree of the star consistency check (default %(default)s)")

    p = command("lorentz", cmd_lorentz, "conditions on X for a quantum Lorentz group")
    p.add_argument("matrix", help="flip, 1 or a JSON 4x4 matrix")
    p.add_argument("--involution", default="identity")

    command("parse", cmd_parse, "read a presentation and report on its rewrite system")

    return parser.parse_args(argv)


def _message(exc):
    if isinstance(exc, ParseError):
        return "{} at line {}, col {}".format(exc.value, exc.line, exc.col)
    if isinstance(exc, QGroupsError):
        return str(exc.value)
    return str(exc)


def main(argv=None, out=None):
    """Run ``qg`` with `argv` and return the exit code."""
    args = _parse_args(argv)
    out = sys.stdout if out is None else out
    logging.basicConfig(
        level=_LEVELS[min(args.verbose, len(_LEVELS) - 1)],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args, out)
    except (QGroupsError, ValueError) as exc:
        logger.debug("%s failed", args.command, exc_info=True)
        sys.stderr.write("qg {}: error: {}\n".format(args.command, _message(exc)))
        return 2


if __name__ == "__main__":
    sys.exit(main())
