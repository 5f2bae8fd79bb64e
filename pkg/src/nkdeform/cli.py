"""Command-line surface of the engine.

Subcommands::

    tables prop-4.2 | thm-5.2-H | thm-5.2-SU3   curvature / deformation tables
    casimir --pair TAG --hw m1,m2,...           one Casimir eigenvalue
    branch --coset NAME --hw m1,m2,...          restriction to the isotropy algebra
    tensor --algebra TAG --a ... --b ...        tensor product decomposition
    clifford-verify                             run the exact identity suite

Every command accepts ``--format text|json``.  JSON output is deterministic
(sorted keys) and serializes every rational as {"num": int, "den": int}.

Exit codes: 0 success, 1 usage or parse error, 2 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, casimir, clifford, cosets, decompose, deform, lie
from .errors import (
    ConsistencyError,
    ConventionError,
    EvennessViolationError,
    FixtureError,
    IdentityViolationError,
    MalformedEmbeddingError,
    NonDominantWeightError,
    NotACharacterError,
    SpectrumError,
    UnknownTagError,
)

USAGE_ERROR = 1
INVARIANT_ERROR = 2

_USAGE_ERRORS = (
    NonDominantWeightError,
    UnknownTagError,
    NotACharacterError,
    MalformedEmbeddingError,
    ValueError,
)
_INVARIANT_ERRORS = (
    ConsistencyError,
    ConventionError,
    EvennessViolationError,
    FixtureError,
    IdentityViolationError,
    SpectrumError,
)

TABLE_IDS = ("prop-4.2", "thm-5.2-H", "thm-5.2-SU3")

TENSOR_ALGEBRAS = {
    "su2": lie.A1,
    "a1": lie.A1,
    "su3": lie.A2,
    "a2": lie.A2,
    "sp2": lie.C2,
    "c2": lie.C2,
    "g2": lie.G2,
    "su2cubed": lie.A1_CUBED,
    "sp1u1": lie.A1_U1,
    "u1u1": lie.U1_U1,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _frac_json(x):
    f = Fraction(x)
    return {"num": f.numerator, "den": f.denominator}


def _frac_text(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else "%d/%d" % (
        f.numerator,
        f.denominator,
    )


def _parse_weight(text, root_data):
    try:
        w = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError("weight %r is not a comma-separated integer list" % text)
    root_data.check_weight(w)
    return w


def _decomp_payload(d):
    return [{"hw": list(hw), "mult": m} for hw, m in d.sorted_items()]


def _document(command, inputs, result):
    return {
        "command": command,
        "input": inputs,
        "result": result,
        "engine_version": __version__,
    }


def _coset_lookup(args):
    if getattr(args, "fixtures", None):
        table = cosets.load_fixtures(args.fixtures)

        def lookup(name):
            return table[cosets.canonical_name(name)]

        return lookup
    return cosets.coset


# ---------------------------------------------------------------------------
# Commands


def cmd_tables(args, out):
    lookup = _coset_lookup(args)
    which = args.which
    if which == "prop-4.2":
        names = ("G2/SU(3)", "SU(2)^3/SU(2)", "Sp(2)/Sp(1)xU(1)")
        rows = []
        for name in names:
            spectrum = deform.curvature_spectrum(lookup(name), cosets.GAUGE_H)
            rows.append(
                {
                    "coset": name,
                    "spectrum": [
                        {"eigenvalue": _frac_json(e), "dimension": d}
                        for e, d in spectrum.entries
                    ],
                }
            )
        payload = _document("tables", {"which": which}, rows)
        if args.format == "text":
            out.write("curvature operator spectrum on m* (x) h, canonical connection\n")
            for row in rows:
                out.write("\n%s\n" % row["coset"])
                eigs = [
                    _frac_text(Fraction(e["eigenvalue"]["num"], e["eigenvalue"]["den"]))
                    for e in row["spectrum"]
                ]
                dims = [str(e["dimension"]) for e in row["spectrum"]]
                width = max(len(s) for s in eigs + dims) + 2
                out.write("  eigenvalue" + "".join(s.rjust(width) for s in eigs) + "\n")
                out.write("  dimension " + "".join(s.rjust(width) for s in dims) + "\n")
        else:
            out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return payload

    gauge = cosets.GAUGE_H if which == "thm-5.2-H" else cosets.GAUGE_SU3
    rows = []
    for name in cosets.COSET_NAMES:
        space = deform.deformation_space(lookup(name), gauge)
        rows.append(
            {
                "coset": name,
                "deformations": _decomp_payload(space.halved),
                "real_dimension": space.real_dimension,
            }
        )
    payload = _document("tables", {"which": which}, rows)
    if args.format == "text":
        out.write(
            "instanton deformations of the canonical connection "
            "(structure group %s)\n\n" % ("H" if gauge == cosets.GAUGE_H else "SU(3)")
        )
        for row in rows:
            decomp = (
                " + ".join(
                    (
                        "%d V(%s)" % (e["mult"], ",".join(map(str, e["hw"])))
                        if e["mult"] > 1
                        else "V(%s)" % ",".join(map(str, e["hw"]))
                    )
                    for e in row["deformations"]
                )
                or "0"
            )
            out.write(
                "  %-18s %-30s real dimension %d\n"
                % (row["coset"] + ":", decomp, row["real_dimension"])
            )
    else:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return payload


def cmd_casimir(args, out):
    ctx = casimir.context(args.pair)
    hw = _parse_weight(args.hw, ctx.root_data)
    value = casimir.casimir_eigenvalue(ctx, hw)
    payload = _document(
        "casimir",
        {"pair": args.pair, "hw": list(hw)},
        {"eigenvalue": _frac_json(value)},
    )
    if args.format == "text":
        out.write(_frac_text(value) + "\n")
    else:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return payload


def cmd_branch(args, out):
    c = _coset_lookup(args)(args.coset)
    hw = _parse_weight(args.hw, c.g_data)
    result = decompose.branch(c.restriction, c.g_data, c.h_data, hw)
    payload = _document(
        "branch",
        {"coset": c.name, "hw": list(hw)},
        _decomp_payload(result),
    )
    if args.format == "text":
        out.write(str(result) + "\n")
    else:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return payload


def cmd_tensor(args, out):
    try:
        root_data = TENSOR_ALGEBRAS[args.algebra]
    except KeyError:
        raise UnknownTagError(
            "unknown algebra %r (known: %s)"
            % (args.algebra, ", ".join(sorted(TENSOR_ALGEBRAS)))
        )
    a = _parse_weight(args.a, root_data)
    b = _parse_weight(args.b, root_data)
    result = decompose.tensor_decompose(root_data, a, b)
    payload = _document(
        "tensor",
        {"algebra": args.algebra, "a": list(a), "b": list(b)},
        _decomp_payload(result),
    )
    if args.format == "text":
        out.write(str(result) + "\n")
    else:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return payload


def cmd_clifford_verify(args, out):
    rep = clifford.build_rep()
    psi = clifford.STANDARD_SPINOR
    p, _ = clifford.extract_PQ(rep, psi)
    report = clifford.verify_identity_suite(rep, psi, raise_on_failure=False)
    blocks = clifford.spinor_decomposition_spectra(rep, psi)
    spectrum = clifford.q_contraction_spectrum(rep, psi)
    minus_one_dim = dict(spectrum.entries).get(Fraction(-1), 0)
    checks = [{"name": r.name, "passed": r.passed} for r in report]
    all_passed = all(r.passed for r in report) and minus_one_dim == 8
    payload = _document(
        "clifford-verify",
        {},
        {
            "checks": checks,
            "p_norm_sq": _frac_json(p.norm_sq()),
            "block_eigenvalues": {
                "P": [_frac_json(v) for v in blocks.p_values],
                "Q": [_frac_json(v) for v in blocks.q_values],
            },
            "q_contraction_spectrum": [
                {"eigenvalue": _frac_json(e), "dimension": d}
                for e, d in spectrum.entries
            ],
            "su3_eigenspace_dimension": minus_one_dim,
            "omega_eigenvalue": _frac_json(spectrum.omega_eigenvalue),
            "all_passed": all_passed,
        },
    )
    if args.format == "text":
        for r in report:
            out.write("%-26s %s\n" % (r.name + ":", "PASS" if r.passed else "FAIL"))
        out.write("|P|^2 = %s\n" % _frac_text(p.norm_sq()))
        out.write(
            "block eigenvalues on (scalars, one-forms, volume): P: %s; Q: %s\n"
            % (
                ", ".join(_frac_text(v) for v in blocks.p_values),
                ", ".join(_frac_text(v) for v in blocks.q_values),
            )
        )
        out.write(
            "contraction with Q on two-forms: %s\n"
            % "; ".join(
                "eigenvalue %s dim %d" % (_frac_text(e), d)
                for e, d in spectrum.entries
            )
        )
        out.write("su(3) eigenspace (-1) dimension = %d\n" % minus_one_dim)
        out.write(
            "omega eigenvalue = %s\n" % _frac_text(spectrum.omega_eigenvalue)
        )
    else:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    if not all_passed:
        raise IdentityViolationError(
            "failed checks: %s"
            % ", ".join(r.name for r in report if not r.passed)
        )
    return payload


# ---------------------------------------------------------------------------


def build_parser():
    parser = _Parser(
        prog="nkdeform",
        description=(
            "Exact computations for instantons on the four homogeneous "
            "nearly Kahler six-manifolds: Casimir spectra, branching, "
            "curvature spectra, deformation counting and Clifford-algebra "
            "verification."
        ),
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, fixtures=False):
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format (default: text)",
        )
        if fixtures:
            p.add_argument(
                "--fixtures", metavar="PATH", default=None,
                help="load coset data from a JSON fixture file",
            )

    p = sub.add_parser("tables", help="emit a full result table")
    p.add_argument("which", choices=TABLE_IDS, help="table identifier")
    add_common(p, fixtures=True)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("casimir", help="Casimir eigenvalue of one irreducible")
    p.add_argument("--pair", required=True, help="algebra pair tag")
    p.add_argument("--hw", required=True, help="highest weight, e.g. 0,1")
    add_common(p)
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("branch", help="restrict a G-irreducible to H")
    p.add_argument("--coset", required=True, help="coset name or alias")
    p.add_argument("--hw", required=True, help="highest weight, e.g. 1,0")
    add_common(p, fixtures=True)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("tensor", help="decompose a tensor product")
    p.add_argument("--algebra", required=True, help="algebra tag, e.g. su3")
    p.add_argument("--a", required=True, help="first highest weight")
    p.add_argument("--b", required=True, help="second highest weight")
    add_common(p)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser(
        "clifford-verify", help="run the exact Clifford identity suite"
    )
    add_common(p)
    p.set_defaults(func=cmd_clifford_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    try:
        args.func(args, sys.stdout)
    except _INVARIANT_ERRORS as exc:
        print("invariant failure: %s" % exc, file=sys.stderr)
        return INVARIANT_ERROR
    except _USAGE_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
