"""
tresolve: command-line front end.

  tresolve matroid  INPUT   circuits, T-flats, T-parts, multiplicities
  tresolve tcomplex INPUT   the complexes T and T+ of a representation
  tresolve resolve  INPUT   the T-resolution of a multigraded presentation
  tresolve verify   INPUT   run every check that applies to INPUT

Exit status: 0 ok, 1 a check failed, 2 bad input.
"""

import argparse
import sys

from .field import fstr, parse_field
from .io import (
    InputError, complex_to_doc, document_kind, dumps, free_complex_from_doc, load_document,
    presentation_from_doc, representation_from_doc,
)
from .matroid import DEFAULT_MAX_GROUND_SET, GroundSetTooLarge, connected_components, rank_of, t_flats
from .multigraded import build_resolution, format_monomial, validate, verify_free_complex, verify_resolution
from .multiplicity import multiplicity_space
from .tcomplex import (
    Check, VerificationReport, build_T, build_T_plus, check_direct_sum, homology, verify_acyclic,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Output(object):
    """Buffered output, flushed once so that nothing is interleaved."""

    def __init__(self):
        self.lines = []

    def __call__(self, s=""):
        self.lines.append(s)

    def text(self):
        return "\n".join(self.lines) + "\n"


def _fmt_matrix(m, indent="    "):
    if m.nrows == 0 or m.ncols == 0:
        return [indent + "(%dx%d)" % m.shape]
    cells = [[fstr(x) for x in row] for row in m.rows]
    w = max(len(c) for row in cells for c in row)
    return [indent + "[" + " ".join(c.rjust(w) for c in row) + "]" for row in cells]


def _fmt_label(lab):
    kind = lab[0]
    if kind == "T":
        return "{%s}#%d" % (",".join(lab[1]), lab[2]) if lab[2] else "{%s}" % ",".join(lab[1])
    if kind == "W":
        return "w%s" % lab[1]
    if kind == "G":
        return "g%s" % lab[1]
    return "e%s" % lab[1]


def _report_checks(out, checks):
    for c in checks:
        where = "" if c.degree is None else " [degree %s]" % c.degree
        out("  %-30s %s  %s%s" % (c.name, "PASS" if c.passed else "FAIL", c.detail, where))


# -- commands ----------------------------------------------------------------------

def cmd_matroid(args, out):
    rep = _load_rep(args)
    out("field: %s" % rep.field.spec())
    out("ground set: %s   rank: %d   size of W: %d" % (rep.fmt(rep.ground), rank_of(rep, rep.ground), rep.w_dim))
    from .matroid import circuits
    out("circuits: %s" % ", ".join(rep.fmt(C) for C in circuits(rep)))
    out("connected components: %s" % ", ".join(rep.fmt(C) for C in connected_components(rep, rep.ground)))
    out("T-flats:")
    out("  %-5s %-16s %-5s %-5s %s" % ("level", "set", "rank", "dim S", "T-parts"))
    table = t_flats(rep)
    doc = []
    counts = {}
    for n in sorted(table):
        for rec in table[n]:
            S = multiplicity_space(rep, rec.set, with_chains=args.dump_chains)
            parts = " + ".join(rep.fmt(p) for p in rec.t_parts)
            out("  %-5d %-16s %-5d %-5d %s" % (n, rep.fmt(rec.set), rec.rank, S.dim, parts))
            tot, conn = counts.get(n, (0, 0))
            counts[n] = (tot + 1, conn + (1 if S.dim else 0))
            entry = {"level": n, "tflat": list(rep.names(rec.set)), "rank": rec.rank, "dim": S.dim,
                     "t_parts": [list(rep.names(p)) for p in rec.t_parts],
                     "basis": [[fstr(x) for x in v] for v in S.vectors()]}
            if args.dump_chains:
                out("        basis of S: %s" % ["(" + ", ".join(fstr(x) for x in v) + ")" for v in S.vectors()])
                chains = []
                for ch, v in S.generators:
                    desc = " < ".join(rep.fmt(c) for c in ch)
                    out("        chain %s -> (%s)" % (desc, ", ".join(fstr(x) for x in v)))
                    chains.append({"chain": [list(rep.names(c)) for c in ch], "vector": [fstr(x) for x in v]})
                entry["chains"] = chains
            doc.append(entry)
    if args.plot:
        from .plotting import plot_tflat_levels
        plot_tflat_levels(counts, args.plot, "T-flats by level")
        out("plot written to %s" % args.plot)
    if args.json:
        _write_json(args, {"field": rep.field.spec(), "labels": list(rep.labels),
                           "circuits": [list(rep.names(C)) for C in circuits(rep)], "tflats": doc}, out)
    return EXIT_OK


def _complex_summary(out, c, title):
    idx = [n for n in c.indices()]
    out("%s: ranks by homological degree (high to low): %s" % (
        title, " ".join(str(c.dim(n)) for n in reversed(idx)) or "(empty)"))
    for n in reversed(idx):
        out("  C_%d  basis: %s" % (n, " ".join(_fmt_label(l) for l in c.components[n]) or "-"))
    for n in sorted(c.differentials, reverse=True):
        out("  d_%d: C_%d -> C_%d" % (n, n, n - 1))
        for line in _fmt_matrix(c.d(n)):
            out(line)


def cmd_tcomplex(args, out):
    rep = _load_rep(args)
    out("field: %s" % rep.field.spec())
    c = build_T(rep) if args.plain else build_T_plus(rep)
    _complex_summary(out, c, "T" if args.plain else "T+")
    status = EXIT_OK
    if args.verify:
        status = _run_rep_checks(rep, out)
    if args.plot:
        from .plotting import plot_ranks
        plot_ranks(c.dims(), args.plot, "ranks of %s" % ("T" if args.plain else "T+"))
        out("plot written to %s" % args.plot)
    if args.json:
        _write_json(args, complex_to_doc(c), out)
    return status


def _run_rep_checks(rep, out):
    report = verify_acyclic(rep)
    report.checks.append(Check("direct_sum_over_components", check_direct_sum(rep),
                               "%d connected components" % len(connected_components(rep, rep.ground))))
    out("checks (field %s):" % report.field)
    _report_checks(out, report.checks)
    out("result: %s" % ("all checks pass" if report.passed else "FAILED"))
    return EXIT_OK if report.passed else EXIT_FAIL


def _print_resolution(out, fc):
    out("Betti numbers: %s" % "  ".join("b%d=%d" % (n, r) for n, r in sorted(fc.betti().items())))
    out("length: %d" % fc.length)
    for n in fc.indices():
        out("  F_%d generators:" % n)
        for lab, d in fc.components[n]:
            out("    %-16s degree %s" % (_fmt_label(lab), tuple(d)))
    for n in sorted(fc.differentials, reverse=True):
        out("  d_%d: F_%d -> F_%d" % (n, n, n - 1))
        ent = fc.differentials[n]
        cells = [[format_monomial(fstr(ent[(i, j)][0]), ent[(i, j)][1], fc.ring_vars) if (i, j) in ent else "0"
                  for j in range(fc.rank(n))] for i in range(fc.rank(n - 1))]
        w = max([len(x) for row in cells for x in row] or [1])
        for row in cells:
            out("    [" + " ".join(x.rjust(w) for x in row) + "]")


def _print_resolution_report(out, rep):
    out("checks (field %s):" % rep.field)
    _report_checks(out, rep.checks)
    out("pd bound: length %d <= b1 - b0 + rank L + 1 = %d (rank L = %d); %d strands examined"
        % (rep.length, rep.bound, rep.rank_L, rep.strands_checked))
    out("result: %s" % ("all checks pass" if rep.passed else "FAILED"))


def cmd_resolve(args, out):
    p = _load_presentation(args)
    out("field: %s" % p.field.spec())
    out("ring: %s[%s]" % (p.field.spec(), ",".join(p.ring_vars)))
    fc = build_resolution(p)
    _print_resolution(out, fc)
    status = EXIT_OK
    if args.verify:
        r = verify_resolution(p, fc)
        _print_resolution_report(out, r)
        status = EXIT_OK if r.passed else EXIT_FAIL
    if args.plot:
        from .plotting import plot_ranks
        plot_ranks(fc.betti(), args.plot, "Betti numbers", "rank")
        out("plot written to %s" % args.plot)
    if args.json:
        _write_json(args, complex_to_doc(fc), out)
    return status


def complex_report(fc):
    """Checks that only need the complex itself (used for emitted documents)."""
    if fc.m == 0:
        checks = []
        bad = [n for n in fc.indices() if n in fc.differentials and (n - 1) in fc.differentials
               and (fc.scalar_matrix(n - 1) @ fc.scalar_matrix(n)).nrows
               and not (fc.scalar_matrix(n - 1) @ fc.scalar_matrix(n)).is_zero()]
        checks.append(Check("dd_zero", not bad, "d o d nonzero in degrees %s" % bad if bad else
                            "all compositions vanish", bad[0] if bad else None))
        from .multigraded import strand
        h = homology(strand(fc, ()))
        nz = h.nonzero_above(0)
        checks.append(Check("exact_above_0", not nz, "homology %s" % dict(sorted(h.homology.items())),
                            nz[0] if nz else None))
        return VerificationReport(fc.field.spec(), checks)
    r = verify_free_complex(fc)
    r.field = fc.field.spec()
    return r


def cmd_verify(args, out):
    doc = load_document(args.input)
    kind = document_kind(doc)
    if kind == "representation":
        rep = representation_from_doc(doc, args.field, args.max_ground_set)
        out("field: %s" % rep.field.spec())
        out("input: representation with %d columns in dimension %d" % (rep.size, rep.w_dim))
        return _run_rep_checks(rep, out)
    if kind == "multigraded":
        p = presentation_from_doc(doc, args.field, args.max_ground_set)
        bad = validate(p)
        out("field: %s" % p.field.spec())
        if bad:
            for i, j, msg in bad:
                out("  not homogeneous at (%d,%d): %s" % (i + 1, j + 1, msg))
            return EXIT_FAIL
        r = verify_resolution(p)
        _print_resolution_report(out, r)
        return EXIT_OK if r.passed else EXIT_FAIL
    fc = free_complex_from_doc(doc, args.field)
    out("field: %s" % fc.field.spec())
    out("input: complex with ranks %s" % fc.betti())
    r = complex_report(fc)
    out("checks (field %s):" % r.field)
    _report_checks(out, r.checks)
    out("result: %s" % ("all checks pass" if r.passed else "FAILED"))
    return EXIT_OK if r.passed else EXIT_FAIL


# -- plumbing ------------------------------------------------------------------------------

def _load_rep(args):
    doc = load_document(args.input)
    if document_kind(doc) == "multigraded":
        return presentation_from_doc(doc, args.field, args.max_ground_set).rep
    if document_kind(doc) != "representation":
        raise InputError("%s: expected a representation document" % args.input)
    return representation_from_doc(doc, args.field, args.max_ground_set)


def _load_presentation(args):
    doc = load_document(args.input)
    if document_kind(doc) != "multigraded":
        raise InputError("%s: expected source_degrees and target_degrees" % args.input)
    p = presentation_from_doc(doc, args.field, args.max_ground_set)
    bad = validate(p)
    if bad:
        i, j, msg = bad[0]
        raise InputError("%s: matrix entry (%d,%d): %s" % (args.input, i + 1, j + 1, msg))
    return p


def _write_json(args, doc, out):
    text = dumps(doc)
    if args.json == "-":
        out(text.rstrip("\n"))
    else:
        with open(args.json, "w") as fh:
            fh.write(text)
        out("json written to %s" % args.json)


def _field_arg(s):
    try:
        return parse_field(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    ap = argparse.ArgumentParser(prog="tresolve", description="T-complexes and multigraded T-resolutions")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="JSON input file")
    common.add_argument("--field", type=_field_arg, default=None, help="qq or fp:<prime> (overrides the file)")
    common.add_argument("--json", metavar="PATH", default=None, help="write a JSON document ('-' for stdout)")
    common.add_argument("--verify", action="store_true", help="run the checks")
    common.add_argument("--max-ground-set", type=int, default=DEFAULT_MAX_GROUND_SET)
    common.add_argument("--dump-chains", action="store_true", help="show the chains spanning each multiplicity space")
    common.add_argument("--plot", metavar="PATH", default=None, help="write a bar chart of ranks")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("matroid", parents=[common], help="matroid data and multiplicity spaces")
    t = sub.add_parser("tcomplex", parents=[common], help="the complex T+ (or T with --plain)")
    t.add_argument("--plain", action="store_true", help="emit T instead of T+")
    sub.add_parser("resolve", parents=[common], help="multigraded T-resolution")
    sub.add_parser("verify", parents=[common], help="verify a representation, presentation or emitted complex")
    return ap


COMMANDS = {"matroid": cmd_matroid, "tcomplex": cmd_tcomplex, "resolve": cmd_resolve, "verify": cmd_verify}


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    out = Output()
    try:
        status = COMMANDS[args.command](args, out)
    except (InputError, GroundSetTooLarge) as e:
        stdout.write(out.text() if out.lines else "")
        stderr.write("input error: %s\n" % e)
        return EXIT_INPUT
    stdout.write(out.text())
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
