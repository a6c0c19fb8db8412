"""
JSON documents: representations, multigraded presentations and complexes.

Scalars are strings "p/q" (or integers) so that values survive exactly.
"""

import json
from fractions import Fraction

from .field import fstr, parse_field
from .linalg import Matrix
from .matroid import Representation, DEFAULT_MAX_GROUND_SET
from .multigraded import (
    FreeComplex, MultigradedPresentation, PresentationError, format_monomial,
    presentation_from_poly_matrix,
)
from .tcomplex import VectorSpaceComplex


class InputError(ValueError):
    pass


def load_document(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise InputError("%s: cannot read (%s)" % (path, e.strerror or e))
    return parse_document(text, path)


def parse_document(text, source="<input>"):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("%s:%d:%d: invalid JSON: %s" % (source, e.lineno, e.colno, e.msg))
    if not isinstance(doc, dict):
        raise InputError("%s: top level must be a JSON object" % source)
    return doc


def document_kind(doc):
    if "components" in doc:
        return "complex"
    if "source_degrees" in doc or "target_degrees" in doc:
        return "multigraded"
    if "matrix" in doc:
        return "representation"
    raise InputError("cannot tell the document type: expected 'matrix', 'source_degrees' or 'components'")


def _field_of(doc, override):
    if override is not None:
        return override
    try:
        return parse_field(str(doc.get("field", "QQ")))
    except ValueError as e:
        raise InputError("field: %s" % e)


def parse_scalar(x, field, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError("%s: expected an integer or a 'p/q' string, got %r" % (where, x))
    try:
        return field(Fraction(str(x).strip()))
    except (ValueError, ZeroDivisionError) as e:
        raise InputError("%s: bad scalar %r (%s)" % (where, x, e))


def _matrix(doc, key, field, ncols=None):
    rows = doc.get(key)
    if not isinstance(rows, list):
        raise InputError("%s: expected a list of rows" % key)
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise InputError("%s[%d]: expected a list" % (key, i))
        if ncols is None:
            ncols = len(row)
        if len(row) != ncols:
            raise InputError("%s[%d]: has %d entries, expected %d" % (key, i, len(row), ncols))
        out.append([parse_scalar(x, field, "%s[%d][%d]" % (key, i, j)) for j, x in enumerate(row)])
    return Matrix(out, ncols or 0)


def _labels(doc, n):
    labels = doc.get("labels")
    if labels is None:
        return None
    if not isinstance(labels, list) or len(labels) != n:
        raise InputError("labels: expected a list of %d names" % n)
    labels = [str(x) for x in labels]
    if len(set(labels)) != n:
        raise InputError("labels: names must be distinct")
    return labels


def representation_from_doc(doc, field=None, max_ground_set=DEFAULT_MAX_GROUND_SET):
    F = _field_of(doc, field)
    M = _matrix(doc, "matrix", F)
    try:
        return Representation(M, labels=_labels(doc, M.ncols), field=F, max_ground_set=max_ground_set)
    except ValueError as e:
        raise InputError(str(e))


def _degrees(doc, key):
    degs = doc.get(key)
    if not isinstance(degs, list):
        raise InputError("%s: expected a list of exponent vectors" % key)
    out = []
    for i, d in enumerate(degs):
        if not isinstance(d, list) or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in d):
            raise InputError("%s[%d]: expected a list of nonnegative integers" % (key, i))
        out.append(tuple(d))
    return out


def presentation_from_doc(doc, field=None, max_ground_set=DEFAULT_MAX_GROUND_SET):
    F = _field_of(doc, field)
    src = _degrees(doc, "source_degrees")
    tgt = _degrees(doc, "target_degrees")
    ring_vars = doc.get("ring_vars")
    labels = _labels(doc, len(src))
    try:
        if "poly_matrix" in doc:
            if not ring_vars:
                raise InputError("poly_matrix requires ring_vars")
            rows = doc["poly_matrix"]
            if not isinstance(rows, list) or len(rows) != len(tgt):
                raise InputError("poly_matrix: expected %d rows" % len(tgt))
            return presentation_from_poly_matrix(rows, list(ring_vars), src, tgt, field=F, labels=labels)
        M = _matrix(doc, "matrix", F, len(src))
        if M.nrows != len(tgt):
            raise InputError("matrix: has %d rows but %d target degrees" % (M.nrows, len(tgt)))
        return MultigradedPresentation(M, src, tgt, field=F, labels=labels, ring_vars=ring_vars,
                                       max_ground_set=max_ground_set)
    except PresentationError as e:
        raise InputError(str(e))
    except ValueError as e:
        if isinstance(e, InputError):
            raise
        raise InputError(str(e))


# -- emitting complexes --------------------------------------------------------------

def _gen_doc(label, degree):
    kind = label[0]
    if kind == "T":
        tflat = list(label[1])
    elif kind in ("U", "E"):
        tflat = [label[1]]
    else:
        tflat = []
    return {"kind": kind, "name": None if kind == "T" else label[1],
            "tflat": tflat, "index": label[2], "degree": list(degree)}


def _label_of(g):
    kind = g.get("kind", "T")
    if kind == "T":
        return ("T", tuple(str(x) for x in g["tflat"]), int(g.get("index", 0)))
    return (kind, str(g["name"]), int(g.get("index", 0)))


def free_complex_to_doc(fc, name="resolution"):
    comps = []
    for n in fc.indices():
        comps.append({"hdeg": n, "generators": [_gen_doc(l, d) for l, d in fc.components[n]]})
    mats = []
    for n in sorted(fc.differentials):
        ent = []
        for (i, j) in sorted(fc.differentials[n]):
            c, e = fc.differentials[n][(i, j)]
            ent.append({"row": i, "col": j, "coeff": fstr(c), "exp": list(e),
                        "monomial": format_monomial(fstr(c), e, fc.ring_vars)})
        mats.append({"hdeg": n, "shape": [fc.rank(n - 1), fc.rank(n)], "entries": ent})
    return {"kind": "complex", "name": name, "field": fc.field.spec(), "ring_vars": list(fc.ring_vars),
            "components": comps, "matrices": mats}


def vector_complex_to_free(c):
    comps = {n: [(lab, ()) for lab in c.components[n]] for n in c.indices()}
    diffs = {}
    for n, m in c.differentials.items():
        diffs[n] = {(i, j): (x, ()) for i, row in enumerate(m.rows) for j, x in enumerate(row) if x}
    return FreeComplex(comps, diffs, 0, c.field, [])


def complex_to_doc(c, name=None):
    if isinstance(c, VectorSpaceComplex):
        return free_complex_to_doc(vector_complex_to_free(c), name or c.name)
    return free_complex_to_doc(c, name or "resolution")


def free_complex_from_doc(doc, field=None):
    F = _field_of(doc, field)
    ring_vars = list(doc.get("ring_vars") or [])
    m = len(ring_vars)
    comps = {}
    try:
        for k, comp in enumerate(doc["components"]):
            n = int(comp["hdeg"])
            gens = []
            for g, gd in enumerate(comp["generators"]):
                deg = tuple(int(x) for x in gd.get("degree", []))
                if len(deg) != m:
                    raise InputError("components[%d].generators[%d]: degree has length %d, expected %d"
                                     % (k, g, len(deg), m))
                gens.append((_label_of(gd), deg))
            comps[n] = gens
        diffs = {}
        for k, mat in enumerate(doc.get("matrices", [])):
            n = int(mat["hdeg"])
            ent = {}
            for t, e in enumerate(mat["entries"]):
                where = "matrices[%d].entries[%d]" % (k, t)
                i, j = int(e["row"]), int(e["col"])
                if not (0 <= i < len(comps.get(n - 1, [])) and 0 <= j < len(comps.get(n, []))):
                    raise InputError("%s: position (%d,%d) out of range" % (where, i, j))
                exp = tuple(int(x) for x in e.get("exp", []))
                if len(exp) != m:
                    raise InputError("%s: exponent has length %d, expected %d" % (where, len(exp), m))
                c = parse_scalar(e["coeff"], F, where + ".coeff")
                if c:
                    ent[(i, j)] = (c, exp)
            diffs[n] = ent
    except (KeyError, TypeError) as e:
        raise InputError("complex document: missing or malformed field %s" % e)
    return FreeComplex(comps, diffs, m, F, ring_vars)


def dumps(doc):
    return json.dumps(doc, indent=2) + "\n"
