#!/usr/bin/env python3
"""
JSON forms of the domain types

Every top-level document carries "schema_version": 1. Field elements use the
text form of regfiber.algebra.codec; matrices are lists of rows.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from ..algebra.codec import format_elem, format_rational, parse_elem, parse_rational
from ..algebra.exactfield import FieldElem
from ..algebra.polylinalg import MatrixF, MatrixQ
from ..errors import FieldSyntaxError, SchemaError
from ..lattice.grassmann import GrassPoint, LeviPoint, canonicalize
from ..lattice.rootcomb import CoweightM, LeviDatum, ParabolicDatum, parse_parabolic
from ..lattice.springer import EnumWindow, FiberDatum

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def check_version(doc: Dict[str, Any], what: str = "document") -> None:
    if not isinstance(doc, dict):
        raise SchemaError(f"{what} must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"{what} has schema_version {version!r}, expected {SCHEMA_VERSION}")


def versioned(record: Dict[str, Any]) -> Dict[str, Any]:
    """record with the current schema_version set"""
    return {"schema_version": SCHEMA_VERSION, **record}


def _require(doc: Dict[str, Any], key: str, what: str) -> Any:
    if key not in doc:
        raise SchemaError(f"{what} is missing the field '{key}'")
    return doc[key]


# === SCALARS AND MATRICES ===

def elem_from_json(value: Any) -> FieldElem:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SchemaError(f"Field element must be a string or integer, got {value!r}")
    return parse_elem(value)


def matrix_to_json(m: MatrixF) -> List[List[str]]:
    return [[format_elem(e) for e in r] for r in m.rows]


def rational_matrix_to_json(m: MatrixQ) -> List[List[str]]:
    return [[format_rational(e) for e in r] for r in m.rows]


def matrix_from_json(data: Any) -> MatrixF:
    if not isinstance(data, list) or not data or any(not isinstance(r, list) for r in data):
        raise SchemaError("Matrix must be a non-empty list of rows")
    n = len(data)
    if any(len(r) != n for r in data):
        raise SchemaError(f"Matrix with {n} rows is not square")
    rows = []
    for i, r in enumerate(data):
        row = []
        for j, v in enumerate(r):
            try:
                row.append(elem_from_json(v))
            except FieldSyntaxError:
                logger.warning(f"Malformed matrix entry ({i + 1},{j + 1})")
                raise
        rows.append(row)
    return MatrixF(rows)


def poly_to_json(p) -> List[str]:
    """RationalPoly coefficients, lowest degree first"""
    return [format_rational(c) for c in p.coeffs]


# === LATTICE TYPES ===

def levi_from_json(data: Any, n: int) -> LeviDatum:
    try:
        return LeviDatum(n, tuple(tuple(int(i) for i in b) for b in data))
    except (TypeError, ValueError) as e:
        raise SchemaError(f"Malformed Levi blocks {data!r}: {e}") from e


def parabolic_to_json(P: ParabolicDatum) -> List[List[int]]:
    return P.to_json()


def parabolic_from_json(data: Any) -> ParabolicDatum:
    return parse_parabolic(data)


def coweight_to_json(value: CoweightM) -> List[int]:
    return value.to_json()


def point_to_json(x: GrassPoint) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "n": x.n, "rep": matrix_to_json(x.rep)}


def point_from_json(doc: Dict[str, Any]) -> GrassPoint:
    """Any invertible representative is accepted and canonicalized"""
    if not isinstance(doc, dict):
        raise SchemaError("GrassPoint must be a JSON object")
    rep = matrix_from_json(_require(doc, "rep", "GrassPoint"))
    if "n" in doc and doc["n"] != rep.size:
        raise SchemaError(f"GrassPoint declares n = {doc['n']} for a {rep.size}x{rep.size} matrix")
    return canonicalize(rep)


def levi_point_to_json(xm: LeviPoint) -> Dict[str, Any]:
    return {"blocks": [list(b) for b in xm.levi.blocks], "points": [point_to_json(p) for p in xm.points]}


def fiber_to_json(u: FiberDatum) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "levi": [list(b) for b in u.levi.blocks], "u": matrix_to_json(u.u)}


def fiber_from_json(doc: Dict[str, Any]) -> FiberDatum:
    if not isinstance(doc, dict):
        raise SchemaError("FiberDatum must be a JSON object")
    u = matrix_from_json(_require(doc, "u", "FiberDatum"))
    levi = levi_from_json(doc["levi"], u.size) if "levi" in doc else LeviDatum.whole(u.size)
    return FiberDatum.create(u, levi)


def window_to_json(w: EnumWindow) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "mu_box": [list(r) for r in w.mu_box],
        "exp_range": list(w.exp_range),
        "coeff_set": [format_rational(c) for c in w.coeff_set],
        "sample_count": w.sample_count,
        "max_terms": w.max_terms,
        "seed": w.seed,
    }


def _interval(value: Any, what: str) -> tuple:
    if not isinstance(value, list) or len(value) != 2 or not all(isinstance(v, int) for v in value):
        raise SchemaError(f"{what} must be a pair of integers, got {value!r}")
    return tuple(value)


def window_from_json(doc: Dict[str, Any], n: Optional[int] = None) -> EnumWindow:
    """
    EnumWindow from JSON; a single mu_box interval is repeated n times
    """
    check_version(doc, "EnumWindow")
    mu_box = _require(doc, "mu_box", "EnumWindow")
    if isinstance(mu_box, list) and mu_box and isinstance(mu_box[0], int):
        if n is None:
            raise SchemaError("A single mu_box interval needs the fiber size")
        mu_box = [mu_box] * n
    return EnumWindow(
        mu_box=tuple(_interval(r, "mu_box entry") for r in mu_box),
        exp_range=_interval(_require(doc, "exp_range", "EnumWindow"), "exp_range"),
        coeff_set=tuple(parse_rational(c) for c in _require(doc, "coeff_set", "EnumWindow")),
        sample_count=int(doc.get("sample_count", 0)),
        max_terms=int(doc.get("max_terms", 1)),
        seed=int(doc.get("seed", 0)),
    )


# === HARNESS RECORDS ===

def pair_table_to_json(table: Dict[Any, int]) -> Dict[str, int]:
    return {f"{P}|{P2}": v for (P, P2), v in table.items()}


def certificate_to_json(cert) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "certificate",
        "point": point_to_json(cert.point),
        "nu_table": {str(P): coweight_to_json(v) for P, v in cert.nu_table.items()},
        "n_x_table": pair_table_to_json(cert.n_x_table),
        "n_u_table": pair_table_to_json(cert.n_u_table),
        "in_fiber": cert.in_fiber,
        "regular": cert.regular,
        "retractions_regular": cert.retractions_regular,
        "part_a_ok": cert.part_a_ok,
        "part_b_ok": cert.part_b_ok,
    }


def summary_to_json(summary, kind: str = "summary") -> Dict[str, Any]:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "candidates": summary.candidates,
        "fiber_points": summary.fiber_points,
        "regular": summary.regular,
        "non_regular": summary.non_regular,
        "pairs_checked": summary.pairs_checked,
        "violations": summary.violations,
    }
    if summary.wall_time is not None:
        doc["wall_time"] = summary.wall_time
    return doc


def golden_row_to_json(row) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "golden_row",
        "c": format_elem(row.c),
        "t": format_elem(row.t),
        "member": row.member,
        "regular": row.regular,
        "n_x": row.n_x,
        "n_u": row.n_u,
        "expected_member": row.expected_member,
        "expected_regular": row.expected_regular,
        "expected_n_x": row.expected_n_x,
        "expected_n_u": row.expected_n_u,
        "match": row.matches and row.theorem_form_holds,
    }


def probe_record_to_json(record) -> Dict[str, Any]:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "orbit_probe",
        "source": point_to_json(record.source),
        "target": point_to_json(record.target),
        "status": record.status,
    }
    if record.exponents is not None:
        doc["exponents"] = list(record.exponents)
        doc["coefficients"] = [format_rational(Fraction(c)) for c in record.coefficients]
    return doc


def elems_from_json(values: Sequence[Any], what: str) -> List[FieldElem]:
    if not isinstance(values, list):
        raise SchemaError(f"{what} must be a list of field elements")
    return [elem_from_json(v) for v in values]
