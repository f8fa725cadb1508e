"""Certificate JSON and curve CSV files."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Union

from .asymptotics import CurvePoint
from .certificates import DualCertificate, check_certificate, make_certificate

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


def rational_str(v) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str):
        raise FormatError(f"rational must be a 'p/q' string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {s!r}") from exc


def certificate_to_dict(cert: DualCertificate) -> dict:
    return {
        "q": cert.q,
        "n": cert.n,
        "w": cert.w,
        "coeffs": [rational_str(c) for c in cert.coeffs],
        "bound": rational_str(cert.bound),
        "bound_on": cert.bound_on,
        "argmax_j": cert.argmax_j,
    }


def certificate_to_json(cert: DualCertificate) -> str:
    return json.dumps(certificate_to_dict(cert))


def certificate_from_dict(data: dict) -> DualCertificate:
    """Rebuild and re-verify a certificate; only q, n, w and coeffs are trusted.

    Raises :class:`FormatError` for malformed input or when the stored bound
    disagrees with the recomputed one, and the certificate errors of
    :mod:`qbound.certificates` when a condition fails.
    """
    try:
        q, n, w, raw = data["q"], data["n"], data["w"], data["coeffs"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"missing field: {exc}") from exc
    if not all(isinstance(v, int) for v in (q, n, w)) or not isinstance(raw, list):
        raise FormatError("q, n, w must be integers and coeffs a list")
    coeffs = [parse_rational(c) for c in raw]
    cert = make_certificate(q, n, w, coeffs)
    if "bound" in data and parse_rational(data["bound"]) != cert.bound:
        raise FormatError(
            f"stored bound {data['bound']} differs from recomputed {rational_str(cert.bound)}"
        )
    if "bound_on" in data and data["bound_on"] != cert.bound_on:
        raise FormatError(f"bound_on must be {cert.bound_on!r} for q={q}")
    return cert


def emit_certificate(cert: DualCertificate, path: PathLike) -> None:
    Path(path).write_text(certificate_to_json(cert) + "\n")


def verify_certificate(path: PathLike) -> Fraction:
    """Load a certificate file and return its exactly recomputed bound."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc
    cert = certificate_from_dict(data)
    return check_certificate(cert)


CSV_HEADER = ("delta", "exponent", "valid")


def curve_csv(points: Iterable[CurvePoint]) -> str:
    pts = sorted(points, key=lambda p: p.delta)
    if not pts:
        raise ValueError("no curve points to write")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for p in pts:
        writer.writerow([f"{p.delta:.12f}", f"{p.exponent:.12g}", int(p.valid)])
    return buf.getvalue()


def emit_curve_csv(points: Iterable[CurvePoint], path: PathLike) -> None:
    Path(path).write_text(curve_csv(points))


def read_curve_csv(path: PathLike, curve_id: str = "") -> list[CurvePoint]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != CSV_HEADER:
            raise FormatError(f"unexpected header {header}")
        return [CurvePoint(float(d), float(e), curve_id, v == "1") for d, e, v in reader]
