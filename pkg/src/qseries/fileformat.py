"""
Line-oriented form files.

    p=<p> d=<d> modulus=<c0,...,cd>
    N=<level> k=<weight> char=chi(...) flags=<flag,...>
    prec=<B>
    a<n>=<element>        (only nonzero coefficients are written)
"""

import logging
import re
from pathlib import Path
from typing import Dict, Union

from ..characters import parse_character
from ..errors import ParseError
from ..gf import make_field, parse_element
from .expansion import QExpansion
from .form import ModularForm

logger = logging.getLogger(__name__)

_FIELD_RE = re.compile(r"^p=(\d+)\s+d=(\d+)\s+modulus=([\d,]+)$")
_META_RE = re.compile(r"^N=(\d+)\s+k=(-?\d+)\s+char=(chi\(.*\))\s+flags=(\S*)$")
_PREC_RE = re.compile(r"^prec=(\d+)$")
_COEFF_RE = re.compile(r"^a(\d+)=(.+)$")


def serialize_form(f: ModularForm) -> str:
    base = f.base
    lines = [
        f"p={base.p} d={base.d} modulus={','.join(str(c) for c in base.modulus)}",
        f"N={f.level} k={f.weight} char={f.character.token()} flags={','.join(sorted(f.flags))}",
        f"prec={f.prec}",
    ]
    lines += [f"a{n}={c.token()}" for n, c in enumerate(f.qexp.coeffs) if c]
    return "\n".join(lines) + "\n"


def parse_form(text: str) -> ModularForm:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) < 3:
        raise ParseError("parse_form", "a form file needs at least three header lines")

    match = _FIELD_RE.match(lines[0])
    if not match:
        raise ParseError("parse_form", f"bad field line {lines[0]!r}")
    field = make_field(int(match.group(1)), int(match.group(2)))
    modulus = tuple(int(c) for c in match.group(3).split(","))
    if modulus != field.modulus:
        raise ParseError(
            "parse_form",
            f"modulus {modulus} differs from the canonical {field.modulus}",
        )

    match = _META_RE.match(lines[1])
    if not match:
        raise ParseError("parse_form", f"bad metadata line {lines[1]!r}")
    level, weight = int(match.group(1)), int(match.group(2))
    character = parse_character(match.group(3), field)
    flags = frozenset(x for x in match.group(4).split(",") if x)

    match = _PREC_RE.match(lines[2])
    if not match:
        raise ParseError("parse_form", f"bad precision line {lines[2]!r}")
    prec = int(match.group(1))

    values: Dict[int, object] = {}
    for line in lines[3:]:
        match = _COEFF_RE.match(line)
        if not match:
            raise ParseError("parse_form", f"bad coefficient line {line!r}")
        n = int(match.group(1))
        if n > prec:
            raise ParseError("parse_form", f"a{n} is beyond prec={prec}")
        values[n] = parse_element(field, match.group(2))
    qexp = QExpansion.from_dict(field, values, prec)
    return ModularForm(qexp, level, weight, character, flags)


def read_form(path: Union[str, Path]) -> ModularForm:
    logger.debug("reading form file %s", path)
    return parse_form(Path(path).read_text(encoding="utf-8"))


def write_form(f: ModularForm, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_form(f), encoding="utf-8")
