import logging
import re
from typing import Tuple

from veds.graphs.exceptions import InputError
from veds.graphs.graph import VertexRef

from .certificates import (
    COMB,
    STAR,
    TreeCertificate,
    comb_certificate,
    star_certificate,
)
from .setsystems import SetSystem, build_set_system

logger = logging.getLogger(__name__)

SET_SYSTEM_GRAMMAR = """\
Set-system file format (UTF-8, '#' starts a comment):

  universe <p>             first directive: elements are 1..p
  set <j>: <e1> <e2> ...   the members of set j; sets are numbered 1..q
"""

SET_RE = re.compile(r"^set\s+(?P<index>\d+)\s*:(?P<members>.*)$")
CERTIFICATE_FIELD_RE = re.compile(r"^(?P<name>center|backbone|teeth)=(?P<value>\S+)$")


def parse_set_system(text: str) -> SetSystem:
    p = None
    sets = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if p is None:
            directive, *tokens = line.split()
            if directive != "universe" or len(tokens) != 1 or not tokens[0].isdigit():
                raise InputError(f"line {line_no}: expected 'universe <p>' first")
            p = int(tokens[0])
            continue

        match = SET_RE.match(line)
        if not match:
            raise InputError(f"line {line_no}: expected 'set <j>: <e1> <e2> ...'")
        index = int(match.group("index"))
        if index in sets:
            raise InputError(f"line {line_no}: set {index} given twice")
        try:
            sets[index] = [int(token) for token in match.group("members").split()]
        except ValueError as exc:
            raise InputError(f"line {line_no}: set members must be integers") from exc

    if p is None:
        raise InputError("empty set-system file, expected 'universe <p>'")
    if sorted(sets) != list(range(1, len(sets) + 1)):
        raise InputError(f"sets must be numbered 1..{len(sets)}, got {sorted(sets)}")

    return build_set_system(p, [sets[j] for j in range(1, len(sets) + 1)])


def read_set_system(path: str) -> SetSystem:
    try:
        with open(path, "r", encoding="utf-8") as infile:
            text = infile.read()
    except OSError as exc:
        raise InputError(
            f"cannot read set-system file '{path}': {exc.strerror}"
        ) from exc
    return parse_set_system(text)


def dump_set_system(ss: SetSystem) -> str:
    lines = [f"universe {ss.p}"]
    lines.extend(
        f"set {j}: " + " ".join(str(element) for element in sorted(members))
        for j, members in enumerate(ss.sets, start=1)
    )
    return "\n".join(lines) + "\n"


def _names(indices) -> str:
    return ",".join(str(VertexRef.x(x)) for x in indices)


def _indices(text: str) -> Tuple[int, ...]:
    vertices = [VertexRef.parse(name) for name in text.split(",") if name]
    if any(vertex.side != "x" for vertex in vertices):
        raise InputError(f"certificate vertices must be on the X side, got '{text}'")
    return tuple(vertex.index for vertex in vertices)


def dump_certificate(cert: TreeCertificate) -> str:
    if cert.kind == STAR:
        return f"tree star center={VertexRef.x(cert.center)}\n"
    return f"tree comb backbone={_names(cert.backbone)} teeth={_names(cert.teeth)}\n"


def parse_certificate(text: str, n1: int) -> TreeCertificate:
    """
    Parse a sidecar line. The X side size comes from the graph it certifies.
    """
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if len(lines) != 1:
        raise InputError("a certificate file holds exactly one 'tree' line")

    directive, kind, *tokens = lines[0].split() + [""]
    if directive != "tree" or kind not in (STAR, COMB):
        raise InputError(
            "expected 'tree star center=...' or 'tree comb backbone=... teeth=...'"
        )

    fields = {}
    for token in filter(None, tokens):
        match = CERTIFICATE_FIELD_RE.match(token)
        if not match:
            raise InputError(f"unexpected certificate field '{token}'")
        fields[match.group("name")] = _indices(match.group("value"))

    if kind == STAR:
        center = fields.get("center", ())
        if len(center) != 1:
            raise InputError("a star certificate names exactly one centre")
        return star_certificate(n1, center=center[0])

    if "backbone" not in fields or "teeth" not in fields:
        raise InputError("a comb certificate needs both 'backbone=' and 'teeth='")
    return comb_certificate(fields["backbone"], fields["teeth"])


def read_certificate(path: str, n1: int) -> TreeCertificate:
    try:
        with open(path, "r", encoding="utf-8") as infile:
            text = infile.read()
    except OSError as exc:
        raise InputError(
            f"cannot read certificate file '{path}': {exc.strerror}"
        ) from exc
    return parse_certificate(text, n1)


def write_certificate(path: str, cert: TreeCertificate):
    with open(path, "w", encoding="utf-8") as outfile:
        outfile.write(dump_certificate(cert))
