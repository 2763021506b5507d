"""Text encodings for diagrams, diagram tuples and degree vectors.

* diagram: comma-separated parts, ``-`` for the empty diagram (``3,2,1``);
* diagram tuple: ``lam_t/../lam_0|lam;mu|mu_0/../mu_t``, sections separated
  by ``|``, diagrams inside a section separated by ``/``;
* degree vector: ``l_t,..,l_0,l;m,m_0,..,m_t``.
"""

from __future__ import annotations

from .diagrams import EMPTY, DiagramError, DiagramTuple, Partition, make_partition


class ParseError(DiagramError):
    """Malformed text; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def parse_partition(text: str, *, _offset: int = 0, _whole: str | None = None) -> Partition:
    whole = text if _whole is None else _whole
    s = text.strip()
    if s in ("-", "∅", ""):
        if s == "":
            raise ParseError("empty diagram text (use '-')", whole, _offset)
        return EMPTY
    parts = []
    pos = _offset + (len(text) - len(text.lstrip()))
    for chunk in s.split(","):
        c = chunk.strip()
        if not c.isdigit():
            raise ParseError(f"bad part {chunk!r}", whole, pos)
        parts.append(int(c))
        pos += len(chunk) + 1
    try:
        return make_partition(parts)
    except DiagramError as exc:
        raise ParseError(str(exc), whole, _offset) from None


def _parse_section(section: str, offset: int, whole: str) -> list[Partition]:
    out = []
    pos = offset
    for chunk in section.split("/"):
        out.append(parse_partition(chunk, _offset=pos, _whole=whole))
        pos += len(chunk) + 1
    return out


def format_tuple(lam: DiagramTuple) -> str:
    left = "/".join(format_partition(p) for p in reversed(lam.left))
    right = "/".join(format_partition(p) for p in lam.right)
    return f"{left}|{format_partition(lam.inner_left)};{format_partition(lam.inner_right)}|{right}"


def parse_tuple(text: str, t: int) -> DiagramTuple:
    """Parse the ``|``-separated tuple form for a given ``t``."""
    sections = text.split("|")
    if len(sections) != 3:
        raise ParseError("expected three '|'-separated sections", text, 0)
    left_s, inner_s, right_s = sections
    off_inner = len(left_s) + 1
    off_right = off_inner + len(inner_s) + 1
    if inner_s.count(";") != 1:
        raise ParseError("inner section must be 'lam;mu'", text, off_inner)
    a, b = inner_s.split(";")
    lam = parse_partition(a, _offset=off_inner, _whole=text)
    mu = parse_partition(b, _offset=off_inner + len(a) + 1, _whole=text)
    left = _parse_section(left_s, 0, text)
    right = _parse_section(right_s, off_right, text)
    if len(left) != t + 1:
        raise ParseError(f"left section needs {t + 1} diagrams, got {len(left)}", text, 0)
    if len(right) != t + 1:
        raise ParseError(f"right section needs {t + 1} diagrams, got {len(right)}", text, off_right)
    return DiagramTuple(tuple(reversed(left)), lam, mu, tuple(right))


def format_degree(k) -> str:
    left = ",".join(str(x) for x in reversed(k.left))
    right = ",".join(str(x) for x in k.right)
    return f"{left},{k.l};{k.m},{right}"


def parse_degree(text: str, t: int):
    from .posets import DegreeVector

    if text.count(";") != 1:
        raise ParseError("degree vector needs exactly one ';'", text, 0)
    a, b = text.split(";")
    try:
        left = [int(x) for x in a.split(",")]
        right = [int(x) for x in b.split(",")]
    except ValueError:
        raise ParseError("non-integer entry", text, 0) from None
    if len(left) != t + 2 or len(right) != t + 2:
        raise ParseError(f"each side needs {t + 2} entries", text, 0)
    if any(x < 0 for x in left + right):
        raise ParseError("negative entry", text, 0)
    return DegreeVector(tuple(reversed(left[:-1])), left[-1], right[0], tuple(right[1:]))
