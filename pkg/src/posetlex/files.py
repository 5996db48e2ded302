"""Reading and writing the one-poset-per-file text format.

Format: first meaningful line is ``n <count>``; then either ``rel a b``
lines (meaning a < b) or a single ``perm v1 ... vn`` line, never both.
Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from .errors import PosetError
from .poset import Poset


class FormatError(PosetError):
    """Malformed poset file."""


def loads(text):
    n = None
    pairs = []
    perm = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "n":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate n line")
            if len(fields) != 2:
                raise FormatError(f"line {lineno}: expected 'n <count>'")
            n = int(fields[1])
        elif tag == "rel":
            if perm is not None:
                raise FormatError(f"line {lineno}: rel after perm")
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'rel a b'")
            pairs.append((int(fields[1]), int(fields[2])))
        elif tag == "perm":
            if pairs or perm is not None:
                raise FormatError(f"line {lineno}: perm mixed with rel")
            perm = [int(v) for v in fields[1:]]
        else:
            raise FormatError(f"line {lineno}: unknown tag {tag!r}")
    if n is None:
        raise FormatError("missing 'n' line")
    if perm is not None:
        if len(perm) != n:
            raise FormatError(f"perm has {len(perm)} values, expected {n}")
        return Poset.from_permutation(perm)
    return Poset.from_relations(n, pairs)


def dumps(poset, comment=None):
    lines = []
    if comment:
        for row in comment.splitlines():
            lines.append(f"# {row}")
    lines.append(f"n {poset.n}")
    for a, b in poset.covers():
        lines.append(f"rel {a} {b}")
    return "\n".join(lines) + "\n"


def load(path):
    with open(path, encoding="utf-8") as handle:
        try:
            return loads(handle.read())
        except FormatError as exc:
            raise FormatError(f"{path}: {exc}") from exc


def dump(poset, path, comment=None):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(poset, comment))
