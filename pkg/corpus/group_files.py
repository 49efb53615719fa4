# corpus/group_files.py

"""
Group description files (UTF-8, line oriented):

    # comment
    degree 5
    gen (1 2 3 4 5)
    gen (1 2)

Points are 1-based here and 0-based everywhere else; `gen ()` is the identity.
"""

from __future__ import annotations

from groups.perm_group import PermGroup
from groups.permutation import Permutation
from utils.errors import FormatError


def parse_group_file(text: str) -> PermGroup:
    degree: int | None = None
    gens: list[Permutation] = []
    n_gen_lines = 0
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()

        if degree is None:
            if keyword != "degree":
                raise FormatError("expected 'degree <n>' before any generator", line=lineno)
            try:
                degree = int(rest)
            except ValueError:
                raise FormatError(f"invalid degree {rest!r}", line=lineno)
            if degree < 1:
                raise FormatError(f"degree must be positive, got {degree}", line=lineno)
            continue

        if keyword == "degree":
            raise FormatError("degree declared twice", line=lineno)
        if keyword != "gen":
            raise FormatError(f"unknown keyword {keyword!r}", line=lineno)
        try:
            gens.append(Permutation.parse(rest, degree, one_based=True))
        except FormatError as e:
            raise FormatError(str(e), line=lineno)
        n_gen_lines += 1

    if degree is None:
        raise FormatError("missing 'degree <n>' line", line=max(last_line, 1))
    if n_gen_lines == 0:
        raise FormatError("empty generator list", line=max(last_line, 1))
    return PermGroup(degree, gens)


def group_to_text(G: PermGroup, name: str | None = None) -> str:
    lines = []
    if name:
        lines.append(f"# {name} (order {G.order()})")
    lines.append(f"degree {G.degree}")
    for g in G.generators or (G.identity(),):
        lines.append(f"gen {g.to_cycle_string(one_based=True)}")
    return "\n".join(lines) + "\n"
