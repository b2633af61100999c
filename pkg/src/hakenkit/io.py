"""Plain-text formats for complexes, patterns and ledgers.

Complex file: one maximal simplex per line as strictly increasing integers;
``#`` starts a comment line.  Pattern file: a ``[carrier]`` section followed by
``[facet <name>]`` sections.  Ledger file: ``[step k]`` headers, each followed
by a ``[cut]`` section listing the locus in the current carrier's labels.
Writers are canonical: sections sorted by name, simplices sorted.
"""

from __future__ import annotations

import warnings
from pathlib import Path
from typing import Dict, Iterable, List, Tuple, Union

from .complex import Complex, Simplex
from .pattern import PatternedComplex, make_pattern

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


class RedundantSimplexWarning(UserWarning):
    pass


def _parse_simplex(line: str, lineno: int) -> Simplex:
    try:
        labels = tuple(int(tok) for tok in line.split())
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer label in {line!r}") from None
    if any(a >= b for a, b in zip(labels, labels[1:])):
        raise FormatError(f"line {lineno}: labels must be strictly increasing: {line!r}")
    return labels


def _simplices_to_complex(entries: List[Tuple[int, Simplex]]) -> Complex:
    sims = [s for _, s in entries]
    K = Complex(sims)
    kept = set(K.maximal)
    for lineno, s in entries:
        if s not in kept:
            warnings.warn(f"line {lineno}: simplex {s} is redundant and was dropped", RedundantSimplexWarning)
            kept.add(s)  # warn once per distinct simplex
    return K


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_complex(text: str) -> Complex:
    return _simplices_to_complex([(no, _parse_simplex(line, no)) for no, line in _lines(text)])


def format_complex(K: Complex) -> str:
    return "".join(" ".join(map(str, s)) + "\n" for s in K.maximal)


def _sections(text: str) -> List[Tuple[str, int, List[Tuple[int, str]]]]:
    out: List[Tuple[str, int, List[Tuple[int, str]]]] = []
    for lineno, line in _lines(text):
        if line.startswith("["):
            if not line.endswith("]"):
                raise FormatError(f"line {lineno}: malformed section header {line!r}")
            out.append((line[1:-1].strip(), lineno, []))
        else:
            if not out:
                raise FormatError(f"line {lineno}: data before the first section header")
            out[-1][2].append((lineno, line))
    return out


def parse_pattern(text: str) -> PatternedComplex:
    carrier = None
    facets: Dict[str, Complex] = {}
    for header, lineno, body in _sections(text):
        K = _simplices_to_complex([(no, _parse_simplex(line, no)) for no, line in body])
        parts = header.split()
        if parts == ["carrier"]:
            if carrier is not None:
                raise FormatError(f"line {lineno}: duplicate [carrier] section")
            carrier = K
        elif len(parts) == 2 and parts[0] == "facet":
            if parts[1] in facets:
                raise FormatError(f"line {lineno}: duplicate facet {parts[1]}")
            facets[parts[1]] = K
        else:
            raise FormatError(f"line {lineno}: unknown section [{header}]")
    if carrier is None:
        raise FormatError("missing [carrier] section")
    return make_pattern(carrier, facets)


def format_pattern(P: PatternedComplex) -> str:
    out = ["[carrier]\n", format_complex(P.carrier)]
    for name in P.facet_ids:
        out.append(f"[facet {name}]\n")
        out.append(format_complex(P.facets[name]))
    return "".join(out)


def parse_ledger(text: str) -> List[Complex]:
    cuts: List[Complex] = []
    expect_cut = False
    for header, lineno, body in _sections(text):
        parts = header.split()
        if len(parts) == 2 and parts[0] == "step":
            if expect_cut:
                raise FormatError(f"line {lineno}: step without a [cut] section")
            if body:
                raise FormatError(f"line {lineno}: data directly under a step header")
            try:
                k = int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad step index {parts[1]!r}") from None
            if k != len(cuts):
                raise FormatError(f"line {lineno}: expected step {len(cuts)}, found {k}")
            expect_cut = True
        elif parts == ["cut"]:
            if not expect_cut:
                raise FormatError(f"line {lineno}: [cut] without a preceding [step k]")
            cuts.append(_simplices_to_complex([(no, _parse_simplex(line, no)) for no, line in body]))
            expect_cut = False
        else:
            raise FormatError(f"line {lineno}: unknown section [{header}]")
    if expect_cut:
        raise FormatError("last step has no [cut] section")
    return cuts


def format_ledger(cuts: Iterable[Complex]) -> str:
    out = []
    for k, F in enumerate(cuts):
        out.append(f"[step {k}]\n[cut]\n")
        out.append(format_complex(F))
    return "".join(out)


def read_complex(path: PathLike) -> Complex:
    return parse_complex(Path(path).read_text(encoding="utf-8"))


def write_complex(K: Complex, path: PathLike) -> None:
    Path(path).write_text(format_complex(K), encoding="utf-8")


def read_pattern(path: PathLike) -> PatternedComplex:
    return parse_pattern(Path(path).read_text(encoding="utf-8"))


def write_pattern(P: PatternedComplex, path: PathLike) -> None:
    Path(path).write_text(format_pattern(P), encoding="utf-8")


def read_ledger(path: PathLike) -> List[Complex]:
    return parse_ledger(Path(path).read_text(encoding="utf-8"))


def write_ledger(cuts: Iterable[Complex], path: PathLike) -> None:
    Path(path).write_text(format_ledger(cuts), encoding="utf-8")
