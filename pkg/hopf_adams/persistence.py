# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""JSON documents for algebras, graded maps and PBW bases, and the build cache.

A HopfData document looks like::

    {
      "name": "ssym<=2",
      "grading_rank": 1,
      "bound": 2,
      "unit": "F:()",
      "basis": {"0": ["F:()"], "1": ["F:1"], "2": ["F:12", "F:21"]},
      "product": [["F:1", "F:1", [["F:12", "1"], ["F:21", "1"]]], ...],
      "coproduct": [["F:1", [["F:()", "F:1", "1"], ["F:1", "F:()", "1"]]], ...]
    }

Degrees are written as their parts joined by commas and scalars as "p" or
"p/q" strings. Output is canonical: keys sorted, entries in basis order.
"""

from __future__ import annotations

import hashlib
import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

from hopf_adams.algebra import Element, GradedBasis, GradedMap, HopfData, Tensor
from hopf_adams.errors import CacheError, HopfError, SchemaError
from hopf_adams.grading import MultiDegree
from hopf_adams.linalg import format_scalar, from_rows, parse_scalar
from hopf_adams.pbw import Generator, GeneratorFamily, PBWBasis
from hopf_adams.version import __version__

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def degree_key(degree: MultiDegree) -> str:
    """Text key of a degree."""
    return str(degree)


def parse_degree(text: str, pointer: str) -> MultiDegree:
    """Read a degree key."""
    try:
        return MultiDegree(tuple(int(p) for p in text.split(",")))
    except ValueError as err:
        msg = f"invalid degree {text!r}"
        raise SchemaError(msg, pointer) from err


def _scalar(text: Any, pointer: str) -> Any:
    if not isinstance(text, str):
        msg = f"scalars are strings, got {type(text).__name__}"
        raise SchemaError(msg, pointer)
    try:
        value, canonical = parse_scalar(text)
    except ValueError as err:
        msg = f"invalid scalar {text!r}"
        raise SchemaError(msg, pointer) from err
    if not canonical:
        logger.warning("%s: scalar %r normalized to %s", pointer, text, format_scalar(value))
    return value


def _expect(value: Any, kind: type | tuple[type, ...], pointer: str) -> Any:
    if not isinstance(value, kind):
        msg = f"expected {getattr(kind, '__name__', kind)}, got {type(value).__name__}"
        raise SchemaError(msg, pointer)
    return value


def _label(basis: GradedBasis, value: Any, pointer: str) -> str:
    _expect(value, str, pointer)
    if value not in basis:
        msg = f"unknown basis label {value!r}"
        raise SchemaError(msg, pointer)
    return value


def hopf_to_json(hopf: HopfData) -> dict[str, Any]:
    """Canonical document of an algebra."""
    basis = hopf.basis
    product = []
    for (left, right), value in sorted(hopf.product.items(), key=lambda item: (basis.sort_key(item[0][0]), basis.sort_key(item[0][1]))):
        if value:
            terms = sorted(value.items(), key=lambda term: basis.sort_key(term[0]))
            product.append([left, right, [[label, format_scalar(c)] for label, c in terms]])
    coproduct = [
        [label, [[a, b, format_scalar(c)] for a, b, c in hopf.coproduct[label].canonical(basis)]]
        for label in basis.all_labels()
    ]
    return {
        "format": FORMAT_VERSION,
        "name": hopf.name,
        "grading_rank": basis.rank,
        "bound": basis.bound,
        "unit": basis.unit,
        "basis": {degree_key(d): list(basis.labels(d)) for d in basis.degrees},
        "product": product,
        "coproduct": coproduct,
    }


def hopf_from_json(document: Any) -> HopfData:
    """Validate a document and build the algebra.

    Parameters
    ----------
    document: Any
        Parsed JSON.

    Returns
    -------
    HopfData
        The algebra described by the document.

    Raises
    ------
    SchemaError
        With a JSON pointer to the first offending entry.
    ConnectednessError
        If degree 0 does not have dimension 1.

    """
    _expect(document, dict, "")
    for key in ("grading_rank", "bound", "basis", "product", "coproduct"):
        if key not in document:
            msg = f"missing key {key!r}"
            raise SchemaError(msg, f"/{key}")
    rank = _expect(document["grading_rank"], int, "/grading_rank")
    bound = _expect(document["bound"], int, "/bound")
    strata = {}
    for key, labels in _expect(document["basis"], dict, "/basis").items():
        pointer = f"/basis/{key}"
        degree = parse_degree(key, pointer)
        if degree.rank != rank:
            msg = f"degree {key} does not have rank {rank}"
            raise SchemaError(msg, pointer)
        _expect(labels, list, pointer)
        strata[degree] = [_expect(label, str, f"{pointer}/{i}") for i, label in enumerate(labels)]
    try:
        basis = GradedBasis(strata, bound, rank)
    except HopfError as err:
        if type(err) is HopfError:
            raise SchemaError(str(err), "/basis") from err
        raise
    if "unit" in document and document["unit"] != basis.unit:
        msg = f"unit {document['unit']!r} is not the degree 0 label {basis.unit!r}"
        raise SchemaError(msg, "/unit")

    product = {}
    for i, entry in enumerate(_expect(document["product"], list, "/product")):
        pointer = f"/product/{i}"
        _expect(entry, list, pointer)
        if len(entry) != 3:  # noqa: PLR2004
            msg = "product entries are [left, right, terms]"
            raise SchemaError(msg, pointer)
        left = _label(basis, entry[0], f"{pointer}/0")
        right = _label(basis, entry[1], f"{pointer}/1")
        terms = []
        for j, term in enumerate(_expect(entry[2], list, f"{pointer}/2")):
            term_pointer = f"{pointer}/2/{j}"
            if not isinstance(term, list) or len(term) != 2:  # noqa: PLR2004
                msg = "product terms are [label, scalar]"
                raise SchemaError(msg, term_pointer)
            terms.append((_label(basis, term[0], f"{term_pointer}/0"), _scalar(term[1], f"{term_pointer}/1")))
        product[(left, right)] = Element(terms)

    coproduct = {}
    for i, entry in enumerate(_expect(document["coproduct"], list, "/coproduct")):
        pointer = f"/coproduct/{i}"
        if not isinstance(entry, list) or len(entry) != 2:  # noqa: PLR2004
            msg = "coproduct entries are [label, terms]"
            raise SchemaError(msg, pointer)
        label = _label(basis, entry[0], f"{pointer}/0")
        terms = []
        for j, term in enumerate(_expect(entry[1], list, f"{pointer}/1")):
            term_pointer = f"{pointer}/1/{j}"
            if not isinstance(term, list) or len(term) != 3:  # noqa: PLR2004
                msg = "coproduct terms are [left, right, scalar]"
                raise SchemaError(msg, term_pointer)
            pair = (_label(basis, term[0], f"{term_pointer}/0"), _label(basis, term[1], f"{term_pointer}/1"))
            terms.append((pair, _scalar(term[2], f"{term_pointer}/2")))
        coproduct[label] = Tensor(terms)
    return HopfData(document.get("name", "loaded"), basis, product, coproduct)


def dumps(document: Any) -> str:
    """Canonical JSON text."""
    return json.dumps(document, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def _read(path: Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        msg = f"{path}: malformed JSON at line {err.lineno}: {err.msg}"
        raise SchemaError(msg) from err


def save_hopf(hopf: HopfData, path: Path | str) -> None:
    """Write an algebra as canonical JSON."""
    Path(path).write_text(dumps(hopf_to_json(hopf)), encoding="utf-8")


def load_hopf(path: Path | str) -> HopfData:
    """Read an algebra written by save_hopf or by hand."""
    return hopf_from_json(_read(Path(path)))


def graded_map_from_json(basis: GradedBasis, document: Any) -> GradedMap:
    """Rebuild a graded map from {degree: rows of scalars}."""
    _expect(document, dict, "")
    blocks = {}
    for key, rows in document.items():
        pointer = f"/{key}"
        degree = parse_degree(key, pointer)
        _expect(rows, list, pointer)
        values = [
            [_scalar(v, f"{pointer}/{i}/{j}") for j, v in enumerate(_expect(row, list, f"{pointer}/{i}"))]
            for i, row in enumerate(rows)
        ]
        blocks[degree] = from_rows(values)
    try:
        return GradedMap(basis, blocks)
    except HopfError as err:
        raise SchemaError(str(err)) from err


def save_graded_map(f: GradedMap, path: Path | str) -> None:
    """Write a graded map as canonical JSON."""
    Path(path).write_text(dumps(f.to_json()), encoding="utf-8")


def load_graded_map(basis: GradedBasis, path: Path | str) -> GradedMap:
    """Read a graded map over a known basis."""
    return graded_map_from_json(basis, _read(Path(path)))


def _generator_degree(value: Any, pointer: str) -> MultiDegree:
    _expect(value, list, pointer)
    try:
        return MultiDegree(tuple(int(p) for p in value))
    except (TypeError, ValueError) as err:
        msg = f"invalid degree {value!r}"
        raise SchemaError(msg, pointer) from err


def pbw_from_json(hopf: HopfData, document: Any) -> PBWBasis:
    """Rebuild a PBW basis over a known algebra.

    Generator words are not stored back; the expansions are read as written.
    """
    _expect(document, dict, "")
    generators = []
    for i, entry in enumerate(_expect(document.get("generators"), list, "/generators")):
        pointer = f"/generators/{i}"
        _expect(entry, dict, pointer)
        element = Element(
            (_label(hopf.basis, label, f"{pointer}/element/{j}/0"), _scalar(c, f"{pointer}/element/{j}/1"))
            for j, (label, c) in enumerate(_expect(entry.get("element"), list, f"{pointer}/element"))
        )
        generators.append(
            Generator(
                _expect(entry.get("label"), str, f"{pointer}/label"),
                _generator_degree(entry.get("degree"), f"{pointer}/degree"),
                element,
                entry.get("height"),
            ),
        )
    family = GeneratorFamily(generators, hopf.rank)
    sequences = {}
    names = {}
    for key, seqs in _expect(document.get("sequences"), dict, "/sequences").items():
        pointer = f"/sequences/{key}"
        degree = parse_degree(key, pointer)
        sequences[degree] = []
        for j, entry in enumerate(_expect(seqs, list, pointer)):
            seq = tuple(_expect(entry.get("entries"), list, f"{pointer}/{j}/entries"))
            sequences[degree].append(seq)
            names[seq] = entry.get("name", "")
    expansions = {}
    for key, rows in _expect(document.get("expansions"), dict, "/expansions").items():
        pointer = f"/expansions/{key}"
        expansions[parse_degree(key, pointer)] = from_rows(
            [[_scalar(v, f"{pointer}/{i}/{j}") for j, v in enumerate(row)] for i, row in enumerate(rows)],
        )
    return PBWBasis(hopf, family, sequences, expansions, names)


def save_pbw(basis: PBWBasis, path: Path | str) -> None:
    """Write a PBW basis as canonical JSON."""
    Path(path).write_text(dumps(basis.to_json()), encoding="utf-8")


def load_pbw(hopf: HopfData, path: Path | str) -> PBWBasis:
    """Read a PBW basis over a known algebra."""
    return pbw_from_json(hopf, _read(Path(path)))


def cache_key(instance: str, bound: int) -> str:
    """Content address of a built instance."""
    payload = json.dumps({"instance": instance, "bound": bound, "version": __version__}, sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def cached_hopf(cache_dir: Path | str | None, instance: str, bound: int, build: Callable[[], HopfData]) -> HopfData:
    """Load a built instance from the cache or build and store it.

    Parameters
    ----------
    cache_dir: Path, optional
        Cache directory; no caching when None.
    instance: str
        Instance selector, part of the cache key.
    bound: int
        Degree bound, part of the cache key.
    build: Callable
        Builds the instance on a cache miss.

    Returns
    -------
    HopfData
        The instance.

    Raises
    ------
    CacheError
        If the cache entry cannot be read or written.

    """
    if cache_dir is None:
        return build()
    path = Path(cache_dir).expanduser() / f"{cache_key(instance, bound)}.json"
    if path.exists():
        logger.info("cache hit for %s up to %d: %s", instance, bound, path)
        try:
            return load_hopf(path)
        except (OSError, SchemaError) as err:
            msg = f"unreadable cache entry {path}: {err}"
            raise CacheError(msg) from err
    logger.info("cache miss for %s up to %d", instance, bound)
    hopf = build()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        save_hopf(hopf, path)
    except OSError as err:
        msg = f"cannot write cache entry {path}: {err}"
        raise CacheError(msg) from err
    return hopf
