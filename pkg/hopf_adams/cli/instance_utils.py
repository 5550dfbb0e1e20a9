# -*- coding: utf-8 -*-

# Common helper functions for the hopf-adams commands.
# Copyright: (c) 2026, hopf-adams contributors
#
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

import logging
import weakref
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from sympy.polys.matrices import DomainMatrix

from hopf_adams.algebra import GradedMap, HopfData
from hopf_adams.convolution import ConvolutionContext
from hopf_adams.errors import ConfigError, HopfError, RankMismatchError
from hopf_adams.grading import MultiDegree
from hopf_adams.instances import (
    InstanceSpec,
    build_instance,
    cocommutative_family,
    commutative_family,
)
from hopf_adams.linalg import format_scalar, power, to_lists
from hopf_adams.pbw import PBWBasis, basis_from_family, change_to_pbw
from hopf_adams.persistence import cached_hopf, load_hopf
from hopf_adams.ssym import build_ssym, represent, ssym_pbw, t_basis

logger = logging.getLogger(__name__)

BUILTIN = ("ssym", "tensor", "shuffle")

_FAMILY_BASES: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def parse_generator(text: str) -> MultiDegree:
    """Read a generator degree such as ``2`` or ``1,0``.

    Raises
    ------
    ConfigError
        If the text is not a comma separated list of naturals.

    """
    try:
        return MultiDegree.coerce(int(part) for part in text.split(","))
    except (ValueError, RankMismatchError) as err:
        msg = f"invalid generator degree {text!r}"
        raise ConfigError(msg) from err


@dataclass(frozen=True)
class RunConfig:
    """Validated view of the parameters of one command."""

    command: str
    instance: str = "ssym"
    bound: int = 3
    n_values: tuple[int, ...] = (2,)
    basis: str = "F"
    order: str = "natural"
    output_format: str = "text"
    cache_dir: Path | None = None
    generators: tuple[MultiDegree, ...] = (MultiDegree.of(1),)
    weak_order: str = "right"

    def __post_init__(self: RunConfig) -> None:
        """Check the selectors."""
        if self.bound < 0:
            msg = f"the degree bound must be nonnegative, got {self.bound}"
            raise ConfigError(msg)
        if self.instance not in BUILTIN and not Path(self.instance).is_file():
            msg = f"instance {self.instance!r} is neither {', '.join(BUILTIN)} nor a readable file"
            raise ConfigError(msg)
        if self.basis not in {"F", "M", "T", "pbw"}:
            msg = f"unknown basis {self.basis!r}"
            raise ConfigError(msg)
        if self.order not in {"natural", "precL", "precR"}:
            msg = f"unknown order {self.order!r}"
            raise ConfigError(msg)
        if self.output_format not in {"text", "json", "csv"}:
            msg = f"unknown output format {self.output_format!r}"
            raise ConfigError(msg)

    @classmethod
    def from_params(cls: type[RunConfig], command: str, params: dict[str, Any]) -> RunConfig:
        """Build the config from resolved command parameters."""
        cache_dir = None
        if params.get("cache_dir") and not params.get("no_cache"):
            cache_dir = Path(params["cache_dir"]).expanduser()
        return cls(
            command=command,
            instance=params.get("instance") or "ssym",
            bound=params.get("degree", 3),
            n_values=tuple(params.get("n") or (2,)),
            basis=params.get("basis") or "F",
            order=params.get("order") or "natural",
            output_format=params.get("format") or "text",
            cache_dir=cache_dir,
            generators=tuple(parse_generator(g) for g in params.get("generators") or ["1"]),
            weak_order=params.get("weak_order") or "right",
        )

    @property
    def is_ssym(self: RunConfig) -> bool:
        """Whether the permutation algebra is selected."""
        return self.instance == "ssym"

    def spec(self: RunConfig) -> InstanceSpec | None:
        """The built-in tensor or shuffle instance, if selected."""
        if self.instance not in {"tensor", "shuffle"}:
            return None
        try:
            return InstanceSpec(self.instance, self.generators, self.bound)  # type: ignore[arg-type]
        except HopfError as err:
            raise ConfigError(str(err)) from err


def instance_key(config: RunConfig) -> str:
    """Name of the selected instance in the cache."""
    spec = config.spec()
    return spec.name if spec is not None else config.instance


def load_algebra(config: RunConfig) -> HopfData:
    """Build, fetch from the cache or read the selected algebra.

    Raises
    ------
    ConfigError
        If the permutation algebra is asked for below degree 1, or a file
        instance has a smaller bound than requested.

    """
    if config.is_ssym:
        if config.bound < 1:
            msg = "the permutation algebra needs a degree of at least 1"
            raise ConfigError(msg)
        return cached_hopf(config.cache_dir, "ssym", config.bound, lambda: build_ssym(config.bound))
    spec = config.spec()
    if spec is not None:
        return cached_hopf(config.cache_dir, spec.name, config.bound, lambda: build_instance(spec))
    hopf = load_hopf(config.instance)
    if config.bound > hopf.bound:
        msg = f"{config.instance} is built up to degree {hopf.bound}, below the requested {config.bound}"
        raise ConfigError(msg)
    logger.info("loaded %s from %s", hopf.name, config.instance)
    return hopf


def context(config: RunConfig) -> ConvolutionContext:
    """The convolution context of the selected algebra at the requested bound."""
    return ConvolutionContext(load_algebra(config), config.bound)


def pbw_basis(config: RunConfig, hopf: HopfData) -> PBWBasis:
    """The PBW basis of a built-in algebra.

    The permutation algebra uses the T-basis, or the constructed basis when
    ``pbw`` is asked for; the tensor and shuffle instances use their Lyndon
    families.

    Raises
    ------
    ConfigError
        For algebras read from a file.

    """
    if config.is_ssym:
        if config.basis == "pbw":
            basis, _ = ssym_pbw(hopf)
            return basis
        return t_basis(hopf)
    spec = config.spec()
    if spec is None:
        msg = "PBW bases are only known for the built-in instances"
        raise ConfigError(msg)
    if hopf not in _FAMILY_BASES:
        family = cocommutative_family(hopf, spec) if spec.kind == "tensor" else commutative_family(hopf, spec)
        _FAMILY_BASES[hopf] = basis_from_family(hopf, family)
    return _FAMILY_BASES[hopf]


def strata(config: RunConfig, hopf: HopfData) -> list[MultiDegree]:
    """Degrees of total degree equal to the bound."""
    return [degree for degree in hopf.basis.degrees if degree.total == config.bound]


def in_basis(config: RunConfig, hopf: HopfData, f: GradedMap, degree: MultiDegree) -> tuple[list[str], DomainMatrix]:
    """The block of a map in the basis and order of the config.

    Raises
    ------
    ConfigError
        If the basis or order is only known for the permutation algebra.

    """
    if config.is_ssym:
        return represent(hopf, f, degree, config.basis, config.order, config.weak_order)  # type: ignore[arg-type]
    if config.order != "natural":
        msg = f"order {config.order} needs the permutation algebra"
        raise ConfigError(msg)
    if config.basis == "F":
        return list(hopf.basis.labels(degree)), f.block(degree)
    if config.basis == "pbw":
        basis = pbw_basis(config, hopf)
        return [basis.name(seq) for seq in basis.sequences[degree]], change_to_pbw(basis, f, degree)
    msg = f"basis {config.basis} needs the permutation algebra"
    raise ConfigError(msg)


def matrix_result(title: str, labels: list[str], matrix: DomainMatrix) -> dict[str, Any]:
    """A matrix entry of a command result; column j is the image of labels[j]."""
    return dict(
        title=title,
        rows=labels,
        columns=labels,
        entries=[[format_scalar(v) for v in row] for row in to_lists(matrix)],
    )


def adams_diagonal(n: int) -> Any:
    """Expected diagonal n^l(V) of an Adams operator in a PBW basis."""
    return lambda seq: power(n, len(seq))
