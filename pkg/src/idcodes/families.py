"""Code families and verification report types.

A code C r-separates two vertices when B_rho(x) n C != B_rho(y) n C at
rho = r.  The families differ in which radii may be used to tell vertices
apart:

* identifying: every pair separated at the single radius r,
* weak: every vertex owns one radius r_x <= r separating it from all others,
* light: every pair owns some radius r_xy <= r,
* general: every vertex owns a set R_x of at most p radii, drawn from an
  arbitrary allowed set, that jointly separate it from all others.

The first three are the general family with (p=1, {r}), (p=1, [0, r]) and
(p=r+1, [0, r]) respectively, always together with r-domination.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class FamilyKind(enum.Enum):
    IDENTIFYING = "identifying"
    WEAK = "weak"
    LIGHT = "light"
    GENERAL = "general"


def _format_radii(radii: tuple[int, ...]) -> str:
    if len(radii) > 1 and radii == tuple(range(radii[0], radii[-1] + 1)):
        return f"{radii[0]}..{radii[-1]}"
    return ",".join(str(r) for r in radii)


@dataclass(frozen=True)
class FamilySpec:
    """Which code family a code is checked against.

    Use the constructors: ``FamilySpec.identifying(r)``, ``.weak(r)``,
    ``.light(r)`` or ``.general(p, radii)``.
    """

    kind: FamilyKind
    r: int | None = None
    p: int | None = None
    radii: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind is FamilyKind.GENERAL:
            if self.p is None or self.p < 1:
                raise ValueError("general family needs a budget p >= 1")
            if not self.radii:
                raise ValueError("general family needs a nonempty radius set")
            cleaned = tuple(sorted(set(self.radii)))
            if cleaned[0] < 0:
                raise ValueError("radii must be nonnegative")
            object.__setattr__(self, "radii", cleaned)
        else:
            if self.r is None or self.r < 0:
                raise ValueError(f"{self.kind.value} family needs a radius r >= 0")
            if self.p is not None or self.radii is not None:
                raise ValueError(f"{self.kind.value} family takes only r")

    @classmethod
    def identifying(cls, r: int) -> FamilySpec:
        return cls(FamilyKind.IDENTIFYING, r=r)

    @classmethod
    def weak(cls, r: int) -> FamilySpec:
        return cls(FamilyKind.WEAK, r=r)

    @classmethod
    def light(cls, r: int) -> FamilySpec:
        return cls(FamilyKind.LIGHT, r=r)

    @classmethod
    def general(cls, p: int, radii) -> FamilySpec:
        return cls(FamilyKind.GENERAL, p=p, radii=tuple(radii))

    @property
    def identification_radii(self) -> tuple[int, ...]:
        """Radii available for telling vertices apart, ascending."""
        if self.kind is FamilyKind.IDENTIFYING:
            return (self.r,)
        if self.kind is FamilyKind.GENERAL:
            return self.radii
        return tuple(range(self.r + 1))

    @property
    def identification_budget(self) -> int:
        """Maximum number of radii a single vertex may use (p)."""
        if self.kind in (FamilyKind.IDENTIFYING, FamilyKind.WEAK):
            return 1
        if self.kind is FamilyKind.LIGHT:
            return self.r + 1
        return self.p

    @property
    def domination_radii(self) -> tuple[int, ...]:
        """Radii for the domination clause.

        The named families require r-domination (equivalently [0, r]
        domination); the general family requires a nonempty ball at some
        allowed radius.
        """
        if self.kind is FamilyKind.GENERAL:
            return self.radii
        return tuple(range(self.r + 1))

    def __str__(self) -> str:
        if self.kind is FamilyKind.GENERAL:
            return f"general(p={self.p}, radii={_format_radii(self.radii)})"
        return f"{self.kind.value}(r={self.r})"

    def describe_code(self) -> str:
        """Short noun phrase, e.g. "weak 2-code" or "(2,{0..2})-code"."""
        if self.kind is FamilyKind.GENERAL:
            return f"({self.p},{{{_format_radii(self.radii)}}})-code"
        if self.kind is FamilyKind.IDENTIFYING:
            return f"identifying {self.r}-code"
        return f"{self.kind.value} {self.r}-code"

    def to_dict(self) -> dict:
        if self.kind is FamilyKind.GENERAL:
            return {"kind": "general", "p": self.p, "radii": list(self.radii)}
        return {"kind": self.kind.value, "r": self.r}


class WitnessKind(enum.Enum):
    NOT_DOMINATED = "NOT_DOMINATED"
    PAIR_NOT_SEPARATED = "PAIR_NOT_SEPARATED"
    VERTEX_NOT_IDENTIFIABLE = "VERTEX_NOT_IDENTIFIABLE"


@dataclass(frozen=True)
class Witness:
    """Failure evidence for an invalid code.

    ``vertices`` holds the undominated vertex, the unseparated pair, or the
    unidentifiable vertex.  ``blocking`` (vertex-not-identifiable only) lists
    one (radius, opponent) pair per tried radius showing why it fails.
    """

    kind: WitnessKind
    vertices: tuple[int, ...]
    radii_tried: tuple[int, ...]
    blocking: tuple[tuple[int, int], ...] = ()

    def to_dict(self) -> dict:
        out = {
            "type": self.kind.value,
            "vertices": list(self.vertices),
            "radii_tried": list(self.radii_tried),
        }
        if self.blocking:
            out["blocking"] = [list(pair) for pair in self.blocking]
        return out


@dataclass
class RadiusCertificate:
    """Radii proving that a valid code identifies every vertex.

    ``per_vertex[x]`` is the assigned radius set R_x.  For the light family
    ``per_pair[(x, y)]`` (x < y) additionally records one separating radius
    for every pair.
    """

    per_vertex: dict[int, tuple[int, ...]]
    per_pair: dict[tuple[int, int], int] | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "per_vertex": {str(x): list(rs) for x, rs in sorted(self.per_vertex.items())}
        }
        if self.per_pair is not None:
            out["per_pair"] = {
                f"{x},{y}": rho for (x, y), rho in sorted(self.per_pair.items())
            }
        return out


@dataclass
class VerificationReport:
    """Outcome of checking one code against one family spec.

    Exactly one of ``certificate`` (valid) and ``witness`` (invalid) is set,
    except that certificate construction may be skipped on request for bulk
    checks.
    """

    valid: bool
    family: FamilySpec
    code: tuple[int, ...]
    certificate: RadiusCertificate | None = None
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict:
        out: dict = {
            "valid": self.valid,
            "family": self.family.to_dict(),
            "code": list(self.code),
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


@dataclass(frozen=True)
class DominationResult:
    """Result fragment of the domination check alone."""

    dominated: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.dominated
