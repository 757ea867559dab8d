"""Built-in example catalog."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .gitdata import GITData


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    data: GITData
    subtorus: tuple | None = None  # exponent substitution applied before expanding
    omega_plus: tuple | None = None
    omega_minus: tuple | None = None

    def to_json_dict(self) -> dict:
        out = {"name": self.name, "description": self.description, "data": self.data.to_json_dict()}
        if self.subtorus is not None:
            out["subtorus"] = [list(r) for r in self.subtorus]
        if self.omega_plus is not None:
            out["omega_plus"] = [str(x) for x in self.omega_plus]
            out["omega_minus"] = [str(x) for x in self.omega_minus]
        return out


def catalog() -> list[CatalogEntry]:
    return [
        CatalogEntry(
            "conifold",
            "resolved conifold, total space of O(-1)+O(-1) on P^1; the wall at 0 is the Atiyah flop",
            GITData.make(1, [(1,), (1,), (-1,), (-1,)], ["1"]),
            omega_plus=("1",),
            omega_minus=("-1",),
        ),
        CatalogEntry(
            "c2-diagonal",
            "affine plane, full 2-torus action restricted to the diagonal 1-torus",
            GITData.make(0, [(), ()], []),
            subtorus=((1,), (1,)),
        ),
        CatalogEntry(
            "p12",
            "weighted projective line P(1,2), one Z/2 orbifold point",
            GITData.make(1, [(1,), (2,)], ["1"]),
        ),
        CatalogEntry(
            "kp2",
            "canonical bundle of P^2; flops to C^3/Z_3 across the wall at 0",
            GITData.make(1, [(1,), (1,), (1,), (-3,)], ["1"]),
            omega_plus=("1",),
            omega_minus=("-1",),
        ),
    ]


def get_example(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise InputError("unknown example '%s'; see the catalog command" % name)
