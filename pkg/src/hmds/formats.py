"""JSON code descriptions.

RS code::

    {"field": {"p": 7, "m": 1}, "kind": "rs", "k": 3, "points": [0, 1, 2, 3, 4, 5]}

Generator-matrix code::

    {"field": {"p": 2, "m": 2, "modulus": [1, 1, 1]}, "kind": "generator", "k": 2,
     "generator": [[1, 0, 1], [0, 1, 3]]}

Elements are canonical integers; see :mod:`hmds.gf`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldSpec
from .linalg import MatrixGF
from .rs import RSCode, vandermonde

__all__ = ["CodeDescription", "code_from_json", "code_to_json"]


@dataclass(frozen=True)
class CodeDescription:
    field: FieldSpec
    kind: str
    k: int
    points: tuple[int, ...] | None = None
    generator: MatrixGF | None = None

    def __post_init__(self):
        if self.kind == "rs":
            if self.points is None or self.generator is not None:
                raise ValueError("an rs code needs points and no generator")
        elif self.kind == "generator":
            if self.generator is None or self.points is not None:
                raise ValueError("a generator code needs a generator matrix and no points")
            if self.generator.rows != self.k:
                raise ValueError(f"generator has {self.generator.rows} rows, k = {self.k}")
        else:
            raise ValueError(f"unknown code kind {self.kind!r}")

    @property
    def n(self) -> int:
        return len(self.points) if self.kind == "rs" else self.generator.cols

    def rs(self) -> RSCode:
        if self.kind != "rs":
            raise ValueError("not an RS code")
        return RSCode(self.field, self.points, self.k)

    def matrix(self) -> MatrixGF:
        return vandermonde(self.rs()) if self.kind == "rs" else self.generator

    @classmethod
    def from_rs(cls, code: RSCode) -> "CodeDescription":
        return cls(code.field, "rs", code.k, tuple(code.points))

    @classmethod
    def from_matrix(cls, G: MatrixGF) -> "CodeDescription":
        return cls(G.field, "generator", G.rows, None, G)


def code_from_json(d: dict) -> CodeDescription:
    if "field" not in d:
        raise ValueError("code description has no field")
    F = FieldSpec.from_json(d["field"])
    kind = d.get("kind")
    k = d["k"]
    if kind == "rs":
        desc = CodeDescription(F, "rs", k, tuple(d["points"]))
        desc.rs()  # validates distinctness and 1 <= k <= n
        return desc
    if kind == "generator":
        rows = d["generator"]
        ncols = len(rows[0]) if rows else d.get("n", 0)
        return CodeDescription(F, "generator", k, None, MatrixGF(F, rows, ncols))
    raise ValueError(f"unknown code kind {kind!r}")


def code_to_json(code) -> dict:
    if isinstance(code, RSCode):
        return code.to_json()
    if isinstance(code, MatrixGF):
        code = CodeDescription.from_matrix(code)
    if code.kind == "rs":
        return {"field": code.field.to_json(), "kind": "rs", "k": code.k, "points": list(code.points)}
    return {"field": code.field.to_json(), "kind": "generator", "k": code.k,
            "n": code.generator.cols, "generator": [list(r) for r in code.generator.entries]}
