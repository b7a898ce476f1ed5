"""Knot records, Alexander polynomials, and the knot table.

An Alexander polynomial is kept as its symmetric Laurent representative,
normalized so that its value at t = 1 is exactly +1: coefficients are listed
for exponents -d..+d and must read the same in both directions.  That pins a
unique polynomial per knot and makes every resultant downstream a canonical
integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .polynomials import IntPoly

__all__ = [
    "AlexanderPoly",
    "Knot",
    "KnotTable",
    "KnotTableError",
    "alexander_from_seifert",
    "tilde",
    "alexander_mul",
    "load_table",
    "load_table_file",
    "bundled_table",
]


class KnotTableError(ValueError):
    """Raised for malformed or inconsistent knot-table data."""


@dataclass(frozen=True)
class AlexanderPoly:
    """Symmetric Laurent polynomial with value 1 at t = 1.

    ``coeffs[i]`` is the coefficient of t**(i - d) where d is the
    half-degree; the sequence has odd length 2d + 1 and is palindromic.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        if len(c) % 2 == 0 or not c:
            raise KnotTableError(f"coefficient list must have odd length, got {len(c)}")
        if c != c[::-1]:
            raise KnotTableError(f"coefficients are not palindromic: {list(c)}")
        if len(c) > 1 and c[-1] == 0:
            raise KnotTableError("leading coefficient is zero; strip the padding")
        if sum(c) != 1:
            raise KnotTableError(f"value at t=1 is {sum(c)}, must be 1")

    @classmethod
    def normalized(cls, coeffs) -> "AlexanderPoly":
        """Build from raw coefficients, fixing the overall sign and stripping
        symmetric zero padding; anything else wrong raises."""
        c = list(coeffs)
        if len(c) % 2 == 0 or not c:
            raise KnotTableError(f"coefficient list must have odd length, got {len(c)}")
        while len(c) > 1 and c[0] == 0 and c[-1] == 0:
            c = c[1:-1]
        if sum(c) == -1:
            c = [-x for x in c]
        return cls(tuple(c))

    @property
    def half_degree(self) -> int:
        return len(self.coeffs) // 2

    def __mul__(self, other: "AlexanderPoly") -> "AlexanderPoly":
        return alexander_mul(self, other)

    def __str__(self) -> str:
        d = self.half_degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = i - d
            if e == 0:
                parts.append(f"{c}")
            else:
                base = "t" if e == 1 else ("t^-1" if e == -1 else f"t^{e}")
                parts.append(base if c == 1 else ("-" + base if c == -1 else f"{c}*{base}"))
        return " + ".join(reversed(parts)).replace("+ -", "- ")


def tilde(a: AlexanderPoly) -> IntPoly:
    """The ordinary polynomial t**d * a(t) in Z[t], of degree 2d."""
    return IntPoly(a.coeffs)


def alexander_mul(a: AlexanderPoly, b: AlexanderPoly) -> AlexanderPoly:
    """Product of symmetric representatives (connected sums multiply)."""
    prod = tilde(a) * tilde(b)
    n = a.half_degree + b.half_degree
    full = list(prod.coeffs) + [0] * (2 * n + 1 - len(prod.coeffs))
    return AlexanderPoly(tuple(full))


def _poly_matrix_det(m: list[list[IntPoly]]) -> IntPoly:
    # cofactor expansion along the first row; fine for the small matrices here
    n = len(m)
    if n == 0:
        return IntPoly((1,))
    if n == 1:
        return m[0][0]
    total = IntPoly()
    for j, entry in enumerate(m[0]):
        if entry.is_zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = entry * _poly_matrix_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander_from_seifert(v: list[list[int]]) -> AlexanderPoly:
    """Normalize det(V - t*V^T) for a square integer Seifert matrix V.

    The determinant is automatically palindromic of even degree after the
    shared t-power is stripped; the sign is flipped so the value at 1 is +1.
    An empty matrix yields the unknot polynomial.
    """
    n = len(v)
    if any(len(row) != n for row in v):
        raise KnotTableError("Seifert matrix must be square")
    if n % 2:
        raise KnotTableError("Seifert matrix must have even size 2g")
    m = [
        [IntPoly((v[i][j], -v[j][i])) for j in range(n)]
        for i in range(n)
    ]
    det = _poly_matrix_det(m)
    if det.is_zero:
        raise KnotTableError("det(V - tV^T) vanishes; not a Seifert matrix")
    full = list(det.coeffs) + [0] * (n + 1 - len(det.coeffs))
    if full != full[::-1]:
        raise KnotTableError("det(V - tV^T) is not palindromic")  # pragma: no cover
    while len(full) > 1 and full[0] == 0 and full[-1] == 0:
        full = full[1:-1]
    s = sum(full)
    if s == -1:
        full = [-x for x in full]
    elif s != 1:
        raise KnotTableError(f"det(V - V^T) = {s}, must be +-1; not a Seifert matrix")
    return AlexanderPoly(tuple(full))


@dataclass(frozen=True)
class Knot:
    """A named knot with its Alexander polynomial and optional extra data.

    genus and arc_index are user-supplied facts, never computed; operations
    that need them fail loudly when they are absent.
    """

    name: str
    alexander: AlexanderPoly
    genus: int | None = None
    arc_index: int | None = None
    fibered: bool = False
    seifert: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if not self.name:
            raise KnotTableError("knot name must be nonempty")
        if self.genus is not None and self.genus < 0:
            raise KnotTableError(f"{self.name}: genus must be >= 0")
        if self.arc_index is not None and self.arc_index < 2:
            raise KnotTableError(f"{self.name}: arc index must be >= 2")
        d = self.alexander.half_degree
        if self.genus is not None and d > self.genus:
            raise KnotTableError(
                f"{self.name}: Alexander half-degree {d} exceeds genus {self.genus}"
            )
        if self.fibered and self.genus is not None and self.genus != d:
            raise KnotTableError(
                f"{self.name}: fibered knot needs genus == Alexander half-degree "
                f"({self.genus} != {d})"
            )
        if self.seifert is not None:
            derived = alexander_from_seifert([list(r) for r in self.seifert])
            if derived != self.alexander:
                raise KnotTableError(
                    f"{self.name}: Seifert matrix gives {list(derived.coeffs)}, "
                    f"table says {list(self.alexander.coeffs)}"
                )

    @property
    def tilde(self) -> IntPoly:
        return tilde(self.alexander)


class KnotTable:
    """Ordered collection of knots with unique names; immutable after load."""

    def __init__(self, entries):
        self.entries: tuple[Knot, ...] = tuple(entries)
        self._by_name: dict[str, Knot] = {}
        for k in self.entries:
            if k.name in self._by_name:
                raise KnotTableError(f"duplicate knot name {k.name!r}")
            self._by_name[k.name] = k

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def names(self) -> list[str]:
        return [k.name for k in self.entries]

    def get(self, name: str) -> Knot:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown knot {name!r}") from None


_FIELDS = {"name", "alexander", "genus", "arc_index", "fibered", "seifert"}


def _knot_from_record(rec: dict) -> Knot:
    if not isinstance(rec, dict):
        raise KnotTableError(f"table entry must be an object, got {type(rec).__name__}")
    unknown = set(rec) - _FIELDS
    if unknown:
        raise KnotTableError(f"unknown fields {sorted(unknown)} in entry {rec.get('name')!r}")
    for key in ("name", "alexander", "fibered"):
        if key not in rec:
            raise KnotTableError(f"entry {rec.get('name')!r} is missing field {key!r}")
    name = rec["name"]
    coeffs = rec["alexander"]
    if not isinstance(name, str):
        raise KnotTableError("name must be a string")
    if not isinstance(coeffs, list) or not all(isinstance(c, int) for c in coeffs):
        raise KnotTableError(f"{name}: alexander must be an integer array")
    if not isinstance(rec["fibered"], bool):
        raise KnotTableError(f"{name}: fibered must be a boolean")
    for opt in ("genus", "arc_index"):
        if opt in rec and not isinstance(rec[opt], int):
            raise KnotTableError(f"{name}: {opt} must be an integer")
    seifert = None
    if "seifert" in rec:
        raw = rec["seifert"]
        if not isinstance(raw, list) or not all(
            isinstance(row, list) and all(isinstance(x, int) for x in row) for row in raw
        ):
            raise KnotTableError(f"{name}: seifert must be an array of integer arrays")
        seifert = tuple(tuple(row) for row in raw)
    try:
        alex = AlexanderPoly.normalized(coeffs)
    except KnotTableError as exc:
        raise KnotTableError(f"{name}: {exc}") from None
    return Knot(
        name=name,
        alexander=alex,
        genus=rec.get("genus"),
        arc_index=rec.get("arc_index"),
        fibered=rec["fibered"],
        seifert=seifert,
    )


def load_table(document) -> KnotTable:
    """Parse and validate a knot-table document (JSON text or parsed array)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise KnotTableError(f"invalid JSON: {exc}") from None
    if not isinstance(document, list):
        raise KnotTableError("knot table must be a JSON array of objects")
    return KnotTable(_knot_from_record(rec) for rec in document)


def load_table_file(path) -> KnotTable:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise KnotTableError(f"cannot read table {path}: {exc}") from None
    return load_table(text)


def bundled_table() -> KnotTable:
    """The table shipped with the package (unknot through the 6-crossing
    knots plus two connected sums)."""
    text = resources.files("covercalc").joinpath("data/knots.json").read_text("utf-8")
    return load_table(text)
