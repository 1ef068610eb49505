"""Built-in braiding matrices and the matrix file loader."""

from __future__ import annotations

import json
import re
import sys
from pathlib import Path
from typing import Dict, Sequence

from .bicharacter import BraidingMatrix, reflect_matrix
from .cyclotomic import RootOfUnity, parse_root
from .errors import ParseError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = [
    "super_a11",
    "nonstandard_rank2",
    "cartan_type",
    "CARTAN_TYPES",
    "catalog_keys",
    "default_suite",
    "resolve",
    "load_matrix_file",
    "dump_matrix",
]

# Cartan matrices with symmetrizers d, so that d_i c_ij is symmetric.
CARTAN_TYPES: Dict[str, tuple] = {
    "A1": (((2,),), (1,)),
    "A2": (((2, -1), (-1, 2)), (1, 1)),
    "B2": (((2, -2), (-1, 2)), (1, 2)),
    "G2": (((2, -3), (-1, 2)), (1, 3)),
    "A3": (((2, -1, 0), (-1, 2, -1), (0, -1, 2)), (1, 1, 1)),
    "B3": (((2, -1, 0), (-1, 2, -2), (0, -1, 2)), (1, 1, 2)),
    "C3": (((2, -1, 0), (-1, 2, -1), (0, -2, 2)), (2, 2, 1)),
}

_DEFAULT_ORDERS = {"A1": 3, "A2": 5, "B2": 7, "G2": 7, "A3": 5, "B3": 7, "C3": 7}


def super_a11(n: int) -> BraidingMatrix:
    """``[[-1, -q], [-1, -1]]`` for ``q`` a primitive ``n``-th root of unity."""
    if n <= 2:
        raise ParseError(f"super-A11 needs N > 2, got N={n}")
    minus = RootOfUnity(1, 2)
    q = RootOfUnity(1, n)
    return BraidingMatrix(((minus, minus * q), (minus, minus)))


def cartan_type(c: Sequence[Sequence[int]], d: Sequence[int], order: int) -> BraidingMatrix:
    """``q_ij = q^{d_i c_ij}`` for ``q`` a primitive ``order``-th root of unity."""
    n = len(c)
    if len(d) != n or any(len(r) != n for r in c):
        raise ParseError("Cartan matrix and symmetrizer sizes disagree")
    for i in range(n):
        for j in range(n):
            if d[i] * c[i][j] != d[j] * c[j][i]:
                raise ParseError("d does not symmetrize the Cartan matrix")
    if order < 2:
        raise ParseError(f"root of unity order must be >= 2, got {order}")
    return BraidingMatrix(tuple(tuple(RootOfUnity(d[i] * c[i][j], order) for j in range(n)) for i in range(n)))


def nonstandard_rank2() -> BraidingMatrix:
    """A rank-two matrix whose ten orbit objects have different Cartan matrices.

    ``q_11`` of order 3, ``q_12 q_21`` of order 4, ``q_22 = -1``.
    """
    return BraidingMatrix.from_strings([["1/3", "1/4"], ["0", "1/2"]])


def _super_family(n: int) -> Dict[str, BraidingMatrix]:
    q = super_a11(n)
    p = reflect_matrix(q, 0)
    r = reflect_matrix(q, 1)
    return {
        f"super-A11({n})": q,
        f"super-A11-p({n})": p,
        f"super-A11-r({n})": r,
        f"super-A11-t({n})": q.transpose(),
        f"super-A11-pt({n})": p.transpose(),
        f"super-A11-rt({n})": r.transpose(),
    }


def catalog_keys():
    """Base names accepted by :func:`resolve`."""
    names = ["super-A11", "super-A11-p", "super-A11-r", "super-A11-t", "super-A11-pt", "super-A11-rt"]
    names += [f"cartan-{t}" for t in CARTAN_TYPES]
    return names + ["cartan", "rank1", "nonstandard-rank2"]


def default_suite() -> Dict[str, BraidingMatrix]:
    """The named inputs swept by ``verify --catalog all`` and the acceptance suite."""
    out: Dict[str, BraidingMatrix] = {}
    for n in (3, 4, 5):
        out.update(_super_family(n))
    for t in ("A1", "A2", "B2", "G2", "A3"):
        c, d = CARTAN_TYPES[t]
        out[f"cartan-{t}({_DEFAULT_ORDERS[t]})"] = cartan_type(c, d, _DEFAULT_ORDERS[t])
    out["cartan-B2(5)"] = cartan_type(*CARTAN_TYPES["B2"], 5)
    out["rank1(4)"] = BraidingMatrix(((RootOfUnity(1, 4),),))
    out["nonstandard-rank2"] = nonstandard_rank2()
    return out


_KEY_RE = re.compile(r"^([A-Za-z0-9-]+?)(?:\((\d+)\))?$")


def _int_param(params: Dict[str, str], name: str, default=None) -> int:
    if name not in params:
        if default is None:
            raise ParseError(f"catalog entry needs parameter {name}")
        return default
    try:
        return int(params[name])
    except ValueError:
        raise ParseError(f"parameter {name}={params[name]!r} is not an integer") from None


def _int_list(text: str, name: str):
    try:
        return [int(x) for x in text.replace(";", ",").split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"parameter {name}={text!r} is not a list of integers") from None


def resolve(key: str, params: Dict[str, str] | None = None) -> BraidingMatrix:
    """Expand a catalog key such as ``super-A11`` with ``N=4`` or ``super-A11(4)``.

    ``cartan`` takes ``C`` (rows separated by ``;``), ``d`` and ``order``;
    ``cartan-B2`` and friends take ``order`` (or ``N``).
    """
    params = dict(params or {})
    m = _KEY_RE.match(key.strip())
    if not m:
        raise ParseError(f"unknown catalog key {key!r}")
    base, inline = m.group(1), m.group(2)
    if inline is not None:
        params.setdefault("N", inline)
        params.setdefault("order", inline)
    if base.startswith("super-A11"):
        n = _int_param(params, "N")
        fam = _super_family(n)
        name = f"{base}({n})"
        if name not in fam:
            raise ParseError(f"unknown catalog key {key!r}")
        return fam[name]
    if base == "cartan":
        if "C" not in params or "d" not in params:
            raise ParseError("catalog entry 'cartan' needs parameters C, d and order")
        rows = [_int_list(r, "C") for r in params["C"].split(";") if r.strip()]
        d = _int_list(params["d"], "d")
        order = _int_param(params, "order", _int_param(params, "N", 0) or None)
        return cartan_type(rows, d, order)
    if base.startswith("cartan-") and base[7:] in CARTAN_TYPES:
        t = base[7:]
        c, d = CARTAN_TYPES[t]
        order = _int_param(params, "order", int(params["N"]) if "N" in params else _DEFAULT_ORDERS[t])
        return cartan_type(c, d, order)
    if base == "nonstandard-rank2":
        return nonstandard_rank2()
    if base == "rank1":
        return BraidingMatrix(((RootOfUnity(1, _int_param(params, "N")),),))
    raise ParseError(f"unknown catalog key {key!r}; known: {', '.join(catalog_keys())}")


def _matrix_from_mapping(data, origin: str) -> BraidingMatrix:
    if not isinstance(data, dict):
        raise ParseError(f"{origin}: top level must be a table/object")
    if "entries" not in data:
        raise ParseError(f"{origin}: missing field 'entries'")
    entries = data["entries"]
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise ParseError(f"{origin}: field 'entries' must be a list of rows")
    theta = data.get("theta", len(entries))
    if not isinstance(theta, int) or theta != len(entries):
        raise ParseError(f"{origin}: field 'theta'={theta!r} does not match {len(entries)} rows")
    rows = []
    for i, r in enumerate(entries):
        if len(r) != theta:
            raise ParseError(f"{origin}: entries row {i + 1} has {len(r)} items, expected {theta}")
        row = []
        for j, x in enumerate(r):
            try:
                row.append(parse_root(x))
            except ParseError as e:
                raise ParseError(f"{origin}: entries[{i + 1}][{j + 1}]: {e}") from None
        rows.append(tuple(row))
    return BraidingMatrix(tuple(rows))


def load_matrix_text(text: str, fmt: str, origin: str = "<input>") -> BraidingMatrix:
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"{origin}: line {e.lineno} column {e.colno}: {e.msg}") from None
    else:
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as e:
            raise ParseError(f"{origin}: {e}") from None
    return _matrix_from_mapping(data, origin)


def load_matrix_file(path) -> BraidingMatrix:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise ParseError(f"cannot read {p}: {e.strerror}") from None
    fmt = "json" if p.suffix.lower() == ".json" else "toml"
    return load_matrix_text(text, fmt, str(p))


def dump_matrix(q: BraidingMatrix, fmt: str = "json") -> str:
    rows = q.to_strings()
    if fmt == "json":
        return json.dumps({"theta": q.theta, "entries": rows})
    body = ", ".join("[" + ", ".join(f'"{x}"' for x in r) + "]" for r in rows)
    return f"theta = {q.theta}\nentries = [{body}]\n"
