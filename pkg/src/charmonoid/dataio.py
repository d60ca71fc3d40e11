"""Dataset schema (version 1), bundled corpus access and rendering.

A dataset file is UTF-8 JSON carrying a group's character-theoretic
data: the degrees of its irreducible characters and the decomposition
row of every induced linear character, plus optional tiers (conjugacy
class sizes, cyclotomic character values, quotient index sets,
supercharacter theory block specs).  Indices inside files are 1-based
to match the ``x1 .. xr`` naming; everything in memory is 0-based.

Integers are encoded as JSON numbers up to ``2**53 - 1`` and as decimal
strings above that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import InvariantViolation, SchemaError
from .monoid import MonoidPresentation, Vec, minimal_generators, presentation

_JSON_INT_MAX = 2**53 - 1


def _as_int(value, path: str) -> int:
    if isinstance(value, bool):
        raise SchemaError(path, "expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        stripped = value.lstrip("-")
        if stripped.isdigit():
            return int(value)
    raise SchemaError(path, f"expected an integer, got {value!r}")


def _encode_int(value: int):
    return value if abs(value) <= _JSON_INT_MAX else str(value)


def _expect(obj, cls, path: str, what: str):
    if not isinstance(obj, cls):
        raise SchemaError(path, f"expected {what}")
    return obj


@dataclass(frozen=True)
class IrrInfo:
    label: str
    degree: int


@dataclass(frozen=True)
class InducedRow:
    row: Vec
    subgroup_order: int | None = None
    count: int = 1


@dataclass(frozen=True)
class QuotientInfo:
    name: str
    kernel_indices: tuple[int, ...]  # 0-based indices of Irr(G) trivial on N


@dataclass(frozen=True)
class SupertheorySpec:
    name: str
    blocks: tuple[tuple[int, ...], ...]  # 0-based irreducible indices
    superclasses: tuple[tuple[int, ...], ...] | None = None


@dataclass(frozen=True)
class CyclotomicValues:
    """Character values on classes as coordinates over zeta_N^0..zeta_N^(N-1)."""

    conductor: int
    values: tuple[tuple[Vec, ...], ...]  # [irr][class] -> coordinate list


@dataclass(frozen=True)
class GroupCharData:
    name: str
    order: int
    irr: tuple[IrrInfo, ...]
    induced_rows: tuple[InducedRow, ...]
    classes: tuple[int, ...] | None = None
    char_values: CyclotomicValues | None = None
    quotients: tuple[QuotientInfo, ...] = ()
    supertheories: tuple[SupertheorySpec, ...] = ()
    irr_permutation: tuple[int, ...] | None = None

    @property
    def rank(self) -> int:
        return len(self.irr)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(info.degree for info in self.irr)

    def monoid(self) -> MonoidPresentation:
        return presentation(self.rank, [r.row for r in self.induced_rows])

    def hilbert(self) -> MonoidPresentation:
        return minimal_generators(self.monoid())

    def supertheory(self, name: str) -> SupertheorySpec:
        for spec in self.supertheories:
            if spec.name == name:
                return spec
        raise KeyError(f"dataset {self.name!r} has no supertheory {name!r}")


def _parse_indices(raw, path: str, rank: int) -> tuple[int, ...]:
    raw = _expect(raw, list, path, "a list of 1-based indices")
    out = []
    for k, x in enumerate(raw):
        i = _as_int(x, f"{path}[{k}]")
        if not 1 <= i <= rank:
            raise SchemaError(f"{path}[{k}]", f"index {i} outside 1..{rank}")
        out.append(i - 1)
    return tuple(out)


def parse_dataset(data: bytes | str) -> GroupCharData:
    """Parse and fully validate a schema-1 dataset."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    _expect(doc, dict, "$", "a JSON object")
    version = _as_int(doc.get("schema_version"), "$.schema_version")
    if version != 1:
        raise SchemaError("$.schema_version", f"unsupported version {version}")
    group = _expect(doc.get("group"), dict, "$.group", "an object")
    name = _expect(group.get("name"), str, "$.group.name", "a string")
    order = _as_int(group.get("order"), "$.group.order")

    irr_raw = _expect(doc.get("irr"), list, "$.irr", "a list")
    if not irr_raw:
        raise SchemaError("$.irr", "at least one irreducible character required")
    irr = []
    for i, entry in enumerate(irr_raw):
        entry = _expect(entry, dict, f"$.irr[{i}]", "an object")
        label = _expect(entry.get("label"), str, f"$.irr[{i}].label", "a string")
        degree = _as_int(entry.get("degree"), f"$.irr[{i}].degree")
        if degree < 1:
            raise InvariantViolation("degrees positive", f"irr[{i}] has degree {degree}")
        irr.append(IrrInfo(label, degree))
    rank = len(irr)
    if irr[0].degree != 1:
        raise InvariantViolation(
            "trivial character first", f"first degree is {irr[0].degree}"
        )

    rows_raw = _expect(doc.get("induced_rows"), list, "$.induced_rows", "a list")
    rows = []
    for i, entry in enumerate(rows_raw):
        entry = _expect(entry, dict, f"$.induced_rows[{i}]", "an object")
        vec_raw = _expect(entry.get("row"), list, f"$.induced_rows[{i}].row", "a list")
        if len(vec_raw) != rank:
            raise SchemaError(
                f"$.induced_rows[{i}].row",
                f"row {i} has length {len(vec_raw)}, expected {rank}",
            )
        vec = tuple(_as_int(x, f"$.induced_rows[{i}].row[{j}]") for j, x in enumerate(vec_raw))
        if any(x < 0 for x in vec):
            raise InvariantViolation("rows nonnegative", f"row {i}")
        if not any(vec):
            raise InvariantViolation("rows nonzero", f"row {i}")
        sub = entry.get("subgroup_order")
        if sub is not None:
            sub = _as_int(sub, f"$.induced_rows[{i}].subgroup_order")
            if sub < 1 or order % sub:
                raise InvariantViolation(
                    "subgroup order divides group order", f"row {i}: {sub}"
                )
            weighted = sum(x * info.degree for x, info in zip(vec, irr))
            if weighted != order // sub:
                raise InvariantViolation(
                    "row degree equals subgroup index",
                    f"row {i}: {weighted} != {order}/{sub}",
                )
        count = entry.get("count", 1)
        count = _as_int(count, f"$.induced_rows[{i}].count")
        rows.append(InducedRow(vec, sub, count))
    trivial = tuple(1 if j == 0 else 0 for j in range(rank))
    if all(r.row != trivial for r in rows):
        raise InvariantViolation("trivial induced row present", "no row equals e1")

    classes = None
    if doc.get("classes") is not None:
        classes_raw = _expect(doc["classes"], list, "$.classes", "a list")
        classes = tuple(_as_int(x, f"$.classes[{i}]") for i, x in enumerate(classes_raw))
        if sum(classes) != order:
            raise InvariantViolation(
                "class sizes sum to group order", f"{sum(classes)} != {order}"
            )
        if classes[0] != 1:
            raise InvariantViolation("identity class first", f"size {classes[0]}")

    char_values = None
    if doc.get("char_values") is not None:
        cv = _expect(doc["char_values"], dict, "$.char_values", "an object")
        conductor = _as_int(cv.get("conductor"), "$.char_values.conductor")
        if conductor < 1:
            raise SchemaError("$.char_values.conductor", "conductor must be >= 1")
        vals_raw = _expect(cv.get("values"), list, "$.char_values.values", "a list")
        if len(vals_raw) != rank:
            raise SchemaError("$.char_values.values", f"expected {rank} rows")
        table = []
        for i, per_class in enumerate(vals_raw):
            per_class = _expect(per_class, list, f"$.char_values.values[{i}]", "a list")
            row_vals = []
            for c, coords in enumerate(per_class):
                coords = _expect(
                    coords, list, f"$.char_values.values[{i}][{c}]", "a list"
                )
                if len(coords) != conductor:
                    raise SchemaError(
                        f"$.char_values.values[{i}][{c}]",
                        f"expected {conductor} coordinates",
                    )
                row_vals.append(
                    tuple(
                        _as_int(x, f"$.char_values.values[{i}][{c}][{k}]")
                        for k, x in enumerate(coords)
                    )
                )
            table.append(tuple(row_vals))
        char_values = CyclotomicValues(conductor, tuple(table))
        if classes is not None and any(len(r) != len(classes) for r in table):
            raise InvariantViolation("one value per class", "char_values shape")

    quotients = []
    for i, entry in enumerate(doc.get("quotients") or []):
        entry = _expect(entry, dict, f"$.quotients[{i}]", "an object")
        qname = _expect(entry.get("name"), str, f"$.quotients[{i}].name", "a string")
        idx = _parse_indices(
            entry.get("kernel_indices"), f"$.quotients[{i}].kernel_indices", rank
        )
        if 0 not in idx:
            raise InvariantViolation(
                "trivial character in every quotient", f"quotients[{i}]"
            )
        quotients.append(QuotientInfo(qname, idx))

    supertheories = []
    for i, entry in enumerate(doc.get("supertheories") or []):
        entry = _expect(entry, dict, f"$.supertheories[{i}]", "an object")
        sname = _expect(entry.get("name"), str, f"$.supertheories[{i}].name", "a string")
        blocks_raw = _expect(
            entry.get("blocks"), list, f"$.supertheories[{i}].blocks", "a list"
        )
        blocks = tuple(
            _parse_indices(b, f"$.supertheories[{i}].blocks[{k}]", rank)
            for k, b in enumerate(blocks_raw)
        )
        sclasses = None
        if entry.get("superclasses") is not None:
            sc_raw = _expect(
                entry["superclasses"], list, f"$.supertheories[{i}].superclasses", "a list"
            )
            n_classes = len(classes) if classes is not None else rank
            sclasses = tuple(
                _parse_indices(b, f"$.supertheories[{i}].superclasses[{k}]", n_classes)
                for k, b in enumerate(sc_raw)
            )
        supertheories.append(SupertheorySpec(sname, blocks, sclasses))

    irr_permutation = None
    if doc.get("irr_permutation") is not None:
        irr_permutation = _parse_indices(doc["irr_permutation"], "$.irr_permutation", rank)
        if sorted(irr_permutation) != list(range(rank)):
            raise SchemaError("$.irr_permutation", "not a permutation")

    return GroupCharData(
        name=name,
        order=order,
        irr=tuple(irr),
        induced_rows=tuple(rows),
        classes=classes,
        char_values=char_values,
        quotients=tuple(quotients),
        supertheories=tuple(supertheories),
        irr_permutation=irr_permutation,
    )


def emit_dataset(data: GroupCharData) -> bytes:
    """Serialize a dataset; ``parse(emit(parse(x)))`` equals ``parse(x)``."""
    doc: dict = {
        "schema_version": 1,
        "group": {"name": data.name, "order": _encode_int(data.order)},
        "irr": [
            {"label": info.label, "degree": _encode_int(info.degree)}
            for info in data.irr
        ],
        "induced_rows": [],
    }
    for r in data.induced_rows:
        entry: dict = {"row": [_encode_int(x) for x in r.row]}
        if r.subgroup_order is not None:
            entry["subgroup_order"] = _encode_int(r.subgroup_order)
        if r.count != 1:
            entry["count"] = _encode_int(r.count)
        doc["induced_rows"].append(entry)
    if data.classes is not None:
        doc["classes"] = [_encode_int(x) for x in data.classes]
    if data.char_values is not None:
        doc["char_values"] = {
            "conductor": _encode_int(data.char_values.conductor),
            "values": [
                [[_encode_int(x) for x in coords] for coords in per_class]
                for per_class in data.char_values.values
            ],
        }
    if data.quotients:
        doc["quotients"] = [
            {"name": q.name, "kernel_indices": [i + 1 for i in q.kernel_indices]}
            for q in data.quotients
        ]
    if data.supertheories:
        doc["supertheories"] = []
        for t in data.supertheories:
            entry = {"name": t.name, "blocks": [[i + 1 for i in b] for b in t.blocks]}
            if t.superclasses is not None:
                entry["superclasses"] = [[i + 1 for i in b] for b in t.superclasses]
            doc["supertheories"].append(entry)
    if data.irr_permutation is not None:
        doc["irr_permutation"] = [i + 1 for i in data.irr_permutation]
    return (json.dumps(doc, indent=1) + "\n").encode("utf-8")


def bundled_names() -> list[str]:
    files = resources.files("charmonoid.datasets")
    return sorted(
        p.name[: -len(".json")] for p in files.iterdir() if p.name.endswith(".json")
    )


def load_bundled(name: str) -> GroupCharData:
    path = resources.files("charmonoid.datasets").joinpath(f"{name}.json")
    return parse_dataset(path.read_bytes())


def render_monomial(v, variable: str = "x") -> str:
    """Monomial string in the x-variable notation: ``x1x3^2``, ``1`` for zero."""
    parts = []
    for j, e in enumerate(v):
        if e == 0:
            continue
        factor = f"{variable}{j + 1}"
        if e >= 2:
            factor += f"^{e}"
        parts.append(factor)
    return "".join(parts) if parts else "1"


def render_binomial(plus, minus, variable: str = "t") -> str:
    return f"{render_monomial(plus, variable)} - {render_monomial(minus, variable)}"


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return _encode_int(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value)!r}")


def _render_table(bundle, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(bundle, dict):
        for key, value in bundle.items():
            if isinstance(value, (dict, list, tuple)) and value and not _is_flat(value):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_table(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_flat_str(value)}")
    elif isinstance(bundle, (list, tuple)):
        for value in bundle:
            if isinstance(value, (dict, list, tuple)) and value and not _is_flat(value):
                lines.append(f"{pad}-")
                lines.extend(_render_table(value, indent + 1))
            else:
                lines.append(f"{pad}- {_flat_str(value)}")
    else:
        lines.append(f"{pad}{_flat_str(bundle)}")
    return lines


def _is_flat(value) -> bool:
    if isinstance(value, dict):
        return False
    if isinstance(value, (list, tuple)):
        return all(isinstance(v, (str, int, float, bool)) or v is None for v in value)
    return True


def _flat_str(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return ", ".join(_flat_str(v) for v in value) if value else "(none)"
    return str(value)


def emit_report(bundle, fmt: str = "table") -> bytes:
    """Deterministic report bytes: aligned text or stable-key JSON."""
    if fmt == "json":
        return (json.dumps(_jsonable(bundle), sort_keys=True, indent=1) + "\n").encode(
            "utf-8"
        )
    if fmt == "table":
        return ("\n".join(_render_table(bundle)) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
