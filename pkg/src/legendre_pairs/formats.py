"""Text formats: array records (.arr), matrices (.hm) and JSON result records.

An ``.arr`` file holds one array per line as ``<group> <alphabet> <payload>``,
e.g. ``Z3xZ19 pm1 ++-+...``; blank lines and ``#`` comments are skipped.
Payload symbols are ``+``/``-`` for pm1 and ``0``/``1`` for zo, in flat-index
order (last factor fastest).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from . import __version__
from .arrays import (
    Alphabet,
    GArray,
    PairRecord,
    autocorrelation_distribution,
    correlation_energy,
    peak_correlation,
)
from .errors import InvalidGroupError, LegendrePairsError, ParseError
from .groups import parse_group_spec

RECORD_FORMAT = "legendre-pairs/result"
RECORD_VERSION = 1

_SYMBOLS = {Alphabet.PM1: {1: "+", -1: "-"}, Alphabet.ZO: {1: "1", 0: "0"}}


def array_to_line(a: GArray) -> str:
    table = _SYMBOLS[a.alphabet]
    return f"{a.group.spec()} {a.alphabet.value} {''.join(table[v] for v in a.values)}"


def array_from_line(line: str) -> GArray:
    parts = line.split()
    if len(parts) != 3:
        raise ParseError(f"expected '<group> <alphabet> <payload>', got {line.strip()!r}")
    spec, tag, payload = parts
    try:
        group = parse_group_spec(spec)
    except InvalidGroupError as exc:
        raise ParseError(str(exc)) from None
    try:
        alphabet = Alphabet(tag)
    except ValueError:
        raise ParseError(f"unknown alphabet tag {tag!r}; use 'pm1' or 'zo'") from None
    inverse = {s: v for v, s in _SYMBOLS[alphabet].items()}
    bad = set(payload) - set(inverse)
    if bad:
        raise ParseError(f"symbol {sorted(bad)[0]!r} not allowed in a {tag} payload")
    if len(payload) != group.order:
        raise ParseError(f"payload has {len(payload)} symbols, {spec} has order {group.order}")
    return GArray(group, alphabet, tuple(inverse[c] for c in payload))


def arrays_to_text(arrays: Iterable[GArray]) -> str:
    return "".join(array_to_line(a) + "\n" for a in arrays)


def arrays_from_text(text: str) -> list[GArray]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(array_from_line(line))
    return out


def write_arrays(path: str | Path, arrays: Iterable[GArray]) -> None:
    Path(path).write_text(arrays_to_text(arrays))


# structured records ------------------------------------------------------------


def array_json(a: GArray) -> dict[str, Any]:
    return {"group": a.group.spec(), "alphabet": a.alphabet.value,
            "payload": "".join(_SYMBOLS[a.alphabet][v] for v in a.values)}


def array_from_json(obj: dict[str, Any]) -> GArray:
    try:
        return array_from_line(f"{obj['group']} {obj['alphabet']} {obj['payload']}")
    except (KeyError, TypeError):
        raise ParseError("array entry needs 'group', 'alphabet' and 'payload'") from None


def invariants_json(a: GArray) -> dict[str, Any]:
    pm = a if a.alphabet is Alphabet.PM1 else GArray(a.group, Alphabet.PM1, tuple(2 * v - 1 for v in a.values))
    return {
        "distribution": [[v, c] for v, c in autocorrelation_distribution(pm)],
        "energy": correlation_energy(pm),
        "peak": peak_correlation(pm),
    }


def _plain(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_plain(v) for v in items]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if hasattr(obj, "value") and isinstance(getattr(obj, "value"), str):
        return obj.value
    return obj


def make_record(
    operation: str,
    parameters: dict[str, Any],
    arrays: dict[str, GArray] | None = None,
    verification: dict[str, bool] | None = None,
    extra: dict[str, Any] | None = None,
    provenance: dict[str, Any] | None = None,
) -> dict[str, Any]:
    arrays = arrays or {}
    outputs: dict[str, Any] = {"arrays": {k: array_json(v) for k, v in arrays.items()}}
    if extra:
        outputs.update(_plain(extra))
    return {
        "format": RECORD_FORMAT,
        "version": RECORD_VERSION,
        "operation": operation,
        "parameters": _plain(parameters),
        "outputs": outputs,
        "verification": _plain(verification or {}),
        "invariants": {k: invariants_json(v) for k, v in arrays.items()},
        "provenance": {"package_version": __version__} | _plain(provenance or {}),
    }


def record_to_text(record: dict[str, Any]) -> str:
    return json.dumps(record, indent=2, sort_keys=False) + "\n"


def record_from_text(text: str) -> dict[str, Any]:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON record: {exc}") from None
    if not isinstance(record, dict) or record.get("format") != RECORD_FORMAT:
        raise ParseError("not a result record")
    if record.get("version") != RECORD_VERSION:
        raise ParseError(f"unsupported record version {record.get('version')!r}")
    return record


def record_arrays(record: dict[str, Any]) -> list[GArray]:
    arrays = record.get("outputs", {}).get("arrays", {})
    return [array_from_json(v) for v in arrays.values()]


def load_arrays(path: str | Path) -> list[GArray]:
    """Arrays from an ``.arr`` file or a JSON result record."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        return record_arrays(record_from_text(text))
    try:
        return arrays_from_text(text)
    except LegendrePairsError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_pair(path: str | Path) -> PairRecord:
    arrays = load_arrays(path)
    if len(arrays) != 2:
        raise ParseError(f"{path}: expected 2 arrays, found {len(arrays)}")
    return PairRecord(*arrays)


def pair_from_arrays(arrays: Sequence[GArray]) -> PairRecord:
    if len(arrays) != 2:
        raise ParseError(f"expected 2 arrays, found {len(arrays)}")
    return PairRecord(*arrays)
