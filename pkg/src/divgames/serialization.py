"""JSON documents for instances, partitions, verdicts and traces.

Ratios are written as reduced ``"num/den"`` strings (``"0/1"``, ``"1/1"``)
so that no float rounding ever enters a document.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd
from typing import Any, Optional

from .dynamics import DynamicsTrace
from .errors import DiversityGameError, ValidationError
from .model import DiversityGame, Partition, build_theta, members
from .preferences import PEAK_RULES, order_from_peak
from .reduction import AnonymousGame
from .stability import BlockingWitness, Deviation

SCHEMA_VERSION = 1
_RATIO = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


def format_ratio(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_ratio(text: Any, where: str = "ratio") -> Fraction:
    if not isinstance(text, str):
        raise ValidationError(f"{where}: expected a string like \"3/4\", got {text!r}")
    m = _RATIO.match(text)
    if not m:
        raise ValidationError(f"{where}: malformed ratio {text!r}; expected \"num/den\"")
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0 or num > den:
        raise ValidationError(f"{where}: {text!r} is not a ratio in [0, 1]")
    if gcd(num, den) != 1:
        raise ValidationError(f"{where}: {text!r} is not in reduced form")
    return Fraction(num, den)


def _load(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{what}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _int(doc: dict, key: str, where: str) -> int:
    if key not in doc:
        raise ValidationError(f"{where}: missing field {key!r}")
    v = doc[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise ValidationError(f"{where}.{key}: expected a non-negative integer, got {v!r}")
    return v


def _check_schema(doc: Any, where: str) -> dict:
    if not isinstance(doc, dict):
        raise ValidationError(f"{where}: expected a JSON object")
    version = doc.get("schemaVersion")
    if version != SCHEMA_VERSION:
        raise ValidationError(f"{where}.schemaVersion: unsupported schema version {version!r} "
                              f"(this reader understands {SCHEMA_VERSION})")
    return doc


# -- instances ----------------------------------------------------------------

def instance_to_doc(game: DiversityGame) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "redCount": game.red_count,
        "blueCount": game.blue_count,
        "preferences": [[format_ratio(x) for x in order] for order in game.prefs],
    }


def serialize_instance(game: DiversityGame) -> str:
    return dumps(instance_to_doc(game))


def instance_from_doc(doc: Any) -> DiversityGame:
    if isinstance(doc, dict) and "instance" in doc and "schemaVersion" not in doc:
        doc = doc["instance"]
    doc = _check_schema(doc, "instance")
    red, blue = _int(doc, "redCount", "instance"), _int(doc, "blueCount", "instance")
    if red + blue == 0:
        raise ValidationError("instance: redCount + blueCount must be at least 1")
    theta = build_theta(red, blue)
    prefs = doc.get("preferences")
    if not isinstance(prefs, list):
        raise ValidationError("instance.preferences: expected a list with one entry per agent")
    if len(prefs) != red + blue:
        raise ValidationError(f"instance.preferences: expected {red + blue} entries, got {len(prefs)}")
    orders = []
    for i, entry in enumerate(prefs):
        where = f"instance.preferences[{i}]"
        if isinstance(entry, list):
            order = [parse_ratio(x, f"{where}[{k}]") for k, x in enumerate(entry)]
        elif isinstance(entry, dict):
            peak = parse_ratio(entry.get("peak"), f"{where}.peak")
            rule = entry.get("construction", "closest")
            if rule not in PEAK_RULES:
                raise ValidationError(f"{where}.construction: unknown rule {rule!r}; expected one of {PEAK_RULES}")
            try:
                order = list(order_from_peak(theta, peak, rule))
            except ValidationError as exc:
                raise ValidationError(f"{where}: {exc}") from None
        else:
            raise ValidationError(f"{where}: expected a list of ratios or a {{peak, construction}} object")
        allowed = set(theta)
        for k, x in enumerate(order):
            if x not in allowed:
                raise ValidationError(f"{where}[{k}]: {format_ratio(x)} is not a feasible ratio "
                                      f"for {red} red and {blue} blue agents")
        if len(set(order)) != len(order):
            raise ValidationError(f"{where}: a ratio is listed twice")
        missing = [format_ratio(x) for x in theta if x not in set(order)]
        if missing:
            raise ValidationError(f"{where}: missing ratio(s) {', '.join(missing)}")
        orders.append(tuple(order))
    return DiversityGame(red, blue, tuple(orders))


def parse_instance(text: str) -> DiversityGame:
    return instance_from_doc(_load(text, "instance"))


# -- partitions ---------------------------------------------------------------

def partition_to_list(partition: Partition) -> list[list[int]]:
    return partition.as_lists()


def partition_from_doc(doc: Any, n: int) -> Partition:
    """Read a partition from a bare list of lists, ``{"partition": ...}``, or a
    solver result holding exactly one partition."""
    if isinstance(doc, dict):
        if "partition" in doc:
            doc = doc["partition"]
        elif "partitions" in doc:
            parts = doc["partitions"]
            if not isinstance(parts, list) or len(parts) != 1:
                count = len(parts) if isinstance(parts, list) else "?"
                raise ValidationError(f"partition: solver output holds {count} partitions, expected exactly one")
            doc = parts[0]
        else:
            raise ValidationError("partition: expected a list of blocks or an object with a 'partition' field")
    if not isinstance(doc, list) or not all(isinstance(b, list) for b in doc):
        raise ValidationError("partition: expected a list of lists of agent ids")
    blocks = []
    for k, block in enumerate(doc):
        for j, a in enumerate(block):
            if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < n:
                raise ValidationError(f"partition[{k}][{j}]: {a!r} is not an agent id in 0..{n - 1}")
        if len(set(block)) != len(block):
            raise ValidationError(f"partition[{k}]: an agent is listed twice")
        blocks.append(block)
    try:
        return Partition.from_lists(n, blocks)
    except DiversityGameError as exc:
        raise ValidationError(f"partition: {exc}") from None


def parse_partition(text: str, n: int) -> Partition:
    return partition_from_doc(_load(text, "partition"), n)


# -- anonymous games ----------------------------------------------------------

def anonymous_to_doc(anon: AnonymousGame) -> dict:
    return {"schemaVersion": SCHEMA_VERSION, "orders": [list(o) for o in anon.orders]}


def anonymous_from_doc(doc: Any) -> AnonymousGame:
    doc = _check_schema(doc, "anonymous game")
    orders = doc.get("orders")
    if not isinstance(orders, list) or not all(isinstance(o, list) for o in orders):
        raise ValidationError("anonymous game.orders: expected a list of size lists")
    for i, o in enumerate(orders):
        for k, s in enumerate(o):
            if not isinstance(s, int) or isinstance(s, bool):
                raise ValidationError(f"anonymous game.orders[{i}][{k}]: expected an integer size, got {s!r}")
    return AnonymousGame(tuple(tuple(o) for o in orders))


def parse_anonymous(text: str) -> AnonymousGame:
    return anonymous_from_doc(_load(text, "anonymous game"))


# -- reports ------------------------------------------------------------------

def witness_to_doc(w: BlockingWitness) -> dict:
    return {"type": "blockingCoalition", "coalition": members(w.coalition), "ratio": format_ratio(w.ratio)}


def deviation_to_doc(d: Deviation) -> dict:
    return {"type": "deviation", "kind": d.kind, "agent": d.agent, "fromBlock": d.from_block,
            "target": d.target, "ratio": format_ratio(d.ratio)}


def verdict_to_doc(concept: str, stable: bool, witness: Optional[Any], timing_ms: Optional[float] = None) -> dict:
    doc: dict = {"concept": concept, "stable": stable}
    if isinstance(witness, BlockingWitness):
        doc["witness"] = witness_to_doc(witness)
    elif isinstance(witness, Deviation):
        doc["witness"] = deviation_to_doc(witness)
    else:
        doc["witness"] = None
    if timing_ms is not None:
        doc["timingMs"] = round(timing_ms, 3)
    return doc


def trace_to_doc(trace: DynamicsTrace, kind: str) -> dict:
    return {
        "kind": kind.lower(),
        "stepLimit": trace.step_limit,
        "converged": trace.converged,
        "start": partition_to_list(trace.partitions[0]),
        "steps": [deviation_to_doc(d) for d in trace.steps],
        "final": partition_to_list(trace.final),
    }
