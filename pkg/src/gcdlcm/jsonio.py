"""JSON payloads for instances, cover problems, solutions, and reductions.

Conventions shared by every payload: keys are emitted in alphabetical
order with two-space indentation and a trailing newline, so equal data
always produces identical bytes. Integers that can be arbitrarily large
(set elements, gcd/lcm values, basis elements) serialize as decimal
strings; universe indices, exponents, and sizes stay JSON numbers.
Parsers accept either form for integer fields and report the offending
field on error.
"""

from __future__ import annotations

import json
from typing import Any

from gcdlcm.basis import CoprimeBasis
from gcdlcm.errors import DomainError
from gcdlcm.reductions import BEliminationMap, CoverImage, CoverReduction
from gcdlcm.setcover import CoverInstance, CoverSolution
from gcdlcm.solver import ProblemInstance, SolveStats, SubsetSolution


def canonical_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def parse_int(value: Any, field: str) -> int:
    """A JSON number or decimal string; anything else is a parse error."""
    if isinstance(value, bool):
        raise DomainError(f"field {field!r}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise DomainError(
                f"field {field!r}: {value!r} is not a decimal integer"
            ) from None
    raise DomainError(
        f"field {field!r}: expected an integer, got {type(value).__name__}"
    )


def parse_int_list(values: Any, field: str) -> list[int]:
    if not isinstance(values, list):
        raise DomainError(f"field {field!r}: expected a list")
    return [parse_int(v, f"{field}[{i}]") for i, v in enumerate(values)]


def _require(payload: Any, *fields: str) -> dict:
    if not isinstance(payload, dict):
        raise DomainError("payload must be a JSON object")
    for f in fields:
        if f not in payload:
            raise DomainError(f"field {f!r}: missing")
    return payload


# -- problem instances --------------------------------------------------


def instance_to_payload(inst: ProblemInstance) -> dict:
    return {
        "A": [str(x) for x in inst.a],
        "B": [str(x) for x in inst.b],
        "mode": inst.mode,
    }


def instance_from_payload(payload: Any) -> ProblemInstance:
    _require(payload, "A")
    mode = payload.get("mode", "min-gcd")
    if not isinstance(mode, str):
        raise DomainError(f"field 'mode': expected a string, got {type(mode).__name__}")
    return ProblemInstance(
        a=tuple(parse_int_list(payload["A"], "A")),
        b=tuple(parse_int_list(payload.get("B", []), "B")),
        mode=mode,
    )


# -- cover instances and solutions --------------------------------------


def cover_instance_to_payload(inst: CoverInstance) -> dict:
    return {
        "sets": [list(s) for s in inst.sets],
        "universe_size": inst.universe_size,
    }


def cover_instance_from_payload(payload: Any) -> CoverInstance:
    _require(payload, "sets", "universe_size")
    raw = payload["sets"]
    if not isinstance(raw, list):
        raise DomainError("field 'sets': expected a list of lists")
    return CoverInstance(
        universe_size=parse_int(payload["universe_size"], "universe_size"),
        sets=tuple(tuple(parse_int_list(s, f"sets[{i}]")) for i, s in enumerate(raw)),
    )


def cover_solution_to_payload(sol: CoverSolution) -> dict:
    return {"chosen": list(sol.chosen), "optimal": sol.is_optimal, "size": sol.size}


def cover_solution_from_payload(payload: Any) -> CoverSolution:
    _require(payload, "chosen", "optimal")
    optimal = payload["optimal"]
    if not isinstance(optimal, bool):
        raise DomainError("field 'optimal': expected a boolean")
    return CoverSolution(
        chosen=tuple(parse_int_list(payload["chosen"], "chosen")),
        is_optimal=optimal,
    )


# -- subset solutions ---------------------------------------------------


def subset_solution_to_payload(sol: SubsetSolution, include_timing: bool = False) -> dict:
    """Timing is opt-in: elapsed wall time would break byte-for-byte
    reproducibility of otherwise identical runs."""
    stats: dict[str, Any] = {
        "num_sets": sol.stats.num_sets,
        "universe_size": sol.stats.universe_size,
    }
    if include_timing and sol.stats.elapsed_s is not None:
        stats["elapsed_s"] = sol.stats.elapsed_s
    return {
        "S": [str(x) for x in sol.s],
        "achieved": str(sol.achieved),
        "method": sol.method,
        "optimal": sol.optimal,
        "size": sol.size,
        "stats": stats,
        "target": str(sol.target),
    }


def subset_solution_from_payload(payload: Any) -> SubsetSolution:
    _require(payload, "S", "achieved", "method", "optimal", "target")
    optimal = payload["optimal"]
    if not isinstance(optimal, bool):
        raise DomainError("field 'optimal': expected a boolean")
    method = payload["method"]
    if not isinstance(method, str):
        raise DomainError("field 'method': expected a string")
    raw_stats = payload.get("stats", {})
    if not isinstance(raw_stats, dict):
        raise DomainError("field 'stats': expected an object")
    elapsed = raw_stats.get("elapsed_s")
    stats = SolveStats(
        elapsed_s=float(elapsed) if elapsed is not None else None,
        universe_size=parse_int(raw_stats.get("universe_size", 0), "stats.universe_size"),
        num_sets=parse_int(raw_stats.get("num_sets", 0), "stats.num_sets"),
    )
    return SubsetSolution(
        s=tuple(parse_int_list(payload["S"], "S")),
        achieved=parse_int(payload["achieved"], "achieved"),
        target=parse_int(payload["target"], "target"),
        method=method,
        optimal=optimal,
        stats=stats,
    )


# -- reductions ---------------------------------------------------------


def reduction_to_payload(
    mode: str, red: CoverReduction, bem: BEliminationMap | None
) -> dict:
    payload: dict[str, Any] = {
        "cover": cover_instance_to_payload(red.cover),
        "mode": mode,
        "set_owners": [str(x) for x in red.set_owners],
        "universe_labels": [str(p) for p in red.universe_labels],
    }
    if bem is not None:
        payload["b_elimination"] = {
            "reduced": [str(v) for v in bem.reduced],
            "section": {str(v): str(x) for v, x in bem.section.items()},
        }
    return payload


def cover_image_to_payload(mode: str, img: CoverImage) -> dict:
    return {
        "A": [str(x) for x in img.elements],
        "mode": mode,
        "owner_sets": {str(x): img.owners[x] for x in img.elements},
        "target": str(img.target),
    }


# -- coprime bases ------------------------------------------------------


def basis_to_payload(cb: CoprimeBasis) -> dict:
    return {
        "basis": [str(p) for p in cb.basis],
        "elements": [str(x) for x in cb.source],
        "exponents": [list(row) for row in cb.exponents],
    }
