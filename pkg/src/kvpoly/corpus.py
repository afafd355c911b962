"""Curated diagram corpus: manifest loading and the per-entry property checks run by ``kv check``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterator

from .diagram import (
    Diagram,
    DiagramError,
    add_bare_loops,
    circuits,
    diagram_components,
    graph_components,
    insert_curl,
    parse_diagram,
)
from .invariant import braces, bracket, compute_report, normalized, one_crossing_test
from .laurent import ONE, LaurentPolynomial, monomial
from .orientation import enumerate_hyperbolic, hyperbolic_state_sum, twisting_number
from .skein import oracle_bracket, planar_value, skein_residual

__all__ = [
    "CorpusError",
    "CorpusEntry",
    "CheckResult",
    "ORACLE_LIMIT",
    "bundled_corpus",
    "load_manifest",
    "entry_checks",
    "run_corpus",
]

ORACLE_LIMIT = 8
POLY_FIELDS = ("bracket", "braces", "normalized")
INT_FIELDS = ("twist", "c", "v", "crossings", "diagram_components")


class CorpusError(Exception):
    pass


@dataclass
class CorpusEntry:
    name: str
    file: Path
    diagram: Diagram
    expected: dict = field(default_factory=dict)
    tags: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CheckResult:
    entry: str
    check: str
    ok: bool
    detail: str = ""

    def __str__(self):
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.entry}: {self.check}{tail}"


def bundled_corpus() -> Path:
    return Path(str(resources.files("kvpoly") / "corpus"))


def load_manifest(directory) -> list[CorpusEntry]:
    directory = Path(directory)
    manifest = directory / "manifest.json"
    if not manifest.is_file():
        raise CorpusError(f"no manifest.json in {directory}")
    try:
        raw = json.loads(manifest.read_text())
    except json.JSONDecodeError as exc:
        raise CorpusError(f"{manifest}: {exc}") from None
    if not isinstance(raw, list) or not raw:
        raise CorpusError(f"{manifest}: expected a nonempty JSON array")
    entries = []
    for item in raw:
        try:
            name, fname = item["name"], item["file"]
        except (KeyError, TypeError):
            raise CorpusError(f"{manifest}: entry without name/file: {item!r}") from None
        path = directory / fname
        try:
            d = parse_diagram(path.read_text())
        except OSError as exc:
            raise CorpusError(f"{name}: {exc}") from None
        except DiagramError as exc:
            raise CorpusError(f"{path}: {exc}") from None
        expected = item.get("expected", {})
        provenance = item.get("provenance", {})
        missing = sorted(set(expected) - set(provenance))
        if missing:
            raise CorpusError(f"{name}: expected values without provenance: {missing}")
        entries.append(
            CorpusEntry(name, path, d, expected, list(item.get("tags", [])), provenance)
        )
    return sorted(entries, key=lambda e: e.name)


def _poly(value) -> LaurentPolynomial:
    if isinstance(value, str):
        return LaurentPolynomial.parse(value)
    return LaurentPolynomial.from_json(value)


def _is_knot(d: Diagram) -> bool:
    return d.n_vertices == 0 and len(circuits(d)) == 1


def _curl_target(d: Diagram):
    return d.labels[0] if d.labels else None


def entry_checks(entry: CorpusEntry) -> Iterator[CheckResult]:
    d = entry.diagram
    name = entry.name

    def check(label: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a corpus error
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        return CheckResult(name, label, ok, detail)

    report = compute_report(d)
    got = report.to_json()
    for key, want in entry.expected.items():
        if key in POLY_FIELDS:
            have = getattr(report, key)
            yield check(f"expected {key}", lambda: (have == _poly(want), f"got {have}, want {want}"))
        elif key in INT_FIELDS or key == "separable":
            yield check(f"expected {key}", lambda: (got[key] == want, f"got {got[key]}, want {want}"))
        else:
            yield CheckResult(name, f"expected {key}", False, "unknown field")

    hyp = enumerate_hyperbolic(d)
    c = graph_components(d)
    dcount = diagram_components(d)

    if d.n_crossings == 0:
        yield check("planar value", lambda: (report.bracket == planar_value(c, d.n_vertices), ""))
    if _is_knot(d):
        yield check("knot value", lambda: (report.bracket == monomial(1, report.twist), ""))
    if d.n_crossings == 0 or _is_knot(d):
        yield check("normalized is 1", lambda: (report.normalized == ONE, str(report.normalized)))
    yield check("zero iff non-separable", lambda: (report.bracket.is_zero() == (not hyp), ""))
    yield check(
        "skein identity",
        lambda: (all(skein_residual(d, i).is_zero() for i in d.crossing_indices), ""),
    )
    if d.n_crossings <= ORACLE_LIMIT:
        yield check(
            "oracle equivalence",
            lambda: (
                oracle_bracket(d) == report.bracket == oracle_bracket(d, pivot="highest"),
                "",
            ),
        )
    yield check(
        "partition aggregation",
        lambda: (hyperbolic_state_sum(d) == braces(d).scale(2**dcount), ""),
    )
    yield check("cardinality", lambda: (len(hyp) in (0, 2**c), f"|H|={len(hyp)}, c={c}"))
    if any(ci.vertex_passages % 2 for ci in circuits(d)):
        yield check("odd circuit obstruction", lambda: (not hyp, ""))
    if d.n_crossings == 1:
        yield check(
            "one-crossing criterion",
            lambda: (one_crossing_test(d).vanishes == report.bracket.is_zero(), ""),
        )
    yield check(
        "loop doubling",
        lambda: (bracket(add_bare_loops(d)) == report.bracket.scale(2), ""),
    )

    def curls():
        arc = _curl_target(d)
        for s in (1, -1):
            e = insert_curl(d, arc, s)
            if bracket(e) != report.bracket.shift(s):
                return False, f"bracket after sign {s} curl"
            if twisting_number(e) != report.twist + s:
                return False, f"twist after sign {s} curl"
            if normalized(e) != report.normalized:
                return False, f"normalized after sign {s} curl"
        return True, ""

    yield check("curl insertion", curls)


def run_corpus(directory) -> list[CheckResult]:
    results = []
    for entry in load_manifest(directory):
        results.extend(entry_checks(entry))
    return results
