"""Orbits of the J_n action on an enumerated X, and the classification checks."""

from __future__ import annotations

import json
import os
import sqlite3
import tempfile
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .action import N3_WITNESS, _step, apply_word
from .cactus import Generator
from .diagram import ArcDiagram, ValenceProfile, _key, require_valid
from .enumeration import DiagramSet, enumerate_diagrams
from .invariants import invariant_record

FORMAT_VERSION = 1
DEFAULT_SPILL_THRESHOLD = 1_000_000


def generators(n: int) -> list[Generator]:
    return [Generator(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]


def _images(chunk: list[ArcDiagram], gens: list[Generator]) -> list[list[bytes]]:
    return [[_key(_step(d, g)) for g in gens] for d in chunk]


def action_table(dset: DiagramSet, jobs: int = 1) -> list[list[int]]:
    """``table[i][k]`` is the ordinal of generator ``k`` applied to element ``i``."""
    gens = generators(dset.profile.n)
    elements = list(dset.elements)
    if jobs > 1 and len(elements) > 1:
        size = max(1, len(elements) // (4 * jobs))
        chunks = [elements[i:i + size] for i in range(0, len(elements), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            keyed = [row for part in pool.map(_images, chunks, [gens] * len(chunks)) for row in part]
    else:
        keyed = _images(elements, gens)
    return [[dset.index[k] for k in row] for row in keyed]


@dataclass
class Check:
    applicable: bool
    passed: bool | None = None
    witness: object = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "passed": self.passed,
            "witness": self.witness,
            **self.details,
        }


@dataclass
class OrbitReport:
    profile: ValenceProfile
    diagrams: DiagramSet
    orbits: list[tuple[int, ...]]
    summaries: list[dict]
    checks: dict[str, Check]

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    def orbit_index(self) -> dict[int, int]:
        return {m: k for k, orb in enumerate(self.orbits) for m in orb}

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "profile": self.profile.to_list(),
            "set_size": len(self.diagrams),
            "orbits": [
                {"size": len(orb), "members": list(orb), "invariants": summary}
                for orb, summary in zip(self.orbits, self.summaries)
            ],
            "checks": {name: check.to_dict() for name, check in self.checks.items()},
        }


def _bfs_partition(size: int, table: list[list[int]]) -> list[tuple[int, ...]]:
    seen = [False] * size
    out = []
    for start in range(size):
        if seen[start]:
            continue
        seen[start] = True
        members, queue = [start], deque([start])
        while queue:
            i = queue.popleft()
            for j in table[i]:
                if not seen[j]:
                    seen[j] = True
                    members.append(j)
                    queue.append(j)
        out.append(tuple(sorted(members)))
    return out


def _summarise(dset: DiagramSet, orbit: tuple[int, ...]) -> dict:
    records = [invariant_record(dset[i]) for i in orbit]
    summary: dict = {}
    for name, attr in (("border", "border_thickness"), ("gcd", "gcd_multiplicity"),
                       ("components", "component_count")):
        values = {getattr(r, attr) for r in records}
        summary[name] = next(iter(values)) if len(values) == 1 else sorted(values, key=str)
        summary[f"{name}_constant"] = len(values) == 1
    sizes = {r.component_sizes for r in records}
    summary["component_sizes"] = None if sizes == {None} else sorted(list(s) for s in sizes)
    return summary


def orbits(dset: DiagramSet, jobs: int = 1) -> OrbitReport:
    """Partition ``dset`` into orbits under all n(n-1)/2 generators.

    Orbits come out sorted internally and ordered by their least ordinal.
    """
    table = action_table(dset, jobs) if len(dset) else []
    parts = _bfs_partition(len(dset), table)
    summaries = [_summarise(dset, orb) for orb in parts]
    report = OrbitReport(dset.profile, dset, parts, summaries, {})
    report.checks = theorem_checks(report)
    return report


# --------------------------------------------------------------------------
# checks


def _constancy(report: OrbitReport) -> Check:
    for k, summary in enumerate(report.summaries):
        for name in ("border", "gcd", "components"):
            if not summary[f"{name}_constant"]:
                return Check(True, False, {"orbit": k, "invariant": name})
    return Check(True, True)


def _borderless(d: ArcDiagram) -> bool:
    return invariant_record(d).border_thickness == 0


def _n3_classification(report: OrbitReport) -> Check:
    if report.profile.n != 3 or not len(report.diagrams):
        return Check(False)
    dset = report.diagrams
    where = report.orbit_index()
    by_border: dict[int, set[int]] = {}
    for i, d in enumerate(dset):
        by_border.setdefault(invariant_record(d).border_thickness, set()).add(where[i])
    details = {
        "orbit_count": report.orbit_count,
        "border_values": sorted(by_border),
    }
    if report.orbit_count != len(by_border) or any(len(o) != 1 for o in by_border.values()):
        return Check(True, False, {"border_to_orbits": {b: sorted(o) for b, o in by_border.items()}}, details)
    pairs = 0
    by_arrangement: dict[tuple, list[ArcDiagram]] = {}
    for d in dset:
        if _borderless(d):
            by_arrangement.setdefault(d.arrangement, []).append(d)
    for arr, group in by_arrangement.items():
        if len(group) > 2:
            return Check(True, False, {"arrangement": list(arr), "borderless": len(group)}, details)
        if len(group) == 2:
            pairs += 1
            x, y = group
            if apply_word(x, N3_WITNESS) != y or apply_word(y, N3_WITNESS) != x:
                return Check(True, False, {"arrangement": list(arr), "word": str(N3_WITNESS)}, details)
    details["witness_pairs"] = pairs
    return Check(True, True, None, details)


def _transitivity(report: OrbitReport) -> Check:
    if 1 not in report.profile.valences or not len(report.diagrams):
        return Check(False)
    ok = report.orbit_count == 1
    return Check(True, ok, None if ok else {"orbit_count": report.orbit_count},
                 {"orbit_count": report.orbit_count})


def _all_two(report: OrbitReport) -> Check:
    prof = report.profile
    if any(v != 2 for v in prof.valences):
        return Check(False)
    counts = [s["components"] for s in report.summaries]
    realized = sorted(set(counts))
    fibers_match = len(realized) == len(counts)
    contiguous = realized == list(range(1, len(realized) + 1))
    n = prof.n
    details = {
        "orbit_count": report.orbit_count,
        "realized_component_counts": realized,
        "floor_n_over_2": n // 2,
        "floor_n_plus_1_over_2": (n + 1) // 2,
        "matches_floor_n_over_2": report.orbit_count == n // 2,
        "matches_floor_n_plus_1_over_2": report.orbit_count == (n + 1) // 2,
    }
    ok = fibers_match and contiguous
    return Check(True, ok, None if ok else {"component_counts_per_orbit": counts}, details)


def theorem_checks(report: OrbitReport) -> dict[str, Check]:
    return {
        "invariant_constancy": _constancy(report),
        "n3_border_classification": _n3_classification(report),
        "transitivity_valence_one": _transitivity(report),
        "all_two_components": _all_two(report),
    }


def check_all_two_formula(n: int, jobs: int = 1) -> dict:
    """BFS truth for X(2,...,2) with n finite points, against both floor readings."""
    if n < 2:
        raise ValueError("need n >= 2")
    report = orbits(enumerate_diagrams(ValenceProfile(n, (2,) * (n + 1))), jobs)
    check = report.checks["all_two_components"]
    return {"n": n, "set_size": len(report.diagrams), "passed": check.passed, **check.details}


# --------------------------------------------------------------------------
# single-orbit BFS without enumerating X


class VisitedSet:
    """Set of canonical keys that moves to an on-disk SQLite table past a threshold."""

    def __init__(self, threshold: int = DEFAULT_SPILL_THRESHOLD, directory: str | None = None):
        self.threshold = threshold
        self.directory = directory
        self._memory: set[bytes] | None = set()
        self._db: sqlite3.Connection | None = None
        self._path: str | None = None
        self._size = 0

    @property
    def spilled(self) -> bool:
        return self._db is not None

    def __len__(self) -> int:
        return self._size

    def _spill(self) -> None:
        fd, self._path = tempfile.mkstemp(suffix=".sqlite", dir=self.directory)
        os.close(fd)
        self._db = sqlite3.connect(self._path)
        self._db.execute("CREATE TABLE visited (key BLOB PRIMARY KEY)")
        self._db.executemany("INSERT INTO visited VALUES (?)", ((k,) for k in self._memory))
        self._memory = None

    def add(self, key: bytes) -> bool:
        """Insert ``key``; True when it was not present."""
        if self._db is None:
            if key in self._memory:
                return False
            self._memory.add(key)
            self._size += 1
            if self._size > self.threshold:
                self._spill()
            return True
        cur = self._db.execute("INSERT OR IGNORE INTO visited VALUES (?)", (key,))
        if cur.rowcount:
            self._size += 1
            return True
        return False

    def __iter__(self) -> Iterator[bytes]:
        if self._db is None:
            return iter(sorted(self._memory))
        return (row[0] for row in self._db.execute("SELECT key FROM visited ORDER BY key"))

    def close(self) -> None:
        if self._db is not None:
            self._db.close()
            os.unlink(self._path)
            self._db = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def orbit_of(diagram: ArcDiagram, spill_threshold: int = DEFAULT_SPILL_THRESHOLD) -> list[ArcDiagram]:
    """Orbit of one diagram by BFS, sorted by canonical key."""
    require_valid(diagram)
    gens = generators(diagram.n)
    with VisitedSet(spill_threshold) as visited:
        visited.add(_key(diagram))
        queue = deque([diagram])
        while queue:
            d = queue.popleft()
            for g in gens:
                e = _step(d, g)
                if visited.add(_key(e)):
                    queue.append(e)
        return [ArcDiagram.from_json(k.decode("utf-8")) for k in visited]


# --------------------------------------------------------------------------
# cache


def cache_path(cache_dir: str | os.PathLike, profile: ValenceProfile) -> Path:
    name = "orbits_" + "_".join(map(str, profile.valences)) + ".json"
    return Path(cache_dir) / name


def cached_orbit_report(profile: ValenceProfile, cache_dir: str | os.PathLike | None, jobs: int = 1) -> dict:
    """Serialized orbit report, read from or written to ``cache_dir`` when given."""
    path = cache_path(cache_dir, profile) if cache_dir else None
    if path is not None and path.exists():
        try:
            data = json.loads(path.read_text())
            if data.get("format_version") == FORMAT_VERSION and data.get("profile") == profile.to_list():
                return data
        except (OSError, json.JSONDecodeError):
            pass
    data = orbits(enumerate_diagrams(profile, jobs), jobs).to_dict()
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(data, sort_keys=True))
    return data
