"""Corpus pipeline: fingerprint, bucket, confirm psi exactly, classify pairs.

Stages, cheapest first:

1. ``scan_corpus`` - decode each graph6 line and evaluate psi at shared
   random points mod p.
2. ``find_psi_cospectral_classes`` - within each fingerprint bucket, group
   graphs by exact psi. Buckets that split are false collisions.
3. ``classify_classes`` - run every intra-class pair through the
   degree-similarity decision (with the cheap prefilters first).
"""
from __future__ import annotations

import itertools
import json
import logging
import multiprocessing
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import DEFAULT_PRIME
from .algebra.primefield import check_prime
from .degree_similarity import DEFAULT_TRIALS, DegSimVerdict, degree_similar
from .errors import DegsimError, InvariantViolation
from .genchar import DEFAULT_POINTS, GenCharPoly, psi, psi_equal, psi_fingerprint, sample_points
from .graphs import graph6_decode, read_graph6_lines

log = logging.getLogger(__name__)

CHUNK = 512


@dataclass(frozen=True)
class CorpusEntry:
    line_index: int
    graph6: bytes
    fingerprint: tuple[int, ...]


@dataclass(frozen=True)
class LineError:
    line_index: int
    message: str


@dataclass
class CorpusIndex:
    seed: int
    prime: int
    points: tuple[tuple[int, int], ...]
    entries: list[CorpusEntry] = field(default_factory=list)
    errors: list[LineError] = field(default_factory=list)

    def buckets(self) -> dict[tuple[int, ...], list[CorpusEntry]]:
        out: dict[tuple[int, ...], list[CorpusEntry]] = {}
        for e in self.entries:
            out.setdefault(e.fingerprint, []).append(e)
        return out

    def dump_lines(self):
        """JSON-lines rendering: a header, then one record per input line."""
        yield json.dumps(
            {"prime": self.prime, "seed": self.seed, "points": [list(p) for p in self.points]},
            separators=(",", ":"),
        )
        recs = [(e.line_index, e) for e in self.entries] + [(e.line_index, e) for e in self.errors]
        for _, rec in sorted(recs, key=lambda r: r[0]):
            if isinstance(rec, CorpusEntry):
                obj = {"line": rec.line_index, "graph6": rec.graph6.decode("ascii"),
                       "residues": list(rec.fingerprint)}
            else:
                obj = {"line": rec.line_index, "error": rec.message}
            yield json.dumps(obj, separators=(",", ":"))


def _fingerprint_chunk(args):
    chunk, prime, points = args
    out = []
    for line_no, raw in chunk:
        try:
            g = graph6_decode(raw)
        except DegsimError as exc:
            out.append((line_no, raw, None, str(exc)))
            continue
        fp = psi_fingerprint(g, prime, points, checked=True)
        out.append((line_no, raw, fp.residues, None))
    return out


def _chunks(it, size):
    it = iter(it)
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def _pool_map(func, tasks, jobs):
    if jobs <= 1:
        yield from map(func, tasks)
        return
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        yield from pool.imap(func, tasks)


def scan_lines(lines, *, seed=0, prime=DEFAULT_PRIME, points=DEFAULT_POINTS,
               strict=False, jobs=1) -> CorpusIndex:
    """Fingerprint ``(line_no, graph6)`` pairs; output order follows input order."""
    check_prime(prime)
    pts = sample_points(seed, prime, points)
    index = CorpusIndex(seed, prime, pts)
    tasks = ((chunk, prime, pts) for chunk in _chunks(lines, CHUNK))
    for result in _pool_map(_fingerprint_chunk, tasks, jobs):
        for line_no, raw, residues, err in result:
            if err is not None:
                if strict:
                    raise DegsimError(f"line {line_no}: {err}")
                log.warning("line %d: %s", line_no, err)
                index.errors.append(LineError(line_no, err))
            else:
                index.entries.append(CorpusEntry(line_no, bytes(raw), residues))
    return index


def scan_corpus(path, *, seed=0, prime=DEFAULT_PRIME, points=DEFAULT_POINTS,
                strict=False, jobs=1) -> CorpusIndex:
    data = Path(path).read_bytes()
    return scan_lines(read_graph6_lines(data), seed=seed, prime=prime, points=points,
                      strict=strict, jobs=jobs)


@dataclass(frozen=True)
class PsiClass:
    members: tuple[CorpusEntry, ...]
    psi: GenCharPoly


@dataclass
class ClassSearch:
    classes: list[PsiClass]
    candidate_buckets: int = 0
    false_collisions: int = 0


def _exact_psi(entry: CorpusEntry) -> GenCharPoly:
    return psi(graph6_decode(entry.graph6))


def find_psi_cospectral_classes(index: CorpusIndex, jobs: int = 1) -> ClassSearch:
    """Exact-psi classes of size >= 2, ordered by their first line.

    Only fingerprint buckets with two or more graphs are examined; each
    bucket is split by exact psi equality. A bucket whose members fall into
    more than one exact class counts ``groups - 1`` false collisions.
    """
    buckets = [b for b in index.buckets().values() if len(b) > 1]
    flat = [e for b in buckets for e in b]
    psis = list(_pool_map(_exact_psi, flat, jobs)) if flat else []
    by_entry = dict(zip((e.line_index for e in flat), psis))
    classes = []
    false_collisions = 0
    for bucket in buckets:
        groups: dict[GenCharPoly, list[CorpusEntry]] = {}
        for e in bucket:
            groups.setdefault(by_entry[e.line_index], []).append(e)
        false_collisions += len(groups) - 1
        if len(groups) > 1:
            log.info("false fingerprint collision among lines %s",
                     [e.line_index for e in bucket])
        for p, members in groups.items():
            if len(members) > 1:
                classes.append(PsiClass(tuple(members), p))
    classes.sort(key=lambda c: c.members[0].line_index)
    return ClassSearch(classes, len(buckets), false_collisions)


@dataclass(frozen=True)
class PairReport:
    line_a: int
    line_b: int
    g6_a: bytes
    g6_b: bytes
    psi_equal: bool
    degree_similar: DegSimVerdict
    psi: GenCharPoly | None = None

    def to_json(self) -> dict:
        return {
            "a": {"line": self.line_a, "graph6": self.g6_a.decode("ascii")},
            "b": {"line": self.line_b, "graph6": self.g6_b.decode("ascii")},
            "psi_equal": self.psi_equal,
            "degree_similar": self.degree_similar.to_json(),
            "psi": self.psi.to_json() if self.psi is not None else None,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _classify_pair(args):
    a, b, trials, seed = args
    ga, gb = graph6_decode(a.graph6), graph6_decode(b.graph6)
    pa, pb = psi(ga), psi(gb)
    eq = psi_equal(pa, pb)
    if not eq:
        raise InvariantViolation(
            f"lines {a.line_index} and {b.line_index} reached classification with unequal psi"
        )
    verdict = degree_similar(ga, gb, trials=trials, seed=seed, prefilter=True)
    return PairReport(a.line_index, b.line_index, a.graph6, b.graph6, eq, verdict, pa)


def classify_classes(classes, *, trials=DEFAULT_TRIALS, seed=0, jobs=1) -> list[PairReport]:
    """Degree-similarity verdicts for every pair inside every class."""
    tasks = []
    for cls in classes:
        members = sorted(cls.members, key=lambda e: e.line_index)
        for a, b in itertools.combinations(members, 2):
            tasks.append((a, b, trials, seed))
    reports = list(_pool_map(_classify_pair, tasks, jobs))
    for r in reports:
        if r.degree_similar.is_similar and not r.psi_equal:
            raise InvariantViolation("degree-similar pair with different psi")
    reports.sort(key=lambda r: (r.line_a, r.line_b))
    return reports


@dataclass
class SearchResult:
    index: CorpusIndex
    search: ClassSearch
    reports: list[PairReport]

    def summary(self) -> dict:
        nds = [r for r in self.reports if not r.degree_similar.is_similar]
        kinds: dict[str, int] = {}
        for r in self.reports:
            k = r.degree_similar.kind or r.degree_similar.decision
            kinds[k] = kinds.get(k, 0) + 1
        return {
            "graphs": len(self.index.entries),
            "parse_errors": len(self.index.errors),
            "seed": self.index.seed,
            "prime": self.index.prime,
            "points": len(self.index.points),
            "candidate_buckets": self.search.candidate_buckets,
            "false_collisions": self.search.false_collisions,
            "psi_classes": len(self.search.classes),
            "pairs": len(self.reports),
            "not_degree_similar_pairs": len(nds),
            "verdict_kinds": dict(sorted(kinds.items())),
        }


def run_search(path, *, seed=0, prime=DEFAULT_PRIME, points=DEFAULT_POINTS,
               trials=DEFAULT_TRIALS, strict=False, jobs=1) -> SearchResult:
    index = scan_corpus(path, seed=seed, prime=prime, points=points, strict=strict, jobs=jobs)
    found = find_psi_cospectral_classes(index, jobs=jobs)
    reports = classify_classes(found.classes, trials=trials, seed=seed, jobs=jobs)
    return SearchResult(index, found, reports)
