"""Metric evaluation engine.

A metric is a named rule evaluated against one document. Rules receive
a :class:`DocContext` (document plus shared lazy indexes) and return the
token references they captured, optionally with an explicit raw count.
The engine normalizes every raw count by the document token count, so
each value lands in [0, 1] and vectors are comparable across documents
of different lengths.
"""

from __future__ import annotations

import hashlib
import logging
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .model import Document, Token

log = logging.getLogger("stylovec")

TokenRef = tuple[int, int]

METRIC_ID_RE = re.compile(r"^[A-Z0-9_]+$")


def ratio(numerator: float, denominator: float) -> float:
    """Safe normalized ratio: 0 for an empty denominator, clamped to 1.0."""
    if denominator == 0:
        return 0.0
    value = numerator / denominator
    if value > 1.0:
        log.warning("ratio %s/%s exceeds 1, clamping", numerator, denominator)
        return 1.0
    return value


@dataclass
class DocContext:
    """Per-document evaluation context with shared lazy indexes.

    Built once per document and handed to every rule, so repeated
    scans (by UPOS, by lemma) and pack-level analyses (verb groups)
    are computed at most once.
    """

    doc: Document

    def __post_init__(self) -> None:
        self._memo: dict[str, object] = {}

    @cached_property
    def refs(self) -> list[tuple[int, int, Token]]:
        return self.doc.refs()

    @cached_property
    def upos_index(self) -> dict[str, list[TokenRef]]:
        index: dict[str, list[TokenRef]] = {}
        for si, ti, tok in self.refs:
            index.setdefault(tok.upos, []).append((si, ti))
        return index

    @cached_property
    def lemma_index(self) -> dict[str, list[TokenRef]]:
        index: dict[str, list[TokenRef]] = {}
        for si, ti, tok in self.refs:
            index.setdefault(tok.lemma.casefold(), []).append((si, ti))
        return index

    @cached_property
    def form_index(self) -> dict[str, list[TokenRef]]:
        index: dict[str, list[TokenRef]] = {}
        for si, ti, tok in self.refs:
            index.setdefault(tok.form.casefold(), []).append((si, ti))
        return index

    @cached_property
    def non_punct_refs(self) -> list[tuple[int, int, Token]]:
        return [(si, ti, tok) for si, ti, tok in self.refs if not tok.is_punct]

    def memo(self, key: str, factory: Callable[[], object]) -> object:
        """Compute-once store for pack-level analyses shared between metrics."""
        if key not in self._memo:
            self._memo[key] = factory()
        return self._memo[key]


Rule = Callable[[DocContext], "RuleOutput"]
RuleOutput = tuple[Iterable[TokenRef], float | None]


@dataclass(frozen=True, slots=True)
class MetricDescriptor:
    """Identity and metadata of one metric.

    ``local`` marks metrics whose raw count is exactly the number of
    captured tokens; ``scale_invariant`` marks metrics unaffected by
    whole-document duplication (corpus-relative statistics such as
    type counts are not).
    """

    id: str
    category: str
    language: str
    description: str
    name_en: str = ""
    local: bool = True
    scale_invariant: bool = True

    def __post_init__(self) -> None:
        if not METRIC_ID_RE.match(self.id):
            raise ValueError(f"metric id {self.id!r} must match [A-Z0-9_]+")


@dataclass(frozen=True, slots=True)
class Metric:
    descriptor: MetricDescriptor
    rule: Rule

    @property
    def id(self) -> str:
        return self.descriptor.id


@dataclass(frozen=True, slots=True)
class MetricResult:
    metric_id: str
    value: float
    raw_count: float
    captured: tuple[TokenRef, ...]
    error: str | None = None
    degenerate: bool = False


def evaluate_metric(metric: Metric, ctx: DocContext) -> MetricResult:
    """Run one rule; failures become an error result with value 0."""
    total = ctx.doc.token_count
    try:
        refs, raw = metric.rule(ctx)
        captured = tuple(sorted(set(refs)))
        if raw is None:
            raw = float(len(captured))
        if raw < 0:
            raise ValueError(f"negative raw count {raw}")
    except Exception as exc:
        log.warning("metric %s failed: %s", metric.id, exc)
        return MetricResult(metric.id, 0.0, 0.0, (), error=str(exc) or type(exc).__name__)
    if total == 0:
        return MetricResult(metric.id, 0.0, float(raw), captured, degenerate=True)
    return MetricResult(metric.id, ratio(raw, total), float(raw), captured)


class Registry:
    """Ordered, unique-id collection of metrics."""

    def __init__(self, metrics: Iterable[Metric] = ()):
        self._metrics: dict[str, Metric] = {}
        for metric in metrics:
            self.register(metric)

    def register(self, metric: Metric) -> None:
        if metric.id in self._metrics:
            raise ValueError(f"duplicate metric id {metric.id!r}")
        self._metrics[metric.id] = metric

    def __len__(self) -> int:
        return len(self._metrics)

    def __iter__(self):
        return iter(self._metrics.values())

    def __contains__(self, metric_id: str) -> bool:
        return metric_id in self._metrics

    def get(self, metric_id: str) -> Metric:
        return self._metrics[metric_id]

    def ids(self) -> tuple[str, ...]:
        return tuple(self._metrics)

    def categories(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for metric in self:
            seen.setdefault(metric.descriptor.category)
        return tuple(seen)

    def subset(self, categories: Sequence[str] | None = None,
               ids: Sequence[str] | None = None) -> "Registry":
        """Filtered copy preserving registration order.

        Unknown category or metric names raise KeyError; a metric is kept
        if it matches either filter, or both filters are unset.
        """
        if categories:
            known = set(self.categories())
            bad = [c for c in categories if c not in known]
            if bad:
                raise KeyError(f"unknown categories: {', '.join(sorted(bad))}")
        if ids:
            bad = [i for i in ids if i not in self._metrics]
            if bad:
                raise KeyError(f"unknown metric ids: {', '.join(sorted(bad))}")
        if not categories and not ids:
            return Registry(self)
        cats = set(categories or ())
        wanted = set(ids or ())
        picked = [m for m in self
                  if m.descriptor.category in cats or m.id in wanted]
        return Registry(picked)

    @property
    def schema_hash(self) -> str:
        return schema_hash(self.ids())


def schema_hash(metric_ids: Sequence[str]) -> str:
    digest = hashlib.sha256("\n".join(metric_ids).encode("utf-8"))
    return digest.hexdigest()


@dataclass(frozen=True, slots=True)
class StyloVector:
    """Fixed-length feature vector for one document: one result per
    registered metric, in registry order."""

    doc_id: str
    metric_ids: tuple[str, ...]
    results: tuple[MetricResult, ...]

    def __post_init__(self) -> None:
        if len(self.metric_ids) != len(self.results):
            raise ValueError("metric_ids and results length mismatch")
        for mid, res in zip(self.metric_ids, self.results):
            if mid != res.metric_id:
                raise ValueError(f"result order mismatch at {mid}")

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(r.value for r in self.results)

    @property
    def schema_hash(self) -> str:
        return schema_hash(self.metric_ids)

    def as_dict(self) -> dict[str, float]:
        return {r.metric_id: r.value for r in self.results}

    def __len__(self) -> int:
        return len(self.results)


def evaluate_all(registry: Registry, doc: Document) -> StyloVector:
    """Evaluate every registered metric against one document, sharing a
    single context so indexes are built once."""
    if len(registry) == 0:
        raise ValueError("empty registry")
    ctx = DocContext(doc)
    results = tuple(evaluate_metric(metric, ctx) for metric in registry)
    return StyloVector(doc_id=doc.doc_id, metric_ids=registry.ids(), results=results)
