"""Dictionary resources: word lists, signed sentiment lexicons, and
affective norms.

Lexicon files hold one case-folded entry per line with ``#`` comments
and an optional tab-separated signed weight. Matching modes: exact
lemma, exact form, form prefix with a full-form exception list, and
multi-word phrase (consecutive forms inside one sentence, greedy
left-to-right, non-overlapping).

Norms files are tab-separated: a ``lemma`` column plus one column per
scored dimension, the header cell carrying ``name:mean``; metrics count
lemmas scoring strictly above (or at most) the declared mean.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .engine import DocContext, TokenRef

log = logging.getLogger("stylovec")

MODES = ("lemma_exact", "form_exact", "prefix", "phrase")


class LexiconError(ValueError):
    """Unusable lexicon or norms file."""


@dataclass(frozen=True)
class Lexicon:
    name: str
    mode: str
    entries: frozenset[str]
    exceptions: frozenset[str] = frozenset()
    weights: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise LexiconError(f"{self.name}: unknown mode {self.mode!r}")
        if not self.entries:
            raise LexiconError(f"{self.name}: empty lexicon")

    @property
    def phrases(self) -> tuple[tuple[str, ...], ...]:
        return tuple(tuple(e.split()) for e in self.entries)


def _read_entries(path: Path) -> list[tuple[str, float | None]]:
    try:
        text = path.read_bytes().decode("utf-8")
    except FileNotFoundError:
        raise LexiconError(f"{path}: no such file") from None
    except UnicodeDecodeError as exc:
        raise LexiconError(f"{path}: not valid UTF-8: {exc}") from None
    out: list[tuple[str, float | None]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        entry, _, rest = line.partition("\t")
        weight = None
        if rest:
            try:
                weight = float(rest.strip())
            except ValueError:
                raise LexiconError(f"{path}:{lineno}: bad weight {rest.strip()!r}") from None
        out.append((" ".join(entry.casefold().split()), weight))
    return out


def load_lexicon(path: str | Path, mode: str, name: str | None = None,
                 exceptions_path: str | Path | None = None) -> Lexicon:
    """Load a lexicon file; duplicates are dropped with a warning and
    an entry-free file is an error."""
    path = Path(path)
    entries: dict[str, float | None] = {}
    for entry, weight in _read_entries(path):
        if entry in entries:
            log.warning("%s: duplicate entry %r ignored", path, entry)
            continue
        entries[entry] = weight
    exceptions: frozenset[str] = frozenset()
    if exceptions_path is not None:
        exceptions = frozenset(e for e, _ in _read_entries(Path(exceptions_path)))
    return Lexicon(
        name=name or path.stem,
        mode=mode,
        entries=frozenset(entries),
        exceptions=exceptions,
        weights={e: w for e, w in entries.items() if w is not None},
    )


def _phrase_index(lexicon: Lexicon) -> dict[str, list[tuple[str, ...]]]:
    index: dict[str, list[tuple[str, ...]]] = {}
    for phrase in lexicon.phrases:
        index.setdefault(phrase[0], []).append(phrase)
    for first in index:
        index[first].sort(key=len, reverse=True)
    return index


def match_lexicon(ctx: DocContext, lexicon: Lexicon) -> list[TokenRef]:
    """All token references captured by the lexicon under its mode."""
    refs: list[TokenRef] = []
    if lexicon.mode == "lemma_exact":
        for entry in lexicon.entries:
            refs.extend(ctx.lemma_index.get(entry, ()))
    elif lexicon.mode == "form_exact":
        for entry in lexicon.entries:
            refs.extend(ctx.form_index.get(entry, ()))
    elif lexicon.mode == "prefix":
        prefixes = tuple(lexicon.entries)
        for si, ti, tok in ctx.refs:
            form = tok.form.casefold()
            if form in lexicon.exceptions:
                continue
            if form.startswith(prefixes):
                refs.append((si, ti))
    else:
        index = _phrase_index(lexicon)
        for si, sent in enumerate(ctx.doc.sentences):
            forms = [t.form.casefold() for t in sent.tokens]
            ti = 0
            n = len(forms)
            while ti < n:
                hit = None
                for phrase in index.get(forms[ti], ()):
                    k = len(phrase)
                    if ti + k <= n and tuple(forms[ti:ti + k]) == phrase:
                        hit = k
                        break
                if hit:
                    refs.extend((si, ti + j) for j in range(hit))
                    ti += hit
                else:
                    ti += 1
    return refs


def lexicon_incidence(lexicon: Lexicon):
    def rule(ctx: DocContext):
        return match_lexicon(ctx, lexicon), None
    return rule


def _entry_of(tok, mode: str) -> str:
    return (tok.lemma if mode == "lemma_exact" else tok.form).casefold()


def sentiment_incidence(lexicon: Lexicon, sign: str):
    """Share of tokens hitting entries with weight > 0 (``positive``) or
    weight < 0 (``negative``); zero-weight entries count in neither."""
    if sign not in ("positive", "negative"):
        raise ValueError(f"unknown sign {sign!r}")
    if lexicon.mode not in ("lemma_exact", "form_exact"):
        raise LexiconError(f"{lexicon.name}: sentiment needs an exact-match mode")
    missing = lexicon.entries - set(lexicon.weights)
    if missing:
        raise LexiconError(f"{lexicon.name}: unweighted entries, e.g. {sorted(missing)[0]!r}")
    def rule(ctx: DocContext):
        refs = []
        for si, ti, tok in ctx.refs:
            weight = lexicon.weights.get(_entry_of(tok, lexicon.mode))
            if weight is None or weight == 0:
                continue
            if (weight > 0) == (sign == "positive"):
                refs.append((si, ti))
        return refs, None
    return rule


# ---------------------------------------------------------------------------
# affective norms


@dataclass(frozen=True)
class AffectiveNorms:
    dimensions: tuple[str, ...]
    means: dict[str, float]
    scores: dict[str, dict[str, float]]


def load_norms(path: str | Path) -> AffectiveNorms:
    """Parse a norms table; the header declares each dimension with its
    mean as ``name:mean``."""
    path = Path(path)
    try:
        text = path.read_bytes().decode("utf-8")
    except FileNotFoundError:
        raise LexiconError(f"{path}: no such file") from None
    except UnicodeDecodeError as exc:
        raise LexiconError(f"{path}: not valid UTF-8: {exc}") from None
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise LexiconError(f"{path}: empty norms file")
    header = lines[0].split("\t")
    if len(header) < 2 or header[0] != "lemma":
        raise LexiconError(f"{path}: header must be 'lemma' plus dimension columns")
    dimensions: list[str] = []
    means: dict[str, float] = {}
    for cell in header[1:]:
        dim, sep, mean = cell.partition(":")
        if not sep or not dim:
            raise LexiconError(f"{path}: header cell {cell!r} must be 'name:mean'")
        try:
            means[dim] = float(mean)
        except ValueError:
            raise LexiconError(f"{path}: bad mean in header cell {cell!r}") from None
        if dim in dimensions:
            raise LexiconError(f"{path}: duplicate dimension {dim!r}")
        dimensions.append(dim)
    scores: dict[str, dict[str, float]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split("\t")
        if len(cells) != len(header):
            raise LexiconError(f"{path}:{lineno}: expected {len(header)} columns, got {len(cells)}")
        lemma = cells[0].casefold()
        if lemma in scores:
            log.warning("%s:%d: duplicate lemma %r ignored", path, lineno, lemma)
            continue
        try:
            scores[lemma] = {d: float(c) for d, c in zip(dimensions, cells[1:])}
        except ValueError:
            raise LexiconError(f"{path}:{lineno}: non-numeric score") from None
    if not scores:
        raise LexiconError(f"{path}: no score rows")
    return AffectiveNorms(dimensions=tuple(dimensions), means=means, scores=scores)


def norms_incidence(norms: AffectiveNorms, dimension: str, side: str):
    """Tokens whose lemma is scored for ``dimension`` strictly above the
    mean (``above_mean``) or at most the mean (``below_mean``)."""
    if dimension not in norms.means:
        raise LexiconError(f"norms file lacks dimension {dimension!r}")
    if side not in ("above_mean", "below_mean"):
        raise ValueError(f"unknown side {side!r}")
    mean = norms.means[dimension]
    def rule(ctx: DocContext):
        refs = []
        for si, ti, tok in ctx.refs:
            row = norms.scores.get(tok.lemma.casefold())
            if row is None:
                continue
            score = row[dimension]
            if (score > mean) if side == "above_mean" else (score <= mean):
                refs.append((si, ti))
        return refs, None
    return rule
