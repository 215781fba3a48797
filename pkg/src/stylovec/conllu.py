"""CoNLL-U reader and writer.

Parses the 10-column tab-separated format: integer-id token lines,
``n-m`` multiword range lines, ``#`` comments, blank-line sentence
breaks. Every token line must be fully annotated (lemma, UPOS, head,
deprel); decimal-id empty nodes are rejected. MISC is scanned for
``SpaceAfter=No`` and ``NER=<label>``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .model import (
    Document,
    ModelError,
    MultiwordRange,
    Sentence,
    Token,
    UPOS_TAGS,
)

_COLUMNS = 10

log = logging.getLogger("stylovec")


class ParseError(ValueError):
    """Malformed CoNLL-U input; ``line`` is 1-based, 0 for whole-payload errors."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(slots=True)
class _RawToken:
    line: int
    cols: list[str]


def _parse_feats(raw: str, line: int) -> dict[str, str]:
    if raw == "_":
        return {}
    feats: dict[str, str] = {}
    for item in raw.split("|"):
        key, sep, value = item.partition("=")
        if not sep or not key or not value:
            raise ParseError(f"malformed feature {item!r}", line)
        if key in feats:
            raise ParseError(f"duplicate feature key {key!r}", line)
        feats[key] = value
    return feats


def _parse_misc(raw: str) -> tuple[str | None, bool]:
    """Extract (entity label, space_after) from the MISC column."""
    entity = None
    space_after = True
    if raw and raw != "_":
        for item in raw.split("|"):
            key, _, value = item.partition("=")
            if key == "NER" and value:
                entity = value
            elif key == "SpaceAfter" and value == "No":
                space_after = False
    return entity, space_after


def _build_sentence(rows: list[_RawToken], ranges: list[tuple[int, int, int, str, str]]) -> Sentence:
    tokens: list[Token] = []
    n = len(rows)
    for pos, raw in enumerate(rows):
        cols = raw.cols
        tid = int(cols[0])
        if tid != pos + 1:
            raise ParseError(f"token id {tid} out of sequence, expected {pos + 1}", raw.line)
        form = cols[1]
        if not form:
            raise ParseError("empty FORM", raw.line)
        lemma = cols[2] if cols[2] != "_" else form
        upos = cols[3]
        if upos not in UPOS_TAGS:
            raise ParseError(f"invalid UPOS tag {upos!r}", raw.line)
        xpos = cols[4] if cols[4] != "_" else None
        feats = _parse_feats(cols[5], raw.line)
        if cols[6] == "_":
            raise ParseError("missing HEAD", raw.line)
        try:
            head_id = int(cols[6])
        except ValueError:
            raise ParseError(f"invalid HEAD {cols[6]!r}", raw.line) from None
        if head_id < 0 or head_id > n:
            raise ParseError(f"HEAD {head_id} out of range for {n}-token sentence", raw.line)
        deprel = cols[7]
        if not deprel or deprel == "_":
            raise ParseError("missing DEPREL", raw.line)
        entity, space_after = _parse_misc(cols[9])
        tokens.append(Token(
            index=pos,
            form=form,
            lemma=lemma,
            upos=upos,
            xpos=xpos,
            feats=feats,
            head=None if head_id == 0 else head_id - 1,
            deprel=deprel,
            deps=cols[8],
            entity=entity,
            space_after=space_after,
        ))
    mw = []
    last_end = -1
    for line, start, end, form, misc in ranges:
        if start >= end:
            raise ParseError(f"invalid token range {start}-{end}", line)
        if end > n:
            raise ParseError(f"token range {start}-{end} exceeds sentence length {n}", line)
        if start <= last_end:
            raise ParseError(f"overlapping token range {start}-{end}", line)
        last_end = end
        _, space_after = _parse_misc(misc)
        mw.append(MultiwordRange(start=start - 1, end=end - 1, form=form, space_after=space_after))
    first = rows[0].line
    try:
        return Sentence(tokens=tuple(tokens), ranges=tuple(mw))
    except ModelError as exc:
        raise ParseError(str(exc), first) from None


def parse_conllu(payload: str, doc_id: str, language: str | None = None) -> Document:
    """Parse one document from CoNLL-U text.

    ``language`` overrides any ``# language = xx`` comment in the payload.
    Raises :class:`ParseError` on structural problems.
    """
    if payload.startswith("﻿"):
        payload = payload[1:]
    payload = payload.replace("\r\n", "\n")
    sentences: list[Sentence] = []
    rows: list[_RawToken] = []
    ranges: list[tuple[int, int, int, str, str]] = []
    comment_language: str | None = None

    def flush() -> None:
        nonlocal rows, ranges
        if rows:
            sentences.append(_build_sentence(rows, ranges))
        elif ranges:
            raise ParseError("token range without token lines", ranges[0][0])
        rows = []
        ranges = []

    for lineno, line in enumerate(payload.split("\n"), start=1):
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition("=")
            if sep and key.strip() == "language" and value.strip():
                comment_language = value.strip()
            continue
        cols = line.split("\t")
        if len(cols) != _COLUMNS:
            raise ParseError(f"expected {_COLUMNS} tab-separated columns, got {len(cols)}", lineno)
        tid = cols[0]
        if "-" in tid:
            a, _, b = tid.partition("-")
            try:
                start, end = int(a), int(b)
            except ValueError:
                raise ParseError(f"invalid token range id {tid!r}", lineno) from None
            ranges.append((lineno, start, end, cols[1], cols[9]))
            continue
        if "." in tid:
            raise ParseError(f"empty nodes are not supported (id {tid!r})", lineno)
        try:
            int(tid)
        except ValueError:
            raise ParseError(f"invalid token id {tid!r}", lineno) from None
        rows.append(_RawToken(line=lineno, cols=cols))
    flush()
    if not sentences:
        raise ParseError("empty document: no token lines found")
    if language and comment_language and language != comment_language:
        log.warning(
            "document %s: language %r overrides file comment %r",
            doc_id, language, comment_language,
        )
    return Document(doc_id=doc_id, language=language or comment_language, sentences=tuple(sentences))


def _misc_column(entity: str | None, space_after: bool) -> str:
    parts = []
    if entity is not None:
        parts.append(f"NER={entity}")
    if not space_after:
        parts.append("SpaceAfter=No")
    return "|".join(parts) if parts else "_"


def _feats_column(feats: dict[str, str]) -> str:
    if not feats:
        return "_"
    return "|".join(f"{k}={v}" for k, v in sorted(feats.items()))


def to_conllu(doc: Document) -> str:
    """Serialize a document back to CoNLL-U text."""
    out: list[str] = []
    if doc.language:
        out.append(f"# language = {doc.language}")
    for sent in doc.sentences:
        by_start = {r.start: r for r in sent.ranges}
        for tok in sent.tokens:
            rng = by_start.get(tok.index)
            if rng is not None:
                out.append("\t".join([
                    f"{rng.start + 1}-{rng.end + 1}", rng.form, "_", "_", "_",
                    "_", "_", "_", "_", _misc_column(None, rng.space_after),
                ]))
            out.append("\t".join([
                str(tok.index + 1),
                tok.form,
                tok.lemma,
                tok.upos,
                tok.xpos or "_",
                _feats_column(tok.feats),
                "0" if tok.head is None else str(tok.head + 1),
                tok.deprel,
                tok.deps,
                _misc_column(tok.entity, tok.space_after),
            ]))
        out.append("")
    return "\n".join(out) + "\n"


@dataclass(slots=True)
class LoadError:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


@dataclass(slots=True)
class CorpusLoad:
    documents: list[Document] = field(default_factory=list)
    errors: list[LoadError] = field(default_factory=list)


def list_corpus_files(path: str | Path, pattern: str = "*.conllu") -> list[Path]:
    """Corpus file discovery: directory glob sorted by name bytes, or the one file.

    Zero matches in a directory is an error; downstream row order relies
    on the byte-order sort being stable across platforms.
    """
    root = Path(path)
    if root.is_dir():
        files = sorted(root.glob(pattern), key=lambda p: p.name.encode("utf-8"))
        if not files:
            raise ParseError(f"empty corpus: no files matching {pattern!r} under {root}")
        return files
    return [root]


def load_corpus(
    path: str | Path,
    language: str | None = None,
    strict: bool = False,
    pattern: str = "*.conllu",
) -> CorpusLoad:
    """Load a .conllu file or every file matching ``pattern`` in a directory.

    Each file becomes one document whose id is the file stem. Unreadable
    or malformed files are collected as :class:`LoadError` entries; with
    ``strict`` the first such error is raised instead.
    """
    files = list_corpus_files(path, pattern)
    load = CorpusLoad()
    for file in files:
        try:
            payload = file.read_bytes().decode("utf-8")
        except OSError as exc:
            err = LoadError(str(file), f"cannot read: {exc}")
            if strict:
                raise ParseError(str(err)) from None
            load.errors.append(err)
            continue
        except UnicodeDecodeError as exc:
            err = LoadError(str(file), f"not valid UTF-8: {exc}")
            if strict:
                raise ParseError(str(err)) from None
            load.errors.append(err)
            continue
        try:
            load.documents.append(parse_conllu(payload, doc_id=file.stem, language=language))
        except ParseError as exc:
            err = LoadError(str(file), str(exc))
            if strict:
                raise ParseError(str(err)) from None
            load.errors.append(err)
    return load
