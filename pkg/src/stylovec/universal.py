"""Language-independent metric families.

Each factory returns a rule suitable for :class:`stylovec.engine.Metric`:
it takes a :class:`DocContext` and returns ``(captured_refs, raw)`` where
``raw=None`` means "count the captured tokens". Families cover POS and
feature incidences, declarative token/sentence patterns, lexical
diversity, word length, graphical tokens, repetition, and phrase
distance. Language packs instantiate these with concrete parameters.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .engine import DocContext, TokenRef
from .model import CONTENT_UPOS, FUNCTION_UPOS, Sentence, Token

# ---------------------------------------------------------------------------
# syllables


_VOWELS = {
    "en": frozenset("aeiouy"),
    "pl": frozenset("aąeęioóuy"),
    "uk": frozenset("аеєиіїоуюя"),
    "ru": frozenset("аеёиоуыэюя"),
}


def syllable_count(word: str, language: str = "en") -> int:
    """Number of syllables, approximated as maximal vowel-letter runs.

    English drops a word-final silent ``e`` standing alone in its run,
    unless that would leave no syllable. Words without vowel letters
    (digits, punctuation) count 0.
    """
    w = word.casefold()
    vowels = _VOWELS.get(language, _VOWELS["en"])
    runs = 0
    prev = False
    last_run_len = 0
    for ch in w:
        if ch in vowels:
            if not prev:
                runs += 1
                last_run_len = 0
            last_run_len += 1
            prev = True
        else:
            prev = False
    if language == "en" and runs >= 2 and prev and last_run_len == 1 and w.endswith("e"):
        runs -= 1
    return runs


# ---------------------------------------------------------------------------
# token and sentence patterns


@dataclass(frozen=True)
class TokenTest:
    """Conjunctive predicate over one token; unset fields always pass.

    ``child``/``no_child``/``head`` climb the dependency tree, so
    matching needs the enclosing sentence.
    """

    upos: frozenset[str] | None = None
    xpos_prefix: str | None = None
    deprel: frozenset[str] | None = None
    deprel_base: frozenset[str] | None = None
    feats: tuple[tuple[str, str], ...] = ()
    feats_absent: tuple[str, ...] = ()
    lemma_in: frozenset[str] | None = None
    form_in: frozenset[str] | None = None
    form_re: re.Pattern | None = None
    form_not_re: re.Pattern | None = None
    entity: str | None = None
    is_punct: bool | None = None
    child: "TokenTest | None" = None
    no_child: "TokenTest | None" = None
    head: "TokenTest | None" = None

    def matches(self, tok: Token, sent: Sentence) -> bool:
        if self.upos is not None and tok.upos not in self.upos:
            return False
        if self.xpos_prefix is not None:
            if tok.xpos is None or not tok.xpos.startswith(self.xpos_prefix):
                return False
        if self.deprel is not None and tok.deprel not in self.deprel:
            return False
        if self.deprel_base is not None and tok.deprel_base() not in self.deprel_base:
            return False
        for key, value in self.feats:
            if not tok.has_feat(key, value):
                return False
        for key in self.feats_absent:
            if key in tok.feats:
                return False
        if self.lemma_in is not None and tok.lemma.casefold() not in self.lemma_in:
            return False
        if self.form_in is not None and tok.form.casefold() not in self.form_in:
            return False
        if self.form_re is not None and not self.form_re.search(tok.form):
            return False
        if self.form_not_re is not None and self.form_not_re.search(tok.form):
            return False
        if self.entity is not None and tok.entity != self.entity:
            return False
        if self.is_punct is not None and tok.is_punct != self.is_punct:
            return False
        if self.child is not None:
            if not any(self.child.matches(c, sent) for c in sent.children(tok)):
                return False
        if self.no_child is not None:
            if any(self.no_child.matches(c, sent) for c in sent.children(tok)):
                return False
        if self.head is not None:
            if tok.head is None or not self.head.matches(sent.tokens[tok.head], sent):
                return False
        return True


_QUANTIFIERS = ("any", "all", "none", "first", "last")


@dataclass(frozen=True)
class SentenceClause:
    quantifier: str
    test: TokenTest

    def __post_init__(self) -> None:
        if self.quantifier not in _QUANTIFIERS:
            raise ValueError(f"unknown quantifier {self.quantifier!r}")

    def holds(self, sent: Sentence) -> bool:
        if self.quantifier == "any":
            return any(self.test.matches(t, sent) for t in sent.tokens)
        if self.quantifier == "all":
            return all(self.test.matches(t, sent) for t in sent.tokens)
        if self.quantifier == "none":
            return not any(self.test.matches(t, sent) for t in sent.tokens)
        if self.quantifier == "first":
            return self.test.matches(sent.tokens[0], sent)
        return self.test.matches(sent.tokens[-1], sent)


def token_pattern(test: TokenTest):
    """Capture every token satisfying ``test``."""
    def rule(ctx: DocContext):
        refs = []
        for si, sent in enumerate(ctx.doc.sentences):
            for ti, tok in enumerate(sent.tokens):
                if test.matches(tok, sent):
                    refs.append((si, ti))
        return refs, None
    return rule


def sentence_pattern(clauses: tuple[SentenceClause, ...]):
    """Capture all tokens of every sentence where every clause holds."""
    def rule(ctx: DocContext):
        refs: list[TokenRef] = []
        for si, sent in enumerate(ctx.doc.sentences):
            if all(cl.holds(sent) for cl in clauses):
                refs.extend((si, ti) for ti in range(len(sent)))
        return refs, None
    return rule


def pos_incidence(upos: str):
    def rule(ctx: DocContext):
        return list(ctx.upos_index.get(upos, ())), None
    return rule


def feat_incidence(key: str, value: str, upos: frozenset[str] | None = None):
    test = TokenTest(upos=upos, feats=((key, value),))
    return token_pattern(test)


# ---------------------------------------------------------------------------
# lexical diversity and frequency


def _unit(tok: Token, layer: str) -> str:
    return (tok.lemma if layer == "lemma" else tok.form).casefold()


def type_token_ratio(layer: str = "form"):
    """Distinct non-punctuation types, normalized like every other
    metric by total token count. Captures the first token of each type."""
    def rule(ctx: DocContext):
        seen: set[str] = set()
        refs = []
        for si, ti, tok in ctx.non_punct_refs:
            unit = _unit(tok, layer)
            if unit not in seen:
                seen.add(unit)
                refs.append((si, ti))
        return refs, float(len(seen))
    return rule


def top_frequency_incidence(fraction: float, layer: str = "form"):
    """Tokens belonging to the top ``ceil(fraction * type_count)`` most
    frequent types; ties break by frequency then alphabetically."""
    def rule(ctx: DocContext):
        counts: dict[str, int] = {}
        for _, _, tok in ctx.non_punct_refs:
            unit = _unit(tok, layer)
            counts[unit] = counts.get(unit, 0) + 1
        if not counts:
            return [], 0.0
        k = math.ceil(fraction * len(counts))
        ranked = sorted(counts, key=lambda u: (-counts[u], u))
        top = set(ranked[:k])
        refs = [(si, ti) for si, ti, tok in ctx.non_punct_refs
                if _unit(tok, layer) in top]
        return refs, None
    return rule


def word_length_incidence(min_syllables: int | None = None,
                          min_chars: int | None = None,
                          language: str = "en"):
    def rule(ctx: DocContext):
        refs = []
        for si, ti, tok in ctx.non_punct_refs:
            if min_chars is not None and len(tok.form) < min_chars:
                continue
            if min_syllables is not None and syllable_count(tok.form, language) < min_syllables:
                continue
            refs.append((si, ti))
        return refs, None
    return rule


def function_content_split(kind: str):
    """Share of content words, function words, or everything else
    (PUNCT, NUM, INTJ, SYM, X); the three shares partition the document."""
    if kind == "content":
        wanted = CONTENT_UPOS
    elif kind == "function":
        wanted = FUNCTION_UPOS
    elif kind == "other":
        wanted = None
    else:
        raise ValueError(f"unknown split kind {kind!r}")
    def rule(ctx: DocContext):
        if wanted is None:
            refs = [(si, ti) for si, ti, tok in ctx.refs
                    if tok.upos not in CONTENT_UPOS and tok.upos not in FUNCTION_UPOS]
        else:
            refs = [(si, ti) for si, ti, tok in ctx.refs if tok.upos in wanted]
        return refs, None
    return rule


# ---------------------------------------------------------------------------
# graphical tokens


_EMOJI_RANGES = (
    (0x1F1E6, 0x1F1FF),
    (0x1F300, 0x1F5FF),
    (0x1F600, 0x1F64F),
    (0x1F680, 0x1F6FF),
    (0x1F900, 0x1F9FF),
    (0x1FA70, 0x1FAFF),
    (0x2600, 0x26FF),
    (0x2700, 0x27BF),
    (0x2B00, 0x2BFF),
)

_HASHTAG_RE = re.compile(r"#\w+\Z")
_MENTION_RE = re.compile(r"@\w+\Z")


def has_emoji(text: str) -> bool:
    for ch in text:
        o = ord(ch)
        for lo, hi in _EMOJI_RANGES:
            if lo <= o <= hi:
                return True
    return False


def _is_lenny(form: str) -> bool:
    return "(" in form and ")" in form and any(ord(c) > 127 for c in form)


def _is_masked(form: str) -> bool:
    return "**" in form and any(c.isalpha() for c in form)


def _is_capitalized(form: str) -> bool:
    return len(form) >= 2 and form.isalpha() and form.isupper()


GRAPHICAL_KINDS = ("emoji", "emoticon", "url", "hashtag", "mention",
                   "lenny", "masked_word", "capitalized")


def graphical_incidence(kind: str, emoticons: frozenset[str] = frozenset()):
    """Tokens of one surface kind: emoji, emoticon, url, hashtag,
    mention, lenny, masked_word, or capitalized (all-caps word)."""
    if kind not in GRAPHICAL_KINDS:
        raise ValueError(f"unknown graphical kind {kind!r}")
    def rule(ctx: DocContext):
        refs = []
        for si, ti, tok in ctx.refs:
            form = tok.form
            if kind == "emoji":
                hit = has_emoji(form)
            elif kind == "emoticon":
                hit = form in emoticons
            elif kind == "url":
                low = form.casefold()
                hit = low.startswith(("http://", "https://", "www."))
            elif kind == "hashtag":
                hit = bool(_HASHTAG_RE.fullmatch(form))
            elif kind == "mention":
                hit = bool(_MENTION_RE.fullmatch(form))
            elif kind == "lenny":
                hit = _is_lenny(form)
            elif kind == "masked_word":
                hit = _is_masked(form)
            else:
                hit = _is_capitalized(form)
            if hit:
                refs.append((si, ti))
        return refs, None
    return rule


# ---------------------------------------------------------------------------
# repetition and rhythm


def repetition_incidence(kind: str = "lemma_bigram"):
    """Repeated material: tokens inside lemma bigrams seen more than
    once (``lemma_bigram``) or all tokens of sentences whose case-folded
    text occurs at least twice (``sentence``)."""
    if kind not in ("lemma_bigram", "sentence"):
        raise ValueError(f"unknown repetition kind {kind!r}")
    def rule(ctx: DocContext):
        refs: list[TokenRef] = []
        if kind == "lemma_bigram":
            occurrences: dict[tuple[str, str], list[tuple[TokenRef, TokenRef]]] = {}
            for si, sent in enumerate(ctx.doc.sentences):
                prev: tuple[str, int] | None = None
                for ti, tok in enumerate(sent.tokens):
                    if tok.is_punct:
                        prev = None
                        continue
                    lemma = tok.lemma.casefold()
                    if prev is not None:
                        key = (prev[0], lemma)
                        occurrences.setdefault(key, []).append(((si, prev[1]), (si, ti)))
                    prev = (lemma, ti)
            for pairs in occurrences.values():
                if len(pairs) > 1:
                    for a, b in pairs:
                        refs.append(a)
                        refs.append(b)
        else:
            counts: dict[str, int] = {}
            for sent in ctx.doc.sentences:
                text = sent.text.casefold()
                counts[text] = counts.get(text, 0) + 1
            for si, sent in enumerate(ctx.doc.sentences):
                if counts[sent.text.casefold()] >= 2:
                    refs.extend((si, ti) for ti in range(len(sent)))
        return refs, None
    return rule


def phrase_distance(upos: str):
    """Mean token gap between consecutive phrase heads of one UPOS,
    where a phrase head is a token of that UPOS whose own head is not.
    Raw value is the mean gap (0 with fewer than two heads)."""
    def rule(ctx: DocContext):
        positions = []
        refs = []
        for pos, (si, ti, tok) in enumerate(ctx.refs):
            if tok.upos != upos:
                continue
            sent = ctx.doc.sentences[si]
            if tok.head is not None and sent.tokens[tok.head].upos == upos:
                continue
            positions.append(pos)
            refs.append((si, ti))
        if len(positions) < 2:
            return refs, 0.0
        gaps = [b - a for a, b in zip(positions, positions[1:])]
        return refs, sum(gaps) / len(gaps)
    return rule
