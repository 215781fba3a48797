"""Polish syntax and description detectors.

Covers constructions the declarative pattern language cannot express
cleanly: nominal (verbless) sentences, quoted words, OVS order and
post-posed epithets (both experimental heuristics), and the two simile
variants built on the comparative particles jak/niczym.
"""

from __future__ import annotations

from ..engine import DocContext, TokenRef
from ..model import Sentence

_QUOTE_FORMS = frozenset({'"', "'", "„", "”", "«", "»", "‚", "’"})
_COMPARATIVE_LEMMAS = frozenset({"jak", "niczym"})


def detect_nominal_sentence(params, pack):
    """Verbless sentences with a nominal or adjectival head; captures
    the whole sentence."""
    def rule(ctx: DocContext):
        refs: list[TokenRef] = []
        for si, sent in enumerate(ctx.doc.sentences):
            if sent.root.upos not in ("NOUN", "PROPN", "ADJ"):
                continue
            if any(t.upos in ("VERB", "AUX") for t in sent.tokens):
                continue
            refs.extend((si, ti) for ti in range(len(sent)))
        return refs, None
    return rule


def detect_quoted_word(params, pack):
    """Non-punctuation tokens enclosed by a quote pair within one
    sentence."""
    def rule(ctx: DocContext):
        refs: list[TokenRef] = []
        for si, sent in enumerate(ctx.doc.sentences):
            inside = False
            pending: list[TokenRef] = []
            for ti, tok in enumerate(sent.tokens):
                if tok.form in _QUOTE_FORMS:
                    if inside:
                        refs.extend(pending)
                        pending = []
                    inside = not inside
                elif inside and not tok.is_punct:
                    pending.append((si, ti))
        return refs, None
    return rule


def detect_ovs(params, pack):
    """Object-verb-subject linear order around the root (experimental
    heuristic); captures object head, root, and subject head."""
    def rule(ctx: DocContext):
        refs: list[TokenRef] = []
        for si, sent in enumerate(ctx.doc.sentences):
            root = sent.root
            if root.upos not in ("VERB", "AUX"):
                continue
            obj = None
            subj = None
            for c in sent.children(root):
                if c.deprel_base() == "obj":
                    obj = c
                elif c.deprel_base() in ("nsubj", "csubj"):
                    subj = c
            if obj is not None and subj is not None and obj.index < root.index < subj.index:
                refs.extend(((si, obj.index), (si, root.index), (si, subj.index)))
        return refs, None
    return rule


def detect_inverted_epithet(params, pack):
    """Adjectival modifier placed after its noun (experimental
    heuristic); captures the post-posed adjective."""
    def rule(ctx: DocContext):
        refs: list[TokenRef] = []
        for si, sent in enumerate(ctx.doc.sentences):
            for ti, tok in enumerate(sent.tokens):
                if tok.upos != "ADJ" or tok.deprel_base() != "amod":
                    continue
                if tok.head is not None and tok.head < ti:
                    refs.append((si, ti))
        return refs, None
    return rule


def _comparative_pairs(sent: Sentence, target_upos: tuple[str, ...]):
    for tok in sent.tokens:
        if tok.upos not in target_upos:
            continue
        for c in sent.children(tok):
            if c.lemma.casefold() in _COMPARATIVE_LEMMAS:
                yield c, tok


def detect_simile_noun(params, pack):
    """Comparisons where jak/niczym governs a noun or pronoun standard
    ('szybki jak błyskawica')."""
    def rule(ctx: DocContext):
        refs: list[TokenRef] = []
        for si, sent in enumerate(ctx.doc.sentences):
            for particle, head in _comparative_pairs(sent, ("NOUN", "PROPN", "PRON")):
                refs.append((si, particle.index))
                refs.append((si, head.index))
        return refs, None
    return rule


def detect_simile_adj(params, pack):
    """Comparisons where jak/niczym targets an adjective ('jak
    szalony')."""
    def rule(ctx: DocContext):
        refs: list[TokenRef] = []
        for si, sent in enumerate(ctx.doc.sentences):
            for particle, head in _comparative_pairs(sent, ("ADJ",)):
                refs.append((si, particle.index))
                refs.append((si, head.index))
        return refs, None
    return rule


DETECTORS = {
    "nominal_sentence": detect_nominal_sentence,
    "quoted_word": detect_quoted_word,
    "ovs": detect_ovs,
    "inverted_epithet": detect_inverted_epithet,
    "simile_pl_noun": detect_simile_noun,
    "simile_pl_adj": detect_simile_adj,
}
