from __future__ import annotations

from pathlib import Path

import pytest

from stylovec.conllu import parse_conllu
from stylovec.model import Document, Sentence, Token

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(relpath: str) -> Document:
    path = FIXTURES / relpath
    return parse_conllu(path.read_text(encoding="utf-8"), doc_id=path.stem)


def tok(index: int, form: str, lemma: str | None = None, upos: str = "NOUN",
        head: int | None = None, deprel: str = "root",
        feats: dict[str, str] | None = None, entity: str | None = None,
        space_after: bool = True, xpos: str | None = None) -> Token:
    return Token(index=index, form=form, lemma=lemma if lemma is not None else form.casefold(),
                 upos=upos, xpos=xpos, feats=feats or {}, head=head, deprel=deprel,
                 entity=entity, space_after=space_after)


def sent(*tokens: Token) -> Sentence:
    return Sentence(tokens=tuple(tokens), ranges=())


def doc(*sentences: Sentence, doc_id: str = "t", language: str = "en") -> Document:
    return Document(doc_id=doc_id, language=language, sentences=tuple(sentences))


def word_sentence(*words: str, upos: str = "NOUN") -> Sentence:
    """Flat sentence: token 0 is root, the rest depend on it."""
    tokens = [
        tok(i, w, upos=upos, head=None if i == 0 else 0,
            deprel="root" if i == 0 else "dep")
        for i, w in enumerate(words)
    ]
    return sent(*tokens)


@pytest.fixture
def simple_doc() -> Document:
    return doc(word_sentence("alpha", "beta", "gamma"))
