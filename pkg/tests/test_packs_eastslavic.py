from __future__ import annotations

import pytest

from stylovec.engine import evaluate_all
from stylovec.packs import PackError, registry_for

from conftest import doc, load_fixture, sent, tok


def evaluate_doc(document, language):
    vector = evaluate_all(registry_for(language), document)
    return {r.metric_id: r for r in vector.results}


def results_for(name, language):
    document = load_fixture(f"eastslavic/{name}.conllu")
    assert document.language == language
    return document, evaluate_doc(document, language)


class TestRegistryShape:
    def test_metric_counts(self):
        assert len(registry_for("uk")) == 78
        assert len(registry_for("ru")) == 76

    def test_positioning_is_ukrainian_only(self):
        assert "SYN_POSITIONING" in registry_for("uk")
        assert "SYN_POSITIONING" not in registry_for("ru")

    def test_vocative_case_is_ukrainian_only(self):
        assert "IN_CASE_VOC" in registry_for("uk")
        assert "IN_CASE_VOC" not in registry_for("ru")

    def test_shared_verb_form_inventory(self):
        uk = set(registry_for("uk").ids())
        ru = set(registry_for("ru").ids())
        vf = {m for m in uk | ru if m.startswith("VF_")}
        assert vf <= uk and vf <= ru
        assert len(vf) == 14

    def test_unsupported_language_rejected(self):
        with pytest.raises(PackError, match="unsupported"):
            registry_for("de")


class TestParataxis:
    @pytest.mark.parametrize("name,language", [
        ("uk_parataxis", "uk"),
        ("ru_parataxis", "ru"),
    ])
    def test_clause_heads_captured(self, name, language):
        document, res = results_for(name, language)
        assert document.token_count == 6
        r = res["SYN_PARATAXIS"]
        assert r.captured == ((0, 0), (0, 2), (0, 4))
        assert r.value == 3 / 6

    def test_coordinated_clauses_with_conjunction_not_flagged(self):
        # "... и <verb>": overt coordinator blocks the parataxis reading
        d = doc(
            sent(
                tok(0, "Пришёл", lemma="прийти", upos="VERB",
                    feats={"Tense": "Past", "VerbForm": "Fin"}),
                tok(1, ",", lemma=",", upos="PUNCT", head=3, deprel="punct"),
                tok(2, "и", lemma="и", upos="CCONJ", head=3, deprel="cc"),
                tok(3, "увидел", lemma="увидеть", upos="VERB", head=0, deprel="conj",
                    feats={"Tense": "Past", "VerbForm": "Fin"}),
            ),
            doc_id="t", language="ru",
        )
        assert evaluate_doc(d, "ru")["SYN_PARATAXIS"].raw_count == 0

    def test_comma_separated_finite_conjuncts_flagged(self):
        d = doc(
            sent(
                tok(0, "Пришёл", lemma="прийти", upos="VERB",
                    feats={"Tense": "Past", "VerbForm": "Fin"}),
                tok(1, ",", lemma=",", upos="PUNCT", head=2, deprel="punct"),
                tok(2, "увидел", lemma="увидеть", upos="VERB", head=0, deprel="conj",
                    feats={"Tense": "Past", "VerbForm": "Fin"}),
            ),
            doc_id="t", language="ru",
        )
        res = evaluate_doc(d, "ru")["SYN_PARATAXIS"]
        assert res.captured == ((0, 0), (0, 2))


class TestDirectSpeech:
    def test_dash_opened_sentence_captured_whole(self):
        document, res = results_for("uk_direct", "uk")
        r = res["SYN_DIRECT_SPEECH"]
        assert r.captured == tuple((0, ti) for ti in range(5))
        assert r.value == 1.0

    def test_mid_sentence_dash_not_direct_speech(self):
        d = doc(
            sent(
                tok(0, "Київ", lemma="Київ", upos="PROPN", head=3, deprel="nsubj"),
                tok(1, "—", lemma="—", upos="PUNCT", head=3, deprel="punct"),
                tok(2, "це", lemma="це", upos="PRON", head=3, deprel="expl"),
                tok(3, "столиця", lemma="столиця", upos="NOUN"),
            ),
            doc_id="t", language="uk",
        )
        assert evaluate_doc(d, "uk")["SYN_DIRECT_SPEECH"].raw_count == 0


class TestPositioning:
    def test_hyphenated_archaic_compound(self):
        document, res = results_for("uk_positioning", "uk")
        r = res["SYN_POSITIONING"]
        assert r.captured == ((0, 0),)
        assert r.value == 1 / 3

    def test_separated_adj_dash_noun_triple(self):
        d = doc(
            sent(
                tok(0, "Ясен", lemma="ясен", upos="ADJ", head=2, deprel="amod"),
                tok(1, "—", lemma="—", upos="PUNCT", head=2, deprel="punct"),
                tok(2, "місяць", lemma="місяць", upos="NOUN"),
            ),
            doc_id="t", language="uk",
        )
        res = evaluate_doc(d, "uk")["SYN_POSITIONING"]
        assert res.captured == ((0, 0), (0, 1), (0, 2))

    def test_ordinary_hyphenated_noun_not_flagged(self):
        d = doc(
            sent(tok(0, "інтернет-магазин", lemma="інтернет-магазин", upos="NOUN")),
            doc_id="t", language="uk",
        )
        assert evaluate_doc(d, "uk")["SYN_POSITIONING"].raw_count == 0


class TestFuture:
    @pytest.mark.parametrize("name,language", [
        ("uk_future", "uk"),
        ("ru_future", "ru"),
    ])
    def test_analytic_future_pair(self, name, language):
        document, res = results_for(name, language)
        assert res["VF_FUT_ANALYTIC"].captured == ((0, 1), (0, 2))
        assert res["VF_FUT_ANY"].captured == ((0, 1), (0, 2))
        assert res["VF_FUT_SYNTH"].raw_count == 0

    def test_synthetic_future_verb(self):
        d = doc(
            sent(tok(0, "прочитаю", lemma="прочитать", upos="VERB",
                     feats={"Tense": "Fut", "Aspect": "Perf"})),
            doc_id="t", language="ru",
        )
        res = evaluate_doc(d, "ru")
        assert res["VF_FUT_SYNTH"].raw_count == 1
        assert res["VF_FUT_ANY"].raw_count == 1
        assert res["VF_FUT_ANALYTIC"].raw_count == 0

    def test_transitive_verb_object_pair(self):
        document, res = results_for("uk_future", "uk")
        r = res["VF_TRANSITIVE"]
        forms = [document.token_at(si, ti).form for si, ti in r.captured]
        assert forms == ["читати", "книгу"]

    def test_past_aux_plus_infinitive_not_future(self):
        d = doc(
            sent(
                tok(0, "хотів", lemma="хотіти", upos="VERB",
                    feats={"Tense": "Past"}),
                tok(1, "читати", lemma="читати", upos="VERB", head=0,
                    deprel="xcomp", feats={"VerbForm": "Inf"}),
            ),
            doc_id="t", language="uk",
        )
        res = evaluate_doc(d, "uk")
        assert res["VF_FUT_ANALYTIC"].raw_count == 0
        assert res["VF_FUT_ANY"].raw_count == 0


class TestVerbForms:
    def test_reflexive_surface_form(self):
        document, res = results_for("ru_reflexive", "ru")
        r = res["VF_REFLEXIVE"]
        assert [document.token_at(si, ti).form for si, ti in r.captured] == ["улыбнулся"]

    def test_reflexive_needs_verb(self):
        d = doc(
            sent(tok(0, "вся", lemma="весь", upos="DET")),
            doc_id="t", language="ru",
        )
        assert evaluate_doc(d, "ru")["VF_REFLEXIVE"].raw_count == 0

    def test_aspect_and_tense_shares(self):
        document, res = results_for("ru_parataxis", "ru")
        assert res["VF_ASPECT_PERF"].raw_count == 3
        assert res["VF_ASPECT_IMPERF"].raw_count == 0
        assert res["VF_PAST"].raw_count == 3
        assert res["VF_PRES"].raw_count == 0


class TestCaseInventory:
    def test_all_declared_cases_fire(self):
        cases_uk = ("Nom", "Gen", "Dat", "Acc", "Ins", "Loc", "Voc")
        toks = [tok(0, "слово", lemma="слово", upos="NOUN",
                    feats={"Case": cases_uk[0]})]
        toks += [tok(i, "слово", lemma="слово", upos="NOUN", head=0,
                     deprel="conj", feats={"Case": c})
                 for i, c in enumerate(cases_uk[1:], start=1)]
        d = doc(sent(*toks), doc_id="t", language="uk")
        res = evaluate_doc(d, "uk")
        for c in cases_uk:
            assert res[f"IN_CASE_{c.upper()}"].raw_count == 1


class TestGoldenCorpusDocs:
    """The multilingual sample corpus exercises every pack."""

    @pytest.mark.parametrize("name,language,count", [
        ("alpha_en", "en", 10),
        ("bravo_en", "en", 9),
        ("charlie_pl", "pl", 8),
        ("delta_pl", "pl", 5),
        ("echo_uk", "uk", 5),
        ("fox_ru", "ru", 5),
    ])
    def test_clean_evaluation(self, name, language, count):
        document = load_fixture(f"golden/corpus/{name}.conllu")
        assert document.language == language
        assert document.token_count == count
        res = evaluate_doc(document, language)
        for r in res.values():
            assert r.error is None
            assert 0.0 <= r.value <= 1.0
            assert r.value == r.raw_count / count

    def test_conjunction_blocks_parataxis_in_sample(self):
        document = load_fixture("golden/corpus/fox_ru.conllu")
        assert evaluate_doc(document, "ru")["SYN_PARATAXIS"].raw_count == 0

    def test_greek_prefix_hit_in_sample(self):
        document = load_fixture("golden/corpus/delta_pl.conllu")
        res = evaluate_doc(document, "pl")
        assert res["LEX_PREFIX_GREEK"].raw_count == 1
        assert res["LEX_ADV_FREQ"].raw_count == 1
