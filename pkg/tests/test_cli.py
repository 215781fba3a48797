"""End-to-end tests for the command-line interface.

Every test drives ``stylovec.cli.main`` with an argv list, the same entry
point the installed console script uses, and asserts on exit codes and on
the files/streams the run produces.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import pytest

from stylovec.cli import main

GOLDEN_CORPUS = Path(__file__).parent / "fixtures" / "golden" / "corpus"

# Minimal but fully valid documents (10-column lines, explicit language
# comments) used to assemble throwaway corpora under tmp_path.
EN_DOC = (
    "# language = en\n"
    "1\tThe\tthe\tDET\t_\t_\t2\tdet\t_\t_\n"
    "2\tcat\tcat\tNOUN\t_\t_\t3\tnsubj\t_\t_\n"
    "3\tsat\tsit\tVERB\t_\t_\t0\troot\t_\t_\n"
    "4\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_\n"
)
EN_DOC_2 = (
    "# language = en\n"
    "1\tDogs\tdog\tNOUN\t_\tNumber=Plur\t2\tnsubj\t_\t_\n"
    "2\tbark\tbark\tVERB\t_\t_\t0\troot\t_\t_\n"
    "3\tloudly\tloudly\tADV\t_\t_\t2\tadvmod\t_\t_\n"
    "4\t!\t!\tPUNCT\t_\t_\t2\tpunct\t_\t_\n"
)
PL_DOC = (
    "# language = pl\n"
    "1\tNie\tnie\tPART\t_\t_\t2\tadvmod:neg\t_\t_\n"
    "2\tlubię\tlubić\tVERB\t_\tVerbForm=Fin\t0\troot\t_\t_\n"
    "3\ttego\tto\tPRON\t_\t_\t2\tobj\t_\t_\n"
    "4\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_\n"
)


def write_corpus(root: Path, files: dict[str, str]) -> Path:
    root.mkdir(parents=True, exist_ok=True)
    for name, payload in files.items():
        (root / name).write_text(payload, encoding="utf-8")
    return root


def read_csv(path: Path) -> tuple[list[str], list[list[str]]]:
    with path.open(newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


class TestAnalyzeCsv:
    def test_single_language_happy_path(self, tmp_path):
        corpus = write_corpus(tmp_path / "c", {"a.conllu": EN_DOC, "b.conllu": EN_DOC_2})
        out = tmp_path / "vectors.csv"
        assert main(["analyze", "--input", str(corpus), "--out", str(out)]) == 0
        # One language in the corpus: the output lands at the exact path.
        assert out.is_file()
        header, rows = read_csv(out)
        assert header[0] == "doc_id"
        assert len(header) == 1 + 118
        assert [r[0] for r in rows] == ["a", "b"]
        for row in rows:
            for cell in row[1:]:
                assert 0.0 <= float(cell) <= 1.0

    def test_metric_filter_trims_columns(self, tmp_path):
        corpus = write_corpus(tmp_path / "c", {"neg.conllu": PL_DOC})
        out = tmp_path / "neg.csv"
        code = main([
            "analyze", "--input", str(corpus), "--out", str(out),
            "--lang", "pl", "--metrics", "SY_S_NEG",
        ])
        assert code == 0
        header, rows = read_csv(out)
        assert header == ["doc_id", "SY_S_NEG"]
        # All four tokens of the negated sentence over four tokens total.
        assert rows == [["neg", "1.000000"]]

    def test_category_filter(self, tmp_path):
        corpus = write_corpus(tmp_path / "c", {"a.conllu": EN_DOC})
        out = tmp_path / "pos.csv"
        code = main([
            "analyze", "--input", str(corpus), "--out", str(out),
            "--lang", "en", "--categories", "pos",
        ])
        assert code == 0
        header, _ = read_csv(out)
        assert len(header) == 1 + 17
        assert all(col.startswith("POS_") for col in header[1:])

    def test_multilingual_corpus_splits_output_per_language(self, tmp_path):
        corpus = write_corpus(
            tmp_path / "c",
            {"a.conllu": EN_DOC, "b.conllu": EN_DOC_2, "n.conllu": PL_DOC},
        )
        out = tmp_path / "vectors.csv"
        assert main(["analyze", "--input", str(corpus), "--out", str(out)]) == 0
        assert not out.exists()
        en_out = tmp_path / "vectors.en.csv"
        pl_out = tmp_path / "vectors.pl.csv"
        assert en_out.is_file() and pl_out.is_file()
        en_header, en_rows = read_csv(en_out)
        pl_header, pl_rows = read_csv(pl_out)
        assert len(en_header) == 1 + 118
        assert len(pl_header) == 1 + 107
        assert [r[0] for r in en_rows] == ["a", "b"]
        assert [r[0] for r in pl_rows] == ["n"]

    def test_jobs_do_not_change_output_bytes(self, tmp_path):
        corpus = write_corpus(
            tmp_path / "c",
            {"a.conllu": EN_DOC, "b.conllu": EN_DOC_2, "n.conllu": PL_DOC},
        )
        out1 = tmp_path / "one.csv"
        out2 = tmp_path / "two.csv"
        assert main(["analyze", "--input", str(corpus), "--out", str(out1), "--jobs", "1"]) == 0
        assert main(["analyze", "--input", str(corpus), "--out", str(out2), "--jobs", "2"]) == 0
        for lang in ("en", "pl"):
            a = tmp_path / f"one.{lang}.csv"
            b = tmp_path / f"two.{lang}.csv"
            assert a.read_bytes() == b.read_bytes()

    def test_debug_out_writes_per_document_captures(self, tmp_path):
        corpus = write_corpus(tmp_path / "c", {"neg.conllu": PL_DOC})
        out = tmp_path / "v.csv"
        debug = tmp_path / "debug"
        code = main([
            "analyze", "--input", str(corpus), "--out", str(out),
            "--debug-out", str(debug),
        ])
        assert code == 0
        debug_file = debug / "neg.debug.csv"
        assert debug_file.is_file()
        header, rows = read_csv(debug_file)
        assert header[:3] == ["doc_id", "metric_id", "sentence_index"]
        assert any(r[1] == "SY_S_NEG" for r in rows)


class TestAnalyzeJson:
    def test_json_format_single_file_for_all_languages(self, tmp_path):
        corpus = write_corpus(
            tmp_path / "c", {"a.conllu": EN_DOC, "n.conllu": PL_DOC}
        )
        out = tmp_path / "vectors.json"
        code = main([
            "analyze", "--input", str(corpus), "--out", str(out), "--format", "json",
        ])
        assert code == 0
        assert out.is_file()
        assert not (tmp_path / "vectors.en.json").exists()
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert isinstance(payload, list) and len(payload) == 2
        by_lang = {entry["language"]: entry for entry in payload}
        assert set(by_lang) == {"en", "pl"}
        assert by_lang["en"]["doc_id"] == "a"
        assert set(by_lang["pl"]["values"]) >= {"SY_S_NEG", "POS_VERB"}
        for entry in payload:
            assert set(entry) == {"doc_id", "language", "schema_hash", "values"}


class TestAnalyzeFailures:
    def test_unknown_language_flag_rejected_by_parser(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main([
                "analyze", "--input", str(tmp_path), "--out",
                str(tmp_path / "o.csv"), "--lang", "xx",
            ])
        assert exc.value.code == 2

    def test_empty_corpus_is_a_usage_error(self, tmp_path, capsys):
        corpus = tmp_path / "empty"
        corpus.mkdir()
        out = tmp_path / "o.csv"
        assert main(["analyze", "--input", str(corpus), "--out", str(out)]) == 2
        assert "empty corpus" in capsys.readouterr().err

    def test_unknown_metric_filter_is_a_usage_error(self, tmp_path, capsys):
        corpus = write_corpus(tmp_path / "c", {"a.conllu": EN_DOC})
        out = tmp_path / "o.csv"
        code = main([
            "analyze", "--input", str(corpus), "--out", str(out),
            "--lang", "en", "--metrics", "NO_SUCH_METRIC",
        ])
        assert code == 2
        assert "NO_SUCH_METRIC" in capsys.readouterr().err

    def test_missing_input_file_is_a_per_file_failure(self, tmp_path, capsys):
        out = tmp_path / "o.csv"
        code = main([
            "analyze", "--input", str(tmp_path / "nope.conllu"), "--out", str(out),
        ])
        assert code == 1
        assert "nope.conllu" in capsys.readouterr().err

    def test_partial_failure_keeps_good_rows_and_reports(self, tmp_path, capsys):
        corpus = write_corpus(
            tmp_path / "c",
            {"a.conllu": EN_DOC, "broken.conllu": "1\tonly-two-columns\n"},
        )
        out = tmp_path / "o.csv"
        report_path = tmp_path / "report.json"
        code = main([
            "analyze", "--input", str(corpus), "--out", str(out),
            "--report-json", str(report_path),
        ])
        assert code == 1
        # The healthy document still produced a row.
        _, rows = read_csv(out)
        assert [r[0] for r in rows] == ["a"]
        err = capsys.readouterr().err
        assert "broken.conllu" in err
        report = json.loads(report_path.read_text(encoding="utf-8"))
        assert report["processed"] == 1
        assert report["failed"] == 1
        assert len(report["errors"]) == 1
        assert report["errors"][0]["path"].endswith("broken.conllu")
        assert report["errors"][0]["message"]

    def test_strict_aborts_on_first_bad_file(self, tmp_path, capsys):
        corpus = write_corpus(
            tmp_path / "c",
            {"aaa-broken.conllu": "garbage\n", "b.conllu": EN_DOC},
        )
        out = tmp_path / "o.csv"
        code = main([
            "analyze", "--input", str(corpus), "--out", str(out), "--strict",
        ])
        assert code == 1
        assert not out.exists()
        assert "aaa-broken.conllu" in capsys.readouterr().err

    def test_unwritable_output_path_fails_cleanly(self, tmp_path, capsys):
        corpus = write_corpus(tmp_path / "c", {"a.conllu": EN_DOC})
        out = tmp_path / "no" / "such" / "dir" / "o.csv"
        code = main(["analyze", "--input", str(corpus), "--out", str(out)])
        assert code == 1
        assert capsys.readouterr().err


class TestListMetrics:
    def test_text_listing(self, capsys):
        assert main(["list-metrics", "--lang", "en"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 118
        for line in lines:
            metric_id, category, description = line.split("\t")
            assert metric_id and category and description
        assert lines[0].split("\t")[0].startswith("POS_")
        assert any(line.startswith("SYN_DO_SUPPORT\t") for line in lines)

    def test_json_listing(self, capsys):
        assert main(["list-metrics", "--lang", "pl", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload) == 107
        for entry in payload:
            assert set(entry) == {"id", "category", "language", "name_en", "description"}
        ids = [entry["id"] for entry in payload]
        assert "SY_S_NEG" in ids

    def test_category_filter(self, capsys):
        code = main(["list-metrics", "--lang", "en", "--categories", "social_media"])
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 8
        assert all(line.split("\t")[1] == "social_media" for line in lines)

    def test_unknown_category_is_a_usage_error(self, capsys):
        assert main(["list-metrics", "--lang", "en", "--categories", "nope"]) == 2
        assert "nope" in capsys.readouterr().err


class TestGoldenCorpus:
    def test_end_to_end_four_languages(self, tmp_path):
        out = tmp_path / "v.csv"
        assert main(["analyze", "--input", str(GOLDEN_CORPUS), "--out", str(out)]) == 0
        expected = {
            "en": (1 + 118, ["alpha_en", "bravo_en"]),
            "pl": (1 + 107, ["charlie_pl", "delta_pl"]),
            "uk": (1 + 78, ["echo_uk"]),
            "ru": (1 + 76, ["fox_ru"]),
        }
        for lang, (width, doc_ids) in expected.items():
            header, rows = read_csv(tmp_path / f"v.{lang}.csv")
            assert len(header) == width
            assert [r[0] for r in rows] == doc_ids
            for row in rows:
                for cell in row[1:]:
                    assert 0.0 <= float(cell) <= 1.0
