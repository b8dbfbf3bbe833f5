from __future__ import annotations

import csv
import io

import pytest

from namerelevance.corpus import (
    CorpusFormatError,
    CorpusStats,
    LabeledRecord,
    PackageRecord,
    corpus_stats,
    load_corpus,
    load_labels,
)


def corpus_csv(text: str) -> list[PackageRecord]:
    return load_corpus(io.StringIO(text))


class TestLoadCorpus:
    def test_single_row(self):
        records = corpus_csv("name,summary\npytracks,tracks GPS data\n")
        assert records == [PackageRecord("pytracks", "tracks GPS data")]

    def test_empty_summary_passes_through(self):
        records = corpus_csv("name,summary\nfoo,\n")
        assert records == [PackageRecord("foo", "")]

    def test_missing_name_column_is_fatal(self):
        with pytest.raises(CorpusFormatError, match="missing column 'name'"):
            corpus_csv("title,summary\nfoo,bar\n")

    def test_missing_summary_column_is_fatal(self):
        with pytest.raises(CorpusFormatError, match="missing column 'summary'"):
            corpus_csv("name,text\nfoo,bar\n")

    def test_blank_name_row_skipped_with_diagnostic(self, capsys):
        records = corpus_csv("name,summary\n,orphan\nfoo,kept\n")
        assert [record.name for record in records] == ["foo"]
        err = capsys.readouterr().err
        assert "row 2" in err and "skipped" in err

    def test_fields_preserved_verbatim(self):
        records = corpus_csv('name,summary\n" spaced ","Quoted, with comma"\n')
        assert records == [PackageRecord(" spaced ", "Quoted, with comma")]

    def test_extra_columns_ignored(self):
        records = corpus_csv("name,summary,version\nfoo,bar,1.0\n")
        assert records == [PackageRecord("foo", "bar")]

    def test_short_row_means_empty_summary(self):
        records = corpus_csv("name,summary\nfoo\n")
        assert records == [PackageRecord("foo", "")]

    def test_round_trip(self):
        original = [
            PackageRecord("pytracks", "Tracks the GPS data"),
            PackageRecord("foo", ""),
            PackageRecord("odd name", 'with "quotes", commas'),
        ]
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["name", "summary"])
        writer.writerows([(record.name, record.summary) for record in original])
        assert corpus_csv(buffer.getvalue()) == original

    def test_byte_stream(self):
        records = load_corpus(io.BytesIO(b"name,summary\nfoo,bar\n"))
        assert records == [PackageRecord("foo", "bar")]

    def test_crlf_line_endings(self, tmp_path):
        source = tmp_path / "crlf.csv"
        source.write_bytes(b'name,summary\r\nfoo,"line one\r\nline two"\r\n')
        records = load_corpus(source)
        assert records == [PackageRecord("foo", "line one\r\nline two")]

    def test_missing_file_raises_oserror(self, tmp_path):
        with pytest.raises(OSError):
            load_corpus(tmp_path / "no-such-file.csv")


class TestLoadLabels:
    def test_direct_parse(self):
        labels = load_labels(io.StringIO("name,primary,secondary\nfoo,3,2\n"))
        assert labels == [LabeledRecord("foo", 3, 2)]

    def test_label_out_of_range(self):
        with pytest.raises(CorpusFormatError, match="out of range"):
            load_labels(io.StringIO("name,primary,secondary\nfoo,4,2\n"))

    def test_label_not_an_integer(self):
        with pytest.raises(CorpusFormatError, match="not an integer"):
            load_labels(io.StringIO("name,primary,secondary\nfoo,perfect,2\n"))

    def test_duplicate_name(self):
        with pytest.raises(CorpusFormatError, match="duplicate name 'foo'"):
            load_labels(io.StringIO("name,primary,secondary\nfoo,1,1\nfoo,2,2\n"))

    def test_missing_column(self):
        with pytest.raises(CorpusFormatError, match="missing column 'secondary'"):
            load_labels(io.StringIO("name,primary\nfoo,1\n"))

    def test_order_preserved(self):
        labels = load_labels(io.StringIO("name,primary,secondary\nb,1,0\na,2,3\n"))
        assert [label.name for label in labels] == ["b", "a"]


def name_splitter(name: str) -> list[str]:
    return [part for part in name.lower().split("-") if part]


class TestCorpusStats:
    def test_empty_corpus(self):
        stats = corpus_stats([], name_splitter)
        assert stats == CorpusStats(0, 0, 0.0, ())

    def test_hand_counted_tokens(self):
        records = [
            PackageRecord("py-a", "x"),
            PackageRecord("py-b", "x"),
            PackageRecord("py", "x"),
            PackageRecord("json", "x"),
        ]
        stats = corpus_stats(records, name_splitter)
        assert stats.top_name_tokens == (("py", 3), ("a", 1), ("b", 1), ("json", 1))

    def test_tie_broken_lexicographically(self):
        records = [PackageRecord("b-a", "")]
        stats = corpus_stats(records, name_splitter)
        assert stats.top_name_tokens == (("a", 1), ("b", 1))

    def test_mean_summary_tokens(self):
        records = [
            PackageRecord("a", "one two three four"),
            PackageRecord("b", "one two three four five six"),
        ]
        stats = corpus_stats(records, name_splitter)
        assert stats.mean_summary_token_count == 5.0

    def test_empty_summary_counting(self):
        records = [PackageRecord("a", ""), PackageRecord("b", "?!?"), PackageRecord("c", "words here")]
        stats = corpus_stats(records, name_splitter)
        assert stats.empty_summary_count == 2
        assert stats.record_count == 3

    def test_frequencies_sum_to_token_count(self, small_model, default_resources):
        from namerelevance.normalizer import tokenize_name

        records = [
            PackageRecord("pytracks", ""),
            PackageRecord("parse-json", ""),
            PackageRecord("note_book", ""),
        ]
        tokenizer = lambda name: tokenize_name(small_model, name)
        stats = corpus_stats(records, tokenizer)
        produced = sum(len(tokenizer(record.name)) for record in records)
        assert sum(count for _, count in stats.top_name_tokens) == produced
