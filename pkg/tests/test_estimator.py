from __future__ import annotations

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from namerelevance.corpus import PackageRecord
from namerelevance.estimator import NameRelevanceScorer, as_records

RECORDS = [
    ("pytracks", "Tracks the GPS data"),
    ("foo", ""),
    ("note-book", "Tools for your notebook"),
]


class TestAsRecords:
    def test_pairs(self):
        assert as_records([("a", "b")]) == [PackageRecord("a", "b")]

    def test_package_records_pass_through(self):
        record = PackageRecord("a", "b")
        assert as_records([record]) == [record]

    def test_mappings(self):
        assert as_records([{"name": "a", "summary": "b"}]) == [PackageRecord("a", "b")]

    def test_none_summary_becomes_empty(self):
        assert as_records([("a", None)]) == [PackageRecord("a", "")]

    def test_two_column_array(self):
        array = np.array([["a", "x"], ["b", "y"]])
        assert as_records(array) == [PackageRecord("a", "x"), PackageRecord("b", "y")]

    def test_blank_name_rejected(self):
        with pytest.raises(ValueError, match="record 1"):
            as_records([("ok", "s"), ("  ", "s")])

    def test_bare_string_rejected(self):
        with pytest.raises(ValueError, match="bare string"):
            as_records(["jsonparser"])

    def test_wrong_shape_rejected(self):
        with pytest.raises(ValueError, match="record 0"):
            as_records([("a", "b", "c")])


class TestEstimatorContract:
    def test_get_params_round_trip(self):
        scorer = NameRelevanceScorer(mode="ngram", fuzzy_threshold=40)
        params = scorer.get_params()
        assert params["mode"] == "ngram"
        assert params["fuzzy_threshold"] == 40
        rebuilt = NameRelevanceScorer(**params)
        assert rebuilt.get_params() == params

    def test_set_params(self):
        scorer = NameRelevanceScorer().set_params(mode="baseline", strict_baseline=True)
        assert scorer.mode == "baseline"
        assert scorer.strict_baseline is True

    def test_clone(self):
        scorer = NameRelevanceScorer(mode="ngram", acronym_max=4)
        duplicate = clone(scorer)
        assert duplicate.get_params() == scorer.get_params()

    def test_fit_returns_self(self):
        scorer = NameRelevanceScorer()
        assert scorer.fit() is scorer
        assert scorer.config_.mode == "full"
        assert scorer.resources_.segmentation.vocab_size > 0

    def test_predict_before_fit_raises(self):
        with pytest.raises(NotFittedError):
            NameRelevanceScorer().predict(RECORDS)

    def test_invalid_params_rejected_at_fit(self):
        with pytest.raises(ValueError):
            NameRelevanceScorer(mode="turbo").fit()
        with pytest.raises(ValueError):
            NameRelevanceScorer(fuzzy_threshold=101).fit()


@pytest.fixture(scope="module")
def fitted():
    return NameRelevanceScorer().fit()


class TestPredict:

    def test_scores(self, fitted):
        scores = fitted.predict(RECORDS)
        assert scores.dtype == np.dtype(int)
        assert scores.tolist() == [100, 0, 100]

    def test_transform_is_a_column(self, fitted):
        column = fitted.transform(RECORDS)
        assert column.shape == (3, 1)
        assert column.ravel().tolist() == fitted.predict(RECORDS).tolist()

    def test_empty_input(self, fitted):
        assert fitted.predict([]).tolist() == []
        assert fitted.transform([]).shape == (0, 1)

    def test_score_records_carries_provenance(self, fitted):
        results = fitted.score_records(RECORDS)
        assert [result.score for result in results] == [100, 0, 100]
        assert results[0].credits[0].matched_via == "lemma"

    def test_mode_changes_take_effect_on_refit(self, fitted):
        baseline = NameRelevanceScorer(mode="baseline").fit()
        assert baseline.predict(RECORDS).tolist() == [100, 0, 0]

    def test_composes_in_sklearn_pipeline(self):
        from sklearn.pipeline import Pipeline

        pipeline = Pipeline([("relevance", NameRelevanceScorer(mode="ngram"))])
        column = pipeline.fit(RECORDS).transform(RECORDS)
        assert column.shape == (3, 1)
        assert column.ravel().tolist() == [100, 0, 100]


class TestCustomResources:
    def test_wordlist_as_sequence(self):
        scorer = NameRelevanceScorer(wordlist=["note", "book"]).fit()
        assert scorer.resources_.segmentation.vocab_size == 2
        assert scorer.predict([("notebook", "a note about a book")]).tolist() == [100]

    def test_stopwords_as_iterable(self):
        scorer = NameRelevanceScorer(stopwords=["tracks"], common_words=[]).fit()
        assert scorer.resources_.stopwords == frozenset({"tracks"})
        assert scorer.resources_.common_words == frozenset()

    def test_lemma_exceptions_as_mapping(self):
        scorer = NameRelevanceScorer(lemma_exceptions={"Loging": "LOG"}).fit()
        assert scorer.resources_.lemma_rules.exceptions == {"loging": "log"}

    def test_wordlist_from_path(self, fixtures_dir):
        scorer = NameRelevanceScorer(wordlist=fixtures_dir / "wordlist_small.txt").fit()
        assert scorer.resources_.segmentation.vocab_size == 30

    def test_common_words_affect_scoring(self):
        plain = NameRelevanceScorer(common_words=[]).fit()
        assert plain.predict([("python", "the python language")]).tolist() == [100]
        default = NameRelevanceScorer().fit()
        assert default.predict([("python", "the python language")]).tolist() == [0]
