from unittest import TestCase

from morphPairs.CorpusIndex import tokenize
from morphPairs.Evaluation import load_reference_set
from morphPairs.OrthoSimilarity import ortho_similarity
from morphPairs.SyntheticCorpus import (
    ARTICLE_MARKER,
    InflectionRule,
    SyntheticCorpusSpec,
    applies_to,
    generate_synthetic_corpus,
    inflect,
    write_gold_pairs,
)
from morphPairs.utilities import ConfigException

SMALL = SyntheticCorpusSpec(lemma_count=60, total_tokens=12_000, filler_count=100, seed=3)


class TestInflection(TestCase):
    def test_rules(self):
        self.assertEqual("parks", inflect(InflectionRule.SUFFIX_S, "park"))
        self.assertEqual("parken", inflect(InflectionRule.SUFFIX_EN, "park"))
        self.assertEqual("unpark", inflect(InflectionRule.PREFIX_UN, "park"))
        self.assertEqual("Hände", inflect(InflectionRule.UMLAUT_E, "Hand"))
        self.assertEqual("Mütte", inflect(InflectionRule.UMLAUT_E, "Mutt"))

    def test_umlaut_needs_back_vowel(self):
        self.assertFalse(applies_to(InflectionRule.UMLAUT_E, "bedit"))
        self.assertTrue(applies_to(InflectionRule.UMLAUT_E, "bedat"))


def test_deterministic():
    assert generate_synthetic_corpus(SMALL).text == generate_synthetic_corpus(SMALL).text


def test_seed_changes_corpus():
    other = SyntheticCorpusSpec(lemma_count=60, total_tokens=12_000, filler_count=100, seed=4)
    assert generate_synthetic_corpus(SMALL).text != generate_synthetic_corpus(other).text


def test_article_shape():
    corpus = generate_synthetic_corpus(SMALL)
    articles = tokenize(corpus.text, ARTICLE_MARKER)
    assert len(articles) == SMALL.total_tokens // SMALL.article_length
    assert all(len(article) >= SMALL.article_length for article in articles)


def test_suffix_s_only():
    spec = SyntheticCorpusSpec(
        lemma_count=50, rules=(InflectionRule.SUFFIX_S,), total_tokens=8000, filler_count=100
    )
    corpus = generate_synthetic_corpus(spec)
    assert corpus.gold_pairs
    assert all(word_b == word_a + "s" for word_a, word_b in corpus.gold_pairs)


def test_default_gold_pairs_pass_floor():
    corpus = generate_synthetic_corpus()
    assert len(corpus.lemmas) == 500
    assert all(ortho_similarity(a, b) >= 0.5 for a, b in corpus.gold_pairs)


def test_gold_pairs_canonical_and_self_free():
    corpus = generate_synthetic_corpus(SMALL)
    assert all(word_a < word_b for word_a, word_b in corpus.gold_pairs)
    distractors = set(corpus.distractors)
    assert not any(a in distractors or b in distractors for a, b in corpus.gold_pairs)


def test_contradictory_spec():
    spec = SyntheticCorpusSpec(article_length=3, total_tokens=100)
    try:
        generate_synthetic_corpus(spec)
    except ConfigException as exc:
        assert "article_length" in exc.message
    else:
        raise AssertionError("article shorter than the minimal window was accepted")


def test_gold_file(tmp_path):
    corpus = generate_synthetic_corpus(SMALL)
    path = tmp_path / "gold.tsv"
    write_gold_pairs(corpus.gold_pairs, path)
    reference = load_reference_set(path)
    assert len(reference) == len(corpus.gold_pairs)
    word_a, word_b = sorted(corpus.gold_pairs)[0]
    assert reference.related(word_b, word_a)
