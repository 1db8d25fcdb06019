import math
import random
from collections import Counter
from unittest import TestCase

import pytest

from morphPairs.CorpusIndex import CorpusIndex, Vocabulary
from morphPairs.SemanticSimilarity import (
    CooccurrenceTable,
    SemPair,
    count_band,
    count_cooccurrences,
    generate_sem_pairs,
    mutual_information,
    top_pairs,
    write_sem_pairs,
)
from morphPairs.utilities import ConfigException, UndefinedScoreException


def tracked_count(token_articles, word_a, word_b, min_dist=3, max_dist=500):
    index = CorpusIndex(token_articles)
    vocabulary = index.vocabulary
    pair = (vocabulary.id(word_a), vocabulary.id(word_b))
    table = count_cooccurrences(
        index.articles, index.total_tokens, [pair], min_dist=min_dist, max_dist=max_dist
    )
    return table.count(*pair)


def quadratic_counts(index, min_dist, max_dist, content_ids=None):
    """
    Every position pair of every article, checked one by one.
    """
    counts = Counter()
    for article in index.articles:
        tokens = article.tokens
        for i, id_a in enumerate(tokens):
            for j in range(i + 1, len(tokens)):
                id_b = tokens[j]
                if id_a == id_b or not min_dist < j - i <= max_dist:
                    continue
                if content_ids is not None and (id_a not in content_ids or id_b not in content_ids):
                    continue
                counts[(min(id_a, id_b), max(id_a, id_b))] += 1
    return counts


def synthetic_index(seed=1, tokens=5000, words=60, lengths=(50, 900)):
    rng = random.Random(seed)
    vocabulary = ["w%02d" % i for i in range(words)]
    articles = []
    remaining = tokens
    while remaining > 0:
        length = min(remaining, rng.randint(*lengths))
        articles.append([rng.choice(vocabulary) for _ in range(length)])
        remaining -= length
    return CorpusIndex(articles)


class TestBand(TestCase):
    def test_distance_three_excluded(self):
        self.assertEqual(0, tracked_count([["A", "x", "x", "B"]], "A", "B"))

    def test_distance_four_counted(self):
        self.assertEqual(1, tracked_count([["A", "x", "x", "x", "B"]], "A", "B"))

    def test_different_articles(self):
        self.assertEqual(0, tracked_count([["A"] + ["x"] * 10, ["x"] * 10 + ["B"]], "A", "B"))

    def test_upper_bound(self):
        self.assertEqual(0, tracked_count([["A"] + ["x"] * 500 + ["B"]], "A", "B"))
        self.assertEqual(1, tracked_count([["A"] + ["x"] * 499 + ["B"]], "A", "B"))

    def test_order_within_pair_irrelevant(self):
        self.assertEqual(1, tracked_count([["B", "x", "x", "x", "A"]], "A", "B"))

    def test_count_band(self):
        self.assertEqual(2, count_band([0, 10], [4, 6], 3, 5))

    def test_invalid_band(self):
        with self.assertRaises(ConfigException):
            count_cooccurrences([], 0, min_dist=5, max_dist=5)


def test_full_counts_match_quadratic_oracle():
    index = synthetic_index()
    table = count_cooccurrences(index.articles, index.total_tokens)
    expected = quadratic_counts(index, 3, 500)
    assert dict(table.items()) == dict(expected)
    assert table.total() == sum(expected.values())


def test_full_counts_restricted_to_content_ids():
    index = synthetic_index(seed=2)
    content_ids = set(range(0, 60, 3))
    table = count_cooccurrences(index.articles, index.total_tokens, content_ids=content_ids)
    assert dict(table.items()) == dict(quadratic_counts(index, 3, 500, content_ids))


def test_tracked_equals_full_restricted():
    index = synthetic_index(seed=3)
    full = count_cooccurrences(index.articles, index.total_tokens)
    rng = random.Random(3)
    tracked = {tuple(sorted(rng.sample(range(60), 2))) for _ in range(300)}
    table = count_cooccurrences(index.articles, index.total_tokens, tracked_pairs=tracked)
    for pair in tracked:
        assert table.count(*pair) == full.count(*pair)
    assert set(dict(table.items())) <= tracked


def test_article_order_invariance():
    index = synthetic_index(seed=4)
    forward = count_cooccurrences(index.articles, index.total_tokens)
    backward = count_cooccurrences(tuple(reversed(index.articles)), index.total_tokens)
    assert forward.items() == backward.items()


def test_threads_do_not_change_counts():
    index = synthetic_index(seed=5, tokens=20_000, lengths=(20, 80))
    single = count_cooccurrences(index.articles, index.total_tokens)
    parallel = count_cooccurrences(index.articles, index.total_tokens, threads=3)
    assert single.items() == parallel.items()


def test_mutual_information_matches_formula():
    index = synthetic_index(seed=6)
    vocabulary = index.vocabulary
    table = count_cooccurrences(index.articles, index.total_tokens)
    oracle = quadratic_counts(index, 3, 500)
    for (id_a, id_b), joint in list(oracle.items())[:200]:
        expected = math.log2(
            joint * index.total_tokens / (vocabulary.frequency(id_a) * vocabulary.frequency(id_b))
        )
        mi = mutual_information(table, vocabulary, id_a, id_b)
        assert mi == pytest.approx(expected, abs=1e-9)


class TestMutualInformation(TestCase):
    def setUp(self) -> None:
        self.vocabulary = Vocabulary({"a": 4, "b": 4, "c": 2})

    def test_independence_is_zero(self):
        table = CooccurrenceTable({(0, 1): 2}, 3, 500, total_tokens=8)
        self.assertEqual(0.0, mutual_information(table, self.vocabulary, 0, 1))

    def test_doubling_joint_adds_one(self):
        once = CooccurrenceTable({(0, 1): 3}, 3, 500, total_tokens=8)
        twice = CooccurrenceTable({(0, 1): 6}, 3, 500, total_tokens=8)
        self.assertAlmostEqual(
            mutual_information(once, self.vocabulary, 0, 1) + 1,
            mutual_information(twice, self.vocabulary, 0, 1),
            places=12,
        )

    def test_symmetric(self):
        table = CooccurrenceTable({(0, 2): 3}, 3, 500, total_tokens=8)
        self.assertEqual(
            mutual_information(table, self.vocabulary, 0, 2),
            mutual_information(table, self.vocabulary, 2, 0),
        )

    def test_zero_joint_undefined(self):
        table = CooccurrenceTable({}, 3, 500, total_tokens=8)
        with self.assertRaises(UndefinedScoreException):
            mutual_information(table, self.vocabulary, 0, 1)


def test_generate_sem_pairs_threshold():
    vocabulary = Vocabulary({"a": 10, "b": 10, "c": 10})
    table = CooccurrenceTable({(0, 1): 2, (0, 2): 3}, 3, 500, total_tokens=100)
    pairs = generate_sem_pairs(table, vocabulary, min_cooc=3)
    assert [(pair.word_a, pair.word_b, pair.cooc_count) for pair in pairs] == [("a", "c", 3)]


def test_generate_sem_pairs_empty():
    assert generate_sem_pairs(CooccurrenceTable({}, 3, 500, 0), Vocabulary({})) == []


def test_top_pairs():
    pairs = [SemPair("a", "b", 3.0, 4), SemPair("a", "c", 2.0, 4), SemPair("b", "c", 1.0, 3)]
    assert top_pairs(pairs, 2) == pairs[:2]


def test_write_sem_pairs(tmp_path):
    path = tmp_path / "sem_pairs.tsv"
    write_sem_pairs([SemPair("Papst", "Papstes", 2.5, 3)], path)
    assert path.read_text(encoding="utf-8") == "Papst\tPapstes\t3\t2.500000000\n"
