import random
from functools import lru_cache
from unittest import TestCase

import pytest

from morphPairs.OrthoSimilarity import (
    OrthoPair,
    bounded_edit_distance,
    edit_distance,
    generate_ortho_pairs,
    max_partner_length,
    ortho_similarity,
    write_ortho_pairs,
)
from morphPairs.utilities import ConfigException, UndefinedInputException


def recursive_distance(a, b):
    """
    Edit distance straight from its recursive definition.
    """

    @lru_cache(maxsize=None)
    def dist(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return min(
            dist(i - 1, j) + 1,
            dist(i, j - 1) + 1,
            dist(i - 1, j - 1) + (a[i - 1] != b[j - 1]),
        )

    return dist(len(a), len(b))


def random_word(rng, alphabet="abcd", max_len=12):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


class TestEditDistance(TestCase):
    def test_examples(self):
        self.assertEqual(1, edit_distance("man", "men"))
        self.assertEqual(0, edit_distance("dog", "dog"))
        self.assertEqual(3, edit_distance("kitten", "sitting"))

    def test_single_edit_pairs(self):
        for a, b in [("dog", "Dog"), ("man", "men"), ("bat", "mat"), ("day", "dry")]:
            self.assertEqual(1, edit_distance(a, b), (a, b))

    def test_case_sensitive(self):
        self.assertEqual(1, edit_distance("Park", "park"))

    def test_matches_recursive_definition(self):
        rng = random.Random(42)
        for _ in range(1000):
            a, b = random_word(rng), random_word(rng)
            self.assertEqual(recursive_distance(a, b), edit_distance(a, b), (a, b))

    def test_metric_properties(self):
        rng = random.Random(7)
        for _ in range(200):
            a, b, c = (random_word(rng) for _ in range(3))
            self.assertEqual(edit_distance(a, b), edit_distance(b, a))
            self.assertGreaterEqual(edit_distance(a, b), abs(len(a) - len(b)))
            self.assertLessEqual(edit_distance(a, c), edit_distance(a, b) + edit_distance(b, c))

    def test_bounded_distance(self):
        self.assertEqual(3, bounded_edit_distance("kitten", "sitting", 3))
        self.assertEqual(3, bounded_edit_distance("kitten", "sitting", 2))
        self.assertEqual(1, bounded_edit_distance("man", "men", 5))


def test_ortho_similarity_examples():
    assert ortho_similarity("woman", "women") == pytest.approx(0.8)
    assert ortho_similarity("nucleus", "nuclei") == pytest.approx(5 / 7)
    assert ortho_similarity("friends", "trends") == pytest.approx(5 / 7)
    assert ortho_similarity("park", "parks") == pytest.approx(0.8, abs=1e-9)
    assert ortho_similarity("bench", "benches") == pytest.approx(5 / 7, abs=1e-9)
    assert ortho_similarity("abc", "xyz") == 0
    assert ortho_similarity("dog", "dog") == 1


def test_ortho_similarity_one_empty_string():
    assert ortho_similarity("", "abc") == 0


def test_ortho_similarity_both_empty():
    with pytest.raises(UndefinedInputException):
        ortho_similarity("", "")


def test_max_partner_length():
    assert max_partner_length(4, 0.5) == 8
    assert max_partner_length(5, 0.8) == 6


def test_generate_park_parks_blue():
    pairs = generate_ortho_pairs(["park", "parks", "blue"], 0.5)
    assert pairs == [OrthoPair("park", "parks", pytest.approx(0.8))]


def test_generate_includes_exact_floor():
    pairs = generate_ortho_pairs(["ab", "ac"], 0.5)
    assert [(pair.word_a, pair.word_b) for pair in pairs] == [("ab", "ac")]
    assert pairs[0].score == 0.5


def test_generate_woman_women():
    pairs = generate_ortho_pairs(["women", "woman"], 0.5)
    assert [(pair.word_a, pair.word_b) for pair in pairs] == [("woman", "women")]


def test_generate_invalid_floor():
    with pytest.raises(ConfigException):
        generate_ortho_pairs(["a"], 0)
    with pytest.raises(ConfigException):
        generate_ortho_pairs(["a"], 1.5)


def test_generate_empty():
    assert generate_ortho_pairs([], 0.5) == []


def test_pruning_is_exact():
    """
    The pruned pass equals exhaustive scoring of every pair.
    """
    rng = random.Random(11)
    words = sorted({random_word(rng, "abcde", 10) for _ in range(600)} - {""})[:500]
    for floor in (0.5, 0.7, 0.34):
        pruned = generate_ortho_pairs(words, floor)
        expected = []
        for i, a in enumerate(words):
            for b in words[i + 1 :]:
                score = ortho_similarity(a, b)
                if score >= floor - 1e-12:
                    expected.append((min(a, b), max(a, b), score))
        assert sorted((p.word_a, p.word_b, p.score) for p in pruned) == sorted(expected)
        assert generate_ortho_pairs(words, floor, prune=False) == pruned


def test_pairs_sorted_and_canonical():
    rng = random.Random(5)
    words = {random_word(rng, "abc", 6) for _ in range(200)} - {""}
    pairs = generate_ortho_pairs(words, 0.5)
    keys = [(-pair.score, pair.word_a, pair.word_b) for pair in pairs]
    assert keys == sorted(keys)
    assert all(pair.word_a < pair.word_b for pair in pairs)


def test_threads_do_not_change_result():
    rng = random.Random(9)
    words = {random_word(rng, "abcd", 9) for _ in range(700)} - {""}
    assert generate_ortho_pairs(words, 0.5, threads=2) == generate_ortho_pairs(words, 0.5)


def test_write_ortho_pairs(tmp_path):
    path = tmp_path / "ortho_pairs.tsv"
    write_ortho_pairs([OrthoPair("woman", "women", 0.8)], path)
    assert path.read_text(encoding="utf-8") == "woman\twomen\t0.800000000\n"
