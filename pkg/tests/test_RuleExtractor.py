import random
from unittest import TestCase

import pytest

from morphPairs.PairRanker import ScoredPair
from morphPairs.RuleExtractor import (
    RuleKind,
    RuleRanking,
    apply_rule,
    extract_rules,
    longest_common_edges,
    parse_pair,
    read_residuals,
    read_rules,
    write_residuals,
    write_rules,
)
from morphPairs.utilities import ConfigException


def scored(*words, score=1.0):
    return [ScoredPair(a, b, 0.8, 1.0, score) for a, b in words]


class TestEdges(TestCase):
    def test_suffix_edge(self):
        self.assertEqual((9, 0), longest_common_edges("established", "establishing"))

    def test_prefix_edge(self):
        self.assertEqual((0, 4), longest_common_edges("Erstens", "Drittens"))

    def test_umlaut_is_not_a_case_variant(self):
        self.assertEqual((0, 0), longest_common_edges("Alter", "älteren"))

    def test_case_insensitive(self):
        self.assertEqual((4, 4), longest_common_edges("Park", "park"))
        self.assertEqual((0, 3), longest_common_edges("Park", "park", fold_case=False))


class TestParsePair(TestCase):
    def test_prefix_un(self):
        instance = parse_pair("structured", "unstructured")
        self.assertEqual((RuleKind.PREFIX, "", "un"), instance.key)

    def test_suffix_umlaut(self):
        instance = parse_pair("Anschlag", "Anschläge")
        self.assertEqual((RuleKind.SUFFIX, "ag", "äge"), instance.key)

    def test_suffix_s(self):
        self.assertEqual((RuleKind.SUFFIX, "", "s"), parse_pair("allotment", "allotments").key)

    def test_suffix_ed_ing(self):
        instance = parse_pair("established", "establishing")
        self.assertEqual((RuleKind.SUFFIX, "ed", "ing"), instance.key)

    def test_stem_change_parsed_as_prefix(self):
        self.assertEqual((RuleKind.PREFIX, "Mu", "Mü"), parse_pair("Mutter", "Mütter").key)

    def test_residual(self):
        self.assertIsNone(parse_pair("Alter", "älteren"))

    def test_orientation_follows_patterns(self):
        instance = parse_pair("Erstens", "Drittens")
        self.assertEqual((RuleKind.PREFIX, "Drit", "Ers"), instance.key)
        self.assertEqual(("Drittens", "Erstens"), (instance.word_a, instance.word_b))

    def test_fold_case(self):
        instance = parse_pair("Erstens", "Drittens", fold_case=True)
        self.assertEqual({"ers", "drit"}, {instance.lhs, instance.rhs})
        self.assertEqual(RuleKind.PREFIX, instance.kind)

    def test_case_only_difference(self):
        instance = parse_pair("Park", "park")
        self.assertEqual((RuleKind.PREFIX, "P", "p"), instance.key)

    def test_case_only_without_exact_edge(self):
        self.assertIsNone(parse_pair("PARK", "park"))

    def test_suffix_s_jelzin(self):
        self.assertEqual((RuleKind.SUFFIX, "", "s"), parse_pair("Jelzin", "Jelzins").key)

    def test_suffix_wins_tie(self):
        self.assertEqual(RuleKind.SUFFIX, parse_pair("s", "ss").kind)


def test_extract_rot_papst():
    report = extract_rules(scored(("rot", "rote"), ("Papst", "Papstes")))
    rules = {(rule.lhs, rule.rhs): rule.frequency for rule in report.rules}
    assert rules == {("", "e"): 1, ("", "es"): 1}
    assert all(rule.kind is RuleKind.SUFFIX for rule in report.rules)


def test_extract_empty():
    report = extract_rules([])
    assert len(report) == 0
    assert report.residuals == ()
    assert report.total_pairs == 0


def test_extract_plural_pairs():
    rng = random.Random(31)
    stems = set()
    while len(stems) < 100:
        stems.add("".join(rng.choice("bdklmnprtaeiou") for _ in range(rng.randint(4, 8))))
    report = extract_rules(scored(*[(stem, stem + "s") for stem in sorted(stems)]))
    assert len(report.rules) == 1
    rule = report.rules[0]
    assert (rule.kind, rule.lhs, rule.rhs, rule.frequency) == (RuleKind.SUFFIX, "", "s", 100)
    assert rule.notation() == "ε↔s"


def test_extract_conservation_and_residuals():
    pairs = scored(("rot", "rote"), ("Alter", "älteren"), ("Papst", "Papstes"), ("gut", "guter"))
    report = extract_rules(pairs)
    assert report.total_pairs == len(pairs)
    assert report.residuals == (("Alter", "älteren"),)


def test_extract_limit():
    report = extract_rules(scored(("rot", "rote"), ("Papst", "Papstes")), limit=1)
    assert report.total_pairs == 1
    with pytest.raises(ConfigException):
        extract_rules([], limit=-1)


def test_frequency_ranking_with_example_of_first_pair():
    pairs = scored(("Hund", "Hunde"), ("rot", "rote"), ("Papst", "Papstes"))
    report = extract_rules(pairs)
    assert [rule.rhs for rule in report.rules] == ["e", "es"]
    assert report.rules[0].frequency == 2
    assert report.rules[0].example == pairs[0]
    assert report.rules[0].example_words == ("Hund", "Hunde")


def test_score_ranking():
    pairs = [
        ScoredPair("Papst", "Papstes", 0.7, 5.0, 9.0),
        ScoredPair("Hund", "Hunde", 0.8, 1.0, 2.0),
        ScoredPair("rot", "rote", 0.75, 1.0, 2.0),
    ]
    by_frequency = extract_rules(pairs, rank_by=RuleRanking.FREQUENCY)
    by_score = extract_rules(pairs, rank_by="score")
    assert by_frequency.rules[0].rhs == "e"
    assert by_score.rules[0].rhs == "es"
    assert by_score.rules[0].score == pytest.approx(9.0)


def test_example_keeps_scores_and_orientation():
    pair = ScoredPair("Drittens", "Erstens", 0.5, 2.0, 1.5)
    rule = extract_rules([pair]).rules[0]
    assert rule.example is pair
    assert (rule.lhs, rule.rhs) == ("Drit", "Ers")
    assert rule.example_words == ("Drittens", "Erstens")
    flipped = extract_rules([ScoredPair("Parks", "park", 0.8, 1.0, 1.0)]).rules[0]
    assert (flipped.lhs, flipped.rhs) == ("", "s")
    assert flipped.example.key == ("Parks", "park")
    assert flipped.example_words == ("park", "Parks")


def test_rules_by_kind():
    pairs = scored(
        ("Jelzin", "Jelzins"),
        ("Erstens", "Drittens"),
        ("rot", "rote"),
        ("structured", "unstructured"),
        ("Papst", "Papstes"),
        ("Hund", "Hunde"),
    )
    report = extract_rules(pairs)
    suffixes = report.by_kind(RuleKind.SUFFIX)
    prefixes = report.by_kind("prefix")
    assert [rule.notation() for rule in suffixes] == ["ε↔e", "ε↔es", "ε↔s"]
    assert [rule.notation() for rule in prefixes] == ["ε↔un", "Drit↔Ers"]
    assert len(suffixes) + len(prefixes) == len(report)


def test_apply_rule():
    assert apply_rule(RuleKind.SUFFIX, "ag", "äge", "Anschlag") == "Anschläge"
    assert apply_rule(RuleKind.PREFIX, "", "un", "structured") == "unstructured"
    assert apply_rule(RuleKind.SUFFIX, "", "s", "park") == "parks"
    assert apply_rule(RuleKind.SUFFIX, "ed", "ing", "park") is None


def test_rules_reproduce_their_examples():
    pairs = scored(
        ("rot", "rote"),
        ("Erstens", "Drittens"),
        ("Mutter", "Mütter"),
        ("structured", "unstructured"),
        ("Anschlag", "Anschläge"),
        ("Park", "park"),
    )
    for fold_case in (False, True):
        for rule in extract_rules(pairs, fold_case=fold_case).rules:
            word_a, word_b = rule.example_words
            rewritten = apply_rule(rule.kind, rule.lhs, rule.rhs, word_a)
            assert rewritten is not None
            assert rewritten.lower() == word_b.lower()


def test_rule_files(tmp_path):
    report = extract_rules(scored(("rot", "rote"), ("Alter", "älteren")))
    rules_path = tmp_path / "rules.tsv"
    residuals_path = tmp_path / "residuals.tsv"
    write_rules(report, rules_path)
    write_residuals(report, residuals_path)
    assert rules_path.read_text(encoding="utf-8") == "suffix\tε\te\t1\trot\trote\n"
    assert residuals_path.read_text(encoding="utf-8") == "Alter\tälteren\n"
    rule = read_rules(rules_path)[0]
    assert (rule.kind, rule.lhs, rule.rhs, rule.frequency) == (RuleKind.SUFFIX, "", "e", 1)
    assert rule.example_words == ("rot", "rote")
    assert read_residuals(residuals_path) == [("Alter", "älteren")]
