# pylint: disable=invalid-name
"""
Edge-bound correspondence rules read off the ranked pair list.

For each pair the longest shared case-insensitive left and right edges give a stem + suffix
parse and a prefix + stem parse. The parse with the longer stem wins, the suffix parse on a tie,
and pairs sharing neither edge are kept aside as residuals.
"""
import logging
from dataclasses import dataclass
from enum import Enum

from .PairRanker import ScoredPair
from .utilities import (
    ConfigException,
    ReferenceParseException,
    canonical_pair,
    field_to_pattern,
    pattern_to_field,
)

_logger = logging.getLogger(__name__)


class RuleKind(Enum):
    """
    Edge a correspondence rule is bound to.
    """

    PREFIX = "prefix"
    SUFFIX = "suffix"


class RuleRanking(Enum):
    """
    Rule ordering criteria.
    """

    FREQUENCY = "frequency"
    SCORE = "score"


@dataclass(frozen=True, slots=True)
class RuleInstance:
    """
    Parse of one pair: the rule lhs <-> rhs applied to word_a gives word_b.
    """

    kind: RuleKind
    lhs: str
    rhs: str
    word_a: str
    word_b: str

    @property
    def key(self):
        return self.kind, self.lhs, self.rhs


@dataclass(frozen=True)
class CorrespondenceRule:
    """
    Aggregated rule with its frequency, the summed combined score of its pairs and the highest
    ranked pair that produced it. lhs belongs to example.word_b when example_reversed is set.
    """

    kind: RuleKind
    lhs: str
    rhs: str
    frequency: int
    example: ScoredPair
    score: float = 0.0
    example_reversed: bool = False

    @property
    def example_words(self):
        """
        The example words, lhs side first.
        """
        if self.example_reversed:
            return self.example.word_b, self.example.word_a
        return self.example.word_a, self.example.word_b

    def notation(self):
        return f"{pattern_to_field(self.lhs)}↔{pattern_to_field(self.rhs)}"


class RuleReport:
    """
    Ranked rules plus the pairs that share no edge.
    """

    def __init__(self, rules, residuals):
        self._rules = tuple(rules)
        self._residuals = tuple(residuals)

    @property
    def rules(self):
        return self._rules

    @property
    def residuals(self):
        """
        (wordA, wordB) pairs without a shared edge.
        """
        return self._residuals

    def by_kind(self, kind):
        """
        The rules bound to one edge, in report order.
        :type kind: RuleKind | str
        :rtype: tuple[CorrespondenceRule]
        """
        kind = RuleKind(kind)
        return tuple(rule for rule in self._rules if rule.kind is kind)

    @property
    def total_pairs(self):
        return sum(rule.frequency for rule in self._rules) + len(self._residuals)

    def __len__(self):
        return len(self._rules)


def _same_letter(char_a, char_b):
    return char_a == char_b or char_a.lower() == char_b.lower()


def longest_common_edges(a, b, fold_case=True):
    """
    Lengths of the longest shared prefix and the longest shared suffix. Letters are compared
    after simple per character case folding, so "a" and "A" match while "a" and "ä" do not.
    :type a: str
    :type b: str
    :param fold_case: False compares characters exactly.
    :return: (leftLen, rightLen), each at most min(|a|, |b|)
    :rtype: tuple[int, int]
    """
    same = _same_letter if fold_case else str.__eq__
    shortest = min(len(a), len(b))
    left = 0
    while left < shortest and same(a[left], b[left]):
        left += 1
    right = 0
    while right < shortest and same(a[-1 - right], b[-1 - right]):
        right += 1
    return left, right


def _parse(a, b, left, right):
    if left >= right:
        return RuleKind.SUFFIX, a[left:], b[left:]
    return RuleKind.PREFIX, a[: len(a) - right], b[: len(b) - right]


def parse_pair(a, b, fold_case=False):
    """
    Parses a word pair into an edge-bound rule. The stem + suffix parse keeps leftLen characters,
    the prefix + stem parse keeps rightLen; the longer stem wins and the suffix parse wins ties.
    :param fold_case: Lowercase the extracted patterns.
    :return: The rule instance, or None for a residual pair (no shared edge, or for words that
             differ in case only, no shared edge of identical characters).
    :rtype: RuleInstance | None
    """
    left, right = longest_common_edges(a, b)
    if left == 0 and right == 0:
        return None
    kind, lhs, rhs = _parse(a, b, left, right)
    if not lhs and not rhs:
        # words differing in case only: parse on exact characters instead
        left, right = longest_common_edges(a, b, fold_case=False)
        if left == 0 and right == 0:
            return None
        kind, lhs, rhs = _parse(a, b, left, right)
    if fold_case and lhs.lower() != rhs.lower():
        lhs, rhs = lhs.lower(), rhs.lower()
    if rhs < lhs:
        return RuleInstance(kind, rhs, lhs, b, a)
    return RuleInstance(kind, lhs, rhs, a, b)


def apply_rule(kind, lhs, rhs, word):
    """
    Replaces lhs by rhs at the rule's edge of word. The edge is matched case-insensitively.
    :return: The rewritten word, None if word does not carry lhs at that edge.
    :rtype: str | None
    """
    size = len(lhs)
    if kind is RuleKind.SUFFIX:
        edge = word[len(word) - size :] if size else ""
        if edge.lower() != lhs.lower():
            return None
        return word[: len(word) - size] + rhs
    edge = word[:size]
    if edge.lower() != lhs.lower():
        return None
    return rhs + word[size:]


def extract_rules(ranked_pairs, limit=None, rank_by=RuleRanking.FREQUENCY, fold_case=False):
    """
    Aggregates the rules of the first limit pairs (all pairs without a limit) and ranks them.
    :param ranked_pairs: Pairs in rank order (PairRanker.ScoredPair or RankedPairList).
    :param limit: Only consider this many top pairs.
    :param rank_by: RuleRanking.FREQUENCY or RuleRanking.SCORE (summed combined score).
    :param fold_case: Lowercase rule patterns.
    :rtype: RuleReport
    """
    rank_by = RuleRanking(rank_by)
    if limit is not None and limit < 0:
        raise ConfigException(f"rule limit must not be negative, got {limit}")
    pairs = list(ranked_pairs)
    if limit is not None:
        pairs = pairs[:limit]
    frequency = {}
    score = {}
    example = {}
    residuals = []
    for pair in pairs:
        instance = parse_pair(pair.word_a, pair.word_b, fold_case=fold_case)
        if instance is None:
            residuals.append((pair.word_a, pair.word_b))
            continue
        key = instance.key
        if key not in frequency:
            frequency[key] = 0
            score[key] = 0.0
            example[key] = (pair, instance.word_a != pair.word_a)
        frequency[key] += 1
        score[key] += pair.combined_score
    rules = [
        CorrespondenceRule(*key, frequency[key], example[key][0], score[key], example[key][1])
        for key in frequency
    ]
    if rank_by is RuleRanking.FREQUENCY:
        rules.sort(key=lambda rule: (-rule.frequency, rule.kind.value, rule.lhs, rule.rhs))
    else:
        rules.sort(key=lambda rule: (-rule.score, rule.kind.value, rule.lhs, rule.rhs))
    _logger.info(
        "%d rules, %d residual pairs from %d pairs", len(rules), len(residuals), len(pairs)
    )
    return RuleReport(rules, residuals)


def write_rules(report, path):
    """
    Writes kind<TAB>lhs<TAB>rhs<TAB>frequency<TAB>exampleA<TAB>exampleB rows.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for rule in report.rules:
            word_a, word_b = rule.example_words
            out.write(
                f"{rule.kind.value}\t{pattern_to_field(rule.lhs)}\t{pattern_to_field(rule.rhs)}"
                f"\t{rule.frequency}\t{word_a}\t{word_b}\n"
            )


def write_residuals(report, path):
    """
    Writes wordA<TAB>wordB rows.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for word_a, word_b in report.residuals:
            out.write(f"{word_a}\t{word_b}\n")


def read_rules(path):
    """
    Reads a rule file written by write_rules. Scores are not part of the file and read as 0.
    :raises ReferenceParseException: on malformed rows.
    :rtype: list[CorrespondenceRule]
    """
    rules = []
    with open(path, encoding="utf-8") as rules_file:
        for line_number, line in enumerate(rules_file, start=1):
            line = line.rstrip("\r\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 6 or not fields[3].isdigit():
                raise ReferenceParseException(path, line_number, "expected six rule columns")
            try:
                kind = RuleKind(fields[0])
            except ValueError as exc:
                raise ReferenceParseException(
                    path, line_number, f"unknown rule kind {fields[0]!r}"
                ) from exc
            word_a, word_b = canonical_pair(fields[4], fields[5])
            rules.append(
                CorrespondenceRule(
                    kind,
                    field_to_pattern(fields[1]),
                    field_to_pattern(fields[2]),
                    int(fields[3]),
                    ScoredPair(word_a, word_b, 0.0, 0.0),
                    example_reversed=word_a != fields[4],
                )
            )
    return rules


def read_residuals(path):
    """
    Reads a residual file written by write_residuals.
    :raises ReferenceParseException: on malformed rows.
    :rtype: list[tuple[str, str]]
    """
    residuals = []
    with open(path, encoding="utf-8") as residual_file:
        for line_number, line in enumerate(residual_file, start=1):
            line = line.rstrip("\r\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise ReferenceParseException(path, line_number, "expected wordA<TAB>wordB")
            residuals.append((fields[0], fields[1]))
    return residuals
