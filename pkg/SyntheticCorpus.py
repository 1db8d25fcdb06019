# pylint: disable=invalid-name
"""
Seeded generator of synthetic corpora with planted morphologically related pairs.

Every lemma gets a stem and one or two inflected forms. The forms of a lemma are mostly placed
in the lemma's home article, so they co-occur inside the counting band. Orthographic distractors
(one consonant changed) are scattered over other articles, and a pool of short, frequent filler
words pads every article.
"""
import logging
import random
from dataclasses import dataclass, field
from enum import Enum

from .OrthoSimilarity import DEFAULT_FLOOR, ortho_similarity
from .utilities import ConfigException, at_least, canonical_pair

ARTICLE_MARKER = "<article>"

_VOWELS = "aeiou"
_CONSONANTS = "bdfgklmnprstvz"
_UMLAUT = {"a": "ä", "o": "ö", "u": "ü"}

# Attempts to draw a usable stem before giving up on a specification.
_MAX_ATTEMPTS = 10000

_logger = logging.getLogger(__name__)


class InflectionRule(Enum):
    """
    Word formation processes the generator can plant.
    """

    SUFFIX_S = "s"
    SUFFIX_EN = "en"
    UMLAUT_E = "umlaut+e"
    PREFIX_UN = "un"


def _last_vowel(stem):
    for index in range(len(stem) - 1, -1, -1):
        if stem[index] in _VOWELS:
            return index
    return -1


def applies_to(rule, stem):
    """
    Umlaut needs a final stem vowel a, o or u; the other rules apply everywhere.
    """
    if rule is InflectionRule.UMLAUT_E:
        index = _last_vowel(stem)
        return index >= 0 and stem[index] in _UMLAUT
    return True


def inflect(rule, stem):
    """
    Applies an inflection rule to a stem.
    :type rule: InflectionRule
    :type stem: str
    :rtype: str
    """
    if rule is InflectionRule.SUFFIX_S:
        return stem + "s"
    if rule is InflectionRule.SUFFIX_EN:
        return stem + "en"
    if rule is InflectionRule.PREFIX_UN:
        return "un" + stem
    index = _last_vowel(stem)
    return stem[:index] + _UMLAUT[stem[index]] + stem[index + 1 :] + "e"


@dataclass(frozen=True)
class SyntheticCorpusSpec:
    """
    Shape of a synthetic corpus.
    """

    lemma_count: int = 500
    rules: tuple = tuple(InflectionRule)
    cooccurrence_strength: float = 0.9
    article_length: int = 400
    total_tokens: int = 200_000
    occurrences: tuple = (4, 8)
    distractors_per_lemma: float = 1.0
    filler_count: int = 300
    min_dist: int = 3
    seed: int = 0

    def validate(self):
        """
        :raises ConfigException: on contradictory or out of range settings.
        """
        if self.lemma_count < 1:
            raise ConfigException("lemma_count must be positive")
        if not self.rules:
            raise ConfigException("at least one inflection rule is required")
        if not 0 <= self.cooccurrence_strength <= 1:
            raise ConfigException("cooccurrence_strength must be in [0, 1]")
        if self.article_length <= self.min_dist + 1:
            raise ConfigException(
                f"article_length {self.article_length} leaves no room outside the minimal"
                f" window of {self.min_dist} tokens"
            )
        if self.total_tokens < self.article_length:
            raise ConfigException("total_tokens must be at least one article long")
        low, high = self.occurrences
        if not 1 <= low <= high:
            raise ConfigException("occurrences must be a range 1 <= low <= high")
        if self.distractors_per_lemma < 0:
            raise ConfigException("distractors_per_lemma must not be negative")
        if self.filler_count < 1:
            raise ConfigException("filler_count must be positive")


@dataclass
class SyntheticCorpus:
    """
    Generated corpus text with its gold pairs.
    """

    text: str
    gold_pairs: frozenset
    lemmas: list = field(default_factory=list)
    distractors: list = field(default_factory=list)


class _WordFactory:
    def __init__(self, rng):
        self._rng = rng
        self.used = set()

    def syllable(self):
        return self._rng.choice(_CONSONANTS) + self._rng.choice(_VOWELS)

    def filler(self):
        while True:
            word = self.syllable()
            if self._rng.random() < 0.5:
                word += self._rng.choice(_CONSONANTS)
            if word not in self.used:
                self.used.add(word)
                return word

    def stem(self):
        syllables = self._rng.randint(2, 3)
        word = "".join(self.syllable() for _ in range(syllables))
        if syllables == 2 or self._rng.random() < 0.5:
            word += self._rng.choice(_CONSONANTS)
        return word


def _lemma_forms(factory, rng, rules):
    for _ in range(_MAX_ATTEMPTS):
        stem = factory.stem()
        applicable = [rule for rule in rules if applies_to(rule, stem)]
        if not applicable or stem in factory.used:
            continue
        chosen = rng.sample(applicable, rng.randint(1, min(2, len(applicable))))
        forms = [stem]
        for rule in chosen:
            form = inflect(rule, stem)
            if form in factory.used or form in forms:
                continue
            if all(at_least(ortho_similarity(form, other), DEFAULT_FLOOR) for other in forms):
                forms.append(form)
        if len(forms) > 1:
            factory.used.update(forms)
            return forms
    raise ConfigException("could not draw a lemma with the configured rules")


def _distractor(factory, rng, stem):
    positions = [index for index, char in enumerate(stem) if char in _CONSONANTS]
    for _ in range(_MAX_ATTEMPTS):
        index = rng.choice(positions)
        word = stem[:index] + rng.choice(_CONSONANTS) + stem[index + 1 :]
        if word not in factory.used:
            factory.used.add(word)
            return word
    return None


def generate_synthetic_corpus(spec=None):
    """
    Generates a corpus and its gold pairs, deterministically for a given spec (seed included).
    Articles are separated by ARTICLE_MARKER lines.
    :type spec: SyntheticCorpusSpec | None
    :raises ConfigException: for a contradictory spec.
    :rtype: SyntheticCorpus
    """
    spec = spec or SyntheticCorpusSpec()
    spec.validate()
    rules = [InflectionRule(rule) for rule in spec.rules]
    rng = random.Random(spec.seed)
    factory = _WordFactory(rng)
    fillers = [factory.filler() for _ in range(spec.filler_count)]
    article_count = max(1, spec.total_tokens // spec.article_length)
    articles = [[] for _ in range(article_count)]

    lemmas = []
    gold = set()
    for index in range(spec.lemma_count):
        forms = _lemma_forms(factory, rng, rules)
        lemmas.append(forms)
        home = index % article_count
        for position, form in enumerate(forms):
            for other in forms[position + 1 :]:
                gold.add(canonical_pair(form, other))
            for _ in range(rng.randint(*spec.occurrences)):
                if rng.random() < spec.cooccurrence_strength:
                    articles[home].append(form)
                else:
                    articles[rng.randrange(article_count)].append(form)

    distractors = []
    distractor_count = round(spec.lemma_count * spec.distractors_per_lemma)
    for index in range(distractor_count):
        lemma_index = index % spec.lemma_count
        word = _distractor(factory, rng, lemmas[lemma_index][0])
        if word is None:
            continue
        distractors.append(word)
        home = lemma_index % article_count
        for _ in range(rng.randint(*spec.occurrences)):
            target = rng.randrange(article_count)
            while article_count > 1 and target == home:
                target = rng.randrange(article_count)
            articles[target].append(word)

    chunks = []
    for tokens in articles:
        tokens.extend(rng.choice(fillers) for _ in range(spec.article_length - len(tokens)))
        rng.shuffle(tokens)
        lines = []
        start = 0
        while start < len(tokens):
            size = rng.randint(8, 15)
            lines.append(" ".join(tokens[start : start + size]) + ".")
            start += size
        chunks.append("\n".join(lines))
    text = f"\n{ARTICLE_MARKER}\n".join(chunks) + "\n"
    _logger.info(
        "Generated %d articles, %d lemmas, %d gold pairs, %d distractors",
        article_count,
        len(lemmas),
        len(gold),
        len(distractors),
    )
    return SyntheticCorpus(text, frozenset(gold), lemmas, distractors)


def write_gold_pairs(gold_pairs, path):
    """
    Writes the gold pairs as a pairs-mode reference file.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for word_a, word_b in sorted(gold_pairs):
            out.write(f"{word_a}\t{word_b}\n")
