# pylint: disable=invalid-name
"""
Corpus ingestion: tokenization, frequency vocabulary and the candidate content word list.
"""
import logging
import unicodedata
from collections import Counter
from dataclasses import dataclass

import regex

from .corpus_reader import CorpusReader, NO_DELIMITER
from .utilities import ConfigException, ReferenceParseException

# A token is a maximal run of letters, each with its combining marks.
_TOKEN_PATTERN = regex.compile(r"(?:\p{L}\p{M}*)+")

DEFAULT_MAX_FREQ_RATIO = 1e-4

_logger = logging.getLogger(__name__)


def tokenize_text(text):
    """
    Splits one article text into its alphabetic tokens. Everything that is not a letter (digits,
    punctuation, hyphens, apostrophes, whitespace) separates tokens. The text is brought into NFC
    first, so decomposed and precomposed spellings give the same token. No case normalization.
    :type text: str
    :rtype: tuple[str]
    """
    return tuple(_TOKEN_PATTERN.findall(unicodedata.normalize("NFC", text)))


def tokenize(text, article_delimiter=NO_DELIMITER):
    """
    Tokenizes a corpus text into articles of word tokens.
    :param text: Decoded corpus text.
    :param article_delimiter: Literal article boundary line or "none" for a single article.
    :return: One token tuple per non-empty article, in input order.
    :rtype: list[tuple[str]]
    """
    reader = CorpusReader(text, article_delimiter)
    articles = []
    for article_text in reader.articles():
        tokens = tokenize_text(article_text)
        if tokens:
            articles.append(tokens)
    return articles


@dataclass(frozen=True)
class Article:
    """
    Token identifiers of one article, positions implicit by index.
    """

    tokens: tuple

    def __len__(self):
        return len(self.tokens)


class Vocabulary:
    """
    Case-sensitive word list with token frequencies. Identifiers are assigned in lexicographic
    word order, so comparing two identifiers compares the words.
    """

    def __init__(self, counts):
        """
        :param counts: Token count per word.
        :type counts: collections.abc.Mapping[str, int]
        """
        self._words = tuple(sorted(counts))
        self._ids = {word: word_id for word_id, word in enumerate(self._words)}
        self._freqs = tuple(counts[word] for word in self._words)
        self._total = sum(self._freqs)

    @property
    def total_tokens(self):
        """
        Token count N of the corpus.
        """
        return self._total

    @property
    def words(self):
        """
        All words, ordered by identifier.
        """
        return self._words

    def word(self, word_id):
        return self._words[word_id]

    def id(self, word):
        """
        :raises KeyError: for unknown words.
        """
        return self._ids[word]

    def frequency(self, word_id):
        return self._freqs[word_id]

    def frequency_of(self, word):
        """
        Frequency of a word given as string, 0 for unknown words.
        """
        word_id = self._ids.get(word)
        return 0 if word_id is None else self._freqs[word_id]

    def __contains__(self, word):
        return word in self._ids

    def __len__(self):
        return len(self._words)

    def by_frequency(self):
        """
        (word, frequency) pairs sorted by descending frequency, then word.
        :rtype: list[tuple[str, int]]
        """
        return sorted(zip(self._words, self._freqs), key=lambda item: (-item[1], item[0]))


def build_vocabulary(articles):
    """
    Counts word tokens. Per article counts are merged, so the result does not depend on article
    order.
    :param articles: Tokenized articles as returned by tokenize.
    :type articles: collections.abc.Iterable[collections.abc.Sequence[str]]
    :rtype: Vocabulary
    """
    counts = Counter()
    for tokens in articles:
        counts.update(Counter(tokens))
    return Vocabulary(counts)


class ContentWordSet:
    """
    Candidate content words: vocabulary identifiers that passed the ingestion filters.
    """

    def __init__(self, vocabulary, ids, provenance):
        self._vocabulary = vocabulary
        self._ids = frozenset(ids)
        self._provenance = dict(provenance)

    @property
    def vocabulary(self):
        return self._vocabulary

    @property
    def ids(self):
        return self._ids

    @property
    def provenance(self):
        """
        Filter parameters that produced this set.
        :rtype: dict[str, object]
        """
        return dict(self._provenance)

    def words(self):
        """
        Member words in lexicographic order.
        :rtype: list[str]
        """
        return [self._vocabulary.word(word_id) for word_id in sorted(self._ids)]

    def __contains__(self, word_id):
        return word_id in self._ids

    def __iter__(self):
        return iter(sorted(self._ids))

    def __len__(self):
        return len(self._ids)


def extract_content_words(
    vocabulary, max_freq_ratio=DEFAULT_MAX_FREQ_RATIO, max_len=None, lexicon=None
):
    """
    Extracts the candidate content words from a vocabulary.
    :param vocabulary: Corpus vocabulary.
    :param max_freq_ratio: Words need frequency / N strictly below this ratio.
    :param max_len: Optional maximum word length in characters.
    :param lexicon: Optional set of admissible words.
    :type vocabulary: Vocabulary
    :type max_freq_ratio: float
    :type max_len: int | None
    :type lexicon: collections.abc.Set[str] | None
    :rtype: ContentWordSet
    """
    if not 0 < max_freq_ratio <= 1:
        raise ConfigException(f"max_freq_ratio must be in (0, 1], got {max_freq_ratio}")
    if max_len is not None and max_len < 1:
        raise ConfigException(f"max_word_len must be positive, got {max_len}")
    total = vocabulary.total_tokens
    ids = []
    for word_id, word in enumerate(vocabulary.words):
        if not vocabulary.frequency(word_id) / total < max_freq_ratio:
            continue
        if max_len is not None and len(word) > max_len:
            continue
        if lexicon is not None and word not in lexicon:
            continue
        ids.append(word_id)
    provenance = {
        "max_freq_ratio": max_freq_ratio,
        "max_word_len": max_len,
        "lexicon": lexicon is not None,
    }
    _logger.info("%d of %d words are content words", len(ids), len(vocabulary))
    return ContentWordSet(vocabulary, ids, provenance)


def load_lexicon(path, encoding="utf-8"):
    """
    Reads a lexicon file: one word per line (first tab separated column), '#' starts a comment
    line.
    :raises OSError: if the file is unreadable.
    :rtype: frozenset[str]
    """
    words = set()
    with open(path, encoding=encoding) as lexicon_file:
        for line in lexicon_file:
            line = line.rstrip("\r\n")
            if not line or line.startswith("#"):
                continue
            word = unicodedata.normalize("NFC", line.split("\t", 1)[0].strip())
            if word:
                words.add(word)
    return frozenset(words)


class CorpusIndex:
    """
    Tokenized articles and their vocabulary. Immutable once built.
    """

    def __init__(self, token_articles):
        """
        :param token_articles: Articles as sequences of word tokens.
        :type token_articles: collections.abc.Sequence[collections.abc.Sequence[str]]
        """
        self._vocabulary = build_vocabulary(token_articles)
        self._articles = tuple(
            Article(tuple(self._vocabulary.id(token) for token in tokens))
            for tokens in token_articles
        )

    @classmethod
    def from_text(cls, text, article_delimiter=NO_DELIMITER):
        return cls(tokenize(text, article_delimiter))

    @classmethod
    def from_files(cls, paths, article_delimiter=NO_DELIMITER, encoding="utf-8"):
        """
        Builds an index over one or more corpus files. A file boundary is always an article
        boundary.
        :type paths: collections.abc.Iterable[str | pathlib.Path]
        :rtype: CorpusIndex
        """
        token_articles = []
        for path in paths:
            reader = CorpusReader.open(path, article_delimiter, encoding)
            for article_text in reader.articles():
                tokens = tokenize_text(article_text)
                if tokens:
                    token_articles.append(tokens)
        _logger.info("Tokenized %d articles", len(token_articles))
        return cls(token_articles)

    @property
    def articles(self):
        return self._articles

    @property
    def vocabulary(self):
        return self._vocabulary

    @property
    def total_tokens(self):
        return self._vocabulary.total_tokens


def write_vocabulary(vocabulary, path):
    """
    Writes the TSV dump word<TAB>frequency, by descending frequency then word.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for word, frequency in vocabulary.by_frequency():
            out.write(f"{word}\t{frequency}\n")


def read_vocabulary(path):
    """
    Reads a vocabulary dump written by write_vocabulary.
    :raises ReferenceParseException: on malformed rows.
    :rtype: Vocabulary
    """
    counts = {}
    with open(path, encoding="utf-8") as vocab_file:
        for line_number, line in enumerate(vocab_file, start=1):
            line = line.rstrip("\r\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 2 or not fields[1].isdigit():
                raise ReferenceParseException(path, line_number, "expected word<TAB>frequency")
            counts[fields[0]] = int(fields[1])
    return Vocabulary(counts)
