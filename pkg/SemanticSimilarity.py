# pylint: disable=invalid-name
"""
Semantic similarity: banded-window co-occurrence counting and pointwise mutual information.
"""
import logging
import math
from bisect import bisect_left, bisect_right
from collections import Counter, defaultdict, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from tqdm import tqdm

from .utilities import ConfigException, UndefinedScoreException, format_float

DEFAULT_MIN_DIST = 3
DEFAULT_MAX_DIST = 500
DEFAULT_MIN_COOC = 3

# Articles per unit of work handed to a worker process.
_CHUNK_SIZE = 64

_logger = logging.getLogger(__name__)


class CooccurrenceTable:
    """
    Co-occurrence counts c(A, B) keyed by unordered identifier pairs (smaller identifier first),
    with the distance band they were counted in.
    """

    def __init__(self, counts, min_dist, max_dist, total_tokens):
        """
        :param counts: Count per canonical identifier pair.
        :param min_dist: Events at distance <= min_dist were not counted.
        :param max_dist: Events at distance > max_dist were not counted.
        :param total_tokens: Corpus token count N.
        :type counts: collections.abc.Mapping[tuple[int, int], int]
        """
        self._counts = {pair: count for pair, count in counts.items() if count > 0}
        self._min_dist = min_dist
        self._max_dist = max_dist
        self._total_tokens = total_tokens

    @property
    def min_dist(self):
        return self._min_dist

    @property
    def max_dist(self):
        return self._max_dist

    @property
    def total_tokens(self):
        return self._total_tokens

    def count(self, id_a, id_b):
        """
        c(A, B), symmetric in its arguments.
        """
        if id_b < id_a:
            id_a, id_b = id_b, id_a
        return self._counts.get((id_a, id_b), 0)

    def items(self):
        """
        (pair, count) entries in identifier order.
        """
        return sorted(self._counts.items())

    def total(self):
        """
        Number of counted events.
        """
        return sum(self._counts.values())

    def __len__(self):
        return len(self._counts)


@dataclass(frozen=True, slots=True)
class SemPair:
    """
    Canonically ordered word pair with its mutual information and co-occurrence count.
    """

    word_a: str
    word_b: str
    mi_score: float
    cooc_count: int


def count_band(positions_a, positions_b, min_dist, max_dist):
    """
    Number of position pairs (i, j), i from positions_a and j from positions_b, with
    min_dist < |i - j| <= max_dist.
    :param positions_a: Ascending positions.
    :param positions_b: Ascending positions.
    :rtype: int
    """
    total = 0
    for position in positions_a:
        total += bisect_right(positions_b, position + max_dist) - bisect_right(
            positions_b, position + min_dist
        )
        total += bisect_left(positions_b, position - min_dist) - bisect_left(
            positions_b, position - max_dist
        )
    return total


def _count_tracked(tokens, partners, min_dist, max_dist, counts):
    positions = defaultdict(list)
    for position, word_id in enumerate(tokens):
        if word_id in partners:
            positions[word_id].append(position)
    for id_a, positions_a in positions.items():
        for id_b in partners[id_a]:
            if id_b > id_a and id_b in positions:
                found = count_band(positions_a, positions[id_b], min_dist, max_dist)
                if found:
                    counts[(id_a, id_b)] += found


def _count_full(tokens, content_ids, min_dist, max_dist, counts):
    window = deque()
    for position, word_id in enumerate(tokens):
        if content_ids is not None and word_id not in content_ids:
            continue
        while window and position - window[0][0] > max_dist:
            window.popleft()
        for other_position, other_id in window:
            if position - other_position <= min_dist:
                # the window is ordered, every later entry is closer still
                break
            if other_id != word_id:
                key = (other_id, word_id) if other_id < word_id else (word_id, other_id)
                counts[key] += 1
        window.append((position, word_id))


# Worker state, set once per process by _init_worker.
_PARTNERS = None
_CONTENT_IDS = None
_BAND = (DEFAULT_MIN_DIST, DEFAULT_MAX_DIST)


def _init_worker(partners, content_ids, band):
    # pylint: disable=global-statement
    global _PARTNERS, _CONTENT_IDS, _BAND
    _PARTNERS = partners
    _CONTENT_IDS = content_ids
    _BAND = band


def _count_chunk(chunk):
    counts = Counter()
    min_dist, max_dist = _BAND
    for tokens in chunk:
        if _PARTNERS is not None:
            _count_tracked(tokens, _PARTNERS, min_dist, max_dist, counts)
        else:
            _count_full(tokens, _CONTENT_IDS, min_dist, max_dist, counts)
    return counts


def count_cooccurrences(
    articles,
    total_tokens,
    tracked_pairs=None,
    content_ids=None,
    min_dist=DEFAULT_MIN_DIST,
    max_dist=DEFAULT_MAX_DIST,
    threads=1,
    progress=False,
):
    """
    Counts, for every unordered pair of distinct words A and B, the position pairs (i, j) inside
    one article with min_dist < |i - j| <= max_dist. Distances are measured over all tokens.
    :param articles: Articles of token identifiers.
    :param total_tokens: N, copied into the table.
    :param tracked_pairs: Only tabulate these identifier pairs. Without it every pair of tokens
                          in content_ids is tabulated.
    :param content_ids: Restricts untracked counting to these identifiers (None = all).
    :param min_dist: Lower band bound, exclusive.
    :param max_dist: Upper band bound, inclusive.
    :param threads: Worker processes; the counts do not depend on it.
    :param progress: Show a progress bar.
    :type articles: collections.abc.Sequence[CorpusIndex.Article]
    :type tracked_pairs: collections.abc.Iterable[tuple[int, int]] | None
    :type content_ids: collections.abc.Set[int] | None
    :rtype: CooccurrenceTable
    """
    if not 0 <= min_dist < max_dist:
        raise ConfigException(f"need 0 <= min_dist < max_dist, got {min_dist}, {max_dist}")
    partners = None
    if tracked_pairs is not None:
        partners = defaultdict(set)
        for id_a, id_b in tracked_pairs:
            if id_a != id_b:
                partners[id_a].add(id_b)
                partners[id_b].add(id_a)
        partners = dict(partners)
    if content_ids is not None:
        content_ids = frozenset(content_ids)
    token_lists = [tuple(article.tokens) for article in articles]
    chunks = [token_lists[i : i + _CHUNK_SIZE] for i in range(0, len(token_lists), _CHUNK_SIZE)]
    counts = Counter()
    band = (min_dist, max_dist)
    if threads <= 1:
        _init_worker(partners, content_ids, band)
        for chunk in tqdm(chunks, desc="co-occurrences", disable=not progress):
            counts.update(_count_chunk(chunk))
    else:
        with ProcessPoolExecutor(
            max_workers=threads, initializer=_init_worker, initargs=(partners, content_ids, band)
        ) as executor:
            results = executor.map(_count_chunk, chunks)
            for chunk_counts in tqdm(
                results, total=len(chunks), desc="co-occurrences", disable=not progress
            ):
                counts.update(chunk_counts)
    _logger.info(
        "Counted %d co-occurring pairs in band (%d, %d] (%s mode)",
        len(counts),
        min_dist,
        max_dist,
        "tracked" if partners is not None else "full",
    )
    return CooccurrenceTable(counts, min_dist, max_dist, total_tokens)


def mutual_information(table, vocabulary, id_a, id_b):
    """
    I(A, B) = log2(c(A, B) * N / (c(A) * c(B))), from Pr(w) = c(w) / N and
    Pr(A, B) = c(A, B) / N.
    :raises UndefinedScoreException: if a marginal or the joint count is zero.
    :type table: CooccurrenceTable
    :type vocabulary: CorpusIndex.Vocabulary
    :rtype: float
    """
    joint = table.count(id_a, id_b)
    count_a = vocabulary.frequency(id_a)
    count_b = vocabulary.frequency(id_b)
    if joint <= 0 or count_a <= 0 or count_b <= 0:
        raise UndefinedScoreException(
            f"mutual information undefined for {vocabulary.word(id_a)}/{vocabulary.word(id_b)}"
            f" (c(A,B)={joint}, c(A)={count_a}, c(B)={count_b})"
        )
    return math.log2(joint * table.total_tokens / (count_a * count_b))


def generate_sem_pairs(table, vocabulary, min_cooc=DEFAULT_MIN_COOC):
    """
    Pairs that co-occurred at least min_cooc times, with their mutual information. Sorted by
    descending score, then word pair.
    :rtype: list[SemPair]
    """
    if min_cooc < 1:
        raise ConfigException(f"min_cooc must be at least 1, got {min_cooc}")
    pairs = []
    for (id_a, id_b), count in table.items():
        if count < min_cooc:
            continue
        score = mutual_information(table, vocabulary, id_a, id_b)
        pairs.append(SemPair(vocabulary.word(id_a), vocabulary.word(id_b), score, count))
    pairs.sort(key=lambda pair: (-pair.mi_score, pair.word_a, pair.word_b))
    return pairs


def top_pairs(sem_pairs, count=100):
    """
    Highest scoring pairs of an already sorted list.
    """
    return list(sem_pairs[:count])


def write_sem_pairs(pairs, path):
    """
    Writes wordA<TAB>wordB<TAB>coocCount<TAB>miScore rows.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for pair in pairs:
            out.write(
                f"{pair.word_a}\t{pair.word_b}\t{pair.cooc_count}\t{format_float(pair.mi_score)}\n"
            )
