# pylint: disable=invalid-name
"""
Orthographic similarity: length-normalized unit-cost minimum edit distance and the all-pairs
candidate list above a similarity floor.
"""
import logging
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import Levenshtein
from tqdm import tqdm

from .utilities import (
    UndefinedInputException,
    ConfigException,
    at_least,
    canonical_pair,
    format_float,
)

DEFAULT_FLOOR = 0.5

# Words per unit of work handed to a worker process.
_SHARD_SIZE = 256

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class OrthoPair:
    """
    Canonically ordered word pair with its orthographic similarity.
    """

    word_a: str
    word_b: str
    score: float


def edit_distance(a, b):
    """
    Minimum number of insertions, deletions and substitutions turning a into b, all at cost 1.
    Case-sensitive, measured in characters.
    :type a: str
    :type b: str
    :rtype: int
    """
    return Levenshtein.distance(a, b)


def bounded_edit_distance(a, b, max_distance):
    """
    Banded edit distance: exact when it is at most max_distance, otherwise max_distance + 1.
    :rtype: int
    """
    return Levenshtein.distance(a, b, score_cutoff=max_distance)


def ortho_similarity(a, b):
    """
    1 - MED(a, b) / max(|a|, |b|).
    :raises UndefinedInputException: if both strings are empty.
    :rtype: float
    """
    longest = max(len(a), len(b))
    if longest == 0:
        raise UndefinedInputException("orthographic similarity of two empty strings")
    return 1 - edit_distance(a, b) / longest


def max_partner_length(length, floor):
    """
    Longest partner length that can still reach the floor: MED >= length difference, so a word
    of this length pairs with words no longer than length / floor.
    """
    return int(length / floor + 1e-9)


def max_distance_for(longest, floor):
    """
    Largest edit distance that keeps a pair with this longer length at or above the floor.
    """
    return int((1 - floor) * longest + 1e-9)


# Worker state, set once per process by _init_worker.
_WORDS = ()
_LENGTHS = ()
_FLOOR = DEFAULT_FLOOR
_PRUNE = True


def _init_worker(words, floor, prune):
    # pylint: disable=global-statement
    global _WORDS, _LENGTHS, _FLOOR, _PRUNE
    _WORDS = words
    _LENGTHS = tuple(len(word) for word in words)
    _FLOOR = floor
    _PRUNE = prune


def _score_shard(start, stop):
    """
    Scores every pair (i, j), start <= i < stop, j > i, of the worker word list.
    :rtype: list[tuple[str, str, float]]
    """
    found = []
    for i in range(start, stop):
        word_a = _WORDS[i]
        if _PRUNE:
            end = bisect_right(_LENGTHS, max_partner_length(_LENGTHS[i], _FLOOR))
        else:
            end = len(_WORDS)
        for j in range(i + 1, end):
            word_b = _WORDS[j]
            longest = max(_LENGTHS[i], _LENGTHS[j])
            if _PRUNE:
                limit = max_distance_for(longest, _FLOOR)
                distance = bounded_edit_distance(word_a, word_b, limit)
                if distance > limit:
                    continue
            else:
                distance = edit_distance(word_a, word_b)
            score = 1 - distance / longest
            if at_least(score, _FLOOR):
                found.append((*canonical_pair(word_a, word_b), score))
    return found


def _score_shard_args(bounds):
    return _score_shard(*bounds)


def generate_ortho_pairs(words, floor=DEFAULT_FLOOR, prune=True, threads=1, progress=False):
    """
    Scores all unordered pairs of distinct words and keeps those with similarity >= floor.

    With pruning, words are sorted by length so that the length-difference bound turns partner
    selection into a range scan, and each surviving pair is scored with a banded edit distance
    that gives up once the floor is out of reach. Both are exact, so the result equals the
    unpruned all-pairs pass.
    :param words: Candidate words (e.g. ContentWordSet.words()).
    :param floor: Similarity floor in (0, 1].
    :param prune: Disable for the brute-force reference pass.
    :param threads: Worker processes; the result does not depend on it.
    :param progress: Show a progress bar.
    :type words: collections.abc.Iterable[str]
    :rtype: list[OrthoPair]
    """
    if not 0 < floor <= 1:
        raise ConfigException(f"ortho floor must be in (0, 1], got {floor}")
    unique = set(words)
    if prune:
        ordered = tuple(sorted(unique, key=lambda word: (len(word), word)))
    else:
        ordered = tuple(sorted(unique))
    shards = [
        (start, min(start + _SHARD_SIZE, len(ordered)))
        for start in range(0, len(ordered), _SHARD_SIZE)
    ]
    _logger.info(
        "Scoring %d words in %d shards (prune=%s, threads=%d)",
        len(ordered),
        len(shards),
        prune,
        threads,
    )
    found = []
    if threads <= 1:
        _init_worker(ordered, floor, prune)
        for bounds in tqdm(shards, desc="ortho pairs", disable=not progress):
            found.extend(_score_shard(*bounds))
    else:
        with ProcessPoolExecutor(
            max_workers=threads, initializer=_init_worker, initargs=(ordered, floor, prune)
        ) as executor:
            results = executor.map(_score_shard_args, shards)
            for shard_pairs in tqdm(
                results, total=len(shards), desc="ortho pairs", disable=not progress
            ):
                found.extend(shard_pairs)
    found.sort(key=lambda item: (-item[2], item[0], item[1]))
    _logger.info("%d pairs at or above floor %s", len(found), floor)
    return [OrthoPair(word_a, word_b, score) for word_a, word_b, score in found]


def write_ortho_pairs(pairs, path):
    """
    Writes wordA<TAB>wordB<TAB>orthoScore rows.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for pair in pairs:
            out.write(f"{pair.word_a}\t{pair.word_b}\t{format_float(pair.score)}\n")
