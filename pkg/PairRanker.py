# pylint: disable=invalid-name
"""
Combines the orthographic and semantic lists into the ranked pair list.
"""
import logging
from dataclasses import dataclass, replace

from .utilities import CalibrationException, ReferenceParseException, format_float

_logger = logging.getLogger(__name__)

SCORE_DIGITS = 9

_WEIGHTS_PREFIX = "# weights"
_COLUMNS = "# rank\twordA\twordB\torthoScore\tmiScore\tcombinedScore"


@dataclass(frozen=True, slots=True)
class ScoredPair:
    """
    Canonically ordered word pair with both similarity scores and their weighted sum.
    """

    word_a: str
    word_b: str
    ortho_score: float
    mi_score: float
    combined_score: float = 0.0

    @property
    def key(self):
        return self.word_a, self.word_b


class RankedPairList:
    """
    Pairs ordered by descending combined score, ties by word pair, plus the weights used.
    """

    def __init__(self, pairs, weights):
        """
        :type pairs: collections.abc.Iterable[ScoredPair]
        :type weights: tuple[float, float]
        """
        self._pairs = tuple(pairs)
        self._weights = tuple(weights)

    @property
    def pairs(self):
        return self._pairs

    @property
    def weights(self):
        """
        (wOrtho, wSem)
        """
        return self._weights

    def top(self, count):
        return self._pairs[:count]

    def __len__(self):
        return len(self._pairs)

    def __iter__(self):
        return iter(self._pairs)

    def __getitem__(self, index):
        return self._pairs[index]


def intersect_pairs(ortho_pairs, sem_pairs):
    """
    Keeps the pairs present in both lists, carrying both scores.
    :param ortho_pairs: OrthoSimilarity.OrthoPair entries.
    :param sem_pairs: SemanticSimilarity.SemPair entries.
    :return: ScoredPair entries in word pair order, combined score not yet set.
    :rtype: list[ScoredPair]
    """
    mi_by_pair = {(pair.word_a, pair.word_b): pair.mi_score for pair in sem_pairs}
    both = [
        ScoredPair(pair.word_a, pair.word_b, pair.score, mi_by_pair[(pair.word_a, pair.word_b)])
        for pair in ortho_pairs
        if (pair.word_a, pair.word_b) in mi_by_pair
    ]
    both.sort(key=lambda pair: pair.key)
    _logger.info("%d pairs occur in both lists", len(both))
    return both


def calibrate_weights(intersection):
    """
    Weights that make the maximum weighted orthographic score equal the maximum weighted semantic
    score: wOrtho = 1, wSem = max(orthoScore) / max(miScore).
    :raises CalibrationException: on an empty intersection or a non-positive maximum MI.
    :rtype: tuple[float, float]
    """
    if not intersection:
        raise CalibrationException("cannot calibrate weights on an empty pair list")
    max_ortho = max(pair.ortho_score for pair in intersection)
    max_mi = max(pair.mi_score for pair in intersection)
    if max_mi <= 0:
        raise CalibrationException(
            f"maximum mutual information is {max_mi}, supply manual weights to proceed"
        )
    return 1.0, max_ortho / max_mi


def rank_pairs(intersection, weights):
    """
    Computes combinedScore = wOrtho * orthoScore + wSem * miScore and sorts by it, descending,
    with ties in word pair order.
    :type intersection: collections.abc.Iterable[ScoredPair]
    :type weights: tuple[float, float]
    :rtype: RankedPairList
    """
    w_ortho, w_sem = weights
    scored = [
        replace(pair, combined_score=w_ortho * pair.ortho_score + w_sem * pair.mi_score)
        for pair in intersection
    ]
    # Scores that agree in their written digits are ties.
    scored.sort(
        key=lambda pair: (-round(pair.combined_score, SCORE_DIGITS), pair.word_a, pair.word_b)
    )
    return RankedPairList(scored, weights)


def write_ranked_pairs(ranked, path):
    """
    Writes the weights comment, the column comment and one
    rank<TAB>wordA<TAB>wordB<TAB>orthoScore<TAB>miScore<TAB>combinedScore row per pair.
    """
    w_ortho, w_sem = ranked.weights
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write(
            f"{_WEIGHTS_PREFIX}\twOrtho={format_float(w_ortho)}\twSem={format_float(w_sem)}\n"
        )
        out.write(_COLUMNS + "\n")
        for rank, pair in enumerate(ranked, start=1):
            out.write(
                f"{rank}\t{pair.word_a}\t{pair.word_b}\t{format_float(pair.ortho_score)}"
                f"\t{format_float(pair.mi_score)}\t{format_float(pair.combined_score)}\n"
            )


def _parse_weights(line, path, line_number):
    weights = {}
    for field in line.split("\t")[1:]:
        name, _, value = field.partition("=")
        try:
            weights[name] = float(value)
        except ValueError as exc:
            raise ReferenceParseException(path, line_number, f"bad weight '{field}'") from exc
    if set(weights) != {"wOrtho", "wSem"}:
        raise ReferenceParseException(path, line_number, "expected wOrtho and wSem")
    return weights["wOrtho"], weights["wSem"]


def read_ranked_pairs(path):
    """
    Reads a ranked pair file written by write_ranked_pairs, or a bare two column pair list. Rows
    keep their file order. A file without a weights comment gets weights (1, 1).
    :raises ReferenceParseException: on malformed rows.
    :rtype: RankedPairList
    """
    weights = (1.0, 1.0)
    pairs = []
    with open(path, encoding="utf-8") as ranked_file:
        for line_number, line in enumerate(ranked_file, start=1):
            line = line.rstrip("\r\n")
            if not line:
                continue
            if line.startswith(_WEIGHTS_PREFIX):
                weights = _parse_weights(line, path, line_number)
                continue
            if line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) == 2:
                # bare wordA<TAB>wordB lists, as written by hand
                pairs.append(ScoredPair(fields[0], fields[1], 0.0, 0.0, 0.0))
                continue
            if len(fields) != 6:
                raise ReferenceParseException(
                    path, line_number, "expected 2 or 6 tab separated columns"
                )
            try:
                ortho, mi_score, combined = (float(value) for value in fields[3:])
            except ValueError as exc:
                raise ReferenceParseException(path, line_number, "non-numeric score") from exc
            pairs.append(ScoredPair(fields[1], fields[2], ortho, mi_score, combined))
    return RankedPairList(pairs, weights)
