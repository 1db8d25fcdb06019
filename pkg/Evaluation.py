# pylint: disable=invalid-name
"""
Precision of the ranked pair list at cutoff points against a reference set.
"""
import logging
from enum import Enum
from itertools import accumulate

from .utilities import ConfigException, ReferenceParseException, canonical_pair, format_float

# Cutoffs of the published precision tables; the full list length is always appended.
DEFAULT_CUTOFFS = (500, 1000, 1500, 2000, 3000, 4000, 5000)

_logger = logging.getLogger(__name__)


class ReferenceMode(Enum):
    """
    Layout of a reference file.
    """

    PAIRS = "pairs"
    STEMS = "stems"


class ReferenceSet:
    """
    Gold relation over word pairs: either an explicit pair list or a stem lexicon, where two words
    are related iff they share a stem.
    """

    def __init__(self, pairs=None, stems=None):
        """
        Use from_pairs or from_stems.
        :type pairs: collections.abc.Iterable[tuple[str, str]] | None
        :type stems: collections.abc.Mapping[str, collections.abc.Iterable[str]] | None
        """
        if (pairs is None) == (stems is None):
            raise ValueError("exactly one of pairs and stems is required")
        self._pairs = None
        self._stems = None
        if pairs is not None:
            self._pairs = frozenset(canonical_pair(a, b) for a, b in pairs if a != b)
        else:
            self._stems = {word: frozenset(word_stems) for word, word_stems in stems.items()}

    @classmethod
    def from_pairs(cls, pairs):
        return cls(pairs=pairs)

    @classmethod
    def from_stems(cls, stems):
        return cls(stems=stems)

    @property
    def mode(self):
        return ReferenceMode.PAIRS if self._pairs is not None else ReferenceMode.STEMS

    def related(self, word_a, word_b):
        """
        Unordered membership test; a word is never related to itself.
        :rtype: bool
        """
        if word_a == word_b:
            return False
        if self._pairs is not None:
            return canonical_pair(word_a, word_b) in self._pairs
        stems_a = self._stems.get(word_a)
        stems_b = self._stems.get(word_b)
        return bool(stems_a and stems_b and stems_a & stems_b)

    def __len__(self):
        if self._pairs is not None:
            return len(self._pairs)
        return len(self._stems)


def load_reference_set(path, mode=ReferenceMode.PAIRS):
    """
    Reads a reference file. Pairs mode: wordA<TAB>wordB per row. Stems mode: word<TAB>stem
    [<TAB>stem ...] per row; rows for the same word accumulate. Blank lines and lines starting with
    '#' are skipped.
    :raises ReferenceParseException: on a malformed row, with its line number.
    :raises OSError: if the file is unreadable.
    :rtype: ReferenceSet
    """
    mode = ReferenceMode(mode)
    pairs = []
    stems = {}
    with open(path, encoding="utf-8") as reference_file:
        for line_number, line in enumerate(reference_file, start=1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if any(not field for field in fields):
                raise ReferenceParseException(path, line_number, "empty column")
            if mode is ReferenceMode.PAIRS:
                if len(fields) != 2:
                    raise ReferenceParseException(path, line_number, "expected wordA<TAB>wordB")
                pairs.append((fields[0], fields[1]))
            else:
                if len(fields) < 2:
                    raise ReferenceParseException(path, line_number, "expected word<TAB>stem")
                stems.setdefault(fields[0], set()).update(fields[1:])
    if mode is ReferenceMode.PAIRS:
        return ReferenceSet.from_pairs(pairs)
    return ReferenceSet.from_stems(stems)


class PrecisionReport:
    """
    Precision at ascending cutoffs over a ranked list of total_pairs pairs.
    """

    def __init__(self, rows, total_pairs):
        self._rows = tuple(rows)
        self._total_pairs = total_pairs

    @property
    def rows(self):
        """
        (cutoff, precision) tuples, cutoffs ascending.
        """
        return self._rows

    @property
    def total_pairs(self):
        return self._total_pairs

    def precision(self, cutoff):
        """
        :raises KeyError: if the cutoff is not part of the report.
        """
        for row_cutoff, value in self._rows:
            if row_cutoff == cutoff:
                return value
        raise KeyError(cutoff)

    def __len__(self):
        return len(self._rows)


def precision_at_cutoffs(ranked, reference, cutoffs=None, lexicon=None):
    """
    precision(k) = |top-k pairs in the reference set| / k. Cutoffs beyond the list length are
    clamped to it; duplicate cutoffs collapse.
    :param ranked: Pairs in rank order.
    :param reference: Gold relation.
    :param cutoffs: Positive cutoffs; defaults to DEFAULT_CUTOFFS plus the list length.
    :param lexicon: When given, pairs with a word outside it are dropped before ranking positions
                    are counted.
    :type reference: ReferenceSet
    :rtype: PrecisionReport
    """
    pairs = list(ranked)
    if lexicon is not None:
        pairs = [pair for pair in pairs if pair.word_a in lexicon and pair.word_b in lexicon]
    total = len(pairs)
    if cutoffs is None:
        cutoffs = DEFAULT_CUTOFFS + ((total,) if total else ())
    cutoffs = list(cutoffs)
    if any(cutoff <= 0 for cutoff in cutoffs):
        raise ConfigException(f"cutoffs must be positive, got {cutoffs}")
    if total == 0:
        return PrecisionReport([], 0)
    hits = list(accumulate(int(reference.related(pair.word_a, pair.word_b)) for pair in pairs))
    rows = []
    for cutoff in sorted({min(cutoff, total) for cutoff in cutoffs}):
        rows.append((cutoff, hits[cutoff - 1] / cutoff))
    _logger.info("Precision computed at %d cutoffs over %d pairs", len(rows), total)
    return PrecisionReport(rows, total)


def write_precision_report(report, path):
    """
    Writes cutoff<TAB>precision rows.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for cutoff, value in report.rows:
            out.write(f"{cutoff}\t{format_float(value)}\n")


def format_precision_table(report):
    """
    Human readable rendering of a precision report.
    :rtype: str
    """
    lines = [f"{'# of pairs':>10}  precision"]
    for cutoff, value in report.rows:
        lines.append(f"{cutoff:>10}  {value * 100:8.2f}%")
    lines.append(f"total pairs: {report.total_pairs}")
    return "\n".join(lines)
