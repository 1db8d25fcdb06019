# pylint: disable=invalid-name,too-many-instance-attributes
"""
Pipeline configuration and its key=value file representation.
"""
import math
import os
from dataclasses import dataclass, field, fields, replace

from . import utilities
from .CorpusIndex import DEFAULT_MAX_FREQ_RATIO
from .Evaluation import ReferenceMode
from .OrthoSimilarity import DEFAULT_FLOOR
from .RuleExtractor import RuleRanking
from .SemanticSimilarity import DEFAULT_MAX_DIST, DEFAULT_MIN_COOC, DEFAULT_MIN_DIST
from .SyntheticCorpus import ARTICLE_MARKER
from .utilities import ConfigException

OUTPUT_DIR_ENV = "MORPHPAIRS_OUTPUT_DIR"

# Fields that change how a run executes but never what it produces.
RUNTIME_FIELDS = frozenset({"threads", "output_dir", "progress"})


@dataclass
class PipelineConfig:
    """
    Every parameter of a pipeline run. weights None means automatic calibration, cutoffs None
    means the default grid plus the full list length.
    """

    corpus_paths: list = field(default_factory=list)
    article_delimiter: str = ARTICLE_MARKER
    encoding: str = "utf-8"
    max_freq_ratio: float = DEFAULT_MAX_FREQ_RATIO
    max_word_len: int | None = None
    lexicon_path: str | None = None
    ortho_floor: float = DEFAULT_FLOOR
    min_dist: int = DEFAULT_MIN_DIST
    max_dist: int = DEFAULT_MAX_DIST
    min_cooc: int = DEFAULT_MIN_COOC
    weights: tuple | None = None
    cutoffs: list | None = None
    output_dir: str = "morphpairs-out"
    seed: int = 0
    prune: bool = True
    full_cooccurrence: bool = False
    threads: int = 1
    reference_path: str | None = None
    reference_mode: str = ReferenceMode.PAIRS.value
    rule_ranking: str = RuleRanking.FREQUENCY.value
    rule_limit: int | None = None
    fold_rule_case: bool = False
    dump_lists: bool = False
    progress: bool = False

    def validate(self):
        """
        :raises ConfigException: for values outside their documented ranges.
        :return: self
        """
        if not self.article_delimiter.strip():
            raise ConfigException("article_delimiter must not be blank")
        if not 0 < self.max_freq_ratio <= 1:
            raise ConfigException(f"max_freq_ratio must be in (0, 1], got {self.max_freq_ratio}")
        if self.max_word_len is not None and self.max_word_len < 1:
            raise ConfigException(f"max_word_len must be positive, got {self.max_word_len}")
        if not 0 < self.ortho_floor <= 1:
            raise ConfigException(f"ortho_floor must be in (0, 1], got {self.ortho_floor}")
        if not 0 <= self.min_dist < self.max_dist:
            raise ConfigException(
                f"need 0 <= min_dist < max_dist, got {self.min_dist}, {self.max_dist}"
            )
        if self.min_cooc < 1:
            raise ConfigException(f"min_cooc must be at least 1, got {self.min_cooc}")
        if self.weights is not None:
            if len(self.weights) != 2 or not all(math.isfinite(w) for w in self.weights):
                raise ConfigException(f"weights must be two finite numbers, got {self.weights}")
        if self.cutoffs is not None and (
            not self.cutoffs or any(cutoff < 1 for cutoff in self.cutoffs)
        ):
            raise ConfigException(f"cutoffs must be positive, got {self.cutoffs}")
        if self.threads < 1:
            raise ConfigException(f"threads must be at least 1, got {self.threads}")
        if self.rule_limit is not None and self.rule_limit < 0:
            raise ConfigException(f"rule_limit must not be negative, got {self.rule_limit}")
        try:
            ReferenceMode(self.reference_mode)
            RuleRanking(self.rule_ranking)
        except ValueError as exc:
            raise ConfigException(str(exc)) from exc
        return self

    def with_environment(self, environ=None):
        """
        Returns a copy with the output directory taken from MORPHPAIRS_OUTPUT_DIR, if set. No other
        field is read from the environment.
        """
        environ = os.environ if environ is None else environ
        value = environ.get(OUTPUT_DIR_ENV)
        if value:
            return replace(self, output_dir=value)
        return self

    def to_lines(self, skip=frozenset()):
        """
        key=value lines in field order.
        :rtype: list[str]
        """
        return [
            f"{item.name}={_format_value(item.name, getattr(self, item.name))}"
            for item in fields(self)
            if item.name not in skip
        ]

    def manifest_lines(self):
        """
        Configuration lines that determine the artifacts, without runtime-only fields.
        """
        return self.to_lines(skip=RUNTIME_FIELDS)

    def dump(self, path):
        with open(path, "w", encoding="utf-8", newline="\n") as out:
            out.write("\n".join(self.to_lines()) + "\n")

    @classmethod
    def from_lines(cls, lines, source="<config>"):
        """
        Parses key=value lines; blank lines and '#' comments are ignored, unset keys keep their
        defaults.
        :raises ConfigException: for unknown keys or unparsable values.
        :rtype: PipelineConfig
        """
        known = {item.name for item in fields(cls)}
        values = {}
        for line_number, line in enumerate(lines, start=1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            key, sep, raw = line.partition("=")
            key = key.strip()
            if not sep or key not in known:
                raise ConfigException(f"{source}:{line_number}: unknown setting '{line}'")
            try:
                values[key] = _parse_value(key, raw)
            except ValueError as exc:
                raise ConfigException(
                    f"{source}:{line_number}: bad value for {key}: {exc}"
                ) from exc
        return cls(**values)

    @classmethod
    def load(cls, path):
        """
        :raises OSError: if the file is unreadable.
        """
        with open(path, encoding="utf-8") as config_file:
            return cls.from_lines(config_file.readlines(), str(path))


_FLOATS = {"max_freq_ratio", "ortho_floor"}
_INTS = {"min_dist", "max_dist", "min_cooc", "seed", "threads"}
_OPTIONAL_INTS = {"max_word_len", "rule_limit"}
_OPTIONAL_STRINGS = {"lexicon_path", "reference_path"}
_BOOLS = {"prune", "full_cooccurrence", "fold_rule_case", "dump_lists", "progress"}


def _format_value(name, value):
    if name == "corpus_paths":
        return utilities.join_list(value)
    if name == "weights":
        return "auto" if value is None else utilities.join_list([repr(float(w)) for w in value])
    if name == "cutoffs":
        return "" if value is None else ",".join(str(cutoff) for cutoff in value)
    if name in _BOOLS:
        return "true" if value else "false"
    if name in _FLOATS:
        return repr(float(value))
    if value is None:
        return ""
    return utilities.escape(str(value))


def _parse_bool(raw):
    lowered = raw.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


def _parse_value(name, raw):
    if name == "corpus_paths":
        return utilities.split_list(raw)
    if name == "weights":
        if raw.strip() in ("", "auto"):
            return None
        return tuple(float(value) for value in utilities.split_list(raw))
    if name == "cutoffs":
        if not raw.strip():
            return None
        return [int(value) for value in raw.split(",")]
    if name in _BOOLS:
        return _parse_bool(raw)
    if name in _FLOATS:
        return float(raw)
    if name in _INTS:
        return int(raw)
    if name in _OPTIONAL_INTS:
        return int(raw) if raw.strip() else None
    if name in _OPTIONAL_STRINGS:
        return utilities.unescape(raw) if raw else None
    return utilities.unescape(raw)
