# pylint: disable=invalid-name
"""
Pipeline orchestration: corpus in, ranked pairs, rules and precision out.
"""
import hashlib
import logging
import os
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from . import Events
from . import __version__
from .CorpusIndex import CorpusIndex, extract_content_words, load_lexicon, write_vocabulary
from .Evaluation import load_reference_set, precision_at_cutoffs, write_precision_report
from .Events import (
    ArtifactWrittenEvent,
    StageFailedEvent,
    StageFinishedEvent,
    StageStartedEvent,
)
from .OrthoSimilarity import generate_ortho_pairs, write_ortho_pairs
from .PairRanker import (
    calibrate_weights,
    intersect_pairs,
    rank_pairs,
    read_ranked_pairs,
    write_ranked_pairs,
)
from .RuleExtractor import RuleRanking, extract_rules, write_residuals, write_rules
from .SemanticSimilarity import count_cooccurrences, generate_sem_pairs, write_sem_pairs
from .utilities import ConfigException, StageException, format_float

VOCABULARY_FILE = "vocabulary.tsv"
ORTHO_PAIRS_FILE = "ortho_pairs.tsv"
SEM_PAIRS_FILE = "sem_pairs.tsv"
RANKED_PAIRS_FILE = "ranked_pairs.tsv"
RULES_FILE = "rules.tsv"
RESIDUALS_FILE = "residuals.tsv"
PRECISION_FILE = "precision.tsv"
MANIFEST_FILE = "manifest.txt"

NOMINAL_WEIGHTS = (1.0, 1.0)


@dataclass
class PipelineResult:
    """
    In-memory results of a run. Fields a run did not produce stay None.
    """

    corpus: object = None
    content_words: object = None
    ortho_pairs: list | None = None
    sem_pairs: list | None = None
    ranked: object = None
    rules: object = None
    precision: object = None
    artifacts: dict = field(default_factory=dict)


def file_checksum(path):
    """
    sha256 hex digest of a file's bytes.
    :raises OSError: if the file is unreadable.
    """
    digest = hashlib.sha256()
    with open(path, "rb") as corpus_file:
        for block in iter(lambda: corpus_file.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


class Pipeline:
    """
    Runs the stages of a PipelineConfig in order and writes their artifacts to the configured
    output directory. Every stage failure is raised as a StageException naming the stage.
    """

    def __init__(self, config, log_file=None):
        """
        Creates a new Pipeline.
        :param config: Validated on construction.
        :param log_file: Optional file that receives the log records of this run.
        :type config: PipelineConfig.PipelineConfig
        :type log_file: str | None
        """
        self._config = config.validate()
        self._logger = logging.getLogger(__name__)
        self._file_handler = None
        if log_file is not None:
            self._file_handler = logging.FileHandler(log_file, mode="a+")
            formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
            self._file_handler.setFormatter(formatter)
            logging.getLogger(__package__).addHandler(self._file_handler)

    @property
    def config(self):
        return self._config

    def close(self):
        """
        Detaches the log file handler, if any.
        """
        if self._file_handler is not None:
            logging.getLogger(__package__).removeHandler(self._file_handler)
            self._file_handler.close()
            self._file_handler = None

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()

    def register_for_stage_events(self, listener, weak_ref=True):
        """
        Register listener for stage started, finished and failed events of this pipeline.
        :param listener: Blinker signal handler: on_event(sender, **kw), kw will contain the event
        :param weak_ref: Use weak refs for blinker, causing listeners that go out of scope to be
                         removed (breaks nested functions)
        """
        Events.connect(Events.stage_events, listener, weak_ref=weak_ref, sender=self)

    def register_for_artifact_events(self, listener, weak_ref=True):
        """
        Register listener for artifact written events of this pipeline.
        """
        Events.connect(Events.artifact_events, listener, weak_ref=weak_ref, sender=self)

    @contextmanager
    def _stage(self, name):
        self._logger.info("Stage %s started", name)
        StageStartedEvent(name).send(self)
        started = time.perf_counter()
        summary = {}
        try:
            yield summary
        except StageException as exc:
            StageFailedEvent(name, exc.cause).send(self)
            raise
        except Exception as exc:  # pylint: disable=broad-exception-caught
            self._logger.error("Stage %s failed: %s", name, exc)
            StageFailedEvent(name, exc).send(self)
            raise StageException(name, exc) from exc
        elapsed = time.perf_counter() - started
        self._logger.info("Stage %s finished in %.2fs %s", name, elapsed, summary)
        StageFinishedEvent(name, elapsed, summary).send(self)

    def _output_path(self, name):
        os.makedirs(self._config.output_dir, exist_ok=True)
        return os.path.join(self._config.output_dir, name)

    def _write(self, result, name, writer, payload, rows=None):
        path = self._output_path(name)
        writer(payload, path)
        rows = len(payload) if rows is None else rows
        result.artifacts[name] = path
        self._logger.debug("Wrote %s (%d rows)", path, rows)
        ArtifactWrittenEvent(path, rows).send(self)
        return path

    def _lexicon(self):
        config = self._config
        if not config.lexicon_path:
            return None
        return load_lexicon(config.lexicon_path, config.encoding)

    def _ingest(self, result):
        config = self._config
        if not config.corpus_paths:
            raise ConfigException("no corpus file given")
        with self._stage("ingest") as summary:
            corpus = CorpusIndex.from_files(
                config.corpus_paths, config.article_delimiter, config.encoding
            )
            summary["articles"] = len(corpus.articles)
            summary["tokens"] = corpus.total_tokens
            self._write(result, VOCABULARY_FILE, write_vocabulary, corpus.vocabulary)
        result.corpus = corpus
        with self._stage("content_words") as summary:
            lexicon = self._lexicon()
            result.content_words = extract_content_words(
                corpus.vocabulary, config.max_freq_ratio, config.max_word_len, lexicon
            )
            summary["content_words"] = len(result.content_words)
        return corpus

    def run(self):
        """
        The pairs pipeline: ingest, ortho pairs, co-occurrence and MI, intersection, weighting,
        ranking, rule extraction, optional precision and the manifest.
        :raises StageException: naming the failing stage.
        :raises ConfigException: without corpus files.
        :rtype: PipelineResult
        """
        config = self._config
        result = PipelineResult()
        corpus = self._ingest(result)
        vocabulary = corpus.vocabulary

        with self._stage("ortho_pairs") as summary:
            result.ortho_pairs = generate_ortho_pairs(
                result.content_words.words(),
                config.ortho_floor,
                prune=config.prune,
                threads=config.threads,
                progress=config.progress,
            )
            summary["pairs"] = len(result.ortho_pairs)
            if config.dump_lists:
                self._write(result, ORTHO_PAIRS_FILE, write_ortho_pairs, result.ortho_pairs)

        with self._stage("sem_pairs") as summary:
            if config.full_cooccurrence:
                tracked, content_ids = None, result.content_words.ids
            else:
                tracked = [
                    (vocabulary.id(pair.word_a), vocabulary.id(pair.word_b))
                    for pair in result.ortho_pairs
                ]
                content_ids = None
            table = count_cooccurrences(
                corpus.articles,
                corpus.total_tokens,
                tracked_pairs=tracked,
                content_ids=content_ids,
                min_dist=config.min_dist,
                max_dist=config.max_dist,
                threads=config.threads,
                progress=config.progress,
            )
            result.sem_pairs = generate_sem_pairs(table, vocabulary, config.min_cooc)
            summary["pairs"] = len(result.sem_pairs)
            if config.dump_lists:
                self._write(result, SEM_PAIRS_FILE, write_sem_pairs, result.sem_pairs)

        with self._stage("rank") as summary:
            intersection = intersect_pairs(result.ortho_pairs, result.sem_pairs)
            if config.weights is not None:
                weights = tuple(float(weight) for weight in config.weights)
            elif intersection:
                weights = calibrate_weights(intersection)
            else:
                self._logger.warning("No pair is in both lists, using weights %s", NOMINAL_WEIGHTS)
                weights = NOMINAL_WEIGHTS
            result.ranked = rank_pairs(intersection, weights)
            summary["pairs"] = len(result.ranked)
            self._write(result, RANKED_PAIRS_FILE, write_ranked_pairs, result.ranked)

        self._rules(result, result.ranked)
        if config.reference_path:
            self._evaluate(result, result.ranked)
        self._write_manifest(result)
        return result

    def _rules(self, result, ranked):
        config = self._config
        with self._stage("rules") as summary:
            result.rules = extract_rules(
                ranked,
                limit=config.rule_limit,
                rank_by=RuleRanking(config.rule_ranking),
                fold_case=config.fold_rule_case,
            )
            summary["rules"] = len(result.rules)
            summary["residuals"] = len(result.rules.residuals)
            self._write(result, RULES_FILE, write_rules, result.rules)
            self._write(
                result, RESIDUALS_FILE, write_residuals, result.rules, len(result.rules.residuals)
            )

    def _evaluate(self, result, ranked):
        config = self._config
        with self._stage("evaluate") as summary:
            reference = load_reference_set(config.reference_path, config.reference_mode)
            lexicon = self._lexicon()
            result.precision = precision_at_cutoffs(ranked, reference, config.cutoffs, lexicon)
            summary["cutoffs"] = len(result.precision)
            self._write(result, PRECISION_FILE, write_precision_report, result.precision)

    def _write_manifest(self, result):
        config = self._config
        with self._stage("manifest"):
            lines = [f"version={__version__}"]
            lines.extend(config.manifest_lines())
            for path in config.corpus_paths:
                lines.append(f"corpus_sha256={file_checksum(path)}")
            w_ortho, w_sem = result.ranked.weights
            lines.append(f"weights_used={format_float(w_ortho)},{format_float(w_sem)}")
            lines.append(f"ranked_pairs={len(result.ranked)}")
            path = self._output_path(MANIFEST_FILE)
            with open(path, "w", encoding="utf-8", newline="\n") as out:
                out.write("\n".join(lines) + "\n")
            result.artifacts[MANIFEST_FILE] = path
            ArtifactWrittenEvent(path, len(lines)).send(self)

    def run_rules(self, ranked_path):
        """
        Rule extraction on a ranked pair file.
        :rtype: PipelineResult
        """
        result = PipelineResult()
        with self._stage("read_ranked"):
            ranked = read_ranked_pairs(ranked_path)
        result.ranked = ranked
        self._rules(result, ranked)
        return result

    def run_evaluation(self, ranked_path):
        """
        Precision of a ranked pair file against config.reference_path.
        :raises ConfigException: without a reference file.
        :rtype: PipelineResult
        """
        if not self._config.reference_path:
            raise ConfigException("evaluation needs a reference file")
        result = PipelineResult()
        with self._stage("read_ranked"):
            ranked = read_ranked_pairs(ranked_path)
        result.ranked = ranked
        self._evaluate(result, ranked)
        return result

    def run_stats(self):
        """
        Vocabulary dump and untracked co-occurrence statistics over the content words.
        :rtype: PipelineResult
        """
        config = self._config
        result = PipelineResult()
        corpus = self._ingest(result)
        with self._stage("sem_pairs") as summary:
            table = count_cooccurrences(
                corpus.articles,
                corpus.total_tokens,
                content_ids=result.content_words.ids,
                min_dist=config.min_dist,
                max_dist=config.max_dist,
                threads=config.threads,
                progress=config.progress,
            )
            result.sem_pairs = generate_sem_pairs(table, corpus.vocabulary, config.min_cooc)
            summary["pairs"] = len(result.sem_pairs)
            self._write(result, SEM_PAIRS_FILE, write_sem_pairs, result.sem_pairs)
        return result
