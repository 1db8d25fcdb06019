"""
Command line interface: ``morphpairs {pairs,rules,eval,synth,stats}``.

Flags override the values of a ``--config`` file, which override the built-in defaults. The exit
status is the ErrorType of the failure, 0 on success.
"""
import argparse
import logging
import os
import sys
from dataclasses import replace

from . import __version__
from .ErrorType import ErrorType
from .Evaluation import ReferenceMode, format_precision_table
from .Pipeline import Pipeline
from .PipelineConfig import PipelineConfig
from .RuleExtractor import RuleRanking
from .SemanticSimilarity import top_pairs
from .SyntheticCorpus import (
    InflectionRule,
    SyntheticCorpusSpec,
    generate_synthetic_corpus,
    write_gold_pairs,
)
from .utilities import ConfigException, MorphPairsException

CORPUS_FILE = "corpus.txt"
GOLD_FILE = "gold.tsv"

_logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """
    Reports usage errors as ConfigException instead of exiting with status 2.
    """

    def error(self, message):
        raise ConfigException(f"{self.prog}: {message}")


def _weights(raw):
    if raw.strip().lower() == "auto":
        return "auto"
    values = raw.split(",")
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected auto or wOrtho,wSem, got {raw!r}")
    try:
        return tuple(float(value) for value in values)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"non-numeric weight in {raw!r}") from exc


def _cutoffs(raw):
    try:
        return [int(value) for value in raw.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {raw!r}") from exc


def _add_common_options(parser):
    parser.add_argument("--config", help="key=value configuration file")
    parser.add_argument("--save-config", help="write the effective configuration to this file")
    parser.add_argument("-o", "--output-dir", dest="output_dir", help="artifact directory")
    parser.add_argument("--log-file", help="append log records to this file")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")


def _add_corpus_options(parser):
    parser.add_argument("corpus_paths", nargs="*", metavar="CORPUS", help="corpus text files")
    parser.add_argument(
        "--delimiter", dest="article_delimiter", help="article boundary line or 'none'"
    )
    parser.add_argument("--encoding", help="corpus encoding (default utf-8)")
    parser.add_argument("--max-freq-ratio", dest="max_freq_ratio", type=float)
    parser.add_argument("--max-word-len", dest="max_word_len", type=int)
    parser.add_argument(
        "--lexicon", dest="lexicon_path", help="restrict content words to a word list"
    )
    parser.add_argument("--min-dist", dest="min_dist", type=int)
    parser.add_argument("--max-dist", dest="max_dist", type=int)
    parser.add_argument("--min-cooc", dest="min_cooc", type=int)
    parser.add_argument("--threads", type=int, help="worker processes")
    parser.add_argument("--progress", action="store_true", default=None, help="show progress bars")


def _add_rule_options(parser):
    parser.add_argument(
        "--rank-by", dest="rule_ranking", choices=[ranking.value for ranking in RuleRanking]
    )
    parser.add_argument("--limit", dest="rule_limit", type=int, help="only parse the top pairs")
    parser.add_argument(
        "--fold-case", dest="fold_rule_case", action="store_true", default=None,
        help="lowercase rule patterns",
    )


def _add_eval_options(parser, lexicon=True):
    parser.add_argument("--reference", dest="reference_path", help="gold pairs or stems file")
    parser.add_argument(
        "--reference-mode", dest="reference_mode", choices=[mode.value for mode in ReferenceMode]
    )
    parser.add_argument("--cutoffs", type=_cutoffs, help="comma separated precision cutoffs")
    if lexicon:
        parser.add_argument("--lexicon", dest="lexicon_path", help="evaluate only lexicon words")


def build_parser():
    """
    :rtype: argparse.ArgumentParser
    """
    parser = _ArgumentParser(
        prog="morphpairs", description="Rank morphologically related word pairs of a corpus."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(
        dest="command", metavar="COMMAND", parser_class=_ArgumentParser
    )
    commands.required = True

    pairs = commands.add_parser("pairs", help="corpus to ranked pairs, rules and precision")
    _add_common_options(pairs)
    _add_corpus_options(pairs)
    _add_rule_options(pairs)
    _add_eval_options(pairs, lexicon=False)
    pairs.add_argument("--ortho-floor", dest="ortho_floor", type=float)
    pairs.add_argument("--weights", type=_weights, help="auto or wOrtho,wSem")
    pairs.add_argument("--no-prune", dest="prune", action="store_false", default=None)
    pairs.add_argument(
        "--full-cooccurrence", dest="full_cooccurrence", action="store_true", default=None
    )
    pairs.add_argument(
        "--dump-lists", dest="dump_lists", action="store_true", default=None,
        help="also write the orthographic and semantic pair lists",
    )

    rules = commands.add_parser("rules", help="ranked pair file to rule report")
    _add_common_options(rules)
    rules.add_argument("ranked_path", metavar="RANKED", help="ranked pair TSV")
    _add_rule_options(rules)

    evaluate = commands.add_parser("eval", help="ranked pair file to precision report")
    _add_common_options(evaluate)
    evaluate.add_argument("ranked_path", metavar="RANKED", help="ranked pair TSV")
    _add_eval_options(evaluate)

    synth = commands.add_parser("synth", help="generate a synthetic corpus with gold pairs")
    _add_common_options(synth)
    synth.add_argument("--seed", type=int)
    synth.add_argument("--lemmas", type=int, default=SyntheticCorpusSpec.lemma_count)
    synth.add_argument("--tokens", type=int, default=SyntheticCorpusSpec.total_tokens)
    synth.add_argument("--article-length", type=int, default=SyntheticCorpusSpec.article_length)
    synth.add_argument("--strength", type=float, default=SyntheticCorpusSpec.cooccurrence_strength)
    synth.add_argument(
        "--distractors", type=float, default=SyntheticCorpusSpec.distractors_per_lemma
    )
    synth.add_argument(
        "--rules",
        type=lambda raw: [InflectionRule(value) for value in raw.split(",")],
        help="comma separated subset of " + ",".join(rule.value for rule in InflectionRule),
    )

    stats = commands.add_parser("stats", help="vocabulary and co-occurrence dumps")
    _add_common_options(stats)
    _add_corpus_options(stats)
    stats.add_argument("--top", type=int, default=100, help="print this many top MI pairs")
    return parser


_NOT_CONFIG = {"command", "config", "save_config", "log_file", "verbose", "ranked_path", "top"}


def build_config(args, environ=None):
    """
    Merges defaults, the --config file, flags and the environment into a validated config.
    :raises ConfigException: for invalid settings.
    :raises OSError: if the config file is unreadable.
    :rtype: PipelineConfig
    """
    config = PipelineConfig.load(args.config) if args.config else PipelineConfig()
    known = set(vars(config))
    overrides = {}
    for name, value in vars(args).items():
        if name in _NOT_CONFIG or name not in known:
            continue
        if name == "corpus_paths":
            if value:
                overrides[name] = list(value)
        elif name == "weights" and value == "auto":
            overrides[name] = None
        elif value is not None:
            overrides[name] = value
    config = replace(config, **overrides)
    if args.output_dir is None:
        config = config.with_environment(environ)
    return config.validate()


def _configure_logging(verbosity):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s - %(levelname)s - %(message)s"))
    package_logger = logging.getLogger(__package__)
    package_logger.addHandler(handler)
    package_logger.setLevel(
        logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    )
    return handler


def _run_synth(args, config):
    rules = tuple(args.rules) if args.rules else tuple(InflectionRule)
    spec = SyntheticCorpusSpec(
        lemma_count=args.lemmas,
        rules=rules,
        cooccurrence_strength=args.strength,
        article_length=args.article_length,
        total_tokens=args.tokens,
        distractors_per_lemma=args.distractors,
        min_dist=config.min_dist,
        seed=config.seed,
    )
    corpus = generate_synthetic_corpus(spec)
    os.makedirs(config.output_dir, exist_ok=True)
    corpus_path = os.path.join(config.output_dir, CORPUS_FILE)
    with open(corpus_path, "w", encoding="utf-8", newline="\n") as out:
        out.write(corpus.text)
    gold_path = os.path.join(config.output_dir, GOLD_FILE)
    write_gold_pairs(corpus.gold_pairs, gold_path)
    print(f"{corpus_path}\t{gold_path}\t{len(corpus.gold_pairs)} gold pairs")


def _dispatch(args, config):
    if args.command == "synth":
        _run_synth(args, config)
        return
    with Pipeline(config, log_file=args.log_file) as pipeline:
        if args.command == "pairs":
            result = pipeline.run()
            if result.precision is not None:
                print(format_precision_table(result.precision))
        elif args.command == "rules":
            pipeline.run_rules(args.ranked_path)
        elif args.command == "eval":
            result = pipeline.run_evaluation(args.ranked_path)
            print(format_precision_table(result.precision))
        else:
            result = pipeline.run_stats()
            for pair in top_pairs(result.sem_pairs, args.top):
                print(f"{pair.word_a}\t{pair.word_b}\t{pair.cooc_count}\t{pair.mi_score:.4f}")


def main(argv=None, environ=None):
    """
    Entry point of the morphpairs script.
    :param argv: Arguments without the program name, sys.argv[1:] when None.
    :param environ: Environment mapping, os.environ when None.
    :return: Exit status.
    :rtype: int
    """
    handler = None
    try:
        args = build_parser().parse_args(argv)
        handler = _configure_logging(args.verbose)
        config = build_config(args, environ)
        if args.save_config:
            config.dump(args.save_config)
        _dispatch(args, config)
    except MorphPairsException as exc:
        _logger.debug("Command failed", exc_info=True)
        print(f"morphpairs: error: {exc.message}", file=sys.stderr)
        return int(exc.type)
    except OSError as exc:
        print(f"morphpairs: error: {exc}", file=sys.stderr)
        return int(ErrorType.IO)
    finally:
        if handler is not None:
            logging.getLogger(__package__).removeHandler(handler)
    return int(ErrorType.OK)
