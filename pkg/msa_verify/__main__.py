"""
Maximal Subalgebra Verifier - CLI Interface

Enumerate, present and classify maximal subalgebras of type-A path algebras,
and run the orbit/isoclass sweep and the structural audits.
"""

import json
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import click

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from msa import __version__
from msa.algebra import build_path_algebra
from msa.audits import audit_corpus
from msa.harness import WordVerifier, verify_theorem
from msa.maxsub import RepresentativeTag, enumerate_representatives, ext_quiver, representative_tags
from msa.orbits import orbits
from msa.presentation import Presentation, Relation, present_separable, present_split_hereditary
from msa.quiver import Quiver, word_to_quiver
from msa.shapes import audit_word_equations
from msa.words import BinaryWord
from utils.config import RunConfig, load_json_schema, load_run_config, report_schema_errors
from utils.logging_config import StructuredLogger, setup_logging


class WordType(click.ParamType):
    """Orientation word over {+, -}; anything else is a usage error."""

    name = "word"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> str:
        if isinstance(value, BinaryWord):
            return str(value)
        try:
            return str(BinaryWord.from_string(value))
        except ValueError:
            self.fail(f"{value!r} is not a word over '+' and '-'", param, ctx)


WORD = WordType()


def common_options(command: Callable) -> Callable:
    """Options shared by every subcommand."""
    command = click.option(
        "--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (default from config)"
    )(command)
    command = click.option(
        "--config", "-c", "config_path", type=click.Path(), default=None,
        help="Path to run config (default: config/verify.yaml)",
    )(command)
    command = click.option("--out", "-o", type=click.Path(), default=None, help="Output file")(command)
    command = click.option(
        "--format", "output_format", type=click.Choice(["text", "json"]), default=None,
        help="Output format (default from config)",
    )(command)
    return command


def _setup(
    command: str,
    config_path: Optional[str],
    log_level: Optional[str],
    output_format: Optional[str],
    out: Optional[str],
    defaults: Optional[Dict[str, Tuple[str, str]]] = None,
    **fields: Any,
) -> Tuple[RunConfig, StructuredLogger]:
    """
    Combine YAML defaults with options.

    Args:
        defaults: RunConfig field -> (config section, key) used when the option is unset

    Raises:
        click.UsageError: If the config cannot be loaded or a value is invalid (exit 2)
    """
    try:
        config = load_run_config(Path(config_path) if config_path else None)
    except (FileNotFoundError, ValueError) as e:
        raise click.UsageError(str(e))
    for field_name, (section, key) in (defaults or {}).items():
        if fields.get(field_name) is None:
            fields[field_name] = config[section][key]
    run = RunConfig(
        command=command,
        output_format=output_format or config["run"]["format"],
        out=Path(out) if out else None,
        **fields,
    )
    try:
        run.validate(config["run"]["max_n_limit"])
    except ValueError as e:
        raise click.BadParameter(str(e))
    logger = setup_logging(log_level or config.get("logging", {}).get("level", "WARNING"))
    return run, logger


def _emit(run: RunConfig, data: Any, text: str) -> None:
    output = json.dumps(data, indent=2) if run.output_format == "json" else text
    if run.out:
        with open(run.out, "w", encoding="utf-8") as f:
            f.write(output + "\n")
        click.echo(f"Result saved to: {run.out}", err=True)
    else:
        click.echo(output)


def _fail(logger: StructuredLogger, run: RunConfig, error: Exception) -> None:
    logger.log_error(run.word, type(error).__name__, str(error), stage=run.command)
    click.echo(f"Error: {error}", err=True)
    sys.exit(1)


def _checked_reports(reports: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
    """
    Raises:
        ValueError: If a report violates config/report_schema.json
    """
    schema = load_json_schema()
    for report in reports:
        problems = report_schema_errors(report, schema)
        if problems:
            raise ValueError(
                f"report for word {report.get('word')!r} violates the report schema: "
                + "; ".join(problems)
            )
    return reports


def format_relation(relation: Relation) -> str:
    """Relation as text, terms sorted by path, e.g. '-a-2·under_a1 + over_a-2·a1'."""
    parts = []
    for k, (path, coeff) in enumerate(sorted(relation.items())):
        sign = "-" if coeff < 0 else "+"
        size = abs(coeff)
        term = "·".join(path) if size == 1 else f"{size}*" + "·".join(path)
        if k == 0:
            parts.append(term if sign == "+" else f"-{term}")
        else:
            parts.append(f"{sign} {term}")
    return " ".join(parts)


def format_quiver(quiver: Quiver) -> str:
    arrows = ", ".join(f"{a.id}: {a.source}->{a.target}" for a in quiver.arrows)
    return f"vertices [{', '.join(str(v) for v in quiver.vertices)}]; arrows [{arrows}]"


def presentation_for(word: BinaryWord, tag: RepresentativeTag) -> Presentation:
    ambient = build_path_algebra(word_to_quiver(word))
    if tag.kind == "separable":
        return present_separable(ambient, tag.spec)
    return present_split_hereditary(ambient, tag.spec)


def _find_tag(word: BinaryWord, name: str) -> RepresentativeTag:
    tags = {str(tag): tag for tag in representative_tags(word_to_quiver(word))}
    if name not in tags:
        raise click.BadParameter(
            f"{name!r} is not a representative of {str(word)!r}; choose from {', '.join(tags)}",
            param_hint="--tag",
        )
    return tags[name]


@click.group()
@click.version_option(version=__version__)
def cli():
    """Maximal Subalgebra Verifier - orbits and isoclasses of maximal subalgebras."""
    pass


@cli.command("enumerate")
@click.option("--word", "-w", type=WORD, required=True, help="Orientation word, e.g. '+-+'")
@common_options
def enumerate_cmd(word, output_format, out, config_path, log_level):
    """
    List every representative with dimension, Ext quiver and presentation.

    Example:
        python -m msa_verify enumerate --word "+++"
    """
    run, logger = _setup("enumerate", config_path, log_level, output_format, out, word=word)
    try:
        parsed = BinaryWord.from_string(word)
        quiver = word_to_quiver(parsed)
        rows: List[Dict[str, Any]] = []
        lines = [f"word {word!r}: n = {parsed.n}"]
        for tag, algebra in enumerate_representatives(quiver):
            gamma = ext_quiver(algebra)
            presentation = presentation_for(parsed, tag)
            rows.append({
                "tag": str(tag),
                "dim": algebra.dim,
                "radical_dims": algebra.radical_power_dims(),
                "connected": gamma.is_connected(),
                "ext_quiver": gamma.to_dict(),
                "presentation": presentation.to_dict(),
            })
            flag = "" if gamma.is_connected() else "  [disconnected]"
            relations = "; ".join(format_relation(r) for r in presentation.relations) or "none"
            lines.append(f"{tag}  dim {algebra.dim}{flag}")
            lines.append(f"    quiver: {format_quiver(presentation.quiver)}")
            lines.append(f"    relations: {relations}")
        _emit(run, {"word": word, "n": parsed.n, "representatives": rows}, "\n".join(lines))
    except Exception as e:
        _fail(logger, run, e)


@cli.command()
@click.option("--word", "-w", type=WORD, required=True, help="Orientation word")
@click.option("--tag", "-t", required=True, help="Representative tag, e.g. 'sep(-2,1)' or 'split(-1)'")
@common_options
def present(word, tag, output_format, out, config_path, log_level):
    """
    Print the presentation of one representative.

    Example:
        python -m msa_verify present --word "+++" --tag "split(-1)"
    """
    run, logger = _setup("present", config_path, log_level, output_format, out, word=word)
    parsed = BinaryWord.from_string(word)
    chosen = _find_tag(parsed, tag)
    try:
        presentation = presentation_for(parsed, chosen)
        lines = [
            f"{chosen} on {word!r}",
            f"quiver: {format_quiver(presentation.quiver)}",
        ]
        lines += [f"relation: {format_relation(r)}" for r in presentation.relations]
        for arrow_id in sorted(presentation.arrow_dict):
            lines.append(f"  {arrow_id} = {presentation.arrow_dict[arrow_id]!r}")
        _emit(run, {"word": word, "tag": str(chosen), **presentation.to_dict()}, "\n".join(lines))
    except Exception as e:
        _fail(logger, run, e)


@cli.command("orbits")
@click.option("--word", "-w", type=WORD, required=True, help="Orientation word")
@common_options
def orbits_cmd(word, output_format, out, config_path, log_level):
    """
    Aut(Q)-orbits of the representatives.

    Example:
        python -m msa_verify orbits --word "+-"
    """
    run, logger = _setup("orbits", config_path, log_level, output_format, out, word=word)
    try:
        quiver = word_to_quiver(BinaryWord.from_string(word))
        partition = orbits(quiver, representative_tags(quiver))
        blocks = partition.as_strings()
        text = "\n".join("{" + ", ".join(block) + "}" for block in blocks)
        _emit(run, {"word": word, "orbits": blocks}, text)
    except Exception as e:
        _fail(logger, run, e)


@cli.command()
@click.option("--word", "-w", type=WORD, required=True, help="Orientation word")
@common_options
def isoclasses(word, output_format, out, config_path, log_level):
    """
    Isoclasses of the representatives, with the orbit comparison for one word.

    Example:
        python -m msa_verify isoclasses --word "-+-+-"
    """
    run, logger = _setup("isoclasses", config_path, log_level, output_format, out, word=word)
    try:
        report = WordVerifier(BinaryWord.from_string(word)).run()
        lines = ["connected:"]
        lines += ["  {" + ", ".join(block) + "}" for block in report.isoclasses]
        lines.append("disconnected:")
        lines += ["  {" + ", ".join(block) + "}" for block in report.disconnected_isoclasses]
        lines += [f"note: {note}" for note in report.notes]
        lines.append(f"verdict: {report.verdict}")
        _emit(run, _checked_reports([report.to_dict()])[0], "\n".join(lines))
    except Exception as e:
        _fail(logger, run, e)
    if not report.passed:
        sys.exit(1)


@cli.command()
@click.option("--max-n", type=int, default=None, help="Largest number of vertices (2..14)")
@click.option("--workers", type=int, default=None, help="Worker processes (1 = serial)")
@common_options
def verify(max_n, workers, output_format, out, config_path, log_level):
    """
    Compare orbits and isoclasses for every word with up to max-n vertices.

    Example:
        python -m msa_verify verify --max-n 6 --workers 1
    """
    run, logger = _setup(
        "verify", config_path, log_level, output_format, out,
        defaults={"max_n": ("run", "max_n"), "workers": ("run", "workers")},
        max_n=max_n, workers=workers,
    )
    try:
        started = time.perf_counter()
        reports = verify_theorem(run.max_n, workers=run.workers, logger=logger)
        failed = [report for report in reports if not report.passed]
        lines = [
            f"{report.word or '(empty)'}\tn={report.n}\treps={len(report.reps)}\t"
            f"orbits={len(report.orbits)}\t{report.verdict}"
            for report in reports
        ]
        lines.append(f"{len(reports)} reports, {len(failed)} failed")
        _emit(run, _checked_reports([report.to_dict() for report in reports]), "\n".join(lines))
        logger.log_performance("cmd_verify", (time.perf_counter() - started) * 1000)
    except Exception as e:
        _fail(logger, run, e)
    for report in failed:
        click.echo(f"FAIL {report.word!r}: {'; '.join(report.notes)}", err=True)
    if failed:
        sys.exit(1)


@cli.command()
@click.option("--max-len", type=int, default=None, help="Bound on len(w2) + len(w3)")
@common_options
def words(max_len, output_format, out, config_path, log_level):
    """
    Brute-force the word equation w3·w2* = w2·w3 and check its two properties.

    Example:
        python -m msa_verify words --max-len 14
    """
    run, logger = _setup(
        "words", config_path, log_level, output_format, out,
        defaults={"max_len": ("words", "max_len")}, max_len=max_len,
    )
    try:
        equations = audit_word_equations(run.max_len)
        lines = [f"{w2 or '(empty)'}  {w3 or '(empty)'}" for w2, w3 in equations.solutions]
        lines.append(
            f"{len(equations.solutions)} solutions; odd len(w3): {len(equations.odd_length)}; "
            f"asymmetric w3: {len(equations.asymmetric)}; ('+-', '+-') found: {equations.known_found}"
        )
        _emit(run, equations.to_dict(), "\n".join(lines))
    except Exception as e:
        _fail(logger, run, e)
    if not equations.passed:
        sys.exit(1)


@cli.command()
@click.option("--max-len", type=int, default=None, help="Audit words of length 0..max-len")
@click.option("--workers", type=int, default=None, help="Worker processes (1 = serial)")
@common_options
def audit(max_len, workers, output_format, out, config_path, log_level):
    """
    Structural audit of every representative on every word up to max-len.

    Example:
        python -m msa_verify audit --max-len 6 --workers 1
    """
    run, logger = _setup(
        "audit", config_path, log_level, output_format, out,
        defaults={"max_len": ("audit", "max_len"), "workers": ("run", "workers")},
        max_len=max_len, workers=workers,
    )
    try:
        result = audit_corpus(run.max_len, workers=run.workers)
        lines = [f"{name}: {count}" for name, count in result.violations.items()]
        lines += [f"  {example}" for example in result.examples]
        lines.append(
            f"{result.words} words, {result.representatives} representatives, "
            f"{'pass' if result.passed else 'fail'}"
        )
        _emit(run, result.to_dict(), "\n".join(lines))
    except Exception as e:
        _fail(logger, run, e)
    if not result.passed:
        sys.exit(1)


if __name__ == "__main__":
    cli()
