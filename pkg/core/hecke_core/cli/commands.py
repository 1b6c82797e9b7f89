# core/hecke_core/cli/commands.py
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from core.hecke_core.cli.context import EngineContext, build_context, context_from_json
from core.hecke_core.cli.schemas import OutputFormat, RunConfig
from core.hecke_core.coxeter.system import Word
from core.hecke_core.errors import HeckeError, IdentityViolation
from core.hecke_core.gram.pairing import gram_family
from core.hecke_core.lightleaves.schemas import EulerReport, EulerResult
from core.hecke_core.realisation.schemas import RealisationReport
from infrastructure.config.engine_config import DEFAULT_JOBS

# Initialize logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


class Command(str, Enum):
    QUOTIENT = "quotient"
    TABLEAUX = "tableaux"
    EULER = "euler"
    KL = "kl"
    GRAM = "gram"
    GRAM_FAMILY = "gram-family"
    CP_PAIRS = "cp-pairs"
    BGG = "bgg"
    VALIDATE_REALISATION = "validate-realisation"


@dataclass
class RunFlags:
    format: Optional[OutputFormat] = None
    jobs: int = DEFAULT_JOBS
    max_length: Optional[int] = None
    weight: Optional[str] = None
    shape: Optional[str] = None
    invert: bool = False
    check_exactness: bool = False
    reduced: bool = False
    n: Optional[int] = None
    p: Optional[int] = None


@dataclass
class RunResult:
    exit_code: int
    output: str


def _tsv(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    lines = ["\t".join(header)] + ["\t".join(str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def _json(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=False) + "\n"


def _table(header: Sequence[str], rows: List[Sequence[Any]], fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return _json([dict(zip(header, row)) for row in rows])
    return _tsv(header, rows)


def _error(exc: Exception, kind: Optional[str] = None) -> str:
    detail = exc.to_dict() if isinstance(exc, HeckeError) else {"kind": kind or "error", "message": str(exc)}
    return _json({"error": detail})


def _config_json(context: EngineContext) -> str:
    return context.config.json()


def _map_words(task: Callable[[str, Word, int], Any], context: EngineContext, words: List[Word],
               max_len: int, jobs: int) -> List[Any]:
    """Run ``task`` per weight word; output order always follows ``words``"""
    config_json = _config_json(context)
    if jobs <= 1 or len(words) < 2:
        return [task(config_json, w, max_len) for w in words]
    logger.info(f"Fanning out {len(words)} words over {jobs} workers")
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(task, [config_json] * len(words), words, [max_len] * len(words)))


def _weights(context: EngineContext, flags: RunFlags) -> List[Word]:
    """The requested weight, or every word of exp_P up to the maximal length"""
    if flags.weight is not None:
        return [context.word(flags.weight)]
    return context.datum.expressions_up_to(context.max_length(flags.max_length))


# Per-word tasks (module level so worker processes can unpickle them)

def _tableaux_task(config_json: str, weight: Word, max_len: int) -> List[List[Any]]:
    context = context_from_json(config_json)
    return [list(row) for row in context.tableaux.tableau_rows(weight)]


def _euler_task(config_json: str, weight: Word, max_len: int) -> Dict[str, Any]:
    context = context_from_json(config_json)
    total, passed = context.tableaux.euler_holds(weight, context.ring)
    return EulerResult(weight=context.system.format_word(weight), euler_sum=total.to_sparse_text(),
                       passed=passed).dict()


def _bgg_task(config_json: str, weight: Word, max_len: int) -> Dict[str, Any]:
    context = context_from_json(config_json)
    report = context.bgg.homology_check(weight, max_len, strict=False)
    return report.to_json(context.system.format_word)


# Commands

def _quotient(context: EngineContext, flags: RunFlags) -> RunResult:
    fmt = flags.format or OutputFormat.TSV
    elements = context.datum.enumerate_quotient(context.max_length(flags.max_length))
    rows = [[context.system.format_element(x), x.length] for x in elements]
    return RunResult(EXIT_OK, _table(["element", "length"], rows, fmt))


def _tableaux(context: EngineContext, flags: RunFlags) -> RunResult:
    """One weight, or every word of exp_P (canonical words of ^P W with --reduced) in preorder"""
    fmt = flags.format or OutputFormat.TSV
    max_len = context.max_length(flags.max_length)
    if flags.weight is None and flags.jobs <= 1:
        rows = [list(row) for row in context.tableaux.iter_rows(max_len, flags.reduced)]
    else:
        if flags.weight is not None:
            words = [context.word(flags.weight)]
        else:
            words = [w for w, _ in context.datum.walk_expressions(max_len, flags.reduced)]
        chunks = _map_words(_tableaux_task, context, words, max_len, flags.jobs)
        rows = [row for chunk in chunks for row in chunk]
    return RunResult(EXIT_OK, _table(["weight", "bits", "shape", "degree"], rows, fmt))


def _euler(context: EngineContext, flags: RunFlags) -> RunResult:
    words = _weights(context, flags)
    results = [EulerResult(**r) for r in
               _map_words(_euler_task, context, words, context.max_length(flags.max_length), flags.jobs)]
    report = EulerReport.from_results(results)
    if flags.format == OutputFormat.TSV:
        text = _tsv(["weight", "euler_sum", "passed"], [[r.weight, r.euler_sum, r.passed] for r in results])
    else:
        text = _json(report.dict())
    return RunResult(EXIT_VIOLATION if report.violations else EXIT_OK, text)


def _kl(context: EngineContext, flags: RunFlags) -> RunResult:
    fmt = flags.format or OutputFormat.TSV
    max_len = context.max_length(flags.max_length)
    fmt_elem = context.system.format_element
    if flags.invert:
        row = context.hecke.invert_first_row(max_len)
        context.hecke.verify_inverse(max_len)
        rows = [[fmt_elem(x), poly.to_sparse_text()] for x, poly in row.items()]
        return RunResult(EXIT_OK, _table(["x", "inverse_first_row"], rows, fmt))
    rows = []
    for y, column in context.hecke.kl_matrix(max_len).items():
        for x in column.support():
            rows.append([fmt_elem(x), fmt_elem(y), column.coefficient(x).to_sparse_text()])
    return RunResult(EXIT_OK, _table(["x", "y", "n_xy"], rows, fmt))


def _gram(context: EngineContext, flags: RunFlags) -> RunResult:
    if flags.weight is None or flags.shape is None:
        raise HeckeError("gram needs --weight and --shape", kind="invalid_config")
    report = context.gram.gram_matrix(context.word(flags.weight), context.element(flags.shape))
    return RunResult(EXIT_OK, _json(report.to_json(context.system)))


def _gram_family(context: EngineContext, flags: RunFlags) -> RunResult:
    if flags.n is None or flags.p is None:
        raise HeckeError("gram-family needs --n and --p", kind="invalid_config")
    family = gram_family(flags.n, flags.p)
    payload = family.to_json()
    ok = (abs(family.report.determinant) == family.expected_determinant
          and family.rank_mod_p == family.expected_determinant - 2)
    payload["pass"] = ok
    return RunResult(EXIT_OK if ok else EXIT_VIOLATION, _json(payload))


def _cp_pairs(context: EngineContext, flags: RunFlags) -> RunResult:
    fmt = flags.format or OutputFormat.TSV
    max_len = context.max_length(flags.max_length)
    signed = context.bgg.assign_signs(max_len)
    fmt_elem = context.system.format_element
    rows = [[fmt_elem(p.w), fmt_elem(p.y), p.deletion_position, sign] for p, sign in signed.edges]
    code = EXIT_OK if context.bgg.verify_signs(signed) else EXIT_VIOLATION
    return RunResult(code, _table(["w", "y", "deletion_position", "sign"], rows, fmt))


def _bgg(context: EngineContext, flags: RunFlags) -> RunResult:
    words = _weights(context, flags)
    reports = _map_words(_bgg_task, context, words, context.max_length(flags.max_length), flags.jobs)
    failed = [r for r in reports if not (r["square_zero"] and r["exact"])]
    code = EXIT_VIOLATION if flags.check_exactness and failed else EXIT_OK
    payload = reports[0] if flags.weight is not None else reports
    return RunResult(code, _json(payload))


def _validate_realisation(context: EngineContext, flags: RunFlags) -> RunResult:
    report = RealisationReport.build(context.system, context.cartan)
    return RunResult(EXIT_OK if report.valid else EXIT_VIOLATION, _json(report.dict()))


HANDLERS = {
    Command.QUOTIENT: _quotient,
    Command.TABLEAUX: _tableaux,
    Command.EULER: _euler,
    Command.KL: _kl,
    Command.GRAM: _gram,
    Command.GRAM_FAMILY: _gram_family,
    Command.CP_PAIRS: _cp_pairs,
    Command.BGG: _bgg,
    Command.VALIDATE_REALISATION: _validate_realisation,
}


def run(command: str, config: Optional[RunConfig], flags: RunFlags) -> RunResult:
    """
    Dispatch one command.

    Exit code 0 on success, 2 when a checked identity fails, 1 on usage or
    configuration errors (with an error JSON as the report).
    """
    try:
        cmd = Command(command)
    except ValueError:
        return RunResult(EXIT_USAGE, _error(ValueError(f"unknown command {command!r}"), "usage"))
    try:
        if config is None:
            if cmd != Command.GRAM_FAMILY:
                raise HeckeError(f"{cmd.value} needs --config", kind="invalid_config")
            context = None
        else:
            context = build_context(config)
        return HANDLERS[cmd](context, flags)
    except IdentityViolation as exc:
        logger.error(f"{cmd.value}: {exc}")
        return RunResult(EXIT_VIOLATION, _error(exc))
    except HeckeError as exc:
        logger.error(f"{cmd.value}: {exc}")
        return RunResult(EXIT_USAGE, _error(exc))
    except ValidationError as exc:
        logger.error(f"{cmd.value}: invalid configuration")
        return RunResult(EXIT_USAGE, _error(exc, "invalid_config"))
