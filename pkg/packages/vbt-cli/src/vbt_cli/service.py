"""
명령 실행 서비스

RunConfig 하나를 받아 해당 모듈 서비스를 호출하고 직렬화할 내용을 돌려줍니다.
도메인 예외는 종료 코드 1 과 구조화된 오류 객체로, 사용법 오류는 종료 코드 2 로 바뀝니다.
"""

import json
import logging
import random
import time
from typing import Any, Callable, Dict, List

from vbt_braidrep import GRAMMAR_HINT as BRAID_GRAMMAR
from vbt_braidrep import (
    BraidException,
    BraidRepService,
    BraidSyntaxError,
    BraidWord,
    StrandMismatch,
    format_braid,
    random_word,
    rep_matrix,
)
from vbt_diagrams import DiagramException
from vbt_recoupling import RecouplingException, RecouplingService, VirtualBraidedTree
from vbt_scalars import Scalar, ScalarException, ScalarParseError, constants, matmul, named_constant
from vbt_scalars.utils import ModuleIOLogger
from vbt_trees import GRAMMAR_HINT as TREE_GRAMMAR
from vbt_trees import (
    LabeledTree,
    Mode,
    ParticleLabel,
    TreeException,
    TreeService,
    TreeSyntaxError,
    count_labelings,
    format_tree,
    parse_tree_or_shape,
)

from .exceptions import CliDomainError, CliUsageError
from .models import Command, RunConfig, RunResult
from .utils import scalar_payload, vector_payload

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (ScalarException, DiagramException, TreeException, RecouplingException, BraidException)

LEMMAS = ("lemma1", "lemma2", "lemma3")


def _require(value: Any, flag: str, grammar: str = "") -> Any:
    if value is None:
        raise CliUsageError(flag, "missing required value", grammar or None)
    return value


def _braid(config: RunConfig) -> BraidWord:
    text = _require(config.braid, "--braid", BRAID_GRAMMAR)
    try:
        return BraidRepService().parse_braid(text)
    except BraidSyntaxError as exc:
        raise CliUsageError("--braid", exc.message, BRAID_GRAMMAR) from exc


def _trees(config: RunConfig) -> List[LabeledTree]:
    """라벨 트리는 그대로, 모양은 고전 라벨링 전체로"""
    text = _require(config.tree, "--tree", TREE_GRAMMAR)
    try:
        parsed = parse_tree_or_shape(text)
    except TreeSyntaxError as exc:
        raise CliUsageError("--tree", exc.message, TREE_GRAMMAR) from exc
    if isinstance(parsed, LabeledTree):
        return [parsed]
    return TreeService().enumerate_labelings(parsed, Mode.CLASSICAL)


def _scalar_from_text(text: str) -> Scalar:
    """상수 이름 또는 Scalar 직렬화 (`{"p": ..., "q": ...}` 나 출력의 `{"exact": ...}`)"""
    if not text.lstrip().startswith("{"):
        return named_constant(text)
    data = json.loads(text)
    return Scalar.from_dict(data.get("exact", data) if isinstance(data, dict) else data)


class CliService:
    """명령행 서비스"""

    def __init__(self) -> None:
        self.io_logger = ModuleIOLogger("CliService")
        self._handlers: Dict[Command, Callable[[RunConfig], Dict[str, Any]]] = {
            Command.LEFTASSOC: self.leftassoc,
            Command.BRACKET: self.bracket,
            Command.CHECK_RELATIONS: self.check_relations,
            Command.CERTIFY_RULES: self.certify_rules,
            Command.DIM: self.dim,
            Command.EVAL: self.evaluate,
        }

    def run(self, config: RunConfig) -> RunResult:
        self.io_logger.log_input("run", command=config.command.value)
        start = time.time()
        try:
            payload = self._handlers[config.command](config)
        except CliUsageError as exc:
            self.io_logger.log_error("run", exc, time.time() - start)
            return RunResult(status=2, payload=exc.to_dict())
        except DOMAIN_ERRORS as exc:
            self.io_logger.log_error("run", exc, time.time() - start)
            return RunResult(status=1, payload=exc.to_dict())
        except (ValueError, ZeroDivisionError) as exc:
            error = CliDomainError(config.command.value, exc)
            self.io_logger.log_error("run", error, time.time() - start)
            return RunResult(status=1, payload=error.to_dict())
        self.io_logger.log_output("run", execution_time=time.time() - start)
        return RunResult(status=0, payload={"command": config.command.value, **payload})

    def leftassoc(self, config: RunConfig) -> Dict[str, Any]:
        word = _braid(config)
        service = RecouplingService(max_workers=config.max_workers, verify=config.verify)
        results = []
        for tree in _trees(config):
            if tree.leaf_count != word.strands:
                raise StrandMismatch(word.strands, tree.leaf_count, "leftassoc")
            outcome = service.left_associate(VirtualBraidedTree.from_word(word, tree))
            results.append({
                "input": format_tree(tree),
                "terms": vector_payload(outcome.vector, config.at_value, config.precision),
                "certified": outcome.certified,
                "uncertified": outcome.uncertified,
                "verified": outcome.verified,
            })
        return {"braid": format_braid(word), "results": results}

    def bracket(self, config: RunConfig) -> Dict[str, Any]:
        word = _braid(config)
        result = BraidRepService().bracket_closure(word, config.normalize)
        return {
            "braid": result.word,
            "strands": result.strands,
            "writhe": result.writhe,
            "normalized": result.normalized,
            "value": scalar_payload(result.value, config.at_value, config.precision),
        }

    def check_relations(self, config: RunConfig) -> Dict[str, Any]:
        strands = _require(config.strands, "--strands")
        if not 2 <= strands <= 5:
            raise CliUsageError("--strands", f"expected 2..5, got {strands}")
        report = BraidRepService(max_workers=config.max_workers).check_relations(strands)
        payload: Dict[str, Any] = report.model_dump(mode="json")
        payload["all_passed"] = report.all_passed
        if config.samples:
            payload["homomorphism"] = self._homomorphism_samples(strands, config)
        return payload

    def _homomorphism_samples(self, strands: int, config: RunConfig) -> List[Dict[str, Any]]:
        rng = random.Random(config.seed)
        samples = []
        for _ in range(config.samples):
            w1 = random_word(strands, rng.randint(0, 4), rng=rng)
            w2 = random_word(strands, rng.randint(0, 4), rng=rng)
            sectors = {}
            for root in (ParticleLabel.P, ParticleLabel.STAR):
                product = matmul(
                    rep_matrix(w1, strands, root, config.max_workers).entries,
                    rep_matrix(w2, strands, root, config.max_workers).entries,
                )
                sectors[root.value] = rep_matrix(w1 + w2, strands, root, config.max_workers).entries == product
            samples.append({
                "w1": format_braid(w1),
                "w2": format_braid(w2),
                "sectors": sectors,
                "passed": all(sectors.values()),
            })
        return samples

    def certify_rules(self, config: RunConfig) -> Dict[str, Any]:
        service = RecouplingService(max_workers=config.max_workers)
        try:
            certificates = service.certify(config.family)
        except ValueError as exc:
            raise CliUsageError("--family", str(exc)) from exc
        named = {key: str(value) for key, value in constants().as_dict().items() if key in ("c1", "c2", "c3", "c4")}
        return {
            "family": config.family,
            "certificates": [
                c.model_dump(mode="json", exclude={"execution_time_seconds"}) for c in certificates
            ],
            "all_certified": all(c.certified for c in certificates),
            "r_matrix": service.r_matrix_report().model_dump(mode="json"),
            "lemmas": [service.lemma_report(name).model_dump(mode="json") for name in LEMMAS],
            "named_coefficients": named,
        }

    def dim(self, config: RunConfig) -> Dict[str, Any]:
        leaves = _require(config.leaves, "--leaves")
        if leaves < 1:
            raise CliUsageError("--leaves", f"expected a positive leaf count, got {leaves}")
        try:
            mode = Mode(config.mode)
        except ValueError as exc:
            raise CliUsageError("--mode", f"unknown mode '{config.mode}'", "classical | virtual") from exc
        counts = {label.value: n for label, n in count_labelings(leaves, mode).items() if n}
        payload: Dict[str, Any] = {
            "leaves": leaves,
            "mode": mode.value,
            "roots": counts,
            "either": sum(counts.values()),
        }
        if mode == Mode.CLASSICAL and leaves >= 3:
            totals = [sum(count_labelings(k, mode).values()) for k in (leaves - 2, leaves - 1)]
            payload["fibonacci_recurrence"] = payload["either"] == totals[0] + totals[1]
        return payload

    def evaluate(self, config: RunConfig) -> Dict[str, Any]:
        text = _require(config.expression, "expression", "constant name or serialized scalar")
        try:
            value = _scalar_from_text(text)
        except (ScalarParseError, json.JSONDecodeError) as exc:
            raise CliUsageError("expression", str(exc), "constant name or serialized scalar") from exc
        return {
            "expression": text,
            "value": scalar_payload(value, config.at_value, config.precision),
        }
