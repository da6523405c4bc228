"""
MacWilliams 可容许性探测

寻找两个 (P,π)-重量枚举相同、但对偶码的 (P̃,π)-重量枚举不同的线性码；
找到即说明 P 不容许 MacWilliams 恒等式。找不到不能证明容许性。
"""
import itertools
import logging
import random
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterator, List, Optional, Tuple

from ..config import config_manager, resolve_budget
from .block_space import BlockStructure, CodeVector
from .error_handler import check_budget
from .linear_code import LinearCode, dual_code, span_code, space_chunks, space_size, vectors_from_array, \
    weight_enumerator
from .pomset import Pomset, dual_pomset
from .weight_enumerator import WeightEnumerator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProbeWitness:
    """枚举相同而对偶枚举不同的一对码"""
    first: LinearCode
    second: LinearCode
    enumerator: WeightEnumerator
    first_dual: WeightEnumerator
    second_dual: WeightEnumerator


@dataclass
class ProbeReport:
    trials: int
    seed: Optional[int]
    exhaustive: bool
    is_hierarchical: bool
    codes_examined: int = 0
    distinct_codes: int = 0
    distinct_enumerators: int = 0
    witness: Optional[ProbeWitness] = None
    notes: List[str] = field(default_factory=list)

    @property
    def found_witness(self) -> bool:
        return self.witness is not None


def _sampled_generator_sets(structure: BlockStructure, trials: int, seed: int) -> Iterator[List[CodeVector]]:
    rng = random.Random(seed)
    m, n = structure.m, structure.n
    for _ in range(trials):
        count = rng.randint(1, n)
        yield [CodeVector(tuple(rng.randrange(m) for _ in range(n)), m) for _ in range(count)]


def _exhaustive_generator_sets(structure: BlockStructure, budget: int) -> Iterator[List[CodeVector]]:
    """Z_m^n 的子模至多由 n 个元素生成，枚举所有 n 元可重组合"""
    n = structure.n
    vectors: List[CodeVector] = []
    for chunk in space_chunks(structure, budget):
        vectors.extend(vectors_from_array(chunk, structure.m))
    check_budget(comb(len(vectors) + n - 1, n), budget, what="生成元组合")
    for generators in itertools.combinations_with_replacement(vectors, n):
        yield list(generators)


def macwilliams_probe(pomset: Pomset, structure: BlockStructure, trials: Optional[int] = None,
                      seed: Optional[int] = None, exhaustive: bool = False,
                      budget: Optional[int] = None) -> ProbeReport:
    probe_config = config_manager.get_probe_config()
    trials = probe_config.trials if trials is None else trials
    seed = probe_config.seed if seed is None else seed
    budget = resolve_budget(budget)

    report = ProbeReport(trials=trials, seed=None if exhaustive else seed, exhaustive=exhaustive,
                         is_hierarchical=pomset.is_hierarchical())
    if not exhaustive and trials == 0:
        report.notes.append("trials = 0，未采样")
        return report

    check_budget(space_size(structure), budget, what=f"Z_{structure.m}^{structure.n} 穷举")
    dual = dual_pomset(pomset)
    source = (_exhaustive_generator_sets(structure, budget) if exhaustive
              else _sampled_generator_sets(structure, trials, seed))

    seen = set()
    by_enumerator: Dict[Tuple[int, ...], Tuple[LinearCode, WeightEnumerator]] = {}
    for generators in source:
        report.codes_examined += 1
        code = span_code(generators, structure)
        if code.words in seen:
            continue
        seen.add(code.words)
        enumerator = weight_enumerator(code, pomset, structure)
        dual_enumerator = weight_enumerator(dual_code(code, budget), dual, structure)
        previous = by_enumerator.get(enumerator.coeffs)
        if previous is None:
            by_enumerator[enumerator.coeffs] = (code, dual_enumerator)
            continue
        other, other_dual = previous
        if other_dual != dual_enumerator:
            report.witness = ProbeWitness(other, code, enumerator, other_dual, dual_enumerator)
            break

    report.distinct_codes = len(seen)
    report.distinct_enumerators = len(by_enumerator)
    if report.witness:
        logger.info(f"探测找到反例: W={report.witness.enumerator.coeffs}")
    else:
        logger.info(f"探测完成: 检查 {report.distinct_codes} 个不同的码，未找到反例")
    return report
