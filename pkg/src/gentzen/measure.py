"""
Size measurements for generated proofs
"""

from dataclasses import dataclass, asdict
from math import ceil
from typing import Callable, Dict, Iterable, List
import logging
import time
import sys
import os

import numpy as np
import pandas as pd

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import CALIBRATION_N
from syntax import RApp, Var, JUMP_NAIVE, R_ABSTRACT, length
from kernel import HilbertProof, Accepted, check, get_theory, proof_length
from gentzen.generator import GenerationError, gen_ti, gen_feps_total

logger = logging.getLogger(__name__)

GENERATORS: Dict[str, Callable[[int], HilbertProof]] = {
    'ti': gen_ti,
    'feps': gen_feps_total,
}

GENERATOR_THEORY = {
    'ti': 'pa-o',
    'feps': 'pa-o-f',
}


@dataclass(frozen=True)
class SizeRow:
    n: int
    proof_length: int
    lines: int
    check_seconds: float
    naive_length: int


@dataclass
class SizeReport:
    kind: str
    counting_mode: str
    rows: List[SizeRow]
    degree: float
    constant: int
    bound_holds: bool

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(r) for r in self.rows],
                            columns=['n', 'proof_length', 'lines', 'check_seconds', 'naive_length'])


def naive_iterate_length(n: int, mode: str = 'normative') -> int:
    """
    Length of the n-th two-occurrence jump iterate, by its recurrence

    Each step replaces both R occurrences of J by the previous iterate.
    """
    body = length(JUMP_NAIVE.body, mode)
    occurrences = JUMP_NAIVE.body.r_count
    slot = length(RApp(Var('d', 0)), mode)
    value = length(R_ABSTRACT.body, mode)
    for _ in range(n):
        value = body - occurrences * slot + occurrences * value
    return value


def checked(kind: str, n: int) -> HilbertProof:
    """Generate and check; rejection raises GenerationError"""
    proof = GENERATORS[kind](n)
    verdict = check(proof, get_theory(GENERATOR_THEORY[kind]))
    if not isinstance(verdict, Accepted):
        logger.warning("%s proof for n=%d rejected at line %d: %s",
                       kind, n, verdict.line, verdict.reason)
        raise GenerationError(f"{kind} proof for n={n} rejected at line "
                              f"{verdict.line}: {verdict.reason}")
    return proof


def fit_degree(ns: Iterable[int], lengths: Iterable[int]) -> float:
    """Least-squares slope of log L against log n over n >= 1"""
    pairs = [(n, l) for n, l in zip(ns, lengths) if n >= 1 and l > 0]
    if len(pairs) < 2:
        return float('nan')
    x = np.log([n for n, _ in pairs])
    y = np.log([l for _, l in pairs])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def size_report(ns: Iterable[int], kind: str = 'ti', mode: str = 'normative') -> SizeReport:
    """
    Generate, re-check and measure proofs over a range of n

    Args:
        ns: values of n
        kind: 'ti' or 'feps'
        mode: counting mode

    Returns:
        SizeReport with the fitted degree and the frozen constant C = ceil(L(5) / 5)
    """
    rows = []
    for n in ns:
        start = time.perf_counter()
        proof = checked(kind, n)
        elapsed = time.perf_counter() - start
        rows.append(SizeRow(n, proof_length(proof, mode), len(proof), elapsed,
                            naive_iterate_length(n, mode)))
        logger.info("%s n=%d: %d symbols, %d lines", kind, n, rows[-1].proof_length, len(proof))

    calibration = next((r.proof_length for r in rows if r.n == CALIBRATION_N), None)
    if calibration is None:
        calibration = proof_length(checked(kind, CALIBRATION_N), mode)
    constant = ceil(calibration / CALIBRATION_N)
    bound_holds = all(r.proof_length <= constant * r.n ** 2 + constant for r in rows)
    degree = fit_degree([r.n for r in rows], [r.proof_length for r in rows])
    return SizeReport(kind, mode, rows, degree, constant, bound_holds)
