"""
Tests for the proof generators and size measurements
"""

import json
import math
import subprocess
import sys
import os

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from syntax import (
    Var, Tower, Eq, Imp, And, Exists, Add, R_ABSTRACT, ONE_T,
    numeral, build_ti, build_prog, feps_total, feps_down_abstract, alpha_equal, length,
    naive_jump_iterate,
)
from kernel import AxiomInstance, Accepted, TacticError, check, get_theory, proof_length
from gentzen import (
    jump_template, base_proof, lemma_template, digest, template_digests,
    numeral_succ_proof, gen_ti, gen_feps_total, GenerationError,
    size_report, naive_iterate_length, fit_degree, checked,
)
from gentzen import measure
from gentzen.lemmas import (
    PROG, PROG_JUMP, jump_progressive, feps_progressive,
    theta_elim, theta_witness, theta_from_false,
)

A1 = Var('a', 1)


# ============================================================================
# BUILDING BLOCKS
# ============================================================================

@pytest.mark.parametrize('m', list(range(12)) + [100, 1023, 1024])
def test_numeral_successor_proofs(m):
    proof = numeral_succ_proof(m)
    assert proof.conclusion == Eq(Add(numeral(m), ONE_T), numeral(m + 1))
    assert isinstance(check(proof, get_theory('pa-r')), Accepted)


def test_numeral_successor_size_is_logarithmic():
    sizes = {m: proof_length(numeral_succ_proof(m)) for m in range(1, 513)}
    c = sizes[511] / (511).bit_length()
    assert all(size <= c * m.bit_length() for m, size in sizes.items())


def _schema_ids(proof):
    return {line.justification.schema_id for line in proof.lines
            if isinstance(line.justification, AxiomInstance)}


def test_templates_are_accepted():
    assert isinstance(check(jump_template(), get_theory('pa-o')), Accepted)
    assert isinstance(check(base_proof(), get_theory('pa-o')), Accepted)
    assert isinstance(check(lemma_template(), get_theory('pa-o-f')), Accepted)


def test_jump_template_derives_progressiveness():
    ids = _schema_ids(jump_template())
    assert 'O_JUMP' not in ids and 'O_JUMP_BASE' not in ids
    assert {'O_DECOMP', 'O_MESH_ZERO', 'O_MESH_SUCC', 'PA_INDUCTION'} <= ids


def test_lemma_template_uses_the_defining_clauses():
    ids = _schema_ids(lemma_template())
    assert 'F_PROG' not in ids
    assert {'F_ZERO', 'F_SUCC', 'F_LIM', 'F_ITER_ZERO', 'F_ITER_SUCC', 'F_EPS', 'O_CASES'} <= ids


@pytest.mark.parametrize('lemma, theory', [
    (jump_progressive, 'pa-o'),
    (feps_progressive, 'pa-o-f'),
])
def test_progressiveness_lemmas_are_closed_proofs(lemma, theory):
    assert isinstance(check(lemma(), get_theory(theory)), Accepted)


def test_jump_progressiveness_conclusion():
    assert alpha_equal(jump_progressive().conclusion, Imp(PROG, PROG_JUMP))
    assert alpha_equal(feps_progressive().conclusion, build_prog(feps_down_abstract()))


def test_theta_lemmas():
    s, t = Var('e', 0), Var('d', 1)
    assert isinstance(check(theta_elim(s, t), get_theory('pure-logic')), Accepted)
    assert isinstance(check(theta_from_false(s, t), get_theory('pa-r')), Accepted)
    with pytest.raises(TacticError):
        theta_witness(s, t, True, False)


def test_base_proof_concludes_ti_at_tower_zero():
    assert alpha_equal(base_proof().conclusion, build_ti(Tower(numeral(0)), R_ABSTRACT))


def test_template_digests_are_stable():
    first = template_digests()
    assert set(first) == {'jump_template', 'base_proof', 'lemma_template'}
    assert all(len(h) == 64 for h in first.values())


@pytest.mark.parametrize('seed', ['0', '1', '12345'])
def test_template_digests_do_not_depend_on_the_process(seed):
    src = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src')
    script = ('import json, sys; sys.path.insert(0, sys.argv[1]); '
              'from gentzen import template_digests; print(json.dumps(template_digests()))')
    env = dict(os.environ, PYTHONHASHSEED=seed)
    out = subprocess.run([sys.executable, '-c', script, src], env=env,
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out) == template_digests()


# ============================================================================
# GENERATORS
# ============================================================================

@pytest.mark.parametrize('n', range(5))
def test_gen_ti_is_accepted(n):
    proof = gen_ti(n)
    top = Tower(numeral(n))
    expected = Exists(A1, And(Eq(top, A1), build_ti(A1, R_ABSTRACT)))
    assert alpha_equal(proof.conclusion, expected)
    assert isinstance(check(proof, get_theory('pa-o')), Accepted)


@pytest.mark.parametrize('n', range(3))
def test_gen_feps_total_is_accepted(n):
    proof = gen_feps_total(n)
    assert alpha_equal(proof.conclusion, feps_total(numeral(n)))
    assert isinstance(check(proof, get_theory('pa-o-f')), Accepted)


def test_feps_proof_needs_the_graph_pack():
    assert not isinstance(check(gen_feps_total(0), get_theory('pa-o')), Accepted)


def test_generation_is_deterministic():
    assert digest(gen_ti(2)) == digest(gen_ti(2))


def test_negative_n_is_rejected():
    with pytest.raises(ValueError):
        gen_ti(-1)
    with pytest.raises(ValueError):
        gen_feps_total(-1)


def test_checked_raises_on_rejection(monkeypatch):
    monkeypatch.setitem(measure.GENERATOR_THEORY, 'ti', 'pure-logic')
    with pytest.raises(GenerationError):
        checked('ti', 0)


# ============================================================================
# MEASUREMENT
# ============================================================================

def test_size_bound_holds():
    report = size_report(range(1, 6), 'ti')
    lengths = [r.proof_length for r in report.rows]
    assert lengths == sorted(lengths)
    assert report.constant == math.ceil(lengths[-1] / 5)
    assert report.bound_holds
    assert report.degree < 3

    frame = report.to_frame()
    assert list(frame.columns) == ['n', 'proof_length', 'lines', 'check_seconds', 'naive_length']
    assert frame['n'].tolist() == [1, 2, 3, 4, 5]


@pytest.fixture(scope='module')
def ti_report():
    return size_report(range(31), 'ti')


def test_gen_ti_accepted_up_to_thirty(ti_report):
    # size_report re-checks every proof and raises on rejection
    assert [r.n for r in ti_report.rows] == list(range(31))
    assert ti_report.bound_holds
    assert all(r.proof_length <= ti_report.constant * r.n ** 2 + ti_report.constant
               for r in ti_report.rows)


def test_gen_ti_degree_is_at_most_cubic(ti_report):
    assert ti_report.degree <= 3


def test_gen_feps_accepted_up_to_twenty():
    report = size_report(range(21), 'feps')
    assert [r.n for r in report.rows] == list(range(21))
    lengths = [r.proof_length for r in report.rows]
    assert lengths == sorted(lengths)


def test_raw_counting_is_never_shorter():
    assert proof_length(gen_ti(1), 'raw') >= proof_length(gen_ti(1))


@pytest.mark.parametrize('n', range(17))
def test_naive_iterates_are_exponential(n):
    assert naive_iterate_length(n) >= 2 ** n


@pytest.mark.parametrize('n', range(5))
def test_naive_recurrence_matches_the_formula(n):
    assert naive_iterate_length(n) == length(naive_jump_iterate(n))


def test_fit_degree():
    assert fit_degree([1, 2, 4, 8], [3, 12, 48, 192]) == pytest.approx(2.0)
    assert math.isnan(fit_degree([0, 1], [5, 7]))
