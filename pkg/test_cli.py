"""
Tests for the workbench command line
"""

import json
import sys
import os

import pytest
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from sqlalchemy.pool import StaticPool

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from scripts.workbench import main, EXIT_OK, EXIT_FAILED, EXIT_USAGE
from data import database
from infinitary import write_term, fixture_suite


@pytest.fixture
def memory_db(monkeypatch):
    """Point the workbench at a private in-memory database"""
    engine = create_engine('sqlite://', connect_args={'check_same_thread': False},
                           poolclass=StaticPool)
    monkeypatch.setattr(database, 'engine', engine)
    monkeypatch.setattr(database, 'SessionLocal', sessionmaker(bind=engine))
    return engine


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# ============================================================================
# ORDINAL AND FGH
# ============================================================================

def test_fundseq_text(capsys):
    code, out = run(capsys, 'ordinal', 'fundseq', 'eps0', '3', '--format', 'text')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == 'w^(w^(w^(w)))'
    assert '# counting_convention=tokens-v1' in lines


def test_compare_json_embeds_the_configuration(capsys):
    code, out = run(capsys, 'ordinal', 'compare', 'w', 'w + 1', '--profile', 'micro')
    report = json.loads(out)
    assert code == EXIT_OK
    assert report['result'] == 'Less'
    assert report['config']['profile'] == 'micro'
    assert report['config']['counting_convention'] == 'tokens-v1'


def test_stepdown_exit_codes(capsys):
    code, out = run(capsys, 'ordinal', 'stepdown', 'w', '3', '2', '--format', 'text')
    assert code == EXIT_OK
    assert out.splitlines()[0] == 'Reached w > 3'
    code, out = run(capsys, 'ordinal', 'stepdown', 'w', '4', '2', '--format', 'text')
    assert code == EXIT_FAILED
    assert out.splitlines()[0] == 'NotOnPath 3'


def test_fgh_eval_text(capsys):
    code, out = run(capsys, 'fgh', 'eval', '2', '2', '--format', 'text')
    assert code == EXIT_OK
    assert out.splitlines()[0] == 'Converged 23'


def test_fgh_step_cap_from_the_command_line(capsys):
    code, out = run(capsys, 'fgh', 'eval', '2', '10', '--max-steps', '1')
    assert code == EXIT_OK
    assert json.loads(out)['outcome'] == 'DivergedSteps'


def test_report_goes_to_out_file(capsys, tmp_path):
    target = tmp_path / 'report.json'
    code, out = run(capsys, 'ordinal', 'parse', 'w*2 + 1', '--out', str(target))
    assert code == EXIT_OK
    assert out == ''
    assert json.loads(target.read_text())['canonical'] == 'w*2 + 1'


@pytest.mark.parametrize('argv', [
    ['ordinal'],
    ['ordinal', 'parse', 'w^('],
    ['ordinal', 'compare', 'eps0', 'w', '--format', 'xml'],
    ['fgh', 'eval', '2', 'two'],
    ['consistency-search', '--theory', 'zfc', '--max-symbols', '5'],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE


# ============================================================================
# PROOFS
# ============================================================================

def test_generated_proof_round_trips_through_the_checker(capsys, tmp_path):
    target = tmp_path / 'ti2.hpf'
    code, out = run(capsys, 'gen-ti', '2', '--out', str(target))
    report = json.loads(out)
    assert code == EXIT_OK
    assert report['accepted'] is True
    assert report['theory'] == 'pa-o'
    assert target.read_text().startswith('1 | ')

    code, out = run(capsys, 'check-proof', str(target), '--theory', 'pa-o')
    assert code == EXIT_OK
    assert json.loads(out)['verdict'] == 'Accepted'

    code, out = run(capsys, 'check-proof', str(target), '--theory', 'pure-logic')
    assert code == EXIT_FAILED
    assert json.loads(out)['verdict'] == 'Rejected'


def test_generated_proof_goes_to_stdout_without_out(capsys):
    code, out = run(capsys, 'gen-ti', '0')
    assert code == EXIT_OK
    assert out.startswith('1 | ')


def test_missing_proof_file(capsys, tmp_path):
    assert main(['check-proof', str(tmp_path / 'absent.hpf')]) == EXIT_USAGE


def test_malformed_proof_file(capsys, tmp_path):
    target = tmp_path / 'bad.hpf'
    target.write_text('1 | 0 = 0\n')
    assert main(['check-proof', str(target)]) == EXIT_USAGE


def test_save_stores_a_proof_record(capsys, tmp_path, memory_db):
    code, out = run(capsys, 'gen-ti', '1', '--out', str(tmp_path / 'p.hpf'), '--save')
    assert code == EXIT_OK
    session = database.get_session()
    try:
        record = database.latest_proof(session, 'ti', 1)
        assert record is not None
        assert record.sha256 == json.loads(out)['sha256']
    finally:
        session.close()


def test_consistency_search_exit_codes(capsys):
    code, out = run(capsys, 'consistency-search', '--theory', 'pa-o-f-false',
                    '--max-symbols', '7', '--profile', 'desk')
    assert code == EXIT_FAILED
    assert json.loads(out)['verdict'] == 'Refutation'

    code, out = run(capsys, 'consistency-search', '--theory', 'pa-o-f-false',
                    '--max-symbols', '6', '--profile', 'desk')
    assert code == EXIT_OK
    assert json.loads(out)['summary'] == 'NoRefutationUpTo 6'


def test_consistency_search_respects_the_profile_cap(capsys):
    assert main(['consistency-search', '--theory', 'pure-logic', '--max-symbols', '11',
                 '--profile', 'micro']) == EXIT_USAGE


def test_measure_csv_and_save(capsys, memory_db):
    code, out = run(capsys, 'measure', '--from', '1', '--to', '2', '--format', 'csv', '--save')
    assert code == EXIT_OK
    lines = out.splitlines()
    header = next(l for l in lines if not l.startswith('#'))
    assert header.split(',')[:2] == ['n', 'proof_length']
    assert any(l.startswith('# bound_holds=True') for l in lines)

    session = database.get_session()
    try:
        rows = session.query(database.SizeMeasurement).all()
        assert sorted(r.n for r in rows) == [1, 2]
    finally:
        session.close()


# ============================================================================
# REDUCTION
# ============================================================================

def test_reduce_list(capsys):
    code, out = run(capsys, 'reduce', '--list')
    names = json.loads(out)['fixtures']
    assert code == EXIT_OK
    assert 'worked-chain' in names and 'feps-cut-true' in names


def test_reduce_json_lines(capsys):
    code, out = run(capsys, 'reduce', '--fixture', 'n-chain-3')
    lines = out.splitlines()
    assert code == EXIT_OK
    assert len(lines) == 6
    assert json.loads(lines[0])['rule'] == 'rule-n'
    final = json.loads(lines[-1])
    assert final['verdict'] == 'SequentTrue'
    assert final['certificates_ok'] is True


def test_reduce_local_check(capsys):
    code, _ = run(capsys, 'reduce', '--fixture', 'worked-chain', '--check-only')
    assert code == EXIT_OK
    code, out = run(capsys, 'reduce', '--fixture', 'worked-chain-mutant', '--format', 'text')
    assert code == EXIT_FAILED
    assert out.startswith('Fail at []')


def test_reduce_needs_a_sigma_sequent(capsys):
    assert main(['reduce', '--fixture', 'worked-chain']) == EXIT_USAGE


def test_reduce_term_file_csv(capsys, tmp_path):
    fixture = next(f for f in fixture_suite() if f.name == 'cut-n-high')
    target = tmp_path / 'cut.sx'
    target.write_text(write_term(fixture.term))
    code, out = run(capsys, 'reduce', '--term', str(target), '--mu', 'w',
                    '--hierarchy', 'G', '--format', 'csv')
    assert code == EXIT_OK
    data = [l for l in out.splitlines() if not l.startswith('#')]
    assert 'rule' in data[0].split(',')
    assert len(data) == 3
