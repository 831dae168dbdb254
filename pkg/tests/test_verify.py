'''The replayed worked examples.'''

import pytest

from kcones import Config, VerifyOutcome, run_verification
from kcones.verify import (
    HILBERT_CASES, ROUNDTRIP_CASES, Case, all_cases, matches, run_case, select)


@pytest.fixture(scope='module')
def cases():
    return all_cases()


class TestRegistry:
    def test_ids_are_unique_and_sorted(self, cases):
        ids = [c.case_id for c in cases]
        assert ids == sorted(set(ids))

    def test_groups(self, cases):
        assert len(select(cases, 'table1.*')) == 18
        assert len(select(cases, 'transfer.roundtrip')) == ROUNDTRIP_CASES
        assert len(select(cases, 'hilbert.bruteforce')) == HILBERT_CASES

    def test_deterministic(self):
        first = [c.note for c in select(all_cases(), 'transfer.roundtrip')]
        second = [c.note for c in select(all_cases(), 'transfer.roundtrip')]
        assert first == second

    @pytest.mark.parametrize('pattern,expected', [
        (None, True),
        ('', False),
        ('table1', True),
        ('table1.*', True),
        ('table1.nodal', True),
        ('*.sheaf', True),
        ('table', False),
        ('table1.nodal.sheaf.x', False),
    ])
    def test_matches(self, pattern, expected):
        assert matches('table1.nodal.sheaf', pattern) is expected


class TestRun:
    def test_cubic_table(self):
        outcomes = run_verification('table1.*')
        assert len(outcomes) == 18
        assert all(o.passed for o in outcomes)

    def test_full_suite(self):
        failed = [o for o in run_verification() if not o.passed]
        assert failed == []

    def test_failure_is_reported(self):
        outcome = run_case(Case('broken', lambda: 1 / 0))
        assert not outcome.passed
        assert outcome.computed.startswith('ZeroDivisionError')

    def test_mismatch(self):
        outcome = run_case(Case('mismatch', lambda: (1, 2), note='n'))
        assert outcome == VerifyOutcome('mismatch', '1', '2', False, 'n')

    def test_parallel_keeps_order(self):
        serial = run_verification('chi_y')
        parallel = run_verification('chi_y', Config(verify_jobs=4))
        assert parallel == serial
        assert [o.case_id for o in parallel] == sorted(o.case_id for o in parallel)

    def test_empty_selection(self):
        assert run_verification('') == []

    def test_outcome_json(self):
        outcome = run_verification('chi_y.pn.2')[0]
        assert set(outcome.to_json()) == {'id', 'expected', 'computed',
                                          'passed', 'note'}
        assert outcome.to_json()['passed'] is True
