'''The command line front end.'''

import json

import pytest

from kcones import codec, cubic, equiv_linear_subspace, TorusAction
from kcones.cli import (
    EXIT_OK, EXIT_RESOURCE_CAP, EXIT_USAGE, EXIT_VERIFY_FAILED, build_parser,
    main)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestClass:
    def test_text(self, capsys):
        code, out, _ = run(capsys, 'class', 'cubic', 'nodal')
        assert code == EXIT_OK
        assert 'sheaf: 3*H - 3*H^2 ' in out
        assert 'pushforward: 3*H - 2*H^2 ' in out
        assert 'codim/degree: 1 / 3' in out

    def test_json_matches_library(self, capsys):
        code, out, _ = run(capsys, '--json', 'class', 'cubic', 'nodal')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['triple'] == json.loads(codec.dumps(cubic('nodal')))
        assert data['degree_codim']['codim'] == 1

    def test_latex(self, capsys):
        code, out, _ = run(capsys, '--latex', 'class', 'linear', '1', '2')
        assert code == EXIT_OK
        assert 'pushforward: H\n' in out

    def test_unknown_descriptor(self, capsys):
        code, _, err = run(capsys, 'class', 'nope')
        assert code == EXIT_USAGE
        assert err.startswith('error:')


class TestCone:
    def test_mc0(self, capsys):
        code, out, _ = run(capsys, 'cone', '--mc0', 'class', 'hypersurface', '4', '2')
        assert code == EXIT_OK
        assert 'cone: 4*H - 6*H^2 + 3*H^3 ' in out

    def test_mc(self, capsys):
        code, out, _ = run(capsys, '--json', 'cone', '--mc', 'hypersurface', '4', '2')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['smooth_certified'] is True
        assert data['chi_y_base'] == {'num': '-2,2', 'den': '1'}

    def test_csm(self, capsys):
        code, out, _ = run(capsys, '--json', 'cone', '--csm', '[0,1]')
        assert code == EXIT_OK
        assert out.strip() == '{"cone":[0,1,2]}'

    def test_sheaf(self, capsys):
        code, out, _ = run(capsys, 'cone', '--sheaf', '--kpoly', '1-t^4', '--n', '2')
        assert code == EXIT_OK
        assert 'cone: 4*H - 6*H^2 + 4*H^3 ' in out

    def test_class_json(self, capsys):
        base = json.dumps({'n': 2, 'coeffs': [0, 4, -6]})
        code, out, _ = run(capsys, 'cone', '--pushforward', '--class-json', base)
        assert code == EXIT_OK
        assert 'cone: 4*H - 6*H^2 ' in out

    def test_sheaf_needs_kpoly(self, capsys):
        code, _, _ = run(capsys, 'cone', '--sheaf')
        assert code == EXIT_USAGE


class TestHilbert:
    def test_two_skew_lines(self, capsys):
        code, out, _ = run(capsys, '--json', 'hilbert',
                           'x0*x2, x0*x3, x1*x2, x1*x3', '--n', '3', '--J', '4')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['kpoly']['text'] == '1 - 4*t^2 + 4*t^3 - t^4'
        assert data['series'] == [1, 4, 6, 8, 10]
        assert data['hilbert_polynomial']['coeffs'] == ['2', '2']

    def test_generator_cap(self, capsys, monkeypatch):
        monkeypatch.setenv('K_CONE_GEN_CAP', '2')
        code, _, err = run(capsys, 'hilbert', 'x0, x1, x2', '--n', '2')
        assert code == EXIT_RESOURCE_CAP
        assert 'K_CONE_GEN_CAP' in err

    def test_bad_ideal(self, capsys):
        code, _, _ = run(capsys, 'hilbert', 'x9', '--n', '1')
        assert code == EXIT_USAGE


class TestEquivariant:
    def test_linear_subspace(self, capsys):
        code, out, _ = run(capsys, '--json', 'equivariant', 'linear-subspace',
                           '--k', '1', '--n', '2')
        assert code == EXIT_OK
        data = json.loads(out)
        M, R, _ = equiv_linear_subspace(1, TorusAction.diagonal(2))
        assert data['affine'] == json.loads(codec.dumps(M - R))
        assert data['chi_y'] == {'num': '1,-1', 'den': '1'}

    def test_kirwan_of_origin(self, capsys):
        code, out, _ = run(capsys, '--json', 'equivariant', 'kirwan', '--n', '1',
                           '--poly', '(1-t/a1)*(1-t/a2)')
        assert code == EXIT_OK
        assert json.loads(out)['class']['class']['terms'] == []

    def test_cohomology(self, capsys):
        code, out, _ = run(capsys, 'equivariant', 'coho-to-affine', '--n', '1',
                           '--poly', 'a2 - x')
        assert code == EXIT_OK
        assert 'affine: a2' in out
        assert out.startswith('action: ')

    def test_custom_action(self, capsys):
        action = json.dumps({'rank': 1, 'characters': ['a1', 'a1'],
                             'scalar': {'weights': [1], 'q': 1}})
        code, out, _ = run(capsys, 'equivariant', 'to-projective', '--action',
                           action, '--torus-only', '--poly', '1 + y')
        assert code == EXIT_OK
        assert 'mc_T: 1\n' in out

    def test_missing_poly(self, capsys):
        code, _, _ = run(capsys, 'equivariant', 'kirwan', '--n', '1')
        assert code == EXIT_USAGE

    def test_malformed_action(self, capsys):
        code, _, _ = run(capsys, 'equivariant', 'kirwan', '--action', '{',
                         '--poly', '1')
        assert code == EXIT_USAGE


class TestVerify:
    def test_subset(self, capsys):
        code, out, _ = run(capsys, 'verify', 'table1.*')
        assert code == EXIT_OK
        assert out.strip().splitlines()[-1] == '18 passed, 0 failed'

    def test_json(self, capsys):
        code, out, _ = run(capsys, '--json', 'verify', 'chi_y.pn', '--jobs', '2')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['failed'] == 0
        assert data['passed'] == len(data['outcomes']) == 11

    def test_exit_code_constants(self):
        assert (EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_RESOURCE_CAP) == (
            0, 1, 2, 3)


def test_missing_command():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_global_flags():
    args = build_parser().parse_args(['--json', '--latex', '-vv', 'verify'])
    assert (args.json, args.latex, args.verbose) == (True, True, 2)
    with pytest.raises(SystemExit) as info:
        main(['--basis', 't', 'class', 'linear', '1', '2'])
    assert info.value.code == 2
