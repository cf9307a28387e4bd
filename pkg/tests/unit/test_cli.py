"""
Unit tests for the polya-survey command line.
"""

import json

import pytest

pytestmark = pytest.mark.unit


class TestMain:
    """Test suite for cli.main exit codes and output."""

    def test_quad_writes_csv(self, capsys):
        """quad -d -84 should exit 0 and print the documented header."""
        from polya_groups.cli import main
        from polya_groups.types import Commands

        assert main(['quad', '-d', '-84']) == 0

        out = capsys.readouterr().out
        header, row = out.splitlines()[:2]
        assert header.split(',') == Commands.columns('quad')
        assert row.startswith('-84,')

    def test_non_fundamental_is_input_error(self, capsys):
        """A non-fundamental discriminant should exit 2 with nothing on stdout."""
        from polya_groups.cli import main

        assert main(['quad', '-d', '45']) == 2
        assert capsys.readouterr().out == ""

    def test_bound_below_minimum(self):
        """survey -B 2 should fail validation with exit 2."""
        from polya_groups.cli import main

        assert main(['survey', '-B', '2']) == 2

    def test_pmax_above_range(self):
        """cyclotomic --pmax 101 should exit 2."""
        from polya_groups.cli import main

        assert main(['cyclotomic', '--pmax', '101']) == 2

    def test_missing_required_argument(self):
        """argparse should exit on a missing required option."""
        from polya_groups.cli import main

        with pytest.raises(SystemExit):
            main(['survey'])

    def test_sieve_json(self, capsys):
        """--format json should print one JSON document."""
        from polya_groups.cli import main

        assert main(['sieve', '-N', '10', '--family', 'n2p1', '--format', 'json']) == 0

        payload = json.loads(capsys.readouterr().out)
        assert payload['command'] == 'sieve'
        assert len(payload['rows']) == 10
        assert payload['rows'][6]['witness_p'] == 5

    def test_out_file(self, tmp_path, capsys):
        """--out should write the file and leave stdout empty."""
        from polya_groups.cli import main

        out = tmp_path / "tables" / "survey.csv"

        assert main(['survey', '-B', '50', '--out', str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert out.read_text(encoding='utf-8').startswith('d,')

    def test_disagreement_exits_3(self, monkeypatch, capsys):
        """A failed class-number cross-check should exit 3 and print nothing."""
        from polya_groups.api import survey
        from polya_groups.cli import main

        monkeypatch.setattr(survey, 'imaginary_class_number', lambda F: 0)

        assert main(['survey', '-B', '10']) == 3
        assert capsys.readouterr().out == ""

    @pytest.mark.parametrize("error", ["ArithmeticError", "PrecisionLoss", "ZeroDivisionError"])
    def test_arithmetic_failure_exits_3(self, monkeypatch, capsys, error):
        """Any ArithmeticError from a computation should exit 3, not 1."""
        import builtins
        from polya_groups import errors
        from polya_groups.api import survey
        from polya_groups.cli import main

        exc = getattr(errors, error, None) or getattr(builtins, error)

        def fail(d):
            raise exc(f"cannot compute h({d})")

        monkeypatch.setattr(survey, 'class_number_forms', fail)

        assert main(['survey', '-B', '10']) == 3
        assert capsys.readouterr().out == ""

    def test_env_workers(self, monkeypatch, capsys):
        """POLYA_WORKERS should be picked up when --workers is absent."""
        from polya_groups.cli import main

        monkeypatch.setenv('POLYA_WORKERS', '2')

        assert main(['survey', '-B', '30']) == 0
        assert capsys.readouterr().out.startswith('d,')


class TestBuildParser:
    """Test suite for build_parser."""

    def test_subcommands(self):
        """Every catalog command should be a subcommand."""
        from polya_groups.cli import build_parser

        args = build_parser().parse_args(['families', '-N', '20', '--family', '4n2m1'])

        assert (args.command, args.n_max, args.family, args.fmt) == ('families', 20, '4n2m1', 'csv')

    def test_epilog_documents_columns(self):
        """The help epilog should list the table columns."""
        from polya_groups.cli import build_parser

        parser = build_parser()
        sub = parser._subparsers._group_actions[0].choices['sieve']

        assert 'witness_p' in sub.format_help()
