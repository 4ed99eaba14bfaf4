import io
import json
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

from main import EXIT_ERROR, EXIT_OK, RunConfig, build_parser, main, parse_labels, parse_poly, parse_vector
from modules.errors import UsageError


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestParsers(unittest.TestCase):
    def test_parse_vector(self):
        self.assertEqual(parse_vector('1,-2'), (1, -2))
        with self.assertRaises(UsageError):
            parse_vector('1,x')

    def test_parse_labels(self):
        self.assertEqual(parse_labels('formal'), 'formal')
        self.assertEqual(parse_labels('O1=1/2,O2=0'), {'O1': Fraction(1, 2), 'O2': Fraction(0)})
        with self.assertRaises(UsageError):
            parse_labels('O1=abc')

    def test_parse_poly(self):
        f = parse_poly('1@1,0;-1/2@0,0', 'A2')
        self.assertEqual(len(f.terms), 2)
        with self.assertRaises(UsageError):
            parse_poly('1@1', 'A2')

    def test_run_config(self):
        with self.assertRaises(UsageError):
            RunConfig('A2', J=[3]).validate()
        with self.assertRaises(UsageError):
            RunConfig('A2', J=[1, 2], epsilon=[1]).validate()
        with self.assertRaises(UsageError):
            RunConfig('A1', trunc_order=-1).validate()
        config = RunConfig('C1v-C1', label_mode={'O1': Fraction(1)}).validate()
        k = config.labelling()
        self.assertEqual(k['O1'].unit, 1)
        self.assertEqual(k['O2'].label('O2'), 1)

    def test_negative_labels_rejected(self):
        with self.assertRaises(UsageError):
            RunConfig('A1', label_mode={'O1': Fraction(-1, 2)}).validate()
        RunConfig('A1', label_mode={'O1': Fraction(0)}).validate()


class TestCommands(unittest.TestCase):
    def test_e_poly_zero(self):
        code, out, _ = run_cli('e-poly', '--type', 'A1', '--lambda', '0')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), '1')

    def test_e_poly_json(self):
        code, out, _ = run_cli('e-poly', '--type', 'A1', '--lambda', '1', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(out)
        self.assertEqual(payload['lambda'], [1])
        self.assertEqual(payload['text'], 'e[1]')

    def test_p_poly_leading(self):
        code, out, _ = run_cli('p-poly', '--type', 'A2', '--J', '2', '--lambda', '1,0', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(out)
        self.assertEqual(payload['leading'], {'exponent': [1, 0], 'coeff': '1'})

    def test_catalog(self):
        code, out, _ = run_cli('catalog', '--type', 'C1v-C1', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['type'], 'C1v-C1')

    def test_usage_error_exit_code(self):
        code, _, err = run_cli('p-poly', '--type', 'A2', '--J', '5', '--lambda', '1,0')
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn('UsageError', err)

    def test_domain_error_exit_code(self):
        code, _, err = run_cli('p-poly', '--type', 'A2', '--J', '2', '--lambda', '0,-1')
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn('NotJDominantError', err)

    def test_negative_labels_exit_code(self):
        code, _, err = run_cli('e-poly', '--type', 'A1', '--lambda', '0', '--labels', 'O1=-1/2')
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn('UsageError', err)

    def test_argparse_rejects_unknown_type(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                build_parser().parse_args(['e-poly', '--type', 'G2', '--lambda', '0'])
        self.assertEqual(ctx.exception.code, 2)

    def test_gamma_spherical(self):
        code, out, _ = run_cli('gamma', '--type', 'A1', '--f', '1@0', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)['spherical'])


if __name__ == '__main__':
    unittest.main()
