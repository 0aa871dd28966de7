"""Tests for the management commands."""
import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from presentation.tests.helpers import preset_source

NULLPLANE = 'presets/nullplane.hopf'
KGALILEI = 'presets/kgalilei.hopf'


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


class SourceFileMixin:
    def write_source(self, text):
        handle = tempfile.NamedTemporaryFile('w', suffix='.hopf', delete=False, encoding='utf-8')
        with handle:
            handle.write(text)
        self.addCleanup(os.unlink, handle.name)
        return handle.name


class VerifyCommandTests(SourceFileMixin, SimpleTestCase):
    def test_presets_pass(self):
        for path in (NULLPLANE, KGALILEI):
            with self.subTest(path=path):
                output = run('verify', path, degree=2, zorder=1)
                self.assertNotIn('fail', output)
                self.assertIn('axioms pass', output)

    def test_json_report(self):
        entries = json.loads(run('verify', NULLPLANE, degree=2, zorder=1, format='json'))
        self.assertTrue(entries)
        self.assertTrue(all(entry['status'] == 'pass' for entry in entries))

    def test_seeded_properties(self):
        output = run('verify', KGALILEI, degree=2, zorder=1, seed=3, cases=2)
        self.assertIn('property:', output)
        self.assertEqual(output, run('verify', KGALILEI, degree=2, zorder=1, seed=3, cases=2))

    def test_malformed_file(self):
        path = self.write_source('algebra U {\n  params: z\n}\n')
        with self.assertRaises(CommandError) as caught:
            run('verify', path, degree=2, zorder=1)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertIn('line', str(caught.exception))

    def test_mutated_antipode_fails(self):
        source = preset_source('nullplane').replace('Pp -> -Pp;', 'Pp -> Pp;')
        path = self.write_source(source)
        with self.assertRaises(CommandError) as caught:
            run('verify', path, degree=2, zorder=1)
        self.assertEqual(caught.exception.returncode, 1)

    def test_missing_file(self):
        with self.assertRaises(CommandError) as caught:
            run('verify', 'presets/missing.hopf', degree=2, zorder=1)
        self.assertEqual(caught.exception.returncode, 2)


class ActAndPairCommandTests(SimpleTestCase):
    def test_boost_on_minus_coordinate(self):
        self.assertEqual(run('act', NULLPLANE, 'K', 'am', degree=2, zorder=1).strip(), '2*am^1')

    def test_translation_lowers(self):
        self.assertEqual(run('act', NULLPLANE, 'Pm', 'am', degree=2, zorder=1).strip(), '1')

    def test_json_output(self):
        data = json.loads(run('act', KGALILEI, 'H', 't', degree=2, zorder=1, format='json'))
        self.assertEqual(data, {'kind': 'left-coregular', 'image': '1'})

    def test_algebra_mismatch(self):
        with self.assertRaises(CommandError) as caught:
            run('act', NULLPLANE, 'K', 'K', degree=2, zorder=1)
        self.assertEqual(caught.exception.returncode, 2)

    def test_pair(self):
        self.assertEqual(run('pair', NULLPLANE, 'K', 'phi', degree=2, zorder=1).strip(), '1')
        self.assertEqual(run('pair', NULLPLANE, 'K^2', 'phi^2', degree=2, zorder=1).strip(), '2')


class InduceCommandTests(SimpleTestCase):
    def test_galilei_boost_is_derivative(self):
        data = json.loads(
            run('induce', KGALILEI, char='P=1,H=0', side='left', degree=3, zorder=1, format='json')
        )
        self.assertEqual(len(data['carrier']), 4)
        boost = data['generators']['K']['entries']
        self.assertEqual([boost[q - 1][q] for q in (1, 2, 3)], ['1', '2', '3'])

    def test_text_output(self):
        output = run('induce', NULLPLANE, char='K=0', side='right', degree=1, zorder=1)
        self.assertIn('chi(K=0) (right side), dimension 3', output)
        self.assertIn('K:', output)

    def test_unknown_generator(self):
        with self.assertRaises(CommandError) as caught:
            run('induce', NULLPLANE, char='Q=1', degree=2, zorder=1)
        self.assertEqual(caught.exception.returncode, 2)


class LimitAndNormalOrderCommandTests(SourceFileMixin, SimpleTestCase):
    def test_nullplane_limit(self):
        output = run('limit', NULLPLANE, degree=2, zorder=1)
        self.assertIn('[K, Pp] = 2*Pp;', output)
        self.assertIn('Pm -> 1 (x) Pm + Pm (x) 1;', output)

    def test_galilei_limit(self):
        self.assertIn('[t, x] = 0;', run('limit', KGALILEI, degree=2, zorder=1))

    def test_pole_at_zero(self):
        source = preset_source('nullplane').replace('[K, Pm] = -2*Pm;', '[K, Pm] = -2*Pm + (1/z)*Pm;')
        with self.assertRaises(CommandError) as caught:
            run('limit', self.write_source(source), degree=2, zorder=1)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertIn('pole', str(caught.exception))

    def test_normal_order(self):
        output = run('normal_order', NULLPLANE, 'Pm', 'K', degree=2, zorder=1)
        self.assertEqual(output.strip(), '2*Pm^1 + K^1*Pm^1')

    def test_word_outside_both_algebras(self):
        with self.assertRaises(CommandError) as caught:
            run('normal_order', NULLPLANE, 'K', 'phi', degree=2, zorder=1)
        self.assertEqual(caught.exception.returncode, 2)
